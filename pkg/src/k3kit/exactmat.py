"""Exact linear algebra over the integers and rationals.

Matrices are lists of row lists; vectors are plain lists. Entries are
Python ints or fractions.Fraction. No floating point anywhere: determinants
use fraction-free Bareiss elimination, signatures use symmetric rational
reduction, and kernels/normal forms work over the integers with unimodular
transformations.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v, a):
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))] if a else []


def is_symmetric(a):
    n = len(a)
    if any(len(row) != n for row in a):
        return False
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def bareiss_det(a):
    """Determinant of a square integer matrix, fraction-free."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_fraction(a):
    """Determinant of a square rational matrix by Gaussian elimination."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det


def signature_symmetric(a):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Symmetric Gaussian reduction: congruence transformations preserve the
    inertia, so the signs of the produced pivots are the signature.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    pos = neg = zero = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish; create one from an
            # off-diagonal entry, or conclude the rest is a zero block
            pair = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += n - k
                break
            i, j = pair
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            piv = i
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for row in m:
                row[k], row[piv] = row[piv], row[k]
        p = m[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / p
                # row operation plus the matching column operation: a
                # congruence transform, so inertia is preserved
                for c in range(k, n):
                    m[i][c] -= f * m[k][c]
                for r in range(k, n):
                    m[r][i] -= f * m[r][k]
        k += 1
    return pos, neg, zero


def smith_normal_form(a):
    """Smith normal form with transforms: returns (d, u, v), u*a*v = d.

    d is diagonal with nonnegative entries in divisibility order; u and v
    are unimodular.
    """
    a = [list(map(int, row)) for row in a]
    m = len(a)
    n = len(a[0]) if a else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(mat, i, j):
        mat[i], mat[j] = mat[j], mat[i]

    def swap_cols(mat, i, j):
        for r in mat:
            r[i], r[j] = r[j], r[i]

    def addmul_row(mat, dst, src, c):
        mat[dst] = [x + c * y for x, y in zip(mat[dst], mat[src])]

    def addmul_col(mat, dst, src, c):
        for r in mat:
            r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            swap_rows(a, t, i)
            swap_rows(u, t, i)
        if j != t:
            swap_cols(a, t, j)
            swap_cols(v, t, j)
        while True:
            clean = True
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(a, i, t, -q)
                    addmul_row(u, i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(a, t, i)
                        swap_rows(u, t, i)
                        clean = False
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(a, j, t, -q)
                    addmul_col(v, j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(a, t, j)
                        swap_cols(v, t, j)
                        clean = False
            if clean:
                break
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # fold the offending row into row t so the pivot shrinks
            addmul_row(a, t, bad, 1)
            addmul_row(u, t, bad, 1)
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def elementary_divisors(a):
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    d, _, _ = smith_normal_form(a)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return out


def int_kernel(a):
    """Basis rows of the saturated integer kernel {x : a @ x = 0}.

    Saturated because the basis comes from unimodular columns of the SNF
    transform, so the quotient by the kernel is torsion-free.
    """
    if not a:
        return []
    n = len(a[0])
    d, _, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(len(d), n)) if d[i][i] != 0)
    return [[v[i][j] for i in range(n)] for j in range(rank, n)]


def hnf_rows(a):
    """Row-style Hermite normal form basis of the row space of a.

    Returns the nonzero rows: echelon with positive pivots and entries
    above each pivot reduced into [0, pivot). Column sweep: at column c
    every remaining row has zeros left of c; rows with a nonzero entry at
    c are merged into a single pivot row by unimodular 2x2 combinations.
    """
    rows = [list(map(int, r)) for r in a if any(r)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    rest = rows
    for c in range(n):
        lead = [r for r in rest if r[c] != 0]
        rest = [r for r in rest if r[c] == 0]
        while len(lead) > 1:
            top, nxt = lead[0], lead[1]
            g, s, t = _xgcd(top[c], nxt[c])
            tc, nc = top[c] // g, nxt[c] // g
            pivot_row = [s * x + t * y for x, y in zip(top, nxt)]
            cleared = [-nc * x + tc * y for x, y in zip(top, nxt)]
            lead[0] = pivot_row
            if any(cleared):
                rest.append(cleared)
            del lead[1]
        if lead:
            basis.append(lead[0])
    # normalize: positive pivots, then reduce above each pivot in increasing
    # pivot order (later reductions never disturb earlier pivot columns)
    for i in range(len(basis)):
        j = next(k for k, x in enumerate(basis[i]) if x != 0)
        if basis[i][j] < 0:
            basis[i] = [-x for x in basis[i]]
    for i in range(len(basis)):
        j = next(k for k, x in enumerate(basis[i]) if x != 0)
        for r in range(i):
            if basis[r][j] != 0:
                q = basis[r][j] // basis[i][j]
                basis[r] = [x - q * y for x, y in zip(basis[r], basis[i])]
    return basis


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def solve_rational(a, rhs):
    """Solve a @ x = rhs over the rationals; None if inconsistent."""
    n = len(a)
    m = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][m] != 0:
            return None
    x = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        x[c] = aug[i][m]
    return x


def invert_rational(a):
    """Inverse of a square nonsingular rational matrix."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def rank_rational(a):
    if not a:
        return 0
    n, m = len(a), len(a[0])
    mtx = [[Fraction(x) for x in row] for row in a]
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if mtx[i][c] != 0), None)
        if piv is None:
            continue
        mtx[r], mtx[piv] = mtx[piv], mtx[r]
        inv = 1 / mtx[r][c]
        mtx[r] = [x * inv for x in mtx[r]]
        for i in range(n):
            if i != r and mtx[i][c] != 0:
                f = mtx[i][c]
                mtx[i] = [x - f * y for x, y in zip(mtx[i], mtx[r])]
        r += 1
        if r == n:
            break
    return r


def gram_of_rows(basis, gram):
    """Gram matrix of the rows of `basis` under the pairing `gram`."""
    gb = mat_mul(basis, gram)
    return mat_mul(gb, transpose(basis))
