"""Exact short-vector counting, pure Python reference implementation.

Counts integer vectors v with v G v^T equal to a prescribed value, for a
positive-definite integer Gram matrix G. Enumeration is branch-and-bound
on the rational Cholesky form Q(x) = sum_i q_i (x_i + sum_{j>i} u_ij x_j)^2
with all interval bounds computed in exact arithmetic (integer square
roots of Fraction radicands), so the count is exact by construction.
"""

from fractions import Fraction
from math import floor, isqrt


def cholesky_rational(gram):
    """Exact Cholesky-style decomposition of a positive-definite form.

    Returns (q, u) with Q(x) = sum_i q[i] * (x_i + sum_{j>i} u[i][j] x_j)^2.
    Raises ValueError if a pivot fails to be positive.
    """
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    q = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if m[i][i] <= 0:
            raise ValueError("form is not positive definite")
        q[i] = m[i][i]
        for j in range(i + 1, n):
            u[i][j] = m[i][j] / q[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                m[k][l] -= u[i][k] * q[i] * u[i][l]
                m[l][k] = m[k][l]
    return q, u


def _floor_sqrt(f):
    """floor(sqrt(f)) for a nonnegative Fraction f."""
    if f < 0:
        raise ValueError("negative radicand")
    return isqrt(f.numerator * f.denominator) // f.denominator


def count_by_norm(gram, target):
    """Number of nonzero integer vectors v with v G v^T == target.

    G must be positive definite (ints or Fractions). A nonpositive target
    yields 0: in a definite lattice only the zero vector has norm zero.
    """
    n = len(gram)
    if n == 0 or target <= 0:
        return 0
    q, u = cholesky_rational(gram)
    target = Fraction(target)
    x = [0] * n

    def search(level, budget):
        c = Fraction(0)
        for j in range(level + 1, n):
            if x[j]:
                c += u[level][j] * x[j]
        r = _floor_sqrt(budget / q[level])
        base = floor(-c)
        cnt = 0
        # interval padded by one on each side; the exact term test below
        # discards the padding, so no admissible integer is lost
        for xi in range(base - r - 1, base + r + 2):
            term = q[level] * (xi + c) ** 2
            if term > budget:
                continue
            if level == 0:
                if term == budget:
                    cnt += 1
            else:
                x[level] = xi
                cnt += search(level - 1, budget - term)
        x[level] = 0
        return cnt

    return search(n - 1, target)
