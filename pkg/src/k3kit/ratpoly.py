"""Univariate polynomials over the rationals as coefficient tuples.

A polynomial c0 + c1*t + ... + cn*t^n is the tuple (c0, c1, ..., cn) of
Fractions with cn != 0; the zero polynomial is the empty tuple. All
arithmetic is exact. Irreducible factorization over Q is delegated to
sympy; everything else is implemented directly on the tuples.
"""

from fractions import Fraction

import sympy

_T = sympy.Symbol("t")


def poly(coeffs):
    """Normalize a coefficient sequence (ascending) to canonical form."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p):
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def is_zero(p):
    return not p


def add(p, q):
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def scale(p, c):
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def divmod_poly(p, q):
    """Quotient and remainder with deg r < deg q; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    d = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - d, 0)
    while len(r) - 1 >= d and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < d:
            break
        c = r[-1] / lead
        k = len(r) - 1 - d
        quot[k] = c
        for i in range(len(q)):
            r[k + i] -= c * q[i]
        r.pop()
    return poly(quot), poly(r)


def monic(p):
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)


def gcd(p, q):
    """Monic greatest common divisor."""
    a, b = p, q
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p):
    return poly([i * c for i, c in enumerate(p)][1:])


def is_squarefree(p):
    """True iff p is nonzero with no repeated roots."""
    if not p:
        return False
    if len(p) == 1:
        return True
    return degree(gcd(p, derivative(p))) == 0


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def valuation(p, q):
    """Multiplicity of the irreducible factor q in p; None if p == 0."""
    if not p:
        return None
    v = 0
    while True:
        quot, rem = divmod_poly(p, q)
        if rem:
            return v
        p = quot
        v += 1


def reverse_weighted(p, weight):
    """Coefficients of s^weight * p(1/s); requires deg p <= weight."""
    if degree(p) > weight:
        raise ValueError("degree exceeds homogenization weight")
    out = [Fraction(0)] * (weight + 1)
    for i, c in enumerate(p):
        out[weight - i] = c
    return poly(out)


def resultant(p, q):
    """Resultant via the Sylvester matrix; zero iff p, q share a root."""
    from .exactmat import det_fraction

    m, n = degree(p), degree(q)
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0:
        return p[0] ** n
    if n == 0:
        return q[0] ** m
    size = m + n
    rows = []
    pc = list(reversed(p))
    qc = list(reversed(q))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return det_fraction(rows)


def irreducible_factors(p):
    """Monic irreducible factors of p over Q with multiplicities.

    Deterministic order: by degree, then by coefficient tuple. The constant
    content is dropped.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)], _T, domain="QQ")
    _, factors = sp.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append((monic(poly(cs)), int(mult)))
    out.sort(key=lambda fm: (degree(fm[0]), fm[0]))
    return out


def to_strings(p):
    """Coefficient list as canonical 'p/q' strings (ascending)."""
    return [f"{c.numerator}/{c.denominator}" for c in p]


def from_strings(items):
    """Parse a coefficient list of ints or 'p/q' strings (ascending)."""
    out = []
    for x in items:
        if isinstance(x, str):
            out.append(Fraction(x))
        elif isinstance(x, int):
            out.append(Fraction(x))
        else:
            raise ValueError(f"coefficient must be int or 'p/q' string, got {x!r}")
    return poly(out)


def format_poly(p, var="t"):
    """Human-readable rendering, highest degree first."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            pw = var if i == 1 else f"{var}^{i}"
            term = f"{mag}{pw}"
            if c < 0:
                term = "-" + term
        if parts and not term.startswith("-"):
            parts.append("+ " + term)
        elif parts:
            parts.append("- " + term[1:])
        else:
            parts.append(term)
    return " ".join(parts)
