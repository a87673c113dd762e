# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled short-vector counting kernel.

Same branch-and-bound as the pure reference, but interval bounds come from
a double-precision Cholesky with a one-integer safety pad on each side;
every candidate leaf is re-checked with exact 64-bit integer arithmetic
against the original Gram matrix, so the count stays exact. Callers are
responsible for rejecting inputs large enough to overflow 64-bit products
(see k3kit.enumeration for the guards).
"""

from libc.math cimport sqrt
from libc.stdlib cimport malloc, free


cdef struct Ctx:
    int n
    double *q        # Cholesky diagonal
    double *u        # Cholesky off-diagonal, row-major n*n
    long long *g     # original Gram, row-major n*n
    long long target
    long long *x     # current partial vector


cdef long long _exact_norm(Ctx *ctx) nogil:
    cdef int i, j, n = ctx.n
    cdef long long s = 0
    for i in range(n):
        if ctx.x[i] != 0:
            for j in range(n):
                s += ctx.x[i] * ctx.g[i * n + j] * ctx.x[j]
    return s


cdef long long _search(Ctx *ctx, int level, double budget) nogil:
    cdef int j, n = ctx.n
    cdef double c = 0.0, term, r
    cdef long long xi, lo, hi, cnt = 0
    for j in range(level + 1, n):
        if ctx.x[j] != 0:
            c += ctx.u[level * n + j] * ctx.x[j]
    if budget < -1e-9:
        return 0
    r = sqrt(budget / ctx.q[level]) if budget > 0 else 0.0
    lo = <long long>((-c - r) - 1.0)
    hi = <long long>((-c + r) + 1.0)
    for xi in range(lo, hi + 1):
        term = ctx.q[level] * (xi + c) * (xi + c)
        if term > budget + 1e-6:
            continue
        ctx.x[level] = xi
        if level == 0:
            if _exact_norm(ctx) == ctx.target:
                cnt += 1
        else:
            cnt += _search(ctx, level - 1, budget - term)
    ctx.x[level] = 0
    return cnt


def count_by_norm(gram, long long target, q, u):
    """Count nonzero integer v with v G v^T == target (G positive definite).

    `q` and `u` are the exact rational Cholesky data computed by the pure
    module, converted here to doubles for bound estimation only.
    """
    cdef int n = len(gram)
    cdef int i, j
    if n == 0 or target <= 0:
        return 0
    cdef Ctx ctx
    ctx.n = n
    ctx.target = target
    ctx.q = <double *>malloc(n * sizeof(double))
    ctx.u = <double *>malloc(n * n * sizeof(double))
    ctx.g = <long long *>malloc(n * n * sizeof(long long))
    ctx.x = <long long *>malloc(n * sizeof(long long))
    if not (ctx.q and ctx.u and ctx.g and ctx.x):
        free(ctx.q); free(ctx.u); free(ctx.g); free(ctx.x)
        raise MemoryError()
    try:
        for i in range(n):
            ctx.q[i] = float(q[i])
            ctx.x[i] = 0
            for j in range(n):
                ctx.u[i * n + j] = float(u[i][j])
                ctx.g[i * n + j] = gram[i][j]
        # pad the budget so float rounding never prunes an exact solution
        return _search(&ctx, n - 1, target + 1e-6)
    finally:
        free(ctx.q)
        free(ctx.u)
        free(ctx.g)
        free(ctx.x)
