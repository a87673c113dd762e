"""Short-vector counting with a compiled fast path and a pure fallback.

The compiled kernel (k3kit._enum_core, built from Cython) is selected at
import time when present; otherwise the exact pure-Python counter is used.
Both return exact counts. The compiled path is only taken when 64-bit
overflow is impossible for the given Gram matrix and target; anything
larger silently falls back to the pure path.
"""

from . import _enum_pure

try:
    from . import _enum_core
except ImportError:
    _enum_core = None

HAVE_COMPILED = _enum_core is not None

# conservative guards: with |x_i| <= COORD_LIMIT, |G_ij| <= ENTRY_LIMIT and
# rank <= RANK_LIMIT, |v G v^T| <= RANK_LIMIT^2 * ENTRY_LIMIT * COORD_LIMIT^2
# stays far below 2^63
_RANK_LIMIT = 16
_ENTRY_LIMIT = 10**6
_COORD_LIMIT = 10**4


def backend_name(gram=None, target=None):
    """Which backend the counter would use for this input.

    Accepts a definite Gram matrix of either sign; negative definite input
    is normalized the same way the counting entry points do.
    """
    if not HAVE_COMPILED:
        return "pure"
    if gram is None:
        return "compiled"
    if gram and gram[0][0] < 0:
        gram = [[-x for x in row] for row in gram]
        target = -(target or 0)
    return "compiled" if _compiled_safe(gram, target or 0) else "pure"


def _compiled_safe(gram, target):
    n = len(gram)
    if n == 0 or n > _RANK_LIMIT:
        return False
    if abs(target) > _ENTRY_LIMIT:
        return False
    if any(abs(x) > _ENTRY_LIMIT for row in gram for x in row):
        return False
    # coordinate ranges are bounded by sqrt(target / min q_i); bound them
    # through the Cholesky diagonal
    try:
        q, _ = _enum_pure.cholesky_rational(gram)
    except ValueError:
        return False
    for qi in q:
        if qi <= 0:
            return False
        bound = _enum_pure._floor_sqrt(max(target, 0) / qi) + 2
        if bound > _COORD_LIMIT:
            return False
    return True


def count_positive_definite(gram, target, force_pure=False):
    """Count nonzero integer v with v G v^T == target, G positive definite."""
    if force_pure or not HAVE_COMPILED or not _compiled_safe(gram, target):
        return _enum_pure.count_by_norm(gram, target)
    q, u = _enum_pure.cholesky_rational(gram)
    return _enum_core.count_by_norm([list(map(int, row)) for row in gram], int(target), q, u)
