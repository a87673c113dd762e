"""Exact arithmetic on integral lattices.

A lattice is a free Z-module with an integer Gram matrix; vectors are
coordinate rows in the lattice basis. Everything here is exact: signatures
come from rational symmetric reduction, determinants from fraction-free
elimination, discriminant groups from Smith normal forms with unimodular
transforms. No floating point is used anywhere in this module.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import enumeration, exactmat
from .errors import (
    Degenerate,
    DegenerateRestriction,
    DependentColumns,
    IndefiniteLattice,
    K3KitError,
    NoGlueFound,
    NonPositiveD,
    NonSymmetric,
    NotInDual,
    NotIsotropic,
    OddDegree,
    SearchLimitExceeded,
    UnknownName,
    ZeroTwist,
)

DEFAULT_RANK_LIMIT = 10
DEFAULT_NORM_LIMIT = 16

SEARCH_LIMIT_ENV = "K3KIT_SEARCH_LIMIT"


@dataclass(frozen=True)
class IntegralLattice:
    """A nondegenerate integral lattice given by its Gram matrix."""

    rank: int
    gram: tuple
    name: str | None = None

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        if len(g) != self.rank or any(len(row) != self.rank for row in g):
            raise NonSymmetric(f"gram matrix must be {self.rank}x{self.rank}")
        if not exactmat.is_symmetric([list(r) for r in g]):
            raise NonSymmetric("gram matrix is not symmetric")
        if self.rank > 0 and self.det == 0:
            raise Degenerate("gram matrix has determinant zero")

    @cached_property
    def det(self):
        return exactmat.bareiss_det([list(r) for r in self.gram])

    @cached_property
    def signature(self):
        """(n_plus, n_minus) by exact rational symmetric reduction."""
        pos, neg, zero = exactmat.signature_symmetric([list(r) for r in self.gram])
        assert zero == 0
        return (pos, neg)

    @cached_property
    def is_even(self):
        """Recomputed from the diagonal, never trusted from input."""
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def pairing(self, v, w):
        """v . w for rational coordinate rows v, w."""
        gv = exactmat.vec_mat([Fraction(x) for x in v], [list(r) for r in self.gram])
        return sum(Fraction(a) * b for a, b in zip(w, gv))

    def norm(self, v):
        return self.pairing(v, v)

    def __repr__(self):
        label = self.name or "lattice"
        return f"<{label} rank {self.rank} det {self.det}>"


def make_lattice(gram, name=None):
    """Validate a square integer matrix into an IntegralLattice."""
    rows = [list(r) for r in gram]
    if any(len(r) != len(rows) for r in rows):
        raise NonSymmetric("gram matrix must be square")
    return IntegralLattice(rank=len(rows), gram=tuple(tuple(r) for r in rows), name=name)


def _e8_gram():
    # Cartan matrix of E8 (Bourbaki node order: chain 1-3-4-5-6-7-8, node 2
    # attached to node 4); even, unimodular, positive definite
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    return g


def _nikulin_gram():
    # eight orthogonal (-2)-vectors N1..N8 and their half-sum; basis
    # (N1..N7, half-sum), so N8 = 2*halfsum - N1 - ... - N7 stays integral
    g = [[0] * 8 for _ in range(8)]
    for i in range(7):
        g[i][i] = -2
        g[i][7] = g[7][i] = -1
    g[7][7] = -4
    return g


def standard_lattice(name):
    """One of the named lattices: U, E8, or NIKULIN."""
    key = name.upper()
    if key == "U":
        return make_lattice([[0, 1], [1, 0]], name="U")
    if key == "E8":
        return make_lattice(_e8_gram(), name="E8")
    if key == "NIKULIN":
        return make_lattice(_nikulin_gram(), name="Nikulin")
    raise UnknownName(f"unknown standard lattice {name!r}")


def direct_sum(l1, l2):
    """Orthogonal direct sum; determinants multiply, signatures add."""
    n1, n2 = l1.rank, l2.rank
    g = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            g[i][j] = l1.gram[i][j]
    for i in range(n2):
        for j in range(n2):
            g[n1 + i][n1 + j] = l2.gram[i][j]
    return make_lattice(g)


def twist(lat, n):
    """Same module with the pairing scaled by n; det scales by n^rank."""
    if n == 0:
        raise ZeroTwist("twist multiplier must be nonzero")
    g = [[n * x for x in row] for row in lat.gram]
    name = f"{lat.name}({n})" if lat.name else None
    return make_lattice(g, name=name)


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite group dual/lattice with its quadratic-form values.

    elementary_divisors: the invariant factors > 1, in divisibility order.
    generators: lifts of group generators, rational rows in the lattice
    basis with coordinates reduced into [0, 1).
    qvalues: generator norms reduced into [0, 2); canonical mod 2 only when
    the lattice is even.
    """

    elementary_divisors: tuple
    generators: tuple
    qvalues: tuple

    @property
    def order(self):
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out


def _reduce_mod1(coords):
    return tuple(Fraction(c) - (Fraction(c).numerator // Fraction(c).denominator) for c in coords)


def discriminant_group(lat):
    """Elementary divisors and generator lifts of the discriminant group.

    Generators come from the Smith normal form U G V = D of the Gram
    matrix: the quotient of the dual by the lattice is Z^n / G Z^n, whose
    i-th generator is column i of U^{-1} in dual-basis coordinates;
    multiplying by G^{-1} converts the lift to lattice-basis coordinates.
    """
    n = lat.rank
    if n == 0:
        return DiscriminantGroup((), (), ())
    g = [list(r) for r in lat.gram]
    d, u, _ = exactmat.smith_normal_form(g)
    u_inv = exactmat.invert_rational(u)
    g_inv = exactmat.invert_rational(g)
    divisors = []
    gens = []
    qvals = []
    for i in range(n):
        di = d[i][i]
        if di <= 1:
            continue
        dual_coords = [u_inv[r][i] for r in range(n)]
        lift = exactmat.mat_vec(g_inv, dual_coords)
        lift = _reduce_mod1(lift)
        divisors.append(di)
        gens.append(lift)
        qvals.append(lat.norm(lift) % 2)
    return DiscriminantGroup(tuple(divisors), tuple(gens), tuple(qvals))


@dataclass(frozen=True)
class GlueVector:
    """A nontrivial dual class, as rational coordinates in the lattice basis.

    Coordinates are reduced into [0, 1); order is the least n with
    n * coords integral. Construction rejects integral input.
    """

    coords: tuple
    order: int = field(init=False)

    def __post_init__(self):
        reduced = _reduce_mod1(self.coords)
        object.__setattr__(self, "coords", reduced)
        n = lcm(*(c.denominator for c in reduced)) if reduced else 1
        object.__setattr__(self, "order", n)
        if n == 1:
            raise NotInDual("glue vector is integral: trivial class")


def overlattice(lat, glue, require_even=True):
    """Finite-index extension of `lat` by a glue vector.

    Returns (extended lattice, embedding) where the embedding matrix rows
    are the old basis vectors written in the new basis; its determinant
    (up to sign) is the index, equal to the glue order.

    With require_even (the default) a glue class of odd norm raises
    NotIsotropic, matching the even-overlattice construction; passing
    require_even=False returns the odd extension instead.
    """
    g = [list(r) for r in lat.gram]
    coords = [Fraction(c) for c in glue.coords]
    pairings = exactmat.vec_mat(coords, g)
    if any(p.denominator != 1 for p in pairings):
        raise NotInDual("glue vector does not pair integrally with the lattice")
    n = glue.order
    rows = [[n if i == j else 0 for j in range(lat.rank)] for i in range(lat.rank)]
    rows.append([int(c * n) for c in coords])
    h = exactmat.hnf_rows(rows)
    assert len(h) == lat.rank
    basis = [[Fraction(x, n) for x in row] for row in h]
    gram_m = exactmat.gram_of_rows(basis, g)
    if any(x.denominator != 1 for row in gram_m for x in row):
        raise NotIsotropic("extension is not an integral lattice")
    gram_m = [[int(x) for x in row] for row in gram_m]
    if require_even and lat.is_even and any(gram_m[i][i] % 2 for i in range(lat.rank)):
        raise NotIsotropic("glue class has odd norm: extension is not even")
    # old basis in new coordinates: rows of the inverse basis matrix
    emb = exactmat.invert_rational(basis)
    assert all(x.denominator == 1 for row in emb for x in row)
    emb = tuple(tuple(int(x) for x in row) for row in emb)
    m = make_lattice(gram_m)
    index = abs(exactmat.bareiss_det([list(r) for r in emb]))
    assert index == n
    return m, emb


def lambda_d(d):
    """Rank-9 lattice: a degree-2d polarization class plus E8 twisted by -2."""
    if d < 1:
        raise NonPositiveD("degree parameter must be >= 1")
    e8m2 = twist(standard_lattice("E8"), -2)
    pol = make_lattice([[2 * d]])
    out = direct_sum(pol, e8m2)
    return make_lattice([list(r) for r in out.gram], name=f"Lambda_{d}")


def lambda_tilde_d(d, with_embedding=False):
    """The even index-2 extension with the twisted-E8 factor primitive.

    Only defined for even d. The glue class is found by exhaustive search
    over discriminant-group elements in lexicographic coordinate order:
    the first order-2 isotropic class meeting both summands nontrivially
    wins, which makes the construction deterministic.
    """
    if d < 1:
        raise NonPositiveD("degree parameter must be >= 1")
    if d % 2 != 0:
        raise OddDegree("d must be even")
    base = lambda_d(d)
    disc = discriminant_group(base)
    glue = None
    for coeffs in _lex_tuples([int(x) for x in disc.elementary_divisors]):
        if not any(coeffs):
            continue
        coords = [Fraction(0)] * base.rank
        for c, gen in zip(coeffs, disc.generators):
            for k in range(base.rank):
                coords[k] += c * gen[k]
        coords = _reduce_mod1(coords)
        if all(c == 0 for c in coords):
            continue
        if any((2 * c).denominator != 1 for c in coords):
            continue  # not an order-2 class
        if coords[0] == 0 or all(c == 0 for c in coords[1:]):
            continue  # must mix the polarization and the E8 block
        if base.norm(coords) % 2 != 0:
            continue  # not isotropic: extension would be odd
        glue = GlueVector(tuple(coords))
        break
    if glue is None:
        raise NoGlueFound(f"no admissible glue class for d={d}")
    ext, emb = overlattice(base, glue)
    ext = make_lattice([list(r) for r in ext.gram], name=f"LambdaTilde_{d}")
    e8_rows = [list(emb[i]) for i in range(1, 9)]
    assert is_primitive(e8_rows, ext)
    if with_embedding:
        return ext, emb
    return ext


def _lex_tuples(bounds):
    """All coefficient tuples (c_1..c_k), 0 <= c_i < bound_i, lexicographic."""
    if not bounds:
        yield ()
        return
    for head in range(bounds[0]):
        for tail in _lex_tuples(bounds[1:]):
            yield (head,) + tail


def is_primitive(sub_basis, ambient):
    """True iff the quotient by the span of the given rows is torsion-free.

    sub_basis rows are vectors in ambient coordinates; they must be
    linearly independent. Primitivity means every elementary divisor of
    the matrix is 1.
    """
    rows = [list(map(int, r)) for r in sub_basis]
    if exactmat.rank_rational(rows) != len(rows):
        raise DependentColumns("sublattice basis vectors are dependent")
    divs = exactmat.elementary_divisors(rows)
    return all(x == 1 for x in divs)


def _search_limits(max_rank, max_norm):
    env = os.environ.get(SEARCH_LIMIT_ENV)
    if env:
        parts = [p.strip() for p in env.split(",")]
        if len(parts) == 1:
            max_norm = int(parts[0])
        else:
            max_rank, max_norm = int(parts[0]), int(parts[1])
    return max_rank, max_norm


def short_vectors(lat, norm, max_rank=DEFAULT_RANK_LIMIT, max_norm=DEFAULT_NORM_LIMIT,
                  force_pure=False):
    """Exact count of vectors v with v.v == norm in a definite lattice.

    Bounds default to rank <= 10 and |norm| <= 16 and may be overridden by
    the arguments or the K3KIT_SEARCH_LIMIT environment variable
    ("norm" or "rank,norm"). Exceeding them is an error, not silence.
    """
    max_rank, max_norm = _search_limits(max_rank, max_norm)
    if lat.rank > max_rank:
        raise SearchLimitExceeded(f"rank {lat.rank} exceeds search limit {max_rank}")
    if abs(norm) > max_norm:
        raise SearchLimitExceeded(f"|norm| {abs(norm)} exceeds search limit {max_norm}")
    if lat.rank == 0:
        return 0
    pos, neg = lat.signature
    if pos == lat.rank:
        gram, target = [list(r) for r in lat.gram], norm
    elif neg == lat.rank:
        gram, target = [[-x for x in row] for row in lat.gram], -norm
    else:
        raise IndefiniteLattice("short-vector counting needs a definite lattice")
    if target <= 0:
        return 0
    if lat.is_even and target % 2 != 0:
        return 0
    return enumeration.count_positive_definite(gram, target, force_pure=force_pure)


def orthogonal_complement(sub_basis, ambient):
    """Saturated orthogonal complement of the span of the given rows.

    The rows must span a sublattice on which the pairing is nondegenerate.
    Returns the complement with its induced Gram matrix.
    """
    rows = [list(map(int, r)) for r in sub_basis]
    g = [list(r) for r in ambient.gram]
    sub_gram = exactmat.gram_of_rows(rows, g)
    if exactmat.rank_rational(sub_gram) != len(rows):
        raise DegenerateRestriction("pairing restricted to the sublattice is degenerate")
    pair_matrix = exactmat.mat_mul(rows, g)
    kernel = exactmat.int_kernel(pair_matrix)
    comp_gram = exactmat.gram_of_rows(kernel, g)
    return make_lattice(comp_gram)


def lattice_to_json(lat):
    out = {"rank": lat.rank, "gram": [list(r) for r in lat.gram]}
    if lat.name:
        out["name"] = lat.name
    return out


def lattice_from_json(data):
    gram = [[int(x) for x in row] for row in data["gram"]]
    lat = make_lattice(gram, name=data.get("name"))
    if lat.rank != int(data["rank"]):
        raise K3KitError(f"rank field {data['rank']} does not match gram size {lat.rank}")
    return lat
