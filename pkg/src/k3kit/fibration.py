"""Elliptic surfaces y^2 = x(x^2 + a(t)x + b(t)) over the rational line.

With deg a <= 4 and deg b <= 8 this Weierstrass shape describes an
elliptic K3 surface with a visible 2-torsion section at x = y = 0.
The module classifies singular fibers exactly (places are monic
irreducible polynomials over Q, counted with degree weights), builds the
rank-10 Neron-Severi lattice of the generic member in the basis
(sigma, F, N1..N7, Nhat), and computes the translation involution's
action together with its invariant/anti-invariant splitting.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exactmat, ratpoly
from .errors import (
    DegreeExceeded,
    ETooSmall,
    IdenticallySingular,
    NonMinimalUnresolvable,
)
from .lattice import make_lattice

A_DEGREE_BOUND = 4
B_DEGREE_BOUND = 8

# homogenization weights at infinity: a, b are sections of O(4), O(8) on
# the base line, so c4, c6, delta have weights 8, 12, 24
_W_C4, _W_C6, _W_DELTA = 8, 12, 24


@dataclass(frozen=True)
class WeierstrassModel:
    """Coefficient data (a, b) with the derived invariants cached.

    c4 = 16 a^2 - 48 b, c6 = -64 a^3 + 288 a b, delta = 16 b^2 (a^2 - 4b),
    satisfying c4^3 - c6^2 = 1728 delta identically.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", ratpoly.poly(self.a))
        object.__setattr__(self, "b", ratpoly.poly(self.b))
        if ratpoly.degree(self.a) > A_DEGREE_BOUND:
            raise DegreeExceeded(f"deg a = {ratpoly.degree(self.a)} exceeds {A_DEGREE_BOUND}")
        if ratpoly.degree(self.b) > B_DEGREE_BOUND:
            raise DegreeExceeded(f"deg b = {ratpoly.degree(self.b)} exceeds {B_DEGREE_BOUND}")
        if not self.delta:
            raise IdenticallySingular("discriminant vanishes identically")

    @cached_property
    def c4(self):
        a, b = self.a, self.b
        return ratpoly.sub(ratpoly.scale(ratpoly.mul(a, a), 16), ratpoly.scale(b, 48))

    @cached_property
    def c6(self):
        a, b = self.a, self.b
        a3 = ratpoly.mul(ratpoly.mul(a, a), a)
        return ratpoly.add(ratpoly.scale(a3, -64), ratpoly.scale(ratpoly.mul(a, b), 288))

    @cached_property
    def delta(self):
        a, b = self.a, self.b
        quad = ratpoly.sub(ratpoly.mul(a, a), ratpoly.scale(b, 4))
        return ratpoly.scale(ratpoly.mul(ratpoly.mul(b, b), quad), 16)


def make_model(a_coeffs, b_coeffs):
    """Build a model from ascending coefficient lists (ints, Fractions, or 'p/q')."""
    return WeierstrassModel(a=_parse_coeffs(a_coeffs), b=_parse_coeffs(b_coeffs))


def _parse_coeffs(coeffs):
    out = []
    for c in coeffs:
        if isinstance(c, float):
            raise ValueError("coefficients must be exact: int, Fraction, or 'p/q' string")
        out.append(Fraction(c))
    return tuple(out)


@dataclass(frozen=True)
class Place:
    """A closed point of the base line: a monic irreducible polynomial, or infinity."""

    poly: tuple | None  # None encodes the place at infinity

    @property
    def is_infinity(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else ratpoly.degree(self.poly)

    def __str__(self):
        return "inf" if self.poly is None else ratpoly.format_poly(self.poly)


INFINITY = Place(poly=None)


@dataclass(frozen=True)
class FiberReport:
    """Classification data of one fiber.

    Valuations are the minimal ones used by the classification table; a
    value of None means the corresponding invariant vanishes identically
    (infinite valuation). degree_weight is the residue degree of the
    place, so degree-weighted sums count geometric fibers.
    """

    place: Place
    kodaira: str
    v_c4: int | None
    v_c6: int | None
    v_delta: int
    m_v: int
    euler: int
    degree_weight: int


def _vge(v, bound):
    return v is None or v >= bound


def _classify_valuations(v4, v6, vd):
    """(kodaira symbol, components, euler) from minimal valuations."""
    if vd == 0:
        return "SMOOTH", 1, 0
    if v4 == 0:
        n = vd
        return f"I{n}", max(n, 1), n
    if vd == 2:
        return "II", 1, 2
    if vd == 3:
        return "III", 2, 3
    if vd == 4:
        return "IV", 3, 4
    if vd == 6:
        return "I0*", 5, 6
    if vd >= 7 and v4 == 2 and v6 == 3:
        n = vd - 6
        return f"I{n}*", n + 5, n + 6
    if vd == 8:
        return "IV*", 7, 8
    if vd == 9:
        return "III*", 8, 9
    if vd == 10:
        return "II*", 9, 10
    raise NonMinimalUnresolvable(f"valuation triple ({v4}, {v6}, {vd}) not in the table")


def _minimal_valuations(v4, v6, vd):
    while _vge(v4, 4) and _vge(v6, 6) and vd >= 12:
        v4 = None if v4 is None else v4 - 4
        v6 = None if v6 is None else v6 - 6
        vd -= 12
    return v4, v6, vd


_S = ratpoly.poly([0, 1])  # the uniformizer at infinity after inversion


def _valuations_at(model, place):
    if place.is_infinity:
        c4 = ratpoly.reverse_weighted(model.c4, _W_C4)
        c6 = ratpoly.reverse_weighted(model.c6, _W_C6)
        dl = ratpoly.reverse_weighted(model.delta, _W_DELTA)
        q = _S
    else:
        c4, c6, dl = model.c4, model.c6, model.delta
        q = place.poly
    return (ratpoly.valuation(c4, q), ratpoly.valuation(c6, q), ratpoly.valuation(dl, q))


def classify_place(model, place):
    """FiberReport at one place (possibly SMOOTH)."""
    v4, v6, vd = _valuations_at(model, place)
    assert vd is not None  # delta is not identically zero for valid models
    v4, v6, vd = _minimal_valuations(v4, v6, vd)
    symbol, m_v, euler = _classify_valuations(v4, v6, vd)
    return FiberReport(place=place, kodaira=symbol, v_c4=v4, v_c6=v6, v_delta=vd,
                       m_v=m_v, euler=euler, degree_weight=place.degree)


def classify_fibers(model):
    """Reports for all singular fibers, finite places first, infinity last.

    Finite places are the monic irreducible factors of the discriminant,
    ordered by degree then coefficients, so output is deterministic.
    """
    reports = []
    for factor, _ in ratpoly.irreducible_factors(model.delta):
        rep = classify_place(model, Place(poly=factor))
        if rep.kodaira != "SMOOTH":
            reports.append(rep)
    inf_rep = classify_place(model, INFINITY)
    if inf_rep.kodaira != "SMOOTH":
        reports.append(inf_rep)
    return reports


def euler_check(reports):
    """Degree-weighted Euler number sum; 24 for every K3-shaped model."""
    return sum(r.degree_weight * r.euler for r in reports)


def shioda_tate_rank(reports, mw_rank=0, torsion_present=False):
    """2 + sum of degree-weighted (components - 1) + Mordell-Weil rank.

    Torsion sections do not change the rank count; the flag is accepted so
    callers can record it alongside the input rank.
    """
    del torsion_present
    return 2 + sum(r.degree_weight * (r.m_v - 1) for r in reports) + mw_rank


@dataclass(frozen=True)
class GenericityCheck:
    ok: bool
    failures: tuple

    def __bool__(self):
        return self.ok


def check_generic(model):
    """Whether the coefficient pair is generic for this fiber shape.

    Requires b and a^2 - 4b squarefree with disjoint zero loci (gcd and
    resultant tests) and a smooth fiber at infinity.
    """
    failures = []
    b = model.b
    quad = ratpoly.sub(ratpoly.mul(model.a, model.a), ratpoly.scale(b, 4))
    if not ratpoly.is_squarefree(b):
        failures.append("b not squarefree")
    if not ratpoly.is_squarefree(quad):
        failures.append("a^2 - 4b not squarefree")
    if ratpoly.degree(ratpoly.gcd(b, quad)) != 0:
        failures.append("b and a^2 - 4b share a zero (gcd nonconstant)")
    if b and quad and ratpoly.resultant(b, quad) == 0:
        failures.append("resultant(b, a^2 - 4b) vanishes")
    v_inf = ratpoly.valuation(ratpoly.reverse_weighted(model.delta, _W_DELTA), _S)
    if v_inf != 0:
        failures.append("fiber at infinity is singular")
    return GenericityCheck(ok=not failures, failures=tuple(failures))


def two_torsion_check(model):
    """Executable witness that (x, y) = (0, 0) is a 2-torsion section.

    Checks that substituting x = y = 0 kills the equation identically
    (the cubic x^3 + a x^2 + b x has zero constant term in x), and that
    x = 0 is generically a simple root of the cubic (b not identically
    zero), so the section meets smooth points of the generic fiber. A
    point with vanishing y-coordinate has a vertical tangent, hence
    doubles to the point at infinity: order two.
    """
    # coefficients of the cubic in x are polynomials in t: [0, b, a, 1]
    constant_term = ratpoly.mul((), model.b)  # x * (...) evaluated at x = 0
    on_curve = ratpoly.is_zero(constant_term)
    # simple root at x = 0 for generic t: the derivative 3x^2 + 2ax + b
    # evaluates to b there, and b is nonzero whenever the model is valid
    simple_root_generically = not ratpoly.is_zero(model.b)
    return on_curve and simple_root_generically


def sample_generic_model(seed):
    """Deterministic random generic model: coefficients uniform in [-9, 9].

    Resamples until the genericity check passes.
    """
    rng = random.Random(seed)
    while True:
        a = [rng.randint(-9, 9) for _ in range(A_DEGREE_BOUND + 1)]
        b = [rng.randint(-9, 9) for _ in range(B_DEGREE_BOUND + 1)]
        try:
            model = make_model(a, b)
        except IdenticallySingular:
            continue
        if check_generic(model).ok:
            return model


# --- Neron-Severi lattice of the generic member ---

NS_BASIS = ("sigma", "F", "N1", "N2", "N3", "N4", "N5", "N6", "N7", "Nhat")
NS_RANK = 10


@dataclass(frozen=True)
class NSClass:
    """A divisor class as rational coordinates in the basis (sigma, F, N1..N7, Nhat)."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coords)
        if len(cs) != NS_RANK:
            raise ValueError(f"class needs {NS_RANK} coordinates")
        object.__setattr__(self, "coords", cs)

    @property
    def is_integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def is_primitive(self):
        """Integral with coprime coordinates."""
        if not self.is_integral:
            return False
        from math import gcd
        g = 0
        for c in self.coords:
            g = gcd(g, abs(int(c)))
        return g == 1

    def __add__(self, other):
        return NSClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return NSClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return NSClass(tuple(-a for a in self.coords))

    def __rmul__(self, k):
        return NSClass(tuple(Fraction(k) * a for a in self.coords))


def _ns_gram():
    g = [[0] * NS_RANK for _ in range(NS_RANK)]
    g[0][0] = -2            # section sigma
    g[0][1] = g[1][0] = 1   # sigma . F
    for i in range(2, 9):   # N1..N7, pairwise orthogonal (-2)-curves
        g[i][i] = -2
        g[i][9] = g[9][i] = -1
    g[9][9] = -4            # half-sum of N1..N8
    return g


def _unit(i):
    return NSClass(tuple(Fraction(1 if j == i else 0) for j in range(NS_RANK)))


def named_classes():
    """Dictionary of the standard classes, including the derived N8 and tau."""
    classes = {name: _unit(i) for i, name in enumerate(NS_BASIS)}
    nhat = classes["Nhat"]
    n8 = 2 * nhat
    for i in range(2, 9):
        n8 = n8 - _unit(i)
    classes["N8"] = n8
    # the 2-torsion section: sigma + 2F - Nhat
    classes["tau"] = classes["sigma"] + 2 * classes["F"] - nhat
    return classes


def ns_lattice():
    """(rank-10 lattice, named class dictionary) of the generic member."""
    return make_lattice(_ns_gram(), name="NS"), named_classes()


def intersect(c1, c2):
    """Intersection number; an int when both classes are integral."""
    g = _ns_gram()
    val = sum(c1.coords[i] * g[i][j] * c2.coords[j]
              for i in range(NS_RANK) for j in range(NS_RANK))
    return int(val) if val.denominator == 1 else val


def curve_class(e):
    """The invariant curve class with self-intersection 4e.

    Sum of e fiber components, a full fiber, and both sections; in basis
    coordinates 2*sigma + (e+3)*F - Nhat. Requires e >= 2 so the class
    meets the zero section positively.
    """
    if e < 2:
        raise ETooSmall("multiplicity parameter must be >= 2")
    cls = named_classes()
    return cls["sigma"] + cls["tau"] + (e + 1) * cls["F"]


@dataclass(frozen=True)
class PositivityEntry:
    label: str
    value: object
    positive: bool


@dataclass(frozen=True)
class PositivityReport:
    self_intersection: object
    entries: tuple

    @property
    def all_positive(self):
        return self.self_intersection > 0 and all(e.positive for e in self.entries)

    @property
    def flagged(self):
        out = [e for e in self.entries if not e.positive]
        if self.self_intersection <= 0:
            out.insert(0, PositivityEntry("self", self.self_intersection, False))
        return out


def default_test_classes():
    """Sections, fiber, fiber components: (label, class) pairs."""
    cls = named_classes()
    out = [("sigma", cls["sigma"]), ("tau", cls["tau"]), ("F", cls["F"])]
    for i in range(1, 9):
        out.append((f"N{i}", cls[f"N{i}"]))
    for i in range(1, 9):
        out.append((f"F-N{i}", cls["F"] - cls[f"N{i}"]))
    return out


def positivity_report(cls, test_classes=None):
    """Self-intersection plus pairings against a test set, non-positive flagged."""
    if test_classes is None:
        test_classes = default_test_classes()
    entries = []
    for label, tc in test_classes:
        val = intersect(cls, tc)
        entries.append(PositivityEntry(label, val, val > 0))
    return PositivityReport(self_intersection=intersect(cls, cls), entries=tuple(entries))


def involution_action():
    """Matrix of the translation involution on coordinate columns.

    sigma and tau swap, F is fixed, each N_i maps to the opposite fiber
    component F - N_i; the matrix is integral in this basis, squares to
    the identity, and preserves the pairing.
    """
    m = [[0] * NS_RANK for _ in range(NS_RANK)]

    def set_image(j, coords):
        for i, c in coords.items():
            m[i][j] = c

    set_image(0, {0: 1, 1: 2, 9: -1})      # sigma -> sigma + 2F - Nhat
    set_image(1, {1: 1})                   # F -> F
    for k in range(2, 9):
        set_image(k, {1: 1, k: -1})        # N_i -> F - N_i
    set_image(9, {1: 4, 9: -1})            # Nhat -> 4F - Nhat
    return tuple(tuple(row) for row in m)


def apply_involution(cls):
    m = involution_action()
    return NSClass(tuple(sum(Fraction(m[i][j]) * cls.coords[j] for j in range(NS_RANK))
                         for i in range(NS_RANK)))


def ns_involution_split():
    """(invariant, anti-invariant) sublattices of the involution action.

    Both are saturated kernels with their induced Gram matrices; the
    invariant part has rank 2, the anti-invariant part is the rank-8
    negative definite even lattice with determinant 256 and discriminant
    group (Z/2)^8, recognizable by its 240 vectors of norm -4.
    """
    m = [list(r) for r in involution_action()]
    g = _ns_gram()
    ident = exactmat.identity(NS_RANK)
    minus = [[m[i][j] - ident[i][j] for j in range(NS_RANK)] for i in range(NS_RANK)]
    plus = [[m[i][j] + ident[i][j] for j in range(NS_RANK)] for i in range(NS_RANK)]
    inv_basis = exactmat.int_kernel(minus)
    anti_basis = exactmat.int_kernel(plus)
    inv = make_lattice(exactmat.gram_of_rows(inv_basis, g), name="NS^+")
    anti = make_lattice(exactmat.gram_of_rows(anti_basis, g), name="NS^-")
    return inv, anti


# --- JSON forms ---

def model_to_json(model):
    return {"a": ratpoly.to_strings(model.a), "b": ratpoly.to_strings(model.b)}


def model_from_json(data):
    return make_model(list(data["a"]), list(data["b"]))


def report_to_json(rep):
    place = "inf" if rep.place.is_infinity else ratpoly.to_strings(rep.place.poly)
    return {
        "place": place,
        "kodaira": rep.kodaira,
        "v_c4": rep.v_c4,
        "v_c6": rep.v_c6,
        "v_delta": rep.v_delta,
        "m_v": rep.m_v,
        "euler": rep.euler,
        "degree_weight": rep.degree_weight,
    }
