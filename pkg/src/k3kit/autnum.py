"""Fixed-point counts and moduli dimensions for prime-order symplectic actions.

A symplectic automorphism of prime order p on a K3 surface exists only
for p in {2, 3, 5, 7}. Its anti-invariant lattice in second cohomology
has a fixed rank per p; that rank determines the Lefschetz fixed-point
count and the dimension of the corresponding polarized moduli space.
"""

from dataclasses import dataclass

from .errors import InvalidOrder, UnsupportedOrder
from .lattice import lambda_d, lambda_tilde_d

K3_EULER = 24
H2_RANK = 22

# rank of the anti-invariant lattice per prime order
OMEGA_RANKS = {2: 8, 3: 12, 5: 16, 7: 18}


@dataclass(frozen=True)
class OrderPDatum:
    """Order p with the anti-invariant rank and its complement in H^2.

    p = 1 encodes the identity (empty anti-invariant part) and is allowed
    for sanity checks; the automorphism primes are 2, 3, 5, 7.
    """

    p: int
    omega_rank: int
    invariant_h2_rank: int

    def __post_init__(self):
        if self.p == 1:
            if self.omega_rank != 0:
                raise InvalidOrder("the identity has empty anti-invariant part")
        elif self.p not in OMEGA_RANKS:
            raise InvalidOrder(f"no symplectic action of prime order {self.p} on a K3")
        if self.invariant_h2_rank != H2_RANK - self.omega_rank:
            raise InvalidOrder("invariant rank must be 22 minus the anti-invariant rank")
        if self.p > 1 and self.omega_rank % (self.p - 1) != 0:
            raise InvalidOrder("eigenvalue multiplicity must be integral")


def datum_for_order(p):
    if p == 1:
        return OrderPDatum(p=1, omega_rank=0, invariant_h2_rank=H2_RANK)
    if p not in OMEGA_RANKS:
        raise InvalidOrder(f"no symplectic action of prime order {p} on a K3")
    omega = OMEGA_RANKS[p]
    return OrderPDatum(p=p, omega_rank=omega, invariant_h2_rank=H2_RANK - omega)


def primitive_root_power_sum(p, k):
    """Sum over the primitive p-th roots of unity of their k-th powers.

    Equals p - 1 when p divides k and -1 otherwise; with p prime the value
    is the same for every k coprime to p, which is what makes the trace
    formula independent of which generator of the cyclic group acts.
    """
    if p < 1:
        raise InvalidOrder("order must be positive")
    return p - 1 if k % p == 0 else -1


def lefschetz_fixed_points(datum, power=1):
    """Isolated fixed-point count from the trace on cohomology.

    The action is trivial on H^0 and H^4 and has no odd cohomology to see,
    so the count is 2 + trace on H^2: the invariant part contributes its
    rank, and each primitive eigenvalue packet of multiplicity
    omega_rank/(p-1) contributes the primitive root power sum.
    """
    if datum.p == 1:
        return 2 + H2_RANK
    m = datum.omega_rank // (datum.p - 1)
    trace = datum.invariant_h2_rank + m * primitive_root_power_sum(datum.p, power)
    return 2 + trace


def moduli_dimension(p):
    """Dimension of the moduli of polarized K3s with an order-p action.

    Lattice-polarized moduli have dimension 20 minus the rank of the
    polarizing lattice, here 1 + omega_rank.
    """
    if p not in OMEGA_RANKS:
        raise InvalidOrder(f"no symplectic action of prime order {p} on a K3")
    return 20 - 1 - OMEGA_RANKS[p]


def quotient_euler_check(p=2, fixed_points=None):
    """Euler number of the resolved involution quotient.

    Removing the k fixed points, dividing by p, and resolving each of the
    resulting double points by a curve of Euler number 2 gives
    (24 - k)/p + 2k; the value 24 certifies a K3-shaped resolution.
    Only the involution case is implemented.
    """
    if p != 2:
        raise UnsupportedOrder("quotient bookkeeping implemented for order 2 only")
    k = lefschetz_fixed_points(datum_for_order(p)) if fixed_points is None else fixed_points
    if (K3_EULER - k) % p != 0:
        raise InvalidOrder(f"free part {K3_EULER - k} not divisible by {p}")
    return (K3_EULER - k) // p + 2 * k


@dataclass(frozen=True)
class RankRecord:
    """Rank and admissibility data for the degree-2d order-p moduli lattices."""

    p: int
    d: int
    lattice_rank: int
    tilde_admissible: bool
    plain_realized: bool
    note: str | None = None
    plain_lattice: object = None
    tilde_lattice: object = None


def lambda_pd_rank_data(p, d):
    """Structured record of ranks and index-p extension admissibility.

    The index-p extension can only occur when p divides d. For p = 7 the
    unextended lattice is never realized when 7 divides d. For p = 2 the
    actual lattices are constructed and attached.
    """
    if p not in OMEGA_RANKS:
        raise InvalidOrder(f"no symplectic action of prime order {p} on a K3")
    if d < 1:
        raise InvalidOrder("degree parameter must be >= 1")
    omega = OMEGA_RANKS[p]
    tilde_ok = d % p == 0
    plain_ok = True
    note = None
    if p == 7 and d % 7 == 0:
        plain_ok = False
        note = "unextended rank-19 lattice not realized when 7 divides d"
    plain = tilde = None
    if p == 2:
        plain = lambda_d(d)
        if tilde_ok:
            tilde = lambda_tilde_d(d)
    return RankRecord(p=p, d=d, lattice_rank=1 + omega, tilde_admissible=tilde_ok,
                      plain_realized=plain_ok, note=note,
                      plain_lattice=plain, tilde_lattice=tilde)


def table():
    """Rows (p, fixed points, moduli dimension) for the four primes."""
    rows = []
    for p in sorted(OMEGA_RANKS):
        rows.append({
            "p": p,
            "omega_rank": OMEGA_RANKS[p],
            "fixed_points": lefschetz_fixed_points(datum_for_order(p)),
            "moduli_dimension": moduli_dimension(p),
        })
    return rows
