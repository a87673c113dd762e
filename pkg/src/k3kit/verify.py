"""Cross-module verification harness.

Runs every headline numerical claim of the toolkit end to end and
collects one record per check: claim, expected value, computed value,
and a status. A check whose computed value contradicts a stated source
ordering while the computation itself is internally consistent is
reported as DISCREPANCY_DOCUMENTED rather than PASS or FAIL.
"""

import json
import random
from collections import Counter
from dataclasses import dataclass

from . import autnum, fibration, stablemap
from .errors import OddDegree
from .lattice import (
    discriminant_group,
    is_primitive,
    lambda_d,
    lambda_tilde_d,
    short_vectors,
)

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY_DOCUMENTED"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    claim: str
    expected: str
    computed: str
    status: str


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    samples: int
    checks: tuple

    @property
    def n_pass(self):
        return sum(1 for c in self.checks if c.status == PASS)

    @property
    def n_fail(self):
        return sum(1 for c in self.checks if c.status == FAIL)

    @property
    def n_discrepancy(self):
        return sum(1 for c in self.checks if c.status == DISCREPANCY)

    @property
    def ok(self):
        return self.n_fail == 0

    def to_json(self):
        payload = {
            "seed": self.seed,
            "samples": self.samples,
            "checks": [
                {
                    "id": c.check_id,
                    "claim": c.claim,
                    "expected": c.expected,
                    "computed": c.computed,
                    "status": c.status,
                }
                for c in self.checks
            ],
            "summary": {"pass": self.n_pass, "fail": self.n_fail,
                        "discrepancy_documented": self.n_discrepancy},
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def to_text(self):
        lines = []
        width = max(len(c.check_id) for c in self.checks)
        for c in self.checks:
            lines.append(f"{c.check_id:<{width}}  {c.status:<24} expected {c.expected} | computed {c.computed}")
        lines.append(f"summary: {self.n_pass} pass, {self.n_fail} fail, "
                     f"{self.n_discrepancy} discrepancy documented")
        return "\n".join(lines)


def _check(check_id, claim, expected, computed, ok, documented=False):
    if documented:
        status = DISCREPANCY if ok else FAIL
    else:
        status = PASS if ok else FAIL
    return CheckResult(check_id=check_id, claim=claim, expected=str(expected),
                       computed=str(computed), status=status)


def _check_autnum_fixed_points():
    got = tuple(row["fixed_points"] for row in autnum.table())
    return _check(
        "autnum.fixed_points",
        "isolated fixed points of a symplectic action of order 2, 3, 5, 7",
        (8, 6, 4, 3), got, got == (8, 6, 4, 3))


def _check_autnum_moduli():
    got = tuple(row["moduli_dimension"] for row in autnum.table())
    return _check(
        "autnum.moduli_dimensions",
        "dimension of the polarized moduli space for order 2, 3, 5, 7",
        (11, 7, 3, 1), got, got == (11, 7, 3, 1))


def _check_autnum_quotient():
    got = autnum.quotient_euler_check()
    return _check(
        "autnum.quotient_euler",
        "Euler number of the resolved involution quotient with 8 double points",
        24, got, got == 24)


def _check_dimension_bookkeeping():
    ok = True
    for g in range(0, 3):
        for s in range(0, 12):
            ok &= stablemap.expected_dim(g, s, fixed_class=True) == g + s
            ok &= stablemap.expected_dim(g, s, fixed_class=False) == g - 1 + s
            for fd in range(0, 4):
                ok &= stablemap.dominates_base(fd, g) == (fd <= g)
    return _check(
        "dimension.bookkeeping",
        "moduli dimension bounds g+dim(S) (fixed class) and g-1+dim(S), "
        "and base domination exactly when a fiber has dimension <= g",
        "all grid values match", "all grid values match" if ok else "mismatch", ok)


def _sample_models(seed, samples):
    # distinct deterministic sub-seeds per sample
    rng = random.Random(seed)
    return [fibration.sample_generic_model(rng.randrange(2**32)) for _ in range(samples)]


def _check_fiber_configuration(models):
    ok = True
    bad = None
    for m in models:
        reps = fibration.classify_fibers(m)
        counts = Counter()
        for r in reps:
            counts[r.kodaira] += r.degree_weight
        if dict(counts) != {"I1": 8, "I2": 8} or fibration.euler_check(reps) != 24 \
                or fibration.shioda_tate_rank(reps, 0) != 10:
            ok = False
            bad = dict(counts)
            break
    return _check(
        "fibration.fiber_configuration",
        "every generic model has eight I1 and eight I2 fibers (degree-weighted), "
        "Euler sum 24, and Neron-Severi rank 10",
        "{I1: 8, I2: 8}, euler 24, rank 10",
        "as expected" if ok else f"got {bad}", ok)


def _check_i2_placement(models):
    from . import ratpoly
    consistent = True
    for m in models:
        for rep in fibration.classify_fibers(m):
            if rep.place.is_infinity:
                continue
            divides_b = ratpoly.valuation(m.b, rep.place.poly) > 0
            if rep.kodaira == "I2" and not divides_b:
                consistent = False
            if rep.kodaira == "I1" and divides_b:
                consistent = False
    return _check(
        "fibration.i2_placement",
        "valuation computation places the I2 fibers over the zeros of b and the "
        "I1 fibers over the zeros of a^2-4b; the commonly quoted assignment pairs "
        "those loci the other way, so the computed placement is documented "
        "rather than passed",
        "I1 over zeros of b (as commonly quoted)",
        "I2 over zeros of b (computed)" if consistent else "placement not even internally consistent",
        consistent, documented=True)


def _check_tilde_family():
    ok = True
    detail = "all even d in 2..20 verified"
    for d in range(2, 21, 2):
        base = lambda_d(d)
        ext, emb = lambda_tilde_d(d, with_embedding=True)
        index = abs(_int_det(emb))
        ratio = abs(base.det) // abs(ext.det)
        e8_rows = [list(emb[i]) for i in range(1, 9)]
        good = ext.is_even and index == 2 and ratio == 4 and abs(ext.det) == 128 * d \
            and is_primitive(e8_rows, ext)
        if not good:
            ok = False
            detail = f"failure at d={d}"
            break
    odd_rejected = False
    try:
        lambda_tilde_d(3)
    except OddDegree:
        odd_rejected = True
    ok = ok and odd_rejected
    return _check(
        "lattice.tilde_family",
        "for even d the index-2 even extension exists with determinant ratio 4 "
        "and primitive twisted-E8 factor; odd d is rejected",
        "even, index 2, det ratio 4, primitive E8 block; odd d rejected",
        detail if odd_rejected else "odd d not rejected", ok)


def _int_det(m):
    from .exactmat import bareiss_det
    return bareiss_det([list(r) for r in m])


def _check_ns_table():
    lat, cls = fibration.ns_lattice()
    tau, sigma, f = cls["tau"], cls["sigma"], cls["F"]
    ok = fibration.intersect(tau, tau) == -2
    ok &= fibration.intersect(tau, sigma) == 0
    ok &= fibration.intersect(tau, f) == 1
    ok &= all(fibration.intersect(tau, cls[f"N{i}"]) == 1 for i in range(1, 9))
    ok &= abs(lat.det) == 64
    return _check(
        "ns.intersection_table",
        "the 2-torsion section class has square -2, meets the zero section in 0, "
        "the fiber in 1, each fiber component in 1; lattice determinant 64",
        "(-2, 0, 1, 1, 64)", "as expected" if ok else "mismatch", ok)


def _check_curve_classes():
    cls = fibration.named_classes()
    ok = True
    for e in range(2, 11):
        c = fibration.curve_class(e)
        good = fibration.intersect(c, c) == 4 * e
        good &= fibration.intersect(c, cls["sigma"]) == e - 1
        good &= fibration.intersect(c, cls["tau"]) == e - 1
        good &= fibration.intersect(c, cls["F"]) == 2
        good &= all(fibration.intersect(c, cls[f"N{i}"]) == 1 for i in range(1, 9))
        good &= c.is_primitive()
        good &= fibration.positivity_report(c).all_positive
        ok &= good
    return _check(
        "ns.curve_classes",
        "the invariant curve class has square 4e, meets each section in e-1 and "
        "each fiber component in 1, is primitive, and is positive on the test set",
        "all e in 2..10", "as expected" if ok else "mismatch", ok)


def _check_involution_split():
    from . import exactmat
    m = [list(r) for r in fibration.involution_action()]
    g = fibration._ns_gram()
    ok = exactmat.mat_mul(m, m) == exactmat.identity(10)
    ok &= exactmat.mat_mul(exactmat.mat_mul(exactmat.transpose(m), g), m) == g
    cls = fibration.named_classes()
    ok &= fibration.apply_involution(cls["F"]) == cls["F"]
    for e in range(2, 11):
        c = fibration.curve_class(e)
        ok &= fibration.apply_involution(c) == c
    inv, anti = fibration.ns_involution_split()
    ok &= inv.rank == 2 and anti.rank == 8
    ok &= abs(anti.det) == 256 and anti.is_even and anti.signature == (0, 8)
    ok &= discriminant_group(anti).elementary_divisors == (2,) * 8
    count = short_vectors(anti, -4)
    ok &= count == 240
    return _check(
        "involution.split",
        "the translation involution is an isometric involution fixing the fiber "
        "and curve classes; invariant rank 2, anti-invariant rank 8 with "
        "determinant 256 and 240 vectors of norm -4",
        "240 norm -4 vectors, det 256", f"count {count}", ok)


def _check_chain_family():
    ok = True
    for e in range(2, 11):
        cfg = stablemap.standard_chain_config(e)
        good = stablemap.arithmetic_genus(cfg) == 1
        good &= stablemap.validate_chain_config(cfg).ok
        good &= stablemap.chain_normal_cohomology(stablemap.chain_bundle_for(cfg)) == (1, 0)
        ok &= good
    return _check(
        "stablemap.chain_family",
        "the genus-one chain configuration has arithmetic genus 1, satisfies the "
        "four chain hypotheses, and moves in a one-dimensional family",
        "genus 1, valid, (h0, h1) = (1, 0) for e in 2..10",
        "as expected" if ok else "mismatch", ok)


def _check_oracle_agreement(seed):
    rng = random.Random(seed)
    shaped = agree = 0
    chi_ok = True
    for trial in range(200):
        n = rng.randint(1, 6)
        ds = [rng.randint(-3, 3) for _ in range(n)]
        h0, h1 = stablemap.chain_cohomology_oracle(ds, seed=trial)
        chi_ok &= (h0 - h1) == sum(d + 1 for d in ds) - (n - 1)
        peeled = stablemap.peel_cohomology(ds)
        if peeled is not None:
            shaped += 1
            agree += (peeled == (h0, h1))
    ok = chi_ok and shaped > 0 and agree == shaped
    return _check(
        "stablemap.oracle_agreement",
        "brute-force gluing cohomology agrees exactly with exact-sequence peeling "
        "on every peel-shaped chain, and Euler characteristics match throughout",
        "agreement on all shaped chains, chi exact on all 200",
        f"{agree}/{shaped} shaped chains agree, chi {'ok' if chi_ok else 'broken'}", ok)


def run_all(seed=0, samples=25):
    """Run the whole battery; deterministic for fixed (seed, samples)."""
    models = _sample_models(seed, samples)
    checks = [
        _check_autnum_fixed_points(),
        _check_autnum_moduli(),
        _check_autnum_quotient(),
        _check_dimension_bookkeeping(),
        _check_fiber_configuration(models),
        _check_i2_placement(models),
        _check_tilde_family(),
        _check_ns_table(),
        _check_curve_classes(),
        _check_involution_split(),
        _check_chain_family(),
        _check_oracle_agreement(seed),
    ]
    checks.sort(key=lambda c: c.check_id)
    return VerificationReport(seed=seed, samples=samples, checks=tuple(checks))
