"""Combinatorics of stable maps from nodal chain curves.

Domains are connected nodal curves given by a dual graph with a genus and
an image marking per component. The module computes arithmetic genus,
checks the chain hypotheses under which the moduli dimension at such a
map equals the head genus, and evaluates the cohomology of line bundles
on rational chains two independent ways: an exact-sequence peeling
recursion, and a brute-force section-gluing rank computation.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactmat
from .errors import (
    Disconnected,
    ETooSmall,
    LengthExceeded,
    UnsupportedHeadGenus,
    UnsupportedShape,
)

KIND_EMBEDDED_SMOOTH = "EMBEDDED_SMOOTH"
KIND_NORMALIZED_NODAL = "NORMALIZED_NODAL"
KIND_SECTION = "SECTION"
KIND_FIBER = "FIBER"

# every recognized marking is an unramified map; the first three are
# embeddings of smooth curves (a generic fiber is smooth, so FIBER and
# SECTION both embed)
EMBEDDED_KINDS = frozenset({KIND_EMBEDDED_SMOOTH, KIND_SECTION, KIND_FIBER})
UNRAMIFIED_KINDS = EMBEDDED_KINDS | {KIND_NORMALIZED_NODAL}


@dataclass(frozen=True)
class Component:
    genus: int
    kind: str
    normal_degree: int

    def __post_init__(self):
        object.__setattr__(self, "kind", str(self.kind).upper())
        if self.genus < 0:
            raise ValueError("component genus must be nonnegative")


@dataclass(frozen=True)
class StableMapConfig:
    """Dual graph of a nodal domain with image markings.

    components: ordered Component list; edges: unordered index pairs, one
    per node; dim_base: dimension of the family base the map sits over.
    The graph must be connected.
    """

    components: tuple
    edges: tuple
    dim_base: int = 0

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Component) else Component(*c) for c in self.components)
        edges = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.edges)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "edges", edges)
        n = len(comps)
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for {n} components")
        if not _connected(n, edges):
            raise Disconnected("dual graph is not connected")


def _connected(n, edges):
    if n == 0:
        return False
    seen = {0}
    frontier = [0]
    adj = {i: [] for i in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


def arithmetic_genus(config):
    """Sum of component genera plus edges minus components plus one."""
    n = len(config.components)
    if not _connected(n, config.edges):
        raise Disconnected("dual graph is not connected")
    return sum(c.genus for c in config.components) + len(config.edges) - n + 1


@dataclass(frozen=True)
class ChainValidation:
    ok: bool
    failures: tuple  # (condition, message) pairs

    def __bool__(self):
        return self.ok


def validate_chain_config(config):
    """Check the four chain hypotheses for the dimension-g conclusion.

    i) every component after the first is rational; ii) the first is an
    embedded smooth curve; iii) every marking is an unramified map;
    iv) consecutive components meet in a single transverse node and there
    are no other intersections.
    """
    failures = []
    comps = config.components
    n = len(comps)
    for i, c in enumerate(comps[1:], start=1):
        if c.genus != 0:
            failures.append(("rational_tails", f"component {i} has genus {c.genus}"))
    if n == 0 or comps[0].kind not in EMBEDDED_KINDS:
        kind = comps[0].kind if n else "missing"
        failures.append(("embedded_head", f"first component must embed a smooth curve, got {kind}"))
    for i, c in enumerate(comps):
        if c.kind not in UNRAMIFIED_KINDS:
            failures.append(("unramified", f"component {i} marking {c.kind} is not unramified"))
    expected = [(i, i + 1) for i in range(n - 1)]
    if sorted(config.edges) != expected:
        failures.append(("chain_nodes", "edges must be exactly the consecutive pairs, one node each"))
    return ChainValidation(ok=not failures, failures=tuple(failures))


def expected_dim(g, dim_base, fixed_class):
    """Lower bound for the moduli dimension of genus-g stable maps in a family.

    With the image class held fixed the bound is g + dim_base; letting the
    class vary drops it to g - 1 + dim_base.
    """
    if g < 0 or dim_base < 0:
        raise ValueError("genus and base dimension must be nonnegative")
    return g + dim_base if fixed_class else g - 1 + dim_base


def dominates_base(fiber_dim, g):
    """True when a fiber of dimension <= g forces the family to dominate its base.

    The relative bound g + dim(base) leaves no room for the moduli space
    to sit over a proper subvariety once one fiber has dimension at most g.
    """
    return fiber_dim <= g


@dataclass(frozen=True)
class ChainBundle:
    """Line-bundle degrees along a chain, head first.

    For the head-plus-tails calculus the tail entries are the degree of
    the bundle on each tail at the step where it is peeled, which is -1
    in the unramified chain situation. head_genus is 0 or 1; the gluing
    seed only affects the brute-force path.
    """

    degrees: tuple
    head_genus: int = 0
    seed: int = 0

    def __post_init__(self):
        ds = tuple(int(d) for d in self.degrees)
        if not ds:
            raise ValueError("chain must have at least one component")
        object.__setattr__(self, "degrees", ds)
        if self.head_genus not in (0, 1):
            raise UnsupportedShape("head genus must be 0 or 1")


def chain_normal_cohomology(chain):
    """(h0, h1) of the normal complex of a head-plus-tails chain map.

    Tails of degree -1 peel off one by one without changing cohomology,
    leaving the head: a genus-1 head carries its canonical bundle of
    degree 0 and contributes (1, 0) because its embedded deformations are
    unobstructed; a rational head of degree d contributes the cohomology
    of O(d), for instance (0, 1) for a (-2)-curve head.
    """
    ds = chain.degrees
    if any(d != -1 for d in ds[1:]):
        raise UnsupportedShape("tails must all have degree -1")
    head = ds[0]
    if chain.head_genus == 1:
        if head != 0:
            raise UnsupportedShape("a genus-1 head must carry its canonical degree 0")
        return (1, 0)
    return (max(head + 1, 0), max(-head - 1, 0))


def peel_cohomology(degrees):
    """(h0, h1) of a literal line bundle on a rational chain, by peeling.

    Repeatedly removes a final component of degree -1 (cohomologically
    invisible) and twists its neighbor down at the vanished node; returns
    None when some step does not end in degree -1, since the exact
    sequences then no longer telescope.
    """
    ds = list(degrees)
    if not ds:
        return None
    while len(ds) > 1:
        if ds[-1] != -1:
            return None
        ds.pop()
        ds[-1] -= 1
    d = ds[0]
    return (max(d + 1, 0), max(-d - 1, 0))


DEFAULT_CHAIN_LIMIT = 12


def chain_cohomology_oracle(degrees, head_genus=0, seed=0, max_length=DEFAULT_CHAIN_LIMIT):
    """Brute-force (h0, h1) of a line bundle on a rational chain.

    Sections on a component of degree d are polynomials of degree at most
    d; each node imposes one linear gluing equation with a pseudo-random
    nonzero constant drawn from the seed. h0 is the nullity of the gluing
    system and h1 follows from chi = sum(d_i + 1) - #nodes. On a chain the
    constants can be absorbed by rescaling, so any nonzero choice gives
    the true ranks; seeds are exposed to exercise that.
    """
    if head_genus != 0:
        raise UnsupportedHeadGenus("brute-force cohomology handles rational chains only")
    ds = [int(d) for d in degrees]
    if not ds:
        raise UnsupportedShape("chain must have at least one component")
    if len(ds) > max_length:
        raise LengthExceeded(f"chain length {len(ds)} exceeds bound {max_length}")
    rng = random.Random(seed)
    nvars = [max(d + 1, 0) for d in ds]
    offsets = []
    total = 0
    for k in nvars:
        offsets.append(total)
        total += k
    rows = []
    for i in range(len(ds) - 1):
        c = rng.randint(1, 97)
        row = [Fraction(0)] * total
        # node at point 1 on component i and point 0 on component i+1
        for k in range(nvars[i]):
            row[offsets[i] + k] = Fraction(1)
        if nvars[i + 1] > 0:
            row[offsets[i + 1]] -= Fraction(c)
        rows.append(row)
    rank = exactmat.rank_rational(rows) if rows else 0
    h0 = total - rank
    chi = sum(d + 1 for d in ds) - (len(ds) - 1)
    return (h0, h0 - chi)


def standard_chain_config(e, dim_base=0):
    """The genus-one chain over the quotient surface: fiber, section, e nodal fibers.

    Head of genus 1 marked FIBER with normal degree 0, then a SECTION tail
    and e NORMALIZED_NODAL tails, each of normal degree -1, glued in a
    chain. Requires e >= 2.
    """
    if e < 2:
        raise ETooSmall("multiplicity parameter must be >= 2")
    comps = [Component(1, KIND_FIBER, 0), Component(0, KIND_SECTION, -1)]
    comps += [Component(0, KIND_NORMALIZED_NODAL, -1) for _ in range(e)]
    edges = tuple((i, i + 1) for i in range(len(comps) - 1))
    return StableMapConfig(components=tuple(comps), edges=edges, dim_base=dim_base)


def chain_bundle_for(config, seed=0):
    """ChainBundle carrying the per-component normal degrees of a chain config."""
    check = validate_chain_config(config)
    if not check.ok:
        raise UnsupportedShape("; ".join(msg for _, msg in check.failures))
    return ChainBundle(degrees=tuple(c.normal_degree for c in config.components),
                       head_genus=config.components[0].genus, seed=seed)


# --- JSON forms ---

def config_to_json(config):
    return {
        "components": [{"genus": c.genus, "kind": c.kind, "ndeg": c.normal_degree}
                       for c in config.components],
        "edges": [list(e) for e in config.edges],
        "dim_base": config.dim_base,
    }


def config_from_json(data):
    comps = tuple(Component(int(c["genus"]), c["kind"], int(c["ndeg"]))
                  for c in data["components"])
    edges = tuple((int(a), int(b)) for a, b in data["edges"])
    return StableMapConfig(components=comps, edges=edges, dim_base=int(data.get("dim_base", 0)))
