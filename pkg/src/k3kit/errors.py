"""Exception hierarchy shared by all k3kit modules."""


class K3KitError(Exception):
    """Base class for all k3kit errors."""


# --- lattice construction ---

class NonSymmetric(K3KitError):
    """Gram matrix is not symmetric."""


class Degenerate(K3KitError):
    """Gram matrix has determinant zero."""


class UnknownName(K3KitError):
    """Unrecognized standard lattice name."""


class ZeroTwist(K3KitError):
    """Twist multiplier must be nonzero."""


class NonPositiveD(K3KitError):
    """Polarization degree parameter must be >= 1."""


class OddDegree(K3KitError):
    """The index-two extension only exists for even degree parameter."""


class NoGlueFound(K3KitError):
    """No admissible glue class found; indicates an implementation bug."""


class NotInDual(K3KitError):
    """Glue vector is integral or does not pair integrally with the lattice."""


class NotIsotropic(K3KitError):
    """Glue class is not isotropic; extension would not be even."""


class DependentColumns(K3KitError):
    """Sublattice basis vectors are linearly dependent."""


class DegenerateRestriction(K3KitError):
    """Pairing restricted to the sublattice is degenerate."""


class IndefiniteLattice(K3KitError):
    """Short-vector counting requires a definite lattice."""


class SearchLimitExceeded(K3KitError):
    """Enumeration request exceeds the configured rank/norm bounds."""


# --- fibrations ---

class DegreeExceeded(K3KitError):
    """Coefficient polynomial degree above the model bound."""


class IdenticallySingular(K3KitError):
    """Discriminant vanishes identically."""


class NonMinimalUnresolvable(K3KitError):
    """Valuation triple not covered by the classification table."""


class ETooSmall(K3KitError):
    """Multiplicity parameter must be at least 2."""


# --- automorphism numerology ---

class InvalidOrder(K3KitError):
    """Automorphism order outside the supported set."""


class UnsupportedOrder(K3KitError):
    """Operation implemented for the involution case only."""


# --- stable-map calculus ---

class Disconnected(K3KitError):
    """Dual graph of the domain curve is not connected."""


class UnsupportedShape(K3KitError):
    """Chain bundle not of the head-plus-tails shape."""


class UnsupportedHeadGenus(K3KitError):
    """Brute-force cohomology handles rational heads only."""


class LengthExceeded(K3KitError):
    """Chain longer than the configured brute-force bound."""
