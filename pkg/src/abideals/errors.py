"""Exception types shared across the package."""


class InvalidType(ValueError):
    """Series/rank pair is not an irreducible root system type."""


class NotARoot(ValueError):
    """A vector required to be a (positive) root is not one."""


class DimensionMismatch(ValueError):
    """Vector length does not match the rank."""


class IndexOutOfRange(ValueError):
    """Simple-root index outside 1..n."""


class NodeOutOfRange(ValueError):
    """Graph node index outside 1..node_count."""


class TooLarge(ValueError):
    """Exhaustive scan refused beyond the hard size cap."""


class WrongType(ValueError):
    """Operation restricted to particular series (A or C)."""


class NotInMaximalIdeal(ValueError):
    """C-series root outside the unique maximal abelian ideal."""


class InvalidIdeal(ValueError):
    """Root set violates the upper-closure or sum-free invariant."""


class NotFound(LookupError):
    """Inverse-table lookup missed; signals a bijectivity bug."""


class SymmetryViolation(RuntimeError):
    """Internal consistency failure: the folding symmetry is guaranteed."""


class IntegralityViolation(RuntimeError):
    """Internal consistency failure: lattice arithmetic left the integers."""
