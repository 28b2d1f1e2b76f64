"""Exception hierarchy shared by every lpoly module."""


class LPolyError(Exception):
    """Base class for all lpoly errors."""


class DuplicateAbscissa(LPolyError, ValueError):
    """Two interpolation nodes share the same x value."""


class DegenerateMap(LPolyError, ValueError):
    """An affine change of variable with zero slope was requested."""


class ZeroPolynomial(LPolyError, ValueError):
    """The operation is undefined for the zero polynomial."""


class DegreeMismatch(LPolyError, ValueError):
    """A polynomial does not have the degree the caller declared."""


class NoMaximum(LPolyError, ValueError):
    """k <= d: the lead coefficient is unbounded.

    With at most d points, a degree-d polynomial can vanish on every point
    for any choice of lead coefficient, so no extremal polynomial exists.
    """

    def __init__(self, d: int, k: int):
        self.d = d
        self.k = k
        super().__init__(
            f"no maximum lead coefficient for degree {d} on {k} points: "
            f"need k > d, otherwise the roots can cover every point"
        )


class UnsupportedDegree(LPolyError, ValueError):
    """Closed forms exist only for degrees 1 through 4."""


class InternalInconsistency(LPolyError, RuntimeError):
    """The enumeration produced a result the theory rules out."""
