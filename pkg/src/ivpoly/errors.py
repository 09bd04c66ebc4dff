"""Exception hierarchy shared by every module."""


class IvpError(Exception):
    """Base class for all library errors."""


class NonMonicDivisor(IvpError, ValueError):
    """Division by a residue polynomial whose leading coefficient is not 1."""


class NonMonic(IvpError, ValueError):
    """A monic polynomial was required."""


class ModulusMismatch(IvpError, ValueError):
    """Operands live in Z/dZ for different d."""


class ResourceLimit(IvpError):
    """An enumeration or a generated degree exceeds its configured cap."""

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what}: {needed} exceeds cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class ParseError(IvpError, ValueError):
    def __init__(self, message: str, token: str | None = None):
        if token is not None:
            message = f"{message}: {token!r}"
        super().__init__(message)
        self.token = token


class Reducible(IvpError, ValueError):
    """The polynomial has a nontrivial monic integer factor (kept in ``factor``)."""

    def __init__(self, poly, factor):
        super().__init__(f"{poly} is reducible, factor {factor}")
        self.poly = poly
        self.factor = factor


class IrreducibilityUnknown(IvpError):
    """Irreducibility could not be certified within the configured effort."""


class NotInS(IvpError, ValueError):
    """The candidate does not map the algebraic integer to an algebraic integer."""


class NotInSubalgebra(IvpError, LookupError):
    """f(C_p) is not an integral combination of powers of C_p.

    This is an outcome rather than a fault; ``coords`` holds the rational
    coordinates in the basis 1, C_p, ..., C_p^(n-1).
    """

    def __init__(self, coords):
        super().__init__(f"rational coordinates {tuple(str(c) for c in coords)} are not integral")
        self.coords = tuple(coords)
