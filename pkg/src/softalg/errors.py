"""Exception hierarchy shared by every module."""


class SoftAlgebraError(ValueError):
    """Base class. ``code`` is the stable name the CLI prints."""

    code = "SoftAlgebraError"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class CofiniteInFiniteMode(SoftAlgebraError):
    """Cofinite subset requested over a finite universe."""

    code = "CofiniteInFiniteMode"


class UnknownAtom(SoftAlgebraError):
    """Atom outside the universe namespace."""

    code = "UnknownAtom"


class UnknownParameter(SoftAlgebraError):
    """Parameter outside the declared parameter space."""

    code = "UnknownParameter"


class DomainMismatch(SoftAlgebraError):
    """Assignment keys differ from the declared domain."""

    code = "DomainMismatch"


class CtxMismatch(SoftAlgebraError):
    """Operands live in different universes."""

    code = "CtxMismatch"


class NotASubdomain(SoftAlgebraError):
    """Projection target is not contained in the domain."""

    code = "NotASubdomain"


class EmptyFamily(SoftAlgebraError):
    """Supremum or meet of an empty family."""

    code = "EmptyFamily"


class MixedDomains(SoftAlgebraError):
    """Family members do not share one domain."""

    code = "MixedDomains"


class InfiniteMode(SoftAlgebraError):
    """Operation needs an enumerable (finite-mode) universe."""

    code = "InfiniteMode"


class SliceTooLarge(SoftAlgebraError):
    """Enumeration exceeds the configured guard."""

    code = "SliceTooLarge"


class NotDirected(SoftAlgebraError):
    """Family is not directed."""

    code = "NotDirected"


class NotFiniteElement(SoftAlgebraError):
    """Soft set is not a finite element."""

    code = "NotFiniteElement"


class DocumentSyntaxError(SoftAlgebraError):
    """Malformed soft set document."""

    code = "DocumentSyntaxError"


class CtxConflict(SoftAlgebraError):
    """Documents declare different universes."""

    code = "CtxConflict"
