"""Exception hierarchy shared by all modules."""


class DiagramError(ValueError):
    """Base class for every domain error raised by diagcat."""


class OutOfRange(DiagramError):
    pass


class NotAPartition(DiagramError):
    pass


class TypeMismatch(DiagramError):
    pass


class FamilyMismatch(DiagramError):
    pass


class NotARookDiagram(FamilyMismatch):
    pass


class NotARookBrauerDiagram(FamilyMismatch):
    pass


class ArityMismatch(DiagramError):
    pass


class NoBrauerFactor(DiagramError):
    pass


class NoFactorization(DiagramError):
    """The requested two-factor decomposition does not exist for this diagram."""


class ParseError(DiagramError):
    """Malformed text input; ``offset`` points at the offending character."""

    def __init__(self, message: str, text: str = "", offset: int = 0, expected: str = ""):
        self.text = text
        self.offset = offset
        self.expected = expected
        detail = f" at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(message + detail)
