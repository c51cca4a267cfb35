"""Exception hierarchy shared by the whole package."""


class SemicompError(Exception):
    """Base class for every error raised by semicomp."""


class ValidationError(SemicompError, ValueError):
    """Malformed input: bad vertex index, bad file, broken invariant."""


class VertexRangeError(ValidationError):
    pass


class SelfLoopError(ValidationError):
    pass


class DuplicateArcError(ValidationError):
    pass


class CompositionError(ValidationError):
    pass


class PreconditionError(SemicompError):
    """A theorem or algorithm hypothesis does not hold for the input."""


class ScaleError(SemicompError):
    """Input exceeds the bound of an exhaustive (desk-scale) procedure."""


class TheoremViolation(SemicompError):
    """An exhaustive check contradicted a structural theorem."""


class FormatError(ValidationError):
    """Parse failure in a .dg/.comp file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorpusError(ValidationError):
    """Corpus bounds out of range."""
