"""Exception hierarchy shared by the whole package."""


class NPatchError(Exception):
    """Base class for all library errors."""


class ParseError(NPatchError):
    """Input document could not be parsed; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column or 0)
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(NPatchError):
    """Document parsed but a field is missing or invalid."""


class ClosureError(NPatchError):
    """Boundary loop corners do not meet within tolerance."""


class DomainError(NPatchError):
    """Parameter or point outside its admissible domain."""


class NumericError(NPatchError):
    """A numerical procedure failed to converge."""
