"""Exception types shared across the package."""


class IfcsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(IfcsError):
    """Malformed input file. Carries the offending line number when known."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


class GraphError(IfcsError):
    """Invalid graph operation (unknown vertex, self-loop, bad edge)."""


class MotifError(IfcsError):
    """Invalid motif (disconnected, missing target, size out of range)."""


class BudgetExceededError(IfcsError):
    """Per-anchor embedding budget exhausted during enumeration."""
