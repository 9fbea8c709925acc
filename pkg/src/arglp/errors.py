"""Exception hierarchy shared by the parser, engines and CLI."""


class ArgLPError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 5


class ParseError(ArgLPError):
    exit_code = 2

    def __init__(self, message, span=None):
        self.message = message
        self.span = span
        if span is not None:
            message = f"{span.line}:{span.column}: {message}"
        super().__init__(message)


class AutoNameClash(ParseError):
    pass


class ValidationError(ArgLPError):
    exit_code = 3

    def __init__(self, violations, spans=None):
        self.violations = list(violations)
        self.spans = spans or {}
        lines = []
        for v in self.violations:
            span = next((self.spans[e] for e in v.elements if e in self.spans), None)
            prefix = f"{span.line}:{span.column}: " if span is not None else ""
            lines.append(prefix + str(v))
        super().__init__("; ".join(lines))


class CycleDetected(ArgLPError):
    exit_code = 3


class ResourceLimit(ArgLPError):
    exit_code = 4


class InvariantBreach(ArgLPError):
    """Raised when an internal uniqueness or convergence guarantee fails."""

    exit_code = 5


class NonUniqueMinimum(InvariantBreach):
    pass


class NonUniqueMaxDeterministic(InvariantBreach):
    pass


class NonUniqueGrounded(InvariantBreach):
    pass


class NonUniqueIdeal(InvariantBreach):
    pass


class NonConvergence(InvariantBreach):
    pass


class UnknownAtom(ArgLPError):
    exit_code = 5


class ReservedAtomClash(ArgLPError):
    exit_code = 3
