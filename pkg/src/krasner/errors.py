"""Exception types shared across the package."""


class KrasnerError(Exception):
    """Base class for every error raised by this package."""


class FormatError(KrasnerError):
    """Input is structurally unusable (bad shape, range, empty sum cell, ...)."""

    def __init__(self, code, message, location=None):
        self.code = code
        self.location = location
        super().__init__(f"{code}: {message}")


class PreconditionError(KrasnerError, ValueError):
    pass


class NegationError(KrasnerError):
    """Axiom (4) fails: an element has no inverse, or more than one."""

    def __init__(self, kind, witness, message):
        self.kind = kind  # "existence" | "uniqueness"
        self.witness = witness
        super().__init__(message)


class AxiomFailure(KrasnerError):
    def __init__(self, report):
        self.report = report
        failed = ", ".join(e.axiom for e in report.failures())
        super().__init__(f"hyperring axioms violated: {failed}")


class ConsistencyError(KrasnerError, AssertionError):
    """An internal cross-check disagreed; indicates a bug, not bad input."""
