class WorkbenchError(Exception):
    pass


class FieldConstructionError(WorkbenchError, ValueError):
    pass


class FieldMismatchError(WorkbenchError, ValueError):
    pass


class ZeroDivisionFieldError(WorkbenchError, ZeroDivisionError):
    pass


class DomainError(WorkbenchError, ValueError):
    pass


class ParseError(WorkbenchError, ValueError):
    pass


class CapExceededError(WorkbenchError, RuntimeError):
    """Raised when a field order exceeds a configured desk-scale cap."""

    def __init__(self, q: int, cap: int, what: str = "field order"):
        self.q = q
        self.cap = cap
        super().__init__(f"{what} q={q} exceeds cap {cap} (raise it with --q-cap)")


class OracleDisagreementError(WorkbenchError, AssertionError):
    pass
