"""Exception types shared across the package."""


class SizeCapError(ValueError):
    """A requested computation exceeds a hard size cap.

    Raised instead of silently starting a run that would take hours; the
    message names the cap so callers can report it.
    """

    def __init__(self, what: str, actual: int, cap: int):
        super().__init__(f"{what}: size {actual} exceeds the hard cap of {cap}")
        self.what = what
        self.actual = actual
        self.cap = cap


class SpecError(ValueError):
    """A problem document failed validation; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
