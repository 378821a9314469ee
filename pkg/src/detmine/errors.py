"""Exception types shared across the package."""


class DetmineError(Exception):
    """Base class for all detmine errors."""


class ValidationError(DetmineError):
    """An input violates a documented invariant (bad manifest entry,
    duplicate document id, empty positive corpus, out-of-range filter
    parameter, ...).  Maps to CLI exit code 1."""


class EncodingError(DetmineError):
    """A document or data file is not valid UTF-8.  Maps to CLI exit
    code 2, alongside ordinary OSError."""

    def __init__(self, path, message=None):
        self.path = str(path)
        super().__init__(message or f"{self.path}: not valid UTF-8")
