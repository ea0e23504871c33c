"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter lies outside the range an operation accepts."""


class GroundSetMismatch(ValueError):
    """Two subsets (or a subset and a graph) live on different ground sets."""


class InstanceTooLarge(ValueError):
    """The instance exceeds a configured enumeration or memory budget."""


class FormatError(ValueError):
    """A text file could not be parsed.

    ``lineno`` is the 1-based line where parsing failed (``None`` when the
    problem is not tied to one line, e.g. a missing header).
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
