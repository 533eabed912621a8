"""Exception types shared across the toolkit."""


class ParseError(ValueError):
    """A text input (embedding file, dictionary, corpus, alignment) is malformed.

    Carries the offending path and 1-based line number so pipelines can point
    at the exact input line.
    """

    def __init__(self, path, line_number, message):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{self.path}:{line_number}: {message}")


class ZeroVarianceError(ValueError):
    """Skewness requested for a constant distribution (undefined)."""


class CoverageError(ValueError):
    """The requested source coverage cannot be reached from the given counts."""


class EvaluationError(ValueError):
    """An evaluation has no evaluable entries (e.g. every source word is OOV)."""
