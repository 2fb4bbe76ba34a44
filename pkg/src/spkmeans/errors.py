"""Exception types shared across the package."""


class ZeroNormError(ValueError):
    """A vector (or row) has zero Euclidean norm and cannot be normalized."""

    def __init__(self, rows=None, message=None):
        self.rows = list(rows) if rows is not None else None
        if message is None:
            if self.rows:
                message = f"zero-norm rows at indices {self.rows}"
            else:
                message = "cannot normalize a zero vector"
        super().__init__(message)


class DimensionMismatchError(ValueError):
    """A sparse index exceeds the declared dimensionality."""


class ParseError(ValueError):
    """Malformed input file; message carries the 1-based line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class InfeasibleError(ValueError):
    """Requested clustering is infeasible (e.g. k > n)."""


class ConfigError(ValueError):
    """Invalid run configuration; message names the offending option."""
