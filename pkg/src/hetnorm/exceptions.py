"""Exception types shared across the package."""


class UndefinedMetricError(ValueError):
    """Raised when an index (or density) has no defined value for a graph.

    The ``reason`` attribute is a short machine-friendly tag such as
    ``"isolated nodes"`` or ``"n < 2"``; it is what gets written to the
    reason columns of experiment outputs.
    """

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or reason)


class GraphFormatError(ValueError):
    """Raised for malformed edge-list or weighted-matrix files."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
