class ContractError(ValueError):
    """A caller broke an operation's precondition."""


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class OracleLimitError(ContractError):
    """The brute-force oracle refuses graphs above its size limit."""


class NoTrianglesError(ValueError):
    """The graph has no triangles, so there is nothing to sample."""
