"""Exception types shared by the library and the command-line layer."""


class DomainError(ValueError):
    """A precondition or contract violation with a stable machine-readable kind.

    Attributes:
        kind: Short hyphenated error name (e.g. 'dimension-mismatch').
        message: Human readable explanation.
    """

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": self.message}


class ParseError(DomainError):
    """Malformed group spec, dataset or manifest file."""

    def __init__(self, message: str) -> None:
        super().__init__("parse-error", message)
