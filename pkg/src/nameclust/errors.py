"""Exception hierarchy shared across the package."""


class NameclustError(Exception):
    """Base class for all package errors."""


class MalformedMentionError(NameclustError, ValueError):
    """An author mention string that cannot be parsed."""


class CorpusParseError(NameclustError):
    """Malformed XML input; carries an approximate byte offset."""

    def __init__(self, message, byte_offset=None, line=None, column=None):
        super().__init__(message)
        self.byte_offset = byte_offset
        self.line = line
        self.column = column

    def __str__(self):
        loc = []
        if self.byte_offset is not None:
            loc.append(f"byte~{self.byte_offset}")
        if self.line is not None:
            loc.append(f"line {self.line}, col {self.column}")
        base = super().__str__()
        return f"{base} ({'; '.join(loc)})" if loc else base


class DataIntegrityError(NameclustError):
    """Gold-standard invariant violated (e.g. one record under two gold keys)."""


class UnknownNodeError(NameclustError, KeyError):
    """A record id or author name not present in the graph."""


class UndefinedModularityError(NameclustError):
    """Modularity requested on a graph with no edges."""
