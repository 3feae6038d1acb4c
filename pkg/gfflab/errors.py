"""Exception hierarchy shared by the numerical modules and the harness."""


class GfflabError(Exception):
    """Base class for all gfflab errors."""


class ConfigError(GfflabError, ValueError):
    """Invalid experiment configuration or CLI input."""


class RecordFormatError(ConfigError):
    """A JSONL result line that cannot be parsed as an EstimateRecord."""

    def __init__(self, path: str, line_number: int, reason: str) -> None:
        super().__init__(f"{path}:{line_number}: malformed record ({reason})")
        self.path = path
        self.line_number = line_number


class CapacityError(GfflabError, RuntimeError):
    """A requested computation exceeds a configured size cap."""


class DomainError(GfflabError, ValueError):
    """Arguments outside the domain of a numerical operation."""
