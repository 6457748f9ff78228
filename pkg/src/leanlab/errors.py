"""Exception types shared across the toolkit.

Everything raised on bad *data* derives from LeanlabError so the CLI can
map it to a data-error exit status; usage problems stay with argparse.
"""


class LeanlabError(Exception):
    """Base class for data and configuration errors."""


class RegistryError(LeanlabError):
    """Malformed or inconsistent bias-registry input."""


class CorpusError(LeanlabError):
    """Unreadable corpus file or broken field mapping."""


class TrainingError(LeanlabError):
    """Training could not proceed (degenerate data, non-finite loss)."""
