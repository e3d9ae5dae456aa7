"""Exception hierarchy shared by all modules."""


class SuperstringError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SuperstringError, ValueError):
    """Malformed arguments: empty strings, bad permutations, bad policies."""


class EmptyInstanceError(InvalidInputError):
    """Normalization produced (or was given) an empty string set."""


class CapacityError(SuperstringError):
    """Input exceeds a hard size guard (e.g. exact oracles beyond n=20)."""


class ParamSearchExhausted(SuperstringError):
    """Sentinel-parameter search ran out of budget; not a non-existence proof."""
