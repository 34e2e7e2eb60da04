"""Exception hierarchy. The CLI maps usage errors to exit code 2 and
domain errors to exit code 1."""


class FrobsumError(ValueError):
    pass


class UsageError(FrobsumError):
    """Malformed input: bad syntax, wrong dimensions, indices out of range."""


class ConfigurationError(UsageError):
    """Invalid root-system datum, e.g. an unsupported (family, rank) pair."""


class DomainError(FrobsumError):
    """Well-formed input outside the mathematical domain of an operation."""


class PreconditionError(DomainError):
    """A theorem's hypothesis does not hold for the given input."""
