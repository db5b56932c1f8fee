"""Exception types shared across the package."""


class ShapeError(ValueError):
    """A matrix does not have the structure an operation requires
    (unequal column moduli, zero column, wrong dimensions)."""


class FormatError(ValueError):
    """Malformed text input: bad scalar token, bad header, wrong row width."""


class InfeasibleError(Exception):
    """The requested realization provably does not exist for the given target."""


class ResourceLimitError(Exception):
    """An operation refused to run because it would exceed a size budget."""
