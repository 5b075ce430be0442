"""Exceptions shared across the package."""


class PoleError(ArithmeticError):
    """An evaluation hit (or came within the guard band of) a pole."""


class GraphFormatError(ValueError):
    """A plumbing-graph description failed parsing or validation."""


class CapacityError(ValueError):
    """A combinatorial enumeration would exceed the supported size."""
