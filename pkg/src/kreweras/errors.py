"""Exception types shared across the package."""


class InvalidPartitionError(ValueError):
    """Block list is not a set partition of [1, n]."""


class CrossingPartitionError(InvalidPartitionError):
    """Partition is a valid set partition but has a crossing."""

    def __init__(self, quadruple):
        self.quadruple = quadruple
        a, b, c, d = quadruple
        super().__init__(
            f"crossing blocks: {a} < {b} < {c} < {d} with {a},{c} and {b},{d} in different blocks"
        )


class InvalidTreeError(ValueError):
    """Malformed Dyck word or edge list."""


class SizeMismatchError(ValueError):
    """Two objects that must share the same n do not."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation would exceed the configured cap."""


class InconsistencyError(ArithmeticError):
    """An exact division left a remainder; indicates an arithmetic bug."""
