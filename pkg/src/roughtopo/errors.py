"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RoughTopoError(ValueError):
    """Base class for all errors raised by roughtopo."""


class EmptyUniverse(RoughTopoError):
    def __init__(self) -> None:
        super().__init__("universe must contain at least one element")


class DuplicateLabel(RoughTopoError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"duplicate label {name!r}")


class UnknownLabel(RoughTopoError):
    def __init__(self, name: object) -> None:
        self.name = name
        super().__init__(f"unknown label {name!r}")


class UniverseTooLarge(RoughTopoError):
    def __init__(self, size: int, cap: int) -> None:
        self.size = size
        super().__init__(f"universe of size {size} exceeds the cap of {cap}")


class UniverseMismatch(RoughTopoError):
    def __init__(self) -> None:
        super().__init__("operands live on different universes")


class NotACover(RoughTopoError):
    """The family's union misses some elements, so it cannot be a subbase."""

    def __init__(self, uncovered) -> None:
        self.uncovered = uncovered
        super().__init__(f"family does not cover the universe; uncovered: {uncovered}")


class NotATopology(RoughTopoError):
    pass


class NotSubfamily(RoughTopoError):
    def __init__(self, missing) -> None:
        self.missing = missing
        super().__init__(f"{missing} is not an open set of the topology")


class SizeOutOfRange(RoughTopoError):
    pass


class UnknownProposition(RoughTopoError):
    def __init__(self, prop: str) -> None:
        self.prop = prop
        super().__init__(f"unknown proposition {prop!r}")


class InvalidConfig(RoughTopoError):
    pass


class RelationFormatError(RoughTopoError):
    """Malformed relation file. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
