"""Exception types shared across the package."""

__all__ = ["InputError", "InvariantError", "DeltaBelowDistance"]


class InputError(ValueError):
    """Caller-supplied data is malformed (bad dimensions, empty input, bad values)."""


class InvariantError(RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""


class DeltaBelowDistance(InputError):
    """Witness threshold is smaller than the closed distance, so no coupling survives."""
