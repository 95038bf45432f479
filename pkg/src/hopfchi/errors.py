import os


class ValidationError(ValueError):
    """An input object does not satisfy the invariants of its kind."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured step budget."""


class DisagreementError(AssertionError):
    """Two independent computation routes produced different answers."""


class CyclicOrientationError(ValueError):
    pass


class CollisionError(AssertionError):
    """Two distinct acyclic orientations produced the same image hypergraph."""


DEFAULT_BUDGET = 10**7
_override: int | None = None


def set_default_budget(value: int | None) -> None:
    """Process-wide budget; ``None`` falls back to ``HOPFCHI_BUDGET`` or the default."""
    global _override
    _override = value


def default_budget() -> int:
    if _override is not None:
        return _override
    return int(os.environ.get("HOPFCHI_BUDGET", DEFAULT_BUDGET))
