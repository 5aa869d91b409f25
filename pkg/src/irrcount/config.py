"""Global enumeration budget.

Every counting call that walks a full field checks the field order against
this budget, so the cost of a brute-force step is always explicit.  The
default can be overridden by the IRRCOUNT_BUDGET environment variable or at
runtime with set_budget().
"""

import os

DEFAULT_BUDGET = 2**28

_budget = None


def budget() -> int:
    global _budget
    if _budget is None:
        env = os.environ.get("IRRCOUNT_BUDGET")
        _budget = int(env) if env else DEFAULT_BUDGET
    return _budget


def set_budget(value) -> None:
    """Set the element-visit budget; None restores the default/env value."""
    global _budget
    if value is not None:
        value = int(value)
        if value <= 0:
            raise ValueError("budget must be positive")
    _budget = value


def check_budget(size: int, what: str = "enumeration") -> None:
    from .errors import BudgetExceeded

    if size > budget():
        raise BudgetExceeded(f"{what} needs {size} element visits, budget is {budget()}")
