"""Exception types and the exhaustive-scan budget."""

import os

DEFAULT_BUDGET = 24
BUDGET_ENV = "CORE_LATTICE_BUDGET"


class NotASemigroupError(ValueError):
    """A numerical set that was required to be closed under addition is not."""


class BudgetExceededError(ValueError):
    """An exhaustive scan would visit more than 2**budget objects."""


def exhaustive_budget():
    """Largest exponent an exhaustive scan may use (2**budget objects).

    Read from ``CORE_LATTICE_BUDGET`` when set, otherwise ``DEFAULT_BUDGET``.
    """
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def check_budget(exponent, what, budget=None):
    if budget is None:
        budget = exhaustive_budget()
    if exponent > budget:
        raise BudgetExceededError(
            f"{what}: 2^{exponent} objects exceeds exhaustive budget 2^{budget} "
            f"(raise {BUDGET_ENV} to allow it)"
        )
