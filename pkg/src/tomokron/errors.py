"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """An enumeration or degree cap was hit before the computation finished."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds cap {cap}")
        self.what = what
        self.cap = cap


class SizeMismatch(ValueError):
    pass


class HypothesisNotMet(ValueError):
    """The input does not satisfy the hypothesis of the checked statement.

    Raised instead of returning False so that "not applicable" is never
    confused with "statement falsified".
    """


class NotInPolytope(ValueError):
    """A triangular array violates one of the conditions Po, CS, Sh, Co."""

    def __init__(self, condition, index=None):
        msg = f"condition {condition} violated"
        if index is not None:
            msg += f" at {index}"
        super().__init__(msg)
        self.condition = condition
        self.index = index
