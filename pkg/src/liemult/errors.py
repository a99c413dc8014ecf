"""Exception types shared across the package."""


class ConstructionError(ValueError):
    """Inadmissible Cartan type (unknown series or rank out of range)."""


class ResourceGuardError(RuntimeError):
    """A computation was refused because it exceeds a configured size bound."""


class SingularParameterError(ValueError):
    """A numeric parameter assignment makes a recursion denominator vanish."""

    def __init__(self, step: int, denominator):
        self.step = step
        self.denominator = denominator
        super().__init__(
            f"parameter assignment makes denominator {denominator} of "
            f"recursion step {step} vanish"
        )
