"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularOrdinate(ValueError):
    """Requested ordinate falls inside an excluded interval around a zeta zero.

    Callers integrating log|zeta| across such an interval must switch to
    singular-panel quadrature instead of sampling the point directly.
    """

    def __init__(self, u: float, interval: tuple) -> None:
        self.u = u
        self.interval = interval
        super().__init__(
            f"u={u} lies in excluded interval ({interval[0]}, {interval[1]}) "
            f"around zero ordinate {interval[2]}"
        )


class QuadratureError(RuntimeError):
    """Adaptive refinement hit its depth/panel cap before reaching tolerance.

    The best value obtained so far and its error estimate are attached.
    """

    def __init__(self, message: str, value, err_est: float) -> None:
        self.value = value
        self.err_est = err_est
        super().__init__(f"{message} (best value {value}, err_est {err_est:.3e})")
