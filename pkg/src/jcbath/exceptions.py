"""Exceptions raised by the jcbath library."""


class ConfigurationError(ValueError):
    """Unsupported or inconsistent parameter combination."""


class DegenerateSteadyStateError(RuntimeError):
    """The generator kernel is not one-dimensional, so no unique steady state exists.

    Carries the detected kernel dimension in ``kernel_dim``. A kernel
    dimension above one means several stationary states coexist (for
    example when a dark state is present) and the steady state depends on
    the initial condition; use time evolution instead.
    """

    def __init__(self, kernel_dim: int):
        self.kernel_dim = kernel_dim
        super().__init__(
            f"generator kernel dimension is {kernel_dim}, expected 1; "
            "the stationary state is not unique"
        )


class IntegrationError(RuntimeError):
    """The adaptive integrator failed to advance the solution.

    ``t_fail`` holds the time at which stepping broke down.
    """

    def __init__(self, message: str, t_fail: float):
        self.t_fail = t_fail
        super().__init__(f"{message} (at t={t_fail:g})")


class NoPeakError(RuntimeError):
    """A series contains no interior local maximum."""
