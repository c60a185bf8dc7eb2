"""Exception types shared across the package."""


class InvalidStateError(ValueError):
    """Quantum-number combination that cannot occur."""


class SupercriticalCouplingError(ValueError):
    """Coupling too strong for the bound-state formulas to apply."""


class NoBoundStateError(RuntimeError):
    """No bound level exists for the requested parameters."""


class DegenerateStateError(RuntimeError):
    """Leading energy sits exactly at +/-m, so the recursion prefactor vanishes."""


class DegenerateQuantizationError(RuntimeError):
    """The quantization condition does not determine the requested correction."""


class WrongStateError(RuntimeError):
    """Eigenvalue search converged onto a state with the wrong node count."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed beyond tolerance."""

    def __init__(self, message, order=None, residual=None):
        super().__init__(message)
        self.order = order
        self.residual = residual


class ConfigError(ValueError):
    """Invalid run configuration; carries the offending field path."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
