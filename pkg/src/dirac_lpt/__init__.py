"""Perturbation series and numerical eigenvalues for a Dirac particle in screened Coulomb fields."""

from .analysis import SumSequence, bracket_estimate, partial_sums
from .closed_forms import (
    ClosedFormInputs,
    closed_form_inputs,
    pure_vector_coefficients,
    vector_inputs_from_spec,
    yukawa_coefficients,
)
from .engine import (
    EnergySeries,
    LaurentTables,
    build_tables,
    compute_E0,
    energy_correction,
    energy_series,
    quantization_solve,
)
from .exceptions import (
    ConfigError,
    ConsistencyError,
    DegenerateQuantizationError,
    DegenerateStateError,
    InvalidStateError,
    NoBoundStateError,
    SupercriticalCouplingError,
    WrongStateError,
)
from .oracle import OracleResult, solve_bound_state
from .potentials import PotentialSpec, coulomb_spec, custom_spec, yukawa_spec
from .states import QuantumNumbers, make_state, principal_N

__all__ = [
    "ClosedFormInputs",
    "ConfigError",
    "ConsistencyError",
    "DegenerateQuantizationError",
    "DegenerateStateError",
    "EnergySeries",
    "InvalidStateError",
    "LaurentTables",
    "NoBoundStateError",
    "OracleResult",
    "PotentialSpec",
    "QuantumNumbers",
    "SumSequence",
    "SupercriticalCouplingError",
    "WrongStateError",
    "bracket_estimate",
    "build_tables",
    "closed_form_inputs",
    "compute_E0",
    "coulomb_spec",
    "custom_spec",
    "energy_correction",
    "energy_series",
    "make_state",
    "partial_sums",
    "principal_N",
    "pure_vector_coefficients",
    "quantization_solve",
    "solve_bound_state",
    "vector_inputs_from_spec",
    "yukawa_coefficients",
    "yukawa_spec",
]

__version__ = "0.1.0"
