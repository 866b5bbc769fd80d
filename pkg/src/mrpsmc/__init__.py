"""Rigid-body spacecraft attitude simulation with a linear continuous
sliding-mode controller using modified Rodrigues parameters feedback."""

from .attitude import (
    BodyState,
    InertiaTensor,
    attitude_error,
    body_accel,
    mrp_g_matrix,
    mrp_identity_residual,
    mrp_rate,
)
from .dopri import (
    IntegrationError,
    IntegratorConfig,
    MaxStepsExceededError,
    NonFiniteStateError,
    SolutionSample,
    StepUnderflowError,
    closed_loop_derivative,
    integrate,
)
from .linalg3 import (
    SingularMatrixError,
    cross,
    is_symmetric_positive_definite,
    mat3,
    skew,
    solve3,
    vec3,
)
from .plots import emit_plots
from .scenario import Scenario, ScenarioError, load_scenario, reference_scenario
from .smc import (
    LyapunovSample,
    SmcGains,
    equivalent_control,
    lyapunov_sample,
    reaching_control,
    sliding_variable,
    total_torque,
)
from .sweep import SweepRow, run_sweep, settling_time, write_sweep_csv
from .telemetry import TelemetryRecord, read_csv, run_simulation, write_csv
from .verify import VerificationReport, run_checks

__version__ = "0.1.0"

__all__ = [
    "BodyState",
    "InertiaTensor",
    "IntegrationError",
    "IntegratorConfig",
    "LyapunovSample",
    "MaxStepsExceededError",
    "NonFiniteStateError",
    "Scenario",
    "ScenarioError",
    "SingularMatrixError",
    "SmcGains",
    "SolutionSample",
    "SweepRow",
    "TelemetryRecord",
    "VerificationReport",
    "attitude_error",
    "body_accel",
    "closed_loop_derivative",
    "cross",
    "emit_plots",
    "equivalent_control",
    "integrate",
    "is_symmetric_positive_definite",
    "load_scenario",
    "lyapunov_sample",
    "mat3",
    "mrp_g_matrix",
    "mrp_identity_residual",
    "mrp_rate",
    "reaching_control",
    "read_csv",
    "reference_scenario",
    "run_checks",
    "run_simulation",
    "run_sweep",
    "settling_time",
    "skew",
    "sliding_variable",
    "solve3",
    "total_torque",
    "vec3",
    "write_csv",
    "write_sweep_csv",
]
