"""Adaptive Dormand-Prince 5(4) integration of the closed-loop attitude ODE.

Explicit embedded Runge-Kutta pair: the 5th-order solution propagates,
the 4th-order one supplies the per-step error estimate. Standard
controller: a step is accepted when the RMS of the componentwise error,
scaled by abs_tol + rel_tol * |y|, is at most one; the step size is then
updated by the 1/5-power rule with safety factor 0.9 and the change
clamped to [0.2, 5.0]. The first-same-as-last property is exploited, so
an accepted step costs six new derivative evaluations.

Output lands on an equal-interval sample grid via the method's quartic
continuous extension, so the integrator never has to shorten steps to
hit sample times. Integration is fully deterministic: identical inputs
give bitwise-identical samples on a given platform.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .attitude import BodyState, InertiaTensor, attitude_error, body_accel, mrp_rate
from .smc import SmcGains, total_torque

# Derivative of the 6-component state: (t, BodyState) -> (omega_dot, sigma_lb_dot)
StateDerivative = Callable[[float, BodyState], tuple]

# Dormand-Prince 5(4) tableau. Row 7 of A equals the 5th-order weights
# (FSAL); E is the difference between the 5th- and 4th-order weights.
_C = (0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0)
_A = (
    np.array([1.0 / 5.0]),
    np.array([3.0 / 40.0, 9.0 / 40.0]),
    np.array([44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0]),
    np.array([19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0]),
    np.array([9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
              -5103.0 / 18656.0]),
)
_B = np.array([35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
               11.0 / 84.0])
_E = np.array([71.0 / 57600.0, 0.0, -71.0 / 16695.0, 71.0 / 1920.0,
               -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0])
# Coefficients of the quartic dense-output polynomial.
_D = np.array([-12715105075.0 / 11282082432.0, 0.0, 87487479700.0 / 32700410799.0,
               -10690763975.0 / 1880347072.0, 701980252875.0 / 199316789632.0,
               -1453857185.0 / 822651844.0, 69997945.0 / 29380423.0])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0


class IntegrationError(RuntimeError):
    """Base class for integration failures."""


class StepUnderflowError(IntegrationError):
    """The error test still fails at the minimum allowed step size."""


class MaxStepsExceededError(IntegrationError):
    """The step budget was exhausted before reaching the final time."""


class NonFiniteStateError(IntegrationError):
    """A state component became NaN or infinite during integration."""


@dataclass(frozen=True)
class IntegratorConfig:
    """Adaptive step-size control parameters (times in seconds)."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    h_init: float = 1e-3
    h_min: float = 1e-12
    h_max: float = 1.0
    max_steps: int = 10_000_000

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol"):
            tol = getattr(self, name)
            if not 0.0 < tol <= 0.1:
                raise ValueError(f"{name} must be in (0, 0.1], got {tol}")
        for name in ("h_init", "h_min", "h_max"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if not self.h_min <= self.h_init <= self.h_max:
            raise ValueError("h_min <= h_init <= h_max is required")
        if self.max_steps < 1:
            raise ValueError("max_steps must be a positive integer")


DEFAULT_CONFIG = IntegratorConfig()


@dataclass(frozen=True)
class SolutionSample:
    """One dense-output sample of the integrated state."""

    t: float
    state: BodyState


def closed_loop_derivative(
    J: InertiaTensor, gains: SmcGains, sigma_ld: np.ndarray
) -> StateDerivative:
    """Derivative of the controlled rigid body for a fixed desired attitude.

    Returns the time-invariant function (t, state) -> (omega_dot,
    sigma_lb_dot) with the control torque evaluated from the current
    attitude error; sigma_lb and sigma_db share the same rate because
    sigma_ld is constant.
    """
    sigma_ld = np.array(sigma_ld, dtype=float)

    def deriv(t: float, state: BodyState):
        sigma_db = attitude_error(state.sigma_lb, sigma_ld)
        tau = total_torque(J, gains, state.omega, sigma_db).tau
        return body_accel(J, state.omega, tau), mrp_rate(sigma_db, state.omega)

    return deriv


def _dp54_step(f, t: float, y: np.ndarray, h: float, k1: np.ndarray):
    """One trial step. Returns (y1, error_vector, K) with K the 7 stage slopes."""
    K = np.empty((7, y.size))
    K[0] = k1
    for i, (c, a) in enumerate(zip(_C[1:], _A), start=1):
        K[i] = f(t + c * h, y + h * (a @ K[:i]))
    y1 = y + h * (_B @ K[:6])
    K[6] = f(t + h, y1)
    return y1, h * (_E @ K), K


def _error_norm(err: np.ndarray, y0: np.ndarray, y1: np.ndarray,
                cfg: IntegratorConfig) -> float:
    scale = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(y0), np.abs(y1))
    return float(np.sqrt(np.mean((err / scale) ** 2)))


def _dense_coeffs(y0, y1, h, K):
    ydiff = y1 - y0
    bspl = h * K[0] - ydiff
    return (y0, ydiff, bspl, ydiff - h * K[6] - bspl, h * (_D @ K))


def _dense_eval(cont, theta: float) -> np.ndarray:
    c0, c1, c2, c3, c4 = cont
    t1 = 1.0 - theta
    return c0 + theta * (c1 + t1 * (c2 + theta * (c3 + t1 * c4)))


def _sample_grid(t_final: float, sample_dt: float) -> list:
    """Times 0, dt, 2*dt, ... capped so the last sample is exactly t_final."""
    n = int(math.floor((t_final / sample_dt) * (1.0 + 1e-12) + 1e-12))
    ts = [k * sample_dt for k in range(n + 1)]
    if abs(ts[-1] - t_final) <= 4.0 * np.spacing(t_final):
        ts[-1] = t_final
    elif ts[-1] < t_final:
        ts.append(t_final)
    return ts


def integrate(
    deriv: StateDerivative,
    y0: BodyState,
    t_final: float,
    cfg: Optional[IntegratorConfig] = None,
    sample_dt: float = 0.1,
) -> list:
    """Integrate the state ODE from t=0 to t_final with dense output.

    Parameters
    ----------
    deriv : callable (t, BodyState) -> (omega_dot, sigma_lb_dot)
        Right-hand side; must be defined for every finite state.
    y0 : BodyState
        Initial state at t = 0.
    t_final : float
        End time in seconds, > 0.
    cfg : IntegratorConfig, optional
        Step-control parameters; defaults to DEFAULT_CONFIG.
    sample_dt : float
        Output sampling interval in seconds, > 0.

    Returns
    -------
    list of SolutionSample at t = 0, sample_dt, 2*sample_dt, ..., t_final.

    Raises
    ------
    StepUnderflowError, MaxStepsExceededError, NonFiniteStateError
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG
    if t_final <= 0.0:
        raise ValueError("t_final must be positive")
    if sample_dt <= 0.0:
        raise ValueError("sample_dt must be positive")

    def f(t: float, y: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(y)):
            raise NonFiniteStateError(f"non-finite state at t={t:.6g}: {y}")
        dw, ds = deriv(t, BodyState.from_array(y))
        return np.concatenate([np.asarray(dw, dtype=float),
                               np.asarray(ds, dtype=float)])

    grid = _sample_grid(t_final, sample_dt)
    samples = [SolutionSample(t=grid[0], state=y0)]
    next_sample = 1

    t = 0.0
    y = y0.as_array()
    k1 = f(t, y)
    h = min(max(cfg.h_init, cfg.h_min), cfg.h_max, t_final)
    n_steps = 0

    while t < t_final:
        if n_steps >= cfg.max_steps:
            raise MaxStepsExceededError(
                f"exceeded {cfg.max_steps} steps at t={t:.6g} of {t_final:.6g}"
            )
        last = h >= t_final - t
        if last:
            h = t_final - t
        y1, err, K = _dp54_step(f, t, y, h, k1)
        n_steps += 1
        if not (np.all(np.isfinite(y1)) and np.all(np.isfinite(err))):
            raise NonFiniteStateError(f"non-finite state in step from t={t:.6g}")
        err_norm = _error_norm(err, y, y1, cfg)

        if err_norm <= 1.0:
            t_new = t_final if last else t + h
            cont = None
            while next_sample < len(grid) and grid[next_sample] <= t_new:
                ts = grid[next_sample]
                if ts == t_new:
                    state = BodyState.from_array(y1)
                else:
                    if cont is None:
                        cont = _dense_coeffs(y, y1, h, K)
                    state = BodyState.from_array(_dense_eval(cont, (ts - t) / h))
                samples.append(SolutionSample(t=ts, state=state))
                next_sample += 1
            t, y, k1 = t_new, y1, K[6]
            factor = _MAX_FACTOR if err_norm == 0.0 else min(
                _MAX_FACTOR, max(_MIN_FACTOR, _SAFETY * err_norm ** -0.2))
            h = min(max(h * factor, cfg.h_min), cfg.h_max)
        else:
            h *= max(_MIN_FACTOR, _SAFETY * err_norm ** -0.2)
            if h < cfg.h_min:
                raise StepUnderflowError(
                    f"step size underflow at t={t:.6g} (h={h:.3e} < h_min)"
                )

    return samples
