"""Linear continuous sliding-mode attitude control law.

The sliding variable is xi = k1*omega + k2*sigma_db. The control torque
is the sum of an equivalent control (which cancels the plant drift so
the state, once on the surface xi = 0, stays there) and a reaching
control that is linear in xi, hence "linear continuous": the law has no
switching term and cannot chatter. Substituting the full law into the
closed loop collapses the sliding-variable dynamics to xi_dot = -L @ xi.

The Lyapunov diagnostics expose V = xi.xi/2 with its analytic rate
-xi^T L xi, plus an augmented function Vbar that certifies convergence
of the state itself; Vbar is only defined when L is a positive scalar
multiple of the identity (the augmented argument needs 2*k1*k2*L to be
a positive multiple of I).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .attitude import SPD_TOL, InertiaTensor, mrp_g_matrix
from .linalg3 import cross, is_symmetric_positive_definite, mat3


@dataclass(frozen=True)
class SmcGains:
    """Controller gains: scalars k1, k2 and positive-definite 3x3 matrix L.

    k1 and k2 must be nonzero with k1*k2 > 0; both-negative pairs are
    accepted (the law only depends on k2/k1 and L*xi/k1, so flipping the
    sign of both gains leaves the torque unchanged).
    """

    k1: float
    k2: float
    L: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "L", mat3(self.L))
        if self.k1 == 0.0:
            raise ValueError("k1 must be nonzero")
        if self.k2 == 0.0:
            raise ValueError("k2 must be nonzero")
        if self.k1 * self.k2 <= 0.0:
            raise ValueError("k1*k2 must be positive")
        if not is_symmetric_positive_definite(self.L, SPD_TOL):
            raise ValueError("L is not positive definite")

    @property
    def scalar_l(self) -> Optional[float]:
        """The scalar lam with L == lam*I (within SPD_TOL), or None."""
        lam = float(np.trace(self.L)) / 3.0
        if lam > 0.0 and np.max(np.abs(self.L - lam * np.eye(3))) <= SPD_TOL:
            return lam
        return None

    @property
    def kbar(self) -> Optional[float]:
        """Augmented-Lyapunov gain 2*k1*k2*lam for scalar L, else None."""
        lam = self.scalar_l
        if lam is None:
            return None
        return 2.0 * self.k1 * self.k2 * lam


@dataclass(frozen=True)
class LyapunovSample:
    """Lyapunov diagnostics at one state.

    V = xi.xi/2 and its analytic rate -xi^T L xi are always present.
    Vbar and kbar are populated only when L is a positive scalar
    multiple of the identity.
    """

    V: float
    Vdot_analytic: float
    Vbar: Optional[float] = None
    kbar: Optional[float] = None


class TorqueBreakdown(NamedTuple):
    tau: np.ndarray
    u_eq: np.ndarray
    u_N: np.ndarray
    xi: np.ndarray


def sliding_variable(g: SmcGains, omega: np.ndarray, sigma_db: np.ndarray) -> np.ndarray:
    """Sliding variable xi = k1*omega + k2*sigma_db."""
    return g.k1 * omega + g.k2 * sigma_db


def equivalent_control(
    J: InertiaTensor, g: SmcGains, omega: np.ndarray, sigma_db: np.ndarray
) -> np.ndarray:
    """Equivalent control u_eq = omega x (J omega) - (k2/k1) J G(sigma_db) omega.

    Evaluated at every state, not only on the sliding surface: the
    closed-loop cancellation that yields xi_dot = -L xi needs the
    continuous law everywhere.
    """
    Jm = J.matrix
    Jw = Jm @ omega
    return cross(omega, Jw) - (g.k2 / g.k1) * (Jm @ (mrp_g_matrix(sigma_db) @ omega))


def reaching_control(J: InertiaTensor, g: SmcGains, xi: np.ndarray) -> np.ndarray:
    """Reaching control u_N = -(1/k1) J L xi; exactly zero on the surface."""
    return -(1.0 / g.k1) * (J.matrix @ (g.L @ xi))


def total_torque(
    J: InertiaTensor, g: SmcGains, omega: np.ndarray, sigma_db: np.ndarray
) -> TorqueBreakdown:
    """Full control torque tau = u_eq + u_N, with all pieces for telemetry."""
    xi = sliding_variable(g, omega, sigma_db)
    u_eq = equivalent_control(J, g, omega, sigma_db)
    u_N = reaching_control(J, g, xi)
    return TorqueBreakdown(tau=u_eq + u_N, u_eq=u_eq, u_N=u_N, xi=xi)


def lyapunov_sample(g: SmcGains, xi: np.ndarray, sigma_db: np.ndarray) -> LyapunovSample:
    """Lyapunov values at a state: V, its analytic rate, and Vbar when defined."""
    V = 0.5 * float(xi @ xi)
    Vdot = -float(xi @ (g.L @ xi))
    kbar = g.kbar
    if kbar is None:
        return LyapunovSample(V=V, Vdot_analytic=Vdot)
    Vbar = V + 2.0 * kbar * math.log1p(float(sigma_db @ sigma_db))
    return LyapunovSample(V=V, Vdot_analytic=Vdot, Vbar=Vbar, kbar=kbar)
