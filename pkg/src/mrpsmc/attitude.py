"""Rigid-body rotational dynamics and MRP attitude kinematics.

The attitude state is a modified Rodrigues parameter (MRP) vector
sigma in R^3; no magnitude restriction or shadow-set switching is
applied. The attitude error is the componentwise difference between the
current and desired MRP vectors (additive convention, not the
multiplicative MRP composition found elsewhere in the attitude
literature), and the desired frame is assumed fixed, so the error rate
equals the inertial attitude rate.
"""

from dataclasses import dataclass

import numpy as np

from .linalg3 import cross, is_symmetric_positive_definite, mat3, skew, solve3, vec3

# Symmetry / positive-definiteness tolerance for physical matrices.
SPD_TOL = 1e-9

_EYE3 = np.eye(3)


@dataclass(frozen=True)
class InertiaTensor:
    """Body-frame inertia about the center of mass, kg*m^2.

    Must be symmetric positive definite (checked on construction).
    """

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", mat3(self.matrix))
        if not is_symmetric_positive_definite(self.matrix, SPD_TOL):
            raise ValueError("inertia matrix must be symmetric positive definite")


@dataclass(frozen=True)
class BodyState:
    """Integrated state: body angular velocity (rad/s) and inertial MRP attitude."""

    omega: np.ndarray
    sigma_lb: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "omega", vec3(self.omega))
        object.__setattr__(self, "sigma_lb", vec3(self.sigma_lb))

    def as_array(self) -> np.ndarray:
        """Flatten to the 6-component ODE state vector [omega, sigma_lb]."""
        return np.concatenate([self.omega, self.sigma_lb])

    @staticmethod
    def from_array(y: np.ndarray) -> "BodyState":
        return BodyState(omega=y[:3], sigma_lb=y[3:])


def mrp_g_matrix(sigma: np.ndarray) -> np.ndarray:
    """Kinematics matrix G(sigma) mapping angular velocity to MRP rates.

    G(sigma) = 1/2 * ((1 - sigma.sigma)/2 * I - skew(sigma) + sigma sigma^T)
    """
    ss = sigma @ sigma
    return 0.5 * ((1.0 - ss) / 2.0 * _EYE3 - skew(sigma) + np.outer(sigma, sigma))


def mrp_rate(sigma_db: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """MRP attitude-error rate G(sigma_db) @ omega.

    Valid for a constant desired attitude with zero desired angular
    velocity, where the body rate relative to the desired frame equals
    the inertial body rate.
    """
    return mrp_g_matrix(sigma_db) @ omega


def body_accel(J: InertiaTensor, omega: np.ndarray, tau: np.ndarray) -> np.ndarray:
    """Angular acceleration from the rigid-body Euler equation.

    Solves J @ omega_dot = -omega x (J @ omega) + tau without forming
    an explicit inverse.
    """
    Jm = J.matrix
    return solve3(Jm, -cross(omega, Jm @ omega) + tau)


def attitude_error(sigma_lb: np.ndarray, sigma_ld: np.ndarray) -> np.ndarray:
    """Attitude error sigma_db = sigma_lb - sigma_ld (additive MRP convention)."""
    return sigma_lb - sigma_ld


def mrp_identity_residual(sigma: np.ndarray) -> float:
    """Residual of the MRP identity sigma^T G(sigma) = 1/4 (1 + sigma.sigma) sigma^T.

    Exact algebra, so the residual should sit at float rounding level for
    any finite sigma; used by the verification suite.
    """
    lhs = sigma @ mrp_g_matrix(sigma)
    rhs = 0.25 * (1.0 + sigma @ sigma) * sigma
    return float(np.linalg.norm(lhs - rhs))
