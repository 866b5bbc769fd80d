"""Closed-loop simulation runs and CSV telemetry.

Each telemetry record carries the sampled state together with every
controller internal, so a reader of the CSV alone can re-derive the
record's own consistency: tau = u_eq + u_N and xi = k1*omega +
k2*sigma_db hold componentwise in every row.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .attitude import BodyState, InertiaTensor, attitude_error
from .dopri import closed_loop_derivative, integrate
from .scenario import Scenario
from .smc import SmcGains, lyapunov_sample, total_torque

CSV_HEADER = (
    "t,omega1,omega2,omega3,sigma_lb1,sigma_lb2,sigma_lb3,"
    "sigma_db1,sigma_db2,sigma_db3,xi1,xi2,xi3,u_eq1,u_eq2,u_eq3,"
    "u_N1,u_N2,u_N3,tau1,tau2,tau3,V,Vdot,Vbar"
)


@dataclass(frozen=True, eq=False)
class TelemetryRecord:
    """One sampled time point with state, controller internals, and Lyapunov values."""

    t: float
    omega: np.ndarray
    sigma_lb: np.ndarray
    sigma_db: np.ndarray
    xi: np.ndarray
    u_eq: np.ndarray
    u_N: np.ndarray
    tau: np.ndarray
    V: float
    Vdot: float
    Vbar: Optional[float] = None


def telemetry_records(samples, inertia: InertiaTensor, gains: SmcGains,
                      sigma_ld: np.ndarray) -> list:
    """Decorate integrator samples with controller internals and Lyapunov values."""
    records = []
    for s in samples:
        omega, sigma_lb = s.state.omega, s.state.sigma_lb
        sigma_db = attitude_error(sigma_lb, sigma_ld)
        tb = total_torque(inertia, gains, omega, sigma_db)
        ly = lyapunov_sample(gains, tb.xi, sigma_db)
        records.append(TelemetryRecord(
            t=s.t, omega=omega, sigma_lb=sigma_lb, sigma_db=sigma_db,
            xi=tb.xi, u_eq=tb.u_eq, u_N=tb.u_N, tau=tb.tau,
            V=ly.V, Vdot=ly.Vdot_analytic, Vbar=ly.Vbar,
        ))
    return records


def run_simulation(scenario: Scenario) -> list:
    """Integrate the closed loop for a scenario; deterministic for fixed inputs."""
    deriv = closed_loop_derivative(scenario.inertia, scenario.gains,
                                   scenario.sigma_ld)
    y0 = BodyState(omega=scenario.omega0, sigma_lb=scenario.sigma_lb0)
    samples = integrate(deriv, y0, scenario.t_final, scenario.integrator,
                        scenario.sample_dt)
    return telemetry_records(samples, scenario.inertia, scenario.gains,
                             scenario.sigma_ld)


def _fmt(x: float) -> str:
    # repr of a Python float is the shortest string that round-trips;
    # integer-valued floats drop the redundant ".0".
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def write_csv(records, path) -> None:
    """Write telemetry as UTF-8 CSV with full round-trip precision.

    The Vbar column is left empty when the augmented Lyapunov function
    is undefined (non-scalar L).
    """
    if not records:
        raise ValueError("no telemetry records to write")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fields = [_fmt(r.t)]
            for v in (r.omega, r.sigma_lb, r.sigma_db, r.xi, r.u_eq, r.u_N, r.tau):
                fields.extend(_fmt(x) for x in v)
            fields.append(_fmt(r.V))
            fields.append(_fmt(r.Vdot))
            fields.append("" if r.Vbar is None else _fmt(r.Vbar))
            fh.write(",".join(fields) + "\n")


def read_csv(path) -> list:
    """Parse a telemetry CSV written by write_csv back into records."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if header != CSV_HEADER:
            raise ValueError(f"unexpected telemetry header: {header!r}")
        records = []
        for line in fh:
            parts = line.rstrip("\n").split(",")
            if len(parts) != 25:
                raise ValueError(f"expected 25 fields, got {len(parts)}")
            vals = [float(p) for p in parts[:24]]
            records.append(TelemetryRecord(
                t=vals[0],
                omega=np.array(vals[1:4]),
                sigma_lb=np.array(vals[4:7]),
                sigma_db=np.array(vals[7:10]),
                xi=np.array(vals[10:13]),
                u_eq=np.array(vals[13:16]),
                u_N=np.array(vals[16:19]),
                tau=np.array(vals[19:22]),
                V=vals[22],
                Vdot=vals[23],
                Vbar=None if parts[24] == "" else float(parts[24]),
            ))
    return records
