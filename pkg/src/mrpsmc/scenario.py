"""Scenario configuration: JSON schema, validation, and the bundled reference case.

A scenario file is a single JSON object with the keys

    inertia    : 9 reals, row-major body inertia matrix (kg*m^2)
    k1, k2     : controller scalars, nonzero with k1*k2 > 0
    L          : either a positive scalar lam (meaning lam*I) or 9 reals
                 row-major; must be symmetric positive definite
    omega0     : 3 reals, initial body angular velocity (rad/s)
    sigma_lb0  : 3 reals, initial inertial MRP attitude
    sigma_ld   : 3 reals, constant desired MRP attitude
    t_final    : simulation horizon (s), > 0
    sample_dt  : telemetry sampling interval (s), > 0
    integrator : optional object overriding IntegratorConfig defaults
                 (rel_tol, abs_tol, h_init, h_min, h_max, max_steps)

Unknown keys are rejected so typos cannot silently fall back to defaults.
"""

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from numbers import Real

import numpy as np

from .attitude import InertiaTensor
from .dopri import IntegratorConfig
from .linalg3 import vec3
from .smc import SmcGains


class ScenarioError(ValueError):
    """A scenario file is malformed or violates a validity constraint."""


@dataclass(frozen=True)
class Scenario:
    """A fully validated simulation case."""

    inertia: InertiaTensor
    gains: SmcGains
    omega0: np.ndarray
    sigma_lb0: np.ndarray
    sigma_ld: np.ndarray
    t_final: float
    sample_dt: float
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)

    def __post_init__(self):
        object.__setattr__(self, "omega0", vec3(self.omega0))
        object.__setattr__(self, "sigma_lb0", vec3(self.sigma_lb0))
        object.__setattr__(self, "sigma_ld", vec3(self.sigma_ld))
        if self.t_final <= 0.0:
            raise ValueError("t_final must be positive")
        if self.sample_dt <= 0.0:
            raise ValueError("sample_dt must be positive")

    def with_initial_conditions(self, omega0, sigma_lb0) -> "Scenario":
        return replace(self, omega0=omega0, sigma_lb0=sigma_lb0)


_TOP_KEYS = {"inertia", "k1", "k2", "L", "omega0", "sigma_lb0", "sigma_ld",
             "t_final", "sample_dt", "integrator"}
_REQUIRED_KEYS = _TOP_KEYS - {"integrator"}
_INTEGRATOR_KEYS = {"rel_tol", "abs_tol", "h_init", "h_min", "h_max", "max_steps"}


def _real(value, key: str) -> float:
    if not isinstance(value, Real) or isinstance(value, bool):
        raise ScenarioError(f"{key} must be a real number, got {value!r}")
    return float(value)


def _reals(value, n: int, key: str) -> list:
    if not isinstance(value, list) or len(value) != n:
        raise ScenarioError(f"{key} must be a list of {n} reals")
    return [_real(x, f"{key}[{i}]") for i, x in enumerate(value)]


def _int(value, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{key} must be an integer, got {value!r}")
    return value


def scenario_from_dict(raw: dict) -> Scenario:
    """Validate a parsed JSON object into a Scenario.

    Raises ScenarioError with a message naming the offending field.
    """
    if not isinstance(raw, dict):
        raise ScenarioError("scenario must be a JSON object")
    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ScenarioError(f"unknown scenario keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(raw)
    if missing:
        raise ScenarioError(f"missing scenario keys: {sorted(missing)}")

    inertia_rows = _reals(raw["inertia"], 9, "inertia")
    k1 = _real(raw["k1"], "k1")
    k2 = _real(raw["k2"], "k2")

    L = raw["L"]
    if isinstance(L, Real) and not isinstance(L, bool):
        L = float(L) * np.eye(3)
    else:
        L = np.array(_reals(L, 9, "L")).reshape(3, 3)

    cfg = IntegratorConfig()
    if "integrator" in raw:
        over = raw["integrator"]
        if not isinstance(over, dict):
            raise ScenarioError("integrator must be an object")
        unknown = set(over) - _INTEGRATOR_KEYS
        if unknown:
            raise ScenarioError(f"unknown integrator keys: {sorted(unknown)}")
        kwargs = {k: (_int(v, f"integrator.{k}") if k == "max_steps"
                      else _real(v, f"integrator.{k}"))
                  for k, v in over.items()}
        try:
            cfg = IntegratorConfig(**kwargs)
        except ValueError as exc:
            raise ScenarioError(f"integrator: {exc}") from exc

    try:
        inertia = InertiaTensor(np.array(inertia_rows).reshape(3, 3))
    except ValueError as exc:
        raise ScenarioError(f"inertia: {exc}") from exc
    try:
        gains = SmcGains(k1=k1, k2=k2, L=L)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc

    try:
        return Scenario(
            inertia=inertia,
            gains=gains,
            omega0=_reals(raw["omega0"], 3, "omega0"),
            sigma_lb0=_reals(raw["sigma_lb0"], 3, "sigma_lb0"),
            sigma_ld=_reals(raw["sigma_ld"], 3, "sigma_ld"),
            t_final=_real(raw["t_final"], "t_final"),
            sample_dt=_real(raw["sample_dt"], "sample_dt"),
            integrator=cfg,
        )
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc


def load_scenario(path) -> Scenario:
    """Load and validate a scenario JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: not valid JSON ({exc})") from exc
    return scenario_from_dict(raw)


def reference_scenario_text() -> str:
    """Raw JSON text of the bundled reference scenario."""
    return resources.files(__package__).joinpath(
        "scenarios/reference.json").read_text(encoding="utf-8")


def reference_scenario() -> Scenario:
    """The bundled reference case shipped with the package."""
    return scenario_from_dict(json.loads(reference_scenario_text()))
