import json
from pathlib import Path

import numpy as np
import pytest

from mrpsmc.scenario import (
    Scenario,
    ScenarioError,
    load_scenario,
    reference_scenario,
    reference_scenario_text,
    scenario_from_dict,
)


def _reference_dict():
    return {
        "inertia": [1.49, 0.054, 0.0442, 0.054, 1.51, 0.0, 0.0442, 0.0, 1.56],
        "k1": 0.04,
        "k2": 0.04,
        "L": 0.04,
        "omega0": [0.0, -0.1, 0.0],
        "sigma_lb0": [0.0, 0.0, 0.0],
        "sigma_ld": [0.3333, -0.3333, -0.3333],
        "t_final": 300.0,
        "sample_dt": 0.1,
    }


class TestReferenceScenario:
    def test_bundled_values(self):
        sc = reference_scenario()
        expected_J = np.array([[1.49, 0.054, 0.0442],
                               [0.054, 1.51, 0.0],
                               [0.0442, 0.0, 1.56]])
        assert np.array_equal(sc.inertia.matrix, expected_J)
        assert sc.gains.k1 == 0.04 and sc.gains.k2 == 0.04
        assert np.array_equal(sc.gains.L, 0.04 * np.eye(3))
        assert np.array_equal(sc.omega0, [0.0, -0.1, 0.0])
        assert np.array_equal(sc.sigma_lb0, np.zeros(3))
        assert np.array_equal(sc.sigma_ld, [0.3333, -0.3333, -0.3333])
        assert sc.t_final == 300.0 and sc.sample_dt == 0.1

    def test_default_integrator(self):
        sc = reference_scenario()
        assert sc.integrator.rel_tol == 1e-10
        assert sc.integrator.abs_tol == 1e-12

    def test_repo_copy_matches_packaged_copy(self):
        repo_file = Path(__file__).resolve().parent.parent / "scenarios" / "reference.json"
        assert repo_file.read_text(encoding="utf-8") == reference_scenario_text()


class TestValidation:
    def test_round_trips_through_file(self, tmp_path):
        path = tmp_path / "case.json"
        path.write_text(json.dumps(_reference_dict()), encoding="utf-8")
        sc = load_scenario(path)
        assert sc.t_final == 300.0

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ScenarioError, match="not valid JSON"):
            load_scenario(path)

    def test_zero_k1(self):
        raw = _reference_dict()
        raw["k1"] = 0.0
        with pytest.raises(ScenarioError, match="k1 must be nonzero"):
            scenario_from_dict(raw)

    def test_opposite_sign_gains(self):
        raw = _reference_dict()
        raw["k2"] = -0.04
        with pytest.raises(ScenarioError, match=r"k1\*k2 must be positive"):
            scenario_from_dict(raw)

    def test_indefinite_l_matrix(self):
        raw = _reference_dict()
        raw["L"] = [1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0]
        with pytest.raises(ScenarioError, match="L is not positive definite"):
            scenario_from_dict(raw)

    def test_non_spd_inertia(self):
        raw = _reference_dict()
        raw["inertia"] = [1.0, 0.9, 0.0, 0.2, 1.0, 0.0, 0.0, 0.0, 1.0]
        with pytest.raises(ScenarioError, match="inertia"):
            scenario_from_dict(raw)

    def test_missing_key(self):
        raw = _reference_dict()
        del raw["omega0"]
        with pytest.raises(ScenarioError, match="missing scenario keys.*omega0"):
            scenario_from_dict(raw)

    def test_unknown_key(self):
        raw = _reference_dict()
        raw["omega_0"] = [0, 0, 0]
        with pytest.raises(ScenarioError, match="unknown scenario keys.*omega_0"):
            scenario_from_dict(raw)

    def test_wrong_vector_length(self):
        raw = _reference_dict()
        raw["sigma_ld"] = [0.1, 0.2]
        with pytest.raises(ScenarioError, match="sigma_ld must be a list of 3"):
            scenario_from_dict(raw)

    def test_non_numeric_entry(self):
        raw = _reference_dict()
        raw["omega0"] = [0.0, "fast", 0.0]
        with pytest.raises(ScenarioError, match=r"omega0\[1\]"):
            scenario_from_dict(raw)

    def test_bad_t_final(self):
        raw = _reference_dict()
        raw["t_final"] = -5.0
        with pytest.raises(ScenarioError, match="t_final must be positive"):
            scenario_from_dict(raw)

    def test_full_l_matrix_accepted(self):
        raw = _reference_dict()
        raw["L"] = [0.04, 0.0, 0.0, 0.0, 0.05, 0.0, 0.0, 0.0, 0.06]
        sc = scenario_from_dict(raw)
        assert sc.gains.scalar_l is None

    def test_integrator_override(self):
        raw = _reference_dict()
        raw["integrator"] = {"rel_tol": 1e-8, "abs_tol": 1e-10, "h_max": 0.5}
        sc = scenario_from_dict(raw)
        assert sc.integrator.rel_tol == 1e-8
        assert sc.integrator.h_max == 0.5
        assert sc.integrator.h_min == 1e-12

    def test_unknown_integrator_key(self):
        raw = _reference_dict()
        raw["integrator"] = {"reltol": 1e-8}
        with pytest.raises(ScenarioError, match="unknown integrator keys.*reltol"):
            scenario_from_dict(raw)

    def test_invalid_integrator_values(self):
        raw = _reference_dict()
        raw["integrator"] = {"rel_tol": 0.5}
        with pytest.raises(ScenarioError, match="integrator.*rel_tol"):
            scenario_from_dict(raw)

    def test_non_integer_max_steps(self):
        raw = _reference_dict()
        raw["integrator"] = {"max_steps": "many"}
        with pytest.raises(ScenarioError,
                           match="integrator.max_steps must be an integer"):
            scenario_from_dict(raw)


class TestScenarioType:
    def test_direct_construction_validates(self):
        sc = reference_scenario()
        with pytest.raises(ValueError, match="sample_dt"):
            Scenario(inertia=sc.inertia, gains=sc.gains, omega0=sc.omega0,
                     sigma_lb0=sc.sigma_lb0, sigma_ld=sc.sigma_ld,
                     t_final=10.0, sample_dt=0.0)

    def test_with_initial_conditions(self):
        sc = reference_scenario()
        sc2 = sc.with_initial_conditions([0.1, 0.0, 0.0], [0.2, 0.0, 0.0])
        assert np.array_equal(sc2.omega0, [0.1, 0.0, 0.0])
        assert sc2.t_final == sc.t_final
        # original untouched
        assert np.array_equal(sc.omega0, [0.0, -0.1, 0.0])
