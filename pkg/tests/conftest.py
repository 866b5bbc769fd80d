import time

import pytest

from mrpsmc import reference_scenario, run_simulation


@pytest.fixture(scope="session")
def reference_case():
    return reference_scenario()


@pytest.fixture(scope="session")
def reference_run(reference_case):
    """Reference telemetry plus the wall-clock time of the simulation."""
    t0 = time.perf_counter()
    records = run_simulation(reference_case)
    elapsed = time.perf_counter() - t0
    return records, elapsed


@pytest.fixture(scope="session")
def reference_records(reference_run):
    return reference_run[0]
