"""Shared fixtures. The three scenario runs at default resolution are the
expensive pieces (a propagation is ~3M kernel evaluations), so they run once
per session and every test reads from the same results.
"""
import pytest

import slitwave as sw


@pytest.fixture(scope="session")
def default_config():
    return sw.ExperimentConfig().resolve()


@pytest.fixture(scope="session")
def interference_result(default_config):
    return sw.scenario_interference(default_config)


@pytest.fixture(scope="session")
def lens_result(default_config):
    return sw.scenario_lens_image(default_config)


@pytest.fixture(scope="session")
def wires_result(default_config):
    return sw.scenario_wires(default_config)
