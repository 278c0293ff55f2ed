import pytest

from twophoton import build_experiment, preset_config


@pytest.fixture(scope="session")
def experiment():
    return build_experiment(preset_config("paper-fig3"))


@pytest.fixture(scope="session")
def dot(experiment):
    return experiment.dot
