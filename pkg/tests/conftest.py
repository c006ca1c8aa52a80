import pytest

from gapprob import constants
from gapprob.gapcount import DrawSpec


@pytest.fixture
def lotto():
    return DrawSpec(49, 6)


@pytest.fixture(autouse=True)
def default_constants(monkeypatch):
    monkeypatch.setattr(constants, 'DEFAULT_DIGITS', 6)
    monkeypatch.setattr(constants, 'THREADS', 1)
    monkeypatch.setattr(constants, 'ENUMERATION_BUDGET', 20_000_000)
    monkeypatch.setattr(constants, 'USE_DISTRIBUTION_CACHE', False)
