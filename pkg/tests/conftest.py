import numpy as np
import pytest
from hypothesis import settings

from unigraph.generate import domino

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def dom():
    return domino()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
