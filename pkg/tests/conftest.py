import json
import pathlib

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)


@pytest.fixture(scope="session")
def goldens():
    path = pathlib.Path(__file__).parent / "goldens.json"
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def random_state(rng, n):
    """Haar-ish normalized state via complex Gaussians."""
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)
