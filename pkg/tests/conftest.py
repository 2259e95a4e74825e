import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.algebra.galois_field import build_field  # noqa: E402


@pytest.fixture
def gf3():
    return build_field(3, 1)


@pytest.fixture
def gf5():
    return build_field(5, 1)


@pytest.fixture
def gf7():
    return build_field(7, 1)


@pytest.fixture
def gf9():
    return build_field(3, 2)


@pytest.fixture
def gf25():
    return build_field(5, 2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
