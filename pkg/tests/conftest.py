"""Shared fixtures for the test suite."""
import sys
from pathlib import Path

import pytest

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.models import FamilyParams
from src.testfn import WeightFunction, make_testfn


@pytest.fixture
def gaussian():
    return WeightFunction("gaussian")


@pytest.fixture
def fejer15():
    return make_testfn("fejer", 1.5)


@pytest.fixture
def family_1e4(gaussian):
    return FamilyParams(X=1e4, d_cutoff=gaussian.d_cutoff(1e4), c_prime=0.1)


@pytest.fixture
def zero_cache(tmp_path):
    """Isolated zero cache directory."""
    return tmp_path / "zeros"
