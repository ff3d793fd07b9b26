from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings

from jordan_hopf.catalog import build_algebra
from jordan_hopf.scalars import FieldCfg

settings.register_profile("jordan", max_examples=40, deadline=None)
settings.load_profile("jordan")


@pytest.fixture(scope="session")
def f3() -> FieldCfg:
    return FieldCfg.prime(3)


@pytest.fixture(scope="session")
def f5() -> FieldCfg:
    return FieldCfg.prime(5)


@pytest.fixture(scope="session")
def qq() -> FieldCfg:
    return FieldCfg.rational()


@pytest.fixture(scope="session")
def btilde(f3):
    return build_algebra("Btilde", f3)


@pytest.fixture(scope="session")
def dh(f3):
    return build_algebra("DH", f3)


@pytest.fixture(scope="session")
def h3(f3):
    return build_algebra("H", f3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)
