from functools import lru_cache

import pytest

from exotictilt import build_root_system


@lru_cache(maxsize=None)
def get_rs(spec):
    """Shared root systems; their memo tables are idempotent caches."""
    return build_root_system(spec)


@pytest.fixture
def a1():
    return get_rs("A1")


@pytest.fixture
def a2():
    return get_rs("A2")


@pytest.fixture
def b2():
    return get_rs("B2")


@pytest.fixture
def g2():
    return get_rs("G2")
