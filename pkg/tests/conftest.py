from __future__ import annotations

import pytest

from planex.census import triangulations
from planex.enumerate import brute_force_triangulations


@pytest.fixture(scope="session")
def brute_sets():
    cache: dict = {}

    def get(n: int):
        if n not in cache:
            cache[n] = brute_force_triangulations(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def all_triangulations():
    """Every triangulation with 4 <= n <= 10, one per isomorphism class."""
    return {n: triangulations(n).graphs() for n in range(4, 11)}
