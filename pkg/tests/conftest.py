from __future__ import annotations

import random
from itertools import combinations
from time import perf_counter

import pytest

from racdraw import GraphInput, ValidationMode, draw_complete, validate


@pytest.fixture(scope="session")
def k16():
    return draw_complete(16)


@pytest.fixture(scope="session")
def k81():
    return draw_complete(81)


@pytest.fixture(scope="session")
def k16_filtered(k16):
    start = perf_counter()
    report = validate(k16, ValidationMode.FILTERED)
    return report, perf_counter() - start


@pytest.fixture(scope="session")
def k16_brute(k16):
    start = perf_counter()
    report = validate(k16, ValidationMode.BRUTE_FORCE)
    return report, perf_counter() - start


@pytest.fixture(scope="session")
def k81_filtered(k81):
    start = perf_counter()
    report = validate(k81, ValidationMode.FILTERED)
    return report, perf_counter() - start


def random_graph(rng: random.Random, max_n: int = 81, max_m: int = 100) -> GraphInput:
    n = rng.randint(2, max_n)
    pool = list(combinations(range(n), 2))
    rng.shuffle(pool)
    m = rng.randint(0, min(max_m, len(pool)))
    return GraphInput(n=n, edges=tuple(pool[:m]))
