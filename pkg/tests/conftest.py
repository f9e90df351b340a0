from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polyspline.fixtures import FIXTURES, load_fixture, random_triangulation  # noqa: E402

RANDOM_TRIANGULATION_ARGS = [(0, 5, 2), (1, 6, 3), (2, 7, 4), (3, 5, 3), (4, 6, 2)]


def random_affine_maps(seed: int, count: int = 3):
    """Invertible rational affine maps, reproducible per seed."""
    rng = random.Random(seed)
    maps = []
    while len(maps) < count:
        m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2)] for _ in range(2)]
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            continue
        offset = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        maps.append((m, offset))
    return maps


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def triangulations():
    return [random_triangulation(*args) for args in RANDOM_TRIANGULATION_ARGS]
