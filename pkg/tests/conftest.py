import os
import random
from fractions import Fraction

import pytest

from newtonloj.poly import SparsePoly
from newtonloj.rational import GaussianRational


def corpus_seed() -> int:
    return int(os.environ.get("NEWTONLOJ_SEED", "12345"))


def random_poly(
    rng: random.Random,
    max_deg: int = 10,
    max_support: int = 12,
    gaussian: bool = False,
) -> SparsePoly:
    """Random nonzero polynomial with per-variable degree <= max_deg."""
    size = rng.randint(1, max_support)
    terms = {}
    for _ in range(size):
        a, b = rng.randint(0, max_deg), rng.randint(0, max_deg)
        re = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        im = rng.choice([-2, -1, 0, 0, 1, 2]) if gaussian else 0
        terms[(a, b)] = GaussianRational(Fraction(re), Fraction(im))
    return SparsePoly(terms)


@pytest.fixture
def rng():
    return random.Random(corpus_seed())
