import random

from sympy import QQ, QQ_I

from .gauss import GaussQ


def random_rational(rng: random.Random, height: int = 3):
    return QQ(rng.randint(-height, height), rng.randint(1, height))


def random_gauss(rng: random.Random, height: int = 3) -> GaussQ:
    return QQ_I.new(random_rational(rng, height), random_rational(rng, height))


def random_vector(rng: random.Random, length: int, height: int = 3) -> list[GaussQ]:
    return [random_gauss(rng, height) for _ in range(length)]


def random_rows(rng: random.Random, nrows: int, ncols: int, height: int = 3) -> list[list[GaussQ]]:
    return [random_vector(rng, ncols, height) for _ in range(nrows)]


def seeded(seed: int, label: str) -> random.Random:
    """Independent stream per consumer so results do not depend on scheduling order."""
    return random.Random(f"{seed}:{label}")
