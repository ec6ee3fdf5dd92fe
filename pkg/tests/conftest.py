import random

import pytest

from looprep import (
    LWeight,
    cyclotomic_context,
    gaussian_context,
    rational_context,
    root_system,
)


@pytest.fixture(scope="session")
def qi():
    """L = Q(i), H = full group, K = Q."""
    return gaussian_context()


@pytest.fixture(scope="session")
def cyclo5():
    """5th cyclotomic field, H = full cyclic group of order 4, K = Q."""
    return cyclotomic_context(5)


@pytest.fixture(scope="session")
def cyclo5_half():
    """5th cyclotomic field with H = {id, theta -> theta^4}, K = Q(sqrt 5)."""
    return cyclotomic_context(5, [0, 3])


@pytest.fixture(scope="session")
def zeta8():
    """8th cyclotomic field Q(i, sqrt 2), H = full group, K = Q."""
    return cyclotomic_context(8)


@pytest.fixture(scope="session")
def trivial_ctx():
    return rational_context()


@pytest.fixture(scope="session")
def a1():
    return root_system("A1")


@pytest.fixture(scope="session")
def a2():
    return root_system("A2")


@pytest.fixture(scope="session")
def b2():
    return root_system("B2")


@pytest.fixture(scope="session")
def g2():
    return root_system("G2")


def point_pool(ctx):
    """A mix of rational and irrational nonzero points of the context."""
    field = ctx.field
    theta = field.gen
    pool = [field.scalar(2), field.scalar(-3), theta, -theta, 2 * theta,
            field.one + theta]
    if field.degree >= 4:
        pool += [theta * theta, theta + theta ** (field.degree - 1)]
    return [p for p in pool if p]


def random_dominant(ctx, rs, rng: random.Random, max_support=3, max_exp=2):
    pool = point_pool(ctx)
    factors = {}
    for _ in range(rng.randint(1, max_support)):
        node = rng.randrange(rs.rank)
        point = rng.choice(pool)
        factors[(node, point)] = factors.get((node, point), 0) + rng.randint(1, max_exp)
    return LWeight(ctx, rs, factors)


def random_lweight(ctx, rs, rng: random.Random, max_support=3, max_exp=2):
    """Possibly non-dominant: exponents may be negative."""
    pool = point_pool(ctx)
    factors = {}
    for _ in range(rng.randint(1, max_support)):
        node = rng.randrange(rs.rank)
        point = rng.choice(pool)
        exp = rng.choice([-2, -1, 1, 2])
        factors[(node, point)] = factors.get((node, point), 0) + exp
    return LWeight(ctx, rs, factors)
