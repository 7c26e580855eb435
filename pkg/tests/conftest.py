"""Shared builders for tests: fixture ideals and seeded random instances."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from multitype import GaussianRational, Polynomial, Weight


def variables(n: int) -> list[Polynomial]:
    return [Polynomial.variable(n, i) for i in range(n)]


@pytest.fixture
def three_vars():
    return variables(3)


@pytest.fixture
def four_vars():
    return variables(4)


@pytest.fixture
def example_three_var_ideal(three_vars):
    """The worked 3-variable fixture: (z1 - z2 + z3^2, z1^2 - z2^2)."""
    z1, z2, z3 = three_vars
    return [z1 - z2 + z3**2, z1**2 - z2**2]


@pytest.fixture
def example_four_var_ideal(four_vars):
    """The worked 4-variable fixture with the double row reduction."""
    z1, z2, z3, z4 = four_vars
    return [
        (z1 + z2 * z4) ** 2 + z2**4,
        (z1 + z2 * z3**2) ** 2,
        z2**9,
        z3**10,
        z4**12,
    ]


def random_monomial(rng: random.Random, nvars: int, max_degree: int) -> tuple[int, ...]:
    degree = rng.randint(1, max_degree)
    mono = [0] * nvars
    for _ in range(degree):
        mono[rng.randrange(nvars)] += 1
    return tuple(mono)


def random_coefficient(rng: random.Random) -> GaussianRational:
    while True:
        c = GaussianRational(rng.randint(-3, 3), rng.randint(-2, 2))
        if not c.is_zero():
            return c


def random_polynomial(
    rng: random.Random,
    nvars: int,
    max_terms: int = 3,
    max_degree: int = 4,
    allow_zero: bool = False,
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms_key = random_monomial(rng, nvars, max_degree)
        terms[terms_key] = random_coefficient(rng)
    p = Polynomial(nvars, terms)
    if p.is_zero() and not allow_zero:
        return Polynomial.variable(nvars, rng.randrange(nvars))
    return p


def random_generators(
    rng: random.Random,
    max_vars: int = 3,
    max_gens: int = 3,
    max_degree: int = 4,
) -> list[Polynomial]:
    nvars = rng.randint(1, max_vars)
    ngens = rng.randint(1, max_gens)
    return [random_polynomial(rng, nvars, max_degree=max_degree) for _ in range(ngens)]


def random_step_weight(
    rng: random.Random, nvars: int
) -> tuple[Weight, frozenset[int]]:
    """A weight shaped like an intermediate algorithm state: a nonempty proper
    leading set keeps larger entries, the rest share one smaller value."""
    leading_size = rng.randint(1, nvars - 1)
    leading = frozenset(rng.sample(range(nvars), leading_size))
    choices = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 6)]
    leading_values = {i: rng.choice(choices) for i in leading}
    floor = min(leading_values.values())
    tail = floor / rng.randint(2, 5)
    return (
        Weight(leading_values[i] if i in leading else tail for i in range(nvars)),
        leading,
    )


def weighted_monomial_at_least_half(
    rng: random.Random, nvars: int, w: Weight, max_degree: int = 6
) -> tuple[int, ...]:
    """Random monomial of weighted length >= 1/2, the shape generator monomials
    have in adapted coordinates."""
    mono = list(random_monomial(rng, nvars, max_degree))
    while sum(e * w[i] for i, e in enumerate(mono)) < Fraction(1, 2):
        mono[rng.randrange(nvars)] += 1
    return tuple(mono)
