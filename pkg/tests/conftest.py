"""Shared oracles and random-input helpers for the test suite."""

import random
from fractions import Fraction

import pytest

from cliffalg.core import Blade, Context, Multivector


def naive_blade_product(s_indices, t_indices, q):
    """Independent oracle: sort the concatenation by adjacent transpositions
    (each swap flips the sign) and contract equal neighbours via v_k^2 = q_k."""
    seq = list(s_indices) + list(t_indices)
    coeff = Fraction(1)
    i = 0
    while i + 1 <= len(seq) - 1:
        if seq[i] == seq[i + 1]:
            coeff *= q(seq[i])
            del seq[i:i + 2]
            i = max(i - 1, 0)
        elif seq[i] > seq[i + 1]:
            seq[i], seq[i + 1] = seq[i + 1], seq[i]
            coeff = -coeff
            i = max(i - 1, 0)
        else:
            i += 1
    return coeff, tuple(seq)


def naive_reverse_sign(indices, q):
    """Oracle for the involution: fully reverse the factor sequence, then
    sort it back, tracking the sign."""
    coeff, sorted_back = naive_blade_product(tuple(reversed(indices)), (), q)
    assert sorted_back == tuple(indices)
    return coeff


def random_blade(rng, max_index=8, parity=None):
    while True:
        indices = sorted(rng.sample(range(1, max_index + 1),
                                    rng.randint(0, min(4, max_index))))
        if parity is None or len(indices) % 2 == parity:
            return Blade.from_indices(indices)


def random_rational(rng):
    num = rng.randint(-6, 6)
    return Fraction(num if num else 1, rng.randint(1, 5))


def random_multivector(rng, ctx, max_index=8, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[random_blade(rng, max_index)] = random_rational(rng)
    return Multivector(ctx, terms)


@pytest.fixture
def rng():
    return random.Random(20240814)


@pytest.fixture
def ctx():
    return Context.make()
