from fractions import Fraction

import pytest

from cliffalg.core import Blade, Context, Multivector, mv_product
from cliffalg.derivations import OrthogonalMap
from cliffalg.automorphisms import bogolyubov_apply
from cliffalg.errors import UnsupportedDomainError
from cliffalg.matrix_rep import build_rep, normalized_trace, represent
from cliffalg.scalars import Domain
from cliffalg.trace_norm import norm, trace

from conftest import random_multivector

CTX = Context.make()


def mv(terms):
    return Multivector(CTX, {Blade.from_indices(ix): Fraction(c)
                             for ix, c in terms.items()})


def test_trace_of_unit():
    assert trace(Multivector.unit(CTX)) == 1


def test_trace_of_bivector_is_zero():
    assert trace(mv({(1, 2): 1})) == 0


def test_trace_is_linear():
    assert trace(mv({(): 3, (1,): 5})) == 3


def test_traciality(rng):
    for _ in range(100):
        a = random_multivector(rng, CTX)
        b = random_multivector(rng, CTX)
        assert trace(mv_product(a, b)) == trace(mv_product(b, a))


def test_trace_matches_normalized_matrix_trace():
    gctx = Context.make(Domain.GAUSSIAN)
    rep = build_rep(3)
    for bits in range(2 ** 6):
        a = Multivector.blade(gctx, Blade(bits))
        assert normalized_trace(represent(rep, a)) == trace(a)


class TestNorm:
    def test_closed_form_two_terms(self):
        assert norm(mv({(): 1, (1,): 1})) == 2

    def test_zero(self):
        assert norm(Multivector.zero(CTX)) == 0

    def test_scaled_bivector(self):
        assert norm(mv({(1, 2): Fraction(1, 2)})) == Fraction(1, 4)

    def test_equals_sum_of_squared_coefficients(self, rng):
        for _ in range(100):
            a = random_multivector(rng, CTX)
            assert norm(a) == sum((c * c for c in a.terms.values()), Fraction(0))

    def test_positive_on_nonzero(self, rng):
        for _ in range(50):
            a = random_multivector(rng, CTX)
            if not a.is_zero:
                assert norm(a) > 0

    def test_general_signature_closed_form(self):
        ctx = Context.make(Domain.RATIONAL, overrides={1: Fraction(3)})
        a = Multivector.blade(ctx, Blade.of(1), Fraction(2))
        assert norm(a) == 12  # alpha^2 * q_1

    def test_refuses_complex_domains(self):
        gctx = Context.make(Domain.GAUSSIAN)
        with pytest.raises(UnsupportedDomainError):
            norm(Multivector.unit(gctx))

    def test_not_submultiplicative(self):
        # documented discrepancy: with a = 1 + v1, ||a*a|| = 8 > ||a||^2 = 4
        a = mv({(): 1, (1,): 1})
        assert norm(mv_product(a, a)) == 8
        assert norm(a) * norm(a) == 4

    def test_invariant_under_signed_permutations(self, rng):
        # a Bogolyubov change of orthonormal basis v_i -> +/- v_sigma(i)
        indices = list(range(1, 7))
        for _ in range(25):
            perm = indices[:]
            rng.shuffle(perm)
            matrix = [[Fraction(0)] * 6 for _ in range(6)]
            for col, target in enumerate(perm):
                matrix[target - 1][col] = Fraction(rng.choice((1, -1)))
            phi = OrthogonalMap.build(CTX, tuple(indices), matrix)
            a = random_multivector(rng, CTX, max_index=6)
            assert norm(bogolyubov_apply(phi, a)) == norm(a)
