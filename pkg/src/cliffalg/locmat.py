"""Infinite tensor products of matrix algebras at finite support.

Elements are finite sums of elementary tensors (identity off a finite set
of factors).  The normalized trace multiplies per-factor normalized traces;
the limit automorphism conjugates only the supported factors, which is the
stabilization property made literal.  The witness sequence exhibits an
automorphism that shrinks no norm while its input sequence tends to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import linalg, scalars
from .errors import (InvalidAutomorphismError, ShapeMismatchError,
                     UnsupportedDomainError)
from .scalars import Domain


@dataclass(frozen=True)
class FactorShape:
    """Per-factor matrix sizes (default constant 2) and a scalar domain."""

    domain: Domain = Domain.RATIONAL
    default_size: int = 2
    sizes: tuple = ()

    def __post_init__(self):
        for m in (self.default_size, *(m for _, m in self.sizes)):
            if m < 2 or m % 2:
                raise ValueError(f"factor sizes must be even and >= 2, got {m}")

    def size(self, i: int) -> int:
        for j, m in self.sizes:
            if j == i:
                return m
        return self.default_size

    def identity(self, i: int):
        one, zero = scalars.one(self.domain), scalars.zero(self.domain)
        return linalg.identity(self.size(i), one=one, zero=zero)


def _check_matrix(shape: FactorShape, i: int, matrix):
    m = shape.size(i)
    matrix = tuple(tuple(scalars.coerce(shape.domain, v) for v in row)
                   for row in matrix)
    if len(matrix) != m or any(len(row) != m for row in matrix):
        raise ShapeMismatchError(f"factor {i} expects {m}x{m} matrices")
    return matrix


@dataclass(frozen=True)
class TensorElement:
    """Finite sum of (coefficient, finitely supported factor -> matrix) terms."""

    shape: FactorShape
    terms: tuple = ()

    @staticmethod
    def build(shape: FactorShape, terms) -> "TensorElement":
        canon = []
        for coeff, factors in terms:
            coeff = scalars.coerce(shape.domain, coeff)
            factors = tuple(sorted((int(i), _check_matrix(shape, i, m))
                                   for i, m in dict(factors).items()))
            canon.append((coeff, factors))
        return TensorElement(shape, tuple(canon))

    @staticmethod
    def identity(shape: FactorShape) -> "TensorElement":
        return TensorElement.build(shape, [(1, {})])

    @staticmethod
    def zero(shape: FactorShape) -> "TensorElement":
        return TensorElement(shape, ())

    @staticmethod
    def single(shape: FactorShape, coeff, factors: Mapping[int, object]) -> "TensorElement":
        return TensorElement.build(shape, [(coeff, factors)])

    def support(self) -> tuple[int, ...]:
        out = set()
        for _, factors in self.terms:
            out.update(i for i, _ in factors)
        return tuple(sorted(out))

    def flatten(self, support: tuple[int, ...]):
        """Single matrix on the given support (Kronecker, ascending factors)."""
        dim = 1
        for i in support:
            dim *= self.shape.size(i)
        one, zero = scalars.one(self.shape.domain), scalars.zero(self.shape.domain)
        acc = linalg.zeros(dim, dim, zero=zero)
        for coeff, factors in self.terms:
            fmap = dict(factors)
            m = linalg.identity(1, one=one, zero=zero)
            for i in support:
                m = linalg.kron(m, fmap.get(i, self.shape.identity(i)))
            acc = linalg.mat_add(acc, linalg.mat_scale(m, coeff))
        return acc

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.shape != other.shape:
            return False
        support = tuple(sorted(set(self.support()) | set(other.support())))
        return self.flatten(support) == other.flatten(support)

    def __hash__(self):
        return hash((self.shape, self.support()))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _check_shape(self, other)
        return TensorElement(self.shape, self.terms + other.terms)

    def scale(self, value) -> "TensorElement":
        value = scalars.coerce(self.shape.domain, value)
        return TensorElement(self.shape,
                             tuple((c * value, f) for c, f in self.terms))

    def adjoint(self) -> "TensorElement":
        """Conjugate coefficients, conjugate-transpose every factor."""
        terms = []
        for coeff, factors in self.terms:
            terms.append((scalars.conjugate(self.shape.domain, coeff),
                          tuple((i, linalg.conj_transpose(m)) for i, m in factors)))
        return TensorElement(self.shape, tuple(terms))


def _check_shape(a: TensorElement, b: TensorElement):
    if a.shape != b.shape:
        raise ShapeMismatchError("tensor elements built over different shapes")


def tp_product(a: TensorElement, b: TensorElement) -> TensorElement:
    """Termwise product: multiply matching factors, identity where absent."""
    _check_shape(a, b)
    terms = []
    for ca, fa in a.terms:
        fa = dict(fa)
        for cb, fb in b.terms:
            fb = dict(fb)
            merged = {}
            for i in set(fa) | set(fb):
                ma = fa.get(i, a.shape.identity(i))
                mb = fb.get(i, a.shape.identity(i))
                merged[i] = linalg.mat_mul(ma, mb)
            terms.append((ca * cb, tuple(sorted(merged.items()))))
    return TensorElement(a.shape, tuple(terms))


def tp_trace(a: TensorElement):
    """Normalized trace: per term, product of (1/m_i) * matrix trace."""
    total = scalars.zero(a.shape.domain)
    for coeff, factors in a.terms:
        value = coeff
        for i, m in factors:
            value = value * linalg.mat_trace(m) / a.shape.size(i)
        total = total + value
    return total


def tp_norm(a: TensorElement):
    """tr(a * adjoint(a)); real scalar domains only."""
    if not a.shape.domain.is_real:
        raise UnsupportedDomainError(
            f"tp_norm is defined over real domains, not {a.shape.domain.value}")
    return tp_trace(tp_product(a, a.adjoint()))


class LocalAutomorphism:
    """Per-factor conjugation family, identity outside an element's support.

    The rule gives x_i for any factor index; inverses are computed (and
    memoized) on demand, raising InvalidAutomorphismError when singular.
    """

    def __init__(self, shape: FactorShape, rule: Callable[[int], object]):
        self.shape = shape
        self.rule = rule
        self._inverses: dict[int, object] = {}

    @staticmethod
    def identity(shape: FactorShape) -> "LocalAutomorphism":
        return LocalAutomorphism(shape, shape.identity)

    @staticmethod
    def from_factors(shape: FactorShape, factors: Mapping[int, object]) -> "LocalAutomorphism":
        factors = {i: _check_matrix(shape, i, m) for i, m in factors.items()}
        return LocalAutomorphism(
            shape, lambda i: factors.get(i, shape.identity(i)))

    @staticmethod
    def index_scaling(shape: FactorShape) -> "LocalAutomorphism":
        """x_i = diag(I_k, i * I_k) with the literal factor index i."""
        def rule(i: int):
            m = shape.size(i)
            k = m // 2
            one, zero = scalars.one(shape.domain), scalars.zero(shape.domain)
            scale = scalars.coerce(shape.domain, i)
            return tuple(tuple((one if r < k else scale) if r == c else zero
                               for c in range(m)) for r in range(m))
        return LocalAutomorphism(shape, rule)

    def matrix(self, i: int):
        return _check_matrix(self.shape, i, self.rule(i))

    def inverse_matrix(self, i: int):
        inv = self._inverses.get(i)
        if inv is None:
            try:
                inv = linalg.mat_inverse(self.matrix(i))
            except ZeroDivisionError as exc:
                raise InvalidAutomorphismError(
                    f"conjugating matrix at factor {i} is singular") from exc
            self._inverses[i] = inv
        return inv

    def inverted(self) -> "LocalAutomorphism":
        return LocalAutomorphism(self.shape, self.inverse_matrix)


def limit_automorphism_apply(phi: LocalAutomorphism,
                             a: TensorElement) -> TensorElement:
    """Conjugate each supported factor: m -> x_i^{-1} m x_i.

    This orientation scales the upper block nilpotent at factor i by the
    index-scaling rule's lower diagonal entry.
    """
    _check_shape(TensorElement(phi.shape), a)
    terms = []
    for coeff, factors in a.terms:
        new = tuple((i, linalg.mat_mul(linalg.mat_mul(phi.inverse_matrix(i), m),
                                       phi.matrix(i)))
                    for i, m in factors)
        terms.append((coeff, new))
    return TensorElement(a.shape, tuple(terms))


def block_nilpotent(shape: FactorShape, i: int) -> TensorElement:
    """[[0, I_k], [0, 0]] at factor i (k = m_i / 2), identity elsewhere."""
    m = shape.size(i)
    k = m // 2
    one, zero = scalars.one(shape.domain), scalars.zero(shape.domain)
    mat = tuple(tuple(one if c == r + k else zero for c in range(m))
                for r in range(m))
    return TensorElement.single(shape, 1, {i: mat})


def witness_sequence(n_max: int, shape: FactorShape | None = None):
    """Pairs (||b_n||, ||phi(b_n)||) for b_n = (1/n) * nilpotent at factor n.

    The first components tend to zero while the second stay constant, so the
    limit automorphism is not norm-continuous.
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    shape = shape or FactorShape()
    phi = LocalAutomorphism.index_scaling(shape)
    out = []
    for n in range(1, n_max + 1):
        b = block_nilpotent(shape, n).scale(Fraction(1, n))
        out.append((tp_norm(b), tp_norm(limit_automorphism_apply(phi, b))))
    return out
