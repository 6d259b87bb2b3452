"""Faithful matrix representations of Cl(V_2k, q == 1), used as trace oracles.

The ladder construction sends generator 2j-1 to Z..Z X I..I and generator 2j
to Z..Z Y I..I (Kronecker factors), giving 2k anticommuting square roots of
the identity in dimension 2**k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, scalars
from .core import Blade, Multivector, UNIT_BLADE
from .errors import SupportRangeError, UnsupportedDomainError
from .scalars import Domain, GaussianRational
from .trace_norm import trace

_ZERO = GaussianRational.of(0)
_ONE = GaussianRational.of(1)
_I = GaussianRational.of(0, 1)

PAULI_X = ((_ZERO, _ONE), (_ONE, _ZERO))
PAULI_Y = ((_ZERO, -_I), (_I, _ZERO))
PAULI_Z = ((_ONE, _ZERO), (_ZERO, -_ONE))


@dataclass
class MatrixRep:
    """2k generator matrices of size 2**k over the Gaussian rationals."""

    k: int
    gens: tuple
    dim: int
    _blade_cache: dict = field(default_factory=dict, repr=False)

    def identity(self):
        return linalg.identity(self.dim, one=_ONE, zero=_ZERO)


def build_rep(k: int) -> MatrixRep:
    """Ladder representation for k generator pairs; dim = 2**k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gens = []
    for j in range(1, k + 1):
        for pauli in (PAULI_X, PAULI_Y):
            m = linalg.identity(1, one=_ONE, zero=_ZERO)
            for pos in range(1, k + 1):
                if pos < j:
                    factor = PAULI_Z
                elif pos == j:
                    factor = pauli
                else:
                    factor = linalg.identity(2, one=_ONE, zero=_ZERO)
                m = linalg.kron(m, factor)
            gens.append(m)
    return MatrixRep(k=k, gens=tuple(gens), dim=2 ** k)


def _blade_matrix(rep: MatrixRep, blade: Blade):
    cached = rep._blade_cache.get(blade)
    if cached is not None:
        return cached
    if blade == UNIT_BLADE:
        m = rep.identity()
    else:
        indices = blade.indices
        first = indices[0]
        rest = Blade.from_indices(indices[1:])
        m = linalg.mat_mul(rep.gens[first - 1], _blade_matrix(rep, rest))
    rep._blade_cache[blade] = m
    return m


def represent(rep: MatrixRep, a: Multivector):
    """Evaluation homomorphism on multivectors supported in {1..2k}, q == 1."""
    if a.max_index() > 2 * rep.k:
        raise SupportRangeError(
            f"support reaches index {a.max_index()}, representation covers {2 * rep.k}")
    one = scalars.one(a.context.domain)
    for i in a.support():
        if a.context.q(i) != one:
            raise UnsupportedDomainError(
                "matrix representations require q == 1 on the support")
    if a.context.domain not in (Domain.RATIONAL, Domain.GAUSSIAN):
        raise UnsupportedDomainError(
            "matrix representations are exact; use rational or gaussian domains")
    acc = linalg.zeros(rep.dim, rep.dim, zero=_ZERO)
    for blade, coeff in a.terms.items():
        g = scalars.coerce(Domain.GAUSSIAN, coeff)
        acc = linalg.mat_add(acc, linalg.mat_scale(_blade_matrix(rep, blade), g))
    return acc


def diagonal_embed(small, copies: int):
    """diag(a, ..., a); preserves the normalized trace."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    return linalg.block_diag(small, copies, zero=_ZERO)


def normalized_trace(m):
    return linalg.mat_trace(m) / len(m)


def verify_trace_coherence(a: Multivector, k_small: int, k_large: int) -> bool:
    """Normalized matrix traces agree across representation sizes and equal trace(a)."""
    if not (a.max_index() <= 2 * k_small <= 2 * k_large):
        raise SupportRangeError(
            f"need support <= 2*k_small <= 2*k_large, got "
            f"{a.max_index()}, {2 * k_small}, {2 * k_large}")
    t_small = normalized_trace(represent(build_rep(k_small), a))
    t_large = normalized_trace(represent(build_rep(k_large), a))
    expected = scalars.coerce(Domain.GAUSSIAN, trace(a))
    return t_small == t_large == expected


def blade_images_independent(rep: MatrixRep) -> bool:
    """Faithfulness: the 2**(2k) ordered generator products are independent.

    Blade images are monomial (Pauli-word) matrices, so nonzero-ness plus
    pairwise Hilbert-Schmidt orthogonality is an exact independence
    certificate; a dense rank check is the fallback if any pairing is
    nonzero.
    """
    sparse = []
    for bits in range(2 ** (2 * rep.k)):
        m = _blade_matrix(rep, Blade(bits))
        entries = {(r, c): v for r, row in enumerate(m)
                   for c, v in enumerate(row) if v}
        if not entries:
            return False
        sparse.append(entries)
    for i in range(len(sparse)):
        for j in range(i + 1, len(sparse)):
            a, b = sparse[i], sparse[j]
            if len(b) < len(a):
                a, b = b, a
            hs = sum((a[pos] * b[pos].conjugate() for pos in a if pos in b),
                     _ZERO)
            if hs:
                return _dense_independent(rep)
    return True


def _dense_independent(rep: MatrixRep) -> bool:
    rows = []
    for bits in range(2 ** (2 * rep.k)):
        m = _blade_matrix(rep, Blade(bits))
        rows.append([x for row in m for x in row])
    return linalg.rank(rows) == len(rows)
