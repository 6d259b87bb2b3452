"""Factor chains: commuting subalgebras A_i and the block isomorphisms.

Given even cuts 0 = n_0 < n_1 < ... the volume elements c_i = v_1...v_{n_i}
(rescaled by i when n_i is divisible by 4, so that c_i**2 == -1 always)
twist the odd part of each block subalgebra into A_i; the A_i commute
pairwise and jointly generate the truncated algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg, scalars
from .core import (Blade, Context, Multivector, mv_product, parity_project)
from .errors import (InvalidChainError, MembershipError, SupportRangeError,
                     UnsupportedDomainError)


@dataclass(frozen=True)
class FactorChain:
    """Even cut sequence with cached effective volume elements."""

    context: Context
    cuts: tuple[int, ...]
    c: tuple[Multivector, ...]
    adjusted: tuple[bool, ...]

    def block(self, i: int) -> range:
        """Generator indices of block i (1-based): (n_{i-1}, n_i]."""
        self._check_index(i)
        lo = self.cuts[i - 2] if i >= 2 else 0
        return range(lo + 1, self.cuts[i - 1] + 1)

    def _check_index(self, i: int):
        if not 1 <= i <= len(self.cuts):
            raise SupportRangeError(f"factor index {i} outside 1..{len(self.cuts)}")


def chain_build(cuts, context: Context) -> FactorChain:
    cuts = tuple(int(n) for n in cuts)
    if not cuts or any(n % 2 for n in cuts) or any(
            b <= a for a, b in zip(cuts, cuts[1:])) or cuts[0] < 2:
        raise InvalidChainError(
            f"cuts must be even, positive, strictly increasing: {cuts}")
    one = scalars.one(context.domain)
    for k in range(1, cuts[-1] + 1):
        if context.q(k) != one:
            raise UnsupportedDomainError(
                f"factor chains require q == 1 up to the last cut (q_{k} != 1)")
    cs, adjusted = [], []
    minus_one = Multivector.scalar(context, -1)
    for n in cuts:
        blade = Blade((1 << n) - 1)
        needs_i = n % 4 == 0
        if needs_i and not context.domain.has_i:
            raise UnsupportedDomainError(
                f"cut {n} needs the imaginary unit; use a domain containing i")
        coeff = scalars.imaginary_unit(context.domain) if needs_i \
            else scalars.one(context.domain)
        c = Multivector.blade(context, blade, coeff)
        if mv_product(c, c) != minus_one:
            raise InvalidChainError(f"volume element for cut {n} does not square to -1")
        cs.append(c)
        adjusted.append(needs_i)
    return FactorChain(context, cuts, tuple(cs), tuple(adjusted))


def _check_block_support(chain: FactorChain, i: int, u: Multivector):
    block = set(chain.block(i))
    if not set(u.support()) <= block:
        raise SupportRangeError(
            f"support {sorted(u.support())} not inside block {i} = {sorted(block)}")


def phi_apply(chain: FactorChain, i: int, u: Multivector) -> Multivector:
    """Block isomorphism onto A_i: even part fixed, odd part times c_i."""
    _check_block_support(chain, i, u)
    even = parity_project(u, "even")
    odd = parity_project(u, "odd")
    return even + mv_product(chain.c[i - 1], odd)


def phi_inverse(chain: FactorChain, i: int, a: Multivector) -> Multivector:
    """Inverse of phi_apply; raises MembershipError off A_i."""
    chain._check_index(i)
    block = set(chain.block(i))
    even_terms, rest_terms = {}, {}
    for blade, coeff in a.terms.items():
        if blade.parity == 0 and set(blade.indices) <= block:
            even_terms[blade] = coeff
        else:
            rest_terms[blade] = coeff
    even = Multivector(chain.context, even_terms, _canonical=True)
    rest = Multivector(chain.context, rest_terms, _canonical=True)
    # c_i**2 == -1, so the c_i-component is recovered by -c_i * rest
    odd = mv_product(-chain.c[i - 1], rest)
    if not set(odd.support()) <= block or parity_project(odd, "even") != \
            Multivector.zero(chain.context):
        raise MembershipError(f"element is not in A_{i}")
    return even + odd


def factor_generators(chain: FactorChain, i: int) -> list[Multivector]:
    """Images phi_i(v_p) for p in block i."""
    return [phi_apply(chain, i, Multivector.generator(chain.context, p))
            for p in chain.block(i)]


def factor_basis(chain: FactorChain, i: int) -> list[Multivector]:
    """Images of all basis blades of block i under phi_i."""
    block = list(chain.block(i))
    out = []
    for mask in range(1 << len(block)):
        blade = Blade.from_indices(p for b, p in enumerate(block) if mask >> b & 1)
        out.append(phi_apply(chain, i, Multivector.blade(chain.context, blade)))
    return out


def commutator_check(chain: FactorChain, i: int, j: int) -> bool:
    """[A_i, A_j] == 0, checked on the generator images exhaustively."""
    chain._check_index(i)
    chain._check_index(j)
    if i == j:
        raise ValueError("commutator_check needs two distinct factors")
    for a in factor_generators(chain, i):
        for b in factor_generators(chain, j):
            if mv_product(a, b) != mv_product(b, a):
                return False
    return True


def rewrite_generator(chain: FactorChain, k: int) -> list[Multivector]:
    """Factors, one per A_j, whose ordered product is v_k.

    For k in block i >= 2: v_k = (-c_i) * (c_i v_k), and -c_i splits into one
    even block blade per preceding factor (the unit rescaling rides on the
    first factor).
    """
    if not 1 <= k <= chain.cuts[-1]:
        raise SupportRangeError(f"index {k} exceeds the last cut {chain.cuts[-1]}")
    ctx = chain.context
    i = next(idx for idx in range(1, len(chain.cuts) + 1)
             if k in chain.block(idx))
    vk = Multivector.generator(ctx, k)
    if i == 1:
        return [vk]
    factors = []
    for j in range(1, i + 1):
        block_blade = Blade.from_indices(chain.block(j))
        factors.append(Multivector.blade(ctx, block_blade))
    lam = scalars.imaginary_unit(ctx.domain) if chain.adjusted[i - 1] \
        else scalars.one(ctx.domain)
    factors[0] = factors[0].scale(-lam)
    factors.append(phi_apply(chain, i, vk))
    return factors


def spanning_rank(chain: FactorChain) -> int:
    """Exact rank of the products of per-factor basis images.

    Every product is a single signed blade, so distinct result blades give
    the rank directly; a dense elimination is the fallback otherwise.
    """
    bases = [factor_basis(chain, i) for i in range(1, len(chain.cuts) + 1)]
    products = []
    monomial = True
    for combo in itertools.product(*bases):
        p = combo[0]
        for f in combo[1:]:
            p = mv_product(p, f)
        products.append(p)
        if len(p.terms) != 1:
            monomial = False
    if monomial:
        return len({next(iter(p.terms)) for p in products})
    blades = sorted({b for p in products for b in p.terms},
                    key=lambda b: b.sort_key())
    index = {b: pos for pos, b in enumerate(blades)}
    zero = scalars.zero(chain.context.domain)
    rows = []
    for p in products:
        row = [zero] * len(blades)
        for b, c in p.terms.items():
            row[index[b]] = c
        rows.append(row)
    return linalg.rank(rows)
