"""Exact arithmetic in the Clifford algebra of a diagonal quadratic form.

Basis blades are ordered products of generators, stored as bitsets; a
multivector is a finitely supported blade -> scalar map tied to a context
(scalar domain + diagonal signature).  All values are immutable and all
operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import scalars
from .errors import DegenerateFormError, DomainMismatchError
from .scalars import Domain


@dataclass(frozen=True, order=True)
class Blade:
    """A strictly increasing set of generator indices, as a bitset.

    Bit k-1 set means generator index k is present; bits == 0 is the unit.
    """

    bits: int = 0

    @staticmethod
    def of(*indices: int) -> "Blade":
        return Blade.from_indices(indices)

    @staticmethod
    def from_indices(indices: Iterable[int]) -> "Blade":
        bits = 0
        for k in indices:
            if k < 1:
                raise ValueError(f"generator index must be >= 1, got {k}")
            if bits >> (k - 1) & 1:
                raise ValueError(f"duplicate generator index {k}")
            bits |= 1 << (k - 1)
        return Blade(bits)

    @property
    def indices(self) -> tuple[int, ...]:
        out = []
        bits, k = self.bits, 1
        while bits:
            if bits & 1:
                out.append(k)
            bits >>= 1
            k += 1
        return tuple(out)

    @property
    def grade(self) -> int:
        return self.bits.bit_count()

    @property
    def parity(self) -> int:
        return self.grade & 1

    @property
    def max_index(self) -> int:
        return self.bits.bit_length()

    def __contains__(self, k: int) -> bool:
        return k >= 1 and (self.bits >> (k - 1)) & 1 == 1

    def disjoint(self, other: "Blade") -> bool:
        return self.bits & other.bits == 0

    def sort_key(self):
        return (self.grade, self.indices)

    def __str__(self):
        if self.bits == 0:
            return "1"
        return "*".join(f"e{k}" for k in self.indices)


UNIT_BLADE = Blade(0)


@dataclass(frozen=True)
class Signature:
    """Diagonal form values q_i = f(v_i): a default plus finite overrides."""

    domain: Domain = Domain.RATIONAL
    default: object = Fraction(1)
    overrides: tuple = ()

    @staticmethod
    def build(domain: Domain, default=1, overrides: Mapping[int, object] | None = None):
        default = scalars.coerce(domain, default)
        if scalars.is_zero(default):
            raise DegenerateFormError("default signature value must be nonzero")
        items = []
        for k, v in sorted((overrides or {}).items()):
            v = scalars.coerce(domain, v)
            if scalars.is_zero(v):
                raise DegenerateFormError(f"signature value q_{k} is zero")
            items.append((int(k), v))
        return Signature(domain, default, tuple(items))

    def q(self, k: int):
        for i, v in self.overrides:
            if i == k:
                return v
        return self.default


@dataclass(frozen=True)
class Context:
    """Scalar domain + signature; fixed per computation."""

    domain: Domain = Domain.RATIONAL
    signature: Signature = Signature()

    @staticmethod
    def make(domain: Domain = Domain.RATIONAL, default=1, overrides=None) -> "Context":
        return Context(domain, Signature.build(domain, default, overrides))

    def q(self, k: int):
        return self.signature.q(k)


def blade_product(a: Blade, b: Blade, sig: Signature) -> tuple[object, Blade]:
    """Multiply two basis blades: returns (coefficient, symmetric difference).

    The sign counts index inversions of the concatenation (a then b); each
    shared index contributes its signature value via v_k**2 = q_k.
    """
    inversions = 0
    bits = b.bits
    t = 1
    while bits:
        if bits & 1:
            inversions += (a.bits >> t).bit_count()
        bits >>= 1
        t += 1
    coeff = scalars.one(sig.domain)
    if inversions & 1:
        coeff = -coeff
    common = a.bits & b.bits
    k = 1
    while common:
        if common & 1:
            qk = sig.q(k)
            if scalars.is_zero(qk):
                raise DegenerateFormError(f"signature value q_{k} is zero")
            coeff = coeff * qk
        common >>= 1
        k += 1
    return coeff, Blade(a.bits ^ b.bits)


class Multivector:
    """Finitely supported blade -> scalar map over a fixed context."""

    __slots__ = ("context", "terms")

    def __init__(self, context: Context, terms: Mapping[Blade, object] | None = None,
                 _canonical: bool = False):
        self.context = context
        if _canonical:
            self.terms = dict(terms or {})
        else:
            clean = {}
            for blade, coeff in (terms or {}).items():
                coeff = scalars.coerce(context.domain, coeff)
                if not scalars.is_zero(coeff):
                    clean[blade] = coeff
            self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(context: Context) -> "Multivector":
        return Multivector(context, {}, _canonical=True)

    @staticmethod
    def unit(context: Context) -> "Multivector":
        return Multivector(context, {UNIT_BLADE: scalars.one(context.domain)},
                           _canonical=True)

    @staticmethod
    def scalar(context: Context, value) -> "Multivector":
        return Multivector(context, {UNIT_BLADE: value})

    @staticmethod
    def generator(context: Context, k: int) -> "Multivector":
        return Multivector(context, {Blade.of(k): scalars.one(context.domain)},
                           _canonical=True)

    @staticmethod
    def blade(context: Context, blade: Blade, coeff=1) -> "Multivector":
        return Multivector(context, {blade: coeff})

    # -- structure ----------------------------------------------------

    def coeff(self, blade: Blade):
        return self.terms.get(blade, scalars.zero(self.context.domain))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[int]:
        out = 0
        for blade in self.terms:
            out |= blade.bits
        return frozenset(Blade(out).indices)

    def max_index(self) -> int:
        return max((blade.max_index for blade in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Blade, object]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Multivector"):
        if self.context != other.context:
            raise DomainMismatchError("operands built over different contexts")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        terms = dict(self.terms)
        for blade, coeff in other.terms.items():
            s = terms.get(blade)
            s = coeff if s is None else s + coeff
            if scalars.is_zero(s):
                terms.pop(blade, None)
            else:
                terms[blade] = s
        return Multivector(self.context, terms, _canonical=True)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.context, {b: -c for b, c in self.terms.items()},
                           _canonical=True)

    def scale(self, value) -> "Multivector":
        value = scalars.coerce(self.context.domain, value)
        if scalars.is_zero(value):
            return Multivector.zero(self.context)
        return Multivector(self.context,
                           {b: c * value for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            if other == 0:
                return self.is_zero
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __repr__(self):
        from .render import render

        return f"Multivector({render(self)})"


def linear_combine(pairs: Iterable[tuple[object, Multivector]],
                   context: Context | None = None) -> Multivector:
    """Sum of scalar multiples; operands must share one context."""
    pairs = list(pairs)
    if context is None:
        if not pairs:
            raise ValueError("empty combination needs an explicit context")
        context = pairs[0][1].context
    acc = Multivector.zero(context)
    for value, mv in pairs:
        if mv.context != context:
            raise DomainMismatchError("mixed contexts in linear combination")
        acc = acc + mv.scale(value)
    return acc


def mv_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the blade product."""
    a._check(b)
    sig = a.context.signature
    terms: dict[Blade, object] = {}
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            sign, blade = blade_product(ba, bb, sig)
            c = ca * cb * sign
            s = terms.get(blade)
            s = c if s is None else s + c
            if scalars.is_zero(s):
                terms.pop(blade, None)
            else:
                terms[blade] = s
    return Multivector(a.context, terms, _canonical=True)


def reverse(a: Multivector) -> Multivector:
    """The involution fixing V: blade of grade r picks up (-1)**(r(r-1)/2)."""
    terms = {}
    for blade, coeff in a.terms.items():
        r = blade.grade
        if (r * (r - 1) // 2) & 1:
            coeff = -coeff
        terms[blade] = coeff
    return Multivector(a.context, terms, _canonical=True)


def parity_project(a: Multivector, parity: str) -> Multivector:
    """Even or odd part by blade-grade parity."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == "even" else 1
    return Multivector(a.context,
                       {b: c for b, c in a.terms.items() if b.parity == want},
                       _canonical=True)
