"""Bogolyubov automorphisms from orthogonal maps, and inner conjugations.

A form-preserving map on V extends multiplicatively to the whole algebra;
conjugation is u_inv * a * u with the inverse supplied (and checked) by the
caller, the orientation that scales the upper-triangular nilpotent by the
conjugating diagonal's lower entry.
"""

from __future__ import annotations

from . import scalars
from .core import Multivector, mv_product
from .derivations import OrthogonalMap
from .errors import NotInverseError, NotOrthogonalError


def bogolyubov_apply(phi: OrthogonalMap, a: Multivector) -> Multivector:
    """Extend phi over blades: v_{i1}...v_{ir} maps to phi(v_{i1})...phi(v_{ir})."""
    if not phi.gram_preserving():
        raise NotOrthogonalError("map does not preserve the quadratic form")
    ctx = a.context
    acc = Multivector.zero(ctx)
    for blade, coeff in a.terms.items():
        img = Multivector.unit(ctx)
        for k in blade.indices:
            img = mv_product(img, phi.image(k))
        acc = acc + img.scale(coeff)
    return acc


def conjugation_apply(u: Multivector, u_inv: Multivector,
                      a: Multivector) -> Multivector:
    """Inner automorphism a -> u_inv * a * u; u_inv is a checked certificate."""
    if mv_product(u, u_inv) != Multivector.unit(u.context):
        raise NotInverseError("u * u_inv != 1")
    return mv_product(mv_product(u_inv, a), u)
