"""The unique normalized trace on the Clifford algebra, and tr(a*a^rev).

The trace of a multivector is the coefficient of the empty blade; its
coincidence with the normalized matrix trace under explicit representations
is verified in matrix_rep and the test suite.
"""

from __future__ import annotations

from . import scalars
from .core import Multivector, UNIT_BLADE, mv_product, reverse
from .errors import UnsupportedDomainError


def trace(a: Multivector):
    """Normalized trace: linear, tracial, tr(1) = 1."""
    return a.coeff(UNIT_BLADE)


def norm(a: Multivector):
    """tr(a * reverse(a)).  For q == 1 this is the sum of squared coefficients.

    Defined over the real-valued domains only.  Note this quantity is not
    submultiplicative: with a = 1 + v1, tr((a*a)(a*a)^rev) = 8 > 4.
    """
    if not a.context.domain.is_real:
        raise UnsupportedDomainError(
            f"norm is defined over real domains, not {a.context.domain.value}")
    return trace(mv_product(a, reverse(a)))
