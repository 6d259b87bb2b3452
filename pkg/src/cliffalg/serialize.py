"""JSON wire formats for multivectors, derivation families, and maps."""

from __future__ import annotations

from typing import Any

from . import scalars
from .core import Blade, Context, Multivector, Signature
from .scalars import Domain


def _scalar_out(domain: Domain, value) -> Any:
    if domain.is_exact:
        return scalars.format_scalar(domain, value)
    if domain is Domain.F64:
        return value
    return scalars.format_scalar(domain, value)


def _scalar_in(domain: Domain, value) -> Any:
    if isinstance(value, str):
        return scalars.parse_scalar(domain, value)
    return scalars.coerce(domain, value)


def context_to_json(ctx: Context) -> dict:
    return {
        "domain": ctx.domain.value,
        "signature": {
            "default": _scalar_out(ctx.domain, ctx.signature.default),
            "overrides": {str(k): _scalar_out(ctx.domain, v)
                          for k, v in ctx.signature.overrides},
        },
    }


def context_from_json(obj: dict) -> Context:
    domain = Domain(obj.get("domain", "rational"))
    sig = obj.get("signature", {})
    default = _scalar_in(domain, sig.get("default", 1))
    overrides = {int(k): _scalar_in(domain, v)
                 for k, v in sig.get("overrides", {}).items()}
    return Context(domain, Signature.build(domain, default, overrides))


def multivector_to_json(mv: Multivector) -> dict:
    out = context_to_json(mv.context)
    out["terms"] = [{"blade": list(blade.indices),
                     "coeff": _scalar_out(mv.context.domain, coeff)}
                    for blade, coeff in mv.sorted_terms()]
    return out


def multivector_from_json(obj: dict, context: Context | None = None) -> Multivector:
    ctx = context if context is not None else context_from_json(obj)
    terms = {}
    for item in obj.get("terms", []):
        blade = Blade.from_indices(item["blade"])
        terms[blade] = _scalar_in(ctx.domain, item["coeff"])
    return Multivector(ctx, terms)


def family_to_json(family) -> dict:
    domain = family.context.domain
    return {
        "parity": family.parity,
        "terms": [{"blade": list(blade.indices),
                   "coeff": _scalar_out(domain, coeff)}
                  for blade, coeff in family.terms],
    }


def family_from_json(obj: dict, context: Context):
    from .derivations import AdFamily

    terms = [(Blade.from_indices(item["blade"]),
              _scalar_in(context.domain, item["coeff"]))
             for item in obj.get("terms", [])]
    return AdFamily.finite(context, obj["parity"], terms)


def skew_to_json(skew) -> dict:
    domain = skew.context.domain
    return {"entries": [{"i": i, "j": j, "value": _scalar_out(domain, v)}
                        for (i, j), v in sorted(skew.entries.items())]}


def skew_from_json(obj: dict, context: Context):
    from .derivations import SkewMap

    pairs = {(item["i"], item["j"]): _scalar_in(context.domain, item["value"])
             for item in obj.get("entries", [])}
    return SkewMap.from_pairs(context, pairs)


def orthogonal_to_json(omap) -> dict:
    domain = omap.context.domain
    return {"active": list(omap.active),
            "matrix": [[_scalar_out(domain, v) for v in row] for row in omap.matrix]}


def orthogonal_from_json(obj: dict, context: Context):
    from .derivations import OrthogonalMap

    active = tuple(obj["active"])
    matrix = tuple(tuple(_scalar_in(context.domain, v) for v in row)
                   for row in obj["matrix"])
    return OrthogonalMap.build(context, active, matrix)


def chain_to_json(chain) -> dict:
    return {"cuts": list(chain.cuts)}
