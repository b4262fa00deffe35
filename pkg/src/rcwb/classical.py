"""Joins, relative complements, classical products and decisions.

Every function here is written against :class:`~rcwb.core.RestrictionModel`
so the same code runs in any model that advertises the needed features.
The model's own ``join2``/``relcomp`` are treated as primitives; the
``*_via_amp`` functions rebuild them from the classical product instead,
which is how the two directions of the main equivalence are compared.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .core import (
    Map,
    Obj,
    RestrictionModel,
    classical_projection,
    compatible,
    compose_all,
    coproduct_of_maps,
    is_restriction_idempotent,
    leq,
    quasi_projection,
)
from .errors import Incompatible, NotBelow, NotCoproductCodomain, NotIdempotent, TypeMismatch

CPair = Callable[[RestrictionModel, Map, Map], Map]


def join(model: RestrictionModel, fs: Sequence[Map], a: Obj = None, b: Obj = None) -> Map:
    """Join of a pairwise compatible family, folded left to right.

    The empty family needs ``a`` and ``b`` and yields the zero map.
    """
    fs = list(fs)
    model.require("joins")
    if not fs:
        if a is None or b is None:
            raise TypeMismatch("the join of an empty family needs its type")
        return model.zero(a, b)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not compatible(model, fs[i], fs[j]):
                raise Incompatible(i, j)
    out = fs[0]
    for f in fs[1:]:
        out = model.join2(out, f)
    return out


def relative_complement(model: RestrictionModel, g: Map, f: Map) -> Map:
    model.require("complements")
    if not leq(model, f, g):
        raise NotBelow("relative complement g \\ f needs f <= g")
    return model.relcomp(g, f)


def complement_idem(model: RestrictionModel, e: Map) -> Map:
    if not is_restriction_idempotent(model, e):
        raise NotIdempotent(f"{model.format_map(e)} is not a restriction idempotent")
    return model.relcomp(model.identity(model.dom(e)), e)


def complement_of_domain(model: RestrictionModel, f: Map) -> Map:
    """The complement of ``f``'s restriction."""
    return complement_idem(model, model.restrict(f))


def classical_pair(model: RestrictionModel, f: Map, g: Map) -> Map:
    """The classical pairing into ``amp(A, B)`` built from joins and complements.

    Three pieces: where only ``f`` is defined go left, only ``g`` go
    middle, both go to the product summand.
    """
    if model.dom(f) != model.dom(g):
        raise TypeMismatch("classical pairing needs a common domain")
    c = model.compose
    a, b = model.cod(f), model.cod(g)
    obj = model.amp(a, b)
    only_f = compose_all(model, complement_of_domain(model, g), f, model.inj(0, obj))
    only_g = compose_all(model, complement_of_domain(model, f), g, model.inj(1, obj))
    both = c(model.pair(f, g), model.inj(2, obj))
    return model.join2(model.join2(only_f, only_g), both)


def decision(model: RestrictionModel, f: Map) -> Map:
    parts = model.summands(model.cod(f))
    if parts is None:
        raise NotCoproductCodomain(f"{model.format_object(model.cod(f))} is not a coproduct")
    return model.decision(f)


def check_decision(model: RestrictionModel, f: Map, d: Map) -> bool:
    """Do D.1 and D.2 hold for the candidate ``d``?"""
    a = model.dom(f)
    parts = model.summands(model.cod(f))
    n = len(parts)
    copies = model.coproduct([a] * n)
    if model.dom(d) != a or model.cod(d) != copies:
        return False
    d1 = model.copair([model.identity(a)] * n, copies, a)
    if model.compose(d, d1) != model.restrict(f):
        return False
    lhs = model.compose(d, coproduct_of_maps(model, [f] * n))
    rhs = model.compose(f, coproduct_of_maps(model, [model.inj(j, model.cod(f)) for j in range(n)]))
    return lhs == rhs


def _fold_legs(model: RestrictionModel, b: Obj) -> Map:
    """``[1_B, 1_B, pi0] : amp(B, B) -> B``."""
    return model.copair([model.identity(b), model.identity(b), model.proj(0, b, b)], model.amp(b, b), b)


def join_via_amp(model: RestrictionModel, f: Map, g: Map, cpair: CPair | None = None) -> Map:
    """``f v g = <<f, g>> [1, 1, pi0]``."""
    if not compatible(model, f, g):
        raise Incompatible(0, 1)
    h = (cpair or classical_pair)(model, f, g)
    return model.compose(h, _fold_legs(model, model.cod(f)))


def join_via_decision(model: RestrictionModel, f: Map, g: Map, cpair: CPair | None = None) -> Map:
    """``f v g = d[<<f, g>>] [f, g, g-bar f]``."""
    if not compatible(model, f, g):
        raise Incompatible(0, 1)
    h = (cpair or classical_pair)(model, f, g)
    a = model.dom(f)
    legs = [f, g, model.compose(model.restrict(g), f)]
    return model.compose(decision(model, h), model.copair(legs, model.coproduct([a, a, a]), model.cod(f)))


def relcomp_via_amp(model: RestrictionModel, g: Map, f: Map, cpair: CPair | None = None) -> Map:
    """``g \\ f = <<f, g>> ; qproj(1)``."""
    if not leq(model, f, g):
        raise NotBelow("relative complement g \\ f needs f <= g")
    h = (cpair or classical_pair)(model, f, g)
    return model.compose(h, quasi_projection(model, 1, model.cod(h)))


def projections(model: RestrictionModel, a: Obj, b: Obj) -> tuple[Map, Map]:
    return classical_projection(model, 0, a, b), classical_projection(model, 1, a, b)


def cproj_complement_identities(model: RestrictionModel, a: Obj, b: Obj) -> dict[str, bool]:
    """The three complement identities for the classical projections."""
    c = model.compose
    p0, p1 = projections(model, a, b)
    obj = model.amp(a, b)
    q = [quasi_projection(model, j, obj) for j in range(3)]
    i = [model.inj(j, obj) for j in range(3)]
    p0c, p1c = complement_of_domain(model, p0), complement_of_domain(model, p1)
    return {
        "p0-bar-c": p0c == c(q[1], i[1]),
        "p1-bar-c": p1c == c(q[0], i[0]),
        "p1-bar-c p0": c(p1c, p0) == q[0],
    }

