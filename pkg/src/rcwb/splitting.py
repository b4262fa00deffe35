"""Split restriction idempotents and the bridges out of ``amp(A, B)``.

The classical product carries enough information to rebuild both the
restriction product ``A * B`` and the coproduct ``A + B`` as splittings of
restriction idempotents on it, and ``amp(A, B)`` is itself a three-way
coproduct.  The formulas are generic; only :func:`split_idempotent`
depends on partial functions, because splitting needs a new object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classical import CPair, classical_pair, complement_of_domain, projections
from .core import RestrictionModel, compose_all, is_restriction_idempotent, quasi_projection
from .errors import NotIdempotent
from .finpar import PartialMap, subset


@dataclass(frozen=True)
class Splitting:
    e: PartialMap
    r: PartialMap
    s: PartialMap

    @property
    def obj(self):
        return self.r.cod

    def holds(self, model: RestrictionModel) -> bool:
        """``rs = e`` and ``sr = 1``."""
        c = model.compose
        return c(self.r, self.s) == self.e and c(self.s, self.r) == model.identity(self.obj)


def split_idempotent(e: PartialMap, name: str | None = None) -> Splitting:
    """Split a partial identity through the subset where it is defined."""
    if e.dom != e.cod or any(v is not None and v != i for i, v in enumerate(e.table)):
        raise NotIdempotent("only restriction idempotents (partial identities) split here")
    support = [i for i, v in enumerate(e.table) if v is not None]
    x = subset(e.dom, support, name)
    pos = {i: k for k, i in enumerate(support)}
    r = PartialMap(e.dom, x, tuple(pos.get(i) for i in range(len(e.dom))))
    s = PartialMap(x, e.dom, tuple(support))
    return Splitting(e, r, s)


@dataclass(frozen=True)
class RecoveredProduct:
    obj: object
    proj0: PartialMap
    proj1: PartialMap
    splitting: Splitting
    canonical: tuple[PartialMap, PartialMap]
    pair: Callable[[PartialMap, PartialMap], PartialMap]


@dataclass(frozen=True)
class RecoveredCoproduct:
    obj: object
    injections: tuple[PartialMap, ...]
    splitting: Splitting | None
    canonical: tuple[PartialMap, PartialMap] | None
    copair: Callable[[list], PartialMap]


def restriction_product_from_amp(model: RestrictionModel, a, b, cpair: CPair = classical_pair) -> RecoveredProduct:
    """Split ``p0-bar p1-bar`` and read the restriction product off it."""
    c, r = model.compose, model.restrict
    p0, p1 = projections(model, a, b)
    e = c(r(p0), r(p1))
    sp = split_idempotent(e, f"split({a.name}, {b.name})*")
    pi0, pi1 = c(sp.s, p0), c(sp.s, p1)
    canonical = (
        model.pair(p0, p1),
        cpair(model, model.proj(0, a, b), model.proj(1, a, b)),
    )
    return RecoveredProduct(
        sp.obj, pi0, pi1, sp, canonical, lambda f, g: c(cpair(model, f, g), sp.r)
    )


def coproduct_idempotent(model: RestrictionModel, a, b) -> PartialMap:
    """``p0-bar^c v p1-bar^c`` on ``amp(a, b)``."""
    p0, p1 = projections(model, a, b)
    return model.join2(complement_of_domain(model, p0), complement_of_domain(model, p1))


def coproduct_retraction_legs(model: RestrictionModel, a, b) -> tuple[PartialMap, PartialMap]:
    """``p1-bar^c p0`` and ``p0-bar^c p1``, the two partial retractions."""
    c = model.compose
    p0, p1 = projections(model, a, b)
    return c(complement_of_domain(model, p1), p0), c(complement_of_domain(model, p0), p1)


def restriction_coproduct_from_amp(model: RestrictionModel, a, b, cpair: CPair = classical_pair) -> RecoveredCoproduct:
    """Split ``p0-bar^c v p1-bar^c`` and read the coproduct off it."""
    c = model.compose
    e = coproduct_idempotent(model, a, b)
    sp = split_idempotent(e, f"split({a.name}, {b.name})+")
    left, right = coproduct_retraction_legs(model, a, b)
    inj0 = c(cpair(model, model.identity(a), model.zero(a, b)), sp.r)
    inj1 = c(cpair(model, model.zero(b, a), model.identity(b)), sp.r)

    def copair(fs):
        f, g = fs
        return c(sp.s, model.join2(c(left, f), c(right, g)))

    plus = model.coproduct([a, b])
    canonical = (
        model.join2(c(left, model.inj(0, plus)), c(right, model.inj(1, plus))),
        cpair(model, quasi_projection(model, 0, plus), quasi_projection(model, 1, plus)),
    )
    return RecoveredCoproduct(sp.obj, (inj0, inj1), sp, canonical, copair)


def amp_as_coproduct(model: RestrictionModel, a, b, cpair: CPair = classical_pair) -> RecoveredCoproduct:
    """``amp(a, b)`` as the coproduct of ``a``, ``b`` and ``a * b``."""
    c = model.compose
    p0, p1 = projections(model, a, b)
    left, right = coproduct_retraction_legs(model, a, b)
    middle = model.pair(p0, p1)
    injections = (
        cpair(model, model.identity(a), model.zero(a, b)),
        cpair(model, model.zero(b, a), model.identity(b)),
        cpair(model, model.proj(0, a, b), model.proj(1, a, b)),
    )

    def copair(fs):
        f, g, h = fs
        return model.join2(model.join2(c(left, f), c(right, g)), c(middle, h))

    return RecoveredCoproduct(model.amp(a, b), injections, None, None, copair)


def class_prod_identities(model: RestrictionModel, f, g) -> dict[str, bool]:
    """Items (i)-(viii) of the classical-product complement lemma for one pair."""
    c = model.compose
    a, b = model.cod(f), model.cod(g)
    p0, p1 = projections(model, a, b)
    p0c, p1c = complement_of_domain(model, p0), complement_of_domain(model, p1)
    h = classical_pair(model, f, g)
    cc = model.dom(f)
    zero_a, zero_b = model.zero(cc, a), model.zero(cc, b)
    fc, gc = complement_of_domain(model, f), complement_of_domain(model, g)
    obj = model.amp(a, b)
    left, right = c(p1c, p0), c(p0c, p1)
    l0 = classical_pair(model, left, model.zero(obj, b))
    r0 = classical_pair(model, model.zero(obj, a), right)
    ia = classical_pair(model, model.identity(a), model.zero(a, b))
    ib = classical_pair(model, model.zero(b, a), model.identity(b))
    return {
        "i": c(h, p0c) == classical_pair(model, zero_a, c(fc, g))
        and c(h, p1c) == classical_pair(model, c(gc, f), zero_b),
        "ii": compose_all(model, h, p0c, p1) == c(fc, g) and compose_all(model, h, p1c, p0) == c(gc, f),
        "iii": classical_pair(model, zero_a, zero_b) == model.zero(cc, obj),
        "iv": c(p0c, p1c) == model.zero(obj, obj),
        "v": model.join2(p0c, p1c) == classical_pair(model, left, right),
        "vi": c(model.restrict(l0), r0) == model.zero(obj, obj) and model.join2(l0, r0) == model.join2(p0c, p1c),
        "vii": c(ia, p0c) == model.zero(a, obj)
        and c(ia, p1c) == ia
        and c(ib, p0c) == ib
        and c(ib, p1c) == model.zero(b, obj),
        "viii": c(right, ib) == p0c
        and c(ib, right) == model.identity(b)
        and c(left, ia) == p1c
        and c(ia, left) == model.identity(a),
    }
