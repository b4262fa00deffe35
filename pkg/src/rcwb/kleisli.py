"""The exception monad ``_ + 1`` and its Kleisli category.

A Kleisli map ``A -> B`` is a total partial-function table ``A -> B + 1``;
landing in the ``1`` summand means "raised".  Every piece of restriction
structure is the literal composite of total maps from the construction,
so checking the Kleisli model against the generic axiom suite really does
test those composites.

Summand conventions: ``B + 1`` is ``coprod(B, one)`` with the exception at
summand 1.  The four-way split of ``(A + 1) * (B + 1)`` sends both values
to summand 2, a lone ``A`` value to 0, a lone ``B`` value to 1 and two
exceptions to 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import RestrictionModel, coproduct_of_maps
from .errors import Incompatible, InvalidMap, NotBelow, NotCoproductCodomain, TypeMismatch
from .finpar import (
    ONE,
    STAR,
    ZERO,
    FinParModel,
    FinSet,
    PartialMap,
    amp,
    compose,
    coprod,
    copair,
    distributor,
    distributor_inverse,
    format_graph,
    from_function,
    identity,
    inj,
    initial_map,
    pair,
    prod,
    proj,
    quasi_projection,
    restriction,
    terminal_map,
)


def plus_one(b: FinSet) -> FinSet:
    return coprod(b, ONE)


def raise_(a: FinSet, b: FinSet) -> PartialMap:
    """The constant exception ``t_A ; inj1 : A -> B + 1``."""
    return compose(terminal_map(a), inj(1, plus_one(b)))


def unit(a: FinSet) -> PartialMap:
    return inj(0, plus_one(a))


def multiplication(a: FinSet) -> PartialMap:
    """``[1, inj1] : (A + 1) + 1 -> A + 1``."""
    inner = plus_one(a)
    return copair([identity(inner), inj(1, inner)], plus_one(inner), inner)


def lift(f: PartialMap) -> PartialMap:
    """The functor on total maps: ``f + 1``."""
    return copair(
        [compose(f, inj(0, plus_one(f.cod))), inj(1, plus_one(f.cod))], plus_one(f.dom), plus_one(f.cod)
    )


def counit(b: FinSet) -> PartialMap:
    """``qproj(0) : B + 1 -> B``."""
    return quasi_projection(0, plus_one(b))


def exception_split(a: FinSet, b: FinSet) -> PartialMap:
    """``(A + 1) * (B + 1) -> A + B + A*B + 1`` as an explicit bijection."""
    src = prod(plus_one(a), plus_one(b))
    tgt = coprod(a, b, prod(a, b), ONE)

    def send(e):
        (i, x), (j, y) = e
        if i == 0 and j == 0:
            return (2, (x, y))
        if i == 0:
            return (0, x)
        if j == 0:
            return (1, y)
        return (3, STAR)

    return from_function(src, tgt, send)


def exception_split_amp(a: FinSet, b: FinSet) -> PartialMap:
    """``(A + 1) * (B + 1) -> amp(A, B) + 1``, the same bijection regrouped."""
    split = exception_split(a, b)
    obj = amp(a, b)
    tgt = plus_one(obj)
    regroup = copair(
        [compose(inj(j, obj), inj(0, tgt)) for j in range(3)] + [inj(1, tgt)], split.cod, tgt
    )
    return compose(split, regroup)


@dataclass(frozen=True)
class KleisliMap:
    dom: FinSet
    cod: FinSet
    base: PartialMap

    def __post_init__(self):
        if self.base.dom != self.dom or self.base.cod != plus_one(self.cod):
            raise TypeMismatch(f"a Kleisli map {self.dom} -> {self.cod} needs a base into {self.cod} + one")
        if not self.base.is_total:
            raise InvalidMap("the base of a Kleisli map must be total")

    @classmethod
    def _raw(cls, dom, cod, base) -> KleisliMap:
        k = object.__new__(cls)
        object.__setattr__(k, "dom", dom)
        object.__setattr__(k, "cod", cod)
        object.__setattr__(k, "base", base)
        return k


def _k(base: PartialMap, cod: FinSet) -> KleisliMap:
    return KleisliMap._raw(base.dom, cod, base)


def kleisli_compose(f: KleisliMap, g: KleisliMap) -> KleisliMap:
    if f.cod != g.dom:
        raise TypeMismatch(f"cannot compose Kleisli maps {f.dom} -> {f.cod} and {g.dom} -> {g.cod}")
    tail = copair([g.base, inj(1, plus_one(g.cod))], plus_one(g.dom), plus_one(g.cod))
    return _k(compose(f.base, tail), g.cod)


def kleisli_restriction(f: KleisliMap) -> KleisliMap:
    """``<1, [f]> ; A*(B+1) = A*B + A*1 ; pi0 + pi1``."""
    a, b = f.dom, f.cod
    step = compose(pair(identity(a), f.base), distributor_inverse(a, b, ONE))
    legs = coproduct_of_maps(_FIN, [proj(0, prod(a, b)), proj(1, prod(a, ONE))])
    return _k(compose(step, legs), a)


def kleisli_pair(f: KleisliMap, g: KleisliMap) -> KleisliMap:
    """Restriction pairing: raise unless both legs return."""
    if f.dom != g.dom:
        raise TypeMismatch("Kleisli pairing needs a common domain")
    a, b = f.cod, g.cod
    target = plus_one(prod(a, b))
    collapse = copair(
        [raise_(a, prod(a, b)), raise_(b, prod(a, b)), inj(0, target), inj(1, target)],
        coprod(a, b, prod(a, b), ONE),
        target,
    )
    return _k(compose(compose(pair(f.base, g.base), exception_split(a, b)), collapse), prod(a, b))


def kleisli_classical_pair(f: KleisliMap, g: KleisliMap) -> KleisliMap:
    """Classical pairing: the split bijection on its own."""
    if f.dom != g.dom:
        raise TypeMismatch("Kleisli pairing needs a common domain")
    return _k(compose(pair(f.base, g.base), exception_split_amp(f.cod, g.cod)), amp(f.cod, g.cod))


def eta(f: PartialMap) -> KleisliMap:
    """Embed a total map."""
    return _k(compose(f, unit(f.cod)), f.cod)


def kleisli_projection(i: int, a: FinSet, b: FinSet) -> KleisliMap:
    """``[p0] = [inj0, t_B inj1, pi0 inj0]`` and its mirror."""
    obj = amp(a, b)
    if i == 0:
        legs = [unit(a), raise_(b, a), compose(proj(0, prod(a, b)), unit(a))]
        return _k(copair(legs, obj, plus_one(a)), a)
    legs = [raise_(a, b), unit(b), compose(proj(1, prod(a, b)), unit(b))]
    return _k(copair(legs, obj, plus_one(b)), b)


def _exception_index(b: FinSet) -> int:
    return len(b)


class KleisliModel(RestrictionModel):
    """Kleisli category of ``_ + 1`` over the total maps of finite sets."""

    name = "kleisli"
    features = FinParModel.features

    def __init__(self, universe: Sequence[FinSet] = ()):
        self.universe = list(universe)
        self._homs: dict = {}

    def objects(self):
        return self.universe

    def hom_size(self, a, b):
        return (len(b) + 1) ** len(a)

    def hom(self, a, b):
        key = (a, b)
        cached = self._homs.get(key)
        if cached is None:
            target = plus_one(b)
            cached = [
                KleisliMap._raw(a, b, PartialMap._raw(a, target, t))
                for t in itertools.product(range(len(target)), repeat=len(a))
            ]
            self._homs[key] = cached
        return cached

    def signature(self, a):
        return len(a)

    def format_map(self, f):
        return f"kleisli _ : {f.dom.name} -> {f.cod.name} {format_graph(f.base)}"

    def identity(self, a):
        return _k(unit(a), a)

    def compose(self, f, g):
        return kleisli_compose(f, g)

    def restrict(self, f):
        return kleisli_restriction(f)

    def terminal(self):
        return ONE

    def t(self, a):
        return eta(terminal_map(a))

    def product(self, a, b):
        return prod(a, b)

    def proj(self, i, a, b):
        return eta(proj(i, prod(a, b)))

    def pair(self, f, g):
        return kleisli_pair(f, g)

    def initial(self):
        return ZERO

    def z(self, a):
        return _k(initial_map(plus_one(a)), a)

    def coproduct(self, objs):
        return coprod(*objs) if objs else ZERO

    def summands(self, obj):
        if obj.tag == "zero":
            return ()
        return obj.summands()

    def inj(self, j, obj):
        return eta(inj(j, obj))

    def copair(self, fs, obj=None, cod=None):
        fs = list(fs)
        if cod is None:
            cod = fs[0].cod
        if obj is None:
            obj = coprod(*(f.dom for f in fs)) if fs else ZERO
        return _k(copair([f.base for f in fs], obj, plus_one(cod)), cod)

    def zero(self, a, b):
        return _k(raise_(a, b), b)

    def amp(self, a, b):
        return amp(a, b)

    def distributor(self, a, b, c):
        return eta(distributor(a, b, c))

    def distributor_inverse(self, a, b, c):
        return eta(distributor_inverse(a, b, c))

    # pointwise classical structure on base tables

    def join2(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            raise TypeMismatch("join of non-parallel Kleisli maps")
        x = _exception_index(f.cod)
        out = []
        for u, v in zip(f.base.table, g.base.table):
            if u != x and v != x and u != v:
                raise Incompatible(0, 1)
            out.append(v if u == x else u)
        return _k(PartialMap._raw(f.dom, f.base.cod, tuple(out)), f.cod)

    def relcomp(self, g, f):
        if f.dom != g.dom or f.cod != g.cod:
            raise TypeMismatch("relative complement of non-parallel Kleisli maps")
        x = _exception_index(f.cod)
        out = []
        for u, v in zip(f.base.table, g.base.table):
            if u != x and u != v:
                raise NotBelow("the subtracted map is not below the ambient map")
            out.append(v if u == x else x)
        return _k(PartialMap._raw(g.dom, g.base.cod, tuple(out)), g.cod)

    def decision(self, f):
        parts = f.cod.summands()
        if parts is None:
            raise NotCoproductCodomain(f"{f.cod} is not a coproduct")
        n, size = len(f.dom), len(parts)
        copies = coprod(*([f.dom] * size)) if parts else ZERO
        target = plus_one(copies)
        x = _exception_index(f.cod)
        out = []
        for i, v in enumerate(f.base.table):
            if v == x:
                out.append(len(copies))
            else:
                out.append(f.cod.elements[v][0] * n + i)
        return _k(PartialMap._raw(f.dom, target, tuple(out)), copies)


_FIN = FinParModel()


# -- classification ------------------------------------------------------


def classify(model: RestrictionModel, f):
    """``T(f) = f inj0 v f-bar^c t inj1`` into ``cod + 1``."""
    from .classical import complement_of_domain

    c = model.compose
    a, b = model.dom(f), model.cod(f)
    obj = model.coproduct([b, model.terminal()])
    returned = c(f, model.inj(0, obj))
    raised = c(c(complement_of_domain(model, f), model.t(a)), model.inj(1, obj))
    return model.join2(returned, raised)


def to_kleisli(f: PartialMap) -> KleisliMap:
    return _k(classify(_FIN, f), f.cod)


def from_kleisli(k: KleisliMap) -> PartialMap:
    return compose(k.base, counit(k.cod))


def total_part(k: KleisliMap) -> PartialMap | None:
    """The unique ``g`` with ``base = g inj0`` if ``k`` is total, else None."""
    if any(v == len(k.cod) for v in k.base.table):
        return None
    return PartialMap._raw(k.dom, k.cod, k.base.table)


def induced_unit(a: FinSet) -> PartialMap:
    return classify(_FIN, identity(a))


def induced_multiplication(a: FinSet) -> PartialMap:
    """``T(qproj0 ; qproj0)`` on ``(A + 1) + 1``."""
    inner = plus_one(a)
    return classify(_FIN, compose(counit(inner), counit(a)))


def induced_lift(f: PartialMap) -> PartialMap:
    return classify(_FIN, compose(counit(f.dom), f))


def induced_restriction(k: KleisliMap) -> KleisliMap:
    """``T((k eps)-bar)``: the restriction the classifier induces."""
    return _k(classify(_FIN, restriction(from_kleisli(k))), k.dom)
