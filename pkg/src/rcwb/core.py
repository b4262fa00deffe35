"""The restriction-category contract every concrete model implements.

A model supplies objects, hom-sets, identities, diagrammatic composition
(``compose(f, g)`` is "first f, then g") and a restriction operator.
Everything else is optional structure advertised through ``features``:

==============  =====================================================
``terminal``    restriction terminal object and ``t(a)``
``products``    restriction products, ``proj`` and ``pair``
``coproducts``  finite coproducts with total injections, ``copair``
``zeroes``      restriction zero maps
``distributive``explicit distributivity isomorphisms
``joins``       binary joins of compatible maps (``join2``)
``complements`` relative complements (``relcomp``)
``decisions``   decisions of maps into coproducts
==============  =====================================================

Generic constructions in the rest of the package only ever talk to a model
through this interface, so the same code runs on partial functions, on the
Kleisli category of the exception monad and on Boolean rings.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Sequence

from .errors import IndexOutOfRange, MissingStructure, NoZeroes, NotIdempotent, TypeMismatch

Obj = Any
Map = Any


class RestrictionModel(ABC):
    name: str = "model"
    features: frozenset[str] = frozenset()

    # -- the core contract -------------------------------------------------

    @abstractmethod
    def objects(self) -> Sequence[Obj]:
        """The finite universe of objects law suites quantify over."""

    @abstractmethod
    def hom(self, a: Obj, b: Obj) -> Sequence[Map]:
        """Every map ``a -> b`` in a deterministic order."""

    @abstractmethod
    def identity(self, a: Obj) -> Map: ...

    @abstractmethod
    def compose(self, f: Map, g: Map) -> Map: ...

    @abstractmethod
    def restrict(self, f: Map) -> Map: ...

    def dom(self, f: Map) -> Obj:
        return f.dom

    def cod(self, f: Map) -> Obj:
        return f.cod

    def size(self, a: Obj) -> int:
        return len(a)

    def hom_size(self, a: Obj, b: Obj) -> int:
        return len(self.hom(a, b))

    def signature(self, a: Obj) -> Any:
        """Objects with equal signatures have indistinguishable hom-structure.

        Laws that mention no structural map only need one object per
        signature.  The default treats every object as distinct.
        """
        return a

    def format_map(self, f: Map) -> str:
        return repr(f)

    def format_object(self, a: Obj) -> str:
        return str(a)

    # -- capability checks -------------------------------------------------

    def has(self, *features: str) -> bool:
        return all(x in self.features for x in features)

    def require(self, *features: str) -> None:
        for x in features:
            if x not in self.features:
                if x == "zeroes":
                    raise NoZeroes(f"{self.name} has no restriction zeroes")
                raise MissingStructure(f"{self.name} does not provide {x}")

    # -- optional structure ------------------------------------------------

    def terminal(self) -> Obj:
        raise MissingStructure("terminal")

    def t(self, a: Obj) -> Map:
        raise MissingStructure("terminal")

    def product(self, a: Obj, b: Obj) -> Obj:
        raise MissingStructure("products")

    def proj(self, i: int, a: Obj, b: Obj) -> Map:
        raise MissingStructure("products")

    def pair(self, f: Map, g: Map) -> Map:
        raise MissingStructure("products")

    def initial(self) -> Obj:
        raise MissingStructure("coproducts")

    def z(self, a: Obj) -> Map:
        raise MissingStructure("coproducts")

    def coproduct(self, objs: Sequence[Obj]) -> Obj:
        raise MissingStructure("coproducts")

    def summands(self, obj: Obj) -> tuple | None:
        """The summands of ``obj`` if it was built as a coproduct."""
        return None

    def inj(self, j: int, obj: Obj) -> Map:
        raise MissingStructure("coproducts")

    def copair(self, fs: Sequence[Map], obj: Obj | None = None, cod: Obj | None = None) -> Map:
        raise MissingStructure("coproducts")

    def zero(self, a: Obj, b: Obj) -> Map:
        raise NoZeroes(f"{self.name} has no restriction zeroes")

    def amp(self, a: Obj, b: Obj) -> Obj:
        return self.coproduct([a, b, self.product(a, b)])

    def distributor(self, a: Obj, b: Obj, c: Obj) -> Map:
        """The isomorphism ``(a*b) + (a*c) -> a*(b+c)``."""
        raise MissingStructure("distributive")

    def distributor_inverse(self, a: Obj, b: Obj, c: Obj) -> Map:
        raise MissingStructure("distributive")

    def join2(self, f: Map, g: Map) -> Map:
        raise MissingStructure("joins")

    def relcomp(self, g: Map, f: Map) -> Map:
        raise MissingStructure("complements")

    def decision(self, f: Map) -> Map:
        raise MissingStructure("decisions")


# -- relations -----------------------------------------------------------


def _parallel(model: RestrictionModel, f: Map, g: Map) -> None:
    if model.dom(f) != model.dom(g) or model.cod(f) != model.cod(g):
        raise TypeMismatch(
            f"maps are not parallel: {model.format_object(model.dom(f))} -> "
            f"{model.format_object(model.cod(f))} vs {model.format_object(model.dom(g))} -> "
            f"{model.format_object(model.cod(g))}"
        )


def leq(model: RestrictionModel, f: Map, g: Map) -> bool:
    """``f <= g``: g agrees with f wherever f is defined."""
    _parallel(model, f, g)
    return model.compose(model.restrict(f), g) == f


def compatible(model: RestrictionModel, f: Map, g: Map) -> bool:
    _parallel(model, f, g)
    return model.compose(model.restrict(f), g) == model.compose(model.restrict(g), f)


def disjoint(model: RestrictionModel, f: Map, g: Map) -> bool:
    _parallel(model, f, g)
    model.require("zeroes")
    return model.compose(model.restrict(f), g) == model.zero(model.dom(f), model.cod(f))


# -- small derived helpers ----------------------------------------------


def is_total(model: RestrictionModel, f: Map) -> bool:
    return model.restrict(f) == model.identity(model.dom(f))


def is_restriction_idempotent(model: RestrictionModel, e: Map) -> bool:
    return model.dom(e) == model.cod(e) and model.restrict(e) == e


def check_restriction_idempotent(model: RestrictionModel, e: Map) -> None:
    if not is_restriction_idempotent(model, e):
        raise NotIdempotent(f"{model.format_map(e)} is not a restriction idempotent")


def compose_all(model: RestrictionModel, *fs: Map) -> Map:
    out = fs[0]
    for f in fs[1:]:
        out = model.compose(out, f)
    return out


def quasi_projection(model: RestrictionModel, j: int, obj: Obj) -> Map:
    """The copairing ``[0, ..., 1, ..., 0]`` onto summand ``j``."""
    parts = model.summands(obj)
    if parts is None:
        raise TypeMismatch(f"{model.format_object(obj)} is not a coproduct")
    if not 0 <= j < len(parts):
        raise IndexOutOfRange(f"summand {j} of a {len(parts)}-fold coproduct")
    target = parts[j]
    fs = [model.identity(a) if i == j else model.zero(a, target) for i, a in enumerate(parts)]
    return model.copair(fs, obj, target)


def coproduct_of_maps(model: RestrictionModel, fs: Sequence[Map]) -> Map:
    """``f0 + ... + fn`` as ``[f0 i0, ..., fn in]``."""
    cods = [model.cod(f) for f in fs]
    target = model.coproduct(cods)
    doms = [model.dom(f) for f in fs]
    return model.copair(
        [model.compose(f, model.inj(j, target)) for j, f in enumerate(fs)],
        model.coproduct(doms),
        target,
    )


def product_of_maps(model: RestrictionModel, f: Map, g: Map) -> Map:
    """``f x g`` as ``<pi0 f, pi1 g>``."""
    a, b = model.dom(f), model.dom(g)
    return model.pair(
        model.compose(model.proj(0, a, b), f),
        model.compose(model.proj(1, a, b), g),
    )


def classical_projection(m: RestrictionModel, i: int, a, b):
    """``p0 = [1, 0, pi0]`` and ``p1 = [0, 1, pi1]`` out of ``amp(a, b)``."""
    obj = m.amp(a, b)
    if i == 0:
        legs = [m.identity(a), m.zero(b, a), m.proj(0, a, b)]
        target = a
    else:
        legs = [m.zero(a, b), m.identity(b), m.proj(1, a, b)]
        target = b
    return m.copair(legs, obj, target)
