"""Finite Boolean rings with non-unital homomorphisms, used in the opposite
orientation.

Elements of a rank-``n`` ring are ``n``-bit masks; addition is XOR and
multiplication is AND.  A map ``X -> Y`` of the model is a ring hom
``F : R(Y) -> R(X)`` going the other way, so ``compose(f, g)`` applies
``g``'s hom first.  Under this reading the corestriction ``b -> F(1) b``
is the restriction and the ring product is the coproduct.

Bit ``i`` of a ring built by :func:`dual_object` corresponds to element
``i`` of the finite set it came from; that is what makes
:func:`dual_map` a structure-preserving functor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import RestrictionModel
from .errors import Incompatible, InvalidMap, NotBelow, NotCoproductCodomain, NotIdempotent, TypeMismatch
from .finpar import FinSet, PartialMap


@dataclass(frozen=True, eq=False)
class BoolRing:
    rank: int
    name: str
    construction: tuple = ("atom",)

    @cached_property
    def key(self) -> tuple:
        tag = self.construction[0]
        if tag == "atom":
            return ("atom", self.name, self.rank)
        if tag in ("one", "zero"):
            return (tag,)
        if tag == "tensor":
            return ("tensor", self.construction[1].key, self.construction[2].key)
        if tag == "product":
            return ("product", tuple(p.key for p in self.construction[1]))
        raise ValueError(f"unknown construction {tag!r}")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BoolRing):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return self.name

    def __len__(self):
        return self.rank

    @property
    def unit(self) -> int:
        return (1 << self.rank) - 1

    @property
    def carrier(self) -> range:
        return range(1 << self.rank)

    @property
    def tag(self) -> str:
        return self.construction[0]

    def summands(self) -> tuple | None:
        return self.construction[1] if self.tag == "product" else None

    def factors(self) -> tuple | None:
        return (self.construction[1], self.construction[2]) if self.tag == "tensor" else None

    def format_element(self, u: int) -> str:
        return format(u, f"0{self.rank}b")[::-1] if self.rank else "e"


def bring(n: int, name: str | None = None) -> BoolRing:
    if n < 0:
        raise ValueError("rank must be non-negative")
    return BoolRing(n, name or f"bring({n})")


UNIT_RING = BoolRing(1, "one", ("one",))
ZERO_RING = BoolRing(0, "zero", ("zero",))


def tensor(a: BoolRing, b: BoolRing) -> BoolRing:
    return BoolRing(a.rank * b.rank, f"({a.name} * {b.name})", ("tensor", a, b))


def ring_product(*parts: BoolRing) -> BoolRing:
    if not parts:
        return ZERO_RING
    name = "(" + " + ".join(p.name for p in parts) + ")"
    return BoolRing(sum(p.rank for p in parts), name, ("product", tuple(parts)))


def is_idempotent_element(u: int) -> bool:
    # every element of a Boolean ring is idempotent: u AND u == u
    return u & u == u


@dataclass(frozen=True)
class NonUnitalHom:
    """A ring hom ``src -> tgt`` stored as its full value table.

    As a map of the model it points the other way: ``dom`` is ``tgt`` and
    ``cod`` is ``src``.
    """

    src: BoolRing
    tgt: BoolRing
    values: tuple

    def __post_init__(self):
        if len(self.values) != 1 << self.src.rank:
            raise InvalidMap("value table does not cover the source carrier")
        top = self.tgt.unit
        for v in self.values:
            if not 0 <= v <= top:
                raise InvalidMap(f"value {v} is not in {self.tgt}")
        for a in self.src.carrier:
            for b in self.src.carrier:
                if self.values[a ^ b] != self.values[a] ^ self.values[b]:
                    raise InvalidMap("not additive")
                if self.values[a & b] != self.values[a] & self.values[b]:
                    raise InvalidMap("not multiplicative")

    @classmethod
    def _raw(cls, src, tgt, values) -> NonUnitalHom:
        h = object.__new__(cls)
        object.__setattr__(h, "src", src)
        object.__setattr__(h, "tgt", tgt)
        object.__setattr__(h, "values", values)
        return h

    @classmethod
    def from_basis(cls, src: BoolRing, tgt: BoolRing, images: Sequence[int], check: bool = True) -> NonUnitalHom:
        """Extend basis images additively to the whole carrier."""
        values = [0] * (1 << src.rank)
        for a in range(1, 1 << src.rank):
            low = a & -a
            values[a] = values[a ^ low] ^ images[low.bit_length() - 1]
        if check:
            return cls(src, tgt, tuple(values))
        return cls._raw(src, tgt, tuple(values))

    @property
    def dom(self) -> BoolRing:
        return self.tgt

    @property
    def cod(self) -> BoolRing:
        return self.src

    def __call__(self, a: int) -> int:
        return self.values[a]

    @property
    def at_one(self) -> int:
        return self.values[self.src.unit]

    @property
    def is_unital(self) -> bool:
        return self.at_one == self.tgt.unit


def _hom(src, tgt, fn) -> NonUnitalHom:
    return NonUnitalHom._raw(src, tgt, tuple(fn(a) for a in src.carrier))


def _basis(src: BoolRing, tgt: BoolRing, images: Sequence[int]) -> NonUnitalHom:
    return NonUnitalHom.from_basis(src, tgt, images, check=False)


# -- operations named after the closed-form formulas ---------------------


def corestriction(f: NonUnitalHom) -> NonUnitalHom:
    """``b -> f(1) b``, an endomorphism of the ring ``f`` lands in."""
    u = f.at_one
    return _hom(f.tgt, f.tgt, lambda b: u & b)


def _parallel(f: NonUnitalHom, g: NonUnitalHom) -> None:
    if f.src != g.src or f.tgt != g.tgt:
        raise TypeMismatch("maps are not parallel")


def calg_leq(f: NonUnitalHom, g: NonUnitalHom) -> bool:
    """``f <= g`` in the model: ``g(a) f(1) = f(a)``."""
    _parallel(f, g)
    u = f.at_one
    return all(g(a) & u == f(a) for a in f.src.carrier)


def calg_compatible(f: NonUnitalHom, g: NonUnitalHom) -> bool:
    _parallel(f, g)
    u, v = f.at_one, g.at_one
    return all(g(a) & u == f(a) & v for a in f.src.carrier)


def calg_join(f: NonUnitalHom, g: NonUnitalHom) -> NonUnitalHom:
    """``f(a) + g(a) - g(1) f(a)``."""
    if not calg_compatible(f, g):
        raise Incompatible(0, 1)
    v = g.at_one
    return _hom(f.src, f.tgt, lambda a: f(a) ^ g(a) ^ (v & f(a)))


def calg_relcomp(g: NonUnitalHom, f: NonUnitalHom) -> NonUnitalHom:
    """``g(a) - f(1) g(a)``."""
    if not calg_leq(f, g):
        raise NotBelow("f is not below g")
    u = f.at_one
    return _hom(g.src, g.tgt, lambda a: g(a) ^ (u & g(a)))


def idempotent_map(ring: BoolRing, u: int) -> NonUnitalHom:
    """``e_u : b -> u b``."""
    return _hom(ring, ring, lambda b: u & b)


def calg_complement(e: NonUnitalHom) -> NonUnitalHom:
    """``e_u -> e_(1 - u)``."""
    if e.src != e.tgt or corestriction(e) != e:
        raise NotIdempotent("not a corestriction idempotent")
    return idempotent_map(e.src, e.src.unit ^ e.at_one)


def calg_classify(f: NonUnitalHom) -> NonUnitalHom:
    """``T(f)(a, r) = f(a) + r - r f(1)`` on ``src x k`` (``r`` is the top bit)."""
    target = ring_product(f.src, UNIT_RING)
    m = f.src.rank
    u = f.at_one
    top = f.tgt.unit

    def t(x):
        a, r = x & f.src.unit, top if x >> m & 1 else 0
        return f(a) ^ r ^ (r & u)

    return _hom(target, f.tgt, t)


def calg_coclassifier(ring: BoolRing) -> NonUnitalHom:
    """The map ``src -> src x k`` sending ``a`` to ``(a, 0)``."""
    return _hom(ring, ring_product(ring, UNIT_RING), lambda a: a)


def calg_decision(f: NonUnitalHom) -> NonUnitalHom:
    """``(b_0, ..., b_n) -> sum_k f(e_k) b_k`` with ``e_k`` the unit of block k."""
    parts = f.src.summands()
    if parts is None:
        raise NotCoproductCodomain(f"{f.src} is not a product ring")
    ring = f.tgt
    copies = ring_product(*([ring] * len(parts)))
    blocks, offset = [], 0
    for p in parts:
        blocks.append(f(p.unit << offset))
        offset += p.rank
    n = ring.rank

    def d(x):
        out = 0
        for k, u in enumerate(blocks):
            out ^= u & (x >> (k * n)) & ring.unit
        return out

    return _hom(copies, ring, d)


# -- the model -----------------------------------------------------------


def _permutation(src: BoolRing, tgt: BoolRing, perm: Sequence[int]) -> NonUnitalHom:
    """Basis ``e_i`` of ``src`` goes to ``e_perm[i]`` of ``tgt``."""
    return _basis(src, tgt, [1 << p for p in perm])


class CalgModel(RestrictionModel):
    name = "calg"
    features = frozenset(
        {"terminal", "products", "coproducts", "zeroes", "distributive", "joins", "complements", "decisions"}
    )

    def __init__(self, universe: Sequence[BoolRing] = (), homs: dict | None = None):
        self.universe = list(universe)
        self.homs = dict(homs or {})
        self._homs: dict = {}

    def objects(self):
        return self.universe

    def size(self, a):
        return a.rank

    def signature(self, a):
        return a.rank

    def hom_size(self, a, b):
        return (b.rank + 1) ** a.rank

    def hom(self, a, b):
        """Ring homs ``R(b) -> R(a)``: basis images of ``b`` that multiply correctly."""
        key = (a, b)
        cached = self._homs.get(key)
        if cached is None:
            cached = []
            for images in itertools.product(a.carrier, repeat=b.rank):
                h = _basis(b, a, images)
                if all(h(x & y) == h(x) & h(y) for x in b.carrier for y in b.carrier):
                    cached.append(h)
            self._homs[key] = cached
        return cached

    def format_map(self, f):
        rows = ", ".join(
            f"{f.src.format_element(1 << i)} -> {f.tgt.format_element(f(1 << i))}" for i in range(f.src.rank)
        )
        return f"hom _ : {f.src.name} -> {f.tgt.name} {{ {rows} }}"

    def identity(self, a):
        return _hom(a, a, lambda x: x)

    def compose(self, f, g):
        if f.cod != g.dom:
            raise TypeMismatch(f"cannot compose {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
        fv = f.values
        return NonUnitalHom._raw(g.src, f.tgt, tuple(fv[v] for v in g.values))

    def restrict(self, f):
        return corestriction(f)

    def terminal(self):
        return UNIT_RING

    def t(self, a):
        return _hom(UNIT_RING, a, lambda x: a.unit if x else 0)

    def product(self, a, b):
        return tensor(a, b)

    def proj(self, i, a, b):
        ab = tensor(a, b)
        if i == 0:
            return _basis(a, ab, [sum(1 << (k * b.rank + j) for j in range(b.rank)) for k in range(a.rank)])
        return _basis(b, ab, [sum(1 << (k * b.rank + j) for k in range(a.rank)) for j in range(b.rank)])

    def pair(self, f, g):
        if f.dom != g.dom:
            raise TypeMismatch("pairing needs a common domain")
        a, b = f.cod, g.cod
        images = [f(1 << i) & g(1 << j) for i in range(a.rank) for j in range(b.rank)]
        return _basis(tensor(a, b), f.dom, images)

    def initial(self):
        return ZERO_RING

    def z(self, a):
        return _hom(a, ZERO_RING, lambda x: 0)

    def coproduct(self, objs):
        return ring_product(*objs)

    def summands(self, obj):
        if obj.tag == "zero":
            return ()
        return obj.summands()

    def _offset(self, obj, j):
        parts = self.summands(obj)
        if parts is None:
            raise TypeMismatch(f"{obj} is not a coproduct")
        return parts, sum(p.rank for p in parts[:j])

    def inj(self, j, obj):
        parts, offset = self._offset(obj, j)
        part = parts[j]
        return _hom(obj, part, lambda x: (x >> offset) & part.unit)

    def copair(self, fs, obj=None, cod=None):
        fs = list(fs)
        if cod is None:
            cod = fs[0].cod
        if obj is None:
            obj = ring_product(*(f.dom for f in fs))
        parts = self.summands(obj)
        if parts is None or len(parts) != len(fs) or any(p != f.dom for p, f in zip(parts, fs)):
            raise TypeMismatch("copairing legs do not match the summands")
        shifts = list(itertools.accumulate([0] + [p.rank for p in parts]))[:-1]

        def c(x):
            out = 0
            for f, s in zip(fs, shifts):
                out |= f(x) << s
            return out

        return _hom(cod, obj, c)

    def zero(self, a, b):
        return _hom(b, a, lambda x: 0)

    def amp(self, a, b):
        return ring_product(a, b, tensor(a, b))

    def _distributor_perm(self, a, b, c):
        # source ring: a*(b+c); target ring: (a*b)+(a*c); bit k of the source goes to perm[k]
        nb, nc = b.rank, c.rank
        perm = []
        for i in range(a.rank):
            for k in range(nb + nc):
                perm.append(i * nb + k if k < nb else a.rank * nb + i * nc + (k - nb))
        return perm

    def distributor(self, a, b, c):
        src = tensor(a, ring_product(b, c))
        tgt = ring_product(tensor(a, b), tensor(a, c))
        return _permutation(src, tgt, self._distributor_perm(a, b, c))

    def distributor_inverse(self, a, b, c):
        perm = self._distributor_perm(a, b, c)
        inverse = [0] * len(perm)
        for k, p in enumerate(perm):
            inverse[p] = k
        src = ring_product(tensor(a, b), tensor(a, c))
        tgt = tensor(a, ring_product(b, c))
        return _permutation(src, tgt, inverse)

    def join2(self, f, g):
        return calg_join(f, g)

    def relcomp(self, g, f):
        return calg_relcomp(g, f)

    def decision(self, f):
        return calg_decision(f)


# -- spectrum duality ----------------------------------------------------


def dual_object(x: FinSet) -> BoolRing:
    tag = x.tag
    if tag == "one":
        return UNIT_RING
    if tag == "zero":
        return ZERO_RING
    if tag == "prod":
        left, right = x.factors()
        return tensor(dual_object(left), dual_object(right))
    if tag in ("coprod", "amp"):
        return ring_product(*(dual_object(p) for p in x.summands()))
    return BoolRing(len(x), x.name)


def dual_map(f: PartialMap) -> NonUnitalHom:
    """``u -> { x : f(x) defined and in u }`` as a hom ``R(cod) -> R(dom)``."""
    src, tgt = dual_object(f.cod), dual_object(f.dom)
    images = [0] * len(f.cod)
    for i, v in enumerate(f.table):
        if v is not None:
            images[v] |= 1 << i
    return _basis(src, tgt, images)


def spectrum(u: int, ring: BoolRing) -> list[int]:
    """Positions of the set bits (the points of the spectrum under ``u``)."""
    return [i for i in range(ring.rank) if u >> i & 1]


def calg_universe(sets: Sequence[FinSet]) -> list[BoolRing]:
    seen: dict = {}
    for x in sets:
        r = dual_object(x)
        seen.setdefault(r, r)
    return list(seen)
