"""Finite sets and partial functions.

Objects are :class:`FinSet` values that remember how they were built, and
maps are :class:`PartialMap` tables.  Element encodings are canonical:

* a product element is the pair ``(a, b)``, enumerated lexicographically;
* a coproduct element is ``(j, x)`` for ``x`` in summand ``j``;
* ``amp(A, B)`` is literally the coproduct ``A + B + A*B``;
* the terminal object ``one`` has the single element ``"*"``.

A map stores, for each domain element in order, the index of its image in
the codomain or ``None`` where it is undefined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from .core import RestrictionModel
from .errors import (
    BudgetExceeded,
    Incompatible,
    IndexOutOfRange,
    InvalidMap,
    NotBelow,
    NotCoproductCodomain,
    TypeMismatch,
)

STAR = "*"


@dataclass(frozen=True, eq=False)
class FinSet:
    name: str
    elements: tuple
    construction: tuple = ("atom",)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"object {self.name} has repeated elements")

    @cached_property
    def key(self) -> tuple:
        tag = self.construction[0]
        if tag == "atom":
            return ("atom", self.name, self.elements)
        if tag in ("one", "zero"):
            return (tag,)
        if tag == "prod":
            return ("prod", self.construction[1].key, self.construction[2].key)
        if tag == "coprod":
            return ("coprod", tuple(p.key for p in self.construction[1]))
        if tag == "amp":
            left, right = self.construction[1], self.construction[2]
            return ("coprod", (left.key, right.key, prod(left, right).key))
        if tag == "sub":
            return ("sub", self.construction[1].key, self.construction[2])
        raise ValueError(f"unknown construction {tag!r}")

    @cached_property
    def _hash(self) -> int:
        return hash(self.key)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinSet):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"FinSet({self.name})"

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def tag(self) -> str:
        return self.construction[0]

    def summands(self) -> tuple | None:
        if self.tag == "coprod":
            return self.construction[1]
        if self.tag == "amp":
            left, right = self.construction[1], self.construction[2]
            return (left, right, prod(left, right))
        return None

    def factors(self) -> tuple | None:
        if self.tag == "prod":
            return self.construction[1], self.construction[2]
        return None

    def format_element(self, e: Any) -> str:
        tag = self.tag
        if tag == "prod":
            left, right = self.factors()
            return f"({left.format_element(e[0])}, {right.format_element(e[1])})"
        parts = self.summands()
        if parts is not None:
            j, x = e
            return f"in{j}({parts[j].format_element(x)})"
        if tag == "sub":
            return self.construction[1].format_element(e)
        return str(e)


def atom(name: str, labels: Iterable[str]) -> FinSet:
    return FinSet(name, tuple(labels), ("atom",))


ONE = FinSet("one", (STAR,), ("one",))
ZERO = FinSet("zero", (), ("zero",))


def _operand(obj: FinSet, tight: bool) -> str:
    if obj.tag in ("coprod",) or (tight and obj.tag == "prod"):
        return f"({obj.name})"
    return obj.name


def prod(left: FinSet, right: FinSet) -> FinSet:
    elements = tuple(itertools.product(left.elements, right.elements))
    name = f"{_operand(left, False)} * {_operand(right, True)}"
    return FinSet(name, elements, ("prod", left, right))


def coprod(*parts: FinSet) -> FinSet:
    elements = tuple((j, x) for j, p in enumerate(parts) for x in p.elements)
    if len(parts) == 1:
        name = f"sum({parts[0].name})"
    else:
        name = " + ".join(_operand(p, False) for p in parts)
    return FinSet(name, elements, ("coprod", tuple(parts)))


def amp(left: FinSet, right: FinSet) -> FinSet:
    base = coprod(left, right, prod(left, right))
    return FinSet(f"amp({left.name}, {right.name})", base.elements, ("amp", left, right))


def subset(parent: FinSet, indices: Sequence[int], name: str | None = None) -> FinSet:
    """The canonical sub-object on the given element positions (order kept)."""
    indices = tuple(sorted(indices))
    elements = tuple(parent.elements[i] for i in indices)
    label = name or f"{_operand(parent, True)}|{list(indices)}"
    return FinSet(label, elements, ("sub", parent, indices))


# -- maps ----------------------------------------------------------------


@dataclass(frozen=True)
class PartialMap:
    dom: FinSet
    cod: FinSet
    table: tuple

    def __post_init__(self):
        if len(self.table) != len(self.dom):
            raise InvalidMap(f"table has {len(self.table)} entries for a domain of {len(self.dom)}")
        n = len(self.cod)
        for v in self.table:
            if v is not None and not (isinstance(v, int) and 0 <= v < n):
                raise InvalidMap(f"table entry {v!r} outside the codomain {self.cod}")

    @classmethod
    def _raw(cls, dom: FinSet, cod: FinSet, table: tuple) -> PartialMap:
        # trusted fast path for internal operations
        f = object.__new__(cls)
        object.__setattr__(f, "dom", dom)
        object.__setattr__(f, "cod", cod)
        object.__setattr__(f, "table", table)
        return f

    @classmethod
    def from_graph(cls, dom: FinSet, cod: FinSet, graph: Mapping) -> PartialMap:
        table = [None] * len(dom)
        for x, y in graph.items():
            if x not in dom.index:
                raise InvalidMap(f"{x!r} is not an element of {dom}")
            if y not in cod.index:
                raise InvalidMap(f"{y!r} is not an element of {cod}")
            table[dom.index[x]] = cod.index[y]
        return cls._raw(dom, cod, tuple(table))

    @property
    def graph(self) -> dict:
        cod = self.cod.elements
        return {x: cod[v] for x, v in zip(self.dom.elements, self.table) if v is not None}

    def __call__(self, x: Any) -> Any:
        v = self.table[self.dom.index[x]]
        return None if v is None else self.cod.elements[v]

    def defined(self, x: Any) -> bool:
        return self.table[self.dom.index[x]] is not None

    @property
    def is_total(self) -> bool:
        return None not in self.table

    def __repr__(self) -> str:
        return f"PartialMap({self.dom} -> {self.cod}, {format_graph(self)})"


def format_graph(f: PartialMap) -> str:
    items = [
        f"{f.dom.format_element(x)} -> {f.cod.format_element(f.cod.elements[v])}"
        for x, v in zip(f.dom.elements, f.table)
        if v is not None
    ]
    return "{ " + ", ".join(items) + " }" if items else "{ }"


def format_map(f: PartialMap, name: str = "_") -> str:
    return f"map {name} : {f.dom.name} -> {f.cod.name} {format_graph(f)}"


def identity(a: FinSet) -> PartialMap:
    return PartialMap._raw(a, a, tuple(range(len(a))))


def zero_map(a: FinSet, b: FinSet) -> PartialMap:
    return PartialMap._raw(a, b, (None,) * len(a))


def restriction(f: PartialMap) -> PartialMap:
    return PartialMap._raw(f.dom, f.dom, tuple(None if v is None else i for i, v in enumerate(f.table)))


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise TypeMismatch(f"cannot compose {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
    gt = g.table
    return PartialMap._raw(f.dom, g.cod, tuple(None if v is None else gt[v] for v in f.table))


def terminal_map(a: FinSet) -> PartialMap:
    return PartialMap._raw(a, ONE, (0,) * len(a))


def initial_map(a: FinSet) -> PartialMap:
    return PartialMap._raw(ZERO, a, ())


def proj(i: int, p: FinSet) -> PartialMap:
    factors = p.factors()
    if factors is None:
        raise TypeMismatch(f"{p} is not a product")
    if i not in (0, 1):
        raise IndexOutOfRange(f"projection index {i}")
    target = factors[i]
    return PartialMap._raw(p, target, tuple(target.index[e[i]] for e in p.elements))


def pair(f: PartialMap, g: PartialMap) -> PartialMap:
    if f.dom != g.dom:
        raise TypeMismatch(f"pairing needs a common domain, got {f.dom} and {g.dom}")
    target = prod(f.cod, g.cod)
    width = len(g.cod)
    table = tuple(
        None if u is None or v is None else u * width + v for u, v in zip(f.table, g.table)
    )
    return PartialMap._raw(f.dom, target, table)


def _summands(obj: FinSet) -> tuple:
    parts = obj.summands()
    if parts is None:
        raise TypeMismatch(f"{obj} is not a coproduct")
    return parts


def inj(j: int, obj: FinSet) -> PartialMap:
    parts = _summands(obj)
    if not 0 <= j < len(parts):
        raise IndexOutOfRange(f"injection {j} into a {len(parts)}-fold coproduct")
    offset = sum(len(p) for p in parts[:j])
    return PartialMap._raw(parts[j], obj, tuple(range(offset, offset + len(parts[j]))))


def copair(fs: Sequence[PartialMap], obj: FinSet | None = None, cod: FinSet | None = None) -> PartialMap:
    """``[f0, ..., fn]`` out of the coproduct of the domains (or ``obj``)."""
    fs = list(fs)
    if cod is None:
        if not fs:
            raise TypeMismatch("an empty copairing needs an explicit codomain")
        cod = fs[0].cod
    for f in fs:
        if f.cod != cod:
            raise TypeMismatch(f"copairing legs disagree on codomain: {f.cod} vs {cod}")
    if obj is None:
        obj = coprod(*(f.dom for f in fs)) if fs else ZERO
    parts = () if obj.tag == "zero" else _summands(obj)
    if len(parts) != len(fs) or any(p != f.dom for p, f in zip(parts, fs)):
        raise TypeMismatch(f"copairing legs do not match the summands of {obj}")
    table = tuple(v for f in fs for v in f.table)
    return PartialMap._raw(obj, cod, table)


def quasi_projection(j: int, obj: FinSet) -> PartialMap:
    parts = _summands(obj)
    if not 0 <= j < len(parts):
        raise IndexOutOfRange(f"quasi-projection {j} of a {len(parts)}-fold coproduct")
    target = parts[j]
    return copair(
        [identity(p) if i == j else zero_map(p, target) for i, p in enumerate(parts)], obj, target
    )


def from_function(dom: FinSet, cod: FinSet, fn) -> PartialMap:
    """Tabulate ``fn`` over ``dom``; ``fn`` returns an element of ``cod`` or ``None``."""
    return PartialMap._raw(
        dom, cod, tuple(None if (y := fn(x)) is None else cod.index[y] for x in dom.elements)
    )


def distributor(a: FinSet, b: FinSet, c: FinSet) -> PartialMap:
    """``(a*b) + (a*c) -> a*(b+c)``, the canonical distributivity map."""
    src = coprod(prod(a, b), prod(a, c))
    tgt = prod(a, coprod(b, c))
    return from_function(src, tgt, lambda e: (e[1][0], (e[0], e[1][1])))


def distributor_inverse(a: FinSet, b: FinSet, c: FinSet) -> PartialMap:
    src = prod(a, coprod(b, c))
    tgt = coprod(prod(a, b), prod(a, c))
    return from_function(src, tgt, lambda e: (e[1][0], (e[0], e[1][1])))


def join(f: PartialMap, g: PartialMap) -> PartialMap:
    """Pointwise union of two compatible graphs."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TypeMismatch("join of non-parallel maps")
    out = []
    for u, v in zip(f.table, g.table):
        if u is not None and v is not None and u != v:
            raise Incompatible(0, 1)
        out.append(u if u is not None else v)
    return PartialMap._raw(f.dom, f.cod, tuple(out))


def relative_complement(g: PartialMap, f: PartialMap) -> PartialMap:
    """``g`` cut down to where ``f`` is undefined; needs ``f <= g``."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TypeMismatch("relative complement of non-parallel maps")
    for u, v in zip(f.table, g.table):
        if u is not None and u != v:
            raise NotBelow("the subtracted map is not below the ambient map")
    return PartialMap._raw(g.dom, g.cod, tuple(v if u is None else None for u, v in zip(f.table, g.table)))


def decision(f: PartialMap) -> PartialMap:
    """Tag each point with the summand its image lands in."""
    parts = f.cod.summands()
    if parts is None:
        raise NotCoproductCodomain(f"{f.cod} is not a coproduct")
    n = len(f.dom)
    target = coprod(*([f.dom] * len(parts))) if parts else ZERO
    table = []
    for i, v in enumerate(f.table):
        if v is None:
            table.append(None)
        else:
            j = f.cod.elements[v][0]
            table.append(j * n + i)
    return PartialMap._raw(f.dom, target, tuple(table))


def hom_tables(n: int, m: int) -> Iterable[tuple]:
    """Every partial assignment of ``n`` points into ``m``, undefined first."""
    return itertools.product((None, *range(m)), repeat=n)


def build_universe(atoms: Sequence[FinSet], max_size: int, depth: int = 2) -> list[FinSet]:
    """Close ``atoms + one + zero`` under ``*``, ``+`` and ``amp`` to the given depth.

    Only objects with at most ``max_size`` elements are kept; order is the
    order of discovery, which makes suite output deterministic.
    """
    seen: dict = {}

    def keep(obj: FinSet):
        if len(obj) <= max_size and obj not in seen:
            seen[obj] = obj

    for a in (*atoms, ONE, ZERO):
        keep(a)
    for _ in range(depth):
        level = list(seen)
        for x in level:
            for y in level:
                if len(x) * len(y) <= max_size:
                    keep(prod(x, y))
                if len(x) + len(y) <= max_size:
                    keep(coprod(x, y))
                if len(x) + len(y) + len(x) * len(y) <= max_size:
                    keep(amp(x, y))
    return list(seen)


class FinParModel(RestrictionModel):
    """Finite sets and partial functions with all of their structure."""

    name = "finpar"
    features = frozenset(
        {"terminal", "products", "coproducts", "zeroes", "distributive", "joins", "complements", "decisions"}
    )

    def __init__(
        self,
        universe: Sequence[FinSet] = (),
        *,
        atoms: Mapping[str, FinSet] | None = None,
        maps: Mapping[str, PartialMap] | None = None,
        max_hom: int = 4096,
    ):
        self.universe = list(universe)
        self.atoms = dict(atoms or {})
        self.maps = dict(maps or {})
        self.max_hom = max_hom
        self._homs: dict = {}

    @classmethod
    def from_atoms(cls, atoms: Sequence[FinSet], max_size: int = 3, **kw) -> FinParModel:
        return cls(build_universe(atoms, max_size), atoms={a.name: a for a in atoms}, **kw)

    def resized(self, max_size: int) -> FinParModel:
        """The same atoms and maps over a universe of another size.

        The class is kept, so a mutated model stays mutated.
        """
        return type(self).from_atoms(list(self.atoms.values()), max_size, maps=self.maps, max_hom=self.max_hom)

    def objects(self):
        return self.universe

    def hom_size(self, a, b):
        return (len(b) + 1) ** len(a)

    def hom(self, a, b):
        key = (a, b)
        cached = self._homs.get(key)
        if cached is None:
            if self.hom_size(a, b) > self.max_hom:
                raise BudgetExceeded(f"hom({a}, {b}) has {self.hom_size(a, b)} maps > {self.max_hom}")
            cached = [PartialMap._raw(a, b, t) for t in hom_tables(len(a), len(b))]
            self._homs[key] = cached
        return cached

    def signature(self, a):
        return len(a)

    def format_map(self, f):
        return format_map(f)

    def identity(self, a):
        return identity(a)

    def compose(self, f, g):
        return compose(f, g)

    def restrict(self, f):
        return restriction(f)

    def terminal(self):
        return ONE

    def t(self, a):
        return terminal_map(a)

    def product(self, a, b):
        return prod(a, b)

    def proj(self, i, a, b):
        return proj(i, prod(a, b))

    def pair(self, f, g):
        return pair(f, g)

    def initial(self):
        return ZERO

    def z(self, a):
        return initial_map(a)

    def coproduct(self, objs):
        return coprod(*objs) if objs else ZERO

    def summands(self, obj):
        if obj.tag == "zero":
            return ()
        return obj.summands()

    def inj(self, j, obj):
        return inj(j, obj)

    def copair(self, fs, obj=None, cod=None):
        return copair(fs, obj, cod)

    def zero(self, a, b):
        return zero_map(a, b)

    def amp(self, a, b):
        return amp(a, b)

    def distributor(self, a, b, c):
        return distributor(a, b, c)

    def distributor_inverse(self, a, b, c):
        return distributor_inverse(a, b, c)

    def join2(self, f, g):
        return join(f, g)

    def relcomp(self, g, f):
        return relative_complement(g, f)

    def decision(self, f):
        return decision(f)
