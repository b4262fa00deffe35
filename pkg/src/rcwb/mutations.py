"""Deliberately broken FinPar models.

Each fixture overrides one piece of structure and names the suite that
should notice and the laws that should flip to ``fail`` there.  A model
file selects one with the ``mutation <name>`` directive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finpar import ONE, FinParModel, PartialMap, compose, identity, pair, zero_map


class TrivialRestriction(FinParModel):
    """Every restriction is the identity."""

    def restrict(self, f):
        return identity(f.dom)


class BadTerminal(FinParModel):
    """``t_A`` is the nowhere-defined map."""

    def t(self, a):
        return zero_map(a, ONE)


class BadPair(FinParModel):
    """Pairing forgets the first point where two partial legs meet."""

    def pair(self, f, g):
        h = pair(f, g)
        if f.is_total and g.is_total:
            return h
        table = list(h.table)
        for i, v in enumerate(table):
            if v is not None:
                table[i] = None
                break
        return PartialMap(h.dom, h.cod, tuple(table))


class BadDistributor(FinParModel):
    """The distributor swaps the first two elements of its codomain."""

    def distributor(self, a, b, c):
        d = super().distributor(a, b, c)
        n = len(d.cod)
        if n < 2:
            return d
        swap = PartialMap(d.cod, d.cod, (1, 0, *range(2, n)))
        return compose(d, swap)


class BadDecision(FinParModel):
    """Decisions tag each point with the next summand instead of its own."""

    def decision(self, f):
        d = super().decision(f)
        n = len(f.cod.summands())
        size = len(f.dom)
        table = tuple(None if v is None else ((v // size + 1) % n) * size + v % size for v in d.table)
        return PartialMap(d.dom, d.cod, table)


@dataclass(frozen=True)
class Mutation:
    name: str
    model: type[FinParModel]
    suite: str
    targets: frozenset[str]
    note: str = ""


MUTATIONS: dict[str, Mutation] = {
    m.name: m
    for m in (
        Mutation("bad-terminal", BadTerminal, "axioms", frozenset({"terminal.total"})),
        Mutation("bad-pair", BadPair, "axioms", frozenset({"restriction-product"})),
        Mutation("bad-distributor", BadDistributor, "axioms", frozenset({"distributive"})),
        Mutation("bad-decision", BadDecision, "decision-unique", frozenset({"decision"})),
        Mutation(
            "trivial-restriction",
            TrivialRestriction,
            "axioms",
            frozenset(
                {
                    "terminal",
                    "terminal.total",
                    "restriction-product",
                    "restriction-product.unique",
                    "restriction-zero",
                    "qproj.restriction",
                    "qproj.retract",
                    "qproj.disjoint",
                    "cproj.restriction",
                    "cproj.overlap",
                }
            ),
            note="R.1-R.4 all survive this one (1 ; f = f); the structural laws catch it",
        ),
    )
}


def mutated(name: str, model: FinParModel) -> FinParModel:
    """A copy of ``model`` with the named mutation applied."""
    try:
        cls = MUTATIONS[name].model
    except KeyError:
        raise KeyError(f"unknown mutation {name!r}; expected one of {', '.join(MUTATIONS)}") from None
    return cls(model.universe, atoms=model.atoms, maps=model.maps, max_hom=model.max_hom)


def mutation_name(model: FinParModel) -> str | None:
    for m in MUTATIONS.values():
        if type(model) is m.model:
            return m.name
    return None
