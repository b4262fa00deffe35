"""Brute-force verification of universal properties.

Nothing here trusts a construction.  Existence and uniqueness are decided
by walking the relevant hom-set and testing the defining equations, and
the pointwise oracles at the bottom work on raw graphs (plain dicts), so
they share no code with the categorical operations they are compared to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .core import RestrictionModel, is_total, leq
from .errors import BudgetExceeded, Incompatible, NotBelow, NotIdempotent
from .finpar import PartialMap
from .laws import FAIL, PASS, SKIPPED, Budget

KINDS = (
    "product",
    "restriction-product",
    "coproduct",
    "classical-product",
    "decision",
    "classifier",
    "join-lub",
)


@dataclass
class UniversalCheck:
    kind: str
    subject: str
    status: str
    checked: int = 0
    counterexample: dict[str, str] | None = None
    detail: str = ""
    recheck: Callable[[], bool] | None = field(default=None, compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS


class _Abort(Exception):
    def __init__(self, cex: dict, detail: str):
        self.cex, self.detail = cex, detail


class _Run:
    """Bookkeeping shared by one ``verify_universal`` call."""

    def __init__(self, model: RestrictionModel, budget: Budget):
        self.model, self.budget = model, budget
        self.checked = 0

    def hom(self, a, b) -> Sequence:
        if self.model.hom_size(a, b) > self.budget.max_hom:
            raise BudgetExceeded(
                f"hom({self.model.format_object(a)}, {self.model.format_object(b)}) "
                f"has {self.model.hom_size(a, b)} maps"
            )
        return self.model.hom(a, b)

    def fail(self, detail: str, **maps):
        fmt = self.model.format_map
        raise _Abort({k: (v if isinstance(v, str) else fmt(v)) for k, v in maps.items()}, detail)


def verify_universal(kind: str, witnesses: dict[str, Any], budget: Budget | None = None) -> UniversalCheck:
    """Check one universal property of the given witnesses by enumeration.

    ``witnesses`` always holds ``model``; the other keys depend on ``kind``
    (see the ``_check_*`` functions).  Test objects default to the model's
    objects of size at most ``budget.max_size``.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown universal property {kind!r}; expected one of {', '.join(KINDS)}")
    budget = budget or Budget()
    model = witnesses["model"]
    run = _Run(model, budget)
    check = _CHECKS[kind]
    subject = witnesses.get("subject", kind)
    try:
        check(run, witnesses)
    except BudgetExceeded as exc:
        return UniversalCheck(kind, subject, SKIPPED, run.checked, detail=str(exc))
    except _Abort as abort:
        return UniversalCheck(
            kind,
            subject,
            FAIL,
            run.checked,
            abort.cex,
            abort.detail,
            recheck=lambda: not verify_universal(kind, witnesses, budget).passed,
        )
    return UniversalCheck(kind, subject, PASS, run.checked)


def _tests(run: _Run, w: dict) -> list:
    if "tests" in w:
        return list(w["tests"])
    m = run.model
    seen: dict = {}
    for a in m.objects():
        if m.size(a) <= run.budget.max_size:
            seen.setdefault(m.signature(a), a)
    return list(seen.values())


def _check_product(run: _Run, w: dict, restriction: bool = False) -> None:
    """Witnesses: ``obj``, ``proj0``, ``proj1`` and optionally ``pair``."""
    m = run.model
    c, r = m.compose, m.restrict
    p0, p1, obj = w["proj0"], w["proj1"], w["obj"]
    a, b = m.cod(p0), m.cod(p1)
    if restriction:
        for p in (p0, p1):
            if not is_total(m, p):
                run.fail("restriction-product projections must be total", proj=p)
    pair = w.get("pair")
    for cc in _tests(run, w):
        index: dict = {}
        for h in run.hom(cc, obj):
            index.setdefault((c(h, p0), c(h, p1)), []).append(h)
        for f in run.hom(cc, a):
            for g in run.hom(cc, b):
                run.checked += 1
                want = (c(r(g), f), c(r(f), g)) if restriction else (f, g)
                hits = index.get(want, [])
                if not hits:
                    run.fail("no mediating map exists", f=f, g=g)
                if len(hits) > 1:
                    run.fail("mediating map is not unique", f=f, g=g, h0=hits[0], h1=hits[1])
                if pair is not None and pair(f, g) != hits[0]:
                    run.fail("the construction is not the mediating map", f=f, g=g, pair=pair(f, g), h=hits[0])


def _check_coproduct(run: _Run, w: dict) -> None:
    """Witnesses: ``obj``, ``injections`` and optionally ``copair``."""
    m = run.model
    c = m.compose
    obj, injs = w["obj"], list(w["injections"])
    for i in injs:
        if not is_total(m, i):
            run.fail("coproduct injections must be total", inj=i)
    copair = w.get("copair")
    for d in _tests(run, w):
        index: dict = {}
        for h in run.hom(obj, d):
            index.setdefault(tuple(c(i, h) for i in injs), []).append(h)
        for legs in itertools.product(*(run.hom(m.dom(i), d) for i in injs)):
            run.checked += 1
            hits = index.get(legs, [])
            if len(hits) != 1:
                run.fail(
                    "no mediating map exists" if not hits else "mediating map is not unique",
                    **{f"f{j}": f for j, f in enumerate(legs)},
                )
            if copair is not None and copair(list(legs)) != hits[0]:
                run.fail("the construction is not the mediating map", copair=copair(list(legs)), h=hits[0])


def _check_decision(run: _Run, w: dict) -> None:
    """Witnesses: ``f`` (into a coproduct) and optionally ``decision``."""
    from .classical import check_decision

    m = run.model
    f = w["f"]
    n = len(m.summands(m.cod(f)))
    a = m.dom(f)
    copies = m.coproduct([a] * n)
    # every candidate is tested; D.2 only runs where D.1 already holds
    by_d1 = _d1_index(run, a, n)
    candidates = [d for d in by_d1.get(m.restrict(f), ()) if check_decision(m, f, d)]
    run.checked += m.hom_size(a, copies)
    if len(candidates) != 1:
        run.fail(f"{len(candidates)} maps satisfy D.1 and D.2", f=f)
    built = w.get("decision")
    if built is not None and built != candidates[0]:
        run.fail("the construction is not the decision", f=f, decision=built, expected=candidates[0])


_D1_CACHE: dict = {}


def _d1_index(run: _Run, a, n: int) -> dict:
    """Candidates ``d : A -> A + ... + A`` grouped by ``d [1, ..., 1]``."""
    m = run.model
    key = (id(m), a, n)
    index = _D1_CACHE.get(key)
    if index is None or index[0] is not m:
        copies = m.coproduct([a] * n)
        fold = m.copair([m.identity(a)] * n, copies, a)
        groups: dict = {}
        for d in run.hom(a, copies):
            groups.setdefault(m.compose(d, fold), []).append(d)
        index = (m, groups)
        _D1_CACHE[key] = index
    return index[1]


def _check_classifier(run: _Run, w: dict) -> None:
    """Witnesses: ``f``, ``obj`` (= cod + 1), ``counit`` (the map out of it)
    and optionally ``classify`` (the construction)."""
    m = run.model
    f, obj, eps = w["f"], w["obj"], w["counit"]
    hits = [h for h in run.hom(m.dom(f), obj) if is_total(m, h) and m.compose(h, eps) == f]
    run.checked += m.hom_size(m.dom(f), obj)
    if len(hits) != 1:
        run.fail(f"{len(hits)} total maps factor f through the classifier", f=f)
    built = w.get("classify")
    if built is not None and built != hits[0]:
        run.fail("the construction is not the classifying map", f=f, classify=built, expected=hits[0])


def _check_join_lub(run: _Run, w: dict) -> None:
    """Witnesses: ``family``, ``dom``, ``cod`` and optionally ``join``."""
    m = run.model
    fs, a, b = list(w["family"]), w["dom"], w["cod"]
    uppers = [h for h in run.hom(a, b) if all(leq(m, f, h) for f in fs)]
    run.checked += len(run.hom(a, b))
    least = [u for u in uppers if all(leq(m, u, h) for h in uppers)]
    if len(least) != 1:
        run.fail(f"{len(least)} least upper bounds", **{f"f{j}": f for j, f in enumerate(fs)})
    built = w.get("join")
    if built is not None and built != least[0]:
        run.fail("the construction is not the least upper bound", join=built, expected=least[0])


_CHECKS: dict[str, Callable[[_Run, dict], None]] = {
    "product": _check_product,
    "restriction-product": lambda run, w: _check_product(run, w, restriction=True),
    "coproduct": _check_coproduct,
    "classical-product": _check_product,
    "decision": _check_decision,
    "classifier": _check_classifier,
    "join-lub": _check_join_lub,
}


# -- pairing found by search ---------------------------------------------


class UniversalPairing:
    """The classical pairing obtained purely from the universal property.

    For ``f : C -> A`` and ``g : C -> B`` it returns the unique ``h`` into
    ``amp(A, B)`` with ``h p0 = f`` and ``h p1 = g``, found by searching
    the hom-set.  Indexes are cached per ``(C, A, B)``.
    """

    def __init__(self, budget: Budget | None = None):
        self.budget = budget or Budget()
        self._index: dict = {}

    def __call__(self, model: RestrictionModel, f, g):
        from .core import classical_projection

        c = model.compose
        a, b, cc = model.cod(f), model.cod(g), model.dom(f)
        key = (id(model), cc, a, b)
        index = self._index.get(key)
        if index is None:
            obj = model.amp(a, b)
            if model.hom_size(cc, obj) > self.budget.max_hom:
                raise BudgetExceeded(f"hom into {model.format_object(obj)} is over budget")
            p0, p1 = classical_projection(model, 0, a, b), classical_projection(model, 1, a, b)
            index = {}
            for h in model.hom(cc, obj):
                index.setdefault((c(h, p0), c(h, p1)), []).append(h)
            self._index[key] = index
        hits = index.get((f, g), [])
        if len(hits) != 1:
            raise Incompatible(0, 1, f"{len(hits)} maps satisfy the pairing equations")
        return hits[0]


# -- pointwise oracles on raw graphs -------------------------------------


def _graph(f: PartialMap) -> dict:
    return dict(f.graph)


def oracle_join(f: PartialMap, g: PartialMap) -> PartialMap:
    """Graph union."""
    fg, gg = _graph(f), _graph(g)
    for x in fg.keys() & gg.keys():
        if fg[x] != gg[x]:
            raise Incompatible(0, 1, f"they disagree at {x!r}")
    return PartialMap.from_graph(f.dom, f.cod, {**fg, **gg})


def oracle_relcomp(g: PartialMap, f: PartialMap) -> PartialMap:
    """``g`` restricted to the points where ``f`` is undefined."""
    fg, gg = _graph(f), _graph(g)
    if any(gg.get(x) != y for x, y in fg.items()):
        raise NotBelow("f is not below g")
    return PartialMap.from_graph(g.dom, g.cod, {x: y for x, y in gg.items() if x not in fg})


def oracle_complement(e: PartialMap) -> PartialMap:
    """Domain complement of a partial identity."""
    eg = _graph(e)
    if e.dom != e.cod or any(x != y for x, y in eg.items()):
        raise NotIdempotent("not a partial identity")
    return PartialMap.from_graph(e.dom, e.dom, {x: x for x in e.dom.elements if x not in eg})


def oracle_cpair(f: PartialMap, g: PartialMap) -> PartialMap:
    """The four-case table for the classical pairing of partial functions."""
    from .finpar import amp

    target = amp(f.cod, g.cod)
    fg, gg = _graph(f), _graph(g)
    out = {}
    for x in f.dom.elements:
        if x in fg and x in gg:
            out[x] = (2, (fg[x], gg[x]))
        elif x in fg:
            out[x] = (0, fg[x])
        elif x in gg:
            out[x] = (1, gg[x])
    return PartialMap.from_graph(f.dom, target, out)


def oracle_decision(f: PartialMap) -> PartialMap:
    """Tag each defined point with the summand index of its image."""
    from .finpar import coprod

    n = len(f.cod.summands())
    target = coprod(*([f.dom] * n))
    return PartialMap.from_graph(f.dom, target, {x: (y[0], x) for x, y in _graph(f).items()})


def pointwise_oracles(f: PartialMap, g: PartialMap) -> dict[str, PartialMap | None]:
    """Join, ``g \\ f`` and the complement of ``f``'s domain, where defined."""
    out: dict[str, PartialMap | None] = {}
    try:
        out["join"] = oracle_join(f, g)
    except Incompatible:
        out["join"] = None
    try:
        out["relcomp"] = oracle_relcomp(g, f)
    except NotBelow:
        out["relcomp"] = None
    dom = {x: x for x in _graph(f)}
    out["complement"] = oracle_complement(PartialMap.from_graph(f.dom, f.dom, dom))
    return out


def corrupt(f: PartialMap, position: int = 0) -> PartialMap:
    """Change exactly one entry of ``f``'s table (for testing the oracle)."""
    table = list(f.table)
    i = position % len(table)
    m = len(f.cod)
    if table[i] is None:
        table[i] = 0
    elif m > 1:
        table[i] = (table[i] + 1) % m
    else:
        table[i] = None
    return PartialMap(f.dom, f.cod, tuple(table))
