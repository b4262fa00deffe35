"""Law checking: budgets, reports and the generic axiom suite.

A law is a predicate over a tuple of objects and a tuple of maps typed by
those objects.  :class:`Checker` enumerates every tuple when the total
count fits the budget and otherwise draws a seeded sample, so a failing
report can always be reproduced from its seed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from .core import (
    RestrictionModel,
    classical_projection,
    compose_all,
    coproduct_of_maps,
    is_total,
    quasi_projection,
)
from .errors import BudgetExceeded, RCWBError

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Budget:
    max_size: int = 3
    max_hom: int = 4096
    max_tuples: int = 65536
    max_object_tuples: int = 256
    seed: int = 0


@dataclass
class LawReport:
    suite: str
    law: str
    status: str
    checked: int = 0
    exhaustive: bool = True
    skipped: int = 0
    counterexample: dict[str, str] | None = None
    detail: str = ""
    seed: int | None = None
    recheck: Callable[[], bool] | None = field(default=None, compare=False, repr=False)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_record(self) -> dict:
        record = asdict(self)
        record.pop("recheck")
        return record


@dataclass(frozen=True)
class Var:
    """A map variable ``name : objs[dom] -> objs[cod]``.

    ``kind`` narrows the range: ``any``, ``total`` or ``idem`` (restriction
    idempotents, which forces ``dom == cod``).
    """

    name: str
    dom: int
    cod: int
    kind: str = "any"


def dedupe(items: Sequence, key: Callable[[Any], Any]) -> list:
    seen: dict = {}
    for x in items:
        seen.setdefault(key(x), x)
    return list(seen.values())


class Checker:
    """Runs laws against one model and collects :class:`LawReport` values."""

    def __init__(self, model: RestrictionModel, budget: Budget | None = None, suite: str = "axioms"):
        self.model = model
        self.budget = budget or Budget()
        self.suite = suite
        self.reports: list[LawReport] = []
        self._maps: dict = {}
        objs = [a for a in model.objects() if model.size(a) <= self.budget.max_size]
        self.objects = objs
        # one object per signature; enough for laws that mention no structure
        self.reps = dedupe(objs, model.signature)
        self.probes = self.reps

    # -- map pools -----------------------------------------------------------

    def maps(self, a, b, kind: str = "any") -> list:
        key = (a, b, kind)
        pool = self._maps.get(key)
        if pool is None:
            m = self.model
            if m.hom_size(a, b) > self.budget.max_hom:
                raise BudgetExceeded(f"hom({m.format_object(a)}, {m.format_object(b)}) is over budget")
            homs = m.hom(a, b)
            if kind == "any":
                pool = list(homs)
            elif kind == "total":
                pool = [f for f in homs if is_total(m, f)]
            elif kind == "idem":
                pool = [f for f in homs if a == b and m.restrict(f) == f]
            else:
                raise ValueError(f"unknown variable kind {kind!r}")
            self._maps[key] = pool
        return pool

    # -- running laws ------------------------------------------------------

    def _object_tuples(self, pools: Sequence[Sequence], when, rng: random.Random) -> tuple[list, bool]:
        total = math.prod(len(p) for p in pools)
        if total <= self.budget.max_object_tuples:
            tuples = list(itertools.product(*pools))
            exhaustive = True
        else:
            draws = self.budget.max_object_tuples
            tuples = dedupe([tuple(rng.choice(p) for p in pools) for _ in range(draws)], lambda t: t)
            exhaustive = False
        if when is not None:
            tuples = [o for o in tuples if when(o)]
        return tuples, exhaustive

    def law(
        self,
        law_id: str,
        pools: Sequence[Sequence],
        variables: Sequence[Var],
        pred: Callable[..., Any],
        when: Callable[[tuple], bool] | None = None,
    ) -> LawReport:
        """Check ``pred(objs, *maps)`` over every typed tuple within budget.

        ``pred`` returns True for a pass, False for a violation (the maps
        become the counterexample), or a dict that is itself the
        counterexample.
        """
        rng = random.Random(f"{self.budget.seed}:{self.suite}:{law_id}")
        obj_tuples, exhaustive = self._object_tuples(pools, when, rng)
        work = []
        skipped = 0
        for o in obj_tuples:
            try:
                lists = [self.maps(o[v.dom], o[v.cod], v.kind) for v in variables]
            except BudgetExceeded:
                skipped += 1
                continue
            work.append((o, lists))
        total = sum(math.prod(len(x) for x in lists) for _, lists in work)
        per_tuple = None
        if total > self.budget.max_tuples:
            per_tuple = max(16, self.budget.max_tuples // max(1, len(work)))
            exhaustive = False
        checked = 0
        for o, lists in work:
            count = math.prod(len(x) for x in lists)
            if per_tuple is None or count <= per_tuple:
                tuples = itertools.product(*lists)
            else:
                tuples = (tuple(rng.choice(x) for x in lists) for _ in range(per_tuple))
            try:
                for maps in tuples:
                    checked += 1
                    outcome = self._evaluate(pred, o, maps)
                    if outcome is not True:
                        report = self._failure(law_id, o, variables, maps, outcome, pred, checked)
                        self.reports.append(report)
                        return report
            except BudgetExceeded:
                # the predicate itself enumerates a hom-set that is too large
                skipped += 1
                checked -= 1
        if skipped:
            exhaustive = False
        # no object tuple at all is a vacuous pass; all of them over budget is a skip
        status = SKIPPED if obj_tuples and skipped == len(obj_tuples) else PASS
        report = LawReport(
            self.suite,
            law_id,
            status,
            checked=checked,
            exhaustive=exhaustive,
            skipped=skipped,
            seed=None if exhaustive else self.budget.seed,
            detail="" if status == PASS else "every object tuple exceeded the hom budget",
        )
        self.reports.append(report)
        return report

    def fact(self, law_id: str, pred: Callable[[], Any]) -> LawReport:
        """A closed law with no quantified variables."""
        return self.law(law_id, [[()]], [], lambda o: pred())

    @staticmethod
    def _evaluate(pred, o, maps):
        try:
            return pred(o, *maps)
        except BudgetExceeded:
            raise
        except RCWBError as exc:
            return {"error": f"{type(exc).__name__}: {exc}"}

    def _failure(self, law_id, o, variables, maps, outcome, pred, checked) -> LawReport:
        m = self.model
        if isinstance(outcome, dict):
            cex = {k: (v if isinstance(v, str) else m.format_map(v)) for k, v in outcome.items()}
        else:
            cex = {}
        for v, f in zip(variables, maps):
            cex.setdefault(v.name, m.format_map(f))
        objs = ", ".join(m.format_object(x) for x in o if x != ())
        if not cex:
            # object-only laws: the objects are the whole witness
            cex["objects"] = objs or "()"
        return LawReport(
            self.suite,
            law_id,
            FAIL,
            checked=checked,
            counterexample=cex,
            detail=f"objects: {objs}" if objs else "",
            seed=self.budget.seed,
            recheck=lambda: self._evaluate(pred, o, maps) is not True,
        )


# -- helpers shared by several suites -------------------------------------


def is_monic(model: RestrictionModel, f, tests: Sequence, checker: Checker) -> bool:
    """``f`` is monic against every probe object (injectivity of ``g -> gf``)."""
    a = model.dom(f)
    for c in tests:
        try:
            hom = checker.maps(c, a)
        except BudgetExceeded:
            continue
        if len({model.compose(g, f) for g in hom}) != len(hom):
            return False
    return True


def count_solutions(items: Sequence, key: Callable) -> dict:
    counts: dict = {}
    for h in items:
        k = key(h)
        counts[k] = counts.get(k, 0) + 1
    return counts


def coproduct_objects(checker: Checker, arity: int | None = None) -> list:
    m = checker.model
    out = []
    for obj in checker.objects:
        parts = m.summands(obj)
        if parts and (arity is None or len(parts) == arity):
            out.append(obj)
    return out


# -- the axiom suite -----------------------------------------------------


def check_axioms(model: RestrictionModel, budget: Budget | None = None, suite: str = "axioms") -> list[LawReport]:
    """Category laws, R.1-R.4, the basic restriction lemma and every
    structural witness the model advertises."""
    ck = Checker(model, budget, suite)
    _pure_laws(ck)
    if model.has("terminal"):
        _terminal_laws(ck)
    if model.has("products"):
        _product_laws(ck)
    if model.has("coproducts"):
        _coproduct_laws(ck)
    if model.has("zeroes"):
        _zero_laws(ck)
    if model.has("coproducts", "zeroes"):
        _quasi_projection_laws(ck)
    if model.has("distributive"):
        _distributive_laws(ck)
    if model.has("products", "coproducts", "zeroes"):
        _classical_projection_laws(ck)
    return ck.reports


def _pure_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    R = ck.reps
    ck.law(
        "cat.identity",
        [R, R],
        [Var("f", 0, 1)],
        lambda o, f: c(m.identity(o[0]), f) == f and c(f, m.identity(o[1])) == f,
    )
    ck.law(
        "cat.assoc",
        [R, R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2), Var("h", 2, 3)],
        lambda o, f, g, h: c(c(f, g), h) == c(f, c(g, h)),
    )
    ck.law("R.1", [R, R], [Var("f", 0, 1)], lambda o, f: c(r(f), f) == f)
    ck.law(
        "R.2",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 0, 2)],
        lambda o, f, g: c(r(f), r(g)) == c(r(g), r(f)),
    )
    ck.law(
        "R.3",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 0, 2)],
        lambda o, f, g: r(c(r(g), f)) == c(r(g), r(f)),
    )
    ck.law(
        "R.4",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2)],
        lambda o, f, g: c(f, r(g)) == c(r(c(f, g)), f),
    )
    ck.law(
        "restrict.absorbs-restrict",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2)],
        lambda o, f, g: r(c(f, g)) == r(c(f, r(g))),
    )
    ck.law(
        "restrict.total-postfix",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2, "total")],
        lambda o, f, g: r(c(f, g)) == r(f),
    )
    ck.law(
        "monic-is-total",
        [R, R],
        [Var("f", 0, 1)],
        lambda o, f: is_total(m, f) or not is_monic(m, f, ck.probes, ck),
    )
    ck.law("idempotent.squares", [R], [Var("e", 0, 0, "idem")], lambda o, e: c(e, e) == e)
    ck.law(
        "idempotents.commute",
        [R],
        [Var("e1", 0, 0, "idem"), Var("e2", 0, 0, "idem")],
        lambda o, e1, e2: c(e1, e2) == c(e2, e1),
    )
    ck.law(
        "idempotent.prefix",
        [R, R],
        [Var("e", 0, 0, "idem"), Var("f", 0, 1)],
        lambda o, e, f: r(c(e, f)) == c(e, r(f)) == c(r(f), e),
    )
    ck.law(
        "idempotent.postfix",
        [R, R],
        [Var("f", 0, 1), Var("e", 1, 1, "idem")],
        lambda o, f, e: c(f, e) == c(r(c(f, e)), f),
    )
    ck.law("restrict.idempotent", [R, R], [Var("f", 0, 1)], lambda o, f: r(r(f)) == r(f))


def _terminal_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    one = m.terminal()
    O = ck.objects

    def terminal_unique(o):
        a = o[0]
        totals = ck.maps(a, one, "total")
        if totals != [m.t(a)]:
            return {"t": m.t(a), "totals": "; ".join(m.format_map(t) for t in totals)}
        return True

    ck.law("terminal.total", [O], [], terminal_unique)
    ck.law(
        "terminal",
        [O, O],
        [Var("f", 0, 1)],
        lambda o, f: c(f, m.t(o[1])) == c(r(f), m.t(o[0])),
    )


def _product_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    O, P = ck.objects, ck.probes

    def fits(o):
        return m.size(o[1]) * m.size(o[2]) <= ck.budget.max_size

    def pair_eqs(o, f, g):
        _, a, b = o
        h = m.pair(f, g)
        return c(h, m.proj(0, a, b)) == c(r(g), f) and c(h, m.proj(1, a, b)) == c(r(f), g)

    ck.law("restriction-product", [P, O, O], [Var("f", 0, 1), Var("g", 0, 2)], pair_eqs, when=fits)

    def proj_laws(o):
        a, b = o
        p0, p1 = m.proj(0, a, b), m.proj(1, a, b)
        ok = is_total(m, p0) and is_total(m, p1) and m.pair(p0, p1) == m.identity(m.product(a, b))
        return ok or {"pi0": p0, "pi1": p1}

    ck.law("restriction-product.projections", [O, O], [], proj_laws, when=lambda o: fits(((),) + o))

    def unique(o):
        cc, a, b = o
        p0, p1 = m.proj(0, a, b), m.proj(1, a, b)
        counts = count_solutions(ck.maps(cc, m.product(a, b)), lambda h: (c(h, p0), c(h, p1)))
        for f in ck.maps(cc, a):
            for g in ck.maps(cc, b):
                if counts.get((c(r(g), f), c(r(f), g)), 0) != 1:
                    return {"f": f, "g": g}
        return True

    ck.law("restriction-product.unique", [P, O, O], [], unique, when=fits)


def _coproduct_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    S, P = coproduct_objects(ck), ck.probes
    zero = m.initial()

    def initial(o):
        homs = ck.maps(zero, o[0])
        return homs == [m.z(o[0])] or {"z": m.z(o[0])}

    ck.law("initial", [ck.objects], [], initial)

    def injections(o):
        s, d = o
        parts = m.summands(s)
        for j in range(len(parts)):
            if not is_total(m, m.inj(j, s)):
                return {"inj": m.inj(j, s)}
        legs = [ck.maps(a, d) for a in parts]
        counts = count_solutions(ck.maps(s, d), lambda h: tuple(c(m.inj(j, s), h) for j in range(len(parts))))
        for fs in itertools.product(*legs):
            h = m.copair(list(fs), s, d)
            if tuple(c(m.inj(j, s), h) for j in range(len(parts))) != fs:
                return {"copair": h, **{f"f{j}": f for j, f in enumerate(fs)}}
            if counts.get(fs) != 1:
                return {f"f{j}": f for j, f in enumerate(fs)}
        return True

    ck.law("coproduct", [S, P], [], injections)

    def copair_restriction(o, h):
        s = o[0]
        parts = m.summands(s)
        legs = [c(m.inj(j, s), h) for j in range(len(parts))]
        return r(h) == coproduct_of_maps(m, [r(f) for f in legs])

    ck.law("coproduct.restriction", [S, P], [Var("h", 0, 1)], copair_restriction)


def _zero_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    O = ck.objects
    ck.law("restriction-zero", [O, O], [], lambda o: r(m.zero(o[0], o[1])) == m.zero(o[0], o[0]))
    ck.law(
        "restriction-zero.absorb",
        [O, O, O],
        [Var("f", 0, 1), Var("g", 1, 2)],
        lambda o, f, g: c(f, m.zero(o[1], o[2])) == m.zero(o[0], o[2]) == c(m.zero(o[0], o[1]), g),
    )


def _quasi_projection_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    S = coproduct_objects(ck)
    zero = m.initial()

    def zero_object(o):
        a = o[0]
        return len(ck.maps(a, zero)) == 1 and len(ck.maps(zero, a)) == 1

    ck.law("zero-object", [ck.objects], [], zero_object)

    def each(o, check):
        s = o[0]
        parts = m.summands(s)
        for j in range(len(parts)):
            out = check(s, parts, j)
            if out is not True:
                return out
        return True

    def ii(s, parts, j):
        qj = quasi_projection(m, j, s)
        legs = [m.identity(a) if i == j else m.zero(a, a) for i, a in enumerate(parts)]
        return r(qj) == coproduct_of_maps(m, legs) or {"qproj": qj}

    def iii(s, parts, j):
        qj = quasi_projection(m, j, s)
        for i in range(len(parts)):
            want = m.identity(parts[j]) if i == j else m.zero(parts[i], parts[j])
            if c(m.inj(i, s), qj) != want:
                return {"inj": m.inj(i, s), "qproj": qj}
        return True

    def iv(s, parts, j):
        qj = quasi_projection(m, j, s)
        return c(qj, m.inj(j, s)) == r(qj) or {"qproj": qj}

    def v(s, parts, j):
        rj = r(quasi_projection(m, j, s))
        for i in range(len(parts)):
            ri = r(quasi_projection(m, i, s))
            want = rj if i == j else m.zero(s, s)
            if c(ri, rj) != want:
                return {"qproj_i": ri, "qproj_j": rj}
        return True

    def vi(o):
        s = o[0]
        parts = m.summands(s)
        legs = [compose_all(m, m.inj(j, s), quasi_projection(m, j, s), m.inj(j, s)) for j in range(len(parts))]
        h = m.copair(legs, s, s)
        return h == m.identity(s) or {"assembled": h}

    for name, check in (("restriction", ii), ("injections", iii), ("retract", iv), ("disjoint", v)):
        ck.law(f"qproj.{name}", [S], [], lambda o, check=check: each(o, check))
    ck.law("qproj.reassemble", [S], [], vi)


def _distributive_laws(ck: Checker) -> None:
    m = ck.model
    c = m.compose
    O = ck.objects

    def fits(o):
        a, b, cc = o
        return m.size(a) * (m.size(b) + m.size(cc)) <= ck.budget.max_size

    def iso(o):
        a, b, cc = o
        d, e = m.distributor(a, b, cc), m.distributor_inverse(a, b, cc)
        ok = c(d, e) == m.identity(m.dom(d)) and c(e, d) == m.identity(m.cod(d))
        canonical = m.copair(
            [
                product_with(m, a, m.inj(0, m.coproduct([b, cc]))),
                product_with(m, a, m.inj(1, m.coproduct([b, cc]))),
            ],
            m.dom(d),
            m.cod(d),
        )
        return (ok and d == canonical) or {"distributor": d, "inverse": e}

    ck.law("distributive", [O, O, O], [], iso, when=fits)

    def nullary(o):
        a = o[0]
        zero = m.initial()
        u = m.pair(m.z(a), m.identity(zero))
        back = m.proj(1, a, zero)
        return (c(u, back) == m.identity(zero) and c(back, u) == m.identity(m.product(a, zero))) or {"pair": u}

    ck.law("distributive.nullary", [O], [], nullary)


def product_with(m: RestrictionModel, a, g):
    """``1_a x g`` as ``<pi0, pi1 g>``."""
    b = m.dom(g)
    return m.pair(m.proj(0, a, b), m.compose(m.proj(1, a, b), g))


def _classical_projection_laws(ck: Checker) -> None:
    m = ck.model
    c, r = m.compose, m.restrict
    O = ck.objects

    def fits(o):
        a, b = o
        sa, sb = m.size(a), m.size(b)
        return sa + sb + sa * sb <= ck.budget.max_size

    def i(o):
        a, b = o
        p0, p1 = classical_projection(m, 0, a, b), classical_projection(m, 1, a, b)
        ab = m.product(a, b)
        want0 = coproduct_of_maps(m, [m.identity(a), m.zero(b, b), m.identity(ab)])
        want1 = coproduct_of_maps(m, [m.zero(a, a), m.identity(b), m.identity(ab)])
        return (r(p0) == want0 and r(p1) == want1) or {"p0": p0, "p1": p1}

    def ii(o):
        a, b = o
        p0, p1 = classical_projection(m, 0, a, b), classical_projection(m, 1, a, b)
        q2 = quasi_projection(m, 2, m.amp(a, b))
        ok = c(r(p1), p0) == c(q2, m.proj(0, a, b)) and c(r(p0), p1) == c(q2, m.proj(1, a, b))
        return ok or {"p0": p0, "p1": p1}

    ck.law("cproj.restriction", [O, O], [], i, when=fits)
    ck.law("cproj.overlap", [O, O], [], ii, when=fits)


def summarize(reports: Sequence[LawReport]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for rep in reports:
        out[rep.status] += 1
    return out
