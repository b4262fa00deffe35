"""Named law suites and the groups the command line exposes.

Every suite takes a :class:`Workbench` and returns a list of
:class:`~rcwb.laws.LawReport`.  A workbench is a FinPar model plus the
Kleisli and Boolean-ring models built over the same objects, so one
``--max-size`` controls all three.
"""

from __future__ import annotations

import copy
import random
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable

from . import calg, kleisli
from .classical import (
    classical_pair,
    complement_idem,
    complement_of_domain,
    decision,
    join,
    join_via_amp,
    join_via_decision,
    cproj_complement_identities,
    projections,
    relative_complement,
    relcomp_via_amp,
)
from .core import (
    RestrictionModel,
    classical_projection,
    compatible,
    compose_all,
    coproduct_of_maps,
    disjoint,
    leq,
    quasi_projection,
)
from .errors import BudgetExceeded, Incompatible, NotBelow, RCWBError
from .finpar import FinParModel, PartialMap, atom
from .laws import FAIL, PASS, SKIPPED, Budget, Checker, LawReport, Var, check_axioms, coproduct_objects
from .oracle import (
    UniversalPairing,
    oracle_complement,
    oracle_cpair,
    oracle_decision,
    oracle_join,
    oracle_relcomp,
    verify_universal,
)
from .splitting import (
    amp_as_coproduct,
    class_prod_identities,
    coproduct_idempotent,
    restriction_coproduct_from_amp,
    restriction_product_from_amp,
    split_idempotent,
)


@dataclass
class Workbench:
    finpar: FinParModel
    budget: Budget = field(default_factory=Budget)

    def __post_init__(self):
        # the budget decides how large a hom-set may be enumerated
        if self.finpar.max_hom < self.budget.max_hom:
            self.finpar = copy.copy(self.finpar)
            self.finpar.max_hom = self.budget.max_hom

    @cached_property
    def kleisli(self) -> kleisli.KleisliModel:
        return kleisli.KleisliModel(self.finpar.objects())

    @cached_property
    def calg(self) -> calg.CalgModel:
        return calg.CalgModel(calg.calg_universe(self.finpar.objects()))

    def capped(self, size: int) -> Budget:
        return replace(self.budget, max_size=min(self.budget.max_size, size))


def _universal(kind: str, budget: Budget, **witnesses):
    """Run one universal check inside a law predicate.

    A skipped check becomes ``BudgetExceeded`` so the checker counts the
    object tuple as skipped instead of passed.
    """
    out = verify_universal(kind, witnesses, budget)
    if out.status == SKIPPED:
        raise BudgetExceeded(out.detail)
    if out.status == FAIL:
        return {"detail": out.detail, **(out.counterexample or {})}
    return True


def _small(ck: Checker, limit: int) -> list:
    return [a for a in ck.reps if ck.model.size(a) <= limit]


def _amp_size(m: RestrictionModel, a, b) -> int:
    return m.size(a) + m.size(b) + m.size(a) * m.size(b)


def _first_failure(maps, pred) -> bool | dict:
    for f in maps:
        if not pred(f):
            return {"f": f}
    return True


# -- classical -----------------------------------------------------------


def suite_classical(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "classical")
    c, r = m.compose, m.restrict
    R = ck.reps

    def zero(o, i=0, j=1):
        return m.zero(o[i], o[j])

    ck.law("leq.reflexive", [R, R], [Var("f", 0, 1)], lambda o, f: leq(m, f, f))
    ck.law(
        "leq.antisymmetric",
        [R, R],
        [Var("f", 0, 1), Var("g", 0, 1)],
        lambda o, f, g: not (leq(m, f, g) and leq(m, g, f)) or f == g,
    )
    ck.law(
        "leq.transitive",
        [R, R],
        [Var("f", 0, 1), Var("g", 0, 1), Var("h", 0, 1)],
        lambda o, f, g, h: not (leq(m, f, g) and leq(m, g, h)) or leq(m, f, h),
    )
    ck.law(
        "disjoint-implies-compatible",
        [R, R],
        [Var("f", 0, 1), Var("g", 0, 1)],
        lambda o, f, g: not disjoint(m, f, g) or compatible(m, f, g),
    )
    ck.law(
        "disjoint-idempotents",
        [R],
        [Var("e1", 0, 0, "idem"), Var("e2", 0, 0, "idem")],
        lambda o, e1, e2: disjoint(m, e1, e2) == (c(e1, e2) == zero(o, 0, 0)),
    )

    def j1(o, f, g):
        if not compatible(m, f, g):
            return True
        u = join(m, [f, g])
        return leq(m, f, u) and leq(m, g, u)

    def j2(o, f, g, h):
        if not (compatible(m, f, g) and leq(m, f, h) and leq(m, g, h)):
            return True
        return leq(m, join(m, [f, g]), h)

    def j3(o, k, f, g):
        if not compatible(m, f, g):
            return True
        return c(k, join(m, [f, g])) == join(m, [c(k, f), c(k, g)])

    def post(o, f, g, k):
        if not compatible(m, f, g):
            return True
        return c(join(m, [f, g]), k) == join(m, [c(f, k), c(g, k)])

    def family(o, f, g, h):
        fs = [f, g, h]
        if not all(compatible(m, x, y) for x in fs for y in fs):
            return True
        return join(m, fs) == join(m, [h, f, g]) == join(m, [f, join(m, [g, h])])

    ck.law("J.1", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], j1)
    ck.law("J.2", [R, R], [Var("f", 0, 1), Var("g", 0, 1), Var("h", 0, 1)], j2)
    ck.law("J.3", [R, R, R], [Var("k", 0, 1), Var("f", 1, 2), Var("g", 1, 2)], j3)
    ck.law("join.post-composition", [R, R, R], [Var("f", 0, 1), Var("g", 0, 1), Var("k", 1, 2)], post)
    ck.law("join.zero", [R, R], [Var("f", 0, 1)], lambda o, f: join(m, [f, zero(o)]) == f)
    ck.law("join.empty", [R, R], [], lambda o: join(m, [], o[0], o[1]) == zero(o))
    ck.law("join.family", [R, R], [Var("f", 0, 1), Var("g", 0, 1), Var("h", 0, 1)], family)

    def rc(o, f, g):
        if not leq(m, f, g):
            return True
        d = relative_complement(m, g, f)
        return disjoint(m, d, f) and join(m, [d, f]) == g

    def rc_unique(o, f, g, h):
        # anything disjoint from f that joins with it to g is g \ f
        if not (leq(m, f, g) and disjoint(m, h, f)):
            return True
        return join(m, [h, f]) != g or h == relative_complement(m, g, f)

    ck.law("RC.1-RC.2", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], rc)
    ck.law("RC.unique", [R, R], [Var("f", 0, 1), Var("g", 0, 1), Var("h", 0, 1)], rc_unique)
    ck.law(
        "relcomp.extremes",
        [R, R],
        [Var("g", 0, 1)],
        lambda o, g: relative_complement(m, g, g) == zero(o) and relative_complement(m, g, zero(o)) == g,
    )

    def complement(o, e):
        a = o[0]
        ec = complement_idem(m, e)
        return (
            r(ec) == ec
            and c(e, ec) == m.zero(a, a)
            and join(m, [e, ec]) == m.identity(a)
            and complement_idem(m, ec) == e
        )

    ck.law("complement", [R], [Var("e", 0, 0, "idem")], complement)
    ck.law(
        "complement.extremes",
        [R],
        [],
        lambda o: complement_idem(m, m.identity(o[0])) == zero(o, 0, 0)
        and complement_idem(m, zero(o, 0, 0)) == m.identity(o[0]),
    )

    def cbar(f):
        return complement_of_domain(m, f)

    ck.law("complement.annihilates", [R, R], [Var("f", 0, 1)], lambda o, f: c(cbar(f), f) == zero(o))
    ck.law(
        "complement.commute",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 0, 2)],
        lambda o, f, g: c(cbar(f), cbar(g)) == c(cbar(g), cbar(f)),
    )
    ck.law(
        "complement.join",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 0, 2)],
        lambda o, f, g: cbar(c(cbar(g), f)) == join(m, [r(g), cbar(f)]),
    )
    ck.law(
        "complement.postfix",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2)],
        lambda o, f, g: c(f, cbar(g)) == c(cbar(c(f, g)), f),
    )
    ck.law(
        "complement.de-morgan",
        [R],
        [Var("e1", 0, 0, "idem"), Var("e2", 0, 0, "idem")],
        lambda o, e1, e2: join(m, [complement_idem(m, e1), complement_idem(m, e2)])
        == complement_idem(m, c(e1, e2)),
    )

    _coproduct_as_join(ck)
    _amp_laws(ck)
    return ck.reports


def _coproduct_as_join(ck: Checker) -> None:
    """Coproducts of maps are joins of disjoint pieces."""
    m = ck.model
    S2 = coproduct_objects(ck, 2)

    def pred(o):
        s, x, y = o
        a, b = m.summands(s)
        q = [quasi_projection(m, j, s) for j in range(2)]
        target = m.coproduct([x, y])
        for f0 in ck.maps(a, x):
            for f1 in ck.maps(b, y):
                pieces = [compose_all(m, q[j], f, m.inj(j, target)) for j, f in enumerate((f0, f1))]
                if not disjoint(m, pieces[0], pieces[1]):
                    return {"f0": f0, "f1": f1, "detail": "pieces overlap"}
                if join(m, pieces) != coproduct_of_maps(m, [f0, f1]):
                    return {"f0": f0, "f1": f1}
        return True

    ck.law("coproduct-as-join", [S2, ck.reps, ck.reps], [], pred)


def _amp_laws(ck: Checker) -> None:
    """Identities about the classical projections and pairing."""
    m = ck.model
    c, r = m.compose, m.restrict
    small = _small(ck, 2)
    P = ck.probes

    ck.law(
        "cproj.complements",
        [small, small],
        [],
        lambda o: all(cproj_complement_identities(m, *o).values()) or {"detail": repr(cproj_complement_identities(m, *o))},
    )

    def items(o, f, g):
        cc, a, b = o
        obj = m.amp(a, b)
        h = classical_pair(m, f, g)
        checks = {
            "iii": c(h, quasi_projection(m, 2, obj)) == m.pair(f, g),
            "iv": classical_pair(m, f, m.zero(cc, b)) == c(f, m.inj(0, obj))
            and classical_pair(m, m.zero(cc, a), g) == c(g, m.inj(1, obj)),
            "vi": classical_pair(m, m.zero(cc, a), m.zero(cc, b)) == m.zero(cc, obj),
        }
        bad = [k for k, v in checks.items() if not v]
        return not bad or {"items": ", ".join(bad)}

    ck.law("cpair.zero-legs", [P, small, small], [Var("f", 0, 1), Var("g", 0, 2)], items)
    ck.law(
        "cpair.diagonal",
        [P, small],
        [Var("f", 0, 1)],
        lambda o, f: classical_pair(m, f, f) == c(m.pair(f, f), m.inj(2, m.amp(o[1], o[1]))),
    )

    def rest_product(o, f, g):
        _, a, b = o
        p0, p1 = projections(m, a, b)
        h = classical_pair(m, f, g)
        return (
            c(h, r(p0)) == classical_pair(m, f, c(r(f), g))
            and c(h, r(p1)) == classical_pair(m, c(r(g), f), g)
            and compose_all(m, h, r(p0), r(p1)) == classical_pair(m, c(r(g), f), c(r(f), g))
        )

    ck.law("rest-product.ii-iii", [P, small, small], [Var("f", 0, 1), Var("g", 0, 2)], rest_product)
    ck.law(
        "rest-product.i",
        [P, ck.reps],
        [Var("f", 0, 1)],
        lambda o, f: c(f, r(m.t(o[1]))) == c(r(m.t(o[0])), f),
    )


# -- universal properties ----------------------------------------------------


def suite_universal_amp(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "universal-amp")
    small = _small(ck, 2)

    def pred(o):
        a, b = o
        p0, p1 = projections(m, a, b)
        return _universal(
            "classical-product",
            wb.budget,
            model=m,
            obj=m.amp(a, b),
            proj0=p0,
            proj1=p1,
            pair=lambda f, g: classical_pair(m, f, g),
            tests=small,
        )

    ck.law("classical-product", [small, small], [], pred)
    return ck.reports


def suite_decision_unique(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "decision-unique")

    def per_tuple(o):
        a, b0, b1 = o
        for f in ck.maps(a, m.coproduct([b0, b1])):
            out = _universal("decision", wb.budget, model=m, f=f, decision=decision(m, f))
            if out is not True:
                return {"f": f, **out}
        return True

    ck.law("decision", [_small(ck, 3), _small(ck, 2), _small(ck, 2)], [], per_tuple)
    return ck.reports


# -- oracle versus construction ------------------------------------------

RANDOM_PAIRS = 1000
RANDOM_SIZE = 4


def _agree(builds: dict[str, Callable], want, error: type) -> bool | dict:
    """Every construction matches ``want`` (None meaning "raises ``error``")."""
    for name, build in builds.items():
        try:
            got = build()
        except error:
            got = None
        if got != want:
            return {
                "construction": name,
                "got": "raised" if got is None else got,
                "oracle": "raised" if want is None else want,
            }
    return True


def _expect(oracle: Callable, error: type):
    try:
        return oracle()
    except error:
        return None


def suite_oracle_vs_construction(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "oracle-vs-construction")
    R = ck.reps
    searched = UniversalPairing(wb.budget)

    def joins(o, f, g):
        builds = {
            "join": lambda: join(m, [f, g]),
            "join-via-amp": lambda: join_via_amp(m, f, g),
            "join-via-decision": lambda: join_via_decision(m, f, g),
            "join-via-searched-amp": lambda: join_via_amp(m, f, g, searched),
        }
        return _agree(builds, _expect(lambda: oracle_join(f, g), Incompatible), Incompatible)

    def relcomps(o, f, g):
        builds = {
            "relcomp": lambda: relative_complement(m, g, f),
            "relcomp-via-amp": lambda: relcomp_via_amp(m, g, f),
            "relcomp-via-searched-amp": lambda: relcomp_via_amp(m, g, f, searched),
        }
        return _agree(builds, _expect(lambda: oracle_relcomp(g, f), NotBelow), NotBelow)

    ck.law("join", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], joins)
    ck.law("relcomp", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], relcomps)
    ck.law(
        "complement",
        [R],
        [Var("e", 0, 0, "idem")],
        lambda o, e: complement_idem(m, e) == oracle_complement(e),
    )
    ck.law(
        "classical-pair",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 0, 2)],
        lambda o, f, g: classical_pair(m, f, g) == oracle_cpair(f, g),
    )
    homs = [(a, m.coproduct([b0, b1])) for a in R for b0 in R for b1 in R]
    ck.law(
        "decision",
        [homs],
        [],
        lambda o: _first_failure(ck.maps(*o[0]), lambda f: decision(m, f) == oracle_decision(f)),
    )
    ck.reports.append(_random_pairs(m, wb.budget))
    return ck.reports


def random_pairs(seed: int, n: int = RANDOM_PAIRS, size: int = RANDOM_SIZE) -> list[tuple[PartialMap, PartialMap]]:
    """Seeded pairs of partial maps between two ``size``-element sets.

    Every other pair is cut from one common map, so compatible and
    ordered pairs show up often; the rest are drawn independently.
    """
    rng = random.Random(f"{seed}:random-pairs")
    src = atom("P", [f"p{i}" for i in range(size)])
    tgt = atom("Q", [f"q{i}" for i in range(size)])
    values = (None, *range(size))
    out = []
    for k in range(n):
        if k % 2:
            f = tuple(rng.choice(values) for _ in range(size))
            g = tuple(rng.choice(values) for _ in range(size))
        else:
            base = [rng.randrange(size) for _ in range(size)]
            in_f = [rng.random() < 0.5 for _ in range(size)]
            # half of these put f below g
            in_g = [x or rng.random() < 0.5 for x in in_f] if k % 4 == 0 else [rng.random() < 0.5 for _ in range(size)]
            f = tuple(v if keep else None for v, keep in zip(base, in_f))
            g = tuple(v if keep else None for v, keep in zip(base, in_g))
        out.append((PartialMap(src, tgt, f), PartialMap(src, tgt, g)))
    return out


def _random_pairs(m: RestrictionModel, budget: Budget) -> LawReport:
    pairs = random_pairs(budget.seed)
    for f, g in pairs:
        out = _agree(
            {"join": lambda: join(m, [f, g]), "join-via-amp": lambda: join_via_amp(m, f, g)},
            _expect(lambda: oracle_join(f, g), Incompatible),
            Incompatible,
        )
        if out is True:
            out = _agree(
                {"relcomp-via-amp": lambda: relcomp_via_amp(m, g, f)},
                _expect(lambda: oracle_relcomp(g, f), NotBelow),
                NotBelow,
            )
        if out is not True:
            cex = {k: (v if isinstance(v, str) else m.format_map(v)) for k, v in out.items()}
            cex.update(f=m.format_map(f), g=m.format_map(g))
            return LawReport(
                "oracle-vs-construction", "random-pairs", FAIL, len(pairs), False, counterexample=cex, seed=budget.seed
            )
    return LawReport("oracle-vs-construction", "random-pairs", PASS, len(pairs), False, seed=budget.seed)


# -- Kleisli ----------------------------------------------------------------


def suite_monad(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "monad")
    c = m.compose
    R = _small(ck, 2)
    K = kleisli

    def ident(o):
        return m.identity(K.plus_one(o[0]))

    ck.law("unit-left", [R], [], lambda o: c(K.unit(K.plus_one(o[0])), K.multiplication(o[0])) == ident(o))
    ck.law("unit-right", [R], [], lambda o: c(K.lift(K.unit(o[0])), K.multiplication(o[0])) == ident(o))
    ck.law(
        "associativity",
        [R],
        [],
        lambda o: c(K.multiplication(K.plus_one(o[0])), K.multiplication(o[0]))
        == c(K.lift(K.multiplication(o[0])), K.multiplication(o[0])),
    )
    ck.law(
        "functor",
        [R, R, R],
        [Var("f", 0, 1, "total"), Var("g", 1, 2, "total")],
        lambda o, f, g: K.lift(c(f, g)) == c(K.lift(f), K.lift(g)) and K.lift(m.identity(o[0])) == ident(o),
    )
    ck.law(
        "unit-natural",
        [R, R],
        [Var("f", 0, 1, "total")],
        lambda o, f: c(f, K.unit(o[1])) == c(K.unit(o[0]), K.lift(f)),
    )
    ck.law(
        "multiplication-natural",
        [R, R],
        [Var("f", 0, 1, "total")],
        lambda o, f: c(K.lift(K.lift(f)), K.multiplication(o[1])) == c(K.multiplication(o[0]), K.lift(f)),
    )
    ck.law(
        "induced-by-classifier",
        [R, R],
        [Var("f", 0, 1, "total")],
        lambda o, f: K.induced_unit(o[0]) == K.unit(o[0])
        and K.induced_multiplication(o[0]) == K.multiplication(o[0])
        and K.induced_lift(f) == K.lift(f),
    )
    return ck.reports


def suite_kleisli_rescat(wb: Workbench) -> list[LawReport]:
    budget = wb.capped(2)
    km, m = wb.kleisli, wb.finpar
    K = kleisli
    reports = check_axioms(km, budget, "kleisli-rescat")
    ck = Checker(km, budget, "kleisli-rescat")
    R = ck.reps

    def projection(o):
        a, b = o
        return all(
            K.kleisli_projection(i, a, b)
            == K.to_kleisli(classical_projection(m, i, a, b))
            == classical_projection(km, i, a, b)
            for i in (0, 1)
        )

    ck.law("projection", [R, R], [], projection)

    def total_iff(o, k):
        g = K.total_part(k)
        total = km.restrict(k) == km.identity(o[0])
        if g is None:
            return not total
        return total and k == K.eta(g)

    ck.law("total-iff-eta", [R, R], [Var("k", 0, 1)], total_iff)
    ck.law(
        "restriction-composite",
        [R, R],
        [Var("k", 0, 1)],
        lambda o, k: K.kleisli_restriction(k) == K.induced_restriction(k),
    )

    fin = Checker(m, budget, "kleisli-rescat")

    def pairs(o, f, g):
        kf, kg = K.to_kleisli(f), K.to_kleisli(g)
        return (
            K.kleisli_pair(kf, kg) == K.to_kleisli(m.pair(f, g))
            and K.kleisli_classical_pair(kf, kg) == K.to_kleisli(classical_pair(m, f, g))
        )

    fin.law("pairings", [fin.reps, fin.reps, fin.reps], [Var("f", 0, 1), Var("g", 0, 2)], pairs)
    return reports + ck.reports + fin.reports


def suite_classifier_unique(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "classifier-unique")

    def pred(o, f):
        b = o[1]
        return _universal(
            "classifier",
            wb.budget,
            model=m,
            f=f,
            obj=kleisli.plus_one(b),
            counit=kleisli.counit(b),
            classify=kleisli.classify(m, f),
        )

    ck.law("classifier", [ck.reps, ck.reps], [Var("f", 0, 1)], pred)
    return ck.reports


def suite_thm2(wb: Workbench) -> list[LawReport]:
    """One law per arrow of the four-way equivalence, at sizes up to 2."""
    m, km = wb.finpar, wb.kleisli
    budget = wb.capped(2)
    ck = Checker(m, budget, "thm2")
    R = ck.reps
    searched = UniversalPairing(budget)
    K = kleisli

    def classical(o, f, g):
        out = True
        if compatible(m, f, g):
            out = _universal("join-lub", budget, model=m, family=[f, g], dom=o[0], cod=o[1], join=join(m, [f, g]))
        if out is True and leq(m, f, g):
            d = relative_complement(m, g, f)
            out = (disjoint(m, d, f) and join(m, [d, f]) == g) or {"relcomp": d}
        return out

    def has_amp(o):
        a, b = o
        p0, p1 = projections(m, a, b)
        return _universal(
            "classical-product",
            budget,
            model=m,
            obj=m.amp(a, b),
            proj0=p0,
            proj1=p1,
            pair=lambda f, g: classical_pair(m, f, g),
        )

    def back(o, f, g):
        out = _agree(
            {"join": lambda: join_via_amp(m, f, g, searched)},
            _expect(lambda: oracle_join(f, g), Incompatible),
            Incompatible,
        )
        if out is not True:
            return out
        return _agree(
            {"relcomp": lambda: relcomp_via_amp(m, g, f, searched)},
            _expect(lambda: oracle_relcomp(g, f), NotBelow),
            NotBelow,
        )

    def classified(o, f):
        b = o[1]
        return _universal(
            "classifier", budget, model=m, f=f, obj=K.plus_one(b), counit=K.counit(b), classify=K.classify(m, f)
        )

    def iso(o, f, g):
        kf = K.to_kleisli(f)
        return (
            K.from_kleisli(kf) == f
            and K.to_kleisli(K.from_kleisli(kf)) == kf
            and K.to_kleisli(m.restrict(f)) == K.kleisli_restriction(kf)
            and K.to_kleisli(m.compose(f, g)) == K.kleisli_compose(kf, K.to_kleisli(g))
        )

    def bijective(o):
        a, b = o
        images = {K.to_kleisli(f) for f in ck.maps(a, b)}
        if images != set(km.hom(a, b)):
            return {"detail": f"{len(images)} images for {km.hom_size(a, b)} Kleisli maps"}
        return True

    ck.law("classical", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], classical)
    ck.law("classical=>classical-products", [R, R], [], has_amp)
    ck.law("classical-products=>classical", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], back)
    ck.law("classical=>classically-classified", [R, R], [Var("f", 0, 1)], classified)
    ck.law("classically-classified=>kleisli", [R, R, R], [Var("f", 0, 1), Var("g", 1, 2)], iso)
    ck.law("kleisli.bijective", [R, R], [], bijective)

    kc = Checker(km, budget, "thm2")
    tiny = _small(kc, 1)

    def kleisli_amp(o):
        a, b = o
        return _universal(
            "classical-product",
            budget,
            model=km,
            obj=km.amp(a, b),
            proj0=K.kleisli_projection(0, a, b),
            proj1=K.kleisli_projection(1, a, b),
            pair=K.kleisli_classical_pair,
            tests=tiny,
        )

    kc.law("kleisli=>classical-products", [tiny, tiny], [], kleisli_amp)
    return ck.reports + kc.reports


# -- splitting ------------------------------------------------------------


def suite_splitting(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "splitting")
    c, r = m.compose, m.restrict
    small = _small(ck, 2)

    ck.law("split", [ck.reps], [Var("e", 0, 0, "idem")], lambda o, e: split_idempotent(e).holds(m))

    def prod_split(o):
        a, b = o
        rec = restriction_product_from_amp(m, a, b)
        p0, p1 = projections(m, a, b)
        rr, ss = rec.canonical
        ok = (
            rec.splitting.holds(m)
            and c(rr, ss) == c(r(p0), r(p1))
            and c(ss, rr) == m.identity(m.product(a, b))
        )
        return ok or {"r": rr, "s": ss}

    def coprod_split(o):
        a, b = o
        rec = restriction_coproduct_from_amp(m, a, b)
        rr, ss = rec.canonical
        plus = m.coproduct([a, b])
        ok = (
            rec.splitting.holds(m)
            and c(rr, ss) == coproduct_idempotent(m, a, b)
            and c(ss, rr) == m.identity(plus)
            and c(classical_pair(m, m.identity(a), m.zero(a, b)), rr) == m.inj(0, plus)
            and c(classical_pair(m, m.zero(b, a), m.identity(b)), rr) == m.inj(1, plus)
        )
        return ok or {"r": rr, "s": ss}

    def class_prod(o, f, g):
        bad = [k for k, v in class_prod_identities(m, f, g).items() if not v]
        return not bad or {"items": ", ".join(bad)}

    def coprodsplit(o):
        a, b = o
        p0, p1 = projections(m, a, b)
        es = [complement_of_domain(m, p1), complement_of_domain(m, p0), c(r(p0), r(p1))]
        obj = m.amp(a, b)
        for i in range(3):
            for j in range(i + 1, 3):
                if c(es[i], es[j]) != m.zero(obj, obj):
                    return {"e_i": es[i], "e_j": es[j]}
        return join(m, es) == m.identity(obj) or {"join": join(m, es)}

    def amp_coproduct(o):
        a, b = o
        rec = amp_as_coproduct(m, a, b)
        obj = m.amp(a, b)
        p0, p1 = projections(m, a, b)
        ab = m.product(a, b)
        ok = (
            all(rec.injections[j] == m.inj(j, obj) for j in range(3))
            and rec.copair([m.identity(a), m.zero(b, a), m.proj(0, a, b)]) == p0
            and rec.copair([m.zero(a, b), m.identity(b), m.proj(1, a, b)]) == p1
            and rec.copair([m.zero(a, a), m.zero(b, a), m.zero(ab, a)]) == m.zero(obj, a)
        )
        return ok or {"inj2": rec.injections[2]}

    ck.law("prod-restprod", [small, small], [], prod_split)
    ck.law("prod-restcoprod", [small, small], [], coprod_split)
    ck.law("class-prod", [ck.probes, small, small], [Var("f", 0, 1), Var("g", 0, 2)], class_prod)
    ck.law("coprodsplit", [small, small], [], coprodsplit)
    ck.law("amp-as-coproduct", [small, small], [], amp_coproduct)
    return ck.reports


def suite_universal_product(wb: Workbench) -> list[LawReport]:
    m = wb.finpar
    ck = Checker(m, wb.budget, "universal-product")
    small = _small(ck, 2)
    b = wb.budget

    def canonical(o):
        x, y = o
        return _universal(
            "restriction-product",
            b,
            model=m,
            obj=m.product(x, y),
            proj0=m.proj(0, x, y),
            proj1=m.proj(1, x, y),
            pair=m.pair,
            tests=small,
        )

    def recovered(o):
        rec = restriction_product_from_amp(m, *o)
        return _universal(
            "restriction-product",
            b,
            model=m,
            obj=rec.obj,
            proj0=rec.proj0,
            proj1=rec.proj1,
            pair=rec.pair,
            tests=small,
        )

    def coproduct(o):
        plus = m.coproduct(list(o))
        return _universal(
            "coproduct",
            b,
            model=m,
            obj=plus,
            injections=[m.inj(0, plus), m.inj(1, plus)],
            copair=lambda fs: m.copair(fs, plus, m.cod(fs[0])),
            tests=small,
        )

    def recovered_coproduct(o):
        rec = restriction_coproduct_from_amp(m, *o)
        return _universal(
            "coproduct", b, model=m, obj=rec.obj, injections=rec.injections, copair=rec.copair, tests=small
        )

    def three_way(o):
        rec = amp_as_coproduct(m, *o)
        return _universal(
            "coproduct", b, model=m, obj=m.amp(*o), injections=rec.injections, copair=rec.copair, tests=small
        )

    ck.law("restriction-product", [small, small], [], canonical)
    ck.law("recovered-product", [small, small], [], recovered)
    ck.law("coproduct", [small, small], [], coproduct)
    ck.law("recovered-coproduct", [small, small], [], recovered_coproduct)
    ck.law("amp-as-coproduct", [small, small], [], three_way)
    return ck.reports


# -- Boolean rings ----------------------------------------------------------


def suite_calg_rescat(wb: Workbench) -> list[LawReport]:
    return check_axioms(wb.calg, wb.budget, "calg-rescat")


def suite_duality(wb: Workbench) -> list[LawReport]:
    m, cm = wb.finpar, wb.calg
    ck = Checker(m, wb.budget, "duality")
    R = ck.reps
    D, obj = calg.dual_map, calg.dual_object

    ck.law(
        "functor",
        [R, R, R],
        [Var("f", 0, 1), Var("g", 1, 2)],
        lambda o, f, g: D(m.compose(f, g)) == cm.compose(D(f), D(g))
        and D(m.identity(o[0])) == cm.identity(obj(o[0])),
    )

    def full(o):
        a, b = o
        images = {D(f) for f in ck.maps(a, b)}
        homs = set(cm.hom(obj(a), obj(b)))
        if images != homs or len(images) != len(ck.maps(a, b)):
            return {"detail": f"{len(images)} images, {len(homs)} ring maps"}
        return True

    def joins(o, f, g):
        ok = compatible(m, f, g) == calg.calg_compatible(D(f), D(g)) and leq(m, f, g) == calg.calg_leq(D(f), D(g))
        if ok and compatible(m, f, g):
            ok = D(join(m, [f, g])) == calg.calg_join(D(f), D(g))
        if ok and leq(m, f, g):
            ok = D(relative_complement(m, g, f)) == calg.calg_relcomp(D(g), D(f))
        return ok

    def idempotents(o):
        ring = obj(o[0])
        found = {h for h in cm.hom(ring, ring) if calg.corestriction(h) == h}
        wanted = {calg.idempotent_map(ring, u) for u in ring.carrier}
        return (found == wanted and len(wanted) == 1 << ring.rank) or {"detail": f"{len(found)} idempotents"}

    ck.law("full-faithful", [R, R], [], full)
    ck.law("restriction", [R, R], [Var("f", 0, 1)], lambda o, f: D(m.restrict(f)) == calg.corestriction(D(f)))
    ck.law("join-relcomp", [R, R], [Var("f", 0, 1), Var("g", 0, 1)], joins)
    ck.law(
        "complement",
        [R],
        [Var("e", 0, 0, "idem")],
        lambda o, e: D(complement_idem(m, e)) == calg.calg_complement(D(e)),
    )
    ck.law("idempotent-elements", [R], [], idempotents)
    ck.law(
        "classifier",
        [R, R],
        [Var("f", 0, 1)],
        lambda o, f: D(kleisli.classify(m, f)) == calg.calg_classify(D(f))
        and cm.compose(calg.calg_classify(D(f)), D(kleisli.counit(o[1]))) == D(f),
    )
    homs = [(a, m.coproduct([b0, b1])) for a in R for b0 in R for b1 in R if m.size(b0) + m.size(b1) <= 3]
    ck.law(
        "decision",
        [homs],
        [],
        lambda o: _first_failure(ck.maps(*o[0]), lambda f: D(decision(m, f)) == calg.calg_decision(D(f))),
    )
    return ck.reports


SUITES: dict[str, Callable[[Workbench], list[LawReport]]] = {
    "axioms": lambda wb: check_axioms(wb.finpar, wb.budget, "axioms"),
    "classical": suite_classical,
    "universal-amp": suite_universal_amp,
    "decision-unique": suite_decision_unique,
    "oracle-vs-construction": suite_oracle_vs_construction,
    "monad": suite_monad,
    "kleisli-rescat": suite_kleisli_rescat,
    "classifier-unique": suite_classifier_unique,
    "splitting": suite_splitting,
    "universal-product": suite_universal_product,
    "calg-rescat": suite_calg_rescat,
    "duality": suite_duality,
    "thm2": suite_thm2,
}

GROUPS: dict[str, tuple[str, ...]] = {
    "axioms": ("axioms",),
    "classical": ("classical", "universal-amp", "decision-unique", "oracle-vs-construction"),
    "kleisli": ("monad", "kleisli-rescat", "classifier-unique"),
    "splitting": ("splitting", "universal-product"),
    "thm2": ("thm2",),
    "duality": ("calg-rescat", "duality"),
    "all": tuple(SUITES),
}


def resolve(selection: str) -> tuple[str, ...]:
    """A group name or a single suite id."""
    if selection in GROUPS:
        return GROUPS[selection]
    if selection in SUITES:
        return (selection,)
    raise KeyError(selection)


def run_suites(model: FinParModel, selection: str = "all", budget: Budget | None = None) -> list[LawReport]:
    wb = Workbench(model, budget or Budget())
    reports: list[LawReport] = []
    for name in resolve(selection):
        try:
            reports.extend(SUITES[name](wb))
        except RCWBError as exc:
            reports.append(LawReport(name, "suite", FAIL, detail=f"{type(exc).__name__}: {exc}"))
    return reports
