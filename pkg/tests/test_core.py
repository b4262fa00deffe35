from __future__ import annotations

import pytest
from hypothesis import given

from conftest import X, Y, partial_maps, pm
from rcwb.core import compatible, disjoint, is_total, leq
from rcwb.finpar import FinParModel, PartialMap, zero_map
from rcwb.laws import Budget, check_axioms, summarize
from rcwb.mutations import MUTATIONS, mutated, mutation_name
from rcwb.suites import SUITES, Workbench

M = FinParModel()


class TestOrder:
    def test_leq(self):
        assert leq(M, pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x0": "y0", "x1": "y0"}))
        assert not leq(M, pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x0": "y1"}))

    @given(partial_maps(X, Y))
    def test_leq_reflexive(self, f):
        assert leq(M, f, f)
        assert compatible(M, f, f)

    def test_compatible(self):
        assert compatible(M, pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x1": "y0"}))
        assert not compatible(M, pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x0": "y1"}))

    def test_disjoint(self):
        assert disjoint(M, pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x1": "y0"}))
        f = pm(X, Y, {"x0": "y0"})
        assert not disjoint(M, f, f)

    @given(partial_maps(X, Y))
    def test_zero_disjoint_from_everything(self, g):
        assert disjoint(M, zero_map(X, Y), g)

    @given(partial_maps(X, Y), partial_maps(X, Y))
    def test_leq_is_graph_inclusion(self, f, g):
        assert leq(M, f, g) == (f.graph.items() <= g.graph.items())

    @given(partial_maps(X, Y))
    def test_total_iff_restriction_is_identity(self, f):
        assert is_total(M, f) == f.is_total


class TestAxiomSuite:
    def test_finpar_passes_at_size_two(self, demo2):
        reports = check_axioms(demo2, Budget(max_size=2))
        assert summarize(reports)["fail"] == 0
        ids = {r.law for r in reports}
        assert {"R.1", "R.2", "R.3", "R.4", "cat.assoc", "distributive"} <= ids

    def test_empty_model_passes(self):
        reports = check_axioms(FinParModel.from_atoms([], 2), Budget(max_size=2))
        assert all(r.status == "pass" for r in reports)

    def test_reports_serialise(self, demo2):
        rec = check_axioms(demo2, Budget(max_size=1))[0].to_record()
        assert set(rec) >= {"suite", "law", "status", "checked", "counterexample"}
        assert "recheck" not in rec

    def test_trivial_restriction_keeps_the_four_axioms(self, demo2):
        # 1 ; f = f, so making every restriction an identity cannot break R.1.
        bad = mutated("trivial-restriction", demo2)
        reports = {r.law: r for r in check_axioms(bad, Budget(max_size=2))}
        for law in ("R.1", "R.2", "R.3", "R.4"):
            assert reports[law].status == "pass"
        assert reports["terminal.total"].status == "fail"


class TestMutations:
    @pytest.mark.parametrize("name", [n for n, m in MUTATIONS.items() if m.suite == "axioms"])
    def test_flips_exactly_its_targets(self, demo2, name):
        mu = MUTATIONS[name]
        reports = check_axioms(mutated(name, demo2), Budget(max_size=2))
        failed = {r.law for r in reports if r.status == "fail"}
        assert failed == mu.targets

    @pytest.mark.parametrize("name", list(MUTATIONS))
    def test_counterexamples_recheck(self, demo2, name):
        mu = MUTATIONS[name]
        wb = Workbench(mutated(name, demo2), Budget(max_size=2))
        for r in SUITES[mu.suite](wb):
            if r.status == "fail":
                assert r.counterexample
                assert r.recheck is None or r.recheck()

    def test_name_round_trip(self, demo2):
        for name in MUTATIONS:
            assert mutation_name(mutated(name, demo2)) == name
        assert mutation_name(demo2) is None

    def test_unknown(self, demo2):
        with pytest.raises(KeyError):
            mutated("bad-everything", demo2)
