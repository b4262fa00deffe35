from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X, Y, idempotents, partial_maps, pm
from rcwb.classical import classical_pair, complement_idem, join
from rcwb.core import classical_projection, compatible, quasi_projection
from rcwb.errors import Incompatible
from rcwb.finpar import FinParModel, atom, coprod, zero_map
from rcwb.laws import Budget
from rcwb.oracle import (
    KINDS,
    UniversalPairing,
    corrupt,
    oracle_complement,
    oracle_join,
    oracle_relcomp,
    pointwise_oracles,
    verify_universal,
)
from rcwb.suites import random_pairs

A = atom("A", ["a0"])
B = atom("B", ["b0"])
C = atom("C", ["c0", "c1"])


@pytest.fixture(scope="module")
def model():
    return FinParModel.from_atoms([A, B, C], 2)


class TestClassicalProduct:
    def test_sixteen_candidates_one_winner(self, model):
        obj = model.amp(A, B)
        assert len(obj) == 3 and model.hom_size(C, obj) == 16
        p0, p1 = (classical_projection(model, i, A, B) for i in (0, 1))
        for f in model.hom(C, A):
            for g in model.hom(C, B):
                hits = [h for h in model.hom(C, obj) if model.compose(h, p0) == f and model.compose(h, p1) == g]
                assert hits == [classical_pair(model, f, g)]

    def test_verify_passes(self, model):
        p0, p1 = (classical_projection(model, i, A, B) for i in (0, 1))
        check = verify_universal(
            "classical-product",
            {"model": model, "obj": model.amp(A, B), "proj0": p0, "proj1": p1, "tests": [C]},
        )
        assert check.passed and check.checked == 16  # 4 x 4 pairs (f, g)

    def test_wrong_candidate_fails_with_witness(self, model):
        s = coprod(A, B)
        check = verify_universal(
            "product",
            {"model": model, "obj": s, "proj0": quasi_projection(model, 0, s), "proj1": quasi_projection(model, 1, s)},
        )
        assert check.status == "fail"
        assert set(check.counterexample) == {"f", "g"}
        assert check.recheck()


class TestOtherKinds:
    def test_kinds(self):
        assert set(KINDS) >= {"product", "coproduct", "classical-product", "decision", "classifier", "join-lub"}
        with pytest.raises(ValueError):
            verify_universal("pullback", {"model": FinParModel()})

    def test_empty_join_is_zero(self, model):
        check = verify_universal("join-lub", {"model": model, "family": [], "dom": C, "cod": A, "join": zero_map(C, A)})
        assert check.passed

    def test_wrong_join_caught(self, model):
        f = model.hom(C, A)[1]
        check = verify_universal("join-lub", {"model": model, "family": [f], "dom": C, "cod": A, "join": zero_map(C, A)})
        assert check.status == "fail"

    def test_over_budget_is_skipped(self, model):
        check = verify_universal(
            "coproduct",
            {"model": model, "obj": coprod(C, C), "injections": [model.inj(0, coprod(C, C))], "tests": [coprod(C, C)]},
            Budget(max_hom=8),
        )
        assert check.status == "skipped"


class TestUniversalPairing:
    @settings(max_examples=30)
    @given(partial_maps(X, Y), partial_maps(X, Y))
    def test_agrees_with_construction(self, f, g):
        m = FinParModel()
        assert UniversalPairing(Budget(max_hom=1 << 20))(m, f, g) == classical_pair(m, f, g)


class TestPointwise:
    @given(partial_maps(X, Y), partial_maps(X, Y))
    def test_join_relcomp_rc2(self, f, g):
        out = pointwise_oracles(f, g)
        m = FinParModel()
        if compatible(m, f, g):
            assert out["join"] == join(m, [f, g])
        else:
            assert out["join"] is None
        if out["relcomp"] is not None:
            assert oracle_join(out["relcomp"], f) == g

    @given(idempotents(X))
    def test_complement_twice(self, e):
        assert oracle_complement(oracle_complement(e)) == e
        assert oracle_complement(e) == complement_idem(FinParModel(), e)

    def test_incompatible(self):
        with pytest.raises(Incompatible):
            oracle_join(pm(X, Y, {"x0": "y0"}), pm(X, Y, {"x0": "y1"}))

    @given(st.integers(0, 2**16))
    def test_random_pairs_are_seeded(self, seed):
        assert random_pairs(seed, n=5) == random_pairs(seed, n=5)

    def test_corrupt_changes_one_entry(self):
        f, _ = random_pairs(7, n=1)[0]
        g = corrupt(f, 2)
        assert sum(a != b for a, b in zip(f.table, g.table)) == 1

    def test_relcomp_oracle(self):
        f, g = random_pairs(3, n=1)[0]
        assert oracle_relcomp(g, zero_map(g.dom, g.cod)) == g
