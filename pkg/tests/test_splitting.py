from __future__ import annotations

import pytest
from hypothesis import given

from conftest import X, idempotents, pm
from rcwb.core import classical_projection
from rcwb.errors import NotIdempotent
from rcwb.finpar import FinParModel, atom, compose, identity, zero_map
from rcwb.laws import Budget
from rcwb.oracle import verify_universal
from rcwb.splitting import (
    amp_as_coproduct,
    restriction_coproduct_from_amp,
    restriction_product_from_amp,
    split_idempotent,
)

A = atom("A", ["a"])
B = atom("B", ["b"])
X3 = atom("X3", ["x0", "x1", "x2"])


@pytest.fixture(scope="module")
def model():
    return FinParModel.from_atoms([A, B], 2)


class TestSplitIdempotent:
    def test_point(self):
        sp = split_idempotent(pm(X, X, {"x0": "x0"}))
        assert len(sp.obj) == 1
        assert sp.r.graph == {"x0": "x0"} and sp.s.graph == {"x0": "x0"}

    def test_identity_and_zero(self):
        sp = split_idempotent(identity(X))
        assert len(sp.obj) == len(X) and sp.r.is_total and sp.s.is_total
        assert len(split_idempotent(zero_map(X, X)).obj) == 0

    @given(idempotents(X3))
    def test_equations(self, e):
        sp = split_idempotent(e)
        assert compose(sp.r, sp.s) == e
        assert compose(sp.s, sp.r) == identity(sp.obj)

    def test_rejects_non_idempotents(self):
        with pytest.raises(NotIdempotent):
            split_idempotent(pm(X, X, {"x0": "x1"}))


class TestRecoveredProduct:
    def test_singletons(self, model):
        rec = restriction_product_from_amp(model, A, B)
        assert len(rec.obj) == 1
        assert rec.proj0.is_total and rec.proj1.is_total

    def test_split_equations(self, model):
        rec = restriction_product_from_amp(model, A, B)
        p0, p1 = (classical_projection(model, i, A, B) for i in (0, 1))
        r, s = rec.splitting.r, rec.splitting.s
        assert compose(r, s) == compose(model.restrict(p0), model.restrict(p1))
        assert compose(s, r) == identity(rec.obj)

    def test_universal(self, model):
        rec = restriction_product_from_amp(model, A, B)
        check = verify_universal(
            "restriction-product",
            {"model": model, "obj": rec.obj, "proj0": rec.proj0, "proj1": rec.proj1, "pair": rec.pair},
            Budget(max_size=2),
        )
        assert check.passed, check


class TestRecoveredCoproduct:
    def test_injections_total(self, model):
        rec = restriction_coproduct_from_amp(model, A, B)
        assert all(i.is_total for i in rec.injections)

    def test_universal(self, model):
        rec = restriction_coproduct_from_amp(model, A, B)
        check = verify_universal(
            "coproduct",
            {"model": model, "obj": rec.obj, "injections": rec.injections, "copair": rec.copair},
            Budget(max_size=2),
        )
        assert check.passed, check

    def test_copair_laws(self, model):
        rec = restriction_coproduct_from_amp(model, A, B)
        for f in model.hom(A, A):
            for g in model.hom(B, A):
                h = rec.copair([f, g])
                assert compose(rec.injections[0], h) == f
                assert compose(rec.injections[1], h) == g


class TestAmpAsCoproduct:
    def test_third_injection_is_canonical(self, model):
        rec = amp_as_coproduct(model, A, B)
        assert rec.injections[2] == model.inj(2, model.amp(A, B))

    def test_first_projection_is_a_copairing(self, model):
        rec = amp_as_coproduct(model, A, B)
        p0 = rec.copair([identity(A), zero_map(B, A), model.proj(0, A, B)])
        assert p0 == classical_projection(model, 0, A, B)

    def test_zero_legs(self, model):
        rec = amp_as_coproduct(model, A, B)
        legs = [zero_map(A, A), zero_map(B, A), zero_map(model.product(A, B), A)]
        assert rec.copair(legs) == zero_map(model.amp(A, B), A)
