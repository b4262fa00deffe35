from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X, Y, Z, finsets, partial_maps, pm
from rcwb.errors import InvalidMap, TypeMismatch
from rcwb.finpar import (
    ONE,
    ZERO,
    FinParModel,
    PartialMap,
    amp,
    atom,
    compose,
    coprod,
    copair,
    distributor,
    distributor_inverse,
    format_graph,
    identity,
    inj,
    pair,
    prod,
    proj,
    quasi_projection,
    restriction,
    terminal_map,
    zero_map,
)

A = atom("A", ["a"])
B = atom("B", ["b"])


class TestObjects:
    def test_one_and_zero(self):
        assert len(ONE) == 1
        assert len(ZERO) == 0

    def test_product_order_is_lexicographic(self):
        assert prod(X, Y).elements == (("x0", "y0"), ("x0", "y1"), ("x1", "y0"), ("x1", "y1"))

    def test_coproduct_tags_each_element(self):
        s = coprod(X, Z)
        assert s.elements == ((0, "x0"), (0, "x1"), (1, "z0"))
        assert s.summands() == (X, Z)

    def test_amp_is_a_three_way_coproduct(self):
        assert amp(X, Z).summands() == (X, Z, prod(X, Z))
        assert len(amp(X, Y)) == 2 + 2 + 4

    def test_duplicate_labels_rejected(self):
        with pytest.raises((InvalidMap, ValueError)):
            atom("W", ["w", "w"])

    @given(finsets(), finsets())
    def test_sizes(self, l, r):
        assert len(prod(l, r)) == len(l) * len(r)
        assert len(coprod(l, r)) == len(l) + len(r)


class TestPartialMaps:
    def test_rejects_foreign_values(self):
        with pytest.raises((InvalidMap, TypeMismatch, KeyError)):
            pm(X, Y, {"x0": "nope"})

    def test_extensional_equality(self):
        assert pm(X, Y, {"x0": "y0"}) == pm(X, Y, {"x0": "y0"})
        assert pm(X, Y, {"x0": "y0"}) != pm(X, Y, {"x0": "y1"})

    def test_format(self):
        assert format_graph(pm(X, Y, {"x0": "y0"})) == "{ x0 -> y0 }"
        assert format_graph(zero_map(X, Y)) == "{ }"


class TestRestriction:
    def test_domain_of_definition(self):
        assert restriction(pm(X, Y, {"x0": "y0"})) == pm(X, X, {"x0": "x0"})

    def test_total_and_empty(self):
        assert restriction(identity(X)) == identity(X)
        assert restriction(zero_map(X, Y)) == zero_map(X, X)


class TestCompose:
    def test_total_chain(self):
        f = pm(Z, Y, {"z0": "y0"})
        g = pm(Y, X, {"y0": "x1", "y1": "x0"})
        assert compose(f, g) == pm(Z, X, {"z0": "x1"})

    def test_undefinedness_absorbs(self):
        assert compose(pm(X, Z, {"x0": "z0"}), zero_map(Z, Y)) == zero_map(X, Y)

    def test_partial_second_leg(self):
        f = pm(X, Y, {"x0": "y0", "x1": "y1"})
        g = pm(Y, Z, {"y0": "z0"})
        assert compose(f, g) == pm(X, Z, {"x0": "z0"})

    def test_type_mismatch(self):
        with pytest.raises(TypeMismatch):
            compose(identity(X), identity(Y))

    @given(partial_maps(X, Y), partial_maps(Y, Z))
    def test_matches_pointwise(self, f, g):
        h = compose(f, g)
        for x in X.elements:
            y = f(x) if f.defined(x) else None
            want = g(y) if y is not None and g.defined(y) else None
            assert (h(x) if h.defined(x) else None) == want


class TestPairing:
    def test_pair(self):
        assert pair(pm(Z, A, {"z0": "a"}), pm(Z, B, {"z0": "b"})) == pm(Z, prod(A, B), {"z0": ("a", "b")})

    def test_one_leg_undefined(self):
        assert pair(pm(Z, A, {"z0": "a"}), zero_map(Z, B)) == zero_map(Z, prod(A, B))

    def test_projections_pair_to_identity(self):
        p = prod(X, Y)
        assert pair(proj(0, p), proj(1, p)) == identity(p)


class TestCopairing:
    def test_first_quasi_projection(self):
        s = coprod(X, Y)
        assert copair([identity(X), zero_map(Y, X)], s) == quasi_projection(0, s)
        assert quasi_projection(0, s) == pm(s, X, {(0, "x0"): "x0", (0, "x1"): "x1"})

    def test_eta(self):
        s = coprod(X, Y)
        assert copair([inj(0, s), inj(1, s)], s) == identity(s)

    def test_classical_projection_on_amp(self):
        obj = amp(X, Y)
        p0 = copair([identity(X), zero_map(Y, X), proj(0, prod(X, Y))], obj)
        assert p0((2, ("x1", "y0"))) == "x1"
        assert p0((0, "x0")) == "x0"
        assert not p0.defined((1, "y0"))

    def test_quasi_projection_identities(self):
        s = coprod(X, Y)
        assert compose(inj(1, s), quasi_projection(0, s)) == zero_map(Y, X)
        assert restriction(quasi_projection(0, s)) == copair(
            [compose(identity(X), inj(0, s)), zero_map(Y, s)], s
        )


class TestStructuralMaps:
    def test_terminal(self):
        assert terminal_map(X) == pm(X, ONE, {"x0": "*", "x1": "*"})

    def test_zero(self):
        z = zero_map(X, Y)
        assert z.graph == {} and restriction(z) == zero_map(X, X)

    def test_distributor_is_bijective(self):
        d = distributor(X, Y, Z)
        assert d.is_total and sorted(d.table) == list(range(len(d.cod)))
        assert compose(d, distributor_inverse(X, Y, Z)) == identity(d.dom)


class TestModel:
    def test_universe_bounded_by_size(self):
        m = FinParModel.from_atoms([A, atom("C", ["c0", "c1"])], 3)
        assert all(len(o) <= 3 for o in m.objects())
        assert ONE in m.objects() and ZERO in m.objects()

    def test_hom_is_complete(self):
        m = FinParModel.from_atoms([X], 2)
        homs = m.hom(X, X)
        assert len(homs) == 9 == len(set(homs))

    @settings(max_examples=25)
    @given(st.integers(0, 3))
    def test_resized_keeps_atoms(self, n):
        m = FinParModel.from_atoms([A], 3).resized(n)
        assert m.atoms == {"A": A}
        assert all(len(o) <= n for o in m.objects())
