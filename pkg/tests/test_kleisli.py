from __future__ import annotations

import pytest
from hypothesis import given

from conftest import X, Y, Z, partial_maps, pm
from rcwb.errors import InvalidMap
from rcwb.finpar import FinParModel, ONE, compose, identity, prod, restriction, terminal_map, zero_map
from rcwb.kleisli import (
    KleisliMap,
    classify,
    eta,
    from_kleisli,
    kleisli_classical_pair,
    kleisli_compose,
    kleisli_pair,
    kleisli_restriction,
    multiplication,
    plus_one,
    to_kleisli,
    unit,
)

M = FinParModel()


def km(dom, cod, graph) -> KleisliMap:
    """Kleisli map from a graph of ``inJ`` values; missing points raise."""
    base = plus_one(cod)
    full = {x: graph.get(x, (1, "*")) for x in dom.elements}
    return KleisliMap(dom, cod, pm(dom, base, full))


class TestKleisliMaps:
    def test_base_must_be_total(self):
        with pytest.raises(InvalidMap):
            KleisliMap(X, Y, pm(X, plus_one(Y), {"x0": (0, "y0")}))

    def test_unit_law(self):
        f = pm(X, Y, {"x0": "y0", "x1": "y1"})
        g = pm(Y, Z, {"y0": "z0", "y1": "z0"})
        assert kleisli_compose(eta(f), eta(g)) == eta(compose(f, g))

    def test_exception_propagates(self):
        f = km(X, Y, {"x1": (0, "y0")})
        g = eta(pm(Y, Z, {"y0": "z0", "y1": "z0"}))
        assert kleisli_compose(f, g).base("x0") == (1, "*")

    @given(partial_maps(X, Y), partial_maps(Y, Z))
    def test_composition_matches_finpar(self, f, g):
        assert from_kleisli(kleisli_compose(to_kleisli(f), to_kleisli(g))) == compose(f, g)


class TestRestriction:
    def test_example(self):
        f = km(X, Y, {"x0": (0, "y0")})
        assert kleisli_restriction(f).base.graph == {"x0": (0, "x0"), "x1": (1, "*")}

    def test_total_and_constant(self):
        assert kleisli_restriction(eta(pm(X, Y, {"x0": "y0", "x1": "y0"}))) == eta(identity(X))
        raise_all = km(X, Y, {})
        assert kleisli_restriction(raise_all) == km(X, X, {})


class TestPairings:
    def test_both_succeed(self):
        f, g = km(Z, X, {"z0": (0, "x0")}), km(Z, Y, {"z0": (0, "y1")})
        assert kleisli_pair(f, g).base("z0") == (0, ("x0", "y1"))
        assert kleisli_classical_pair(f, g).base("z0") == (0, (2, ("x0", "y1")))

    def test_one_leg_raises(self):
        f, g = km(Z, X, {"z0": (0, "x0")}), km(Z, Y, {})
        assert kleisli_pair(f, g).base("z0") == (1, "*")
        assert kleisli_classical_pair(f, g).base("z0") == (0, (0, "x0"))

    def test_both_raise(self):
        f, g = km(Z, X, {}), km(Z, Y, {})
        assert kleisli_pair(f, g).base("z0") == (1, "*")
        assert kleisli_classical_pair(f, g).base("z0") == (1, "*")


class TestClassify:
    def test_example(self):
        t = classify(M, pm(X, Y, {"x0": "y0"}))
        assert t.graph == {"x0": (0, "y0"), "x1": (1, "*")}

    @given(partial_maps(X, Y))
    def test_total_on_anything(self, f):
        assert classify(M, f).is_total

    def test_total_and_zero(self):
        f = pm(X, Y, {"x0": "y0", "x1": "y1"})
        assert classify(M, f) == compose(f, M.inj(0, plus_one(Y)))
        assert classify(M, zero_map(X, Y)) == compose(terminal_map(X), M.inj(1, plus_one(Y)))


class TestRoundTrip:
    @given(partial_maps(X, Y))
    def test_round_trip(self, f):
        assert from_kleisli(to_kleisli(f)) == f

    def test_identity_goes_to_unit(self):
        assert to_kleisli(identity(X)).base == unit(X)

    @given(partial_maps(X, Y))
    def test_restriction_preserved(self, f):
        assert to_kleisli(restriction(f)) == kleisli_restriction(to_kleisli(f))

    def test_multiplication_collapses_exceptions(self):
        mu = multiplication(X)
        assert mu((1, "*")) == (1, "*")
        assert mu((0, (1, "*"))) == (1, "*")
        assert mu((0, (0, "x1"))) == (0, "x1")

    def test_plus_one(self):
        assert plus_one(prod(X, ONE)).summands()[1] == ONE
