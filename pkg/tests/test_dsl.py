from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partial_maps
from rcwb.calg import NonUnitalHom, bring, dual_map
from rcwb.dsl import (
    DEMO,
    Document,
    evaluate,
    format_document,
    format_model,
    parse_document,
    parse_expression,
    parse_model,
    render,
    tokenize,
)
from rcwb.errors import EvalError, ParseError, ValidationError
from rcwb.finpar import ONE, PartialMap, amp, atom, coprod, prod
from rcwb.kleisli import KleisliMap
from rcwb.mutations import BadPair

TEXT = """\
object X = { x0, x1 }
object Y = { y0, y1 }
map f : X -> Y { x0 -> y0 }
map g : X -> Y { x0 -> y1 }
map k : X -> Y { x1 -> y0 }
map e : X -> X { x0 -> x0 }
"""


@pytest.fixture(scope="module")
def doc() -> Document:
    return parse_document(TEXT)


class TestTokens:
    def test_positions(self):
        toks = tokenize("map f\n  : X")
        assert [(t.text, t.line, t.column) for t in toks[:3]] == [("map", 1, 1), ("f", 1, 5), (":", 2, 3)]

    def test_hyphenated_names_and_arrows(self):
        assert [t.text for t in tokenize("bad-pair x0->y0")][:4] == ["bad-pair", "x0", "->", "y0"]

    def test_bad_character(self):
        with pytest.raises(ParseError) as err:
            tokenize("object X = { x0 } $")
        assert (err.value.line, err.value.column) == (1, 19)


class TestModelFiles:
    def test_minimal(self):
        m = parse_model("object X = {x0}\nmap f : X -> X { x0 -> x0 }")
        assert list(m.atoms) == ["X"] and list(m.maps) == ["f"]

    def test_empty_file(self):
        m = parse_model("")
        assert m.atoms == {} and m.maps == {}

    def test_dangling_element(self):
        with pytest.raises(ValidationError) as err:
            parse_model("object X = {x0}\nmap f : X -> X { x0 -> x9 }")
        assert err.value.name == "f" and err.value.line == 2

    @pytest.mark.parametrize(
        "text",
        [
            "object X = {x0}\nobject X = {x1}",
            "object X = {x0, x0}",
            "object X = {x0}\nmap f : X -> X { x0 -> x0, x0 -> x0 }",
            "map f : Q -> Q { }",
            "object id = { a }",
            "mutation bad-everything",
            "mutation bad-pair\nmutation bad-pair",
            "ring R = bring(1)\nhom h : R -> R { 1 -> 0, 1 -> 1 }",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(ValidationError):
            parse_document(text)

    @pytest.mark.parametrize("text", ["object X = ", "object X = { x0 ", "map f X -> X {}", "frobnicate"])
    def test_syntax_errors_have_positions(self, text):
        with pytest.raises(ParseError) as err:
            parse_document(text)
        assert err.value.line >= 1 and err.value.column >= 1

    def test_constructed_elements(self):
        d = parse_document(
            "object X = { x0 }\nobject Y = { y0, y1 }\n"
            "map p : X * Y -> amp(X, Y) { (x0, y1) -> in2((x0, y1)), (x0, y0) -> in0(x0) }\n"
            "map u : X -> one + Y { x0 -> in0(*) }\n"
        )
        assert d.maps["p"].graph == {("x0", "y1"): (2, ("x0", "y1")), ("x0", "y0"): (0, "x0")}
        assert d.maps["u"].cod == coprod(ONE, d.objects["Y"])

    def test_mutation_directive(self):
        m = parse_model("object X = {x0}\nmutation bad-pair")
        assert isinstance(m, BadPair)

    def test_homs(self):
        d = parse_document("ring R = bring(2)\nhom h : R -> bring(1) { 10 -> 1, 01 -> 0 }")
        h = d.homs["h"]
        assert h.src == bring(2, "R") and h(0b11) == 1

    def test_demo_parses(self):
        assert set(parse_model(DEMO).atoms) == {"A", "B"}


X = atom("X", ["x0", "x1"])
Y = atom("Y", ["y0"])
OBJECTS = [X, Y, ONE, prod(X, Y), coprod(X, Y), amp(Y, Y), prod(Y, coprod(X, ONE)), coprod(Y)]


@st.composite
def documents(draw) -> Document:
    maps = {}
    for i in range(draw(st.integers(0, 3))):
        dom, cod = draw(st.sampled_from(OBJECTS)), draw(st.sampled_from(OBJECTS))
        maps[f"m{i}"] = draw(partial_maps(dom, cod))
    homs = {}
    for i in range(draw(st.integers(0, 2))):
        f = draw(partial_maps(draw(st.sampled_from([X, Y, ONE])), draw(st.sampled_from([X, Y]))))
        homs[f"h{i}"] = dual_map(f)
    mutation = draw(st.sampled_from([None, "bad-pair", "trivial-restriction"]))
    return Document({"X": X, "Y": Y}, maps, {"R": bring(2, "R")}, homs, mutation)


class TestRoundTrip:
    @settings(max_examples=60, deadline=None)
    @given(documents())
    def test_print_then_parse(self, d):
        assert parse_document(format_document(d)) == d

    def test_model_round_trip(self):
        m = parse_model(TEXT + "mutation bad-terminal\n")
        again = parse_model(format_model(m))
        assert type(again) is type(m) and again.maps == m.maps and again.atoms == m.atoms


class TestExpressions:
    def test_restriction(self, doc):
        assert render(evaluate(doc, "rest(f)")) == "X -> X { x0 -> x0 }"

    def test_incompatible_join_names_both(self, doc):
        with pytest.raises(EvalError) as err:
            evaluate(doc, "join(f, g)")
        assert "Incompatible" in str(err.value) and "`f`" in str(err.value) and "`g`" in str(err.value)

    def test_classical_pair_with_zero(self, doc):
        assert evaluate(doc, "cpair(f, zero)") == evaluate(doc, "f ; inj(0, amp(Y, Y))")

    def test_composition_is_diagrammatic(self, doc):
        # e first, then f: x1 is cut off by e before f sees it
        assert evaluate(doc, "e ; k") == PartialMap(doc.objects["X"], doc.objects["Y"], (None, None))
        assert evaluate(doc, "e ; f") == evaluate(doc, "f")

    def test_polymorphic_leaves_take_their_type_from_context(self, doc):
        assert evaluate(doc, "id ; f ; t") == evaluate(doc, "f ; t(Y)")
        assert evaluate(doc, "join(f, zero)") == evaluate(doc, "f")

    @pytest.mark.parametrize(
        "expr, want",
        [
            ("comp(e)", "X -> X { x1 -> x1 }"),
            ("rc(join(f, k), f)", "X -> Y { x1 -> y0 }"),
            ("classify(f)", "X -> Y + one { x0 -> in0(y0), x1 -> in1(*) }"),
            ("dec(copair(f, k) ; inj(0, Y + Y))", "X + X -> (X + X) + (X + X) { in0(x0) -> in0(in0(x0)), in1(x1) -> in0(in1(x1)) }"),
            ("p1(X, Y)", "amp(X, Y) -> Y { in1(y0) -> y0, in1(y1) -> y1, in2((x0, y0)) -> y0, in2((x0, y1)) -> y1, in2((x1, y0)) -> y0, in2((x1, y1)) -> y1 }"),
        ],
    )
    def test_tables(self, doc, expr, want):
        assert render(evaluate(doc, expr)) == want

    def test_kleisli(self, doc):
        k = evaluate(doc, "kleisli(f)")
        assert isinstance(k, KleisliMap)
        assert evaluate(doc, "unkleisli(kleisli(f) ; kleisli(id(Y)))") == evaluate(doc, "f")

    def test_split(self, doc):
        out = render(evaluate(doc, "split(e)"))
        assert out.splitlines()[0] == "e : X -> X { x0 -> x0 }"

    def test_calg(self, doc):
        h = evaluate(doc, "rest(f)", "calg")
        assert isinstance(h, NonUnitalHom)
        assert h == dual_map(evaluate(doc, "rest(f)"))

    @pytest.mark.parametrize(
        "expr, where",
        [("f ; f", (1, 5)), ("nope", (1, 1)), ("zero ; f", (1, 1)), ("proj(3, X * Y)", (1, 1))],
    )
    def test_errors_carry_spans(self, doc, expr, where):
        with pytest.raises(EvalError) as err:
            evaluate(doc, expr)
        assert (err.value.line, err.value.column) == where
        assert err.value.source

    @pytest.mark.parametrize("expr", ["join(f,", "f ;", "inj(x, X)", "(f", "id(X"])
    def test_parse_errors(self, expr):
        with pytest.raises(ParseError):
            parse_expression(expr)
