"""Model files and the map-expression language.

A model file declares atoms, partial maps between constructed objects,
Boolean rings and ring homs, and optionally a mutation fixture::

    # comments run to the end of the line
    object A = { a0 }
    object B = { b0, b1 }
    map f : B -> A + one { b0 -> in0(a0), b1 -> in1(*) }
    ring R = bring(2)
    hom h : R -> bring(1) { 10 -> 1, 01 -> 0 }
    mutation bad-terminal

Elements of constructed objects are written the way they print: pairs as
``(a, b)``, coproduct elements as ``inJ(x)`` and the point of ``one`` as
``*``.  Ring elements are bit strings (character ``i`` is bit ``i``).

Expressions compose left to right with ``;``.  The leaves ``id``, ``zero``,
``t`` and ``z`` may omit their objects when the surrounding expression
fixes them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import calg as calg_mod
from . import kleisli as K
from .calg import BoolRing, CalgModel, NonUnitalHom, bring
from .classical import (
    classical_pair,
    complement_idem,
    decision,
    join,
    relative_complement,
)
from .core import RestrictionModel, classical_projection, quasi_projection
from .errors import EvalError, Incompatible, InvalidMap, ParseError, RCWBError, TypeMismatch, ValidationError
from .finpar import STAR, FinParModel, FinSet, PartialMap, atom, format_graph
from .mutations import MUTATIONS, mutated, mutation_name
from .splitting import (
    RecoveredCoproduct,
    RecoveredProduct,
    Splitting,
    restriction_coproduct_from_amp,
    restriction_product_from_amp,
    split_idempotent,
)

# -- tokens --------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z0-9_]+)*)
  | (?P<number>[0-9]+)
  | (?P<punct>[{}(),;:=*+])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, number, arrow, punct, eof
    text: str
    line: int
    column: int
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "newline":
            line, line_start = line + 1, m.end()
        elif kind not in ("space", "comment"):
            out.append(Token(kind, m.group(), line, pos - line_start + 1, pos))
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1, pos))
    return out


class _Stream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def lookahead(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek
        return tok.kind in ("punct", "arrow") and tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.next()

    def ident(self, what: str = "a name") -> Token:
        if self.peek.kind != "ident":
            self.error(f"expected {what}")
        return self.next()

    def number(self) -> int:
        if self.peek.kind != "number":
            self.error("expected a number")
        return int(self.next().text)

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(tok.line, tok.column, f"{message}, found {found}")


# -- object expressions --------------------------------------------------

KEYWORDS = frozenset({"object", "map", "ring", "hom", "mutation"})
OBJECT_BUILTINS = frozenset({"one", "zero", "amp", "sum", "bring"})


def parse_object(s: _Stream, model: RestrictionModel, names: dict[str, Any]):
    """``sum := prod ('+' prod)*``, ``prod := base ('*' base)*``."""
    parts = [_object_product(s, model, names)]
    while s.accept("+"):
        parts.append(_object_product(s, model, names))
    return parts[0] if len(parts) == 1 else model.coproduct(parts)


def _object_product(s: _Stream, model, names):
    out = _object_base(s, model, names)
    while s.accept("*"):
        out = model.product(out, _object_base(s, model, names))
    return out


def _object_base(s: _Stream, model, names):
    if s.accept("("):
        out = parse_object(s, model, names)
        s.expect(")")
        return out
    tok = s.ident("an object")
    name = tok.text
    if name == "one":
        return model.terminal()
    if name == "zero":
        return model.initial()
    if name in ("amp", "sum"):
        s.expect("(")
        parts = [parse_object(s, model, names)]
        while s.accept(","):
            parts.append(parse_object(s, model, names))
        s.expect(")")
        if name == "sum":
            return model.coproduct(parts)
        if len(parts) != 2:
            raise ParseError(tok.line, tok.column, "amp takes two objects")
        return model.amp(*parts)
    if name == "bring":
        if not isinstance(model, CalgModel):
            raise ParseError(tok.line, tok.column, "bring(n) is a ring; it needs the calg model")
        s.expect("(")
        n = s.number()
        s.expect(")")
        return bring(n)
    if name not in names:
        raise ValidationError(name, "unknown object", tok.line, tok.column)
    return names[name]


# -- model documents -------------------------------------------------------


@dataclass
class Document:
    """Everything a model file declares, in declaration order."""

    objects: dict[str, FinSet] = field(default_factory=dict)
    maps: dict[str, PartialMap] = field(default_factory=dict)
    rings: dict[str, BoolRing] = field(default_factory=dict)
    homs: dict[str, NonUnitalHom] = field(default_factory=dict)
    mutation: str | None = None

    def model(self, max_size: int = 3) -> FinParModel:
        m = FinParModel.from_atoms(list(self.objects.values()), max_size, maps=self.maps)
        return mutated(self.mutation, m) if self.mutation else m

    def calg_model(self, max_size: int = 3) -> CalgModel:
        universe = calg_mod.calg_universe(self.model(max_size).objects())
        return CalgModel(universe + [r for r in self.rings.values() if r not in universe], homs=self.homs)


_FIN = FinParModel()
_CALG = CalgModel()


def parse_document(text: str) -> Document:
    s = _Stream(text)
    doc = Document()
    declared: dict[str, Token] = {}

    def claim(tok: Token) -> str:
        name = tok.text
        if name in KEYWORDS or name in OBJECT_BUILTINS or name in FUNCTIONS:
            raise ValidationError(name, "is a reserved word", tok.line, tok.column)
        if name in declared:
            first = declared[name]
            raise ValidationError(name, f"duplicate declaration (first at {first.line}:{first.column})", tok.line, tok.column)
        declared[name] = tok
        return name

    while s.peek.kind != "eof":
        tok = s.ident("a declaration")
        kind = tok.text
        if kind == "object":
            name = claim(s.ident("an object name"))
            s.expect("=")
            labels = _label_list(s)
            seen: set = set()
            for lt in labels:
                if lt.text in seen:
                    raise ValidationError(name, f"element {lt.text} is listed twice", lt.line, lt.column)
                seen.add(lt.text)
            doc.objects[name] = atom(name, [lt.text for lt in labels])
        elif kind == "map":
            name = claim(s.ident("a map name"))
            s.expect(":")
            dom = parse_object(s, _FIN, doc.objects)
            s.expect("->")
            cod = parse_object(s, _FIN, doc.objects)
            doc.maps[name] = _map_body(s, name, dom, cod)
        elif kind == "ring":
            name = claim(s.ident("a ring name"))
            s.expect("=")
            start = s.peek
            if not (start.kind == "ident" and start.text == "bring"):
                s.error("expected bring(n)")
            s.next()
            s.expect("(")
            n = s.number()
            s.expect(")")
            doc.rings[name] = bring(n, name)
        elif kind == "hom":
            name = claim(s.ident("a hom name"))
            s.expect(":")
            # an atom names its ring of subsets here, as it does under --model calg
            rings = {n: calg_mod.dual_object(o) for n, o in doc.objects.items()} | doc.rings
            src = parse_object(s, _CALG, rings)
            s.expect("->")
            tgt = parse_object(s, _CALG, rings)
            doc.homs[name] = _hom_body(s, name, src, tgt)
        elif kind == "mutation":
            nt = s.ident("a mutation name")
            if doc.mutation is not None:
                raise ValidationError(nt.text, "only one mutation directive is allowed", nt.line, nt.column)
            if nt.text not in MUTATIONS:
                known = ", ".join(MUTATIONS)
                raise ValidationError(nt.text, f"unknown mutation (known: {known})", nt.line, nt.column)
            doc.mutation = nt.text
        else:
            s.error("expected object, map, ring, hom or mutation", tok)
    return doc


def parse_model(text: str, max_size: int = 3) -> FinParModel:
    """Parse a model file straight into its (possibly mutated) FinPar model."""
    return parse_document(text).model(max_size)


def _label_list(s: _Stream) -> list[Token]:
    s.expect("{")
    out = []
    while not s.at("}"):
        tok = s.peek
        if tok.kind not in ("ident", "number"):
            s.error("expected an element label")
        out.append(s.next())
        if not s.accept(","):
            break
    s.expect("}")
    return out


def _map_body(s: _Stream, name: str, dom: FinSet, cod: FinSet) -> PartialMap:
    s.expect("{")
    table: list = [None] * len(dom)
    while not s.at("}"):
        start = s.peek
        x = _element(s, dom, name)
        s.expect("->")
        y = _element(s, cod, name)
        i = dom.index[x]
        if table[i] is not None:
            raise ValidationError(name, f"{dom.format_element(x)} is mapped twice", start.line, start.column)
        table[i] = cod.index[y]
        if not s.accept(","):
            break
    s.expect("}")
    return PartialMap(dom, cod, tuple(table))


def _element(s: _Stream, obj: FinSet, owner: str):
    """Parse one element of ``obj``, guided by how ``obj`` was built."""
    tok = s.peek
    tag = obj.tag
    if tag == "prod":
        left, right = obj.factors()
        s.expect("(")
        x = _element(s, left, owner)
        s.expect(",")
        y = _element(s, right, owner)
        s.expect(")")
        return (x, y)
    parts = obj.summands()
    if parts is not None:
        head = s.ident("an injection inJ(...)")
        m = re.fullmatch(r"in(\d+)", head.text)
        if m is None or int(m.group(1)) >= len(parts):
            raise ValidationError(owner, f"{head.text} is not an injection into {obj}", head.line, head.column)
        j = int(m.group(1))
        s.expect("(")
        x = _element(s, parts[j], owner)
        s.expect(")")
        return (j, x)
    if tag == "one":
        if s.accept("*"):
            return STAR
        raise ValidationError(owner, f"the element of {obj} is written *", tok.line, tok.column)
    if tok.kind not in ("ident", "number"):
        s.error(f"expected an element of {obj}")
    s.next()
    if tok.text not in obj.index:
        raise ValidationError(owner, f"{tok.text} is not an element of {obj}", tok.line, tok.column)
    return tok.text


def _bits(s: _Stream, ring: BoolRing, owner: str) -> int:
    tok = s.next()
    text = tok.text
    if ring.rank == 0 and text == "e":
        return 0
    if tok.kind != "number" or len(text) != ring.rank or set(text) - {"0", "1"}:
        raise ValidationError(owner, f"{text!r} is not a {ring.rank}-bit element of {ring}", tok.line, tok.column)
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def _hom_body(s: _Stream, name: str, src: BoolRing, tgt: BoolRing) -> NonUnitalHom:
    start = s.expect("{")
    rows = []
    while not s.at("}"):
        tok = s.peek
        a = _bits(s, src, name)
        s.expect("->")
        b = _bits(s, tgt, name)
        rows.append((tok, a, b))
        if not s.accept(","):
            break
    s.expect("}")
    images = [0] * src.rank
    for _, a, b in rows:
        if a and a & (a - 1) == 0:
            images[a.bit_length() - 1] = b
    try:
        h = NonUnitalHom.from_basis(src, tgt, images)
    except InvalidMap as exc:
        raise ValidationError(name, str(exc), start.line, start.column) from None
    for tok, a, b in rows:
        if h(a) != b:
            raise ValidationError(
                name, f"row {src.format_element(a)} disagrees with the additive extension", tok.line, tok.column
            )
    return h


def format_hom(h: NonUnitalHom, name: str = "_") -> str:
    rows = ", ".join(
        f"{h.src.format_element(1 << i)} -> {h.tgt.format_element(h(1 << i))}" for i in range(h.src.rank)
    )
    body = "{ " + rows + " }" if rows else "{ }"
    return f"hom {name} : {h.src.name} -> {h.tgt.name} {body}"


def format_document(doc: Document) -> str:
    lines = [f"object {n} = {{ {', '.join(o.elements)} }}" if len(o) else f"object {n} = {{ }}" for n, o in doc.objects.items()]
    lines += [f"map {n} : {f.dom.name} -> {f.cod.name} {format_graph(f)}" for n, f in doc.maps.items()]
    lines += [f"ring {n} = bring({r.rank})" for n, r in doc.rings.items()]
    lines += [format_hom(h, n) for n, h in doc.homs.items()]
    if doc.mutation:
        lines.append(f"mutation {doc.mutation}")
    return "\n".join(lines) + "\n" if lines else ""


def format_model(model: FinParModel | Document) -> str:
    if isinstance(model, Document):
        return format_document(model)
    return format_document(Document(dict(model.atoms), dict(model.maps), mutation=mutation_name(model)))


DEMO = """\
# the built-in demo: two small atoms and a handful of maps
object A = { a0 }
object B = { b0, b1 }
map f : B -> A { b0 -> a0 }
map g : B -> B { b0 -> b1, b1 -> b0 }
map e : B -> B { b0 -> b0 }
map h : B -> A + B { b0 -> in0(a0), b1 -> in1(b0) }
"""


# -- expressions -------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    kind: str  # name, call, compose
    name: str
    args: tuple = ()
    line: int = 1
    column: int = 1
    start: int = 0
    end: int = 0


# Argument kinds per builtin.  A tuple of alternatives lists the arities a
# builtin accepts; "map*" means one or more maps.
FUNCTIONS: dict[str, tuple[tuple[str, ...], ...]] = {
    "id": ((), ("obj",)),
    "zero": ((), ("obj", "obj")),
    "t": ((), ("obj",)),
    "z": ((), ("obj",)),
    "rest": (("map",),),
    "comp": (("map",),),
    "pair": (("map", "map"),),
    "cpair": (("map", "map"),),
    "copair": (("map*",),),
    "inj": (("int", "obj"),),
    "qproj": (("int", "obj"),),
    "proj": (("int", "obj"),),
    "p0": (("obj", "obj"),),
    "p1": (("obj", "obj"),),
    "join": (("map", "map"),),
    "rc": (("map", "map"),),
    "dec": (("map",),),
    "classify": (("map",),),
    "kleisli": (("map",),),
    "unkleisli": (("map",),),
    "split": (("map",),),
    "prod_from_amp": (("obj", "obj"),),
    "coprod_from_amp": (("obj", "obj"),),
}


@dataclass(frozen=True)
class ObjArg:
    """An object argument, kept as source text until evaluation time."""

    start: int
    end: int
    tokens: tuple


def parse_expression(text: str) -> Node:
    s = _Stream(text)
    node = _expr(s)
    if s.peek.kind != "eof":
        s.error("expected ';' or the end of the expression")
    return node


def _span(s: _Stream, first: Token, kind: str, name: str, args: tuple) -> Node:
    last = s.tokens[s.i - 1]
    return Node(kind, name, args, first.line, first.column, first.pos, last.pos + len(last.text))


def _expr(s: _Stream) -> Node:
    first = s.peek
    terms = [_term(s)]
    while s.accept(";"):
        terms.append(_term(s))
    if len(terms) == 1:
        return terms[0]
    return _span(s, first, "compose", ";", tuple(terms))


def _term(s: _Stream) -> Node:
    first = s.peek
    if s.accept("("):
        inner = _expr(s)
        s.expect(")")
        return inner
    tok = s.ident("a map expression")
    name = tok.text
    if name not in FUNCTIONS:
        return _span(s, first, "name", name, ())
    shapes = FUNCTIONS[name]
    if not s.at("("):
        if () not in shapes:
            s.error(f"{name} needs arguments")
        return _span(s, first, "call", name, ())
    s.expect("(")
    shape = next((sh for sh in shapes if sh), ())
    args: list = []
    for k, kind in enumerate(shape):
        if k:
            s.expect(",")
        if kind == "int":
            args.append(s.number())
        elif kind == "obj":
            args.append(_object_arg(s))
        elif kind == "map":
            args.append(_expr(s))
        else:  # map*
            args.append(_expr(s))
            while s.accept(","):
                args.append(_expr(s))
    s.expect(")")
    return _span(s, first, "call", name, tuple(args))


def _object_arg(s: _Stream) -> ObjArg:
    """Skip over one object expression, balancing parentheses."""
    start = s.i
    depth = 0
    while True:
        tok = s.peek
        if tok.kind == "eof":
            s.error("unfinished object expression")
        if tok.kind == "punct":
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                if depth == 0:
                    break
                depth -= 1
            elif tok.text == "," and depth == 0:
                break
            elif tok.text == ";":
                s.error("';' inside an object")
        s.next()
    if s.i == start:
        s.error("expected an object")
    toks = tuple(s.tokens[start : s.i])
    return ObjArg(toks[0].pos, toks[-1].pos + len(toks[-1].text), toks)


# -- evaluation ----------------------------------------------------------------


class _NeedType(Exception):
    def __init__(self, node: Node, what: str):
        self.node, self.what = node, what


Value = Any


@dataclass
class Evaluator:
    model: RestrictionModel
    maps: dict[str, Value]
    objects: dict[str, Any]
    source: str

    # -- plumbing

    def _fail(self, node: Node, message: str):
        raise EvalError(node.line, node.column, self.source[node.start : node.end], message)

    def _text(self, node: Node) -> str:
        return self.source[node.start : node.end]

    def _object(self, arg: ObjArg):
        s = _Stream("")
        s.text = self.source
        s.tokens = list(arg.tokens) + [Token("eof", "", 0, 0, arg.end)]
        try:
            out = parse_object(s, self.model, self.objects)
        except ParseError as exc:
            raise EvalError(exc.line, exc.column, self.source[arg.start : arg.end], exc.message) from None
        except ValidationError as exc:
            raise EvalError(exc.line, exc.column, self.source[arg.start : arg.end], f"{exc.name}: {exc.reason}") from None
        if s.peek.kind != "eof":
            tok = s.peek
            raise EvalError(tok.line, tok.column, self.source[arg.start : arg.end], "malformed object")
        return out

    def dom(self, v):
        if isinstance(v, K.KleisliMap):
            return v.dom
        return self.model.dom(v)

    def cod(self, v):
        if isinstance(v, K.KleisliMap):
            return v.cod
        return self.model.cod(v)

    def run(self, node: Node) -> Value:
        try:
            return self.eval(node)
        except _NeedType as need:
            n = need.node
            self._fail(n, f"cannot infer the {need.what}; give it explicitly, for example zero(A, B) or id(A)")

    def eval(self, node: Node, dom=None, cod=None) -> Value:
        try:
            if node.kind == "name":
                return self._name(node)
            if node.kind == "compose":
                return self._compose(node, dom, cod)
            return getattr(self, "_f_" + node.name)(node, dom, cod)
        except (EvalError, _NeedType):
            raise
        except RCWBError as exc:
            self._fail(node, f"{type(exc).__name__}: {exc}")

    def _try(self, node: Node, dom=None, cod=None):
        try:
            return self.eval(node, dom, cod), None
        except _NeedType as need:
            return None, need

    def _name(self, node: Node):
        v = self.maps.get(node.name)
        if v is None:
            self._fail(node, f"unknown map {node.name!r}")
        return v

    # -- composition and dispatch on value type

    def compose2(self, node: Node, f, g):
        if isinstance(f, K.KleisliMap) and isinstance(g, K.KleisliMap):
            return K.kleisli_compose(f, g)
        if isinstance(f, K.KleisliMap) or isinstance(g, K.KleisliMap):
            self._fail(node, "type error: cannot compose a Kleisli map with a plain map; use kleisli(...) or unkleisli(...)")
        if isinstance(f, (Splitting, RecoveredProduct, RecoveredCoproduct)) or isinstance(
            g, (Splitting, RecoveredProduct, RecoveredCoproduct)
        ):
            self._fail(node, "type error: a splitting is not a map")
        if self.cod(f) != self.dom(g):
            self._fail(
                node,
                f"type error: {self.model.format_object(self.cod(f))} does not match "
                f"{self.model.format_object(self.dom(g))}",
            )
        return self.model.compose(f, g)

    def _compose(self, node: Node, dom, cod):
        terms = node.args
        n = len(terms)
        vals: list = [None] * n
        pending: dict[int, _NeedType] = {}
        for i, t in enumerate(terms):
            vals[i], need = self._try(t)
            if need:
                pending[i] = need
        progress = True
        while pending and progress:
            progress = False
            for i in sorted(pending):
                d = dom if i == 0 else (self.cod(vals[i - 1]) if vals[i - 1] is not None else None)
                c = cod if i == n - 1 else (self.dom(vals[i + 1]) if vals[i + 1] is not None else None)
                if d is None and c is None:
                    continue
                vals[i], need = self._try(terms[i], d, c)
                if need:
                    pending[i] = need
                else:
                    del pending[i]
                    progress = True
        if pending:
            raise pending[min(pending)]
        out = vals[0]
        for t, v in zip(terms[1:], vals[1:]):
            out = self.compose2(t, out, v)
        return out

    def _plain(self, node: Node, v):
        if not isinstance(v, (PartialMap, NonUnitalHom)):
            self._fail(node, f"type error: {node.name} needs a plain map here")
        return v

    def _pair_like(self, node: Node, dom, cod, parallel: bool, want: Callable | None = None):
        """Evaluate two legs that share a domain (and a codomain if ``parallel``)."""
        a, b = node.args
        va, na = self._try(a)
        vb, nb = self._try(b)
        targets = want(cod) if (want and cod is not None) else (None, None)
        for _ in range(2):
            if na:
                d = self.dom(vb) if vb is not None else dom
                c = (self.cod(vb) if vb is not None else cod) if parallel else targets[0]
                if c is None and vb is not None:
                    c = self.cod(vb)  # an unannotated leg defaults to its sibling's type
                if d is not None and c is not None:
                    va, na = self._try(a, d, c)
            if nb:
                d = self.dom(va) if va is not None else dom
                c = (self.cod(va) if va is not None else cod) if parallel else targets[1]
                if c is None and va is not None:
                    c = self.cod(va)
                if d is not None and c is not None:
                    vb, nb = self._try(b, d, c)
        if na or nb:
            raise na or nb
        return va, vb

    # -- builtins

    def _f_id(self, node, dom, cod):
        if node.args:
            return self.model.identity(self._object(node.args[0]))
        a = dom if dom is not None else cod
        if a is None:
            raise _NeedType(node, "object of id")
        if dom is not None and cod is not None and dom != cod:
            self._fail(node, "type error: id cannot change objects")
        return self.model.identity(a)

    def _f_zero(self, node, dom, cod):
        if node.args:
            return self.model.zero(self._object(node.args[0]), self._object(node.args[1]))
        if dom is None or cod is None:
            raise _NeedType(node, "type of zero")
        return self.model.zero(dom, cod)

    def _f_t(self, node, dom, cod):
        if node.args:
            return self.model.t(self._object(node.args[0]))
        if dom is None:
            raise _NeedType(node, "domain of t")
        return self.model.t(dom)

    def _f_z(self, node, dom, cod):
        if node.args:
            return self.model.z(self._object(node.args[0]))
        if cod is None:
            raise _NeedType(node, "codomain of z")
        return self.model.z(cod)

    def _f_rest(self, node, dom, cod):
        (a,) = node.args
        v, need = self._try(a, dom, None)
        if need and dom is not None:
            v = self.eval(a, dom, dom)
        elif need:
            raise need
        if isinstance(v, K.KleisliMap):
            return K.kleisli_restriction(v)
        return self.model.restrict(self._plain(node, v))

    def _f_comp(self, node, dom, cod):
        a = dom if dom is not None else cod
        v = self._plain(node, self.eval(node.args[0], a, a))
        return complement_idem(self.model, v)

    def _f_pair(self, node, dom, cod):
        f, g = self._pair_like(node, dom, cod, False, lambda c: _factors(c))
        if isinstance(f, K.KleisliMap) and isinstance(g, K.KleisliMap):
            return K.kleisli_pair(f, g)
        return self.model.pair(self._plain(node, f), self._plain(node, g))

    def _f_cpair(self, node, dom, cod):
        f, g = self._pair_like(node, dom, cod, False, lambda c: _amp_parts(self.model, c))
        if isinstance(f, K.KleisliMap) and isinstance(g, K.KleisliMap):
            return K.kleisli_classical_pair(f, g)
        return classical_pair(self.model, self._plain(node, f), self._plain(node, g))

    def _f_join(self, node, dom, cod):
        f, g = self._pair_like(node, dom, cod, True)
        try:
            if isinstance(f, K.KleisliMap):
                return K.KleisliModel().join2(f, g)
            return join(self.model, [self._plain(node, f), self._plain(node, g)])
        except Incompatible:
            a, b = node.args
            self._fail(node, f"Incompatible: `{self._text(a)}` and `{self._text(b)}` are not compatible")

    def _f_rc(self, node, dom, cod):
        g, f = self._pair_like(node, dom, cod, True)
        if isinstance(g, K.KleisliMap):
            return K.KleisliModel().relcomp(g, f)
        return relative_complement(self.model, self._plain(node, g), self._plain(node, f))

    def _f_copair(self, node, dom, cod):
        legs = node.args
        parts = self.model.summands(dom) if dom is not None else None
        if parts is not None and len(parts) != len(legs):
            parts = None
        vals, needs = [], []
        for a in legs:
            v, need = self._try(a)
            vals.append(v)
            needs.append(need)
        target = cod if cod is not None else next((self.cod(v) for v in vals if v is not None), None)
        for k, a in enumerate(legs):
            if needs[k]:
                d = parts[k] if parts is not None else None
                if d is None or target is None:
                    raise needs[k]
                vals[k] = self.eval(a, d, target)
        vals = [self._plain(node, v) for v in vals]
        obj = dom if parts is not None else self.model.coproduct([self.dom(v) for v in vals])
        return self.model.copair(vals, obj, self.cod(vals[0]))

    def _f_inj(self, node, dom, cod):
        j, o = node.args
        return self.model.inj(j, _check_index(self, node, j, self._object(o)))

    def _f_qproj(self, node, dom, cod):
        j, o = node.args
        return quasi_projection(self.model, j, _check_index(self, node, j, self._object(o)))

    def _f_proj(self, node, dom, cod):
        i, o = node.args
        obj = self._object(o)
        factors = _factors(obj)
        if factors == (None, None) or i not in (0, 1):
            self._fail(node, f"type error: proj needs a binary product and index 0 or 1")
        return self.model.proj(i, *factors)

    def _f_p0(self, node, dom, cod):
        return classical_projection(self.model, 0, self._object(node.args[0]), self._object(node.args[1]))

    def _f_p1(self, node, dom, cod):
        return classical_projection(self.model, 1, self._object(node.args[0]), self._object(node.args[1]))

    def _f_dec(self, node, dom, cod):
        return decision(self.model, self._plain(node, self.eval(node.args[0], dom, None)))

    def _f_classify(self, node, dom, cod):
        parts = self.model.summands(cod) if cod is not None else None
        v = self._plain(node, self.eval(node.args[0], dom, parts[0] if parts else None))
        return K.classify(self.model, v)

    def _finpar_only(self, node):
        if not isinstance(self.model, FinParModel):
            self._fail(node, f"{node.name} needs the finpar model")

    def _f_kleisli(self, node, dom, cod):
        self._finpar_only(node)
        v = self.eval(node.args[0], dom, cod)
        if isinstance(v, K.KleisliMap):
            return v
        return K.to_kleisli(v)

    def _f_unkleisli(self, node, dom, cod):
        self._finpar_only(node)
        v = self.eval(node.args[0], dom, cod)
        if not isinstance(v, K.KleisliMap):
            self._fail(node, "type error: unkleisli needs a Kleisli map")
        return K.from_kleisli(v)

    def _f_split(self, node, dom, cod):
        self._finpar_only(node)
        a = dom if dom is not None else cod
        return split_idempotent(self._plain(node, self.eval(node.args[0], a, a)))

    def _f_prod_from_amp(self, node, dom, cod):
        self._finpar_only(node)
        return restriction_product_from_amp(self.model, self._object(node.args[0]), self._object(node.args[1]))

    def _f_coprod_from_amp(self, node, dom, cod):
        self._finpar_only(node)
        return restriction_coproduct_from_amp(self.model, self._object(node.args[0]), self._object(node.args[1]))


def _factors(obj) -> tuple:
    f = obj.factors() if obj is not None else None
    return tuple(f) if f else (None, None)


def _amp_parts(model: RestrictionModel, obj) -> tuple:
    parts = model.summands(obj)
    return (parts[0], parts[1]) if parts and len(parts) == 3 else (None, None)


def _check_index(ev: Evaluator, node: Node, j: int, obj):
    parts = ev.model.summands(obj)
    if parts is None:
        ev._fail(node, f"type error: {ev.model.format_object(obj)} is not a coproduct")
    if not 0 <= j < len(parts):
        ev._fail(node, f"IndexOutOfRange: {obj} has {len(parts)} summands")
    return obj


def evaluator(doc: Document, source: str, model: str = "finpar", max_size: int = 3) -> Evaluator:
    if model == "finpar":
        fin = doc.model(max_size)
        return Evaluator(fin, dict(doc.maps), dict(doc.objects), source)
    if model == "calg":
        cm = doc.calg_model(max_size)
        maps: dict = {n: calg_mod.dual_map(f) for n, f in doc.maps.items()}
        maps.update(doc.homs)
        objects: dict = {n: calg_mod.dual_object(o) for n, o in doc.objects.items()}
        objects.update(doc.rings)
        return Evaluator(cm, maps, objects, source)
    raise ValueError(f"unknown model {model!r}")


def evaluate(doc: Document, source: str, model: str = "finpar") -> Value:
    """Parse and evaluate one expression against a document."""
    node = parse_expression(source)
    return evaluator(doc, source, model).run(node)


def render(value: Value, model: RestrictionModel | None = None) -> str:
    """Print a value as a graph table (or a few of them)."""
    if isinstance(value, PartialMap):
        return f"{value.dom.name} -> {value.cod.name} {format_graph(value)}"
    if isinstance(value, K.KleisliMap):
        return f"kleisli {value.dom.name} -> {value.cod.name} {format_graph(value.base)}"
    if isinstance(value, NonUnitalHom):
        return format_hom(value)[len("hom _ : ") :]
    if isinstance(value, Splitting):
        return "\n".join(f"{k} : {render(getattr(value, k))}" for k in ("e", "r", "s"))
    if isinstance(value, RecoveredProduct):
        lines = [f"object {value.obj.name} = {{ {', '.join(value.obj.format_element(x) for x in value.obj.elements)} }}"]
        lines += [f"pi0 : {render(value.proj0)}", f"pi1 : {render(value.proj1)}"]
        return "\n".join(lines)
    if isinstance(value, RecoveredCoproduct):
        lines = [f"object {value.obj.name} = {{ {', '.join(value.obj.format_element(x) for x in value.obj.elements)} }}"]
        lines += [f"in{j} : {render(i)}" for j, i in enumerate(value.injections)]
        return "\n".join(lines)
    return repr(value)


def iter_names(doc: Document) -> Iterator[str]:
    yield from doc.objects
    yield from doc.maps
    yield from doc.rings
    yield from doc.homs
