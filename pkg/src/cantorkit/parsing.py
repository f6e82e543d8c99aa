"""Text front-ends: ordinal and cardinal expressions, set/map/relation forms.

Ordinal grammar (all operators left-associative)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' atom)*
    atom   := INT | 'w' | 'ω' | '(' expr ')'

Cardinal grammar::

    top    := 'cmp' '(' sum ',' sum ')' | sum
    sum    := prod ('+' prod)*
    prod   := unary ('*' unary)*
    unary  := '2' '^' unary | atom
    atom   := INT | 'aleph' '(' INT ')' | 'beth' '(' INT ')' | '(' sum ')'

Error offsets are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Union

from .cardinal import Aleph, Beth, Cardinal, CardCmp, Finite, Mode, card_add, card_cmp, card_mul, card_pow2
from .errors import ParseError
from .ordinal import OMEGA, Ordinal, ord_add, ord_mul, ord_pow
from .setcore import FiniteMap, FiniteRelation, FiniteSet


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class W:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class AlephAtom:
    index: int


@dataclass(frozen=True)
class BethAtom:
    index: int


@dataclass(frozen=True)
class Pow2:
    arg: "Expr"


@dataclass(frozen=True)
class Cmp:
    left: "Expr"
    right: "Expr"


Expr = Union[Num, W, BinOp, AlephAtom, BethAtom, Pow2, Cmp]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(ω)|(->|[-+*^(),{}\[\]]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip() == "":
                break
            skipped = len(rest) - len(rest.lstrip())
            bad = pos + skipped
            raise ParseError(f"unexpected character {text[bad]!r}", _byte_offset(text, bad))
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2):
            tokens.append(Token("name", m.group(2), start))
        elif m.group(3):
            tokens.append(Token("name", "w", start))
        else:
            tokens.append(Token("op", m.group(4), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text.rstrip()) if tokens else len(text)))
    return tokens


def _byte_offset(text: str, idx: int) -> int:
    return len(text[:idx].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected, message=None):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        offset = _byte_offset(self.text, t.offset) if t.kind != "end" else len(self.text.encode("utf-8"))
        raise ParseError(message or f"unexpected {found}", offset, expected)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail((text,))

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.fail(("<integer>",))
        v = int(self.tok.text)
        self.i += 1
        return v

    def finish(self):
        if self.tok.kind != "end":
            self.fail(self.follow)


class _OrdinalParser(_Parser):
    follow = ("+", "*", "^", "<end>")
    atom_start = ("<integer>", "w", "(")

    def expr(self):
        node = self.term()
        while self.accept("+"):
            node = BinOp("+", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.accept("*"):
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        while self.accept("^"):
            node = BinOp("^", node, self.atom())
        return node

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text))
        if t.kind == "name" and t.text == "w":
            self.i += 1
            return W()
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail(self.atom_start)


def parse_ordinal_expr(text: str) -> Expr:
    p = _OrdinalParser(text)
    node = p.expr()
    p.finish()
    return node


def eval_ordinal(node: Expr) -> Ordinal:
    if isinstance(node, Num):
        return Ordinal.of(node.value)
    if isinstance(node, W):
        return OMEGA
    if isinstance(node, BinOp):
        a, b = eval_ordinal(node.left), eval_ordinal(node.right)
        return {"+": ord_add, "*": ord_mul, "^": ord_pow}[node.op](a, b)
    raise TypeError(f"not an ordinal expression: {node!r}")


def parse_ordinal(text: str) -> Ordinal:
    return eval_ordinal(parse_ordinal_expr(text))


class _CardinalParser(_Parser):
    follow = ("+", "*", "<end>")
    atom_start = ("<integer>", "aleph", "beth", "2^", "(")

    def top(self):
        if self.tok.kind == "name" and self.tok.text == "cmp":
            self.i += 1
            self.expect("(")
            a = self.sum()
            self.expect(",")
            b = self.sum()
            self.expect(")")
            return Cmp(a, b)
        return self.sum()

    def sum(self):
        node = self.prod()
        while self.accept("+"):
            node = BinOp("+", node, self.prod())
        return node

    def prod(self):
        node = self.unary()
        while self.accept("*"):
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        t = self.tok
        if t.kind == "int" and self.tokens[self.i + 1].kind == "op" and self.tokens[self.i + 1].text == "^":
            if t.text != "2":
                self.fail(("2^",), "only base 2 exponentiation is supported")
            self.i += 2
            return Pow2(self.unary())
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text))
        if t.kind == "name" and t.text in ("aleph", "beth"):
            self.i += 1
            self.expect("(")
            k = self.expect_int()
            self.expect(")")
            return AlephAtom(k) if t.text == "aleph" else BethAtom(k)
        if self.accept("("):
            node = self.sum()
            self.expect(")")
            return node
        self.fail(self.atom_start)


def parse_cardinal_expr(text: str) -> Expr:
    p = _CardinalParser(text)
    node = p.top()
    p.finish()
    return node


def eval_cardinal(node: Expr, mode=Mode.BASE) -> Union[Cardinal, CardCmp]:
    if isinstance(node, Cmp):
        return card_cmp(eval_cardinal(node.left, mode), eval_cardinal(node.right, mode), mode)
    if isinstance(node, Num):
        return Finite(node.value)
    if isinstance(node, AlephAtom):
        return Aleph(node.index)
    if isinstance(node, BethAtom):
        return Beth(node.index)
    if isinstance(node, Pow2):
        return card_pow2(eval_cardinal(node.arg, mode), mode)
    if isinstance(node, BinOp):
        a, b = eval_cardinal(node.left, mode), eval_cardinal(node.right, mode)
        return (card_add if node.op == "+" else card_mul)(a, b, mode)
    raise TypeError(f"not a cardinal expression: {node!r}")


def parse_cardinal(text: str) -> Cardinal:
    node = parse_cardinal_expr(text)
    if isinstance(node, Cmp):
        raise ParseError("expected a cardinal, not a comparison", 0)
    return eval_cardinal(node)


# set / map / relation text

class _SetParser(_Parser):
    follow = ("<end>",)

    def atom(self):
        t = self.tok
        if self.accept("-"):
            return -self.expect_int()
        if t.kind == "int":
            self.i += 1
            return int(t.text)
        if t.kind == "name":
            self.i += 1
            return t.text
        self.fail(("<integer>", "<symbol>"))

    def set_(self):
        self.expect("{")
        items = []
        if not self.accept("}"):
            items.append(self.atom())
            while self.accept(","):
                items.append(self.atom())
            self.expect("}")
        return items

    def map_(self):
        self.expect("{")
        pairs = []
        if not self.accept("}"):
            while True:
                a = self.atom()
                self.expect("->")
                pairs.append((a, self.atom()))
                if self.accept("}"):
                    break
                self.expect(",")
        return pairs

    def relation(self):
        self.expect("[")
        pairs = []
        if not self.accept("]"):
            while True:
                self.expect("(")
                a = self.atom()
                self.expect(",")
                b = self.atom()
                self.expect(")")
                pairs.append((a, b))
                if self.accept("]"):
                    break
                self.expect(",")
        return pairs


def _run(text, method):
    p = _SetParser(text)
    out = method(p)
    p.finish()
    return out


def parse_set(text: str) -> FiniteSet:
    return FiniteSet(_run(text, _SetParser.set_))


def parse_map(text: str, codomain: FiniteSet = None) -> FiniteMap:
    """Parse ``{a->b, ...}``; the codomain defaults to the set of images."""
    pairs = _run(text, _SetParser.map_)
    dom = FiniteSet(a for a, _ in pairs)
    cod = codomain if codomain is not None else FiniteSet(b for _, b in pairs)
    return FiniteMap(dom, cod, pairs)


def parse_relation(text: str, carrier: FiniteSet = None) -> FiniteRelation:
    pairs = _run(text, _SetParser.relation)
    if carrier is None:
        carrier = FiniteSet(x for p in pairs for x in p)
    return FiniteRelation(carrier, pairs)


def parse_matrix(text: str, name: str = "matrix") -> list:
    """JSON array of arrays of integers (an ``@path`` reads the file)."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: {exc.msg}", len(text[:exc.pos].encode("utf-8"))) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError(f"{name}: expected an array of arrays", 0)
    for r in data:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ParseError(f"{name}: entries must be integers", 0)
    if len({len(r) for r in data}) > 1:
        raise ParseError(f"{name}: rows have different lengths", 0)
    return data


def parse_vector(text: str, name: str = "vector") -> list:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: {exc.msg}", len(text[:exc.pos].encode("utf-8"))) from None
    if not isinstance(data, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in data):
        raise ParseError(f"{name}: expected an array of integers", 0)
    return data
