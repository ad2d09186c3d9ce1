"""Concrete syntax for series: a small recursive-descent expression parser
and the canonical formatter it round-trips with.

Grammar (whitespace ignored, multiplication always explicit):

    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | base ('^' nat)?
    base     := 'x' nat | rational | '(' expr ')'
    rational := nat ('/' nat)?

Variables are x1..xh; indices outside that range are parse errors.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .series import Series

# AST nodes are plain tuples:
#   ("num", Fraction) ("var", index) ("neg", node)
#   ("add", l, r) ("sub", l, r) ("mul", l, r) ("pow", node, nat)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, object, int]] = []
        self._scan()
        self.i = 0

    def _scan(self):
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*^/()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("nat", int(text[i:j]), i))
                i = j
                continue
            if ch == "x":
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                if j == i + 1:
                    raise ParseError("variable needs an index, like x1", i)
                self.tokens.append(("var", int(text[i + 1 : j]), i))
                i = j
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", None, n))

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok


class _Parser:
    def __init__(self, text: str, h: int):
        self.lex = _Lexer(text)
        self.h = h

    def parse(self):
        node = self.expr()
        tok = self.lex.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[0]!r}", tok[2])
        return node

    def expr(self):
        kind = self.lex.peek()[0]
        if kind in "+-":
            self.lex.take()
            node = self.term()
            if kind == "-":
                node = ("neg", node)
        else:
            node = self.term()
        while self.lex.peek()[0] in "+-":
            op = self.lex.take()[0]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.lex.peek()[0] == "*":
            self.lex.take()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        if self.lex.peek()[0] == "-":
            self.lex.take()
            return ("neg", self.factor())
        node = self.base()
        if self.lex.peek()[0] == "^":
            self.lex.take()
            tok = self.lex.take("nat")
            node = ("pow", node, tok[1])
        return node

    def base(self):
        tok = self.lex.peek()
        if tok[0] == "var":
            self.lex.take()
            if not 1 <= tok[1] <= self.h:
                raise ParseError(f"variable x{tok[1]} outside x1..x{self.h}", tok[2])
            return ("var", tok[1])
        if tok[0] == "nat":
            self.lex.take()
            num = tok[1]
            if self.lex.peek()[0] == "/":
                self.lex.take()
                den_tok = self.lex.take("nat")
                if den_tok[1] == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return ("num", Fraction(num, den_tok[1]))
            return ("num", Fraction(num))
        if tok[0] == "(":
            self.lex.take()
            node = self.expr()
            closing = self.lex.peek()
            if closing[0] != ")":
                raise ParseError("expected ')'", closing[2])
            self.lex.take()
            return node
        raise ParseError(f"expected a value, found {tok[0]!r}", tok[2])


def _eval(node, h: int, N: int) -> Series:
    kind = node[0]
    if kind == "num":
        return Series.constant(h, N, node[1])
    if kind == "var":
        return Series.variable(h, N, node[1])
    if kind == "neg":
        return -_eval(node[1], h, N)
    if kind == "add":
        return _eval(node[1], h, N) + _eval(node[2], h, N)
    if kind == "sub":
        return _eval(node[1], h, N) - _eval(node[2], h, N)
    if kind == "mul":
        return _eval(node[1], h, N) * _eval(node[2], h, N)
    if kind == "pow":
        return _eval(node[1], h, N) ** node[2]
    raise AssertionError(f"unknown node {kind}")


def parse_expr(text: str, h: int, N: int) -> Series:
    """Parse a polynomial expression into a series at precision N."""
    return _eval(_Parser(text, h).parse(), h, N)


def _monomial_str(e) -> str:
    parts = []
    for i, k in enumerate(e, start=1):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def format_expr(f: Series) -> str:
    """Canonical rendering: degree ascending, then x1-major; round-trips."""
    if f.is_zero():
        return "0"
    terms = sorted(f.coeffs.items(), key=lambda ec: (sum(ec[0]), tuple(-k for k in ec[0])))
    out = []
    for e, c in terms:
        mono = _monomial_str(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)
