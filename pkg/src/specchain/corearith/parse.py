"""Recursive-descent parser for the ASCII polynomial grammar.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

Names resolve to ring variables first and then to field-tower symbols.
Division is accepted only by nonzero constants, which keeps printed
rational and rational-function coefficients parseable.
"""

from __future__ import annotations

import re

from ..errors import FieldError, ParseError
from .poly import PolyRing, Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.symbols = ring.field.symbols()
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def offset(self) -> int:
        t = self.peek()
        return t[2] if t else self.end

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.peek()
        if t is None or t[1] != op:
            raise ParseError(f"expected {op!r}", self.offset(), self.text)
        self.i += 1

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ParseError("empty expression", 0, self.text)
        f = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()[1]!r}", self.offset(), self.text)
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while (t := self.peek()) is not None and t[1] in "+-" and t[0] == "op":
            self.take()
            g = self.term()
            f = f + g if t[1] == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while (t := self.peek()) is not None and t[0] == "op" and t[1] in "*/":
            self.take()
            at = self.offset()
            g = self.unary()
            if t[1] == "*":
                f = f * g
            else:
                if not g.is_constant():
                    raise ParseError("division is only allowed by constants", at, self.text)
                if g.is_zero():
                    raise ParseError("division by zero", at, self.text)
                try:
                    f = f / g
                except FieldError as e:
                    raise ParseError(str(e), at, self.text) from None
        return f

    def unary(self) -> Polynomial:
        t = self.peek()
        if t is not None and t[0] == "op" and t[1] in "+-":
            self.take()
            f = self.unary()
            return -f if t[1] == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        f = self.atom()
        t = self.peek()
        if t is not None and t[1] == "^":
            self.take()
            e = self.peek()
            if e is None or e[0] != "int":
                raise ParseError("expected nonnegative integer exponent", self.offset(), self.text)
            self.take()
            f = f ** int(e[1])
        return f

    def atom(self) -> Polynomial:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.end, self.text)
        kind, val, pos = t
        if kind == "int":
            self.take()
            try:
                return self.ring.const(int(val))
            except FieldError as e:
                raise ParseError(str(e), pos, self.text) from None
        if kind == "name":
            self.take()
            if val in self.ring.index:
                return self.ring.var(val)
            if val in self.symbols:
                return self.ring.const(self.symbols[val])
            raise ParseError(f"unknown identifier {val!r}", pos, self.text)
        if val == "(":
            self.take()
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    return _Parser(text, ring).parse()
