"""Tiny recursive-descent evaluator for the literal syntaxes.

One grammar serves field elements (``w^2+1``, ``(x+1)/x``), skew
polynomials (``t^2 + (w+1)*t + w``) and series (``2 + 3/2*x``); the
caller supplies an algebra that says how to build constants and
symbols and how to combine them.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/')? unary)*        juxtaposition multiplies
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := INT | NAME | '(' expr ')'
"""
import re
from dataclasses import dataclass
from typing import Any, Callable

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


@dataclass
class Algebra:
    const: Callable[[int], Any]
    symbol: Callable[[str], Any]
    add: Callable[[Any, Any], Any]
    sub: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    div: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    power: Callable[[Any, int], Any]


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, alg):
        self.text = text
        self.alg = alg
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        shown = tok[1] or "end of input"
        raise ParseError(f"{msg}: {shown!r}", self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = self.alg.add(val, rhs) if op == "+" else self.alg.sub(val, rhs)
        return val

    def _starts_atom(self, tok):
        return tok[0] in ("int", "name") or tok[:2] == ("op", "(")

    def term(self):
        val = self.unary()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                val = self.alg.mul(val, self.unary())
            elif tok[:2] == ("op", "/"):
                self.take()
                rhs = self.unary()
                try:
                    val = self.alg.div(val, rhs)
                except ZeroDivisionError:
                    self.fail("division by zero", tok)
            elif self._starts_atom(tok):
                val = self.alg.mul(val, self.unary())
            else:
                return val

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return self.alg.neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer", tok)
            return self.alg.power(base, int(tok[1]))
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return self.alg.const(int(tok[1]))
        if tok[0] == "name":
            try:
                return self.alg.symbol(tok[1])
            except KeyError:
                self.fail("unknown symbol", tok)
        if tok[:2] == ("op", "("):
            val = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return val
        self.fail("unexpected token", tok)


def evaluate(text, alg):
    return _Parser(text, alg).parse()


def generic_power(mul, one, base, n):
    result = one
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result
