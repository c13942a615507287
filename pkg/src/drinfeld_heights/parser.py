"""Recursive-descent parser for rational functions and twisted polynomials.

Grammar (whitespace is ignored, juxtaposition means multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' '-'? INT)?
    atom   := INT | 'T' | 'u' | 't' | '(' expr ')'

``u`` is the generator of F_q over F_p and ``t`` stands for tau.  Integers
are read modulo p.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DivisionByZero, ExpressionSyntaxError
from .funcfield import Poly, RatFunc
from .gf import FqContext
from .ore import TwistedPoly, mul

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    toks = []
    pos = 0
    line, line_start = 1, 0
    while True:
        m = _TOKEN.match(src, pos)
        if not m:
            break
        # track newlines swallowed by the leading whitespace
        ws = src[pos : m.start(m.lastindex)]
        for k, ch in enumerate(ws):
            if ch == "\n":
                line, line_start = line + 1, pos + k + 1
        start = m.start(m.lastindex)
        col = start - line_start + 1
        if m.group(1):
            toks.append(Token("int", m.group(1), line, col))
        elif m.group(2):
            toks.append(Token("name", m.group(2), line, col))
        else:
            toks.append(Token("op", m.group(3), line, col))
        pos = m.end()
    rest = src[pos:]
    for ch in rest:
        if ch == "\n":
            line, line_start = line + 1, pos + 1
        pos += 1
    toks.append(Token("end", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, src: str, ctx: FqContext, twisted: bool):
        self.toks = tokenize(src)
        self.i = 0
        self.ctx = ctx
        self.twisted = twisted

    # helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise ExpressionSyntaxError(msg, tok.line, tok.col)

    def take(self, text=None):
        t = self.tok
        if text is not None and t.text != text:
            self.error("expected %r, found %s" % (text, _describe(t)))
        self.i += 1
        return t

    def lift(self, x):
        if self.twisted and not isinstance(x, TwistedPoly):
            return TwistedPoly.scalar(self.ctx, x)
        return x

    # grammar
    def parse(self):
        if self.tok.kind == "end":
            self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            self.error("unexpected %s" % _describe(self.tok))
        return self.lift(value)

    def expr(self):
        acc = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.take().text
            rhs = self.term()
            acc, rhs = self._align(acc, rhs)
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _align(self, a, b):
        if isinstance(a, TwistedPoly) or isinstance(b, TwistedPoly):
            return self.lift(a), self.lift(b)
        return a, b

    def _starts_atom(self, t: Token) -> bool:
        return t.kind in ("int", "name") or t.text == "("

    def term(self):
        acc = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text in ("*", "/"):
                self.take()
                rhs = self.unary()
            elif self._starts_atom(t):
                rhs = self.unary()
            else:
                return acc
            if t.text == "/":
                acc = self._divide(acc, rhs, t)
            else:
                acc = self._multiply(acc, rhs)

    def _multiply(self, a, b):
        if isinstance(a, TwistedPoly) or isinstance(b, TwistedPoly):
            return mul(self.lift(a), self.lift(b))
        return a * b

    def _divide(self, a, b, tok):
        if isinstance(b, TwistedPoly):
            if b.degree > 0:
                self.error("cannot divide by an expression involving t", tok)
            b = b.constant
        if not b:
            raise DivisionByZero(
                "division by zero at line %d, column %d" % (tok.line, tok.col)
            )
        if isinstance(a, TwistedPoly):
            return mul(a, TwistedPoly.scalar(self.ctx, b.inverse()))
        return a / b

    def unary(self):
        t = self.tok
        if t.kind == "op" and t.text in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t.text == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            neg = False
            if self.tok.text == "-":
                self.take()
                neg = True
            t = self.tok
            if t.kind != "int":
                self.error("exponent must be an integer, found %s" % _describe(t))
            self.take()
            e = int(t.text)
            if neg:
                if isinstance(base, TwistedPoly):
                    self.error("negative power of an expression involving t", t)
                if not base:
                    raise DivisionByZero("zero raised to a negative power")
                return base ** (-e)
            if isinstance(base, TwistedPoly):
                acc = TwistedPoly.one(self.ctx)
                for _ in range(e):
                    acc = mul(acc, base)
                return acc
            return base**e
        return base

    def atom(self):
        t = self.tok
        ctx = self.ctx
        if t.kind == "int":
            self.take()
            return RatFunc.const(ctx, int(t.text))
        if t.kind == "name":
            self.take()
            if t.text == "T":
                return RatFunc.T(ctx)
            if t.text == "u":
                return RatFunc.const(ctx, ctx.gen)
            if t.text == "t":
                if not self.twisted:
                    self.error("tau ('t') is not allowed in a rational function", t)
                return TwistedPoly.tau(ctx)
            self.error("unknown symbol %r" % t.text, t)
        if t.text == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        self.error("unexpected %s" % _describe(t))


def _describe(t: Token) -> str:
    return "end of input" if t.kind == "end" else repr(t.text)


def parse_ratfunc(src: str, ctx: FqContext) -> RatFunc:
    return _Parser(src, ctx, twisted=False).parse()


def parse_poly(src: str, ctx: FqContext) -> Poly:
    x = parse_ratfunc(src, ctx)
    if not x.is_poly():
        raise ExpressionSyntaxError("expected a polynomial in T, got %s" % x, 1, 1)
    return x.num


def parse_twisted(src: str, ctx: FqContext) -> TwistedPoly:
    return _Parser(src, ctx, twisted=True).parse()
