"""Text syntax for rational functions over F_q.

Grammar (whitespace insignificant)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | "x" | "t" | "(" expr ")"

``t`` is the generator of F_q over F_p (only for m > 1); integers are
reduced mod p.  Printing with ``str`` produces text this parser reads back
to the same canonical function.
"""

from __future__ import annotations

import re

from .gf import FieldCtx
from .ratfunc import Poly, RatFunc

__all__ = ["ParseError", "parse_function", "format_function"]


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([xt])|([-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                             pos + len(text[pos:]) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), m.lastindex, start))
        pos = m.end()
    out.append(("", 0, len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ctx: FieldCtx):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[0] != value:
            raise ParseError(f"expected {value!r}, got {tok[0] or 'end of input'!r}",
                             tok[2])
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                val = val / rhs
        return val

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[1] != 1:
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            e = int(tok[0])
            if base.is_zero() and e == 0:
                raise ParseError("0^0 is undefined", tok[2])
            return RatFunc(base.num ** e, base.den ** e)
        return base

    def atom(self):
        tok, kind, pos = self.take()
        ctx = self.ctx
        if kind == 1:
            return RatFunc.const(ctx, ctx.from_int(int(tok)))
        if kind == 2:
            if tok == "x":
                return RatFunc.x(ctx)
            if ctx.m == 1:
                raise ParseError("'t' is not available in a prime field", pos)
            return RatFunc.const(ctx, ctx.p)  # code p is the element t
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected {tok or 'end of input'!r}", pos)


def parse_function(text: str, ctx: FieldCtx) -> RatFunc:
    """Parse ``text`` into a canonical RatFunc over ``ctx``."""
    parser = _Parser(text, ctx)
    if parser.peek()[1] == 0:
        raise ParseError("empty expression", 0)
    val = parser.expr()
    tok = parser.peek()
    if tok[1] != 0:
        raise ParseError(f"unexpected {tok[0]!r}", tok[2])
    return val


def format_function(f: RatFunc | Poly) -> str:
    return str(f)
