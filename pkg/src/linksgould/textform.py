"""
Text grammar for exact values, round-tripping with the renderers.

Terms are rendered in descending (t, q) exponent order, juxtaposition is
multiplication, ``^`` takes an optionally negative integer, and fractions
are written ``(num)/(den)``; e.g. ``t^2 - 1 + t^-2``, ``3tq^-1``,
``(-t^2q^2 - t^2)/(t^4 + t^2q^2 + t^2 + q^2)``.  The parser additionally
accepts explicit ``*``, arbitrary parentheses and powers of grouped
expressions, so hand-written fixture entries stay readable.

Alexander-Conway values use the variables ``s`` and ``t`` with t = s^2.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .laurent import HalfLaurent, Laurent2
from .rational import RationalFn

__all__ = ["parse_rational", "parse_laurent2", "parse_half"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z])|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}")
            break
        if m.group(1):
            out.append(("int", m.group(1)))
        elif m.group(2):
            out.append(("var", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over +, -, *, /, ^, juxtaposition and parens."""

    def __init__(self, tokens, variables, const, allow_div: bool):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables
        self.const = const
        self.allow_div = allow_div

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input near token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                value = value + self.term()
            elif tok == ("op", "-"):
                self.take()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.unary()
            elif tok == ("op", "/"):
                self.take()
                if not self.allow_div:
                    raise ParseError("division is not part of this grammar")
                value = value / self.unary()
            elif tok is not None and (tok[0] in ("int", "var") or tok == ("op", "(")):
                value = value * self.unary()
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            tok = self.take()
            if tok is None or tok[0] != "int":
                raise ParseError("exponent must be an integer")
            e = int(tok[1])
            return base ** (-e if neg else e)
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of input")
        kind, text = tok
        if kind == "int":
            return self.const(int(text))
        if kind == "var":
            if text not in self.variables:
                raise ParseError(f"unknown variable {text!r}")
            return self.variables[text]()
        if tok == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
            return value
        raise ParseError(f"unexpected token {text!r}")


def parse_rational(text: str) -> RationalFn:
    """
    Parse an expression in t and q into a RationalFn.

    >>> parse_rational("(t^2 - t^-2)/(t - t^-1)") == RationalFn(Laurent2.t() + Laurent2.t(-1))
    True
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(
        tokens,
        variables={
            "t": lambda: RationalFn(Laurent2.t()),
            "q": lambda: RationalFn(Laurent2.q()),
        },
        const=lambda n: RationalFn(Laurent2.const(n)),
        allow_div=True,
    )
    try:
        return parser.parse()
    except ZeroDivisionError:
        raise ParseError("division by zero in expression") from None


def parse_laurent2(text: str) -> Laurent2:
    """Parse an expression that must reduce to a Laurent polynomial."""
    value = parse_rational(text)
    if not value.den.is_one():
        raise ParseError(f"{text!r} is not a Laurent polynomial")
    return value.num


def parse_half(text: str) -> HalfLaurent:
    """
    Parse an Alexander-Conway value in s (and/or t, read as s^2).

    >>> parse_half("t - 1 + t^-1") == parse_half("s^2 - 1 + s^-2")
    True
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(
        tokens,
        variables={
            "s": HalfLaurent.s,
            "t": lambda: HalfLaurent.s(2),
        },
        const=HalfLaurent.const,
        allow_div=False,
    )
    return parser.parse()
