"""Parser for the polynomial expression grammar.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' INTEGER)?
    atom  := INTEGER | NAME | '(' expr ')'

``^`` binds tightest, so ``-x^2`` is ``-(x^2)``. Multiplication must be
explicit. Division is only allowed by a nonzero constant, which is how
rational literals such as ``3/4`` are written.
"""

from __future__ import annotations

import re
from typing import Sequence

from .poly import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(PolySyntaxError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return PolySyntaxError(message, tok[2], self.text)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self) -> MultiPoly:
        acc = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> MultiPoly:
        acc = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    raise self.error("division by a non-constant expression", op_tok)
                divisor = rhs.coefficient((0,) * self.nvars)
                if not divisor:
                    raise self.error("division by zero", op_tok)
                acc = acc * (1 / divisor)
        return acc

    def unary(self) -> MultiPoly:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
            if self.peek()[:2] == ("op", "^"):
                raise self.error("chained exponents need parentheses")
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return MultiPoly.constant(self.nvars, int(value))
        if kind == "name":
            if value not in self.names:
                raise UnknownVariableError(f"unknown variable {value!r}", tok[2], self.text)
            return MultiPoly.variable(self.nvars, self.names[value])
        if tok[:2] == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return inner
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected token {value!r}", tok)


def poly_parse(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse ``text`` into a polynomial over the variables ``names``."""
    names = list(names)
    if not names:
        raise ValueError("at least one variable name is required")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    return _Parser(text, names).parse()
