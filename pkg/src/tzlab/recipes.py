"""Tiny arithmetic recipes for weight fields.

Grammar (whitespace ignored):

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | atom
    atom  := NUMBER | 'pi' | 'x' | 'y'
           | 'sin' '(' expr ')' | 'cos' '(' expr ')'
           | '(' expr ')'

Numbers are decimal literals (optional fraction and exponent).  A parsed
recipe evaluates vectorized over coordinate arrays, so recipes stay
declarative without embedding a scripting runtime.
"""

from __future__ import annotations

import re

import numpy as np

from .surface import ScalarField, TorusGrid


class RecipeError(ValueError):
    """Malformed recipe text."""


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|([A-Za-z_]+)|([()+\-*]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise RecipeError(f"unexpected character {text[pos]!r} at position {pos}")
        number, name, op = m.groups()
        if number is not None:
            out.append(("num", float(number)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise RecipeError(f"expected {op!r}, got {val!r}")

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            node = (lambda a, b: (lambda x, y: a(x, y) + b(x, y)))(node, rhs) if op == "+" \
                else (lambda a, b: (lambda x, y: a(x, y) - b(x, y)))(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            rhs = self.unary()
            node = (lambda a, b: (lambda x, y: a(x, y) * b(x, y)))(node, rhs)
        return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            inner = self.unary()
            return lambda x, y: -inner(x, y)
        return self.atom()

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return lambda x, y, v=val: np.full_like(x, v) if hasattr(x, "shape") else v
        if kind == "name":
            if val == "pi":
                return lambda x, y: np.full_like(x, np.pi) if hasattr(x, "shape") else np.pi
            if val == "x":
                return lambda x, y: x
            if val == "y":
                return lambda x, y: y
            if val in ("sin", "cos"):
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                fn = np.sin if val == "sin" else np.cos
                return lambda x, y: fn(inner(x, y))
            raise RecipeError(f"unknown name {val!r} (allowed: x, y, pi, sin, cos)")
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise RecipeError(f"unexpected token {val!r}")


def parse_recipe(text: str):
    """Compile recipe text into a callable f(x, y) vectorized over arrays."""
    if not text or not text.strip():
        raise RecipeError("empty recipe")
    parser = _Parser(_tokenize(text))
    fn = parser.expr()
    if parser.peek() != ("end", None):
        raise RecipeError(f"trailing input starting at token {parser.peek()[1]!r}")
    return fn


def field_from_recipe(text: str, grid: TorusGrid) -> ScalarField:
    """Sample a recipe onto a grid."""
    fn = parse_recipe(text)
    values = np.broadcast_to(np.asarray(fn(grid.X, grid.Y), dtype=np.float64),
                             (grid.n, grid.n)).copy()
    return ScalarField(grid, values)
