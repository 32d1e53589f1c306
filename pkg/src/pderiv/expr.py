"""Text <-> Poly conversion.

Grammar, loosest to tightest binding::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

``^`` is non-associative (``x^2^3`` is rejected), its right operand must be
a nonnegative integer literal, and multiplication must be written out.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .poly import Poly, VarContext


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c in " \t\r\n":
            i += 1
        elif c.isascii() and c.isdigit():
            j = i
            while j < n and source[j].isascii() and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], i))
            i = j
        elif "a" <= c <= "z":
            j = i
            while j < n and (("a" <= source[j] <= "z") or source[j].isascii() and source[j].isdigit() or source[j] == "_"):
                j += 1
            tokens.append(Token("name", source[i:j], i))
            i = j
        elif c in "+-*^()":
            tokens.append(Token("op", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source: str, ctx: VarContext):
        self.tokens = tokenize(source)
        self.i = 0
        self.ctx = ctx

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def error(self, message: str):
        tok = self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"{message}, found {what}", tok.pos)

    def parse(self) -> Poly:
        result = self.expr()
        if self.tok.kind != "end":
            self.error("expected operator")
        return result

    def expr(self) -> Poly:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Poly:
        result = self.unary()
        while self.accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", tok.pos)
            self.i += 1
            base = base ** int(tok.text)
            if self.tok.kind == "op" and self.tok.text == "^":
                raise ParseError("'^' is not associative; use parentheses", self.tok.pos)
        return base

    def atom(self) -> Poly:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Poly.constant(self.ctx, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.ctx.names:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            self.i += 1
            return Poly.variable(self.ctx, tok.text)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner
        self.error("expected a number, variable or '('")


def parse_poly(text: str, ctx: VarContext | str) -> Poly:
    if not isinstance(ctx, VarContext):
        ctx = VarContext(ctx)
    return _Parser(text, ctx).parse()


def _format_monomial(names, mono) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Canonical text: graded-lex descending terms, explicit '*', '0' for zero."""
    if f.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(f.sorted_terms()):
        body = _format_monomial(f.ctx.names, mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if k == 0:
            out.append(text if c > 0 else "-" + text)
        else:
            out.append((" + " if c > 0 else " - ") + text)
    return "".join(out)
