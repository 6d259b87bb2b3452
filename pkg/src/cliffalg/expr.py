"""Recursive-descent parser for the CLI expression language.

Grammar:
    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := rational | 'i' | 'e' nat | 'rev' '(' expr ')' | '(' expr ')'
            | '-' atom
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .core import Context, Multivector, mv_product, reverse
from .errors import DomainMismatchError, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|([+\-*^/()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "nat" | "name" | "op"
    text: str
    line: int
    column: int


def _lex(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            line = text.count("\n", 0, pos) + 1
            column = pos - (text.rfind("\n", 0, pos) + 1)
            raise ParseError(f"unexpected character {stripped[0]!r}", line, column)
        start = m.start(m.lastindex)
        line = text.count("\n", 0, start) + 1
        column = start - (text.rfind("\n", 0, start) + 1)
        kind = ("nat", "name", "op")[m.lastindex - 1]
        tokens.append(Token(kind, m.group(m.lastindex), line, column))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], context: Context):
        self.tokens = tokens
        self.pos = 0
        self.context = context

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("op", "", 1, 0)
            raise ParseError("unexpected end of input", last.line,
                             last.column + len(last.text))
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}",
                             tok.line, tok.column)
        return tok

    def parse(self) -> Multivector:
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
        return value

    def expr(self) -> Multivector:
        value = self.term()
        while (tok := self.peek()) and tok.text in "+-":
            self.next()
            rhs = self.term()
            value = value + rhs if tok.text == "+" else value - rhs
        return value

    def term(self) -> Multivector:
        value = self.factor()
        while (tok := self.peek()) and tok.text == "*":
            self.next()
            value = mv_product(value, self.factor())
        return value

    def factor(self) -> Multivector:
        value = self.atom()
        if (tok := self.peek()) and tok.text == "^":
            self.next()
            exp_tok = self.next()
            if exp_tok.kind != "nat":
                raise ParseError("power must be a nonnegative integer",
                                 exp_tok.line, exp_tok.column)
            power = int(exp_tok.text)
            out = Multivector.unit(self.context)
            for _ in range(power):
                out = mv_product(out, value)
            return out
        return value

    def atom(self) -> Multivector:
        tok = self.next()
        if tok.text == "-":
            return -self.atom()
        if tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "nat":
            num = int(tok.text)
            if (nxt := self.peek()) and nxt.text == "/":
                self.next()
                den_tok = self.next()
                if den_tok.kind != "nat" or int(den_tok.text) == 0:
                    raise ParseError("denominator must be a positive integer",
                                     den_tok.line, den_tok.column)
                return Multivector.scalar(self.context,
                                          Fraction(num, int(den_tok.text)))
            return Multivector.scalar(self.context, num)
        if tok.kind == "name":
            return self.named(tok)
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)

    def named(self, tok: Token) -> Multivector:
        if tok.text == "i":
            if not self.context.domain.has_i:
                raise DomainMismatchError(
                    f"'i' is not available in the {self.context.domain.value} domain")
            return Multivector.scalar(
                self.context, scalars.imaginary_unit(self.context.domain))
        if tok.text == "rev":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return reverse(inner)
        m = re.fullmatch(r"e(\d+)", tok.text)
        if m:
            k = int(m.group(1))
            if k < 1:
                raise ParseError("generator indices start at 1",
                                 tok.line, tok.column)
            return Multivector.generator(self.context, k)
        raise ParseError(f"unknown atom {tok.text!r}", tok.line, tok.column)


def parse(text: str, context: Context) -> Multivector:
    """Parse and evaluate an expression in the given context."""
    tokens = _lex(text)
    if not tokens:
        raise ParseError("empty expression")
    return _Parser(tokens, context).parse()
