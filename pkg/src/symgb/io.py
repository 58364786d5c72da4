"""Text syntax for polynomials and the one-polynomial-per-line corpus format.

Grammar (whitespace ignored)::

    poly     := ['-'] term (('+' | '-') term)*
    term     := coeff ['*' monomial] | monomial
    coeff    := integer ['/' positive-integer]
    monomial := var ('*' var)*
    var      := 'x' index ['^' exponent]
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .fields import QQ, Field
from .monomial import Monomial
from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.pos = 0
        self.field = field

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def poly(self) -> Polynomial:
        if not self.text.strip():
            self.error("empty input", 0)
        acc: dict[Monomial, object] = {}
        sign = -1 if self.eat("-") else 1
        self.term(sign, acc)
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                self.term(1, acc)
            elif ch == "-":
                self.pos += 1
                self.term(-1, acc)
            elif ch == "":
                break
            else:
                self.error(f"unexpected character {ch!r}")
        return Polynomial(acc, self.field)

    def term(self, sign: int, acc: dict):
        ch = self.peek()
        if ch.isdigit():
            start = self.pos
            num = self.integer()
            coeff = Fraction(num)
            if self.eat("/"):
                den_pos = self.pos
                den = self.integer()
                if den == 0:
                    self.error("division by zero in coefficient", den_pos)
                coeff = Fraction(num, den)
            try:
                c = self.field.convert(sign * coeff)
            except ZeroDivisionError:
                self.error("coefficient denominator vanishes in field", start)
            mono = Monomial()
            if self.eat("*"):
                mono = self.monomial()
        elif ch == "x":
            c = self.field.convert(sign)
            mono = self.monomial()
        else:
            self.error("expected coefficient or variable" if ch else "unexpected end of input")
        if mono in acc:
            acc[mono] = self.field.normalize(acc[mono] + c)
        else:
            acc[mono] = c

    def monomial(self) -> Monomial:
        exps: dict[int, int] = {}
        while True:
            if self.peek() != "x":
                self.error("expected variable 'x<index>'")
            self.pos += 1
            if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                self.error("expected variable index after 'x'")
            at = self.pos
            index = self.integer()
            if index == 0:
                self.error("variable index must be positive", at)
            exp = 1
            if self.eat("^"):
                at = self.pos
                exp = self.integer()
                if exp == 0:
                    self.error("exponent must be positive", at)
            exps[index] = exps.get(index, 0) + exp
            save = self.pos
            if self.eat("*"):
                if self.peek() == "x":
                    continue
                self.pos = save
                self.error("expected variable after '*'")
            return Monomial(exps)


def parse_polynomial(text: str, field: Field = QQ) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`."""
    return _Parser(text, field).poly()


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in decreasing lex order, unit coefficients and exponents suppressed."""
    if f.is_zero():
        return "0"
    field = f.field
    pieces = []
    for k, (c, m) in enumerate(f.terms):
        negative = False
        if hasattr(c, "denominator") and c < 0:
            negative, c = True, -c
        cs = field.format(c)
        if m.is_one():
            body = cs
        elif cs == "1":
            body = str(m)
        else:
            body = f"{cs}*{m}"
        if k == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def read_corpus(lines: Iterable[str], field: Field = QQ) -> list[Polynomial]:
    """Parse one polynomial per line; ``#`` lines and blank lines are skipped."""
    out = []
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append(parse_polynomial(s, field))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


def read_corpus_file(path: str | Path, field: Field = QQ) -> list[Polynomial]:
    with open(path, encoding="utf-8") as fh:
        return read_corpus(fh, field)


def format_corpus(polys: Iterable[Polynomial], comments: Iterable[str] = ()) -> str:
    body = [format_polynomial(p) for p in polys]
    body += [f"# {c}" if c else "#" for c in comments]
    return "\n".join(body) + "\n"
