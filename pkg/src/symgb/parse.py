"""Text form of polynomials.

Grammar: variables ``x[i]`` / ``x[i,j,...]`` and auxiliaries ``t[i]``,
integer and rational literals ``p/q``, operators ``+ - * ^`` and
parentheses; whitespace is insignificant.  The printer emits terms in
descending term order with factors in ascending variable order, and
parsing a printed polynomial always returns an equal value.
"""

from __future__ import annotations

from fractions import Fraction

from .order import LEX, TermOrder
from .poly import Monomial, Polynomial, Variable


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"parse error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message):
        raise ParseError(message, self.line, self.col)

    def _advance(self, n=1):
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def tokens(self):
        singles = set("[],+-*^()/")
        while True:
            while self.pos < len(self.text) and self.text[self.pos].isspace():
                self._advance()
            if self.pos >= len(self.text):
                yield ("end", "", self.line, self.col)
                return
            ch = self.text[self.pos]
            line, col = self.line, self.col
            if ch.isdigit():
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self._advance()
                yield ("int", self.text[start : self.pos], line, col)
            elif ch.isalpha():
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isalpha():
                    self._advance()
                yield ("name", self.text[start : self.pos], line, col)
            elif ch in singles:
                self._advance()
                yield (ch, ch, line, col)
            else:
                self.error(f"unexpected character {ch!r}")


class _Parser:
    def __init__(self, text: str):
        self._stream = _Tokenizer(text).tokens()
        self.tok = next(self._stream)

    def error(self, message):
        raise ParseError(message, self.tok[2], self.tok[3])

    def next(self):
        self.tok = next(self._stream)

    def expect(self, kind):
        if self.tok[0] != kind:
            self.error(f"expected {kind!r}, found {self.tok[1]!r}")
        value = self.tok[1]
        self.next()
        return value

    def parse(self) -> Polynomial:
        p = self.polynomial()
        if self.tok[0] != "end":
            self.error(f"unexpected trailing input {self.tok[1]!r}")
        return p

    def polynomial(self) -> Polynomial:
        sign = 1
        if self.tok[0] in ("+", "-"):
            sign = -1 if self.tok[0] == "-" else 1
            self.next()
        total = self.term().scale(sign)
        while self.tok[0] in ("+", "-"):
            sign = -1 if self.tok[0] == "-" else 1
            self.next()
            total = total + self.term().scale(sign)
        return total

    def term(self) -> Polynomial:
        p = self.factor()
        while self.tok[0] == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.primary()
        if self.tok[0] == "^":
            self.next()
            exp = int(self.expect("int"))
            p = p**exp
        return p

    def primary(self) -> Polynomial:
        kind = self.tok[0]
        if kind == "int":
            num = int(self.expect("int"))
            if self.tok[0] == "/":
                self.next()
                den = int(self.expect("int"))
                if den == 0:
                    self.error("zero denominator")
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == "name":
            return Polynomial.variable(self.variable())
        if kind == "(":
            self.next()
            p = self.polynomial()
            self.expect(")")
            return p
        self.error(f"expected a number, variable or '(', found {self.tok[1]!r}")

    def variable(self) -> Variable:
        family = self.expect("name")
        if family not in ("x", "t"):
            self.error(f"unknown variable family {family!r}")
        self.expect("[")
        entries = [int(self.expect("int"))]
        while self.tok[0] == ",":
            self.next()
            entries.append(int(self.expect("int")))
        self.expect("]")
        try:
            return Variable(tuple(entries), family)
        except ValueError as exc:
            self.error(str(exc))


def parse_polynomial(text: str) -> Polynomial:
    return _Parser(text).parse()


def parse_variable(text: str) -> Variable:
    parser = _Parser(text)
    v = parser.variable()
    if parser.tok[0] != "end":
        parser.error(f"unexpected trailing input {parser.tok[1]!r}")
    return v


def parse_polynomials(text: str) -> list[Polynomial]:
    """Parse a multi-line document, one polynomial per line, '#' comments."""
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(parse_polynomial(body))
    return out


def render_variable(v: Variable) -> str:
    return f"{v.family}[{','.join(map(str, v.entries))}]"


def render_monomial(m: Monomial) -> str:
    if m.is_one():
        return "1"
    parts = []
    for v, e in m.items():
        parts.append(render_variable(v) + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def render_polynomial(f: Polynomial, order: TermOrder = LEX) -> str:
    if f.is_zero():
        return "0"
    monos = sorted(f.monomials(), key=order.monomial_key(), reverse=True)
    pieces = []
    for i, m in enumerate(monos):
        c = f.coefficient(m)
        mag = abs(c)
        if m.is_one():
            body = str(mag)
        elif mag == 1:
            body = render_monomial(m)
        else:
            body = f"{mag}*{render_monomial(m)}"
        if i == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)
