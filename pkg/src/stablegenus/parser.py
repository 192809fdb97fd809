"""Recursive-descent parser for knot expressions such as ``3/2*T(2,7) - T(2,11) + 2*4_1``.

Grammar (whitespace is ignored between tokens)::

    expr     := '0' | ['+'|'-'] term (('+'|'-') term)*
    term     := [rational '*'] knot
    knot     := 'T(' int ',' int ')' | int '_' int
    rational := int ['/' int]
"""

from __future__ import annotations

from fractions import Fraction

from .knot_algebra import BasisKnot, KnotError, KnotExpr, catalog, torus


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < len(self.text) else "end of input"
            raise self.error(f"expected an integer, found {found}", start)
        return int(self.text[start:self.pos])

    def knot(self) -> BasisKnot:
        self.skip()
        start = self.pos
        if self.peek() == "T":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            try:
                return torus(p, q)
            except KnotError as exc:
                raise self.error(str(exc), start) from None
        if self.peek().isdigit():
            a = self.integer()
            if self.pos >= len(self.text) or self.text[self.pos] != "_":
                raise self.error("expected '_' in catalog name")
            self.pos += 1
            b = self.integer()
            try:
                return catalog(f"{a}_{b}")
            except KnotError as exc:
                raise self.error(str(exc), start) from None
        found = repr(self.peek()) if self.peek() else "end of input"
        raise self.error(f"expected a knot, found {found}")

    def term(self) -> tuple[BasisKnot, Fraction]:
        self.skip()
        if self.peek().isdigit():
            # either a coefficient or a catalog name: look past the integer
            save = self.pos
            num = self.integer()
            nxt = self.text[self.pos] if self.pos < len(self.text) else ""
            if nxt == "_":
                self.pos = save
                return self.knot(), Fraction(1)
            den = 1
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", at)
            self.expect("*")
            return self.knot(), Fraction(num, den)
        return self.knot(), Fraction(1)

    def expr(self) -> KnotExpr:
        self.skip()
        if self.text.strip() == "0":
            self.pos = len(self.text)
            return KnotExpr()
        if not self.text.strip():
            raise self.error("empty expression")
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        knot, c = self.term()
        terms.append((knot, sign * c))
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            knot, c = self.term()
            terms.append((knot, sign * c))
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return KnotExpr.from_terms(terms)


def parse(text: str) -> KnotExpr:
    return _Parser(text).expr()


def parse_basis(text: str) -> list[BasisKnot]:
    """Comma-separated knot list; commas inside T(p,q) are part of the knot."""
    p = _Parser(text)
    out = [p.knot()]
    while p.peek() == ",":
        p.pos += 1
        out.append(p.knot())
    if p.peek():
        raise p.error(f"unexpected {p.peek()!r}")
    if len(set(out)) != len(out):
        raise ParseError("repeated basis knot", 0, text)
    return out
