"""Parser for the ASCII polynomial grammar.

    expr  := term (('+'|'-') term)*
    term  := coeff? ('*'? var ('^' nat)?)*
    coeff := int | int '/' posint

Whitespace is insignificant; variables must be declared in the ring context.
The printer in `rings` emits exactly this grammar, so print-then-parse is the
identity on canonical polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import Polynomial, RingContext


class ParseError(ValueError):
    """Malformed polynomial text; `position` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.reason = message
        self.position = position


_SYMBOLS = "+-*/^"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, text, position) triples; kinds: int, ident, sym, end."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            tokens.append(("sym", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0
        self.var_index = {name: i for i, name in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        pairs = []
        sign = 1
        kind, text, at = self.peek()
        if kind == "sym" and text in "+-":
            sign = -1 if text == "-" else 1
            self.advance()
        elif kind == "end":
            raise ParseError("empty polynomial", at)
        pairs.append(self.parse_term(sign))
        while True:
            kind, text, at = self.peek()
            if kind == "end":
                break
            if kind == "sym" and text in "+-":
                self.advance()
                pairs.append(self.parse_term(-1 if text == "-" else 1))
            else:
                raise ParseError(f"expected '+' or '-', found {text!r}", at)
        return Polynomial.make(self.ring, pairs)

    def parse_int(self) -> int:
        kind, text, at = self.peek()
        if kind != "int":
            raise ParseError("expected integer", at)
        self.advance()
        return int(text)

    def parse_term(self, sign: int):
        coeff = Fraction(sign)
        exps = [0] * self.ring.nvars
        saw_factor = False
        expect_factor = False
        coeff_at = self.peek()[2]
        while True:
            kind, text, at = self.peek()
            if kind == "int":
                self.advance()
                numer = int(text)
                k2, t2, _ = self.peek()
                if k2 == "sym" and t2 == "/":
                    self.advance()
                    _, dtext, dat = self.peek()
                    denom = self.parse_int()
                    if denom == 0:
                        raise ParseError("division by zero", dat)
                    coeff *= Fraction(numer, denom)
                else:
                    coeff *= numer
            elif kind == "ident":
                self.advance()
                if text not in self.var_index:
                    raise ParseError(f"unknown variable {text!r}", at)
                exp = 1
                k2, t2, _ = self.peek()
                if k2 == "sym" and t2 == "^":
                    self.advance()
                    exp = self.parse_int()
                exps[self.var_index[text]] += exp
            else:
                if expect_factor:
                    raise ParseError("expected a factor after '*'", at)
                break
            saw_factor = True
            expect_factor = False
            kind, text, at = self.peek()
            if kind == "sym" and text == "*":
                self.advance()
                expect_factor = True
        if not saw_factor:
            raise ParseError("expected a term", self.peek()[2])
        try:
            value = self.ring.field.from_fraction(coeff)
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), coeff_at) from None
        return tuple(exps), value


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse `text` into a canonical polynomial of `ring`."""
    return _Parser(text, ring).parse()
