"""Text form of polynomials.

Grammar (ASCII only; whitespace free between tokens):

    poly   := ["+" | "-"] term (("+" | "-") term)*
    term   := rat ["*" factor {"*" factor}] | factor {"*" factor}
    factor := var ["^" uint]
    rat    := ["-"] uint ["/" uint]
    var    := "x" | "y" | "z" | "w" | "x" uint

The bare names x, y, z, w address the first four variables; x1 ... xN
address any of them (x and x1 coincide).  Exponents of a repeated
variable inside one term add up; repeated exponent vectors across terms
add coefficients and may cancel.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import PolyParseError
from .polynomials import Exponent, Poly

_BARE_NAMES = {"x": 0, "y": 1, "z": 2, "w": 3}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int) -> None:
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() and ch.isascii():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], length: int) -> None:
        self.tokens = tokens
        self.i = 0
        self.length = length

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", self.length)
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise PolyParseError(f"expected {kind}, found {tok.text!r}", tok.pos)
        return tok

    def variable_index(self, tok: _Token) -> int:
        name = tok.text
        if name in _BARE_NAMES:
            return _BARE_NAMES[name]
        if name[0] == "x" and name[1:].isdigit():
            k = int(name[1:])
            if k < 1:
                raise PolyParseError("variable indices start at x1", tok.pos)
            return k - 1
        raise PolyParseError(f"unknown variable {name!r} (use x, y, z, w or x1..xN)", tok.pos)

    def parse_factor(self, exponents: Dict[int, int]) -> None:
        tok = self.expect("name")
        index = self.variable_index(tok)
        power = 1
        nxt = self.peek()
        if nxt is not None and nxt.kind == "^":
            self.take()
            after = self.peek()
            if after is not None and after.kind == "-":
                raise PolyParseError("negative exponent", after.pos)
            power = int(self.expect("number").text)
        exponents[index] = exponents.get(index, 0) + power

    def parse_rat(self, sign: int) -> Fraction:
        num = int(self.expect("number").text)
        nxt = self.peek()
        if nxt is not None and nxt.kind == "/":
            self.take()
            dtok = self.expect("number")
            den = int(dtok.text)
            if den == 0:
                raise PolyParseError("zero denominator", dtok.pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse_term(self, sign: int) -> Tuple[Fraction, Dict[int, int]]:
        coefficient = Fraction(sign)
        exponents: Dict[int, int] = {}
        tok = self.peek()
        if tok is None:
            raise PolyParseError("expected a term", self.length)
        if tok.kind == "number" or tok.kind == "-":
            inner = 1
            if tok.kind == "-":
                self.take()
                inner = -1
            coefficient = sign * self.parse_rat(inner)
            nxt = self.peek()
            if nxt is None or nxt.kind != "*":
                return coefficient, exponents  # bare constant
            self.take()
            self.parse_factor(exponents)
        elif tok.kind == "name":
            self.parse_factor(exponents)
        else:
            raise PolyParseError(f"expected a term, found {tok.text!r}", tok.pos)
        while True:
            nxt = self.peek()
            if nxt is None or nxt.kind != "*":
                return coefficient, exponents
            self.take()
            self.parse_factor(exponents)


def parse_poly(text: str, n_hint: Optional[int] = None, generic: bool = True) -> Poly:
    """Parse `text` into a Poly.

    The dimension is the largest variable index used, or `n_hint` when
    given (a variable beyond the hint is a dimension overflow error).
    """
    parser = _Parser(_tokenize(text), len(text))
    if parser.peek() is None:
        raise PolyParseError("empty input", 0)
    terms: List[Tuple[Fraction, Dict[int, int]]] = []
    sign = 1
    first = parser.peek()
    if first is not None and first.kind in "+-":
        parser.take()
        sign = -1 if first.kind == "-" else 1
    terms.append(parser.parse_term(sign))
    while parser.peek() is not None:
        op = parser.take()
        if op.kind not in "+-":
            raise PolyParseError(f"expected + or -, found {op.text!r}", op.pos)
        terms.append(parser.parse_term(-1 if op.kind == "-" else 1))

    max_index = max((i for _, exps in terms for i in exps), default=-1)
    dimension = max_index + 1
    if n_hint is not None:
        if n_hint < 1:
            raise PolyParseError("n_hint must be at least 1", 0)
        if dimension > n_hint:
            raise PolyParseError(
                f"dimension overflow: variable x{max_index + 1} exceeds hint {n_hint}", 0
            )
        dimension = n_hint
    dimension = max(dimension, 1)

    accumulated: Dict[Exponent, Fraction] = {}
    for coefficient, exps in terms:
        e = tuple(exps.get(i, 0) for i in range(dimension))
        accumulated[e] = accumulated.get(e, Fraction(0)) + coefficient
    return Poly.from_terms(dimension, accumulated, generic)


def variable_names(dimension: int) -> List[str]:
    if dimension <= 4:
        return list("xyzw")[:dimension]
    return [f"x{i + 1}" for i in range(dimension)]


def poly_to_string(f: Poly) -> str:
    """Canonical text: terms by ascending total degree then exponent order.

    Re-parsing with n_hint = f.dimension reproduces f exactly.
    """
    if f.is_zero():
        return "0"
    names = variable_names(f.dimension)
    pieces: List[str] = []
    for e in sorted(f.terms, key=lambda e: (sum(e), e)):
        c = f.terms[e]
        factors = []
        for i, power in enumerate(e):
            if power == 1:
                factors.append(names[i])
            elif power > 1:
                factors.append(f"{names[i]}^{power}")
        magnitude = abs(c)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)
