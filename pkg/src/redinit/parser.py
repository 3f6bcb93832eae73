"""Reader and writer for ideal files.

    ring x, y, z;
    char 32003;
    ideal x^2 + y*z, x*y, x*z

``#`` starts a comment.  Coefficients may be written ``a/b`` only in
characteristic 0.  Beyond the bare grammar a polynomial may open with a
sign, a term may be a lone coefficient and the file may end with ``;``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .field import is_prime
from .poly import Polynomial, Ring, format_polynomial

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^,;])
    """,
    re.VERBOSE,
)


_KIND_NAMES = {"int": "integer", "ident": "identifier", "op": "operator"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise self.error(f"unexpected character {text[pos]!r}", pos)
            if m.lastgroup != "ws":
                self.toks.append((m.lastgroup, m.group(), pos))
            pos = m.end()
        self.i = 0

    def where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        return ParseError(message, *self.where(pos))

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = repr(value) if value else _KIND_NAMES.get(kind, kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise self.error(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def accept(self, value):
        if self.peek()[1] == value and self.peek()[0] != "eof":
            self.i += 1
            return True
        return False


def _parse_coeff(toks: _Tokens, ring: Ring):
    kind, text, pos = toks.take("int")
    value = Fraction(int(text))
    if toks.peek()[1] == "/":
        if ring.characteristic:
            raise toks.error("rational coefficients need characteristic 0")
        toks.take()
        _, den, dpos = toks.take("int")
        if int(den) == 0:
            raise toks.error("division by zero", dpos)
        value /= int(den)
    return value


def _parse_factor(toks: _Tokens, ring: Ring, exps: list[int]):
    _, name, pos = toks.take("ident")
    try:
        i = ring.index(name)
    except KeyError:
        raise toks.error(f"unknown variable {name!r}", pos) from None
    e = 1
    if toks.accept("^"):
        e = int(toks.take("int")[1])
    exps[i] += e


def _parse_term(toks: _Tokens, ring: Ring):
    exps = [0] * ring.n
    coeff = Fraction(1)
    if toks.peek()[0] == "int":
        coeff = _parse_coeff(toks, ring)
        if not toks.accept("*"):
            return tuple(exps), coeff
    _parse_factor(toks, ring, exps)
    while toks.accept("*"):
        if toks.peek()[0] == "int":
            coeff *= _parse_coeff(toks, ring)
        else:
            _parse_factor(toks, ring, exps)
    return tuple(exps), coeff


def _parse_poly(toks: _Tokens, ring: Ring) -> Polynomial:
    terms: dict = {}
    sign = 1
    if toks.peek()[1] in ("+", "-") and toks.peek()[0] == "op":
        sign = -1 if toks.take()[1] == "-" else 1
    while True:
        m, c = _parse_term(toks, ring)
        terms[m] = terms.get(m, 0) + sign * c
        tok = toks.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            toks.take()
            nxt = toks.peek()
            if nxt[0] not in ("int", "ident"):
                raise toks.error(f"dangling operator {tok[1]!r}", tok[2])
            sign = -1 if tok[1] == "-" else 1
            continue
        break
    try:
        return Polynomial(ring, terms)
    except ZeroDivisionError as exc:
        raise toks.error(str(exc)) from None


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    toks = _Tokens(text)
    f = _parse_poly(toks, ring)
    if toks.peek()[0] != "eof":
        raise toks.error(f"unexpected {toks.peek()[1]!r}")
    return f


def parse_ideal(text: str, characteristic: int | None = None) -> tuple[Ring, list[Polynomial]]:
    """Parse an ideal file; ``characteristic`` overrides the ``char`` line."""
    toks = _Tokens(text)
    toks.take("ident", "ring")
    names = [toks.take("ident")[1]]
    while toks.accept(","):
        _, name, pos = toks.take("ident")
        if name in names:
            raise toks.error(f"duplicate variable {name!r}", pos)
        names.append(name)
    toks.take("op", ";")
    toks.take("ident", "char")
    _, ctext, cpos = toks.take("int")
    char = int(ctext)
    if char != 0 and not is_prime(char):
        raise toks.error(f"characteristic {char} is neither 0 nor prime", cpos)
    if characteristic is not None:
        char = characteristic
    ring = Ring(tuple(names), char)
    toks.take("op", ";")
    toks.take("ident", "ideal")
    gens = []
    while True:
        start = toks.peek()[2]
        f = _parse_poly(toks, ring)
        if f.is_zero():
            raise toks.error("zero polynomial listed as a generator", start)
        gens.append(f)
        if not toks.accept(","):
            break
    toks.accept(";")
    if toks.peek()[0] != "eof":
        raise toks.error(f"unexpected {toks.peek()[1]!r}")
    return ring, gens


def format_ideal(ring: Ring, gens) -> str:
    lines = [f"ring {', '.join(ring.names)};", f"char {ring.characteristic};"]
    body = ",\n      ".join(format_polynomial(g) for g in gens)
    lines.append(f"ideal {body}")
    return "\n".join(lines) + "\n"


def load_ideal(path, characteristic: int | None = None) -> tuple[Ring, list[Polynomial]]:
    return parse_ideal(Path(path).read_text(encoding="utf-8"), characteristic)
