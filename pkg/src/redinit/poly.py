"""Polynomial rings and sparse polynomials with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import monomial as mono
from .field import DEFAULT_CHARACTERISTIC, Field
from .orders import DegRevLex, TermOrder

_DRL = DegRevLex()


@dataclass(frozen=True)
class Ring:
    """``K[names]`` with K = F_p (``characteristic`` p) or Q (``characteristic`` 0)."""

    names: tuple[str, ...]
    characteristic: int = DEFAULT_CHARACTERISTIC
    field: Field = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "field", Field(self.characteristic))

    @classmethod
    def standard(cls, n: int, characteristic: int = DEFAULT_CHARACTERISTIC, prefix: str = "x"):
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), characteristic)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.n)]

    def var(self, i: int | str) -> Polynomial:
        if isinstance(i, str):
            i = self.index(i)
        return Polynomial(self, {mono.variable(self.n, i): 1})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {mono.unit(self.n): c})

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        if len(exps) != self.n:
            raise ValueError(f"exponent vector {tuple(exps)} has wrong length for {self}")
        return Polynomial(self, {tuple(exps): coeff})

    def with_characteristic(self, characteristic: int) -> Ring:
        return Ring(self.names, characteristic)

    def extend(self, new_names: Iterable[str], front: bool = False) -> Ring:
        new = tuple(new_names)
        return Ring(new + self.names if front else self.names + new, self.characteristic)

    def parse(self, text: str) -> Polynomial:
        from .parser import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}]"


class Polynomial:
    """Finite map monomial -> nonzero coefficient.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | None = None, *, normalized: bool = False):
        self.ring = ring
        self._hash = None
        if normalized:
            self.terms = dict(terms) if terms else {}
            return
        F = ring.field
        n = ring.n
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not belong to {ring}")
            c = F(c)
            if c:
                clean[m] = c
        self.terms = clean

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomials(self) -> list:
        return list(self.terms)

    def coefficient(self, m) -> int | Fraction:
        return self.terms.get(tuple(m), 0)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self, order: TermOrder):
        """(monomial, coefficient) of the order-maximal term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        order.check_ring(self.ring.n)
        m = min(self.terms, key=order.desc_key)
        return m, self.terms[m]

    def leading_monomial(self, order: TermOrder):
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder) -> Polynomial:
        _, c = self.leading_term(order)
        return self * self.ring.field.inv(c)

    def variables(self) -> set[int]:
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d}, normalized=True)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, normalized=True)
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()}, normalized=True)
        return Polynomial(self.ring, {m: F(v * c) for m, v in self.terms.items()}, normalized=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono.mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        F = self.ring.field
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: F(c) for m, c in out.items() if c}
        return Polynomial(self.ring, out, normalized=True)

    __rmul__ = __mul__

    def mul_monomial(self, m, c=1) -> Polynomial:
        p = self.ring.characteristic
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        if p:
            terms = {mono.mul(m, k): v * c % p for k, v in self.terms.items()}
        else:
            terms = {mono.mul(m, k): F(v * c) for k, v in self.terms.items()}
        return Polynomial(self.ring, terms, normalized=True)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- substitution --------------------------------------------------

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Image under the algebra map x_i -> images[i] (all images in one ring)."""
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers: list[dict[int, Polynomial]] = [{0: target.one(), 1: img} for img in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e // 2) * power(i, e - e // 2)
            return cache[e]

        p = target.characteristic
        F = target.field
        out: dict = {}
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    f = power(i, e)
                    term = f if term is None else term * f
            if term is None:
                term = target.one()
            for k, v in term.terms.items():
                out[k] = out.get(k, 0) + c * v
        if p:
            out = {k: v % p for k, v in out.items() if v % p}
        else:
            out = {k: F(v) for k, v in out.items() if v}
        return Polynomial(target, out, normalized=True)

    def embed(self, ring: Ring, positions: Sequence[int]) -> Polynomial:
        """Rename variable i to ``ring`` variable ``positions[i]``."""
        n = ring.n
        terms = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                if x:
                    e[positions[i]] += x
            terms[tuple(e)] = c
        if ring.characteristic != self.ring.characteristic:
            return Polynomial(ring, terms)
        return Polynomial(ring, terms, normalized=True)

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self, order: TermOrder = _DRL) -> list:
        return sorted(self.terms.items(), key=lambda t: order.desc_key(t[0]))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, ring={self.ring})"


def format_polynomial(f: Polynomial, order: TermOrder = _DRL) -> str:
    if not f.terms:
        return "0"
    F = f.ring.field
    pieces = []
    for m, c in f.sorted_terms(order):
        c = F.symmetric(c)
        neg = c < 0
        c = -c if neg else c
        body = mono.format_monomial(m, f.ring.names)
        if body == "1":
            text = str(c)
        elif c == 1:
            text = body
        else:
            text = f"{c}*{body}"
        if not pieces:
            pieces.append(("-" if neg else "") + text)
        else:
            pieces.append(("- " if neg else "+ ") + text)
    return " ".join(pieces)


def is_homogeneous_list(gens: Iterable[Polynomial]) -> bool:
    return all(g.is_homogeneous() for g in gens)


def common_ring(gens: Sequence[Polynomial]) -> Ring:
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    return ring
