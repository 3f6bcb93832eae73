"""Term orders on exponent tuples.

Every order exposes ``desc_key``: sorting monomials by ascending ``desc_key``
lists them from largest to smallest.  That direction suits ``heapq`` and
``min`` in the reduction loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

LESS, EQUAL, GREATER = -1, 0, 1


class TermOrder:
    name = "order"

    def desc_key(self, m):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        if len(a) != len(b):
            raise ValueError("monomials come from different rings")
        ka, kb = self.desc_key(a), self.desc_key(b)
        if ka == kb:
            return EQUAL
        return GREATER if ka < kb else LESS

    def greater(self, a, b) -> bool:
        return self.desc_key(a) < self.desc_key(b)

    def sorted(self, monomials, descending: bool = True) -> list:
        return sorted(monomials, key=self.desc_key, reverse=not descending)

    def max(self, monomials):
        return min(monomials, key=self.desc_key)

    def check_ring(self, n: int) -> None:
        pass


@dataclass(frozen=True)
class Lex(TermOrder):
    name = "lex"

    def desc_key(self, m):
        return tuple([-e for e in m])

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class DegRevLex(TermOrder):
    """Degree first; ties go to the monomial with the smaller last differing exponent."""

    name = "degrevlex"

    def desc_key(self, m):
        return (-sum(m),) + m[::-1]

    def __str__(self):
        return "degrevlex"


@dataclass(frozen=True)
class WeightOrder(TermOrder):
    """Weight w·log(m) first, DegRevLex tie-break.  Weights must be positive ints."""

    weights: tuple[int, ...]
    name = "weight"

    def __post_init__(self):
        w = tuple(self.weights)
        if not w or any(not isinstance(x, int) or x <= 0 for x in w):
            raise ValueError(f"weights must be positive integers, got {self.weights!r}")
        object.__setattr__(self, "weights", w)

    def weight(self, m) -> int:
        return sum(a * b for a, b in zip(self.weights, m))

    def desc_key(self, m):
        return (-sum(a * b for a, b in zip(self.weights, m)), -sum(m)) + m[::-1]

    def check_ring(self, n):
        if len(self.weights) != n:
            raise ValueError(f"weight vector has {len(self.weights)} entries for {n} variables")

    def __str__(self):
        return "weight:" + ",".join(map(str, self.weights))


@dataclass(frozen=True)
class Permuted(TermOrder):
    """``base`` applied after reordering variables.

    ``perm[k]`` is the index of the variable playing the role of the k-th
    variable of ``base``; ``Permuted(Lex(), (2, 0, 1))`` is lex with
    x3 > x1 > x2.
    """

    base: TermOrder
    perm: tuple[int, ...]
    name = "perm"

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {self.perm!r}")
        object.__setattr__(self, "perm", perm)

    def desc_key(self, m):
        return self.base.desc_key(tuple([m[i] for i in self.perm]))

    def check_ring(self, n):
        if len(self.perm) != n:
            raise ValueError(f"permutation has {len(self.perm)} entries for {n} variables")
        self.base.check_ring(n)

    def __str__(self):
        return f"perm:{self.base}:" + ",".join(str(i + 1) for i in self.perm)


@dataclass(frozen=True)
class BlockOrder(TermOrder):
    """Product of DegRevLex orders on consecutive blocks; earlier blocks dominate.

    Used for elimination: the first block holds the variables to eliminate.
    ``sizes`` gives the block lengths, which must cover all variables.
    """

    sizes: tuple[int, ...]
    name = "block"

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))

    def desc_key(self, m):
        key = ()
        start = 0
        for s in self.sizes:
            part = m[start:start + s]
            key += (-sum(part),) + part[::-1]
            start += s
        return key

    def check_ring(self, n):
        if sum(self.sizes) != n:
            raise ValueError(f"blocks {self.sizes} do not cover {n} variables")

    def __str__(self):
        return "block:" + ",".join(map(str, self.sizes))


def parse_order(text: str, names: Sequence[str] | None = None) -> TermOrder:
    """Parse ``lex``, ``degrevlex``, ``weight:w1,..``, ``perm:[base:]v1,..``.

    Permutation entries are variable names (when ``names`` is given) or
    1-based indices, listed from most to least significant.
    """
    text = text.strip()
    low = text.lower()
    if low == "lex":
        return Lex()
    if low in ("degrevlex", "drl", "revlex", "rl"):
        return DegRevLex()
    if low.startswith("weight:"):
        try:
            weights = tuple(int(x) for x in text[7:].split(","))
        except ValueError:
            raise ValueError(f"bad weight vector in {text!r}") from None
        return WeightOrder(weights)
    if low.startswith("perm:"):
        rest = text[5:]
        base: TermOrder = Lex()
        head, _, tail = rest.partition(":")
        if tail:
            base = parse_order(head)
            rest = tail
        perm = []
        for tok in rest.split(","):
            tok = tok.strip()
            if names is not None and tok in names:
                perm.append(list(names).index(tok))
            elif tok.isdigit():
                perm.append(int(tok) - 1)
            else:
                raise ValueError(f"unknown variable {tok!r} in {text!r}")
        return Permuted(base, tuple(perm))
    raise ValueError(f"unknown term order {text!r}")
