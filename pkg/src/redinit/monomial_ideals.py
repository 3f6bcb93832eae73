"""Monomial ideals: Hilbert functions, dimension, stability, lex segments,
polarization and generator counts."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import monomial as mono
from .linalg import RowEchelon
from .orders import DegRevLex, Lex
from .poly import Polynomial, Ring, common_ring

log = logging.getLogger(__name__)

_DRL = DegRevLex()
_LEX = Lex()


class HilbertMismatch(RuntimeError):
    """The two Hilbert function algorithms disagreed (a bug, never an input problem)."""


@dataclass(frozen=True)
class HilbertFunction:
    """``values[j] = dim_K (R/I)_j`` for ``j = 0..bound``."""

    bound: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.bound + 1:
            raise ValueError("need exactly bound + 1 values")

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def truncate(self, bound: int) -> HilbertFunction:
        return HilbertFunction(bound, self.values[: bound + 1])

    def last_nonzero(self) -> int | None:
        for j in range(self.bound, -1, -1):
            if self.values[j]:
                return j
        return None

    def to_json(self) -> dict:
        return {"bound": self.bound, "values": list(self.values)}

    @classmethod
    def from_json(cls, data) -> HilbertFunction:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["bound"]), tuple(int(v) for v in data["values"]))


def minimal_monomials(monomials: Iterable) -> list:
    """Divisibility-minimal subset, duplicates removed."""
    ms = sorted(set(map(tuple, monomials)), key=sum)
    out: list = []
    for m in ms:
        if not any(mono.divides(g, m) for g in out):
            out.append(m)
    return out


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("ring", "generators", "_hash")

    def __init__(self, ring: Ring, monomials: Iterable = ()):
        gens = []
        for m in monomials:
            if isinstance(m, Polynomial):
                if not m.is_monomial():
                    raise ValueError(f"{m} is not a monomial")
                m = next(iter(m.terms))
            m = tuple(m)
            if len(m) != ring.n:
                raise ValueError(f"monomial {m} does not belong to {ring}")
            gens.append(m)
        self.ring = ring
        self.generators = tuple(sorted(minimal_monomials(gens), key=_DRL.desc_key))
        self._hash = None

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.generators))
        return self._hash

    def __str__(self):
        return "(" + ", ".join(mono.format_monomial(g, self.ring.names) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"

    @property
    def n(self):
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def contains(self, m) -> bool:
        m = tuple(m)
        return any(mono.divides(g, m) for g in self.generators)

    def __contains__(self, m):
        return self.contains(m)

    def degree_part(self, j: int) -> list:
        return [m for m in mono.monomials_of_degree(self.n, j) if self.contains(m)]

    def standard_monomials(self, j: int) -> list:
        return [m for m in mono.monomials_of_degree(self.n, j) if not self.contains(m)]

    def to_polynomials(self) -> list[Polynomial]:
        return [self.ring.monomial(g) for g in self.generators]

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return MonomialIdeal(self.ring, self.generators + other.generators)

    def colon_variable(self, i: int) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in self.generators])

    def generator_counts(self, bound: int | None = None) -> list[int]:
        bound = self.max_degree() if bound is None else bound
        counts = [0] * (bound + 1)
        for g in self.generators:
            if sum(g) <= bound:
                counts[sum(g)] += 1
        return counts

    # the operations below are also exposed as module functions
    def hilbert_function(self, bound: int, check: bool = True) -> HilbertFunction:
        return hilbert_function(self, bound, check)

    def krull_dimension(self) -> int:
        return krull_dimension(self)

    def is_strongly_stable(self) -> bool:
        return is_strongly_stable(self)

    def is_lex_segment(self) -> bool:
        return is_lex_segment(self)

    def add_coordinate_subspace(self, p: int) -> MonomialIdeal:
        return add_coordinate_subspace(self, p)


def minimalize(ring: Ring, monomials: Iterable) -> MonomialIdeal:
    return MonomialIdeal(ring, monomials)


def contains(ideal: MonomialIdeal, m) -> bool:
    return ideal.contains(m)


# -- Hilbert functions ------------------------------------------------------

def hilbert_by_enumeration(ideal: MonomialIdeal, bound: int) -> list[int]:
    return [len(ideal.standard_monomials(j)) for j in range(bound + 1)]


def _pure_power_series(gens: Sequence, n: int, bound: int) -> list[int]:
    # prod (1 - t^a) / (1 - t)^n
    series = [1] + [0] * bound
    for g in gens:
        a = sum(g)
        for j in range(bound, a - 1, -1):
            series[j] -= series[j - a]
    for _ in range(n):
        for j in range(1, bound + 1):
            series[j] += series[j - 1]
    return series


def _hilbert_pivot(gens: list, n: int, bound: int) -> list[int]:
    if any(sum(g) == 0 for g in gens):
        return [0] * (bound + 1)
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        return _pure_power_series(gens, n, bound)
    occurrences = [sum(1 for g in mixed if g[i]) for i in range(n)]
    i = max(range(n), key=occurrences.__getitem__)
    x = mono.variable(n, i)
    left = minimal_monomials([g for g in gens if not g[i]] + [x])
    right = minimal_monomials([g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in gens])
    hl = _hilbert_pivot(left, n, bound)
    hr = _hilbert_pivot(right, n, bound)
    return [hl[0]] + [hl[j] + hr[j - 1] for j in range(1, bound + 1)]


def hilbert_by_pivot(ideal: MonomialIdeal, bound: int) -> list[int]:
    """HF(R/I) = HF(R/(I + x_i)) + HF(R/(I : x_i))(-1), recursing to pure powers."""
    return _hilbert_pivot(list(ideal.generators), ideal.n, bound)


def hilbert_function(ideal: MonomialIdeal, bound: int, check: bool = True) -> HilbertFunction:
    """Hilbert function of R/ideal in degrees 0..bound.

    The pivot recursion is always used; with ``check`` the result is compared
    against plain enumeration of standard monomials.
    """
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    values = hilbert_by_pivot(ideal, bound)
    if check:
        brute = hilbert_by_enumeration(ideal, bound)
        if brute != values:
            raise HilbertMismatch(f"pivot {values} != enumeration {brute} for {ideal}")
    return HilbertFunction(bound, tuple(values))


# -- dimension and stability ------------------------------------------------

def krull_dimension(ideal: MonomialIdeal) -> int:
    """Largest set of variables containing the support of no generator; -1 for the unit ideal."""
    if ideal.is_unit():
        return -1
    n = ideal.n
    supports = [frozenset(mono.support(g)) for g in ideal.generators]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """x_i m in I and j < i imply x_j m in I.  Checking generators suffices."""
    n = ideal.n
    for g in ideal.generators:
        for i in range(n):
            if not g[i]:
                continue
            for j in range(i):
                h = list(g)
                h[i] -= 1
                h[j] += 1
                if not ideal.contains(h):
                    return False
    return True


def is_strongly_stable_brute(ideal: MonomialIdeal, bound: int | None = None) -> bool:
    bound = ideal.max_degree() if bound is None else bound
    n = ideal.n
    for d in range(bound + 1):
        for m in ideal.degree_part(d):
            for i in range(n):
                if not m[i]:
                    continue
                for j in range(i):
                    h = list(m)
                    h[i] -= 1
                    h[j] += 1
                    if not ideal.contains(h):
                        return False
    return True


def is_lex_segment(ideal: MonomialIdeal) -> bool:
    if ideal.is_zero():
        return True
    for j in range(ideal.max_degree() + 1):
        ordered = mono.monomials_of_degree(ideal.n, j)
        inside = [ideal.contains(m) for m in ordered]
        k = sum(inside)
        if not all(inside[:k]):
            return False
    return True


def lex_segment_ideal(ring: Ring, ideal_dims: Sequence[int], bound: int | None = None) -> MonomialIdeal:
    """Lex-segment ideal whose degree-j piece has dimension ``ideal_dims[j]``.

    Raises ValueError when the sequence violates R_1 L_j <= L_{j+1}, i.e. is
    not the dimension sequence of a homogeneous ideal.
    """
    bound = len(ideal_dims) - 1 if bound is None else bound
    n = ring.n
    gens = []
    prev: set = set()
    for j in range(bound + 1):
        ordered = mono.monomials_of_degree(n, j)
        k = ideal_dims[j]
        if not 0 <= k <= len(ordered):
            raise ValueError(f"dimension {k} impossible in degree {j}")
        piece = set(ordered[:k])
        shifted = {mono.mul(m, mono.variable(n, i)) for m in prev for i in range(n)}
        if not shifted <= piece:
            raise ValueError(f"not an ideal Hilbert function: R_1*L_{j - 1} escapes L_{j}")
        gens.extend(m for m in ordered[:k] if m not in shifted)
        prev = piece
    return MonomialIdeal(ring, gens)


def lex_segment_from_hilbert(ring: Ring, hf: HilbertFunction) -> MonomialIdeal:
    dims = [mono.count_of_degree(ring.n, j) - hf[j] for j in range(hf.bound + 1)]
    L = lex_segment_ideal(ring, dims)
    tail = [sum(g) for g in L.generators if sum(g) > hf.bound - ring.n]
    if tail:
        log.warning("lex segment still gaining generators in degrees %s near the bound %d; "
                    "raise the bound", sorted(set(tail)), hf.bound)
    return L


def lex_segment_stabilized(L: MonomialIdeal, bound: int) -> bool:
    return not any(sum(g) > bound - L.n for g in L.generators)


# -- constructions ------------------------------------------------------------

def add_coordinate_subspace(ideal: MonomialIdeal, p: int) -> MonomialIdeal:
    """ideal + (x_{n-p+1}, ..., x_n)."""
    n = ideal.n
    if not 0 <= p <= n:
        raise ValueError(f"p = {p} outside [0, {n}]")
    extra = [mono.variable(n, i) for i in range(n - p, n)]
    return MonomialIdeal(ideal.ring, list(ideal.generators) + extra)


def polarize(ideal: MonomialIdeal, which: Iterable[int | str] | None = None):
    """Polarize the selected variables (all by default).

    x_i^a becomes x_i * x_i_1 * ... * x_i_{a-1}; new variables are appended
    after the old ones, by variable and then by power index.  Returns the
    polarized ideal and a map from variable index to (original index, k).
    """
    ring = ideal.ring
    n = ring.n
    if which is None:
        selected = list(range(n))
    else:
        selected = sorted({ring.index(v) if isinstance(v, str) else v for v in which})
    top = {i: max((g[i] for g in ideal.generators), default=0) for i in selected}
    names = list(ring.names)
    provenance = {i: (i, 0) for i in range(n)}
    slot: dict[tuple[int, int], int] = {(i, 0): i for i in range(n)}
    taken = set(names)
    for i in selected:
        for k in range(1, top[i]):
            name = f"{ring.names[i]}_{k}"
            while name in taken:
                name += "'"
            taken.add(name)
            slot[(i, k)] = len(names)
            provenance[len(names)] = (i, k)
            names.append(name)
    new_ring = Ring(tuple(names), ring.characteristic)
    m = len(names)
    gens = []
    for g in ideal.generators:
        e = [0] * m
        for i, a in enumerate(g):
            if i in top:
                for k in range(a):
                    e[slot[(i, k)]] = 1
            else:
                e[i] = a
        gens.append(tuple(e))
    return MonomialIdeal(new_ring, gens), provenance


def max_variable(m) -> int:
    return mono.max_variable(m)


def minimal_generator_counts(gens: Sequence[Polynomial], bound: int) -> list[int]:
    """Number of minimal generators of the homogeneous ideal (gens) per degree.

    count_j = dim I_j - dim R_1 I_{j-1}, via exact ranks of graded pieces.
    """
    if not gens:
        return [0] * (bound + 1)
    ring = common_ring(gens)
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("generator counts need homogeneous generators")
    n = ring.n
    F = ring.field
    by_degree: dict[int, list[dict]] = {}
    for g in gens:
        by_degree.setdefault(g.degree(), []).append(dict(g.terms))
    counts = []
    basis: list[dict] = []
    for j in range(bound + 1):
        ech = RowEchelon(F)
        for row in basis:
            for i in range(n):
                x = mono.variable(n, i)
                ech.add({mono.mul(m, x): c for m, c in row.items()})
        before = ech.rank
        ech.extend(by_degree.get(j, []))
        counts.append(ech.rank - before)
        basis = ech.basis()
    return counts


def binomial_hilbert(n: int, bound: int) -> list[int]:
    return [comb(j + n - 1, n - 1) for j in range(bound + 1)]
