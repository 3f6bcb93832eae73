"""Buchberger's algorithm, normal forms and initial ideals.

The engine works on monic polynomials stored as ``(leading monomial, tail)``
where the tail is a list of ``(monomial, coefficient)`` pairs.  Critical
pairs are handled with the normal selection strategy (smallest lcm degree
first) and pruned by the Gebauer-Moeller criteria, which include the
coprime-leading-monomial criterion.  For homogeneous input the computation
can stop after a degree bound and be resumed later.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import count
from operator import add
from typing import Iterable, Sequence

from . import monomial as mono
from .orders import BlockOrder, DegRevLex, TermOrder, WeightOrder
from .poly import Polynomial, Ring, common_ring


def _mask(m) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


class _Elt:
    __slots__ = ("lm", "mask", "deg", "tail")

    def __init__(self, lm, tail):
        self.lm = lm
        self.mask = _mask(lm)
        self.deg = sum(lm)
        self.tail = tail


class GroebnerEngine:
    """Resumable Buchberger computation for one ideal and one term order."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial], order: TermOrder):
        order.check_ring(ring.n)
        self.ring = ring
        self.order = order
        self.p = ring.characteristic
        self._keys: dict = {}
        self.elts: list[_Elt] = []
        self.active: list[int] = []
        self.queue: list = []
        self._seq = count()
        self.homogeneous = True
        self.done_degree = -1
        self.reductions = 0
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                self.homogeneous = False
            heapq.heappush(self.queue, [g.degree(), next(self._seq), True, dict(g.terms), None, None])

    # -- helpers -------------------------------------------------------

    def dkey(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self.order.desc_key(m)
            self._keys[m] = k
        return k

    def _reducers(self):
        return [self.elts[i] for i in self.active]

    def reduce(self, terms: dict, reducers: Sequence[_Elt] | None = None, full: bool = True) -> dict:
        """Normal form of the polynomial ``terms`` (a dict) modulo ``reducers``."""
        if reducers is None:
            reducers = self._reducers()
        p = self.p
        dkey = self.dkey
        f = dict(terms)
        heap = [(dkey(m), m) for m in f]
        heapq.heapify(heap)
        rem: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            mm = _mask(m)
            for r in reducers:
                if r.mask & ~mm:
                    continue
                lm = r.lm
                for a, b in zip(lm, m):
                    if a > b:
                        break
                else:
                    break
            else:
                rem[m] = c
                if not full:
                    for t in f:
                        rem[t] = f[t]
                    return {t: v for t, v in rem.items() if v}
                continue
            self.reductions += 1
            q = tuple([b - a for a, b in zip(r.lm, m)])
            for t, v in r.tail:
                t = tuple(map(add, t, q))
                old = f.get(t)
                if old is None:
                    f[t] = (-c * v) % p if p else -c * v
                    heapq.heappush(heap, (dkey(t), t))
                else:
                    x = old - c * v
                    if p:
                        x %= p
                    if x:
                        f[t] = x
                    else:
                        del f[t]
        return rem

    def _make_elt(self, terms: dict) -> _Elt:
        p = self.p
        items = sorted(terms.items(), key=lambda t: self.dkey(t[0]))
        lm, lc = items[0]
        if p:
            inv = pow(lc, p - 2, p)
            tail = [(m, c * inv % p) for m, c in items[1:]]
        else:
            inv = Fraction(1) / lc
            tail = [(m, c * inv) for m, c in items[1:]]
        return _Elt(lm, tail)

    def _spoly(self, i: int, j: int, L) -> dict:
        a, b = self.elts[i], self.elts[j]
        qa = mono.div(L, a.lm)
        qb = mono.div(L, b.lm)
        p = self.p
        f: dict = {}
        for m, c in a.tail:
            t = tuple(map(add, m, qa))
            f[t] = c
        for m, c in b.tail:
            t = tuple(map(add, m, qb))
            x = f.get(t, 0) - c
            if p:
                x %= p
            if x:
                f[t] = x
            else:
                f.pop(t, None)
        return f

    # -- main loop -----------------------------------------------------

    def _add(self, terms: dict) -> None:
        elt = self._make_elt(terms)
        k = len(self.elts)
        self.elts.append(elt)
        h = elt.lm
        lm = [self.elts[i].lm for i in self.active]
        lcms = [mono.lcm(x, h) for x in lm]
        cands = list(range(len(self.active)))
        kept: list[int] = []
        while cands:
            c = cands.pop()
            L = lcms[c]
            if mono.coprime(lm[c], h):
                kept.append(c)
                continue
            if any(mono.divides(lcms[o], L) for o in cands) or any(mono.divides(lcms[o], L) for o in kept):
                continue
            kept.append(c)
        for entry in self.queue:
            if entry[2] or entry[5] is False:
                continue
            i, j, L = entry[3], entry[4], entry[5]
            if mono.divides(h, L):
                if mono.lcm(self.elts[i].lm, h) != L and mono.lcm(self.elts[j].lm, h) != L:
                    entry[5] = False
        for c in kept:
            if mono.coprime(lm[c], h):
                continue
            L = lcms[c]
            heapq.heappush(self.queue, [sum(L), next(self._seq), False, self.active[c], k, L])
        self.active = [i for i in self.active if not mono.divides(h, self.elts[i].lm)]
        self.active.append(k)

    def run(self, degree_bound: int | None = None) -> GroebnerEngine:
        """Process every generator and critical pair of degree <= ``degree_bound``."""
        if degree_bound is not None and not self.homogeneous:
            raise ValueError("degree truncation needs homogeneous generators")
        queue = self.queue
        while queue and (degree_bound is None or queue[0][0] <= degree_bound):
            entry = heapq.heappop(queue)
            if entry[2]:
                terms = entry[3]
            else:
                if entry[5] is False:
                    continue
                terms = self._spoly(entry[3], entry[4], entry[5])
            h = self.reduce(terms)
            if h:
                self._add(h)
        if degree_bound is None or not queue:
            self.done_degree = float("inf")
        else:
            self.done_degree = max(self.done_degree, degree_bound)
        return self

    @property
    def complete(self) -> bool:
        return self.done_degree == float("inf")

    # -- results -------------------------------------------------------

    def leading_monomials(self) -> list:
        """Minimal leading monomials of the current basis."""
        lms = [self.elts[i].lm for i in self.active]
        return [m for m in lms if not any(o != m and mono.divides(o, m) for o in lms)]

    def reduced_elements(self) -> list[_Elt]:
        lms = {}
        for i in self.active:
            e = self.elts[i]
            lms.setdefault(e.lm, e)
        keep = [e for m, e in lms.items() if not any(o != m and mono.divides(o, m) for o in lms)]
        keep.sort(key=lambda e: self.dkey(e.lm))
        out = []
        for e in keep:
            others = [o for o in keep if o is not e]
            tail = self.reduce(dict(e.tail), others)
            items = sorted(tail.items(), key=lambda t: self.dkey(t[0]))
            out.append(_Elt(e.lm, items))
        return out

    def reduced_basis(self) -> list[Polynomial]:
        out = []
        for e in self.reduced_elements():
            terms = {e.lm: 1}
            terms.update(e.tail)
            out.append(Polynomial(self.ring, terms))
        return out


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    generators: tuple[Polynomial, ...]
    reduced: bool = True
    degree_bound: float = float("inf")
    ring: Ring | None = field(default=None, compare=False)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def contains(self, f: Polynomial) -> bool:
        if self.degree_bound != float("inf") and f.degree() > self.degree_bound:
            raise ValueError(f"basis is only valid up to degree {self.degree_bound}")
        return normal_form(f, list(self.generators), self.order).is_zero()


def buchberger(gens: Sequence[Polynomial], order: TermOrder, degree_bound: int | None = None,
               ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    With ``degree_bound`` (homogeneous input only) the result is a basis of
    the ideal up to that degree.
    """
    if not gens:
        return GroebnerBasis(order, (), True, float("inf"), ring)
    ring = ring or common_ring(gens)
    eng = GroebnerEngine(ring, gens, order).run(degree_bound)
    return GroebnerBasis(order, tuple(eng.reduced_basis()), True, eng.done_degree, ring)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    L = mono.lcm(mf, mg)
    F = f.ring.field
    return f.mul_monomial(mono.div(L, mf), F.inv(cf)) - g.mul_monomial(mono.div(L, mg), F.inv(cg))


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Full reduction of ``f``; the reducer is the first basis element whose
    leading monomial divides the current term."""
    ring = f.ring
    basis = [b for b in basis if not b.is_zero()]
    for b in basis:
        if b.ring != ring:
            raise ValueError("ring mismatch")
    eng = GroebnerEngine(ring, [], order)
    elts = [eng._make_elt(dict(b.terms)) for b in basis]
    return Polynomial(ring, eng.reduce(dict(f.terms), elts))


def is_groebner_basis(basis: Sequence[Polynomial], order: TermOrder) -> bool:
    basis = [b for b in basis if not b.is_zero()]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def initial_ideal(gens: Sequence[Polynomial], order: TermOrder, degree_bound: int | None = None,
                  ring: Ring | None = None):
    """Monomial ideal of leading monomials of a Groebner basis of ``gens``."""
    from .monomial_ideals import MonomialIdeal

    if not gens:
        if ring is None:
            raise ValueError("need a ring for the zero ideal")
        return MonomialIdeal(ring, [])
    ring = ring or common_ring(gens)
    eng = GroebnerEngine(ring, gens, order).run(degree_bound)
    return MonomialIdeal(ring, eng.leading_monomials())


def initial_forms(gens: Sequence[Polynomial], weights: Sequence[int]) -> list[Polynomial]:
    w = WeightOrder(tuple(weights))
    out = []
    for g in gens:
        top = max(w.weight(m) for m in g.terms)
        out.append(Polynomial(g.ring, {m: c for m, c in g.terms.items() if w.weight(m) == top}, normalized=True))
    return out


def initial_ideal_weight(gens: Sequence[Polynomial], weights: Sequence[int],
                         degree_bound: int | None = None) -> list[Polynomial]:
    """Generators of in_w(I): initial forms of a Groebner basis under the
    weight order refined by DegRevLex."""
    w = WeightOrder(tuple(weights))
    if not gens:
        return []
    ring = common_ring(gens)
    w.check_ring(ring.n)
    gb = buchberger(gens, w, degree_bound)
    return initial_forms(gb.generators, w.weights)


def elimination_order(n: int, eliminate: Sequence[int]) -> tuple[BlockOrder, list[int]]:
    """Block order with the ``eliminate`` variables first, plus the variable
    permutation putting them in front."""
    elim = sorted(set(eliminate))
    keep = [i for i in range(n) if i not in set(elim)]
    return BlockOrder((len(elim), len(keep)) if elim and keep else (n,)), elim + keep


def eliminate(gens: Sequence[Polynomial], keep: Iterable[int | str]) -> list[Polynomial]:
    """Generators of the intersection of the ideal with ``K[keep]``.

    Returned polynomials live in the original ring and involve only the
    ``keep`` variables.
    """
    if not gens:
        return []
    ring = common_ring(gens)
    keep_idx = sorted({ring.index(k) if isinstance(k, str) else k for k in keep})
    elim = [i for i in range(ring.n) if i not in keep_idx]
    if not elim:
        return list(buchberger(gens, DegRevLex()).generators)
    order, perm = elimination_order(ring.n, elim)
    # move eliminated variables to the front, compute, move back
    work_ring = Ring(tuple(ring.names[i] for i in perm), ring.characteristic)
    position = {old: new for new, old in enumerate(perm)}
    fwd = [position[i] for i in range(ring.n)]
    moved = [g.embed(work_ring, fwd) for g in gens]
    gb = buchberger(moved, order)
    back = list(perm)
    elim_set = set(range(len(elim)))
    out = []
    for g in gb.generators:
        if any(i in elim_set for i in g.variables()):
            continue
        out.append(g.embed(ring, back))
    return out
