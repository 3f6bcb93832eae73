"""Top exterior powers of graded pieces and their initial monomials.

An exterior monomial m_1 ^ ... ^ m_d is stored as a tuple of exponent
tuples.  It is sigma-standard when the parts are strictly decreasing under
sigma.  A ``WedgeElement`` maps sigma-standard exterior monomials to
nonzero coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import monomial as mono
from .linalg import RowEchelon
from .linear_map import LinearMap
from .orders import DegRevLex, Lex, Permuted, TermOrder, WeightOrder, EQUAL, GREATER, LESS
from .poly import Polynomial, Ring, common_ring

MAX_EXPANSION = 10**6


class GradedSubspace:
    """Span of linearly independent forms of one degree."""

    __slots__ = ("ring", "basis", "degree")

    def __init__(self, basis: Sequence[Polynomial]):
        basis = list(basis)
        if not basis:
            raise ValueError("empty basis")
        ring = common_ring(basis)
        degrees = set()
        for f in basis:
            if f.is_zero() or not f.is_homogeneous():
                raise ValueError(f"{f} is not a nonzero form")
            degrees.add(f.degree())
        if len(degrees) != 1:
            raise ValueError("basis forms have different degrees")
        ech = RowEchelon(ring.field)
        if ech.extend(dict(f.terms) for f in basis) != len(basis):
            raise ValueError("basis is linearly dependent")
        self.ring = ring
        self.basis = tuple(basis)
        self.degree = degrees.pop()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon_basis(self, order: TermOrder) -> list[Polynomial]:
        """Reduced row-echelon basis, pivots on order-leading monomials, largest first."""
        ech = RowEchelon(self.ring.field, order.desc_key)
        ech.extend(dict(f.terms) for f in self.basis)
        return [Polynomial(self.ring, row, normalized=True) for row in ech.basis()]

    def leading_monomials(self, order: TermOrder) -> list:
        ech = RowEchelon(self.ring.field, order.desc_key)
        ech.extend(dict(f.terms) for f in self.basis)
        return ech.pivot_columns()

    def initial_subspace(self, order: TermOrder) -> GradedSubspace:
        return GradedSubspace([self.ring.monomial(m) for m in self.leading_monomials(order)])

    def apply(self, g: LinearMap) -> GradedSubspace:
        return GradedSubspace([g(f) for f in self.basis])

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.basis)

    def __repr__(self):
        return f"GradedSubspace({[str(f) for f in self.basis]})"


def standard_form(monomials: Sequence, order: TermOrder):
    """(sigma-standard tuple, sign) for m_1 ^ ... ^ m_d, or None when it vanishes."""
    parts = [tuple(m) for m in monomials]
    if len({sum(m) for m in parts}) > 1:
        raise ValueError("exterior monomial parts must share one degree")
    if len(set(parts)) != len(parts):
        return None
    keys = [order.desc_key(m) for m in parts]
    # parity of the sorting permutation via inversion count
    inversions = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    ordered = tuple(m for _, m in sorted(zip(keys, parts)))
    return ordered, (-1 if inversions % 2 else 1)


def compare_exterior(order: TermOrder, a: Sequence, b: Sequence) -> int:
    """Lexicographic comparison of sigma-standard exterior monomials."""
    if len(a) != len(b) or (a and b and sum(a[0]) != sum(b[0])):
        raise ValueError("exterior monomials of different shape")
    for x, y in zip(a, b):
        if x != y:
            return order.compare(x, y)
    return EQUAL


def _exterior_key(order: TermOrder, e):
    # ascending key = descending exterior order
    return tuple(order.desc_key(m) for m in e)


@dataclass
class WedgeElement:
    """Element of the d-th exterior power of R_i in a sigma-standard basis."""

    ring: Ring
    order: TermOrder
    degree: int
    arity: int
    coefficients: dict

    def support(self) -> set:
        return set(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def initial(self):
        if not self.coefficients:
            raise ValueError("zero element has no initial exterior monomial")
        return min(self.coefficients, key=lambda e: _exterior_key(self.order, e))

    def normalized(self) -> WedgeElement:
        """Scale so the initial exterior monomial has coefficient 1."""
        if not self.coefficients:
            return self
        F = self.ring.field
        inv = F.inv(self.coefficients[self.initial()])
        coeffs = {e: F(c * inv) for e, c in self.coefficients.items()}
        return WedgeElement(self.ring, self.order, self.degree, self.arity, coeffs)

    def restandardize(self, order: TermOrder) -> WedgeElement:
        """Same element written in the ``order``-standard basis."""
        F = self.ring.field
        coeffs = {}
        for e, c in self.coefficients.items():
            key, sign = standard_form(e, order)
            coeffs[key] = F(sign * c)
        return WedgeElement(self.ring, order, self.degree, self.arity, coeffs)


def wedge(forms: Sequence[Polynomial], order: TermOrder) -> WedgeElement:
    """Expand f_1 ^ ... ^ f_d term by term, standardizing with signs.

    Products are accumulated one factor at a time so cancellations happen
    early; the nominal product count is still capped at ``MAX_EXPANSION``.
    """
    forms = list(forms)
    ring = common_ring(forms)
    degree = forms[0].degree()
    total = 1
    for f in forms:
        total *= max(len(f), 1)
    if total > MAX_EXPANSION:
        raise ValueError(f"wedge expansion needs {total} products (limit {MAX_EXPANSION})")
    F = ring.field
    p = ring.characteristic
    dk = order.desc_key
    acc: dict = {(): 1}
    for f in forms:
        terms = [(m, c, dk(m)) for m, c in f.terms.items()]
        new: dict = {}
        for key, c in acc.items():
            keyk = [dk(k) for k in key]
            for m, a, mk in terms:
                smaller = 0
                pos = len(key)
                clash = False
                for idx, kk in enumerate(keyk):
                    if kk == mk:
                        clash = True
                        break
                    if kk > mk:
                        # key[idx] is smaller than m
                        if pos == len(key):
                            pos = idx
                        smaller += 1
                if clash:
                    continue
                nk = key[:pos] + (m,) + key[pos:]
                v = c * a if smaller % 2 == 0 else -c * a
                new[nk] = new.get(nk, 0) + v
        if p:
            acc = {k: v % p for k, v in new.items() if v % p}
        else:
            acc = {k: F(v) for k, v in new.items() if v}
    return WedgeElement(ring, order, degree, len(forms), acc)


def wedge_of_subspace(V: GradedSubspace, order: TermOrder, normalize: bool = True) -> WedgeElement:
    """The line of the top exterior power of V, as a sigma-standard expansion.

    With ``normalize`` the initial coefficient is scaled to 1, making the
    result independent of the chosen basis.
    """
    w = wedge(V.basis, order)
    if w.is_zero():
        raise ValueError("basis is linearly dependent")
    return w.normalized() if normalize else w


def initial_exterior(F: WedgeElement, order: TermOrder | None = None):
    if order is not None and order != F.order:
        F = F.restandardize(order)
    return F.initial()


def support(F: WedgeElement) -> set:
    return F.support()


# -- the lemmas as executable checks --------------------------------------------

def check_lemma_1_3(m: Sequence, q: Sequence, order: TermOrder) -> bool:
    """Standard form n of q satisfies n_i <= m_i for all i.

    The lemma assumes q_i <= m_i componentwise with m sigma-standard; the
    verdict is computed for any input so callers can probe the boundary.
    """
    m = tuple(map(tuple, m))
    std = standard_form(m, order)
    if std is None:
        raise ValueError("m has repeated parts")
    n = standard_form(q, order)
    if n is None:
        return True
    return all(order.compare(a, b) != GREATER for a, b in zip(n[0], std[0]))


def lemma_1_3_cases(n: int, degree: int, d: int, order: TermOrder):
    """All (m, q) with m sigma-standard and q_i <= m_i componentwise, in R_degree."""
    from itertools import combinations, product

    monos = order.sorted(mono.monomials_of_degree(n, degree))
    below = {m: [q for q in monos if order.compare(q, m) != GREATER] for m in monos}
    for m in combinations(monos, d):
        for q in product(*(below[x] for x in m)):
            yield m, q


def exhaustive_lemma_1_3(n: int, degree: int, d: int, order: TermOrder) -> tuple[int, int]:
    """(cases, failures) over every dominated pair."""
    cases = failures = 0
    for m, q in lemma_1_3_cases(n, degree, d, order):
        cases += 1
        if not check_lemma_1_3(m, q, order):
            failures += 1
    return cases, failures


def check_lemma_1_4(V: GradedSubspace, order: TermOrder) -> bool:
    """Every exterior monomial in the support of the wedge of V is dominated by the initial one."""
    w = wedge_of_subspace(V, order)
    top = w.initial()
    for n in w.support():
        if any(order.compare(a, b) == LESS for a, b in zip(top, n)):
            return False
    return True


def _lemma_1_5_once(V: GradedSubspace, sigma: TermOrder, tau: TermOrder, seed: int) -> bool:
    W = V.initial_subspace(tau)
    g = LinearMap.random(V.ring, seed)
    sup_w = wedge(W.apply(g).basis, sigma).support()
    sup_v = wedge(V.apply(g).basis, sigma).support()
    return sup_w <= sup_v


def _reseed(seed: int) -> int:
    return random.Random(f"reseed:{seed}").getrandbits(48)


def check_lemma_1_5(V: GradedSubspace, sigma: TermOrder, tau: TermOrder, seed: int) -> bool:
    """Support of g(^W) inside support of g(^V), W = in_tau(V), g random.

    Only claimed for generic g: a failure is retried once with a new seed.
    """
    if _lemma_1_5_once(V, sigma, tau, seed):
        return True
    return _lemma_1_5_once(V, sigma, tau, _reseed(seed))


def generic_initial_subspace(V: GradedSubspace, order: TermOrder, g: LinearMap) -> tuple:
    """Parts of in_sigma(g(^V)), i.e. Gin_sigma(V) for generic g, largest first."""
    return wedge_of_subspace(V.apply(g), order).initial()


def _cor_1_6_once(V, sigma, tau, seed, cross_check) -> bool:
    g = LinearMap.random(V.ring, seed)
    m = generic_initial_subspace(V, sigma, g)
    n = generic_initial_subspace(V.initial_subspace(tau), sigma, g)
    if any(sigma.compare(a, b) == LESS for a, b in zip(m, n)):
        return False
    if tuple(V.apply(g).leading_monomials(sigma)) != m:
        raise AssertionError("wedge initial monomial disagrees with row reduction")
    if cross_check:
        from .gin import gin

        G = gin(list(V.basis), sigma, seed=seed, degree_bound=V.degree).ideal
        if set(G.degree_part(V.degree)) != set(m):
            return False
    return True


def check_cor_1_6(V: GradedSubspace, sigma: TermOrder, tau: TermOrder, seed: int,
                  cross_check: bool = True) -> bool:
    """Gin_sigma(V) dominates Gin_sigma(in_tau(V)) part by part.

    With ``cross_check`` the degree-i piece of the ideal-level generic initial
    ideal must agree with the wedge computation.
    """
    if _cor_1_6_once(V, sigma, tau, seed, cross_check):
        return True
    return _cor_1_6_once(V, sigma, tau, _reseed(seed), cross_check)


# -- random instances -----------------------------------------------------------

def random_order(n: int, rng: random.Random) -> TermOrder:
    kind = rng.choice(["lex", "degrevlex", "weight", "perm-lex", "perm-degrevlex"])
    if kind == "lex":
        return Lex()
    if kind == "degrevlex":
        return DegRevLex()
    if kind == "weight":
        return WeightOrder(tuple(rng.randint(1, 9) for _ in range(n)))
    perm = list(range(n))
    rng.shuffle(perm)
    return Permuted(Lex() if kind == "perm-lex" else DegRevLex(), tuple(perm))


def random_subspace(ring: Ring, degree: int, dim: int, rng: random.Random,
                    max_terms: int | None = None) -> GradedSubspace:
    monos = mono.monomials_of_degree(ring.n, degree)
    if dim > len(monos):
        raise ValueError(f"R_{degree} has dimension {len(monos)} < {dim}")
    F = ring.field
    while True:
        basis = []
        for _ in range(dim):
            k = rng.randint(1, max_terms or len(monos))
            chosen = rng.sample(monos, min(k, len(monos)))
            basis.append(Polynomial(ring, {m: F.random_element(rng, nonzero=True) for m in chosen}))
        try:
            return GradedSubspace(basis)
        except ValueError:
            continue


@dataclass(frozen=True)
class ExteriorInstance:
    V: GradedSubspace
    sigma: TermOrder
    tau: TermOrder
    seed: int


def random_instance(rng: random.Random, max_vars: int = 4, max_degree: int = 3, max_dim: int = 4,
                    characteristic: int = 32003) -> ExteriorInstance:
    n = rng.randint(2, max_vars)
    ring = Ring.standard(n, characteristic)
    i = rng.randint(1, max_degree)
    d = rng.randint(1, min(max_dim, mono.count_of_degree(n, i)))
    V = random_subspace(ring, i, d, rng, max_terms=4)
    return ExteriorInstance(V, random_order(n, rng), random_order(n, rng), rng.getrandbits(32))
