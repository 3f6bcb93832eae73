"""Generic initial ideals, generic sections and reduction numbers.

Genericity is simulated by seeded random changes of coordinates.  A generic
initial ideal is accepted once ``trials`` independent coordinate changes
give the same initial ideal; otherwise a fresh batch of seeds is tried, up
to ``RETRY_CAP`` batches.
"""

from __future__ import annotations

import logging
import random
from collections import OrderedDict
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import monomial as mono
from .grobner import GroebnerEngine, eliminate, initial_ideal, initial_ideal_weight
from .linear_map import LinearMap
from .monomial_ideals import (
    HilbertFunction,
    MonomialIdeal,
    add_coordinate_subspace,
    hilbert_function,
    is_strongly_stable,
    krull_dimension,
    lex_segment_ideal,
)
from .orders import DegRevLex, TermOrder, WeightOrder
from .poly import Polynomial, Ring, common_ring

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 2
RETRY_CAP = 3

_DRL = DegRevLex()


class GinError(RuntimeError):
    pass


def _ring_of(gens, ring):
    if ring is not None:
        return ring
    return common_ring(gens)


def random_change_of_coordinates(ring: Ring, seed: int) -> LinearMap:
    return LinearMap.random(ring, seed)


def random_linear_forms(ring: Ring, count: int, seed: int) -> list[Polynomial]:
    rng = random.Random(seed)
    F = ring.field
    forms = []
    for _ in range(count):
        while True:
            coeffs = [F.random_element(rng) for _ in range(ring.n)]
            if any(coeffs):
                break
        forms.append(Polynomial(ring, {mono.variable(ring.n, i): c for i, c in enumerate(coeffs)}))
    return forms


def trial_seeds(seed: int, batch: int, trials: int) -> list[int]:
    rng = random.Random(f"gin:{seed}:{batch}")
    return [rng.getrandbits(48) for _ in range(trials)]


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    order: TermOrder
    seeds: tuple[int, ...]
    stable: bool
    degree_bound: float = float("inf")


class _GinState:
    """Resumable Groebner computations of g(I) for a batch of random g."""

    def __init__(self, ring, gens, order, trials, seed):
        self.ring = ring
        self.gens = list(gens)
        self.order = order
        self.trials = trials
        self.seed = seed
        self.batch = -1
        self.disagreed = False
        self._new_batch()

    def _new_batch(self):
        self.batch += 1
        if self.batch >= RETRY_CAP:
            raise GinError("generic initial ideals disagree across "
                           f"{RETRY_CAP} batches of seeds: probable non-genericity "
                           "(field too small or unlucky seeds)")
        self.seeds = trial_seeds(self.seed, self.batch, self.trials)
        self.engines = []
        for s in self.seeds:
            g = random_change_of_coordinates(self.ring, s)
            self.engines.append(GroebnerEngine(self.ring, g.apply_all(self.gens), self.order))

    def result(self, bound) -> GinResult:
        while True:
            ideals = []
            for eng in self.engines:
                eng.run(bound)
                ideals.append(MonomialIdeal(self.ring, eng.leading_monomials()))
            if all(I == ideals[0] for I in ideals):
                return GinResult(ideals[0], self.order, tuple(self.seeds), not self.disagreed,
                                 float("inf") if bound is None else bound)
            log.info("gin trials disagree (seed %s, batch %d); reseeding", self.seed, self.batch)
            self.disagreed = True
            self._new_batch()


_STATES: OrderedDict = OrderedDict()
_STATE_CACHE_SIZE = 64


def _state(ring, gens, order, trials, seed) -> _GinState:
    key = (ring, tuple(gens), order, trials, seed)
    st = _STATES.get(key)
    if st is None:
        st = _GinState(ring, gens, order, trials, seed)
        _STATES[key] = st
        while len(_STATES) > _STATE_CACHE_SIZE:
            _STATES.popitem(last=False)
    else:
        _STATES.move_to_end(key)
    return st


def clear_cache() -> None:
    _STATES.clear()


def gin(gens: Sequence[Polynomial], order: TermOrder = _DRL, trials: int = DEFAULT_TRIALS, seed: int = 0,
        degree_bound: int | None = None, ring: Ring | None = None) -> GinResult:
    """Generic initial ideal of (gens), correct up to ``degree_bound`` if given."""
    if trials < 2:
        raise ValueError("gin needs at least two trials to judge genericity")
    ring = _ring_of(gens, ring)
    gens = [g for g in gens if not g.is_zero()]
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("gin needs homogeneous generators")
    if not gens:
        return GinResult(MonomialIdeal(ring, []), order, (), True)
    return _state(ring, gens, order, trials, seed).result(degree_bound)


def generic_section_hilbert(gens: Sequence[Polynomial], p: int, bound: int, seed: int = 0,
                            trials: int = DEFAULT_TRIALS, ring: Ring | None = None) -> HilbertFunction:
    """HF of R/(I + p generic linear forms) read off Gin_RL(I) + (x_{n-p+1}, ..., x_n)."""
    ring = _ring_of(gens, ring)
    if not 0 <= p <= ring.n:
        raise ValueError(f"p = {p} outside [0, {ring.n}]")
    G = gin(gens, _DRL, trials, seed, bound, ring).ideal
    return hilbert_function(add_coordinate_subspace(G, p), bound)


def direct_section_hilbert(gens: Sequence[Polynomial], p: int, seed: int, bound: int,
                           ring: Ring | None = None) -> HilbertFunction:
    """HF of R/(I + (y_1..y_p)) for seeded random linear forms, from a
    Groebner basis of the sum (no generic initial ideal involved)."""
    ring = _ring_of(gens, ring)
    if not 0 <= p <= ring.n:
        raise ValueError(f"p = {p} outside [0, {ring.n}]")
    forms = random_linear_forms(ring, p, seed)
    inn = initial_ideal(forms + list(gens), _DRL, bound, ring=ring)
    return hilbert_function(inn, bound)


def krull_dim(gens: Sequence[Polynomial], ring: Ring | None = None) -> int:
    """dim R/I from the DegRevLex initial ideal; -1 for the unit ideal."""
    ring = _ring_of(gens, ring)
    return krull_dimension(initial_ideal(list(gens), _DRL, ring=ring))


def _max_degree(gens) -> int:
    return max((g.degree() for g in gens), default=1) or 1


def reduction_number(gens: Sequence[Polynomial], bound: int | None = None, seed: int = 0,
                     trials: int = DEFAULT_TRIALS, ring: Ring | None = None) -> int:
    """r(R/I): last degree where the HF of R/I modulo dim R/I generic linear forms is nonzero.

    The section is Artinian, so its HF vanishes eventually.  Degrees are
    explored one at a time up to ``bound`` (default n * max generator
    degree), then up to twice that, before giving up.
    """
    ring = _ring_of(gens, ring)
    gens = [g for g in gens if not g.is_zero()]
    d = krull_dim(gens, ring) if gens else ring.n
    if d < 0:
        raise ValueError("reduction number of the zero ring (unit ideal)")
    if not gens:
        return 0
    cap = bound if bound is not None else ring.n * _max_degree(gens)
    for D in range(1, 2 * cap + 1):
        hf = generic_section_hilbert(gens, d, D, seed, trials, ring)
        if hf[D] == 0:
            last = hf.last_nonzero()
            return 0 if last is None else last
    raise ValueError(f"section Hilbert function still nonzero at degree {2 * cap}; pass a larger bound")


def reduction_number_stable(ideal: MonomialIdeal) -> int:
    """Least k with x_{n-d}^{k+1} in I, for strongly stable I of dimension d."""
    if not is_strongly_stable(ideal):
        raise ValueError(f"{ideal} is not strongly stable")
    d = krull_dimension(ideal)
    if d < 0:
        raise ValueError("reduction number of the zero ring (unit ideal)")
    n = ideal.n
    if d == n:
        return 0
    i = n - d - 1
    for k in range(ideal.max_degree() + 1):
        if ideal.contains(mono.variable(n, i, k + 1)):
            return k
    raise AssertionError("strongly stable ideal of this dimension must contain a power of x_{n-d}")


# -- comparisons ------------------------------------------------------------

@dataclass(frozen=True)
class TheoremReport:
    """Degreewise comparison HF(R/I + J) <= HF(R/in(I) + J) for p generic linear forms."""

    p: int
    hf_lhs: HilbertFunction
    hf_rhs: HilbertFunction
    order: str = ""

    @property
    def bound(self) -> int:
        return self.hf_lhs.bound

    @property
    def per_degree(self) -> list[bool]:
        return [a <= b for a, b in zip(self.hf_lhs, self.hf_rhs)]

    @property
    def holds(self) -> bool:
        return all(self.per_degree)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "holds": self.holds,
            "perDegree": [{"j": j, "lhs": a, "rhs": b} for j, (a, b) in enumerate(zip(self.hf_lhs, self.hf_rhs))],
        }

    @classmethod
    def from_json(cls, data) -> TheoremReport:
        rows = sorted(data["perDegree"], key=lambda r: r["j"])
        bound = len(rows) - 1
        return cls(int(data["p"]), HilbertFunction(bound, [r["lhs"] for r in rows]),
                   HilbertFunction(bound, [r["rhs"] for r in rows]))


def initial_generators(gens: Sequence[Polynomial], tau, bound: int | None = None,
                       ring: Ring | None = None) -> list[Polynomial]:
    """Generators of in_tau(I); ``tau`` is a TermOrder or a positive weight vector."""
    ring = _ring_of(gens, ring)
    if isinstance(tau, TermOrder) and not isinstance(tau, WeightOrder):
        return initial_ideal(list(gens), tau, bound, ring=ring).to_polynomials()
    weights = tau.weights if isinstance(tau, WeightOrder) else tuple(tau)
    if not gens:
        return []
    return initial_ideal_weight(list(gens), weights, bound)


def check_theorem_1_1(gens: Sequence[Polynomial], tau, p: int, bound: int, seed: int = 0,
                      trials: int = DEFAULT_TRIALS, ring: Ring | None = None) -> TheoremReport:
    """Compare HF(R/I + J) with HF(R/in_tau(I) + J), J = p generic linear forms.

    A ``WeightOrder`` or a plain weight vector uses the weight initial ideal,
    which need not be monomial.
    """
    ring = _ring_of(gens, ring)
    in_gens = initial_generators(gens, tau, bound, ring)
    lhs = generic_section_hilbert(gens, p, bound, seed, trials, ring)
    rhs = generic_section_hilbert(in_gens, p, bound, seed, trials, ring)
    label = str(tau) if isinstance(tau, TermOrder) else "weight:" + ",".join(map(str, tau))
    return TheoremReport(p, lhs, rhs, label)


class ReductionComparison(NamedTuple):
    r_ideal: int
    r_other: int
    holds: bool


def vasconcelos_check(gens: Sequence[Polynomial], tau, bound: int | None = None, seed: int = 0,
                      trials: int = DEFAULT_TRIALS, ring: Ring | None = None) -> ReductionComparison:
    """r(R/I) <= r(R/in_tau(I))."""
    ring = _ring_of(gens, ring)
    r_i = reduction_number(gens, bound, seed, trials, ring)
    r_in = reduction_number(initial_generators(gens, tau, None, ring), bound, seed, trials, ring)
    return ReductionComparison(r_i, r_in, r_i <= r_in)


def lex_segment_of(gens: Sequence[Polynomial], bound: int | None = None, ring: Ring | None = None):
    """(I^Lex truncated at the bound, bound used, HF of R/I).

    Default bound: top degree of a DegRevLex Groebner basis plus n.
    """
    ring = _ring_of(gens, ring)
    inn = initial_ideal(list(gens), _DRL, ring=ring) if gens else MonomialIdeal(ring, [])
    if bound is None:
        bound = inn.max_degree() + ring.n
    hf = hilbert_function(inn, bound)
    dims = [mono.count_of_degree(ring.n, j) - hf[j] for j in range(bound + 1)]
    return lex_segment_ideal(ring, dims), bound, hf


def lex_reduction_number(gens: Sequence[Polynomial], bound: int | None = None,
                         ring: Ring | None = None) -> tuple[int, MonomialIdeal]:
    """r(R/I^Lex) from the lex segment, extending the bound until the pure
    power of x_{n-d} shows up."""
    ring = _ring_of(gens, ring)
    d = krull_dim(gens, ring) if gens else ring.n
    if d < 0:
        raise ValueError("reduction number of the zero ring (unit ideal)")
    L, D, _ = lex_segment_of(gens, bound, ring)
    if d == ring.n:
        return 0, L
    x = ring.n - d - 1
    while not any(L.contains(mono.variable(ring.n, x, k)) for k in range(1, D + 1)):
        D *= 2
        L, D, _ = lex_segment_of(gens, D, ring)
    return reduction_number_stable(L), L


def lex_reduction_check(gens: Sequence[Polynomial], bound: int | None = None, seed: int = 0,
                        trials: int = DEFAULT_TRIALS, ring: Ring | None = None) -> ReductionComparison:
    """r(R/I) <= r(R/I^Lex).  Only asserted by the theory in characteristic 0."""
    ring = _ring_of(gens, ring)
    if ring.characteristic:
        log.info("characteristic %d: the lex comparison is only known in characteristic 0",
                 ring.characteristic)
    r_i = reduction_number(gens, None, seed, trials, ring)
    r_lex, _ = lex_reduction_number(gens, bound, ring)
    return ReductionComparison(r_i, r_lex, r_i <= r_lex)


# -- analytic spread ------------------------------------------------------------

def _fresh_names(ring: Ring, prefix: str, count: int) -> list[str]:
    names, k = [], 1
    while len(names) < count:
        cand = f"{prefix}{k}"
        if cand not in ring.names:
            names.append(cand)
        k += 1
    return names


def fiber_relations(gens: Sequence[Polynomial], ring: Ring | None = None) -> tuple[Ring, list[Polynomial]]:
    """Presentation K[T_1..T_s]/P of the fiber ring of (gens).

    Equigenerated input uses the subalgebra K[f_1..f_s]; otherwise the Rees
    algebra is computed by eliminating t from (T_i - t f_i) and the relations
    are reduced modulo the x-variables.
    """
    ring = _ring_of(gens, ring)
    gens = [g for g in gens if not g.is_zero()]
    s, n = len(gens), ring.n
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("analytic spread needs homogeneous generators")
    t_names = _fresh_names(ring, "T", s)
    t_ring = Ring(tuple(t_names), ring.characteristic)
    degrees = {g.degree() for g in gens}
    if len(degrees) == 1:
        big = ring.extend(t_names)
        rel = [big.var(n + i) - g.embed(big, list(range(n))) for i, g in enumerate(gens)]
        kernel = eliminate(rel, range(n, n + s))
        return t_ring, [_restrict(k, t_ring, n) for k in kernel]
    t_name = _fresh_names(ring.extend(t_names), "t", 1)[0]
    big = Ring((t_name,) + ring.names + tuple(t_names), ring.characteristic)
    t = big.var(0)
    shift = list(range(1, n + 1))
    rel = [big.var(1 + n + i) - t * g.embed(big, shift) for i, g in enumerate(gens)]
    rees = eliminate(rel, range(1, 1 + n + s))
    out = []
    for k in rees:
        # set x = 0
        terms = {m: c for m, c in k.terms.items() if not any(m[1:1 + n])}
        if terms:
            out.append(Polynomial(t_ring, {m[1 + n:]: c for m, c in terms.items()}, normalized=True))
    return t_ring, out


def _restrict(f: Polynomial, target: Ring, offset: int) -> Polynomial:
    return Polynomial(target, {m[offset:]: c for m, c in f.terms.items()}, normalized=True)


def analytic_spread(gens: Sequence[Polynomial], ring: Ring | None = None) -> int:
    """Krull dimension of the fiber ring of the homogeneous ideal (gens)."""
    ring = _ring_of(gens, ring)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    t_ring, rel = fiber_relations(gens, ring)
    if not rel:
        return t_ring.n
    return krull_dimension(initial_ideal(rel, _DRL, ring=t_ring))

