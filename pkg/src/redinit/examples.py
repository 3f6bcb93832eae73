"""Bundled example ideals and the numbers they are expected to reproduce."""

from __future__ import annotations

import itertools
import random
from importlib import resources
from pathlib import Path

from .corpus import random_form
from .gin import analytic_spread, krull_dim, lex_reduction_number, random_linear_forms, reduction_number
from .grobner import initial_ideal
from .monomial_ideals import minimal_generator_counts, polarize, MonomialIdeal
from .orders import DegRevLex, Lex, Permuted, TermOrder
from .parser import load_ideal
from .poly import Polynomial, Ring

BUNDLED = (
    "remark18.ideal",
    "remark19-symmetric.ideal",
    "remark19-quadrics.ideal",
    "sec2-I.ideal",
    "sec2-I1.ideal",
    "sec2-I-corrected.ideal",
    "sec2-I1-corrected.ideal",
)

QUADRIC_SEED = 5
QUADRIC_TERMS = 6


def data_path(name: str) -> Path:
    return Path(str(resources.files("redinit") / "data" / name))


def resolve(path: str) -> Path:
    """A real file wins; otherwise fall back to a bundled example of that name."""
    p = Path(path)
    if p.exists():
        return p
    for cand in (path, path + ".ideal"):
        if cand in BUNDLED:
            return data_path(cand)
    if path == "sec2.ideal":
        return data_path("sec2-I.ideal")
    return p


def load_bundled(name: str, characteristic: int | None = None):
    return load_ideal(resolve(name), characteristic)


# -- generator counts after a linear section -----------------------------------

def linear_section_counts(seed: int = 0, characteristic: int = 32003) -> tuple[int, int]:
    """Degree-2 minimal generator counts of I + (L) and in_lex(I) + (L)."""
    ring, gens = load_bundled("remark18.ideal", characteristic)
    L = random_linear_forms(ring, 1, seed)[0]
    lex = initial_ideal(gens, Lex()).to_polynomials()
    return (minimal_generator_counts(gens + [L], 3)[2],
            minimal_generator_counts(lex + [L], 3)[2])


# -- analytic spread ------------------------------------------------------------

def symmetric_matrix(ring: Ring):
    a, b, c, d, e, f = ring.gens()
    return [[a, b, c], [b, d, e], [c, e, f]]


def symmetric_minors(ring: Ring | None = None):
    """[(rows, cols, minor, diagonal product)] for all 2x2 minors, duplicates kept."""
    ring = ring or Ring(("a", "b", "c", "d", "e", "f"))
    M = symmetric_matrix(ring)
    out = []
    for r in itertools.combinations(range(3), 2):
        for s in itertools.combinations(range(3), 2):
            diag = M[r[0]][s[0]] * M[r[1]][s[1]]
            minor = diag - M[r[0]][s[1]] * M[r[1]][s[0]]
            out.append((r, s, minor, diag))
    return out


def is_diagonal_order(order: TermOrder, ring: Ring | None = None) -> bool:
    """Does the leading term of every 2-minor equal its main-diagonal product?"""
    for _, _, minor, diag in symmetric_minors(ring):
        if minor.is_zero():
            continue
        m, c = minor.leading_term(order)
        if Polynomial(minor.ring, {m: c}) != diag:
            return False
    return True


def find_diagonal_order(ring: Ring | None = None) -> TermOrder:
    """First lex or degrevlex order, over variable permutations, that is diagonal."""
    for perm in itertools.permutations(range(6)):
        for base in (Lex(), DegRevLex()):
            order = base if perm == tuple(range(6)) else Permuted(base, perm)
            if is_diagonal_order(order, ring):
                return order
    raise ValueError("no diagonal order among permuted lex/degrevlex")


def seeded_quadrics(seed: int = QUADRIC_SEED, characteristic: int = 32003):
    ring = Ring(("x", "y", "z"), characteristic)
    rng = random.Random(seed)
    return ring, [random_form(ring, 2, QUADRIC_TERMS, rng) for _ in range(2)]


def symmetric_minors_spread(characteristic: int = 32003) -> dict:
    ring, gens = load_bundled("remark19-symmetric.ideal", characteristic)
    tau = find_diagonal_order(ring)
    inn = initial_ideal(gens, tau)
    return {"order": str(tau), "l": analytic_spread(gens),
            "l_in": analytic_spread(inn.to_polynomials()), "initial": str(inn)}


def quadrics_spread(seed: int | None = None, characteristic: int = 32003) -> dict:
    if seed is None:
        ring, gens = load_bundled("remark19-quadrics.ideal", characteristic)
    else:
        ring, gens = seeded_quadrics(seed, characteristic)
    inn = initial_ideal(gens, Lex())
    return {"l": analytic_spread(gens), "l_in": analytic_spread(inn.to_polynomials()),
            "initial": str(inn)}


# -- reduction numbers under polarization ---------------------------------------

def polarization_numbers(name: str = "sec2-I.ideal", polarized: str = "sec2-I1.ideal",
                     seed: int = 0, characteristic: int = 32003) -> dict:
    """r(R/I), r of the full and x4-polarizations, r(R/I^Lex), r(A), r(A/zA)."""
    ring, gens = load_bundled(name, characteristic)
    I = MonomialIdeal(ring, [g.leading_monomial(Lex()) for g in gens])
    J, _ = polarize(I)
    I4, _ = polarize(I, [ring.names[-1]])
    s_ring, I1 = load_bundled(polarized, characteristic)
    if MonomialIdeal(s_ring, [g.leading_monomial(Lex()) for g in I1]).generators != I4.generators:
        raise ValueError(f"{polarized} is not the x4-polarization of {name}")
    z = s_ring.var(3) - s_ring.var(4)
    return {
        "r": reduction_number(gens, seed=seed),
        "r_full_polarization": reduction_number(J.to_polynomials(), seed=seed),
        "r_x4_polarization": reduction_number(I1, seed=seed),
        "r_lex": lex_reduction_number(gens)[0],
        "r_A": reduction_number(I1, seed=seed),
        "r_A_mod_z": reduction_number(I1 + [z], seed=seed),
        "dim_A": krull_dim(I1),
        "dim_A_mod_z": krull_dim(I1 + [z]),
    }


# expected values for the bundled examples
EXPECTED = {
    "linear_section": {"counts": (3, 2)},
    "symmetric_minors": {"l": 6, "l_in": 5},
    "quadrics": {"l": 2, "l_in": 3},
    "polarization": {"r": 4, "r_full_polarization": 3, "r_x4_polarization": 3, "r_lex": 5, "r_A": 3, "r_A_mod_z": 4},
}


def reproduce_all(seed: int = 0, characteristic: int = 32003) -> list[dict]:
    """Every example number with its expected value; one record per check."""
    rows = []

    def add(name, got, want):
        rows.append({"check": name, "got": got, "expected": want, "ok": got == want})

    add("remark18.ideal degree-2 generator counts", list(linear_section_counts(seed, characteristic)), [3, 2])
    sym = symmetric_minors_spread(characteristic)
    add("remark19-symmetric.ideal l(I)", sym["l"], 6)
    add(f"remark19-symmetric.ideal l(in_tau(I)), tau={sym['order']}", sym["l_in"], 5)
    for s in (None, QUADRIC_SEED + 1):
        q = quadrics_spread(s, characteristic)
        tag = "bundled" if s is None else f"seed {s}"
        add(f"remark19-quadrics ({tag}) l(I)", q["l"], 2)
        add(f"remark19-quadrics ({tag}) l(in_lex(I))", q["l_in"], 3)
    for name, pol in (("sec2-I.ideal", "sec2-I1.ideal"), ("sec2-I-corrected.ideal", "sec2-I1-corrected.ideal")):
        got = polarization_numbers(name, pol, seed, characteristic)
        for key, want in EXPECTED["polarization"].items():
            add(f"{name} {key}", got[key], want)
    return rows
