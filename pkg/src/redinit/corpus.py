"""Seeded random corpora of homogeneous ideals."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import monomial as mono
from .field import DEFAULT_CHARACTERISTIC, is_prime
from .parser import format_ideal
from .poly import Polynomial, Ring


@dataclass(frozen=True)
class CorpusSpec:
    count: int = 100
    seed: int = 0
    n_vars: int = 5
    max_gens: int = 5
    max_degree: int = 4
    max_terms: int = 4
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        for name in ("count", "n_vars", "max_gens", "max_degree", "max_terms"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"characteristic {c} is neither 0 nor prime")


def _coefficient(rng: random.Random, characteristic: int):
    if characteristic:
        return rng.randrange(1, characteristic)
    num = rng.choice([k for k in range(-9, 10) if k])
    return Fraction(num, rng.randint(1, 3))


def random_form(ring: Ring, degree: int, terms: int, rng: random.Random) -> Polynomial:
    monos = mono.monomials_of_degree(ring.n, degree)
    chosen = rng.sample(monos, min(terms, len(monos)))
    return Polynomial(ring, {m: _coefficient(rng, ring.characteristic) for m in chosen})


def random_ideal(spec: CorpusSpec, index: int) -> tuple[Ring, list[Polynomial]]:
    """The ``index``-th ideal of the corpus; depends only on (spec, index)."""
    rng = random.Random(f"corpus:{spec.seed}:{index}")
    n = rng.randint(min(2, spec.n_vars), spec.n_vars)
    ring = Ring.standard(n, spec.characteristic)
    gens = []
    for _ in range(rng.randint(1, spec.max_gens)):
        d = rng.randint(1, spec.max_degree)
        gens.append(random_form(ring, d, rng.randint(1, spec.max_terms), rng))
    return ring, gens


def generate_corpus(spec: CorpusSpec) -> list[tuple[Ring, list[Polynomial]]]:
    return [random_ideal(spec, i) for i in range(spec.count)]


def write_corpus(spec: CorpusSpec, directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    width = len(str(spec.count - 1))
    for i, (ring, gens) in enumerate(generate_corpus(spec)):
        path = out / f"ideal-{i:0{width}d}.ideal"
        path.write_text(format_ideal(ring, gens), encoding="utf-8")
        paths.append(path)
    manifest = {"spec": asdict(spec), "files": [p.name for p in paths]}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return paths
