"""Linear changes of coordinates g: x_i -> sum_j g_ij x_j."""

from __future__ import annotations

import random

from . import linalg
from .poly import Polynomial, Ring


class LinearMap:
    """Invertible graded algebra endomorphism of ``ring``.

    Row i of ``matrix`` is the image of x_i in the basis x_1..x_n.
    Composition follows maps: ``(g @ h)(f) == g(h(f))``.
    """

    __slots__ = ("ring", "matrix", "_images")

    def __init__(self, ring: Ring, matrix):
        F = ring.field
        rows = [tuple(F(x) for x in row) for row in matrix]
        if len(rows) != ring.n or any(len(r) != ring.n for r in rows):
            raise ValueError(f"need an {ring.n}x{ring.n} matrix")
        if not linalg.determinant(rows, F):
            raise ValueError("singular matrix: not a change of coordinates")
        self.ring = ring
        self.matrix = tuple(rows)
        self._images = None

    @classmethod
    def identity(cls, ring: Ring) -> LinearMap:
        n = ring.n
        return cls(ring, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, ring: Ring, perm) -> LinearMap:
        """x_i -> x_{perm[i]}."""
        n = ring.n
        return cls(ring, [[int(perm[i] == j) for j in range(n)] for i in range(n)])

    @classmethod
    def random(cls, ring: Ring, seed: int, max_tries: int = 20) -> LinearMap:
        """Seeded random invertible map; entries uniform in F_p (bounded ints over Q)."""
        rng = random.Random(seed)
        F = ring.field
        n = ring.n
        for _ in range(max_tries):
            rows = [[F.random_element(rng) for _ in range(n)] for _ in range(n)]
            if linalg.determinant(rows, F):
                return cls(ring, rows)
        raise RuntimeError(f"no invertible matrix after {max_tries} draws (seed {seed})")

    def images(self) -> list[Polynomial]:
        if self._images is None:
            n = self.ring.n
            imgs = []
            for row in self.matrix:
                terms = {tuple(int(i == j) for i in range(n)): c for j, c in enumerate(row) if c}
                imgs.append(Polynomial(self.ring, terms, normalized=True))
            self._images = imgs
        return self._images

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial lives in another ring")
        return f.substitute(self.images())

    def apply_all(self, gens):
        return [self(f) for f in gens]

    def __matmul__(self, other: LinearMap) -> LinearMap:
        # g(h(x_i)) = sum_j h_ij g(x_j)  =>  matrix H*G
        return LinearMap(self.ring, linalg.matmul(other.matrix, self.matrix, self.ring.field))

    def inverse(self) -> LinearMap:
        return LinearMap(self.ring, linalg.inverse(self.matrix, self.ring.field))

    def determinant(self):
        return linalg.determinant(self.matrix, self.ring.field)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.ring == other.ring and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.ring, self.matrix))

    def __repr__(self):
        return f"LinearMap({[list(r) for r in self.matrix]})"


def apply_linear_map(g: LinearMap, f: Polynomial) -> Polynomial:
    return g(f)
