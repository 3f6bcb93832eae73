"""Coefficient fields: prime fields F_p and the rationals."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_CHARACTERISTIC = 32003

# bound for random rationals used as "generic" coefficients in characteristic 0
RATIONAL_SAMPLE_BOUND = 1000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """F_p for a prime ``characteristic`` p, or Q when it is 0.

    Elements of F_p are plain ints in ``[0, p)``.  Rationals are ints when
    integral and :class:`fractions.Fraction` otherwise.
    """

    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or p < 0 or (p and not is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p!r}")

    def __call__(self, value) -> int | Fraction:
        p = self.characteristic
        if isinstance(value, Fraction):
            if p:
                den = value.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
                return value.numerator * pow(den, p - 2, p) % p
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, int):
            return value % p if p else value
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(a, p - 2, p)
        return self(Fraction(1) / a)

    def random_element(self, rng: random.Random, nonzero: bool = False):
        p = self.characteristic
        while True:
            if p:
                a = rng.randrange(p)
            else:
                a = rng.randint(-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND)
            if a or not nonzero:
                return a

    def symmetric(self, a):
        """Representative of ``a`` closest to zero (for display)."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a

    def __str__(self):
        return f"GF({self.characteristic})" if self.characteristic else "QQ"
