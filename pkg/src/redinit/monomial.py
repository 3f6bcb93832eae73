"""Monomials as exponent tuples.

A monomial of ``K[x_1..x_n]`` is a tuple of ``n`` non-negative ints; the unit
monomial is all zeros.  Everything here is a plain function on tuples so the
hot loops in the Groebner code stay cheap.
"""

from __future__ import annotations

from functools import lru_cache
from operator import add, sub

Monomial = tuple


def degree(m: Monomial) -> int:
    return sum(m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(map(sub, a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(min, a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int, power: int = 1) -> Monomial:
    e = [0] * n
    e[i] = power
    return tuple(e)


def support(m: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def max_variable(m: Monomial) -> int:
    """Largest 1-based index i with x_i dividing m."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    raise ValueError("the unit monomial involves no variable")


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n variables, lex-descending."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


def count_of_degree(n: int, d: int) -> int:
    from math import comb

    if d < 0:
        return 0
    if n == 0:
        return int(d == 0)
    return comb(n + d - 1, n - 1)


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
