"""Shared random generators for the property tests (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from ordercert.exactpl import PLCocycle, PLMap


def random_rational(rng: random.Random, max_den: int = 12, bound: int = 3) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_point(rng: random.Random, max_den: int = 12, bound: int = 3):
    return (random_rational(rng, max_den, bound), random_rational(rng, max_den, bound))


def random_plmap(rng: random.Random, max_points: int = 4, max_den: int = 8) -> PLMap:
    k = rng.randint(1, max_points)
    xs: set[Fraction] = set()
    while len(xs) < k:
        q = rng.randint(1, max_den)
        xs.add(Fraction(rng.randint(0, q - 1), q))
    xs_sorted = sorted(xs)
    y0 = random_rational(rng, max_den)
    increments = [Fraction(rng.randint(1, 6), rng.randint(1, 6)) for _ in range(k - 1)]
    total = sum(increments, Fraction(0))
    if total:
        # scale so the rises fit strictly inside one period
        scale = Fraction(rng.randint(1, 9), 10) / total
        increments = [u * scale for u in increments]
    ys = [y0]
    for u in increments:
        ys.append(ys[-1] + u)
    return PLMap.from_points(list(zip(xs_sorted, ys)))


def random_cocycle(rng: random.Random, max_points: int = 4, max_den: int = 8) -> PLCocycle:
    k = rng.randint(1, max_points)
    xs: set[Fraction] = set()
    while len(xs) < k:
        q = rng.randint(1, max_den)
        xs.add(Fraction(rng.randint(0, q - 1), q))
    return PLCocycle.from_points(
        [(x, random_rational(rng, max_den)) for x in sorted(xs)]
    )


def random_skew_word(rng: random.Random, max_len: int = 12, symbols: str = "abcd"):
    length = rng.randint(1, max_len)
    out: list[tuple[str, int]] = []
    for _ in range(length):
        sym = rng.choice(symbols)
        exp = rng.choice((1, -1))
        if out and out[-1][0] == sym:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (sym, merged)
        else:
            out.append((sym, exp))
    return out
