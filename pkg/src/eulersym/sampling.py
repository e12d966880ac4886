"""Seeded rational sampling used by every randomized check.

All draws go through random.Random so a seed pins the whole stream.
Default height: numerators in [-20, 20], denominators in [1, 10].
Direction samples are sparse-biased: each coordinate is zeroed with
probability 1/3 so degenerate strata (base loci, coordinate walls) are
actually exercised instead of being measure-zero wishful thinking.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

NUM_RANGE = (-20, 20)
DEN_RANGE = (1, 10)


def rational(rng: random.Random, num_range=NUM_RANGE, den_range=DEN_RANGE) -> Fraction:
    return Fraction(rng.randint(*num_range), rng.randint(*den_range))


def nonzero_rational(rng: random.Random, num_range=NUM_RANGE, den_range=DEN_RANGE) -> Fraction:
    while True:
        q = rational(rng, num_range, den_range)
        if q:
            return q


def vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(rational(rng) for _ in range(n))


def nonzero_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    while True:
        v = vector(rng, n)
        if any(v):
            return v


def generic_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Every coordinate nonzero; a stand-in for a general point."""
    return tuple(nonzero_rational(rng) for _ in range(n))


def sparse_direction(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Nonzero vector whose coordinates vanish independently with prob 1/3."""
    while True:
        v = tuple(Fraction(0) if rng.random() < 1 / 3 else nonzero_rational(rng)
                  for _ in range(n))
        if any(v):
            return v


def constrained_direction(rng: random.Random, n: int,
                          zero_at: Sequence[int]) -> tuple[Fraction, ...]:
    """Nonzero vector with the listed coordinates pinned to zero."""
    dead = set(zero_at)
    if len(dead) >= n:
        raise ValueError("cannot zero every coordinate of a nonzero vector")
    while True:
        v = tuple(Fraction(0) if i in dead else rational(rng) for i in range(n))
        if any(v):
            return v
