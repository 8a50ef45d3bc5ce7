"""Shared helpers: seeded rational samplers and independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from hyptile import ratlin


def rand_fraction(rng: random.Random, lo=-60, hi=60, max_den=10) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_vec(rng: random.Random, n: int, **kw) -> tuple[Fraction, ...]:
    return tuple(rand_fraction(rng, **kw) for _ in range(n))


def rand_int_matrix(rng: random.Random, n: int, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def rand_nonsingular(rng: random.Random, n: int, lo=-9, hi=9):
    while True:
        rows = rand_int_matrix(rng, n, lo, hi)
        if ratlin.det(ratlin.mat(rows)) != 0:
            return rows


def rand_unimodular(rng: random.Random, n: int):
    """Random determinant +-1 integer matrix: L @ U with +-1 diagonals."""
    lower = [[0] * n for _ in range(n)]
    upper = [[0] * n for _ in range(n)]
    for i in range(n):
        lower[i][i] = rng.choice((1, -1))
        upper[i][i] = rng.choice((1, -1))
        for j in range(i):
            lower[i][j] = rng.randint(-3, 3)
            upper[j][i] = rng.randint(-3, 3)
    return [
        [sum(lower[i][k] * upper[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def det_cofactor(m):
    """Independent determinant oracle: first-row cofactor expansion."""
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        e = Fraction(m[0][j])
        if e:
            minor = [list(row[:j]) + list(row[j + 1 :]) for row in m[1:]]
            term = e * det_cofactor(minor)
            total += term if j % 2 == 0 else -term
    return total


def rand_domain_point(rng: random.Random, params, max_den=12):
    """Uniform-kind random rational point inside the fundamental domain."""

    def below(hi: Fraction) -> Fraction:
        den = rng.randint(1, max_den) * hi.denominator
        return Fraction(rng.randint(0, int(hi * den) - 1), den)

    p, q, n = params.p, params.q, params.n
    if rng.random() < 0.5:
        return tuple(below(q) for _ in range(n))
    return tuple(below(p) for _ in range(n - 1)) + (q + below(p),)


def step1_last_coordinate(y, big, small):
    """Independent simulation of reduction phase 1; returns its last coordinate."""
    y = list(y)
    for i in range(len(y) - 1):
        t = y[i] // big
        y[i] -= t * big
        y[i + 1] += t * small
    return y[-1]
