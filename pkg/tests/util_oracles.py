"""Test-side oracles and random generators, independent of the library paths
they check: naive dict-based polynomial arithmetic and a dense Gaussian
elimination for ranks.
"""

from __future__ import annotations

import random
from fractions import Fraction

from almoststretched import BadSubstitutionError, Series, Substitution


def naive_mul(a: dict, b: dict, N: int) -> dict:
    """Truncated product of exponent-dict polynomials, written from scratch."""
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            if sum(e) > N:
                continue
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def all_monomials(h: int, max_deg: int) -> list[tuple]:
    out = [()]
    for _ in range(h):
        out = [e + (k,) for e in out for k in range(max_deg + 1)]
    return [e for e in out if sum(e) <= max_deg]


def dense_rank(rows: list[dict], columns: list[tuple]) -> int:
    """Rank over Q by dense elimination; no echelon bookkeeping shared with
    the library."""
    index = {e: i for i, e in enumerate(columns)}
    mat = []
    for r in rows:
        vec = [Fraction(0)] * len(columns)
        for e, c in r.items():
            vec[index[e]] = c
        mat.append(vec)
    rank = 0
    col = 0
    n = len(columns)
    while col < n and rank < len(mat):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def ideal_rank_oracle(gens: list[Series], h: int, N: int) -> int:
    """Dimension of the ideal span, via naive products and dense rank."""
    monos = all_monomials(h, N)
    rows = []
    for g in gens:
        gd = dict(g.coeffs)
        for m in monos:
            row = naive_mul(gd, {m: Fraction(1)}, N)
            if row:
                rows.append(row)
    return dense_rank(rows, monos)


def rand_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))


def rand_series(h: int, N: int, rng: random.Random, terms: int = 4, unit: bool = False) -> Series:
    f = Series.constant(h, N, rand_coeff(rng)) if unit else Series.zero(h, N)
    for _ in range(terms):
        e = [0] * h
        for _ in range(rng.randrange(1, N + 1)):
            e[rng.randrange(h)] += 1
        if sum(e) > N:
            continue
        f = f + Series.monomial(h, N, e, rand_coeff(rng))
    return f


def rand_substitution(h: int, N: int, rng: random.Random, quadratic: bool = True) -> Substitution:
    """Random change of variables: small integer linear part plus an optional
    sparse quadratic tail; resamples until the linear part is invertible."""
    while True:
        targets = []
        for _ in range(h):
            f = Series.zero(h, N)
            for j in range(1, h + 1):
                f = f + rng.choice([-2, -1, 0, 1, 2, 3]) * Series.variable(h, N, j)
            if quadratic:
                for _ in range(rng.randrange(3)):
                    e = [0] * h
                    e[rng.randrange(h)] += 1
                    e[rng.randrange(h)] += 1
                    f = f + Series.monomial(h, N, e, rng.choice([-1, 1, 2]))
            targets.append(f)
        try:
            return Substitution(targets)
        except BadSubstitutionError:
            continue
