"""Partition counts with parts restricted by residue class.

Three independent routes are provided: the unbounded-knapsack table
(:func:`count_restricted_table`), Euler's pentagonal recurrence for the
unrestricted case (:func:`count_unrestricted_pentagonal`), and a generating
function built from the series engine (:func:`restricted_gf`). A brute-force
enumerator (:func:`enumerate_restricted`) serves as an oracle for small n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .series import ProgressionFactorSpec, TruncatedSeries, euler_product, invert_unit, mul, progression_product

ORACLE_BOUND = 60
ORACLE_BOUND_ENV = "PARTITION_ORACLE_BOUND"


class OracleRefusal(ValueError):
    """n is too large for exhaustive enumeration (not the same as a zero count)."""


@dataclass(frozen=True)
class ResidueRestriction:
    """Forbid parts whose residue mod ``modulus`` lies in ``forbidden``.

    Residues are reduced on construction, so ``27 (mod 27)`` is stored as 0.
    """

    modulus: int
    forbidden: frozenset[int] = frozenset()

    def __init__(self, modulus: int, forbidden: Iterable[int] = ()):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "forbidden", frozenset(r % modulus for r in forbidden))

    @classmethod
    def unrestricted(cls) -> ResidueRestriction:
        return cls(1, ())

    def allows(self, k: int) -> bool:
        return k % self.modulus not in self.forbidden

    def sorted_forbidden(self) -> list[int]:
        return sorted(self.forbidden)

    def __str__(self) -> str:
        if not self.forbidden:
            return "unrestricted"
        res = ",".join(map(str, self.sorted_forbidden()))
        return f"parts !== {res} (mod {self.modulus})"


@dataclass(frozen=True)
class CountTable:
    restriction: ResidueRestriction
    max_n: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def value(self, n: int) -> int:
        """p(n | restriction), with p(n) = 0 for negative n."""
        if n < 0:
            return 0
        if n > self.max_n:
            raise IndexError(f"table covers 0..{self.max_n}, asked for {n}")
        return self.counts[n]


def allowed_parts(r: ResidueRestriction, limit: int) -> list[int]:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    return [k for k in range(1, limit + 1) if r.allows(k)]


def count_restricted_table(r: ResidueRestriction, max_n: int) -> CountTable:
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    counts = [0] * (max_n + 1)
    counts[0] = 1
    if max_n:
        for k in allowed_parts(r, max_n):
            for n in range(k, max_n + 1):
                counts[n] += counts[n - k]
    return CountTable(r, max_n, tuple(counts))


def generalized_pentagonals(limit: int):
    """Yield (k, k(3k-1)/2, sign) pairs for k = 1, -1, 2, -2, ... up to ``limit``.

    sign is (-1)^(k+1), the recurrence weight of p(n - k(3k-1)/2).
    """
    k = 1
    while True:
        a = k * (3 * k - 1) // 2
        if a > limit:
            return
        sign = 1 if k % 2 else -1
        yield k, a, sign
        b = k * (3 * k + 1) // 2  # the k -> -k partner
        if b <= limit:
            yield -k, b, sign
        k += 1


def count_unrestricted_pentagonal(max_n: int) -> CountTable:
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    pents = list(generalized_pentagonals(max_n))
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        acc = 0
        for _, g, sign in pents:
            if g > n:
                break
            acc += sign * p[n - g]
        p[n] = acc
    return CountTable(ResidueRestriction.unrestricted(), max_n, tuple(p))


def oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return ORACLE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be a positive integer, got {raw!r}")
    if bound < 1:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be a positive integer, got {raw!r}")
    return bound


def enumerate_restricted(n: int, r: ResidueRestriction, bound: int | None = None) -> int:
    """Count partitions of ``n`` by walking every nonincreasing list of allowed parts."""
    if bound is None:
        bound = oracle_bound()
    if n < 0:
        return 0
    if n > bound:
        raise OracleRefusal(f"n={n} exceeds oracle bound {bound}")
    parts = [k for k in range(n, 0, -1) if r.allows(k)]  # descending

    def walk(remaining: int, start: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for idx in range(start, len(parts)):
            k = parts[idx]
            if k <= remaining:
                total += walk(remaining - k, idx)
        return total

    return walk(n, 0)


def iter_partitions(n: int, r: ResidueRestriction | None = None, max_part: int | None = None):
    """Yield each restricted partition of ``n`` as a nonincreasing tuple."""
    r = r or ResidueRestriction.unrestricted()
    top = n if max_part is None else min(n, max_part)
    if n == 0:
        yield ()
        return
    for k in range(top, 0, -1):
        if r.allows(k):
            for rest in iter_partitions(n - k, r, k):
                yield (k,) + rest


def forbidden_families(r: ResidueRestriction) -> list[ProgressionFactorSpec]:
    """One factor family per forbidden residue class: prod (1 - q^k), k in class."""
    M = r.modulus
    return [
        ProgressionFactorSpec(res if res else M, M, 0) for res in r.sorted_forbidden()
    ]


def restricted_gf(r: ResidueRestriction, order: int) -> TruncatedSeries:
    """prod over allowed k of 1/(1 - q^k), through ``q**order``.

    Built as (product over the forbidden classes) / (full Euler product), which
    shares nothing with the knapsack table.
    """
    inv_euler = invert_unit(euler_product(order))
    fams = forbidden_families(r)
    if not fams:
        return inv_euler
    return mul(progression_product(fams, order), inv_euler)
