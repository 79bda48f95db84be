"""Truncated pentagonal recurrences with residue-restricted partition counts.

For m >= 1 and modulus M = 3(2m+1)^2 the signed sum

    p(n | parts !== 0, (2m+1)(3m+1), (2m+1)(3m+2))
    + sum_{i=1..m} (-1)^i [ p(n - i(3i-1)/2 | parts !== 0, (2m+1)(3m-3i+2), (2m+1)(3m+3i+1))
                          + p(n - i(3i+1)/2 | parts !== 0, (2m+1)(3m-3i+1), (2m+1)(3m+3i+2)) ]

vanishes for every n >= 1 (with p of a negative argument taken as 0). At n = 0
it equals 1. This module builds the term schedule, evaluates the sum from count
tables, and checks the underlying series identities directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .partitions import CountTable, ResidueRestriction, count_restricted_table, forbidden_families
from .series import (
    ProgressionFactorSpec,
    TruncatedSeries,
    add,
    euler_product,
    make_series,
    progression_product,
    shift,
    zero,
)

Method = Literal["counting", "series"]


@dataclass(frozen=True)
class IdentityTerm:
    shift: int
    sign: int
    restriction: ResidueRestriction

    def families(self) -> list[ProgressionFactorSpec]:
        return forbidden_families(self.restriction)


@dataclass(frozen=True)
class IdentitySchedule:
    m: int
    modulus: int
    terms: tuple[IdentityTerm, ...]

    @property
    def shifts(self) -> list[int]:
        return [t.shift for t in self.terms]


@dataclass
class VerificationReport:
    """Outcome of one sweep.

    ``residuals`` maps every checked n to its residual; ``passed`` is true iff
    all of them are zero. For the counting route n starts at 1 and the n = 0
    value is kept in ``residual_at_zero``.
    """

    method: Method
    params: dict
    n_range: tuple[int, int]
    residuals: dict[int, int]
    passed: bool
    elapsed: float = 0.0
    residual_at_zero: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def m(self) -> int | None:
        return self.params.get("m")

    def failures(self) -> list[tuple[int, int]]:
        return [(n, v) for n, v in sorted(self.residuals.items()) if v]

    def first_failure(self) -> int | None:
        bad = self.failures()
        return bad[0][0] if bad else None


def _report(method, params, n_range, residuals, t0, **extra) -> VerificationReport:
    passed = all(v == 0 for v in residuals.values())
    return VerificationReport(
        method=method,
        params=params,
        n_range=n_range,
        residuals=residuals,
        passed=passed,
        elapsed=time.perf_counter() - t0,
        **extra,
    )


def pentagonal_series(order: int) -> TruncatedSeries:
    """sum over all integers n of (-1)^n q^(n(3n+1)/2), through ``q**order``."""
    entries = {0: 1}
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        entries[k * (3 * k - 1) // 2] = sign  # n = -k
        if k * (3 * k + 1) // 2 <= order:
            entries[k * (3 * k + 1) // 2] = sign  # n = k
        k += 1
    return make_series(order, entries)


def _check_lemma_index(k: int, i: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 1 <= i <= 2 * k:
        raise ValueError(f"i must satisfy 1 <= i <= {2 * k}, got {i}")


def triple_product_sum_side(k: int, i: int, order: int) -> TruncatedSeries:
    """sum over integers n of (-1)^n q^((2k+1)n(n+1)/2 - i*n)."""
    _check_lemma_index(k, i)
    step = 2 * k + 1
    entries: dict[int, int] = {}

    def expo(n: int) -> int:
        return step * n * (n + 1) // 2 - i * n

    # the exponent is a convex quadratic in n, nonnegative everywhere when
    # 1 <= i <= 2k; walk outward from 0 in both directions until past order
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = expo(n)
            if e > order:
                break
            entries[e] = entries.get(e, 0) + (1 if n % 2 == 0 else -1)
            n += direction
    return make_series(order, entries)


def triple_product_product_side(k: int, i: int, order: int) -> TruncatedSeries:
    """prod_{n>=0} (1 - q^((2k+1)(n+1))) (1 - q^((2k+1)n + i)) (1 - q^((2k+1)(n+1) - i))."""
    _check_lemma_index(k, i)
    step = 2 * k + 1
    fams = [
        ProgressionFactorSpec(step, step, 0),
        ProgressionFactorSpec(i, step, 0),
        ProgressionFactorSpec(step - i, step, 0),
    ]
    return progression_product(fams, order)


def schedule_for(m: int) -> IdentitySchedule:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    w = 2 * m + 1
    M = 3 * w * w
    terms = [IdentityTerm(0, 1, ResidueRestriction(M, (0, w * (3 * m + 1), w * (3 * m + 2))))]
    for i in range(1, m + 1):
        sign = -1 if i % 2 else 1
        terms.append(
            IdentityTerm(
                i * (3 * i - 1) // 2,
                sign,
                ResidueRestriction(M, (0, w * (3 * m - 3 * i + 2), w * (3 * m + 3 * i + 1))),
            )
        )
        terms.append(
            IdentityTerm(
                i * (3 * i + 1) // 2,
                sign,
                ResidueRestriction(M, (0, w * (3 * m - 3 * i + 1), w * (3 * m + 3 * i + 2))),
            )
        )
    return IdentitySchedule(m, M, tuple(terms))


def build_tables(schedule: IdentitySchedule, max_n: int) -> list[CountTable]:
    """One count table per term, reused when two terms share a restriction."""
    cache: dict[ResidueRestriction, CountTable] = {}
    out = []
    for t in schedule.terms:
        if t.restriction not in cache:
            cache[t.restriction] = count_restricted_table(t.restriction, max_n)
        out.append(cache[t.restriction])
    return out


def residual(n: int, schedule: IdentitySchedule, tables: Sequence[CountTable]) -> int:
    if len(tables) != len(schedule.terms):
        raise ValueError(f"need {len(schedule.terms)} tables, got {len(tables)}")
    total = 0
    for t, table in zip(schedule.terms, tables):
        if t.restriction != table.restriction:
            raise ValueError(f"table restriction {table.restriction} does not match term {t}")
        j = n - t.shift
        if j < 0:
            continue
        if j > table.max_n:
            raise ValueError(f"table for {t.restriction} covers 0..{table.max_n}, need {j}")
        total += t.sign * table.counts[j]
    return total


def verify_counting(
    m: int, max_n: int, schedule: IdentitySchedule | None = None
) -> VerificationReport:
    t0 = time.perf_counter()
    schedule = schedule or schedule_for(m)
    tables = build_tables(schedule, max_n)
    residuals = {n: residual(n, schedule, tables) for n in range(1, max_n + 1)}
    return _report(
        "counting",
        {"m": schedule.m, "max_n": max_n},
        (1, max_n),
        residuals,
        t0,
        residual_at_zero=residual(0, schedule, tables),
    )


def product_identity_sides(
    schedule: IdentitySchedule, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of prod(1-q^n) = sum over terms of sign * q^shift * triple product."""
    left = euler_product(order)
    right = zero(order)
    for t in schedule.terms:
        if t.shift > order:
            continue
        prod = progression_product(t.families(), order)
        piece = shift(prod, t.shift)
        right = add(right, piece if t.sign > 0 else -piece)
    return left, right


def verify_product_identity(
    m: int, order: int, schedule: IdentitySchedule | None = None
) -> VerificationReport:
    t0 = time.perf_counter()
    schedule = schedule or schedule_for(m)
    left, right = product_identity_sides(schedule, order)
    residuals = {n: left[n] - right[n] for n in range(order + 1)}
    return _report("series", {"m": schedule.m, "order": order}, (0, order), residuals, t0)


def verify_lemma(k: int, order: int) -> VerificationReport:
    """Check the triple-product form for every i in 1..2k.

    ``residuals[n]`` is the sum over i of |sum side - product side| at q^n.
    """
    t0 = time.perf_counter()
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    residuals = {n: 0 for n in range(order + 1)}
    failing = []
    for i in range(1, 2 * k + 1):
        diff = triple_product_sum_side(k, i, order) - triple_product_product_side(k, i, order)
        if any(diff):
            failing.append(i)
        for n, d in enumerate(diff):
            residuals[n] += abs(d)
    return _report(
        "series",
        {"k": k, "order": order},
        (0, order),
        residuals,
        t0,
        details={"failing_i": failing, "checked_i": list(range(1, 2 * k + 1))},
    )


def verify_theorem1_equality(max_n: int) -> VerificationReport:
    """m = 1 in equality form: p(n|A) = p(n-1|B) + p(n-2|C) for 2 <= n <= max_n."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    t0 = time.perf_counter()
    schedule = schedule_for(1)
    a, b, c = build_tables(schedule, max_n)
    residuals = {}
    rows = {}
    for n in range(2, max_n + 1):
        lhs = a.value(n)
        rhs = (b.value(n - 1), c.value(n - 2))
        rows[n] = (lhs, *rhs)
        residuals[n] = lhs - sum(rhs)
    return _report(
        "counting",
        {"m": 1, "max_n": max_n},
        (2, max_n),
        residuals,
        t0,
        details={"rows": rows},
    )
