"""Exact truncated formal power series over Python integers.

A :class:`TruncatedSeries` holds the coefficients of ``q^0 .. q^order`` and
nothing else; everything above ``order`` is unknown and dropped. Binary
operations refuse operands of different order rather than silently
truncating one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class SeriesError(ValueError):
    """Raised for malformed series or invalid series operations."""


class OrderMismatch(SeriesError):
    pass


class NonUnitError(SeriesError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            # bool is an int subclass; refuse it along with floats.
            if type(c) is not int:
                raise SeriesError(f"coefficients must be int, got {type(c).__name__}")

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, -other)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return TruncatedSeries(self.order, tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def support(self) -> list[int]:
        """Exponents carrying a nonzero coefficient."""
        return [e for e, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        return render(self)


def make_series(order: int, entries: Mapping[int, int] | None = None) -> TruncatedSeries:
    if order < 0:
        raise SeriesError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for e, c in (entries or {}).items():
        if e < 0 or e > order:
            raise SeriesError(f"exponent {e} outside 0..{order}")
        coeffs[e] = int(c)
    return TruncatedSeries(order, tuple(coeffs))


def from_coeffs(coeffs: Sequence[int]) -> TruncatedSeries:
    if not coeffs:
        raise SeriesError("need at least one coefficient")
    return TruncatedSeries(len(coeffs) - 1, tuple(int(c) for c in coeffs))


def zero(order: int) -> TruncatedSeries:
    return make_series(order)


def one(order: int) -> TruncatedSeries:
    return make_series(order, {0: 1})


def monomial(order: int, s: int, c: int = 1) -> TruncatedSeries:
    return make_series(order, {s: c})


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatch(f"order mismatch: {a.order} vs {b.order}")


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product (schoolbook, skipping zero coefficients)."""
    _check_orders(a, b)
    n = a.order
    out = [0] * (n + 1)
    bc = b.coeffs
    b_nz = [(j, y) for j, y in enumerate(bc) if y]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        lim = n - i
        for j, y in b_nz:
            if j > lim:
                break
            out[i + j] += x * y
    return TruncatedSeries(n, tuple(out))


def shift(a: TruncatedSeries, s: int) -> TruncatedSeries:
    """Multiply by ``q**s``, discarding whatever falls past the order."""
    if s < 0 or s > a.order:
        raise SeriesError(f"shift {s} outside 0..{a.order}")
    return TruncatedSeries(a.order, (0,) * s + a.coeffs[: a.order + 1 - s])


def invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitError(f"constant term {a0} is not a unit")
    n = a.order
    nz = [(j, c) for j, c in enumerate(a.coeffs) if c and j]
    b = [0] * (n + 1)
    b[0] = a0
    for e in range(1, n + 1):
        acc = 0
        for j, c in nz:
            if j > e:
                break
            acc += c * b[e - j]
        # dividing by a0 is multiplying by a0 since a0 is +-1
        b[e] = -a0 * acc
    return TruncatedSeries(n, tuple(b))


@dataclass(frozen=True)
class ProgressionFactorSpec:
    """The factor family prod_{n >= start_index} (1 - q^(offset + step*n))."""

    offset: int
    step: int
    start_index: int = 0

    def __post_init__(self):
        if self.step < 1:
            raise SeriesError(f"step must be positive, got {self.step}")
        if self.start_index not in (0, 1):
            raise SeriesError(f"start_index must be 0 or 1, got {self.start_index}")
        if self.first_exponent() < 1:
            raise SeriesError(
                f"factor family {self} emits exponent {self.first_exponent()}"
            )

    def first_exponent(self) -> int:
        return self.offset + self.step * self.start_index

    def exponents(self, order: int) -> range:
        return range(self.first_exponent(), order + 1, self.step)


def expand_binomials(exponents: Iterable[int], order: int) -> TruncatedSeries:
    """Expand prod (1 - q^e) over the given exponents, truncated at ``order``.

    Each factor is applied in place, top coefficient first, so it touches only
    ``order - e + 1`` entries.
    """
    c = [0] * (order + 1)
    c[0] = 1
    top = 0  # highest exponent that can be nonzero so far
    for e in exponents:
        if e < 1:
            raise SeriesError(f"factor exponent must be positive, got {e}")
        if e > order:
            continue
        new_top = min(order, top + e)
        for j in range(new_top, e - 1, -1):
            c[j] -= c[j - e]
        top = new_top
    return TruncatedSeries(order, tuple(c))


def progression_product(
    factors: Sequence[ProgressionFactorSpec], order: int
) -> TruncatedSeries:
    if not factors:
        raise SeriesError("progression_product needs at least one factor family")
    if order < 0:
        raise SeriesError(f"order must be non-negative, got {order}")
    exps = (e for f in factors for e in f.exponents(order))
    return expand_binomials(exps, order)


def euler_product(order: int) -> TruncatedSeries:
    """prod_{n >= 1} (1 - q^n) through ``q**order``."""
    return progression_product([ProgressionFactorSpec(1, 1, 0)], order)


def _fmt_term(c: int, e: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        var = "q" if e == 1 else f"q^{e}"
        body = var if mag == 1 else f"{mag}*{var}"
    if first:
        return f"{sign}{body}"
    return f"{sign} {body}"


def render(a: TruncatedSeries, max_terms: int | None = 12) -> str:
    """Debug rendering such as ``1 - q - q^2 + q^5 + O(q^8)``."""
    terms = [(e, c) for e, c in enumerate(a.coeffs) if c]
    shown = terms if max_terms is None else terms[:max_terms]
    parts = [_fmt_term(c, e, i == 0) for i, (e, c) in enumerate(shown)]
    if max_terms is not None and len(terms) > max_terms:
        parts.append("+ ...")
    if not parts:
        parts.append("0")
    parts.append(f"+ O(q^{a.order + 1})")
    return " ".join(parts)
