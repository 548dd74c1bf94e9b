"""Closed-form counts for the covering-lines construction and the modified
pigeonhole checker.

All arithmetic is exact: binomials are integer, and comparisons against
c*k^a with fractional a are carried out by raising both sides to the
exponent's denominator, never through floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


class FormulaDomainError(ValueError):
    """Raised when (d, k) is outside the domain the formulas are valid on."""


class AllocationPreconditionError(ValueError):
    """Raised when an allocation violates the pigeonhole preconditions; test
    harnesses treat this as a discarded sample, not a failure."""


@dataclass(frozen=True)
class PurdyCounts:
    """Hyperplane and (d-2)-flat counts for k points on each of d-1
    general-position lines, broken down by the number j of whole lines the
    flat contains."""

    d: int
    k: int
    h_by_j: dict[int, int]
    g_by_j: dict[int, int]

    @property
    def h_total(self) -> int:
        return sum(self.h_by_j.values())

    @property
    def g_total(self) -> int:
        return sum(self.g_by_j.values())

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "h": {str(j): v for j, v in sorted(self.h_by_j.items())},
            "g": {str(j): v for j, v in sorted(self.g_by_j.items())},
            "h_total": self.h_total,
            "g_total": self.g_total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def purdy_counts(d: int, k: int) -> PurdyCounts:
    """Exact spanned-hyperplane and spanned-(d-2)-flat totals.

    A hyperplane containing exactly j of the d-1 covering lines picks up
    d-2j single points from as many other lines; a (d-2)-flat picks up
    d-1-2j. Valid for k >= 2 (with one point per line the covering lines
    are not spanned and the decomposition breaks down).
    """
    if d < 4:
        raise FormulaDomainError(f"d >= 4 required, got {d}")
    if k < 2:
        raise FormulaDomainError(f"k >= 2 required, got {k}")
    h = {
        j: comb(d - 1, j) * comb(d - 1 - j, d - 2 * j) * k ** (d - 2 * j)
        for j in range(1, d // 2 + 1)
    }
    g = {
        j: comb(d - 1, j) * comb(d - 1 - j, d - 1 - 2 * j) * k ** (d - 1 - 2 * j)
        for j in range(0, (d - 1) // 2 + 1)
    }
    return PurdyCounts(d, k, h, g)


def purdy_crossover(d: int) -> int:
    """Smallest k >= 2 at which the construction spans more (d-2)-flats than
    hyperplanes; exists because g grows as k^{d-1} against h's k^{d-2}."""
    if d < 4:
        raise FormulaDomainError(f"d >= 4 required, got {d}")
    k = 2
    while True:
        counts = purdy_counts(d, k)
        if counts.g_total > counts.h_total:
            return k
        k += 1


def _scaled_power_le(lhs: int, c: Fraction, k: int, a: Fraction) -> bool:
    """Exact test lhs <= c * k**a for lhs >= 0, c > 0, k >= 1, a >= 0."""
    p, q = a.numerator, a.denominator
    u, v = c.numerator, c.denominator
    return (lhs * v) ** q <= u**q * k**p


def floor_scaled_power(c: Fraction, k: int, a: Fraction) -> int:
    """floor(c * k**a) computed exactly."""
    guess = max(0, int(c.numerator * k ** float(a) / c.denominator))
    while guess > 0 and not _scaled_power_le(guess, c, k, a):
        guess -= 1
    while _scaled_power_le(guess + 1, c, k, a):
        guess += 1
    return guess


def _is_exact(value: int, c: Fraction, k: int, a: Fraction) -> bool:
    p, q = a.numerator, a.denominator
    u, v = c.numerator, c.denominator
    return (value * v) ** q == u**q * k**p


def ceil_scaled_power(c: Fraction, k: int, a: Fraction) -> int:
    """ceil(c * k**a) computed exactly."""
    f = floor_scaled_power(c, k, a)
    return f if _is_exact(f, c, k, a) else f + 1


def pigeonhole_check(
    allocation: Sequence[int], c: Fraction | str | int, a: Fraction | str | int
) -> bool:
    """Check the modified pigeonhole conclusion on an admissible allocation.

    Preconditions (violations raise AllocationPreconditionError): 0 < c <= 1,
    every entry a nonnegative integer at most k^{a-1}, and the entries sum to
    at least ceil(c * k^a) where k is the number of containers. Returns
    whether at least c*k/2 containers hold at least floor(c * k^{a-1} / 2)
    objects; this always holds for admissible inputs.
    """
    c = Fraction(c)
    a = Fraction(a)
    k = len(allocation)
    if k < 1:
        raise AllocationPreconditionError("no containers")
    if not 0 < c <= 1:
        raise AllocationPreconditionError(f"c = {c} outside (0, 1]")
    if a < 1:
        raise AllocationPreconditionError(f"a = {a} must be >= 1")
    for i, entry in enumerate(allocation):
        if entry < 0:
            raise AllocationPreconditionError(f"allocation[{i}] = {entry} negative")
        if not _scaled_power_le(entry, Fraction(1), k, a - 1):
            raise AllocationPreconditionError(
                f"allocation[{i}] = {entry} exceeds k^(a-1)"
            )
    needed = ceil_scaled_power(c, k, a)
    if sum(allocation) < needed:
        raise AllocationPreconditionError(
            f"allocation sums to {sum(allocation)} < ceil(c*k^a) = {needed}"
        )
    threshold = floor_scaled_power(c / 2, k, a - 1)
    qualifying = sum(1 for entry in allocation if entry >= threshold)
    return Fraction(2 * qualifying) >= c * k
