"""Exact rational affine geometry: points, canonical flats, hulls, meets.

Everything is computed over `fractions.Fraction`; there is no floating point
in this module. A flat is stored as the reduced row echelon form of the
augmented system ``A·x = b`` that cuts it out, which makes structural
equality coincide with geometric equality and lets enumeration code
deduplicate flats with a plain dict.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class GeometryError(ValueError):
    """Raised for dimension mismatches and other malformed geometric input."""


Scalar = int | Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the serialization "p" or "p/q" (q positive) into a Fraction."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise GeometryError(f"bad rational {text!r}")
    return Fraction(s)


def format_rational(value: Fraction) -> str:
    """Serialize a Fraction as "p" or "p/q"; inverse of parse_rational."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Point:
    """A point of E^d with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Scalar]):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def serialize(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)

    @classmethod
    def parse(cls, text: str, ambient_dim: int | None = None) -> "Point":
        parts = [p for p in text.strip().split(",") if p.strip() != ""]
        if not parts:
            raise GeometryError(f"bad point {text!r}")
        pt = cls(parse_rational(p) for p in parts)
        if ambient_dim is not None and pt.dim != ambient_dim:
            raise GeometryError(
                f"dimension mismatch: point {text!r} has {pt.dim} coords, expected {ambient_dim}"
            )
        return pt


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form with exact arithmetic.

    Returns (nonzero rows, pivot column indices). Pivot entries are 1 and are
    the only nonzero entries in their columns, so the output is a canonical
    basis of the input row space.
    """
    work = [[Fraction(v) for v in row] for row in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c]
        if inv != 1:
            work[r] = [v / inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[0])


def int_rref(rows: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Canonical primitive-integer form of the row space of an integer matrix.

    Fraction-free Gauss-Jordan with per-row content reduction; the output
    rows are the rational RREF rows each scaled to a primitive integer
    vector with positive pivot, which is likewise unique per row space but
    avoids Fraction arithmetic in enumeration hot loops.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        for i in range(len(work)):
            f = work[i][c]
            if i == r or f == 0:
                continue
            merged = [a * pv - f * b for a, b in zip(work[i], work[r])]
            g = 0
            for v in merged:
                g = gcd(g, v)
                if g == 1:
                    break
            work[i] = [v // g for v in merged] if g > 1 else merged
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    out = []
    for i in range(r):
        row = work[i]
        g = 0
        for v in row:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            row = [v // g for v in row]
        if row[pivots[i]] < 0:
            row = [-v for v in row]
        out.append(tuple(row))
    return tuple(out), tuple(pivots)


def nullspace_from_rref(
    red: Sequence[Sequence[Fraction]], pivots: Sequence[int], ncols: int
) -> list[tuple[Fraction, ...]]:
    """Free-column nullspace basis of an already-reduced matrix."""
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(tuple(v))
    return basis


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Canonical basis of {w : M·w = 0} for the matrix with the given rows."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(tuple(v))
    return basis


def homogeneous_int_rows(points: Sequence["Point"]) -> list[list[int]]:
    """Integer scalings of the homogeneous rows (p, 1).

    Scaling a homogeneous row preserves its span, so int_rref of these rows
    is a canonical key for the affine hull of the points.
    """
    rows = []
    for p in points:
        den = 1
        for c in p.coords:
            den = lcm(den, c.denominator)
        rows.append([int(c * den) for c in p.coords] + [den])
    return rows


@dataclass(frozen=True)
class Flat:
    """An affine subspace of E^d as a canonical constraint system.

    ``rows`` is the RREF of the augmented matrix [A | b] of a consistent
    system A·x = b whose solution set is the flat. Because the row space of
    [A | b] is exactly the space of affine functionals vanishing on the flat,
    two Flats are equal iff their rows are identical. ``dim`` ranges over
    0..d; d (no constraints) only occurs as the hull of a full-dimensional
    point set and is filtered out by every enumeration that wants proper
    flats.
    """

    ambient_dim: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        canon, pivots = rref(self.rows)
        if any(p == self.ambient_dim for p in pivots):
            raise GeometryError("inconsistent constraint system (empty flat)")
        object.__setattr__(self, "rows", canon)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def rank(self) -> int:
        return self.dim + 1

    def contains(self, p: Point) -> bool:
        if p.dim != self.ambient_dim:
            raise GeometryError(
                f"dimension mismatch: point in E^{p.dim}, flat in E^{self.ambient_dim}"
            )
        d = self.ambient_dim
        return all(
            sum(row[i] * p.coords[i] for i in range(d)) == row[d] for row in self.rows
        )

    def any_point(self) -> Point:
        """Some point on the flat: free coordinates 0, pivots from b."""
        red, pivots = self.rows, tuple(
            next(i for i, v in enumerate(row) if v != 0) for row in self.rows
        )
        coords = [Fraction(0)] * self.ambient_dim
        for i, pc in enumerate(pivots):
            coords[pc] = red[i][self.ambient_dim]
        return Point(coords)

    def spanning_points(self) -> list[Point]:
        """dim+1 affinely independent points whose hull is the flat."""
        d = self.ambient_dim
        pivots = tuple(next(i for i, v in enumerate(row) if v != 0) for row in self.rows)
        pivot_set = set(pivots)
        base = self.any_point()
        pts = [base]
        for free in range(d):
            if free in pivot_set:
                continue
            coords = list(base.coords)
            coords[free] += 1
            for i, pc in enumerate(pivots):
                coords[pc] -= self.rows[i][free]
            pts.append(Point(coords))
        return pts

    def serialize_rows(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.rows]

    @classmethod
    def parse_rows(cls, ambient_dim: int, rows: Sequence[Sequence[str]]) -> "Flat":
        parsed = [[parse_rational(v) for v in row] for row in rows]
        for row in parsed:
            if len(row) != ambient_dim + 1:
                raise GeometryError(
                    f"constraint row has {len(row)} entries, expected {ambient_dim + 1}"
                )
        return cls(ambient_dim, tuple(tuple(r) for r in parsed))


def hyperplane(coeffs: Sequence[Scalar], rhs: Scalar) -> Flat:
    """The hyperplane {x : coeffs·x = rhs}; coeffs must not be all zero."""
    if all(Fraction(c) == 0 for c in coeffs):
        raise GeometryError("zero normal vector")
    return Flat(len(coeffs), (tuple(list(coeffs) + [rhs]),))


def affine_hull(points: Sequence[Point]) -> Flat:
    """Smallest flat containing all the points.

    The constraint rows are the nullspace of the homogeneous point matrix
    [p | 1]: a functional a·x = b vanishes on every p exactly when
    (a, -b) kills every row.
    """
    if not points:
        raise GeometryError("empty hull")
    d = points[0].dim
    for p in points:
        if p.dim != d:
            raise GeometryError("dimension mismatch: points of different ambient dimension")
    rows = [list(p.coords) + [Fraction(1)] for p in points]
    constraints = [w[:d] + (-w[d],) for w in nullspace(rows, d + 1)]
    return Flat(d, tuple(constraints))


def flat_from_point_rowspace(
    d: int, int_rows: Sequence[Sequence[int]], pivots: Sequence[int]
) -> Flat:
    """The flat whose points (x, 1) span the given canonical row space;
    inverse companion of homogeneous_int_rows + int_rref."""
    frac = [
        tuple(Fraction(v, row[pc]) for v in row) for row, pc in zip(int_rows, pivots)
    ]
    null = nullspace_from_rref(frac, pivots, d + 1)
    return Flat(d, tuple(w[:d] + (-w[d],) for w in null))


def contains(flat: Flat, p: Point) -> bool:
    return flat.contains(p)


def meet(f1: Flat, f2: Flat) -> Flat | None:
    """f1 ∩ f2 as a canonical Flat, or None when the intersection is empty."""
    if f1.ambient_dim != f2.ambient_dim:
        raise GeometryError("dimension mismatch: flats of different ambient dimension")
    try:
        return Flat(f1.ambient_dim, f1.rows + f2.rows)
    except GeometryError:
        return None


def join(f1: Flat, f2: Flat) -> Flat:
    """Affine hull of f1 ∪ f2."""
    return affine_hull(f1.spanning_points() + f2.spanning_points())


def rank_of(flat: Flat) -> int:
    """Rank of a flat: one more than its dimension."""
    return flat.dim + 1


def affine_rank(points: Sequence[Point]) -> int:
    """Rank (dim + 1) of the hull of the points, via the homogeneous matrix."""
    if not points:
        return 0
    return matrix_rank([list(p.coords) + [Fraction(1)] for p in points])


def solve_unique(flats: Sequence[Flat]) -> Point | None:
    """The single point where the flats meet, or None if the intersection
    is empty or has positive dimension."""
    if not flats:
        return None
    d = flats[0].ambient_dim
    rows: list[Sequence[Fraction]] = []
    for f in flats:
        if f.ambient_dim != d:
            raise GeometryError("dimension mismatch")
        rows.extend(f.rows)
    red, pivots = rref(rows)
    if len(red) != d or d in pivots:
        return None
    return Point(red[i][d] for i in range(d))
