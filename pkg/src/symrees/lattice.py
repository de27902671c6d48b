"""The rational triangle attached to a presentation and its lattice points.

Write v = x^s2 z^u2 / y^t and w = x^s3 y^t3 / z^u.  The degree-(e*a*b) part
of K[x, y, z] is spanned by the Laurent monomials y^(e*a) v^alpha w^beta
whose x, y, z exponents are all nonnegative; those (alpha, beta) are exactly
the integer points of the triangle e*D, where D has vertices (0, 0),
(u, u2) and (delta1, delta2) = (a*s3/c, -a*s2/c), cut out by

    beta <= (u2/u) * alpha                 (z exponent >= 0)
    beta >= -(s2/s3) * alpha               (x exponent >= 0)
    beta >= (t/t3) * (alpha - e*u) + e*u2  (y exponent >= 0).

All comparisons are exact rational arithmetic: vertices are kept as
fractions and each column of points is obtained by one ceil and one floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .presentation import HerzogPresentation


class LatticePoint(NamedTuple):
    alpha: int
    beta: int


@dataclass(frozen=True)
class DeltaRegion:
    """Scaled triangle e*D for one presentation, with exact boundary data."""

    presentation: HerzogPresentation
    e: int

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError("scale e must be >= 1")

    @property
    def slope_lower_left(self) -> Fraction:
        p = self.presentation
        return Fraction(-p.s2, p.s3)

    @property
    def slope_upper(self) -> Fraction:
        p = self.presentation
        return Fraction(p.u2, p.u)

    @property
    def slope_lower_right(self) -> Fraction:
        p = self.presentation
        return Fraction(p.t, p.t3)

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        p, e = self.presentation, self.e
        delta1 = Fraction(e * p.a * p.s3, p.c)
        delta2 = Fraction(-e * p.a * p.s2, p.c)
        return (
            (Fraction(0), Fraction(0)),
            (Fraction(e * p.u), Fraction(e * p.u2)),
            (delta1, delta2),
        )

    def beta_range(self, alpha: int) -> tuple[Fraction, Fraction]:
        """Exact lower and upper boundary ordinates of column alpha."""
        p, e = self.presentation, self.e
        lo = max(
            self.slope_lower_left * alpha,
            self.slope_lower_right * (alpha - e * p.u) + e * p.u2,
        )
        hi = self.slope_upper * alpha
        return lo, hi

    def contains(self, alpha: int, beta: int) -> bool:
        if alpha < 0 or alpha > self.e * self.presentation.u:
            return False
        lo, hi = self.beta_range(alpha)
        return lo <= beta <= hi

    def monomial_exponents(self, point: LatticePoint) -> tuple[int, int, int]:
        """(x, y, z) exponents of y^(e*a) v^alpha w^beta; nonnegative inside."""
        p, e = self.presentation, self.e
        al, be = point
        return (
            al * p.s2 + be * p.s3,
            e * p.a - al * p.t + be * p.t3,
            al * p.u2 - be * p.u,
        )


@lru_cache(maxsize=512)
def _enumerate_cached(p: HerzogPresentation, e: int) -> tuple[LatticePoint, ...]:
    # integer-only floors/ceils of the three boundary lines; cached because
    # criteria and witness paths each enumerate the same region
    s2, s3, t, t3, u, u2 = p.s2, p.s3, p.t, p.t3, p.u, p.u2
    points = []
    for alpha in range(e * u + 1):
        b_hi = (u2 * alpha) // u
        lo1 = -((s2 * alpha) // s3)  # ceil(-s2*alpha/s3)
        num2 = t * (alpha - e * u) + e * u2 * t3
        lo2 = -((-num2) // t3)  # ceil(num2/t3)
        b_lo = max(lo1, lo2)
        points.extend(LatticePoint(alpha, beta) for beta in range(b_hi, b_lo - 1, -1))
    return tuple(points)


def enumerate_points(p: HerzogPresentation, e: int = 1) -> list[LatticePoint]:
    """Integer points of e*D, ordered by (alpha ascending, beta descending).

    The ordering is frozen so that constraint matrices, witnesses and
    regression values are reproducible bit for bit.  (0, 0) is always first.
    """
    if e < 1:
        raise ValueError("scale e must be >= 1")
    return list(_enumerate_cached(p, e))


def column_counts(p: HerzogPresentation) -> tuple[int, ...]:
    """(l_1, ..., l_u): points of D per column alpha = 1..u (alpha = 0 excluded)."""
    counts = [0] * p.u
    for pt in _enumerate_cached(p, 1):
        if pt.alpha >= 1:
            counts[pt.alpha - 1] += 1
    return tuple(counts)


def interval_lattice_count(lo: Fraction, hi: Fraction) -> int:
    """Number of integers in the closed interval [lo, hi] (0 if empty)."""
    if hi < lo:
        return 0
    return max(0, math.floor(hi) - math.ceil(lo) + 1)


def compute_nm(p: HerzogPresentation) -> tuple[int, int]:
    """Integer counts n, m of the slope intervals bounding the triangle.

    n counts [-s2/s3, u2/u] and m counts [u2/u, t/t3]; both are >= 1 since
    the first interval contains 0 and the second contains 1.
    """
    lower_left = Fraction(-p.s2, p.s3)
    upper = Fraction(p.u2, p.u)
    lower_right = Fraction(p.t, p.t3)
    return (
        interval_lattice_count(lower_left, upper),
        interval_lattice_count(upper, lower_right),
    )
