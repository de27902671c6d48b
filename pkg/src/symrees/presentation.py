"""Herzog presentation of the space monomial prime p(a, b, c).

For pairwise coprime (a, b, c) the defining ideal of the curve
(t^a, t^b, t^c) is generated by at most three binomials

    x^s - y^t1 z^u1,   y^t - x^s2 z^u2,   z^u - x^s3 y^t3,

where s, t, u are the least multiples of a, b, c lying in the numerical
semigroup spanned by the other two weights.  This module computes those
exponents and checks the hypotheses under which the classifier operates:
pairwise coprimality, minimal generation by three elements, and the
negative-curve inequality u^2 c < ab.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotCoprimeError(ValueError):
    """Some pair among (a, b, c) shares a factor > 1."""


class NotThreeGeneratedError(ValueError):
    """The curve ideal is not minimally generated by three binomials."""


@dataclass(frozen=True)
class CurveTriple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"weights must be positive, got {self}")

    def pairwise_coprime(self) -> bool:
        return (
            math.gcd(self.a, self.b) == 1
            and math.gcd(self.a, self.c) == 1
            and math.gcd(self.b, self.c) == 1
        )

    def swapped_ab(self) -> "CurveTriple":
        return CurveTriple(self.b, self.a, self.c)


def representable(M: int, p: int, q: int) -> tuple[int, int] | None:
    """Minimal-j solution of M = i*p + j*q with i, j >= 0, or None.

    Equivalent to scanning j = 0..M//q for p | (M - j*q); the smallest
    admissible j is computed directly as M * q^{-1} mod p, which keeps the
    semigroup searches fast for weights up to 10**9.  Requires gcd(p, q) = 1.
    """
    if M < 1 or p < 1 or q < 1:
        raise ValueError("arguments must be positive")
    j = (M * pow(q, -1, p)) % p if p > 1 else 0
    if j * q > M:
        return None
    return (M - j * q) // p, j


def _all_representations(M: int, p: int, q: int) -> list[tuple[int, int]]:
    first = representable(M, p, q)
    if first is None:
        return []
    out = []
    i, j = first
    while i >= 0:
        out.append((i, j))
        i -= q
        j += p
    return out


def _minimal_multiple(w: int, p: int, q: int) -> tuple[int, tuple[int, int]]:
    """Least k >= 1 with k*w in N0*p + N0*q, plus the minimal-j witness."""
    # every integer beyond the Frobenius bound pq - p - q is representable
    cap = max(1, (p * q - p - q) // w + 1)
    for k in range(1, cap + 1):
        rep = representable(k * w, p, q)
        if rep is not None:
            return k, rep
    raise AssertionError(f"no multiple of {w} representable by ({p}, {q})")


@dataclass(frozen=True)
class HerzogPresentation:
    """Exponent datum of the three binomial generators.

    Invariants (checked on construction): s = s2 + s3, t = t1 + t3,
    u = u1 + u2, the degree identities s*a = t1*b + u1*c etc., and the
    closed forms a = t*u - t3*u2, b = s*u - s3*u1, c = s*t - s2*t1.
    """

    triple: CurveTriple
    s: int
    t: int
    u: int
    s2: int
    s3: int
    t1: int
    t3: int
    u1: int
    u2: int
    from_fallback_witness: bool = False

    @property
    def a(self) -> int:
        return self.triple.a

    @property
    def b(self) -> int:
        return self.triple.b

    @property
    def c(self) -> int:
        return self.triple.c

    @property
    def deg_f(self) -> int:
        return self.s * self.a

    @property
    def deg_g(self) -> int:
        return self.t * self.b

    @property
    def deg_h(self) -> int:
        return self.u * self.c

    def __post_init__(self) -> None:
        if not self._consistent():
            raise ValueError(f"inconsistent presentation data: {self}")

    def _consistent(self) -> bool:
        a, b, c = self.triple.a, self.triple.b, self.triple.c
        return (
            min(self.s2, self.s3, self.t1, self.t3, self.u1, self.u2) >= 1
            and self.s == self.s2 + self.s3
            and self.t == self.t1 + self.t3
            and self.u == self.u1 + self.u2
            and self.s * a == self.t1 * b + self.u1 * c
            and self.t * b == self.s2 * a + self.u2 * c
            and self.u * c == self.s3 * a + self.t3 * b
            and a == self.t * self.u - self.t3 * self.u2
            and b == self.s * self.u - self.s3 * self.u1
            and c == self.s * self.t - self.s2 * self.t1
        )


def _try_build(triple, s, t, u, wit_s, wit_t, wit_u, fallback):
    t1, u1 = wit_s
    s2, u2 = wit_t
    s3, t3 = wit_u
    if min(t1, u1, s2, u2, s3, t3) < 1:
        return None
    try:
        return HerzogPresentation(
            triple, s, t, u, s2, s3, t1, t3, u1, u2, from_fallback_witness=fallback
        )
    except ValueError:
        return None


def compute_presentation(triple: CurveTriple) -> HerzogPresentation:
    """Compute the minimal binomial exponents of p(a, b, c).

    Raises NotCoprimeError unless a, b, c are pairwise coprime and
    NotThreeGeneratedError when the ideal is a complete intersection
    (some minimal multiple is the weight itself or an exponent vanishes).
    """
    if not triple.pairwise_coprime():
        raise NotCoprimeError(f"{triple} is not pairwise coprime")
    a, b, c = triple.a, triple.b, triple.c
    s, wit_s = _minimal_multiple(a, b, c)
    if s < 2:
        raise NotThreeGeneratedError(f"{triple}: s = 1 (x - y^i z^j is a generator)")
    t, wit_t = _minimal_multiple(b, a, c)
    if t < 2:
        raise NotThreeGeneratedError(f"{triple}: t = 1 (y - x^i z^j is a generator)")
    u, wit_u = _minimal_multiple(c, a, b)
    if u < 2:
        raise NotThreeGeneratedError(f"{triple}: u = 1 (z - x^i y^j is a generator)")
    pres = _try_build(triple, s, t, u, wit_s, wit_t, wit_u, fallback=False)
    if pres is not None:
        return pres
    # the minimal-j witnesses were inconsistent: try every representation
    for ws in _all_representations(s * a, b, c):
        for wt in _all_representations(t * b, a, c):
            for wu in _all_representations(u * c, a, b):
                pres = _try_build(triple, s, t, u, ws, wt, wu, fallback=True)
                if pres is not None:
                    return pres
    raise NotThreeGeneratedError(
        f"{triple}: no consistent exponent tuple among the representations"
    )


@dataclass(frozen=True)
class AssumptionReport:
    """Status of the three classifier hypotheses for one triple."""

    pairwise_coprime: bool
    three_generated: bool
    negative_curve_iii: bool

    @property
    def all_hold(self) -> bool:
        return self.pairwise_coprime and self.three_generated and self.negative_curve_iii


def negative_curve_condition(p: HerzogPresentation) -> bool:
    """Exact form of u*c < sqrt(a*b*c): compare u^2 * c with a * b.

    Strict inequality; equality counts as a failure.
    """
    return p.u * p.u * p.c < p.a * p.b


def validate_assumptions(p: HerzogPresentation) -> AssumptionReport:
    return AssumptionReport(
        pairwise_coprime=p.triple.pairwise_coprime(),
        three_generated=True,
        negative_curve_iii=negative_curve_condition(p),
    )
