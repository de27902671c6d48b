"""Exact sparse polynomials in x, y, z and the order-two-negative-curve family.

Everything here works for arbitrary positive exponent data (s2, s3, t1, t3,
u1, u2), not only for presentations of pairwise coprime triples: the family
construction needs weights a = t3*u1 + t1*u, b = s3*u2 + s2*u,
c = s2*t3 + s3*t that may share factors.  Coefficients are exact (int or
Fraction); there is no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Expt = tuple[int, int, int]


class NotDivisibleError(ArithmeticError):
    """Monomial division requested on a term it does not divide."""

    def __init__(self, term: Expt, mono: Expt):
        super().__init__(f"term x^{term[0]} y^{term[1]} z^{term[2]} not divisible by {mono}")
        self.term = term
        self.mono = mono


class HypothesisViolationError(ValueError):
    """Exponent data outside the range required by a construction."""


class SparsePoly:
    """Sparse exact polynomial in x, y, z, optionally carrying weights.

    Terms map exponent triples to nonzero coefficients.  The optional
    ``weights`` (a, b, c) enable weighted-homogeneity checks and are
    propagated through arithmetic.
    """

    __slots__ = ("terms", "weights")

    def __init__(self, terms: Mapping[Expt, int | Fraction] | None = None,
                 weights: Expt | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}
        self.weights = weights

    @classmethod
    def monomial(cls, coeff, ex: int, ey: int, ez: int, weights=None) -> "SparsePoly":
        return cls({(ex, ey, ez): coeff}, weights)

    def _merge_weights(self, other: "SparsePoly"):
        if self.weights is not None and other.weights is not None:
            if self.weights != other.weights:
                raise ValueError("mixing polynomials with different gradings")
        return self.weights or other.weights

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePoly(out, self._merge_weights(other))

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self.terms.items()}, self.weights)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[Expt, int | Fraction] = {}
        for (x1, y1, z1), c1 in self.terms.items():
            for (x2, y2, z2), c2 in other.terms.items():
                e = (x1 + x2, y1 + y2, z1 + z2)
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SparsePoly(out, self._merge_weights(other))

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly({(0, 0, 0): 1}, self.weights)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "SparsePoly":
        return SparsePoly({e: c * v for e, v in self.terms.items()}, self.weights)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePoly(0)"
        bits = [f"{c}*x^{e[0]}y^{e[1]}z^{e[2]}" for e, c in sorted(self.terms.items())]
        return "SparsePoly(" + " + ".join(bits) + ")"

    def divide_exact(self, mono: Expt) -> "SparsePoly":
        """Quotient by the monomial x^i y^j z^k; every term must be divisible."""
        mx, my, mz = mono
        out = {}
        for (ex, ey, ez), c in sorted(self.terms.items()):
            if ex < mx or ey < my or ez < mz:
                raise NotDivisibleError((ex, ey, ez), mono)
            out[(ex - mx, ey - my, ez - mz)] = c
        return SparsePoly(out, self.weights)

    def slice_x0(self) -> dict[tuple[int, int], int | Fraction]:
        """The class mod (x): terms with x-exponent 0, keyed by (y, z) exponents."""
        return {(ey, ez): c for (ex, ey, ez), c in self.terms.items() if ex == 0}

    def weighted_degree(self, weights: Expt | None = None) -> int:
        """Common weighted degree of all terms; raises if inhomogeneous."""
        w = weights or self.weights
        if w is None:
            raise ValueError("no weights available")
        degs = {e[0] * w[0] + e[1] * w[1] + e[2] * w[2] for e in self.terms}
        if len(degs) != 1:
            raise ValueError(f"not weighted-homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self, weights: Expt | None = None) -> bool:
        w = weights or self.weights
        degs = {e[0] * w[0] + e[1] * w[1] + e[2] * w[2] for e in self.terms}
        return len(degs) <= 1


def curve_substitution_zero(poly: SparsePoly, weights: Expt) -> bool:
    """Does the polynomial vanish under x -> T^a, y -> T^b, z -> T^c?

    This is exact membership in the curve ideal for honest primes; the
    substituted univariate polynomial is accumulated sparsely since its
    degree reaches the weighted degree of the input.
    """
    a, b, c = weights
    acc: dict[int, int | Fraction] = {}
    for (ex, ey, ez), coeff in poly.terms.items():
        d = ex * a + ey * b + ez * c
        s = acc.get(d, 0) + coeff
        if s == 0:
            acc.pop(d, None)
        else:
            acc[d] = s
    return not acc


def is_negative_curve(degree: int, order: int, weights: Expt) -> bool:
    """degree/order < sqrt(a*b*c), compared as degree^2 < order^2 * a*b*c."""
    a, b, c = weights
    return degree * degree < order * order * a * b * c


def build_generators(p) -> tuple[SparsePoly, SparsePoly, SparsePoly]:
    """The three binomials f, g, h from any object carrying the exponents.

    Accepts a presentation or family parameters: anything with attributes
    s, t, u, s2, s3, t1, t3, u1, u2 and weights a, b, c.
    """
    w = (p.a, p.b, p.c)
    f = SparsePoly({(p.s, 0, 0): 1, (0, p.t1, p.u1): -1}, w)
    g = SparsePoly({(0, p.t, 0): 1, (p.s2, 0, p.u2): -1}, w)
    h = SparsePoly({(0, 0, p.u): 1, (p.s3, p.t3, 0): -1}, w)
    return f, g, h


def check_minor_relations(f: SparsePoly, g: SparsePoly, h: SparsePoly, p) -> bool:
    """The two syzygies of the generators, from the 2x3 exponent matrix.

    y^t3 f + z^u1 g + x^s2 h = 0 and z^u2 f + x^s3 g + y^t1 h = 0.  The
    second uses y^t1 (the exact identity for all exponent data); it agrees
    with the y^t3 variant whenever t1 = t3.
    """
    y_t3 = SparsePoly.monomial(1, 0, p.t3, 0)
    z_u1 = SparsePoly.monomial(1, 0, 0, p.u1)
    x_s2 = SparsePoly.monomial(1, p.s2, 0, 0)
    z_u2 = SparsePoly.monomial(1, 0, 0, p.u2)
    x_s3 = SparsePoly.monomial(1, p.s3, 0, 0)
    y_t1 = SparsePoly.monomial(1, 0, p.t1, 0)
    first = y_t3 * f + z_u1 * g + x_s2 * h
    second = z_u2 * f + x_s3 * g + y_t1 * h
    return first.is_zero() and second.is_zero()


def _xi_clauses(p, xi: SparsePoly, f, g, h) -> tuple[bool, bool]:
    """(companion identity, slice) checks for a candidate xi."""
    z_u1 = SparsePoly.monomial(1, 0, 0, p.u1)
    x_pow = SparsePoly.monomial(1, p.s2 - p.s3, 0, 0)
    companion = (z_u1 * xi - (x_pow * h * h - f * g)).is_zero()
    slice_ok = xi.slice_x0() == {(3, 0): 1}
    return companion, slice_ok


def build_xi(p) -> SparsePoly:
    """Order-2 symbolic power element: xi = (z^(u2-u1) f^2 - g h) / x^s3.

    Requires s2 > s3, t1 = t3 = 1, u1 < u2.  Verifies on the way that
    z^u1 xi = x^(s2-s3) h^2 - f g and that xi is y^3 mod (x).
    """
    if not (p.s2 > p.s3 and p.t1 == 1 and p.t3 == 1 and p.u1 < p.u2):
        raise HypothesisViolationError(
            f"need s2 > s3, t1 = t3 = 1, u1 < u2; got s2={p.s2}, s3={p.s3}, "
            f"t1={p.t1}, t3={p.t3}, u1={p.u1}, u2={p.u2}"
        )
    f, g, h = build_generators(p)
    z_pow = SparsePoly.monomial(1, 0, 0, p.u2 - p.u1)
    xi = (z_pow * f * f - g * h).divide_exact((p.s3, 0, 0))
    companion, slice_ok = _xi_clauses(p, xi, f, g, h)
    if not companion:
        raise AssertionError("companion identity for xi failed")
    if not slice_ok:
        raise AssertionError("xi is not y^3 mod (x)")
    return xi


def _zeta_clauses(p, zeta: SparsePoly, xi, f, g, h) -> tuple[bool, bool]:
    z_diff = SparsePoly.monomial(1, 0, 0, p.u2 - p.u1)
    x_pow = SparsePoly.monomial(1, p.s2 - 2 * p.s3, 0, 0)
    companion = (z_diff * zeta - (f * xi + x_pow * h ** 3)).is_zero()
    slice_ok = zeta.slice_x0() == {(4, 2 * p.u1 - p.u2): -1}
    return companion, slice_ok


def build_zeta(p, xi: SparsePoly) -> SparsePoly:
    """Order-3 element: zeta = (f^3 + z^(2u1-u2) h xi) / x^s3.

    Requires s2 > 2*s3, t1 = t3 = 1, u1 < u2 < 2*u1.  Verifies
    z^(u2-u1) zeta = f xi + x^(s2-2s3) h^3 and zeta = -y^4 z^(2u1-u2)
    mod (x).
    """
    if not (p.s2 > 2 * p.s3 and p.t1 == 1 and p.t3 == 1 and p.u1 < p.u2 < 2 * p.u1):
        raise HypothesisViolationError(
            f"need s2 > 2*s3, t1 = t3 = 1, u1 < u2 < 2*u1; got s2={p.s2}, "
            f"s3={p.s3}, u1={p.u1}, u2={p.u2}"
        )
    f, g, h = build_generators(p)
    z_pow = SparsePoly.monomial(1, 0, 0, 2 * p.u1 - p.u2)
    zeta = (f ** 3 + z_pow * h * xi).divide_exact((p.s3, 0, 0))
    companion, slice_ok = _zeta_clauses(p, zeta, xi, f, g, h)
    if not companion:
        raise AssertionError("companion identity for zeta failed")
    if not slice_ok:
        raise AssertionError("zeta is not -y^4 z^(2u1-u2) mod (x)")
    return zeta


class MonomialIdeal2D:
    """Monomial ideal in y, z given by generator exponent pairs (i, j)."""

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[tuple[int, int]]):
        self.generators = tuple(generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal2D({list(self.generators)})"


class InfiniteColengthError(ValueError):
    """Staircase count requested without pure powers of both variables."""


def staircase_length(ideal: MonomialIdeal2D) -> int:
    """Number of monomials y^i z^j outside the ideal.

    Finite exactly when the generators include a pure power of y and a pure
    power of z; counted column by column in the y-exponent.
    """
    gens = ideal.generators
    pure_y = [i for i, j in gens if j == 0]
    pure_z = [j for i, j in gens if i == 0]
    if not pure_y or not pure_z:
        raise InfiniteColengthError(f"no pure power pair among {gens}")
    total = 0
    for i in range(min(pure_y)):
        total += min(j for gi, j in gens if gi <= i)
    return total


def second_power_slice_ideal(p) -> MonomialIdeal2D:
    """Generators of the x = 0 slice of the second symbolic power.

    Valid under the hypotheses of the xi construction:
    (y^3, y^2 z^(2u1), y z^(u+u1), z^(2u)).
    """
    u = p.u1 + p.u2
    return MonomialIdeal2D([(3, 0), (2, 2 * p.u1), (1, u + p.u1), (0, 2 * u)])


def third_power_slice_ideal(p) -> MonomialIdeal2D:
    """x = 0 slice of the third symbolic power (zeta hypotheses):
    (y^5, y^4 z^(2u1-u2), y^3 z^u, y^2 z^(u+2u1), y z^(2u+u1), z^(3u))."""
    u = p.u1 + p.u2
    return MonomialIdeal2D(
        [
            (5, 0),
            (4, 2 * p.u1 - p.u2),
            (3, u),
            (2, u + 2 * p.u1),
            (1, 2 * u + p.u1),
            (0, 3 * u),
        ]
    )


def product_23_slice_ideal(p) -> MonomialIdeal2D:
    """x = 0 slice of (second power) * (third power)."""
    u = p.u1 + p.u2
    return MonomialIdeal2D(
        [
            (8, 0),
            (7, 2 * p.u1 - p.u2),
            (6, min(u, 4 * p.u1 - p.u2)),
            (5, 4 * p.u1),
            (4, 4 * p.u1 + p.u2),
            (3, 3 * u),
            (2, 3 * u + 2 * p.u1),
            (1, 4 * u + p.u1),
            (0, 5 * u),
        ]
    )


def symbolic_slice_length(p, n: int) -> int:
    """Colength of the x = 0 slice of the n-th symbolic power: n(n+1)/2 * a."""
    return n * (n + 1) // 2 * p.a


def check_product_power_gap(p) -> tuple[int, int, int]:
    """(product length, symbolic length, gap) certifying strict inclusion.

    The x = 0 slice of (2nd power)*(3rd power) is strictly smaller than that
    of the 5th symbolic power; the colength difference is
    min(u2 - u1, 2*u1 - u2) > 0 under the zeta hypotheses, which certifies
    that products of low symbolic powers never exhaust the fifth.
    """
    len_product = staircase_length(product_23_slice_ideal(p))
    len_symbolic = symbolic_slice_length(p, 5)
    gap = len_product - len_symbolic
    expected = min(p.u2 - p.u1, 2 * p.u1 - p.u2)
    if gap != expected:
        raise AssertionError(f"gap {gap} != min(u2-u1, 2u1-u2) = {expected}")
    return len_product, len_symbolic, gap


class FamilyRejectionError(ValueError):
    """Parameters outside the admissible rational box of the family."""


@dataclass(frozen=True)
class FamilyParams:
    """Exponent data of the infinitely-generated family.

    Built from rationals alpha (= u2/u1) and beta (= s2/s3) with
    1 < alpha < 5/4 and 2 < beta < 7/3 - (alpha-1)/(2-alpha), scaled by
    positive integers m (for s2, s3) and n (for u1, u2); always t1 = t3 = 1.
    """

    alpha: Fraction
    beta: Fraction
    m: int
    n: int
    s2: int
    s3: int
    u1: int
    u2: int

    t1: int = 1
    t3: int = 1

    @property
    def s(self) -> int:
        return self.s2 + self.s3

    @property
    def t(self) -> int:
        return self.t1 + self.t3

    @property
    def u(self) -> int:
        return self.u1 + self.u2

    @property
    def a(self) -> int:
        return self.t3 * self.u1 + self.t1 * self.u

    @property
    def b(self) -> int:
        return self.s3 * self.u2 + self.s2 * self.u

    @property
    def c(self) -> int:
        return self.s2 * self.t3 + self.s3 * self.t

    @property
    def weights(self) -> Expt:
        return (self.a, self.b, self.c)

    @property
    def gcd_abc(self) -> int:
        return math.gcd(self.a, self.b, self.c)

    @property
    def pairwise_coprime(self) -> bool:
        return (
            math.gcd(self.a, self.b) == 1
            and math.gcd(self.a, self.c) == 1
            and math.gcd(self.b, self.c) == 1
        )


def generate_family(alpha: Fraction, beta: Fraction, m: int, n: int) -> FamilyParams:
    """Validate the parameter box exactly and build the exponent data.

    s2/s3 = beta and u2/u1 = alpha in lowest terms, scaled by m and n.
    Raises FamilyRejectionError naming the violated inequality.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if m < 1 or n < 1:
        raise FamilyRejectionError("scales m, n must be positive integers")
    if not Fraction(1) < alpha < Fraction(5, 4):
        raise FamilyRejectionError(f"alpha={alpha} violates 1 < alpha < 5/4")
    bound = Fraction(7, 3) - (alpha - 1) / (2 - alpha)
    if not Fraction(2) < beta < bound:
        raise FamilyRejectionError(f"beta={beta} violates 2 < beta < {bound}")
    params = FamilyParams(
        alpha=alpha,
        beta=beta,
        m=m,
        n=n,
        s2=beta.numerator * m,
        s3=beta.denominator * m,
        u1=alpha.denominator * n,
        u2=alpha.numerator * n,
    )
    # implied by the parameter box; a failure here would be a bug
    assert params.s2 > 2 * params.s3 and params.u1 < params.u2 < 2 * params.u1
    return params


@dataclass(frozen=True)
class FamilyCheck:
    label: str
    ok: bool
    detail: str = ""


def verify_family_report(params: FamilyParams) -> list[FamilyCheck]:
    """Evaluate every polynomial identity and length count of the family.

    Returns one entry per clause so callers can print a pass/fail line each;
    all checks are exact.
    """
    checks: list[FamilyCheck] = []
    f, g, h = build_generators(params)
    checks.append(
        FamilyCheck("generator syzygies", check_minor_relations(f, g, h, params))
    )
    checks.append(
        FamilyCheck(
            "exponent inequalities s2 > 2*s3, u1 < u2 < 2*u1",
            params.s2 > 2 * params.s3 and params.u1 < params.u2 < 2 * params.u1,
        )
    )

    try:
        z_pow = SparsePoly.monomial(1, 0, 0, params.u2 - params.u1)
        xi = (z_pow * f * f - g * h).divide_exact((params.s3, 0, 0))
        checks.append(FamilyCheck("order-2 element: x^s3 divides z^(u2-u1) f^2 - g h", True))
    except NotDivisibleError as exc:
        checks.append(FamilyCheck("order-2 element: x^s3 divides z^(u2-u1) f^2 - g h", False, str(exc)))
        return checks
    companion, slice_ok = _xi_clauses(params, xi, f, g, h)
    checks.append(FamilyCheck("order-2 companion: z^u1 xi = x^(s2-s3) h^2 - f g", companion))
    checks.append(FamilyCheck("order-2 slice: xi = y^3 mod (x)", slice_ok))
    deg_xi = xi.weighted_degree(params.weights)
    checks.append(
        FamilyCheck(
            "order-2 element is a negative curve",
            is_negative_curve(deg_xi, 2, params.weights),
            f"deg^2 = {deg_xi * deg_xi} vs 4abc = {4 * params.a * params.b * params.c}",
        )
    )

    try:
        z_pow = SparsePoly.monomial(1, 0, 0, 2 * params.u1 - params.u2)
        zeta = (f ** 3 + z_pow * h * xi).divide_exact((params.s3, 0, 0))
        checks.append(FamilyCheck("order-3 element: x^s3 divides f^3 + z^(2u1-u2) h xi", True))
    except NotDivisibleError as exc:
        checks.append(FamilyCheck("order-3 element: x^s3 divides f^3 + z^(2u1-u2) h xi", False, str(exc)))
        return checks
    companion, slice_ok = _zeta_clauses(params, zeta, xi, f, g, h)
    checks.append(FamilyCheck("order-3 companion: z^(u2-u1) zeta = f xi + x^(s2-2s3) h^3", companion))
    checks.append(FamilyCheck("order-3 slice: zeta = -y^4 z^(2u1-u2) mod (x)", slice_ok))

    len2 = staircase_length(second_power_slice_ideal(params))
    checks.append(
        FamilyCheck(
            "slice colength at order 2 equals 3a",
            len2 == symbolic_slice_length(params, 2),
            f"{len2} vs 3a = {symbolic_slice_length(params, 2)}",
        )
    )
    len3 = staircase_length(third_power_slice_ideal(params))
    checks.append(
        FamilyCheck(
            "slice colength at order 3 equals 6a",
            len3 == symbolic_slice_length(params, 3),
            f"{len3} vs 6a = {symbolic_slice_length(params, 3)}",
        )
    )
    len_product, len_symbolic, gap = check_product_power_gap(params)
    checks.append(
        FamilyCheck(
            "order 2*3 product is strictly smaller than the order-5 power",
            gap > 0 and len_product > len_symbolic,
            f"colengths {len_product} vs {len_symbolic} (gap {gap})",
        )
    )
    return checks
