import random
from fractions import Fraction

import pytest

from symrees.lattice import LatticePoint, enumerate_points
from symrees.polynomials import SparsePoly, curve_substitution_zero
from symrees.presentation import CurveTriple, compute_presentation
from symrees.witness import (
    AssumptionViolationError,
    NoWitnessError,
    Verdict,
    build_matrix,
    classify,
    derivative_orders,
    extract_witness,
    huneke_witness_exists,
    piece_dimension,
    shift_membership_test,
    witness_system,
    _scaled_system,
)


def pres(a, b, c):
    return compute_presentation(CurveTriple(a, b, c))


def pts(pairs):
    return [LatticePoint(a, b) for a, b in pairs]


def test_derivative_order_sequence_is_frozen():
    assert derivative_orders(3) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(derivative_orders(7)) == 28


def test_build_matrix_single_point():
    system = build_matrix(pts([(0, 0)]), 1)
    assert system.base.entries == [[1]]


def test_build_matrix_pinned_example():
    system = build_matrix(pts([(0, 0), (1, 0), (1, -1)]), 2)
    assert system.orders == ((0, 0), (1, 0), (0, 1))
    assert system.base.entries == [[1, 1, 1], [0, 1, 1], [0, 0, -1]]


def test_build_matrix_17_503_169_is_square():
    p = pres(17, 503, 169)
    system = witness_system(p)
    assert system.base.rows == 28
    assert system.base.cols == 28


def test_build_matrix_rejects_duplicates():
    with pytest.raises(ValueError):
        build_matrix(pts([(0, 0), (0, 0)]), 1)


def test_scaled_system_matches_spec_system(validated_30):
    # the binomial-rescaled rows must have the same rank and kernel
    for p in validated_30[::9]:
        points = enumerate_points(p, 1)
        spec_form = build_matrix(points, p.u).base
        fast_form = _scaled_system(points, p.u)
        assert spec_form.rank() == fast_form.rank()
        for vec in fast_form.null_space():
            assert all(v == 0 for v in spec_form.mul_vector(vec))


def test_piece_dimension_values():
    p = pres(8, 19, 9)
    assert piece_dimension(p, 1, 0) == 11  # no constraints
    assert piece_dimension(p, 1, 3) == 5  # frozen: 11 points, full-rank 6-row system
    assert piece_dimension(p, 1, 3) >= 11 - 6

    q = pres(25, 29, 72)
    assert piece_dimension(q, 1, 3) == 0  # frozen: 6x6 system is nonsingular
    assert piece_dimension(q, 2, 6) == 1  # frozen exploratory value


def test_piece_dimension_lower_bound(validated_30):
    for p in validated_30[::13]:
        n_points = len(enumerate_points(p, 1))
        assert piece_dimension(p, 1, p.u) >= n_points - p.u * (p.u + 1) // 2


def test_witness_existence_worked_examples():
    assert huneke_witness_exists(pres(8, 19, 9)) is True
    assert huneke_witness_exists(pres(25, 29, 72)) is False
    assert huneke_witness_exists(pres(17, 503, 169)) is False


def test_witness_test_requires_hypotheses():
    with pytest.raises(AssumptionViolationError):
        huneke_witness_exists(pres(16, 683, 97))


def test_extracted_witness_8_19_9():
    p = pres(8, 19, 9)
    w = extract_witness(p)
    assert w.coefficients[LatticePoint(0, 0)] == 1
    assert sum(w.coefficients.values()) == 0  # the (0,0) constraint row
    assert shift_membership_test(w.coefficients, 3)
    # frozen deterministic witness
    assert w.integerized() == {
        LatticePoint(0, 0): 1,
        LatticePoint(1, -2): 1,
        LatticePoint(1, -1): -1,
        LatticePoint(1, 0): -3,
        LatticePoint(2, -1): -2,
        LatticePoint(2, 0): 5,
        LatticePoint(3, 1): -1,
    }


def test_witness_polynomial_is_homogeneous_of_degree_ab():
    p = pres(8, 19, 9)
    w = extract_witness(p)
    monos = w.monomials(p)
    assert all(ex >= 0 and ey >= 0 and ez >= 0 for ex, ey, ez, _ in monos)
    assert {8 * ex + 19 * ey + 9 * ez for ex, ey, ez, _ in monos} == {152}
    poly = SparsePoly({(ex, ey, ez): c for ex, ey, ez, c in monos})
    assert curve_substitution_zero(poly, (8, 19, 9))


def test_no_witness_error():
    with pytest.raises(NoWitnessError):
        extract_witness(pres(25, 29, 72))


def test_shift_membership_basics():
    v_minus_1 = {(1, 0): 1, (0, 0): -1}
    assert shift_membership_test(v_minus_1, 1)
    assert not shift_membership_test(v_minus_1, 2)
    product = {(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1}  # (v-1)(w-1)
    assert shift_membership_test(product, 2)
    assert not shift_membership_test(product, 3)
    assert shift_membership_test({}, 4)  # zero element lies in every power


def test_shift_membership_handles_negative_exponents():
    # v^-1 - 1 = -v^-1 (v - 1)
    phi = {(-1, 0): 1, (0, 0): -1}
    assert shift_membership_test(phi, 1)
    assert not shift_membership_test(phi, 2)
    # (v^-1 - 1)(w^-2 - 1)
    phi = {(-1, -2): 1, (-1, 0): -1, (0, -2): -1, (0, 0): 1}
    assert shift_membership_test(phi, 2)
    assert not shift_membership_test(phi, 3)


def _random_point_set(rng, max_size=20):
    size = rng.randint(1, max_size)
    points = set()
    while len(points) < size:
        points.add((rng.randint(-8, 8), rng.randint(-8, 8)))
    return pts(sorted(points))


def test_oracle_agrees_with_matrix_on_random_instances():
    rng = random.Random(61001)
    for _ in range(120):
        points = _random_point_set(rng, max_size=12)
        n = rng.randint(1, 5)
        system = build_matrix(points, n)
        for vec in system.base.null_space():
            coeffs = dict(zip(points, vec))
            assert shift_membership_test(coeffs, n)
        # random vector: member iff annihilated by the constraint rows
        vec = [Fraction(rng.randint(-5, 5)) for _ in points]
        is_member = all(v == 0 for v in system.base.mul_vector(vec))
        assert shift_membership_test(dict(zip(points, vec)), n) == is_member


def _random_staircase(rng, u):
    alphas = rng.sample(range(-15, 16), u)
    points = []
    for i, alpha in enumerate(alphas, start=1):
        betas = sorted(rng.sample(range(-15, 16), i))
        points.extend(LatticePoint(alpha, b) for b in betas)
    return points


def test_staircase_configurations_have_trivial_kernel():
    # columns with 1, 2, ..., u points at distinct abscissas admit no
    # element of the u-th power of the shifted maximal ideal
    rng = random.Random(61002)
    for _ in range(40):
        u = rng.randint(1, 5)
        points = _random_staircase(rng, u)
        system = build_matrix(points, u)
        assert system.base.rank() == len(points)
        assert system.base.null_space() == []


def test_piece_dimension_exploratory_scale_regressions():
    p = pres(8, 19, 9)
    assert len(enumerate_points(p, 2)) == 38
    assert piece_dimension(p, 2, 3) == 32  # frozen: 38 points minus 6 full-rank rows
    assert piece_dimension(p, 2, 6) == 17  # frozen: 38 points minus 21 full-rank rows


def test_eu_forces_full_row_rank(validated_30):
    # under EU a staircase subset of columns is nonsingular, so the witness
    # system always has independent constraint rows
    from symrees.criteria import check_eu

    for p in validated_30[::5]:
        if check_eu(p).holds:
            n_points = len(enumerate_points(p, 1))
            assert piece_dimension(p, 1, p.u) == n_points - p.u * (p.u + 1) // 2


def test_witness_decision_matches_direct_kernel_inspection(validated_30):
    # third route: existence of a kernel vector with nonzero constant
    # coordinate, read off a nullspace basis of the unscaled system
    for p in validated_30[::31]:
        points = enumerate_points(p, 1)
        system = build_matrix(points, p.u)
        j = points.index(LatticePoint(0, 0))
        direct = any(vec[j] != 0 for vec in system.base.null_space())
        assert huneke_witness_exists(p) == direct, p.triple


def test_classify_worked_examples():
    v = classify(CurveTriple(8, 19, 9))
    assert v.noetherian is True and v.witness_exists is True
    assert v.eu.holds and not v.gk.holds
    assert (v.points, v.dim_piece_u) == (11, 5)

    v = classify(CurveTriple(25, 29, 72))
    assert v.noetherian is False and v.witness_exists is False
    assert not v.eu.holds and v.gk.five_way.value == "GK3"
    assert v.points == 6

    v = classify(CurveTriple(17, 503, 169))
    assert v.noetherian is False
    assert not v.eu.holds and not v.gk.holds and v.gk.five_way is None


def test_pure_witness_decision_when_no_criterion_fires():
    # smallest validated triples where neither EU nor GK applies and the
    # kernel computation alone decides (all turn out non-Noetherian)
    for triple, dim in [((11, 58, 13), 0), ((58, 11, 13), 0), ((19, 60, 17), 1)]:
        v = classify(CurveTriple(*triple))
        assert not v.eu.holds and not v.gk.holds, triple
        assert v.witness_exists is False
        assert v.noetherian is False
        assert v.dim_piece_u == dim, triple


def test_classify_inapplicable_cases():
    v = classify(CurveTriple(6, 10, 15))
    assert v.noetherian is None and "coprime" in v.reason
    assert v.witness_exists is None

    v = classify(CurveTriple(2, 3, 5))
    assert v.noetherian is None and "three binomials" in v.reason

    v = classify(CurveTriple(16, 683, 97))
    assert v.noetherian is None
    assert v.assumptions.pairwise_coprime and v.assumptions.three_generated
    assert not v.assumptions.negative_curve_iii
    assert v.eu is not None and v.gk is not None  # criteria still reported


def test_classify_with_witness_round_trip():
    v = classify(CurveTriple(8, 19, 9), want_witness=True)
    assert v.witness is not None
    assert v.witness.coefficients[LatticePoint(0, 0)] == 1
    v2 = classify(CurveTriple(8, 19, 9))
    assert v2.witness is None


def test_verdicts_match_criteria_on_validated_pool(validated_30):
    for p in validated_30[::5]:
        v = classify(p.triple)
        assert isinstance(v, Verdict)
        assert v.noetherian == v.witness_exists
        if v.eu.holds:
            assert v.witness_exists
        if v.gk.holds:
            assert not v.witness_exists
