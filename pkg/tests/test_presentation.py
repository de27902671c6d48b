import pytest

from symrees.presentation import (
    CurveTriple,
    NotCoprimeError,
    NotThreeGeneratedError,
    compute_presentation,
    negative_curve_condition,
    representable,
    validate_assumptions,
)


def scan_representable(M, p, q):
    """Literal semigroup-membership scan, used as oracle for representable()."""
    for j in range(M // q + 1):
        if (M - j * q) % p == 0:
            return ((M - j * q) // p, j)
    return None


def test_representable_examples():
    assert representable(56, 19, 9) == (2, 2)  # 56 = 2*19 + 2*9
    assert representable(19, 8, 9) is None
    assert representable(8, 8, 9) == (1, 0)


def test_representable_matches_scan():
    for M in range(1, 400):
        for p, q in [(8, 9), (19, 9), (25, 29), (7, 3), (1, 5)]:
            assert representable(M, p, q) == scan_representable(M, p, q), (M, p, q)


KNOWN_PRESENTATIONS = {
    # triple -> (s, t1, u1, t, s2, u2, u, s3, t3)
    (8, 19, 9): (7, 2, 2, 3, 6, 1, 3, 1, 1),
    (25, 29, 72): (11, 7, 1, 11, 7, 2, 3, 4, 4),
    (17, 503, 169): (89, 2, 3, 3, 49, 4, 7, 40, 1),
}


@pytest.mark.parametrize("triple,expected", KNOWN_PRESENTATIONS.items())
def test_worked_example_presentations(triple, expected):
    pres = compute_presentation(CurveTriple(*triple))
    s, t1, u1, t, s2, u2, u, s3, t3 = expected
    assert (pres.s, pres.t1, pres.u1) == (s, t1, u1)
    assert (pres.t, pres.s2, pres.u2) == (t, s2, u2)
    assert (pres.u, pres.s3, pres.t3) == (u, s3, t3)
    assert not pres.from_fallback_witness


def test_family_base_triple_presentation():
    pres = compute_presentation(CurveTriple(16, 683, 97))
    assert (pres.s, pres.t, pres.u) == (73, 2, 11)
    assert (pres.s2, pres.s3) == (49, 24)
    assert (pres.t1, pres.t3) == (1, 1)
    assert (pres.u1, pres.u2) == (5, 6)


def test_degree_identities_hold():
    pres = compute_presentation(CurveTriple(8, 19, 9))
    a, b, c = 8, 19, 9
    assert pres.s * a == pres.t1 * b + pres.u1 * c
    assert pres.t * b == pres.s2 * a + pres.u2 * c
    assert pres.u * c == pres.s3 * a + pres.t3 * b
    assert a == pres.t * pres.u - pres.t3 * pres.u2
    assert b == pres.s * pres.u - pres.s3 * pres.u1
    assert c == pres.s * pres.t - pres.s2 * pres.t1
    assert (pres.deg_f, pres.deg_g, pres.deg_h) == (56, 57, 27)


def test_minimality_of_s_t_u_by_exhaustive_scan():
    pres = compute_presentation(CurveTriple(8, 19, 9))
    for k in range(1, pres.s):
        assert scan_representable(k * 8, 19, 9) is None
    for k in range(1, pres.t):
        assert scan_representable(k * 19, 8, 9) is None
    for k in range(1, pres.u):
        assert scan_representable(k * 9, 8, 19) is None


def test_all_representations_complete():
    from symrees.presentation import _all_representations

    # 23 = 6*3 + 1*5 = 1*3 + 4*5
    assert _all_representations(23, 3, 5) == [(6, 1), (1, 4)]
    assert _all_representations(4, 3, 5) == []
    for i, j in _all_representations(120, 7, 11):
        assert i >= 0 and j >= 0 and 7 * i + 11 * j == 120


def test_not_coprime_rejected():
    with pytest.raises(NotCoprimeError):
        compute_presentation(CurveTriple(6, 10, 15))
    with pytest.raises(NotCoprimeError):
        compute_presentation(CurveTriple(4, 6, 9))


def test_complete_intersections_rejected():
    # (2, 3, 5): z - xy and x^3 - y^2 generate, so only two generators
    with pytest.raises(NotThreeGeneratedError):
        compute_presentation(CurveTriple(2, 3, 5))
    # weight 1 forces s = 1 or t = 1 or u = 1
    with pytest.raises(NotThreeGeneratedError):
        compute_presentation(CurveTriple(1, 2, 3))


def test_positive_weights_required():
    with pytest.raises(ValueError):
        CurveTriple(0, 2, 3)


def test_assumptions_on_worked_examples():
    for triple in [(8, 19, 9), (25, 29, 72), (17, 503, 169)]:
        report = validate_assumptions(compute_presentation(CurveTriple(*triple)))
        assert report.all_hold, triple


def test_assumption_iii_fails_for_order_two_family_triple():
    pres = compute_presentation(CurveTriple(16, 683, 97))
    report = validate_assumptions(pres)
    assert report.pairwise_coprime and report.three_generated
    assert not report.negative_curve_iii  # 11^2 * 97 = 11737 > 16 * 683 = 10928
    assert not report.all_hold
    assert not negative_curve_condition(pres)


def test_negative_curve_condition_is_exact_integer_comparison():
    pres = compute_presentation(CurveTriple(8, 19, 9))
    assert pres.u**2 * pres.c == 81
    assert pres.a * pres.b == 152
    assert negative_curve_condition(pres)
