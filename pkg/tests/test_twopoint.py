import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsemigroups import (
    AxiomViolation,
    InvalidSemigroup,
    TwoPointSemigroup,
    UnknownCheck,
    Window,
    WindowTooSmall,
)

T, F = True, False


def projective_line():
    return TwoPointSemigroup.from_strip(0, 1, [])


def elliptic2():
    return TwoPointSemigroup.from_strip(1, 2, [[T, F], [F, F]])


def elliptic3():
    return TwoPointSemigroup.from_strip(1, 3, [[T, F, F], [F, F, T]])


def genus2_line():
    return TwoPointSemigroup.from_members(2, 1, [(0, 0)])


def all_sum_zero_strip():
    # valid strip whose corner maximals all have sum 0, so no symmetry
    # point candidate with sum 2g exists
    return TwoPointSemigroup.from_strip(1, 2, [[T, T], [F, F]])


def order_dependent_strip():
    # (1,0) has a column member only above sum 0, so the two jump
    # decompositions disagree there
    return TwoPointSemigroup.from_strip(1, 2, [[T, F], [F, T]])


@st.composite
def random_semigroups(draw):
    g = draw(st.integers(min_value=0, max_value=3))
    th = draw(st.integers(min_value=1, max_value=3))
    gens = []
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        s = draw(st.integers(min_value=0, max_value=2 * g + 2))
        m1 = draw(st.integers(min_value=-2 * th, max_value=2 * th))
        gens.append((m1, s - m1))
    return TwoPointSemigroup.from_members(g, th, gens)


points = st.tuples(st.integers(min_value=-8, max_value=8),
                   st.integers(min_value=-8, max_value=8))


# construction

def test_from_strip_projective_line():
    S = projective_line()
    assert S.genus == 0 and S.period == 1 and S.strip == ()
    assert S.contains((0, 0)) and S.contains((5, -5)) and S.contains((-3, 7))
    assert not S.contains((0, -1))


def test_from_strip_elliptic_membership():
    S = elliptic2()
    assert S.contains((1, 1))
    assert not S.contains((1, 0))
    assert not S.contains((-1, -1))
    assert S.contains((2, -2)) and S.contains((-2, 2))
    assert not S.contains((1, -1))


def test_from_strip_rejects_missing_origin():
    with pytest.raises(AxiomViolation, match="origin"):
        TwoPointSemigroup.from_strip(1, 2, [[F, T], [F, F]])


def test_from_strip_rejects_closure_violation():
    with pytest.raises(AxiomViolation, match="closure") as exc:
        TwoPointSemigroup.from_strip(2, 1, [[T], [T], [F], [F]])
    assert ((1, 0), (1, 0), (2, 0)) in exc.value.witnesses


def test_from_strip_shape_errors():
    with pytest.raises(InvalidSemigroup):
        TwoPointSemigroup.from_strip(1, 2, [[T, F]])
    with pytest.raises(InvalidSemigroup):
        TwoPointSemigroup.from_strip(1, 2, [[T], [F]])
    with pytest.raises(InvalidSemigroup):
        TwoPointSemigroup.from_strip(-1, 2, [])
    with pytest.raises(InvalidSemigroup):
        TwoPointSemigroup.from_strip(1, 0, [[], []])


def test_from_members_elliptic():
    S = TwoPointSemigroup.from_members(1, 2, [(2, -2), (1, 1)])
    assert S.strip == elliptic2().strip


def test_from_members_projective():
    S = TwoPointSemigroup.from_members(0, 1, [])
    assert S.strip == () and S.contains((4, -4))


def test_from_members_genus_two():
    S = genus2_line()
    assert S.strip == ((T,), (F,), (F,), (F,))
    assert S.contains((3, -3)) and not S.contains((2, -1))
    assert S.contains((0, 4))


def test_from_members_rejects_negative_sum_generator():
    with pytest.raises(InvalidSemigroup, match="negative"):
        TwoPointSemigroup.from_members(1, 2, [(0, -1)])


@settings(max_examples=60)
@given(random_semigroups(), points, st.integers(min_value=-3, max_value=3))
def test_membership_is_periodic(S, m, k):
    shifted = (m[0] + k * S.period, m[1] - k * S.period)
    assert S.contains(m) == S.contains(shifted)


# nabla sets and maximal points

def test_nabla_examples():
    S = elliptic2()
    assert S.nabla((1, 1), {1}) == []
    assert S.nabla((2, 0), {1}) == [(2, -2)]
    assert S.nabla((1, 1), {1, 2}) == [(1, 1)]
    assert S.nabla((1, 0), {1, 2}) == []


def test_nabla_leq_includes_the_boundary():
    S = elliptic2()
    assert S.nabla((2, 0), {1}, strict=False) == [(2, -2), (2, 0)]
    assert S.nabla((2, 0), {2}, strict=False) == [(0, 0), (2, 0)]


def test_nabla_rejects_empty_coordinate_set():
    with pytest.raises(ValueError):
        elliptic2().nabla((0, 0), set())


@settings(max_examples=40)
@given(random_semigroups(), points)
def test_nabla_matches_direct_scan(S, n):
    got = S.nabla(n, {1})
    expected = [(n[0], y) for y in range(-n[0], n[1])
                if S.contains((n[0], y))]
    assert got == expected


def test_is_maximal_examples():
    assert elliptic2().is_maximal((1, 1))
    assert not elliptic2().is_maximal((2, 0))
    assert projective_line().is_maximal((0, 0))
    assert not elliptic2().is_maximal((1, 0))


def test_corner_maximals_fixtures():
    assert projective_line().corner_maximals().points == ((1, -1),)
    assert elliptic2().corner_maximals().points == ((1, 1), (2, -2))
    assert elliptic3().corner_maximals().points == ((1, 1), (2, -1), (3, -3))
    assert genus2_line().corner_maximals().points == ((1, -1),)


@settings(max_examples=40)
@given(random_semigroups())
def test_corner_points_are_maximal_corner_representatives(S):
    for p in S.corner_maximals().points:
        assert S.is_maximal(p)
        assert 0 < p[0] <= S.period
        assert 0 <= p[0] + p[1] <= 2 * S.genus


def test_normalize_examples():
    S = elliptic2()
    assert S.normalize((0, 0)) == (2, -2)
    assert S.normalize((-1, 3)) == (1, 1)
    assert projective_line().normalize((0, 0)) == (1, -1)


@settings(max_examples=40)
@given(random_semigroups(), points)
def test_normalize_lands_in_corner_strip_and_preserves_class(S, p):
    q = S.normalize(p)
    assert 0 < q[0] <= S.period
    assert q[0] + q[1] == p[0] + p[1]
    assert (q[0] - p[0]) % S.period == 0
    assert S.normalize(q) == q


def test_corner_translates_match_scan_on_fixtures():
    W = Window((-6, 6), (-6, 6))
    for S in (projective_line(), elliptic2(), elliptic3(), genus2_line(),
              all_sum_zero_strip()):
        assert S.corner_translates_in(W) == sorted(S.maximal_points_in(W))


@settings(max_examples=40)
@given(random_semigroups())
def test_corner_translates_match_scan(S):
    W = S.default_window()
    assert S.corner_translates_in(W) == sorted(S.maximal_points_in(W))


# dimension functions and coefficients

def test_dim_jump_examples():
    S = elliptic2()
    assert S.dim_jump((1, 0)) == 1
    assert S.dim_jump((1, 1)) == 1
    assert S.dim_jump((2, 0)) == 2
    assert S.dim_jump((-5, -5)) == 0


def test_dim_nabla_examples():
    S = elliptic2()
    assert S.dim_nabla((1, 0)) == 0
    assert S.dim_nabla((2, 0)) == 2
    assert S.dim_nabla((1, 1)) == 1


def test_euler_c_examples():
    P = projective_line()
    assert P.euler_c((1, 1)) == -1
    assert P.euler_c((2, 0)) == -1
    assert elliptic2().euler_c((1, 1)) == 0
    with pytest.raises(ValueError):
        P.euler_c((0, 0), d_variant="other")


def test_euler_c_nabla_variant_differs_where_d_functions_do():
    S = elliptic2()
    assert S.euler_c((1, 0), "jump") != S.euler_c((1, 0), "nabla")


def test_maximal_count_coefficient_examples():
    P = projective_line()
    assert P.maximal_count_coefficient((1, 0)) == 2
    assert P.maximal_count_coefficient((0, 0)) == 1
    assert elliptic2().maximal_count_coefficient((1, 0)) == 1


def test_poincare_corner_elliptic():
    gf = elliptic2().poincare_corner()
    assert gf.num.terms() == [((1, 1), 1), ((2, -2), 1),
                              ((2, 2), -1), ((3, -1), -1)]
    assert gf.den == ((0, 1), (1, 0))


def test_poincare_corner_projective():
    gf = projective_line().poincare_corner()
    assert gf.num.terms() == [((1, -1), 1), ((2, 0), -1)]
    assert gf.den == ((0, 1), (1, 0))


# symmetry

def test_find_symmetry_point_elliptic():
    rep = elliptic2().find_symmetry_point()
    assert rep.sigma == (1, 1)
    assert rep.involution_ok and rep.point_symmetry_ok
    assert rep.witnesses == ()


def test_find_symmetry_point_projective():
    rep = projective_line().find_symmetry_point()
    assert rep.sigma == (1, -1)
    assert rep.involution_ok and rep.point_symmetry_ok


def test_find_symmetry_point_elliptic_period_three():
    rep = elliptic3().find_symmetry_point()
    assert rep.sigma == (1, 1)
    assert rep.point_symmetry_ok


def test_find_symmetry_point_none_without_sum_2g_candidate():
    assert all_sum_zero_strip().find_symmetry_point().sigma is None
    assert genus2_line().find_symmetry_point().sigma is None


def test_symmetry_sigma_has_sum_2g():
    for S in (projective_line(), elliptic2(), elliptic3()):
        rep = S.find_symmetry_point()
        assert rep.sigma[0] + rep.sigma[1] == 2 * S.genus
        assert S.is_maximal(rep.sigma)


# verification

def test_verify_rejects_unknown_check():
    with pytest.raises(UnknownCheck):
        elliptic2().verify("bogus")


def test_verify_rejects_window_without_margin():
    with pytest.raises(WindowTooSmall):
        elliptic2().verify("c_identity", Window((-1, 2), (-6, 6)))


def test_verify_scan_region_is_interior():
    rep = elliptic2().verify("closure", Window((-6, 6), (-6, 6)))
    assert rep.window == ((-6, 6), (-6, 6))
    assert rep.details["scan"] == ((-4, 4), (-4, 4))


def test_verify_closure_passes_on_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3()):
        assert S.verify("closure").passed


def test_verify_c_prop_elliptic_witnesses():
    rep = elliptic2().verify("c_prop", Window((-6, 6), (-6, 6)))
    assert not rep.passed
    assert set(rep.witnesses) == {(-1, 3), (1, 1), (3, -1)}
    assert rep.details["violations_both_maximal"] is True


def test_verify_c_prop_projective_clean():
    rep = projective_line().verify("c_prop", Window((-5, 5), (-5, 5)))
    assert rep.passed and rep.witnesses == ()


def test_verify_c_identity_passes_on_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3(), genus2_line(),
              all_sum_zero_strip()):
        assert S.verify("c_identity").passed


def test_verify_corner_translates_passes_on_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3()):
        rep = S.verify("corner_translates")
        assert rep.passed
        assert rep.details["scanned"] == rep.details["translates"]


def test_verify_lemma4_passes_on_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3(), genus2_line()):
        assert S.verify("lemma4").passed


def test_verify_d_agreement_elliptic_disagrees_on_sum_one_only():
    rep = elliptic2().verify("d_agreement", Window((-6, 6), (-6, 6)))
    assert not rep.passed
    expected = {(x, 1 - x) for x in range(-3, 5)}
    assert set(rep.witnesses) == expected


def test_verify_d_agreement_projective_passes():
    assert projective_line().verify("d_agreement").passed


def test_verify_symmetry_and_funceq_pass_on_symmetric_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3()):
        assert S.verify("symmetry").passed
        assert S.verify("funceq").passed


def test_verify_symmetry_fails_without_sigma():
    rep = all_sum_zero_strip().verify("symmetry")
    assert not rep.passed
    assert rep.details["sigma"] is None
    rep = all_sum_zero_strip().verify("funceq")
    assert not rep.passed


def test_order_independence_clean_on_fixtures():
    for S in (projective_line(), elliptic2(), elliptic3(), genus2_line()):
        assert S.order_independence_witnesses(S.default_window()) == []


def test_order_dependent_strip_breaks_c_identity():
    S = order_dependent_strip()
    W = S.default_window()
    assert (1, 0) in S.order_independence_witnesses(W)
    assert not S.verify("c_identity", W).passed


@settings(max_examples=30)
@given(random_semigroups())
def test_c_identity_holds_on_order_independent_semigroups(S):
    W = S.default_window()
    if S.order_independence_witnesses(W):
        return
    assert S.verify("c_identity", W).passed


def test_verification_report_to_json():
    rep = elliptic2().verify("c_prop", Window((-6, 6), (-6, 6)))
    out = rep.to_json()
    assert out["check"] == "c_prop"
    assert out["pass"] is False
    assert out["witnesses"] == [[-1, 3], [1, 1], [3, -1]]
    assert out["window"] == [[-6, 6], [-6, 6]]


def test_symmetry_report_to_json():
    out = elliptic2().find_symmetry_point().to_json()
    assert out == {"sigma": [1, 1], "involution_ok": True,
                   "point_symmetry_ok": True, "witnesses": []}
