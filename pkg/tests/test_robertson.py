"""Membership margins, duality, self-map transform, residuals, thresholds."""

import cmath
import math

import pytest

from disknorms import (Alpha, HalfPlane, Identity, Koebe, RobertsonExtremal,
                       SamplingPlan, SpiralPower, ZTimesDerivative,
                       characterization_residuals, cubic_root, duality_check,
                       is_certified_member, phi_transform, random_disk_points,
                       random_member, robertson_margin, spirallike_margin,
                       univalence_criteria, weighted_sup)
from disknorms.derivatives import pre_schwarzian_evaluator
from disknorms.errors import PhiPoleEncountered

PLAN = SamplingPlan()


# -- robertson_margin --------------------------------------------------------

def test_margin_identity_is_cos_alpha():
    for aval in (0.0, 0.9, -1.3):
        a = Alpha(aval)
        rep = robertson_margin(Identity(), a, PLAN)
        assert abs(rep.inf_value - a.cos) < 1e-12


def test_margin_halfplane_boundary_sharp_member():
    a = Alpha(0.0)
    rep = robertson_margin(HalfPlane(), a, PLAN)
    assert 0.0 <= rep.inf_value < 1e-6
    assert is_certified_member(rep)
    assert abs(rep.witness) > 0.99


def test_margin_koebe_not_convex():
    """Hand oracle: at z = -1/2 the functional is (1 - 2 + 1/4)/(3/4) = -1."""
    a = Alpha(0.0)
    rep = robertson_margin(Koebe(), a, PLAN)
    assert rep.inf_value < -0.9
    assert not is_certified_member(rep)
    z = -0.5 + 0j
    val = (1 + 4 * z + z * z) / (1 - z * z)
    assert abs(val.real + 1.0) < 1e-14


def test_margin_extremal_family_alpha0_member_only():
    """The sharpness family lies in the class only at alpha = 0: for
    alpha != 0 its functional covers a rotated half-plane and goes negative."""
    a0 = Alpha(0.0)
    assert is_certified_member(robertson_margin(RobertsonExtremal(a0), a0, PLAN))
    ap = Alpha(math.pi / 4)
    rep = robertson_margin(RobertsonExtremal(ap), ap, PLAN)
    assert rep.inf_value < -1.0


def test_margin_generated_members():
    for seed in range(5):
        a = Alpha(-1.1 + 0.5 * seed)
        m = random_member(a, seed=seed, degree=1 + seed % 3,
                          zero_second_deriv=bool(seed % 2))
        rep = robertson_margin(m, a, PLAN)
        assert rep.inf_value >= -1e-6


# -- spirallike_margin -------------------------------------------------------

def test_spirallike_identity():
    for aval in (0.0, 0.6, -1.2):
        a = Alpha(aval)
        rep = spirallike_margin(Identity(), a, PLAN)
        assert abs(rep.inf_value - a.cos) < 1e-12


def test_spirallike_koebe_is_starlike():
    rep = spirallike_margin(Koebe(), Alpha(0.0), PLAN)
    assert rep.inf_value >= -1e-9


def test_spirallike_zero_value_guard():
    from disknorms import Polynomial
    from disknorms.errors import ZeroValueEncountered
    # g = z(1 - 2z) vanishes at z = 0.5, which the 8-node grid with
    # r_cap = 0.5 hits exactly (last sine node equals the cap)
    g = Polynomial((0, 1, -2))
    plan = SamplingPlan(radial_count=8, angular_count=16, r_cap=0.5,
                        refine_depth=0)
    with pytest.raises(ZeroValueEncountered):
        spirallike_margin(g, Alpha(0.0), plan)


def test_spirallike_transfer_equals_robertson_margin():
    """z g'/g for g = z f' coincides pointwise with 1 + z f''/f', so the
    two margins agree; membership itself transfers only where f is a member
    (alpha = 0 for the extremal family)."""
    a0 = Alpha(0.0)
    f0 = RobertsonExtremal(a0)
    rep = spirallike_margin(ZTimesDerivative(f0), a0, PLAN)
    assert rep.inf_value >= -1e-6
    ap = Alpha(0.7)
    fp = RobertsonExtremal(ap)
    sp = spirallike_margin(ZTimesDerivative(fp), ap, PLAN)
    rb = robertson_margin(fp, ap, PLAN)
    assert abs(sp.inf_value - rb.inf_value) <= 1e-6 * max(1.0, abs(rb.inf_value))


# -- duality_check ------------------------------------------------------------

def test_duality_identity_catalog():
    pts = random_disk_points(100, seed=12, radius=0.9)
    for fn in (HalfPlane(), Koebe(), RobertsonExtremal(Alpha(0.5))):
        assert duality_check(fn, Alpha(0.3), pts) <= 1e-10


def test_duality_generated_members():
    pts = random_disk_points(100, seed=13, radius=0.9)
    for seed in range(4):
        a = Alpha(0.3 * seed - 0.5)
        m = random_member(a, seed=seed, degree=2)
        assert duality_check(m, a, pts) <= 1e-8


# -- phi_transform -------------------------------------------------------------

def test_phi_transform_extremal_alpha0_is_z():
    """Algebraic oracle: (2z/(1-z^2)) / (2 + 2z^2/(1-z^2)) = z."""
    a = Alpha(0.0)
    phi = phi_transform(RobertsonExtremal(a), a)
    assert phi.gamma == 0.0
    for z in random_disk_points(25, seed=14, radius=0.9):
        assert abs(phi(z) - z) < 1e-11


def test_phi_transform_zero_second_deriv_member():
    a = Alpha(0.6)
    m = random_member(a, seed=5, degree=2, zero_second_deriv=True)
    assert phi_transform(m, a).gamma == 0.0


def test_phi_transform_koebe():
    """Algebraic oracle: phi = (2+z)/(1+2z), gamma = 2 (membership impossible)."""
    a = Alpha(0.0)
    phi = phi_transform(Koebe(), a)
    assert abs(phi.gamma - 2.0) < 1e-12
    for z in random_disk_points(25, seed=15, radius=0.45):
        ref = (2 + z) / (1 + 2 * z)
        assert abs(phi(z) - ref) < 1e-11


def test_phi_pole_detected():
    a = Alpha(0.0)
    phi = phi_transform(Koebe(), a)
    with pytest.raises(PhiPoleEncountered):
        phi(-0.5 + 0j)  # denominator 2 + z(4+2z)/(1-z^2) vanishes at z = -1/2


def test_gamma_above_one_implies_negative_margin():
    a = Alpha(0.0)
    assert phi_transform(Koebe(), a).gamma > 1
    rep = robertson_margin(Koebe(), a, PLAN)
    assert rep.inf_value < 0


def test_generated_member_phi_is_self_map_and_gamma_consistent():
    for seed in range(5):
        a = Alpha(-0.8 + 0.4 * seed)
        m = random_member(a, seed=40 + seed, degree=1 + seed % 3)
        phi = phi_transform(m, a)
        prov = m.provenance
        assert abs(phi.gamma - prov.gamma) < 1e-8
        worst = 0.0
        for z in random_disk_points(100, seed=50 + seed, radius=0.9):
            worst = max(worst, abs(phi(z)))
            # transform recovers the generating self-map up to truncation
            assert abs(phi(z) - prov.phi(z)) < 1e-7
        assert worst <= 1.0 + 1e-6


# -- characterization residuals -------------------------------------------------

def test_residuals_identity():
    for aval in (0.0, 0.8, -1.0):
        a = Alpha(aval)
        r2, r3 = characterization_residuals(Identity(), a, 0j)
        assert abs(r2 - a.cos) < 1e-14
        assert abs(r3 - 2 * a.cos) < 1e-14
        r2, r3 = characterization_residuals(Identity(), a, 0.4 + 0.2j)
        assert abs(r2 - a.cos) < 1e-14
        assert abs(r3 - 2 * a.cos * (1 - abs(0.4 + 0.2j))) < 1e-12


def test_residual_ii_vanishes_on_equality_family():
    """The spiral-power family has phi constant unimodular: equality case."""
    import random
    rng = random.Random(77)
    for _ in range(10):
        a = Alpha(rng.uniform(-1.4, 1.4))
        zeta = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        fn = SpiralPower(a, zeta)
        for z in random_disk_points(50, seed=rng.randrange(10**6), radius=0.9):
            r2, _ = characterization_residuals(fn, a, z)
            assert abs(r2) < 1e-9


def test_residual_iii_vanishes_on_equality_family():
    a = Alpha(0.9)
    fn = SpiralPower(a, cmath.exp(0.3j))
    for z in random_disk_points(25, seed=16, radius=0.9):
        _, r3 = characterization_residuals(fn, a, z)
        assert abs(r3) < 1e-9


def test_residual_iii_extremal_alpha0_on_real_axis():
    """Algebraic oracle: (1-r^2) 2r/(1-r^2) - 2r = 0, so res_iii = 2."""
    a = Alpha(0.0)
    fn = RobertsonExtremal(a)
    for r in (0.1, 0.5, 0.9):
        _, r3 = characterization_residuals(fn, a, complex(r, 0))
        assert abs(r3 - 2.0) < 1e-12


def test_residuals_nonnegative_for_members():
    for seed in range(4):
        a = Alpha(0.5 * seed - 0.9)
        m = random_member(a, seed=60 + seed, degree=1 + seed % 3)
        for z in random_disk_points(200, seed=70 + seed, radius=0.9):
            r2, r3 = characterization_residuals(m, a, z)
            assert r2 >= -1e-6
            assert r3 >= -1e-6


# -- cubic root and univalence rows ---------------------------------------------

def test_cubic_root_value():
    x0 = cubic_root()
    assert abs(x0 - 0.2034) < 5e-5
    assert abs(((16 * x0 + 16) * x0 + 1) * x0 - 1) < 1e-10


def test_cubic_root_sign_bracket():
    p = lambda x: 16 * x ** 3 + 16 * x ** 2 + x - 1
    assert p(0.20) < 0 < p(0.21)


def test_univalence_pfaltzgraff_guarantee():
    a = Alpha(math.acos(0.4))
    verdict = univalence_criteria(a, 0.1)
    rows = {r.name: r for r in verdict.criteria}
    assert rows["pfaltzgraff"].guarantees_univalence
    assert not rows["robertson"].guarantees_univalence
    assert not rows["singh-chichra"].guarantees_univalence
    assert verdict.any_guarantee


def test_univalence_singh_chichra_guarantee():
    # f''(0) = 0 certifies for every alpha, including ones the angle rows miss
    verdict = univalence_criteria(Alpha(0.3), 0.0)
    rows = {r.name: r for r in verdict.criteria}
    assert rows["singh-chichra"].guarantees_univalence
    assert not rows["pfaltzgraff"].guarantees_univalence  # cos(0.3) ~ 0.955 > 0.5
    verdict_edge = univalence_criteria(Alpha(1.5), 0.0)
    rows_edge = {r.name: r for r in verdict_edge.criteria}
    assert rows_edge["pfaltzgraff"].guarantees_univalence  # cos(1.5) ~ 0.0707


def test_univalence_becker_fails_for_halfplane():
    a = Alpha(0.0)
    hp = HalfPlane()
    est = weighted_sup(pre_schwarzian_evaluator(hp), 1, PLAN, r_limit=hp.radius_limit)
    verdict = univalence_criteria(a, 2.0, pre_norm=est)
    rows = {r.name: r for r in verdict.criteria}
    assert rows["becker"].applicable
    assert not rows["becker"].guarantees_univalence
    assert "exceeds" in rows["becker"].threshold_detail


def test_univalence_norm_rows_not_applicable_without_estimates():
    verdict = univalence_criteria(Alpha(0.2), 1.0)
    rows = {r.name: r for r in verdict.criteria}
    assert not rows["becker"].applicable
    assert not rows["nehari"].applicable


def test_univalence_norm_rows_never_certify_from_lower_bounds():
    a = Alpha(0.0)
    fn = Identity()
    est = weighted_sup(pre_schwarzian_evaluator(fn), 1, PLAN, r_limit=fn.radius_limit)
    verdict = univalence_criteria(a, 0.0, pre_norm=est)
    rows = {r.name: r for r in verdict.criteria}
    assert rows["becker"].applicable
    assert not rows["becker"].guarantees_univalence
    assert "not certified" in rows["becker"].threshold_detail


def test_threshold_ladder():
    assert cubic_root() < 0.2564 < 0.2588 < 0.5
