"""Grid scan, refinement, boundary march: soundness and convergence checks."""

import cmath
import math

import pytest

from disknorms import (Alpha, HalfPlane, Koebe, RobertsonExtremal, SamplingPlan,
                       radial_profile, random_disk_points, random_member,
                       robertson_margin, weighted_inf_re, weighted_sup)
from disknorms.derivatives import pre_schwarzian_evaluator, schwarzian_evaluator
from disknorms.disksup import weight_factor

PLAN = SamplingPlan()


def test_constant_evaluator_peak_at_center():
    est = weighted_sup(lambda z: 3 - 4j, 1, PLAN)
    assert abs(est.value - 5.0) < 1e-12
    assert est.witness == 0
    assert est.witness_r == 0.0


def test_halfplane_pre_schwarzian_norm():
    hp = HalfPlane()
    est = weighted_sup(pre_schwarzian_evaluator(hp), 1, PLAN, r_limit=hp.radius_limit)
    assert abs(est.value - 4.0) < 1e-3
    assert est.value <= 4.0 + 1e-9       # certified lower bound
    assert abs(est.witness_theta) < 1e-12  # attained along the positive real axis


def test_extremal_alpha0_pre_norm_sharp_constant():
    fn = RobertsonExtremal(Alpha(0.0))
    est = weighted_sup(pre_schwarzian_evaluator(fn), 1, PLAN, r_limit=fn.radius_limit)
    assert abs(est.value - 2.0) < 1e-3
    assert est.value <= 2.0 + 1e-9


def test_koebe_schwarzian_norm():
    kb = Koebe()
    est = weighted_sup(schwarzian_evaluator(kb), 2, PLAN, r_limit=kb.radius_limit)
    assert abs(est.value - 6.0) < 1e-3
    assert est.value <= 6.0 + 1e-9


def test_norm_estimate_witness_invariant():
    kb = Koebe()
    g = schwarzian_evaluator(kb)
    est = weighted_sup(g, 2, PLAN, r_limit=kb.radius_limit)
    recomputed = weight_factor(est.witness_r, 2) * abs(g(est.witness))
    assert abs(recomputed - est.value) <= 1e-12 * max(1.0, est.value)


def test_margin_report_witness_invariant():
    hp = HalfPlane()
    alpha = Alpha(0.0)
    from disknorms.robertson import robertson_functional
    h = robertson_functional(hp, alpha)
    rep = weighted_inf_re(h, PLAN, r_limit=hp.radius_limit)
    assert abs(h(rep.witness).real - rep.inf_value) <= 1e-12 * max(1.0, abs(rep.inf_value))


def test_inf_constant():
    rep = weighted_inf_re(lambda z: 1.0 + 0j, PLAN)
    assert rep.inf_value == 1.0
    assert rep.witness == 0


def test_inf_halfplane_functional_approaches_zero_from_above():
    """Radial-limit oracle: Re (1+z)/(1-z) = (1-r)/(1+r) along z = -r."""
    hp = HalfPlane()
    vals = []
    for depth in (0, 2, 6):
        plan = SamplingPlan(refine_depth=depth)
        rep = weighted_inf_re(lambda z: (1 + z) / (1 - z), plan,
                              r_limit=hp.radius_limit)
        assert rep.inf_value >= 0.0
        vals.append(rep.inf_value)
        assert rep.witness.real < -0.9   # witness approaches the boundary near -1
    assert vals[2] <= vals[1] <= vals[0]
    assert vals[2] < 1e-9


def test_member_margin_nonnegative():
    a = Alpha(0.8)
    m = random_member(a, seed=21, degree=3)
    rep = robertson_margin(m, a, PLAN)
    assert rep.inf_value >= -1e-6


def test_radial_profile_extremal():
    fn = RobertsonExtremal(Alpha(0.0))
    prof = radial_profile(pre_schwarzian_evaluator(fn), 1, 0.0, [0.5, 0.9, 0.99])
    # algebraic oracle: (1 - r^2) * 2r/(1 - r^2) = 2r
    for got, expected in zip(prof, [1.0, 1.8, 1.98]):
        assert abs(got - expected) < 1e-12


def test_radial_profile_at_zero_is_plain_modulus():
    prof = radial_profile(lambda z: 2j, 2, 1.0, [0.0])
    assert prof == [2.0]


def test_radial_profile_koebe_imaginary_axis_decreasing():
    kb = Koebe()
    radii = [0.1, 0.3, 0.5, 0.7, 0.9]
    prof = radial_profile(schwarzian_evaluator(kb), 2, math.pi / 2, radii)
    # substitute z = ir in -6/(1-z^2)^2: profile 6 (1-r^2)^2/(1+r^2)^2
    for got, r in zip(prof, radii):
        ref = 6 * (1 - r * r) ** 2 / (1 + r * r) ** 2
        assert abs(got - ref) < 1e-12
    assert all(a > b for a, b in zip(prof, prof[1:]))


def test_radial_profile_rejects_radius_one():
    with pytest.raises(ValueError):
        radial_profile(lambda z: z, 1, 0.0, [1.0])


def test_monotone_refinement_in_depth():
    hp = HalfPlane()
    ev = pre_schwarzian_evaluator(hp)
    values = []
    for depth in range(7):
        plan = SamplingPlan(refine_depth=depth)
        values.append(weighted_sup(ev, 1, plan, r_limit=hp.radius_limit).value)
    assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))


def test_nonconvergent_flag_without_refinement():
    hp = HalfPlane()
    est = weighted_sup(pre_schwarzian_evaluator(hp), 1,
                       SamplingPlan(refine_depth=0), r_limit=hp.radius_limit)
    assert est.converged is False   # stall flag, not an error
    assert est.depth_used == 0


def test_lower_bound_soundness_catalog():
    cases = []
    for aval in (0.0, math.pi / 6, -math.pi / 4, math.pi / 3):
        a = Alpha(aval)
        fn = RobertsonExtremal(a)
        cases.append((pre_schwarzian_evaluator(fn), 1, 2 * a.cos, fn.radius_limit))
        cases.append((schwarzian_evaluator(fn), 2, 2 * a.cos * (2 - a.cos), fn.radius_limit))
    hp, kb = HalfPlane(), Koebe()
    cases.append((pre_schwarzian_evaluator(hp), 1, 4.0, hp.radius_limit))
    cases.append((schwarzian_evaluator(kb), 2, 6.0, kb.radius_limit))
    for ev, k, truth, r_limit in cases:
        est = weighted_sup(ev, k, PLAN, r_limit=r_limit)
        assert est.value <= truth + 1e-9
        assert est.value >= truth - 1e-3


def test_rotation_covariance():
    kb = Koebe()
    ev = pre_schwarzian_evaluator(kb)
    base = weighted_sup(ev, 1, PLAN, r_limit=kb.radius_limit)
    for zeta in (cmath.exp(0.4j), cmath.exp(-2.2j), 1j):
        rotated = weighted_sup(lambda z: ev(zeta * z), 1, PLAN,
                               r_limit=kb.radius_limit)
        assert abs(rotated.value - base.value) <= PLAN.rel_tol * base.value


def test_workers_do_not_change_values():
    fn = RobertsonExtremal(Alpha(0.4))
    ev = schwarzian_evaluator(fn)
    est1 = weighted_sup(ev, 2, PLAN, r_limit=fn.radius_limit, workers=1)
    est4 = weighted_sup(ev, 2, PLAN, r_limit=fn.radius_limit, workers=4)
    assert est1 == est4


def test_plan_validation():
    with pytest.raises(ValueError):
        SamplingPlan(radial_count=4)
    with pytest.raises(ValueError):
        SamplingPlan(angular_count=8)
    with pytest.raises(ValueError):
        SamplingPlan(r_cap=1.0)
    with pytest.raises(ValueError):
        SamplingPlan(refine_depth=-1)
    with pytest.raises(ValueError):
        SamplingPlan(rel_tol=0.0)


def test_weight_exponent_validation():
    with pytest.raises(ValueError):
        weighted_sup(lambda z: z, 3, PLAN)


def test_random_disk_points_deterministic_and_in_radius():
    a = random_disk_points(50, seed=4, radius=0.9)
    b = random_disk_points(50, seed=4, radius=0.9)
    assert a == b
    assert all(abs(z) <= 0.9 for z in a)
    assert random_disk_points(5, seed=5) != random_disk_points(5, seed=6)
