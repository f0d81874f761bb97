"""One verifier per certified statement, each producing a TheoremReport.

Verifiers test exactly what the underlying proofs establish.  The
distortion, growth and norm-bound statements all rest on a Schwarz-lemma
step that needs phi(0) = 0, equivalently f''(0) = 0; the half-plane map
(a genuine member with f''(0) = 2 and pre-Schwarzian norm 4 > 2) shows the
hypothesis cannot be dropped, so verifiers refuse with precondition_unmet
instead of failing when f''(0) != 0 or when membership cannot be certified.
Norm estimates are still computed and reported in those cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .catalog import Alpha, AnalyticFn, SeriesFn
from .derivatives import pre_schwarzian_evaluator, schwarzian_evaluator
from .disksup import SamplingPlan, weighted_inf_re, weighted_sup
from .quadrature import quadrature, quadrature_complex
from .robertson import (characterization_residuals, is_certified_member,
                        robertson_margin)

PASS = "pass"
FAIL = "fail"
PRECONDITION_UNMET = "precondition_unmet"

SECOND_DERIV_ZERO_EPS = 1e-10
GROWTH_R_CAP = 0.999
# Residual scans carry the (1-|z|^2) weight inside the functional, where the
# radius is no longer known exactly; keeping a 1e-6 gap to the boundary keeps
# the cancellation error of the weight below 1e-9.
RESIDUAL_SCAN_CEILING = 1.0 - 1e-6

BOUND_TOL = 1e-4
DISTORTION_TOL = 1e-8
GROWTH_TOL = 1e-7
RESIDUAL_TOL = 1e-6
SCHUR_TOL = 1e-9


@dataclass(frozen=True)
class TheoremReport:
    """Verdict of one verifier.

    For pass/fail verdicts, status is fail iff max_violation exceeds the
    tolerance recorded in details.  estimate/bound carry the side report
    (norm estimate vs. theorem bound) whenever one was computed, including
    precondition_unmet outcomes.
    """

    theorem_id: str
    status: str
    max_violation: float
    witness: Optional[complex]
    details: str
    estimate: Optional[float] = None
    bound: Optional[float] = None


@dataclass(frozen=True)
class GrowthBounds:
    r: float
    lower: float
    upper: float


def growth_bounds(r: float, alpha: Alpha) -> GrowthBounds:
    """Two-sided bounds for |f(z)| at |z| = r: integrals of (1 -+ xi^2)^(-cos a)."""
    if not 0.0 <= r <= GROWTH_R_CAP:
        raise ValueError(f"need 0 <= r <= {GROWTH_R_CAP}, got {r}")
    if r == 0.0:
        return GrowthBounds(0.0, 0.0, 0.0)
    c = alpha.cos
    lower = quadrature(lambda t: (1.0 + t * t) ** -c, 0.0, r, 1e-10)
    upper = quadrature(lambda t: (1.0 - t * t) ** -c, 0.0, r, 1e-10)
    return GrowthBounds(r, lower, upper)


def _margin_detail(report) -> str:
    return (f"sampled membership margin {report.inf_value:.6g} at "
            f"z = {report.witness!r}")


def verify_T41(f: AnalyticFn, alpha: Alpha, plan: SamplingPlan,
               tol: float = RESIDUAL_TOL, workers: int = 1) -> TheoremReport:
    """Membership implies both pointwise characterizations (residuals >= 0)."""
    margin = robertson_margin(f, alpha, plan, workers)
    if not is_certified_member(margin):
        return TheoremReport(
            "T41", PRECONDITION_UNMET, 0.0, margin.witness,
            "not certified as a class member; the implications are vacuous: "
            + _margin_detail(margin))

    ceiling = min(f.radius_limit, RESIDUAL_SCAN_CEILING)

    def h_ii(z: complex) -> complex:
        return complex(characterization_residuals(f, alpha, z)[0], 0.0)

    def h_iii(z: complex) -> complex:
        return complex(characterization_residuals(f, alpha, z)[1], 0.0)

    inf_ii = weighted_inf_re(h_ii, plan, r_limit=ceiling, workers=workers)
    inf_iii = weighted_inf_re(h_iii, plan, r_limit=ceiling, workers=workers)
    worst = min(inf_ii.inf_value, inf_iii.inf_value)
    witness = inf_ii.witness if inf_ii.inf_value <= inf_iii.inf_value else inf_iii.witness
    status = PASS if worst >= -tol else FAIL
    return TheoremReport(
        "T41", status, max(0.0, -worst), witness,
        f"residual minima: ii = {inf_ii.inf_value:.6g}, iii = {inf_iii.inf_value:.6g}; "
        f"tolerance {tol:g}; " + _margin_detail(margin))


def verify_T42_distortion(f: AnalyticFn, alpha: Alpha, points: Sequence[complex],
                          tol: float = DISTORTION_TOL, plan: Optional[SamplingPlan] = None,
                          workers: int = 1) -> TheoremReport:
    """(1+|z|^2)^(-cos a) <= |f'(z)| <= (1-|z|^2)^(-cos a) for certified members
    with f''(0) = 0."""
    f2 = f.second_deriv_origin()
    if abs(f2) > SECOND_DERIV_ZERO_EPS:
        return TheoremReport(
            "T42d", PRECONDITION_UNMET, 0.0, None,
            f"|f''(0)| = {abs(f2):.6g} != 0: the Schwarz-lemma step needs phi(0) = 0")
    margin = robertson_margin(f, alpha, plan or SamplingPlan(), workers)
    if not is_certified_member(margin):
        return TheoremReport("T42d", PRECONDITION_UNMET, 0.0, margin.witness,
                             "not certified as a class member; " + _margin_detail(margin))
    c = alpha.cos
    worst = 0.0
    witness = None
    for z in points:
        r2 = abs(z) ** 2
        fp = abs(f.derivatives(z).f1)
        lower = (1.0 + r2) ** -c
        upper = (1.0 - r2) ** -c
        viol = max(lower - fp, fp - upper)
        if viol > worst:
            worst, witness = viol, z
    status = PASS if worst <= tol else FAIL
    return TheoremReport(
        "T42d", status, max(0.0, worst), witness,
        f"max two-sided distortion violation {worst:.6g} over {len(points)} points; "
        f"tolerance {tol:g}")


def verify_T42_growth(f: AnalyticFn, alpha: Alpha, points: Sequence[complex],
                      tol: float = GROWTH_TOL, plan: Optional[SamplingPlan] = None,
                      workers: int = 1) -> TheoremReport:
    """Growth integrals bound |f(z)| for certified members with f''(0) = 0.

    Series-backed values are cross-checked against ray quadrature of f'.
    """
    f2 = f.second_deriv_origin()
    if abs(f2) > SECOND_DERIV_ZERO_EPS:
        return TheoremReport(
            "T42g", PRECONDITION_UNMET, 0.0, None,
            f"|f''(0)| = {abs(f2):.6g} != 0: the Schwarz-lemma step needs phi(0) = 0")
    margin = robertson_margin(f, alpha, plan or SamplingPlan(), workers)
    if not is_certified_member(margin):
        return TheoremReport("T42g", PRECONDITION_UNMET, 0.0, margin.witness,
                             "not certified as a class member; " + _margin_detail(margin))
    worst = 0.0
    witness = None
    cross = 0.0
    for z in points:
        val = abs(f.value(z))
        if isinstance(f, SeriesFn):
            ray = abs(quadrature_complex(lambda t: f.derivatives(t * z).f1 * z,
                                         0.0, 1.0, 1e-10))
            cross = max(cross, abs(val - ray))
        gb = growth_bounds(abs(z), alpha)
        viol = max(gb.lower - val, val - gb.upper)
        if viol > worst:
            worst, witness = viol, z
    status = PASS if worst <= tol else FAIL
    detail = (f"max two-sided growth violation {worst:.6g} over {len(points)} points; "
              f"tolerance {tol:g}")
    if isinstance(f, SeriesFn):
        detail += f"; series-vs-ray-quadrature discrepancy {cross:.3g}"
    return TheoremReport("T42g", status, max(0.0, worst), witness, detail)


def _norm_bound_report(theorem_id: str, f: AnalyticFn, alpha: Alpha,
                       plan: SamplingPlan, evaluator: Callable, k: int,
                       bound: float, tol: float, workers: int,
                       extra_precondition: Optional[str]) -> TheoremReport:
    """Shared body of the norm-bound verifiers; always computes the estimate."""
    est = weighted_sup(evaluator, k, plan, r_limit=f.radius_limit, workers=workers)
    side = f"norm estimate {est.value:.8g} vs bound {bound:.8g} (tolerance {tol:g})"
    if extra_precondition is not None:
        return TheoremReport(theorem_id, PRECONDITION_UNMET, 0.0, est.witness,
                             extra_precondition + "; side report: " + side,
                             estimate=est.value, bound=bound)
    margin = robertson_margin(f, alpha, plan, workers)
    if not is_certified_member(margin):
        return TheoremReport(theorem_id, PRECONDITION_UNMET, 0.0, margin.witness,
                             "not certified as a class member; " + _margin_detail(margin)
                             + "; side report: " + side,
                             estimate=est.value, bound=bound)
    viol = max(0.0, est.value - bound)
    status = PASS if viol <= tol else FAIL
    return TheoremReport(theorem_id, status, viol, est.witness, side,
                         estimate=est.value, bound=bound)


def verify_T43(f: AnalyticFn, alpha: Alpha, plan: SamplingPlan,
               tol: float = BOUND_TOL, workers: int = 1) -> TheoremReport:
    """Pre-Schwarzian norm <= 2 cos alpha for members with f''(0) = 0."""
    f2 = f.second_deriv_origin()
    gate = (None if abs(f2) <= SECOND_DERIV_ZERO_EPS else
            f"|f''(0)| = {abs(f2):.6g} != 0: hypothesis of the proof not met")
    return _norm_bound_report("T43", f, alpha, plan, pre_schwarzian_evaluator(f), 1,
                              2.0 * alpha.cos, tol, workers, gate)


def verify_T44(f: AnalyticFn, alpha: Alpha, plan: SamplingPlan,
               tol: float = BOUND_TOL, workers: int = 1) -> TheoremReport:
    """Schwarzian norm <= 2 cos alpha (2 - cos alpha) for members with f''(0) = 0."""
    f2 = f.second_deriv_origin()
    gate = (None if abs(f2) <= SECOND_DERIV_ZERO_EPS else
            f"|f''(0)| = {abs(f2):.6g} != 0: hypothesis of the proof not met")
    c = alpha.cos
    return _norm_bound_report("T44", f, alpha, plan, schwarzian_evaluator(f), 2,
                              2.0 * c * (2.0 - c), tol, workers, gate)


def t45_bound(alpha: Alpha, gamma: float) -> float:
    """2 cos a (1 + (1 - cos a)(1 + gamma)/(1 - gamma)); equals the gamma-free
    Schwarzian bound at gamma = 0."""
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"need 0 <= gamma < 1, got {gamma}")
    c = alpha.cos
    return 2.0 * c * (1.0 + (1.0 - c) * (1.0 + gamma) / (1.0 - gamma))


def verify_T45(f: AnalyticFn, alpha: Alpha, plan: SamplingPlan,
               tol: float = BOUND_TOL, workers: int = 1) -> TheoremReport:
    """gamma-refined Schwarzian bound: needs membership and gamma < 1."""
    gamma = abs(f.second_deriv_origin()) / (2.0 * alpha.cos)
    if gamma >= 1.0:
        return TheoremReport(
            "T45", PRECONDITION_UNMET, 0.0, None,
            f"gamma = {gamma:.6g} >= 1: bound undefined (and membership impossible)")
    return _norm_bound_report("T45", f, alpha, plan, schwarzian_evaluator(f), 2,
                              t45_bound(alpha, gamma), tol, workers, None)


def lemma_schur_check(phi: Callable[[complex], complex], phi0_abs: float,
                      points: Sequence[complex], tol: float = SCHUR_TOL) -> TheoremReport:
    """Schur-class growth bound:
    |phi|^2/(1-|phi|^2) <= (|phi(0)|+|z|)^2 / ((1-|phi(0)|)^2 (1-|z|^2))."""
    if not 0.0 <= phi0_abs < 1.0:
        return TheoremReport("LemA", PRECONDITION_UNMET, 0.0, None,
                             f"|phi(0)| = {phi0_abs:.6g} must be < 1")
    worst = -math.inf
    witness = None
    for z in points:
        m = abs(phi(z))
        if m >= 1.0:
            return TheoremReport(
                "LemA", PRECONDITION_UNMET, 0.0, z,
                f"sampled |phi({z!r})| = {m:.6g} >= 1: not a self-map of the disk")
        r2 = abs(z) ** 2
        lhs = m * m / (1.0 - m * m)
        rhs = (phi0_abs + abs(z)) ** 2 / ((1.0 - phi0_abs) ** 2 * (1.0 - r2))
        viol = lhs - rhs
        if viol > worst:
            worst, witness = viol, z
    status = PASS if worst <= tol else FAIL
    return TheoremReport(
        "LemA", status, max(0.0, worst), witness,
        f"max inequality violation {worst:.6g} over {len(points)} points; "
        f"tolerance {tol:g}")
