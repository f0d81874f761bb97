"""Catalog of analytic functions on the unit disk behind one evaluation interface.

Closed-form entries (identity, half-plane map, Koebe, the extremal power
families, Moebius maps, polynomials) report exact derivatives; series-backed
entries differentiate their stored Taylor series.  A deterministic generator
produces genuine members of the angle-alpha convexity class by choosing an
analytic self-map of the disk as a Blaschke product and integrating the
resulting log-derivative, so membership holds by construction up to series
truncation.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Optional

from .errors import NonFiniteValue, OutsideGuardRadius, VanishingDerivative
from .quadrature import quadrature_complex
from .series import DEFAULT_GUARD_RADIUS, DEFAULT_ORDER, TaylorSeries

VANISHING_DERIVATIVE_EPS = 1e-14
# Closed-form kinds are defined on the whole open disk; scans may approach
# the boundary up to this distance before floating-point cancellation in
# the weight factors costs digits.
CLOSED_FORM_CEILING = 1.0 - 1e-12
BLASCHKE_ZERO_CAP = 0.8
# |r e^{i theta}| can round a few ulps above the grid radius r.
GUARD_SLACK = 1e-13


@dataclass(frozen=True)
class Alpha:
    """Rotation angle of the class, in radians, strictly inside (-pi/2, pi/2)."""

    value: float

    def __post_init__(self):
        if not -math.pi / 2 < self.value < math.pi / 2:
            raise ValueError(f"alpha must lie strictly in (-pi/2, pi/2), got {self.value}")

    @property
    def cos(self) -> float:
        return math.cos(self.value)

    @property
    def phase(self) -> complex:
        """e^{i alpha}."""
        return cmath.exp(1j * self.value)


@dataclass(frozen=True)
class DerivStack:
    """Values of f, f', f'', f''' at one point."""

    f: complex
    f1: complex
    f2: complex
    f3: complex


def _unimodular(zeta: complex) -> complex:
    zeta = complex(zeta)
    r = abs(zeta)
    if abs(r - 1.0) > 1e-9:
        raise ValueError(f"zeta must be unimodular, got |zeta| = {r}")
    return zeta / r


class AnalyticFn:
    """Base class: immutable analytic function with derivative reporting."""

    name = "analytic"
    is_normalized = True

    @property
    def radius_limit(self) -> float:
        """Largest radius at which evaluation is allowed."""
        return CLOSED_FORM_CEILING

    def _check_radius(self, z: complex) -> complex:
        z = complex(z)
        if abs(z) > self.radius_limit + GUARD_SLACK:
            raise OutsideGuardRadius(
                f"{self.name}: |z| = {abs(z):.6g} exceeds limit {self.radius_limit}")
        return z

    def _guard(self, z: complex, values) -> None:
        for v in values:
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise NonFiniteValue(f"{self.name}: non-finite derivative at {z!r}")

    def derivatives(self, z: complex) -> DerivStack:
        z = self._check_radius(z)
        f, f1, f2, f3 = self._derivs(z)
        self._guard(z, (f, f1, f2, f3))
        if abs(f1) <= VANISHING_DERIVATIVE_EPS:
            raise VanishingDerivative(
                f"{self.name}: |f'({z!r})| = {abs(f1):.3g} breaks local univalence")
        return DerivStack(f, f1, f2, f3)

    def deriv123(self, z: complex) -> tuple[complex, complex, complex]:
        """(f', f'', f''') with the same guards but skipping the value of f
        (which may need quadrature for integral-defined catalog entries)."""
        z = self._check_radius(z)
        f1, f2, f3 = self._derivs123(z)
        self._guard(z, (f1, f2, f3))
        if abs(f1) <= VANISHING_DERIVATIVE_EPS:
            raise VanishingDerivative(
                f"{self.name}: |f'({z!r})| = {abs(f1):.3g} breaks local univalence")
        return f1, f2, f3

    def _derivs123(self, z: complex) -> tuple[complex, complex, complex]:
        _, f1, f2, f3 = self._derivs(z)
        return f1, f2, f3

    def value(self, z: complex) -> complex:
        return self.derivatives(z).f

    def fourth_derivative(self, z: complex) -> complex:
        raise NotImplementedError

    def second_deriv_origin(self) -> complex:
        return self.derivatives(0j).f2

    def _derivs(self, z: complex) -> tuple[complex, complex, complex, complex]:
        raise NotImplementedError

    def taylor(self, order: int = DEFAULT_ORDER,
               guard_radius: float = DEFAULT_GUARD_RADIUS) -> "SeriesFn":
        raise NotImplementedError(f"{self.name}: no series form implemented")


class Identity(AnalyticFn):
    name = "identity"

    def _derivs(self, z):
        return z, 1.0 + 0j, 0j, 0j

    def fourth_derivative(self, z):
        return 0j

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        return SeriesFn(TaylorSeries.from_polynomial([0, 1], order, guard_radius))


class HalfPlane(AnalyticFn):
    """z / (1 - z): convex map of the disk onto a half-plane."""

    name = "halfplane"

    def _derivs(self, z):
        w = 1.0 - z
        return z / w, w ** -2, 2 * w ** -3, 6 * w ** -4

    def fourth_derivative(self, z):
        self._check_radius(z)
        return 24 * (1.0 - z) ** -5

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        return SeriesFn(TaylorSeries([0.0] + [1.0] * order, guard_radius))


class Koebe(AnalyticFn):
    """z / (1 - z)^2: the rotation-free extremal of the univalent class."""

    name = "koebe"

    def _derivs(self, z):
        w = 1.0 - z
        return (z * w ** -2, (1 + z) * w ** -3,
                (4 + 2 * z) * w ** -4, (18 + 6 * z) * w ** -5)

    def fourth_derivative(self, z):
        self._check_radius(z)
        return (96 + 24 * z) * (1.0 - z) ** -6

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        return SeriesFn(TaylorSeries([float(n) for n in range(order + 1)], guard_radius))


@dataclass(frozen=True)
class RobertsonExtremal(AnalyticFn):
    """Integral of (1 - (zeta z)^2)^(-cos alpha): the sharpness family.

    f(z) = conj(zeta) * F(zeta z) with F' = (1 - w^2)^(-cos alpha); the value
    of f itself comes from adaptive quadrature along the ray since there is
    no elementary primitive except at alpha = 0.
    """

    alpha: Alpha
    zeta: complex = 1.0 + 0j

    def __post_init__(self):
        object.__setattr__(self, "zeta", _unimodular(self.zeta))

    @property
    def name(self):
        return "robertson-extremal"

    def _fprime_base(self, w: complex) -> complex:
        # principal branch; 1 - w^2 has positive real part for |w| < 1
        return cmath.exp(-self.alpha.cos * cmath.log(1.0 - w * w))

    def _derivs123(self, z):
        c = self.alpha.cos
        zt = self.zeta
        w = zt * z
        g = 1.0 - w * w
        fp = self._fprime_base(w)
        f2 = zt * 2 * c * w * fp / g
        f3 = zt * zt * 2 * c * (1 + (2 * c + 1) * w * w) * fp / (g * g)
        return fp, f2, f3

    def _derivs(self, z):
        f1, f2, f3 = self._derivs123(z)
        return self.value(z), f1, f2, f3

    def fourth_derivative(self, z):
        z = self._check_radius(z)
        c = self.alpha.cos
        zt = self.zeta
        w = zt * z
        g = 1.0 - w * w
        fp = self._fprime_base(w)
        return zt ** 3 * 4 * c * (c + 1) * w * (3 + (2 * c + 1) * w * w) * fp / (g * g * g)

    def value(self, z):
        z = self._check_radius(z)
        if z == 0:
            return 0j
        w = self.zeta * z
        integral = quadrature_complex(lambda t: self._fprime_base(t * w), 0.0, 1.0, 1e-12)
        return self.zeta.conjugate() * w * integral

    def second_deriv_origin(self):
        return 0j

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        z2 = TaylorSeries.from_polynomial([1.0, 0.0, -self.zeta ** 2], order, guard_radius)
        return SeriesFn(z2.pow(complex(-self.alpha.cos)).integrate())


@dataclass(frozen=True)
class SpiralPower(AnalyticFn):
    """f'(z) = (1 - z zeta)^(-2 e^{-i alpha} cos alpha): the equality family."""

    alpha: Alpha
    zeta: complex = 1.0 + 0j

    def __post_init__(self):
        object.__setattr__(self, "zeta", _unimodular(self.zeta))

    @property
    def name(self):
        return "spiral-power"

    @property
    def exponent(self) -> complex:
        return 2 * cmath.exp(-1j * self.alpha.value) * self.alpha.cos

    def _derivs(self, z):
        b = self.exponent
        zt = self.zeta
        w = 1.0 - zt * z
        logw = cmath.log(w)
        f1 = cmath.exp(-b * logw)
        f2 = b * zt * cmath.exp(-(b + 1) * logw)
        f3 = b * (b + 1) * zt * zt * cmath.exp(-(b + 2) * logw)
        # primitive in closed form; exponent 1 - b never vanishes for |alpha| < pi/2
        f = (cmath.exp((1 - b) * logw) - 1.0) / (zt * (b - 1))
        return f, f1, f2, f3

    def fourth_derivative(self, z):
        z = self._check_radius(z)
        b = self.exponent
        w = 1.0 - self.zeta * z
        return b * (b + 1) * (b + 2) * self.zeta ** 3 * cmath.exp(-(b + 3) * cmath.log(w))

    def second_deriv_origin(self):
        return self.exponent * self.zeta

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        base = TaylorSeries.from_polynomial([1.0, -self.zeta], order, guard_radius)
        return SeriesFn(base.pow(-self.exponent).integrate())


@dataclass(frozen=True)
class Moebius(AnalyticFn):
    """(a z + b) / (c z + d) with ad - bc != 0; Schwarzian-annihilated."""

    a: complex
    b: complex
    c: complex
    d: complex

    is_normalized = False

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) <= 1e-14:
            raise ValueError("Moebius map needs ad - bc != 0")

    @property
    def name(self):
        return "moebius"

    def _derivs(self, z):
        det = self.a * self.d - self.b * self.c
        w = self.c * z + self.d
        if abs(w) <= 1e-14:
            raise NonFiniteValue(f"moebius: pole at z = {z!r}")
        return ((self.a * z + self.b) / w, det / w ** 2,
                -2 * self.c * det / w ** 3, 6 * self.c ** 2 * det / w ** 4)

    def fourth_derivative(self, z):
        det = self.a * self.d - self.b * self.c
        w = self.c * z + self.d
        return -24 * self.c ** 3 * det / w ** 5

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        num = TaylorSeries.from_polynomial([self.b, self.a], order, guard_radius)
        den = TaylorSeries.from_polynomial([self.d, self.c], order, guard_radius)
        return SeriesFn(num / den, require_normalized=False)


@dataclass(frozen=True)
class Polynomial(AnalyticFn):
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def name(self):
        return "polynomial"

    @property
    def is_normalized(self):
        cs = self.coeffs
        return abs(cs[0]) == 0 and len(cs) > 1 and cs[1] == 1

    def _derivs(self, z):
        out = []
        for k in range(4):
            acc = 0j
            for n in range(len(self.coeffs) - 1, k - 1, -1):
                fall = 1.0
                for j in range(k):
                    fall *= n - j
                acc = acc * z + fall * self.coeffs[n]
            out.append(acc)
        return tuple(out)

    def fourth_derivative(self, z):
        acc = 0j
        for n in range(len(self.coeffs) - 1, 3, -1):
            acc = acc * z + n * (n - 1) * (n - 2) * (n - 3) * self.coeffs[n]
        return acc

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        return SeriesFn(TaylorSeries.from_polynomial(list(self.coeffs), order, guard_radius),
                        require_normalized=self.is_normalized)


class SeriesFn(AnalyticFn):
    """Analytic function backed by a truncated Taylor series of f itself.

    The first three derivative series are materialized eagerly (termwise
    differentiation, exact to truncation); the pre-Schwarzian and Schwarzian
    series are left to the derivative module.
    """

    def __init__(self, series: TaylorSeries, require_normalized: bool = True,
                 provenance: Optional["MemberProvenance"] = None):
        c0 = series.coeffs[0]
        c1 = series.coeffs[1] if series.order >= 1 else 0j
        if require_normalized and (abs(c0) > 1e-12 or abs(c1 - 1.0) > 1e-12):
            raise ValueError(
                f"normalized series needs c0 = 0, c1 = 1; got {c0!r}, {c1!r}")
        self.series = series
        self.is_normalized = require_normalized
        self.provenance = provenance
        self._d1 = series.diff()
        self._d2 = self._d1.diff()
        self._d3 = self._d2.diff()

    name = "series"

    @property
    def radius_limit(self) -> float:
        return self.series.guard_radius

    def _derivs(self, z):
        return (self.series.eval(z), self._d1.eval(z),
                self._d2.eval(z), self._d3.eval(z))

    def _derivs123(self, z):
        return self._d1.eval(z), self._d2.eval(z), self._d3.eval(z)

    def fourth_derivative(self, z):
        z = self._check_radius(z)
        return self._d3.diff().eval(z)

    def derivative_series(self) -> tuple[TaylorSeries, TaylorSeries, TaylorSeries]:
        return self._d1, self._d2, self._d3

    def second_deriv_origin(self):
        return self._d2.coeffs[0]

    def taylor(self, order=DEFAULT_ORDER, guard_radius=DEFAULT_GUARD_RADIUS):
        return self


class ZTimesDerivative(AnalyticFn):
    """g(z) = z f'(z); normalized whenever f is.

    Used for the duality transfer between the convexity-type and
    spirallikeness-type margins: z g'/g = 1 + z f''/f' identically.
    """

    def __init__(self, base: AnalyticFn):
        self.base = base
        self.is_normalized = base.is_normalized

    @property
    def name(self):
        return f"z-times-derivative({self.base.name})"

    @property
    def radius_limit(self):
        return self.base.radius_limit

    def _derivs(self, z):
        f1, f2, f3 = self.base.deriv123(z)
        f4 = self.base.fourth_derivative(z)
        return (z * f1, f1 + z * f2, 2 * f2 + z * f3, 3 * f3 + z * f4)

    def fourth_derivative(self, z):
        raise NotImplementedError("fifth derivative of the base not available")


def eval_derivatives(f: AnalyticFn, z: complex) -> DerivStack:
    """Evaluate (f, f', f'', f''') with radius and local-univalence guards."""
    return f.derivatives(z)


def second_deriv_origin(f: AnalyticFn) -> complex:
    if not f.is_normalized:
        raise ValueError(f"{f.name}: second_deriv_origin needs a normalized function")
    return f.second_deriv_origin()


@dataclass(frozen=True)
class MemberProvenance:
    """Construction record of a generated class member.

    ``phi`` reproduces the generating self-map exactly from the stored
    Blaschke zeros, independent of the series pipeline.
    """

    alpha: Alpha
    seed: int
    degree: int
    zero_second_deriv: bool
    blaschke_zeros: tuple
    gamma: float

    def phi(self, z: complex) -> complex:
        acc = 1.0 + 0j
        for a in self.blaschke_zeros:
            acc *= (z + a) / (1.0 + a.conjugate() * z)
        if self.zero_second_deriv:
            acc *= z
        return acc


def random_member(alpha: Alpha, seed: int, degree: int = 3,
                  zero_second_deriv: bool = False,
                  order: int = DEFAULT_ORDER,
                  guard_radius: float = DEFAULT_GUARD_RADIUS) -> SeriesFn:
    """Deterministic member of the class for the given angle.

    Draws 'degree' Blaschke factors (z + a)/(1 + conj(a) z) with |a| <= 0.8,
    multiplies by z when a vanishing second derivative at the origin is
    requested, and integrates f''/f' = 2 e^{-i alpha} cos(alpha) phi / (1 - z phi)
    at series level: f' = exp(integral), f = integral of f'.  The defining
    real-part condition then holds everywhere by construction, so sampled
    margins are bounded below by series truncation error only.
    """
    if not 1 <= degree <= 3:
        raise ValueError(f"degree must be 1..3, got {degree}")
    rng = random.Random(seed)
    zeros = []
    for _ in range(degree):
        rho = BLASCHKE_ZERO_CAP * math.sqrt(rng.random())
        psi = 2.0 * math.pi * rng.random()
        zeros.append(rho * cmath.exp(1j * psi))
    zeros = tuple(zeros)

    num = TaylorSeries.from_polynomial([1.0], order, guard_radius)
    den = TaylorSeries.from_polynomial([1.0], order, guard_radius)
    for a in zeros:
        num = num * TaylorSeries.from_polynomial([a, 1.0], order, guard_radius)
        den = den * TaylorSeries.from_polynomial([1.0, a.conjugate()], order, guard_radius)
    phi = num / den
    if zero_second_deriv:
        phi = phi.shift_up()

    one = TaylorSeries.constant(1.0, order, guard_radius)
    beta_hat = cmath.exp(-1j * alpha.value) * alpha.cos
    q = phi.scale(2 * beta_hat) / (one - phi.shift_up())
    fprime = q.integrate().exp()
    f = fprime.integrate()

    gamma = 0.0 if zero_second_deriv else abs(complex(math.prod(zeros)))
    prov = MemberProvenance(alpha, seed, degree, zero_second_deriv, zeros, gamma)
    return SeriesFn(f, provenance=prov)
