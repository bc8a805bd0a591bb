"""Spectral and polar-dual densities of the tempered-stable representation.

A side with gamma > 0 and alpha in (0, 1) has tempering kernel
q(x) = e^{-theta x} E_alpha(-lam x^alpha), which is completely monotone:
it is the Laplace transform of a probability density supported on
(theta, infinity).  That density is an affine image of the stable-ratio
law

    s_E(x) = (x^(alpha-1) / pi) sin(alpha pi)
             / (x^(2 alpha) + 2 x^alpha cos(alpha pi) + 1),

the distribution of the ratio of two independent positive alpha-stable
variables.  The per-side spectral density (mass delta) and its polar dual
(the x -> sgn(x)/|x| image weighted by |x|^gamma) are

    s(x)   = delta (x - theta)^(alpha-1) sin(alpha pi) / pi
             / (lam^-1 (x-theta)^(2 alpha) + 2 (x-theta)^alpha
                cos(alpha pi) + lam),                      x > theta,
    r(x)   = delta x^(alpha-gamma-1) (1 - theta x)^(alpha-1)
             sin(alpha pi) / pi
             / (lam^-1 (1-theta x)^(2 alpha) + 2 (1-theta x)^alpha
                x^alpha cos(alpha pi) + lam x^(2 alpha)),  0 < x < 1/theta,

with mirrored formulas on the negative side.  ``bernstein_reconstruct``
closes the loop: the numeric Laplace transform of s/delta reproduces the
tempering kernel.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np
from scipy.integrate import quad as _scipy_quad

from . import core
from .core import GtgsParams, Side
from .errors import DomainError, IncompatibleParams, QuadratureFailure
from .oracle import QuadratureConfig

__all__ = ["SpectralSupport", "stable_ratio_density", "spectral_density",
           "rosinski_density", "spectral_support", "rosinski_support",
           "bernstein_reconstruct", "side_spectral_mass"]

_DEFAULT_CFG = QuadratureConfig()


@dataclasses.dataclass(frozen=True)
class SpectralSupport:
    """Support interval of a one-sided spectral or polar-dual density.
    ``upper`` is math.inf for an untilted spectral side (1/0 := inf for the
    polar dual)."""
    side: Side
    lower: float
    upper: float


def stable_ratio_density(alpha: float, x) -> float:
    """Density of the ratio of two independent positive alpha-stable
    variables; see the module docstring for the formula.  Supports scalar
    or array x (all entries positive)."""
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"stable_ratio_density requires alpha in (0, 1), "
                          f"got {alpha}")
    scalar = np.isscalar(x)
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0.0):
        raise DomainError("stable_ratio_density requires x > 0")
    xa = xs ** alpha
    val = (xs ** (alpha - 1.0) / math.pi) * math.sin(alpha * math.pi) / (
        xa * xa + 2.0 * xa * math.cos(alpha * math.pi) + 1.0)
    return float(val) if scalar else val


def _common_gamma(params: GtgsParams, opname: str) -> float:
    """Shared gamma of the active sides; the spectral representation is
    only available for a single gamma > 0 and alpha in (0, 1)."""
    core.validate(params)
    active = [params.side(w) for w in (Side.POSITIVE, Side.NEGATIVE)
              if params.side(w).delta > 0.0]
    gammas = {s.gamma for s in active}
    if len(gammas) > 1:
        raise IncompatibleParams(
            f"{opname} requires gamma_plus = gamma_minus on active sides, "
            f"got {sorted(gammas)}")
    gamma = gammas.pop()
    if not (gamma > 0.0):
        raise DomainError(f"{opname} requires gamma > 0, got {gamma}")
    for s in active:
        if s.alpha >= 1.0:
            raise DomainError(
                f"{opname} requires alpha in (0, 1) on active sides; "
                "alpha = 1 sides have a degenerate (point-mass) spectral "
                "measure")
    return gamma


def _side_spectral(s, y: float) -> float:
    """One-sided spectral density at y > theta (side params s)."""
    if y <= s.theta:
        return 0.0
    u = y - s.theta
    ua = u ** s.alpha
    den = ua * ua / s.lam + 2.0 * ua * math.cos(s.alpha * math.pi) + s.lam
    return s.delta * u ** (s.alpha - 1.0) * math.sin(s.alpha * math.pi) / (
        math.pi * den)


def spectral_density(params: GtgsParams, x) -> float:
    """Two-sided spectral density; zero on the gap [-theta_minus,
    theta_plus].  Scalar or array x."""
    _common_gamma(params, "spectral_density")
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros_like(xs)
    sp = params.side(Side.POSITIVE)
    sm = params.side(Side.NEGATIVE)
    for i, xi in enumerate(xs):
        if xi > 0.0 and sp.delta > 0.0:
            out[i] = _side_spectral(sp, xi)
        elif xi < 0.0 and sm.delta > 0.0:
            out[i] = _side_spectral(sm, -xi)
    return float(out[0]) if scalar else out


def _side_rosinski(s, gamma: float, y: float) -> float:
    """One-sided polar-dual density at 0 < y < 1/theta (side params s)."""
    if y <= 0.0 or (s.theta > 0.0 and y >= 1.0 / s.theta):
        return 0.0
    w = 1.0 - s.theta * y
    wa = w ** s.alpha
    ya = y ** s.alpha
    den = wa * wa / s.lam + 2.0 * wa * ya * math.cos(s.alpha * math.pi) \
        + s.lam * ya * ya
    return s.delta * y ** (s.alpha - gamma - 1.0) * w ** (s.alpha - 1.0) \
        * math.sin(s.alpha * math.pi) / (math.pi * den)


def rosinski_density(params: GtgsParams, x) -> float:
    """Polar dual of the spectral density: the image of the spectral
    measure under y -> sgn(y)/y weighted by |y|^gamma.  Supported on
    (-1/theta_minus, 0) union (0, 1/theta_plus).  Scalar or array x."""
    gamma = _common_gamma(params, "rosinski_density")
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros_like(xs)
    sp = params.side(Side.POSITIVE)
    sm = params.side(Side.NEGATIVE)
    for i, xi in enumerate(xs):
        if xi > 0.0 and sp.delta > 0.0:
            out[i] = _side_rosinski(sp, gamma, xi)
        elif xi < 0.0 and sm.delta > 0.0:
            out[i] = _side_rosinski(sm, gamma, -xi)
    return float(out[0]) if scalar else out


def spectral_support(params: GtgsParams, side: Side) -> SpectralSupport:
    """(theta, inf) on the positive side, mirrored on the negative."""
    _common_gamma(params, "spectral_support")
    s = params.side(side)
    if side is Side.POSITIVE:
        return SpectralSupport(side, s.theta, math.inf)
    return SpectralSupport(side, -math.inf, -s.theta)


def rosinski_support(params: GtgsParams, side: Side) -> SpectralSupport:
    """(0, 1/theta) on the positive side (1/0 := inf), mirrored on the
    negative."""
    _common_gamma(params, "rosinski_support")
    s = params.side(side)
    edge = math.inf if s.theta == 0.0 else 1.0 / s.theta
    if side is Side.POSITIVE:
        return SpectralSupport(side, 0.0, edge)
    return SpectralSupport(side, -edge, 0.0)


def side_spectral_mass(params: GtgsParams, side: Side,
                       quad: QuadratureConfig = _DEFAULT_CFG) -> float:
    """Total spectral mass of one side by quadrature (equals delta).

    Uses the stable-ratio reduction s(theta + lam^{1/alpha} u) =
    delta lam^{-1/alpha} s_E(u) and the smoothing substitution
    u = v^{1/alpha}, under which the mass integrand becomes the rational
    function (sin(alpha pi)/(alpha pi)) / (v^2 + 2 v cos(alpha pi) + 1).
    """
    _common_gamma(params, "side_spectral_mass")
    s = params.side(side)
    if s.delta == 0.0:
        return 0.0
    a = s.alpha
    cosa = math.cos(a * math.pi)
    front = math.sin(a * math.pi) / (a * math.pi)

    def integrand(v: float) -> float:
        return front / (v * v + 2.0 * v * cosa + 1.0)

    val, err = _scipy_quad(integrand, 0.0, np.inf, epsabs=quad.abs_tol,
                           epsrel=quad.rel_tol,
                           limit=quad.max_subdivisions)
    if err > 100.0 * max(quad.abs_tol, quad.rel_tol * abs(val)):
        raise QuadratureFailure(
            f"spectral mass quadrature error estimate {err} too large")
    return s.delta * val


def bernstein_reconstruct(params: GtgsParams, x: float,
                          quad: QuadratureConfig = _DEFAULT_CFG) -> float:
    """Rebuild the tempering kernel from the spectral density:

        q(x) = (1/delta) int e^{-y x} s(y) dy     (x > 0, plus side;
                                                   mirrored for x < 0).

    After y = theta + lam^{1/alpha} v^{1/alpha} the integrand is smooth:
    e^{-theta x} (sin(alpha pi)/(alpha pi))
    e^{-lam^{1/alpha} v^{1/alpha} x} / (v^2 + 2 v cos(alpha pi) + 1).
    Must equal core.tempering_function(params, x) to quadrature accuracy.
    """
    _common_gamma(params, "bernstein_reconstruct")
    if not np.isscalar(x) or x == 0.0:
        raise DomainError("bernstein_reconstruct requires scalar x != 0")
    x = float(x)
    s = params.side(Side.POSITIVE if x > 0.0 else Side.NEGATIVE)
    if s.delta == 0.0:
        raise DomainError("bernstein_reconstruct: the requested side is "
                          "inactive (delta = 0)")
    r = abs(x)
    a = s.alpha
    cosa = math.cos(a * math.pi)
    front = math.sin(a * math.pi) / (a * math.pi)
    scale = s.lam ** (1.0 / a)

    def integrand(v: float) -> float:
        expo = -scale * v ** (1.0 / a) * r
        if expo < -700.0:
            return 0.0
        return front * math.exp(expo) / (v * v + 2.0 * v * cosa + 1.0)

    val, err = _scipy_quad(integrand, 0.0, np.inf, epsabs=quad.abs_tol,
                           epsrel=quad.rel_tol,
                           limit=quad.max_subdivisions)
    if err > 100.0 * max(quad.abs_tol, quad.rel_tol * abs(val)):
        raise QuadratureFailure(
            f"Bernstein quadrature error estimate {err} too large")
    return math.exp(-s.theta * r) * val
