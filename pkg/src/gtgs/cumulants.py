"""Closed-form cumulants and moment-existence predicates.

For a positive-side density delta e^{-theta x} E_alpha(-lam x^alpha)
x^(-1-gamma), the n-th Levy moment (n >= 2) has the closed form

    delta Gamma(n - gamma) theta^(gamma - n)
        2R1(1, n - gamma, 1, alpha; -lam / theta^alpha),

which at alpha = 1 collapses (tau = 1 binomial sum) to the classical
exponentially tempered value delta Gamma(n - gamma) (theta + lam)^(gamma-n).
The first cumulant is mu plus the outer truncation moment mu1.  Untilted
(theta = 0) sides have power tails, so existence of mean/variance/absolute
moments is decided by the tail exponent alpha + gamma; the finite values
are expressed through the same ``ell`` limit function used by the
characteristic exponents.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np
from scipy.integrate import quad as _scipy_quad

from . import core
from .core import GtgsParams, Side
from .charexp import ell
from .errors import DomainError, UnsupportedRegime
from .specfun import ml_neg_axis, r2_1, _real_gamma

__all__ = ["MomentReport", "cumulant", "mean_theta0", "variance_theta0",
           "moment_finite", "tgs_cumulant_recursion"]


@dataclasses.dataclass(frozen=True)
class MomentReport:
    """Outcome of a moment-existence question.

    ``order`` is the moment order (integer cumulant order or real p),
    ``finite`` the verdict, ``criterion`` the inequality or test that
    decided it.  ``value`` is present iff finite: for mean/variance it is
    the moment itself; for ``moment_finite`` it is the deciding quantity,
    the outer Levy tail moment int_{|x|>1} |x|^p m(x) dx (the distribution
    moment E|X|^p is finite exactly when this is, but has no closed form).
    """
    order: float
    finite: bool
    value: object
    criterion: str

    def __post_init__(self):
        if self.finite != (self.value is not None):
            raise DomainError("MomentReport.value must be present iff finite")


def _active_sides(params: GtgsParams):
    out = []
    for which in (Side.POSITIVE, Side.NEGATIVE):
        s = params.side(which)
        if s.delta > 0.0:
            out.append((which, s))
    return out


def cumulant(params: GtgsParams, n: int) -> float:
    """n-th cumulant of the time-one law, closed form.

    Requires every active side to be tilted (theta > 0) with gamma != 1;
    other regimes are served by ``oracle.cumulant_quadrature`` or the
    theta = 0 reports below.  n = 1 returns mu + mu1; n >= 2 equals the
    n-th Levy moment (plus side closed form above, minus side times
    (-1)^n).
    """
    core.validate(params)
    if not (isinstance(n, int) and not isinstance(n, bool)) or n < 1:
        raise DomainError(f"cumulant order must be an integer >= 1, got {n}")
    for which, s in _active_sides(params):
        if s.theta <= 0.0:
            raise UnsupportedRegime(
                "cumulant closed form requires theta > 0 on every active "
                f"side; the {which.name.lower()} side is untilted (use "
                "mean_theta0 / variance_theta0 / oracle.cumulant_quadrature)")
        if s.gamma == 1.0:
            raise UnsupportedRegime(
                "cumulant closed form requires gamma != 1 on every active "
                f"side; the {which.name.lower()} side has gamma = 1 (use "
                "oracle.cumulant_quadrature)")
    if n == 1:
        return params.mu + _outer_mu1(params)
    total = 0.0
    for which, s in _active_sides(params):
        term = (s.delta * _real_gamma(n - s.gamma) * s.theta ** (s.gamma - n)
                * r2_1(1.0, n - s.gamma, 1.0, s.alpha,
                       -s.lam / s.theta ** s.alpha))
        total += (1.0 if which is Side.POSITIVE else (-1.0) ** n) * \
            complex(term).real
    return float(total)


def _outer_mu1(params: GtgsParams) -> float:
    """mu1 = t1(plus) - t1(minus), independent of whether mu0 exists."""
    t1p = core.side_truncation_moments(params, Side.POSITIVE)[1]
    t1m = core.side_truncation_moments(params, Side.NEGATIVE)[1]
    return t1p - t1m


def _heavy_sides(params: GtgsParams):
    """Active sides with genuine power tails (theta = 0 and alpha < 1);
    exponential-kernel sides (alpha = 1) never restrict moments."""
    return [(which, s) for which, s in _active_sides(params)
            if s.theta == 0.0 and s.alpha < 1.0]


def _require_untilted(params: GtgsParams, opname: str) -> None:
    for which, s in _active_sides(params):
        if s.theta != 0.0:
            raise DomainError(
                f"{opname} requires theta = 0 on every active side; the "
                f"{which.name.lower()} side has theta = {s.theta}")


def mean_theta0(params: GtgsParams) -> MomentReport:
    """Existence and value of the mean in the untilted regime.

    Finite iff min(alpha + gamma) > 1 over active power-tail sides
    (exponential-kernel alpha = 1 sides always have finite moments); the
    value is mu + mu1.
    """
    core.validate(params)
    _require_untilted(params, "mean_theta0")
    heavy = _heavy_sides(params)
    if not heavy:
        return MomentReport(1.0, True, params.mu + _outer_mu1(params),
                            "exponential kernel on all active sides")
    thr = min(s.alpha + s.gamma for _, s in heavy)
    if thr > 1.0:
        return MomentReport(1.0, True, params.mu + _outer_mu1(params),
                            f"min(alpha+gamma) = {thr:.6g} > 1")
    return MomentReport(1.0, False, None,
                        f"min(alpha+gamma) = {thr:.6g} <= 1")


def variance_theta0(params: GtgsParams) -> MomentReport:
    """Existence and value of the variance in the untilted regime.

    Finite iff min(alpha + gamma) > 2 over active power-tail sides; the
    value is the second Levy moment
    delta_+ ell(gamma_+ - 2, alpha_+, lam_+) + (mirror), with
    delta Gamma(2 - gamma) lam^(gamma - 2) on alpha = 1 sides.
    """
    core.validate(params)
    _require_untilted(params, "variance_theta0")
    heavy = _heavy_sides(params)
    thr = min((s.alpha + s.gamma for _, s in heavy), default=math.inf)
    if not (thr > 2.0):
        return MomentReport(2.0, False, None,
                            f"min(alpha+gamma) = {thr:.6g} <= 2")
    total = 0.0
    for _, s in _active_sides(params):
        if s.alpha == 1.0:
            total += s.delta * _real_gamma(2.0 - s.gamma) * \
                s.lam ** (s.gamma - 2.0)
        else:
            total += s.delta * ell(s.gamma - 2.0, s.alpha, s.lam)
    crit = ("exponential kernel on all active sides" if not heavy
            else f"min(alpha+gamma) = {thr:.6g} > 2")
    return MomentReport(2.0, True, total, crit)


def _side_tail_moment(s: core.SideParams, p: float,
                      upper: float = math.inf) -> float:
    """int_1^upper x^p x^(-1-gamma) q_side(x) dx.

    Exponentially tempered sides integrate in x with an underflow guard;
    power-tail sides use the log substitution x = e^u with the kernel
    evaluated in log space (first-order tail law once lam x^alpha is huge).
    """
    rate = s.theta + (s.lam if s.alpha == 1.0 else 0.0)
    if rate > 0.0:
        def integrand_x(x: float) -> float:
            if rate * x > 745.0:
                return 0.0
            return x ** (p - 1.0 - s.gamma) * core._q_scalar(
                x, s.alpha, s.lam, s.theta)

        val, _ = _scipy_quad(integrand_x, 1.0, upper, epsabs=1e-12,
                             epsrel=1e-10, limit=300)
        return s.delta * val

    log_g1ma = math.lgamma(1.0 - s.alpha)
    log_lam = math.log(s.lam)

    def integrand_u(u: float) -> float:
        lead = u * (p - s.gamma)
        ylog = s.alpha * u + log_lam
        if ylog > 40.0:
            lead += -ylog - log_g1ma
            return math.exp(lead) if lead > -745.0 else 0.0
        ml = float(ml_neg_axis(s.alpha, np.array([math.exp(ylog)]))[0])
        return math.exp(lead) * ml if lead > -745.0 else 0.0

    hi = math.log(upper) if upper != math.inf else math.inf
    val, _ = _scipy_quad(integrand_u, 0.0, hi, epsabs=1e-12, epsrel=1e-10,
                         limit=300)
    return s.delta * val


def moment_finite(params: GtgsParams, p: float) -> MomentReport:
    """Is E|X_1|^p finite?  Decided by the Levy tail moment
    int_{|x|>1} |x|^p m(x) dx, reported as the value when finite.

    Tilted or exponential-kernel sides never restrict p.  Power-tail
    (theta = 0, alpha < 1) sides give the threshold alpha + gamma:
    p below it is finite (p equal to such a side's gamma is flagged as the
    log-integrable boundary), p above it is infinite, and p exactly at it
    is settled by a decade-window integral test.
    """
    core.validate(params)
    p = float(p)
    if not (p > 0.0):
        raise DomainError(f"moment order p must be positive, got {p}")
    heavy = _heavy_sides(params)
    if not heavy:
        val = sum(_side_tail_moment(s, p) for _, s in _active_sides(params))
        return MomentReport(p, True, val,
                            "exponential tempering on all active sides: "
                            "every moment is finite")
    thr = min(s.alpha + s.gamma for _, s in heavy)
    if p == thr:
        # Decade-window test: a log-divergent tail has (asymptotically)
        # constant increments per decade; a convergent one has geometrically
        # shrinking increments.
        _, s = min(heavy, key=lambda t: t[1].alpha + t[1].gamma)
        inc = [_side_tail_moment(s, p, 10.0 ** (k + 1))
               - _side_tail_moment(s, p, 10.0 ** k) for k in (2, 5)]
        if inc[1] < 0.2 * inc[0]:
            val = sum(_side_tail_moment(si, p)
                      for _, si in _active_sides(params))
            return MomentReport(p, True, val,
                                "boundary integral test over decade "
                                "windows: convergent")
        return MomentReport(p, False, None,
                            "boundary integral test over decade windows: "
                            "log-divergent")
    if p > thr:
        return MomentReport(p, False, None,
                            f"p > min(alpha+gamma) = {thr:.6g}")
    val = sum(_side_tail_moment(s, p) for _, s in _active_sides(params))
    if any(p == s.gamma for _, s in heavy):
        return MomentReport(p, True, val, "log-integrable boundary (p = "
                                          "gamma of an untilted side)")
    return MomentReport(p, True, val, f"p < min(alpha+gamma) = {thr:.6g}")


def tgs_cumulant_recursion(n: int, x: float, c: float) -> float:
    """g_n(x; c) by the exact polynomial recursion

        g_0 = 1/(1-x),    g_n = x c g'_{n-1} + n g_{n-1},

    maintained as coefficients in powers of v = 1/(1-x) so the derivative
    is exact (d/dx v^k = k v^{k+1}, and x k v^{k+1} = k (v^{k+1} - v^k)).
    g_{n-1}(-lam/theta^alpha; alpha) * delta / theta^n assembles the n-th
    cumulant of a gamma = 0 (tempered geometric stable) side; indeed
    g_{n-1}(x; c) = Gamma(n) 2R1(1, n, 1, c; x).
    """
    if not (isinstance(n, int) and not isinstance(n, bool)) or n < 0:
        raise DomainError(f"recursion index must be an integer >= 0, got {n}")
    if not (x < 1.0):
        raise DomainError(f"recursion requires x < 1, got {x}")
    if not (c > 0.0):
        raise DomainError(f"recursion requires c > 0, got {c}")
    coeffs = {1: 1.0}
    for step in range(1, n + 1):
        nxt: dict = {}
        for k, a in coeffs.items():
            nxt[k + 1] = nxt.get(k + 1, 0.0) + c * k * a
            nxt[k] = nxt.get(k, 0.0) - c * k * a + step * a
        coeffs = nxt
    v = 1.0 / (1.0 - x)
    return float(sum(a * v ** k for k, a in coeffs.items()))
