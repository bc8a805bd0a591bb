"""Scaling closure, scaling limits, and absolute-continuity verdicts.

Scaling: cX has the same family law with per-side
(lam c^-alpha, theta / c, delta c^gamma).  Because this package fixes the
standard Levy-Khintchine truncation at |x| = 1, the location parameter
must absorb the re-truncation drift:

    mu' = c mu - int y (1{|y| <= c} - 1{|y| <= 1}) m'(y) dy,

where m' is the scaled Levy density -- the window between |y| = 1 and
|y| = c, entered with opposite signs for c > 1 and c < 1.  (A naive
mu' = c mu -- or any other
power of c -- fails the defining identity psi'(z) = psi(cz) whenever the
interval between 1 and c carries mass.)

Limits: with a common gamma on both sides, h^{-1/kappa} X_h converges as
h -> 0 to the gamma-stable law with weights (delta_+, delta_-) (kappa =
gamma), and as h -> infinity either to the (alpha+gamma)-stable law with
weights delta / (Gamma(1-alpha) lam) (untilted sides, kappa = alpha +
gamma) or to a Brownian motion with variance Var[X_1] (tilted sides or
alpha + gamma > 2, kappa = 2).  ``scaling_convergence_check`` certifies
the convergence numerically with the regime's kappa, never a fitted one.

Absolute continuity: a GTGS law is equivalent (mutually absolutely
continuous) to its untempered gamma-stable counterpart iff every active
alpha exceeds gamma/2, the Hellinger-type integral
int_{|x|<1} (1 - q(x))^2 |x|^(-gamma-1) dx being finite exactly then;
two GTGS laws are equivalent iff gammas and deltas match per side and
min(alpha, alpha') > gamma/2 per side.  The log-density jump transform is

    l(x) = (theta_+ - theta'_+) x
           + log(E_{alpha'_+}(-lam'_+ x^alpha'_+)
                 / E_{alpha_+}(-lam_+ x^alpha_+)),       x > 0

(mirrored with (theta'_- - theta_-) x for x < 0), satisfying
exp(l(x)) m(x) = m'(x).
"""
from __future__ import annotations

import cmath
import dataclasses
import math
from enum import Enum

import numpy as np
from scipy.integrate import quad as _scipy_quad

from . import core, cumulants, oracle
from .charexp import char_exponent
from .core import GtgsParams, Side
from .errors import (DomainError, IncompatibleParams, NotEquivalent,
                     UnsupportedRegime)
from .spectral import rosinski_density
from .specfun import _real_gamma

__all__ = [
    "LimitKind", "LimitLaw", "EquivalenceVerdict", "scaling_transform",
    "sum_params", "short_time_limit", "long_time_limit",
    "scaling_convergence_check", "stable_equivalence", "mutual_equivalence",
    "stable_hellinger_integral", "mutual_hellinger_integral",
    "density_process_log_jump",
]


class LimitKind(Enum):
    STABLE_SHORT_TIME = "StableShortTime"
    STABLE_LONG_TIME = "StableLongTime"
    GAUSSIAN_LONG_TIME = "GaussianLongTime"


@dataclasses.dataclass(frozen=True)
class LimitLaw:
    """Scaling-limit descriptor: stable kinds carry ``index`` and per-side
    ``deltas``; the Gaussian kind carries ``variance`` (index 2)."""
    kind: LimitKind
    index: float
    deltas: object = None
    variance: object = None
    drift_note: str = ""

    def __post_init__(self):
        if self.kind is LimitKind.GAUSSIAN_LONG_TIME:
            if self.variance is None or not math.isfinite(self.variance):
                raise DomainError("Gaussian limit law requires a finite "
                                  "variance")
        elif self.deltas is None:
            raise DomainError("stable limit law requires per-side weights")


@dataclasses.dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of an absolute-continuity test.  ``required_drift`` is the
    location the reference process must carry for equivalence (when the
    verdict is positive); ``hellinger_estimate`` is the numeric Hellinger
    integral, present (finite) exactly when equivalent."""
    equivalent: bool
    reason: str
    required_drift: object = None
    hellinger_estimate: object = None


def _retruncation_drift(scaled: GtgsParams, c: float) -> float:
    """int y m'(y) dy over the window between |y| = 1 and |y| = c, signed
    so that mu' = c mu + drift satisfies psi'(z) = psi(cz)."""
    if c == 1.0:
        return 0.0
    lo, hi = (1.0, c) if c > 1.0 else (c, 1.0)
    total = 0.0
    for which, sgn in ((Side.POSITIVE, 1.0), (Side.NEGATIVE, -1.0)):
        s = scaled.side(which)
        if s.delta == 0.0:
            continue
        val, _ = _scipy_quad(
            lambda t: t * s.delta * core._q_scalar(t, s.alpha, s.lam,
                                                   s.theta)
            * t ** (-1.0 - s.gamma),
            lo, hi, epsabs=1e-13, epsrel=1e-11, limit=200)
        total += sgn * val
    return -total if c > 1.0 else total


def scaling_transform(params: GtgsParams, c: float) -> GtgsParams:
    """Parameters of cX: per side lam c^-alpha, theta / c, delta c^gamma,
    and mu' = c mu + the re-truncation drift (module docstring).  Satisfies
    char_exponent(scaled, z) = char_exponent(params, c z) and the group
    law scale(scale(p, a), b) = scale(p, a b)."""
    core.validate(params)
    if not (isinstance(c, (int, float)) and not isinstance(c, bool)
            and c > 0.0 and math.isfinite(c)):
        raise DomainError(f"scale factor must be a positive real, got {c}")
    c = float(c)
    scaled = params.replace(
        lambda_plus=params.lambda_plus * c ** -params.alpha_plus,
        lambda_minus=params.lambda_minus * c ** -params.alpha_minus,
        theta_plus=params.theta_plus / c,
        theta_minus=params.theta_minus / c,
        delta_plus=params.delta_plus * c ** params.gamma_plus,
        delta_minus=params.delta_minus * c ** params.gamma_minus,
        mu=params.mu * c)
    return scaled.replace(mu=scaled.mu + _retruncation_drift(scaled, c))


def sum_params(p1: GtgsParams, p2: GtgsParams) -> GtgsParams:
    """Parameters of X + X' for independent summands sharing gamma, alpha,
    lam and theta per side, with positive tilts: deltas and mu add."""
    core.validate(p1)
    core.validate(p2)
    for name in ("gamma_plus", "gamma_minus", "alpha_plus", "alpha_minus",
                 "lambda_plus", "lambda_minus", "theta_plus", "theta_minus"):
        a, b = getattr(p1, name), getattr(p2, name)
        if a != b:
            raise IncompatibleParams(
                f"sum_params requires identical {name}: {a} != {b}")
    out = p1.replace(delta_plus=p1.delta_plus + p2.delta_plus,
                     delta_minus=p1.delta_minus + p2.delta_minus,
                     mu=p1.mu + p2.mu)
    for which in (Side.POSITIVE, Side.NEGATIVE):
        s = out.side(which)
        if s.delta > 0.0 and s.theta <= 0.0:
            raise IncompatibleParams(
                "sum_params is stated for positive tempering rates; the "
                f"{which.name.lower()} side has theta = 0")
    return out


def _common(params: GtgsParams, opname: str, field: str) -> float:
    vals = {getattr(params.side(w), field)
            for w in (Side.POSITIVE, Side.NEGATIVE)
            if params.side(w).delta > 0.0}
    if len(vals) > 1:
        raise IncompatibleParams(
            f"{opname} requires equal {field} on active sides, got "
            f"{sorted(vals)}")
    return vals.pop()


def short_time_limit(params: GtgsParams) -> LimitLaw:
    """Small-scale stable limit: h^{-1/gamma} X_h converges (h -> 0) to
    the gamma-stable law with weights (delta_+, delta_-), for a common
    gamma in (0,1) or (1,2)."""
    core.validate(params)
    gamma = _common(params, "short_time_limit", "gamma")
    if gamma == 1.0 or not (0.0 < gamma < 2.0):
        raise UnsupportedRegime(
            f"short-time stable limit requires gamma in (0,1) or (1,2), "
            f"got {gamma}")
    note = ("centering mu = mu0 (gamma < 1: uncompensated small jumps)"
            if gamma < 1.0 else
            "centering mu = -mu1 (gamma > 1: fully compensated jumps)")
    return LimitLaw(LimitKind.STABLE_SHORT_TIME, gamma,
                    deltas=(params.delta_plus, params.delta_minus),
                    drift_note=note)


def _gaussian_variance(params: GtgsParams) -> float:
    active = [params.side(w) for w in (Side.POSITIVE, Side.NEGATIVE)
              if params.side(w).delta > 0.0]
    if all(s.theta > 0.0 for s in active):
        try:
            return cumulants.cumulant(params, 2)
        except UnsupportedRegime:  # a gamma = 1 side: quadrature instead
            return oracle.cumulant_quadrature(params, 2)
    if all(s.theta == 0.0 for s in active):
        rep = cumulants.variance_theta0(params)
        if not rep.finite:
            raise UnsupportedRegime(
                f"Gaussian limit needs a finite variance: {rep.criterion}")
        return rep.value
    return oracle.cumulant_quadrature(params, 2)


def long_time_limit(params: GtgsParams) -> LimitLaw:
    """Large-scale limit for a common gamma and alpha.

    Untilted sides with alpha < 1 and alpha + gamma in (0,1) or (1,2)
    rescale to the (alpha+gamma)-stable law with weights
    delta / (Gamma(1-alpha) lam); positive tilts on both sides -- or
    alpha + gamma > 2 -- give a Brownian limit with variance Var[X_1].
    The boundaries alpha + gamma in {1, 2}, mixed tilts, and untilted
    exponential kernels (alpha = 1, whose tails are outside the stable
    regime) are unsupported.
    """
    core.validate(params)
    gamma = _common(params, "long_time_limit", "gamma")
    alpha = _common(params, "long_time_limit", "alpha")
    active = [params.side(w) for w in (Side.POSITIVE, Side.NEGATIVE)
              if params.side(w).delta > 0.0]
    tilted = [s.theta > 0.0 for s in active]
    note = "centering mu = -mu1 (finite-mean regimes are mean-centered)"
    if all(tilted) or alpha + gamma > 2.0:
        return LimitLaw(LimitKind.GAUSSIAN_LONG_TIME, 2.0,
                        variance=_gaussian_variance(params),
                        drift_note=note)
    if any(tilted):
        raise UnsupportedRegime(
            "long-time limit with mixed tilted/untilted sides and "
            "alpha + gamma <= 2 has no stable or Gaussian form")
    if alpha >= 1.0:
        raise UnsupportedRegime(
            "untilted exponential kernels (alpha = 1) fall outside the "
            "stable long-time regime")
    idx = alpha + gamma
    if idx in (1.0, 2.0) or not (0.0 < idx < 2.0):
        raise UnsupportedRegime(
            f"long-time stable limit requires alpha + gamma in (0,1) or "
            f"(1,2), got {idx}")
    gl = _real_gamma(1.0 - alpha)
    deltas = (params.delta_plus / (gl * params.lambda_plus),
              params.delta_minus / (gl * params.lambda_minus))
    if idx < 1.0:
        note = "centering mu = mu0 (uncompensated small jumps)"
    return LimitLaw(LimitKind.STABLE_LONG_TIME, idx, deltas=deltas,
                    drift_note=note)


def _stable_exponent(z: float, index: float, deltas) -> complex:
    """Fully (un)compensated stable exponent
    Gamma(-index) [d+ (-iz)^index + d- (iz)^index]."""
    gl = _real_gamma(-index)
    dp, dm = deltas
    return gl * (dp * cmath.exp(index * cmath.log(complex(0.0, -z)))
                 + dm * cmath.exp(index * cmath.log(complex(0.0, z))))


def _centered(params: GtgsParams, compensated: bool) -> GtgsParams:
    t0p, t1p = core.side_truncation_moments(params, Side.POSITIVE)
    t0m, t1m = core.side_truncation_moments(params, Side.NEGATIVE)
    if compensated:
        if t1p is None or t1m is None:
            raise UnsupportedRegime("mean centering needs finite mu1")
        return params.replace(mu=-(t1p - t1m))
    if t0p is None or t0m is None:
        raise UnsupportedRegime("uncompensated centering needs finite mu0")
    return params.replace(mu=t0p - t0m)


def scaling_convergence_check(params: GtgsParams, h_seq, z_grid):
    """Deviation table of the scaling limit: for each h,

        dev(h) = max over z_grid of |h psi_c(z h^{-1/kappa})
                                     - psi_limit(z)|,

    where kappa and psi_limit come from short_time_limit (every h < 1) or
    long_time_limit (every h > 1) and psi_c uses the regime's centering.
    Returns a list of (h, deviation) pairs in input order; the deviations
    must decrease toward zero along a valid h sequence.
    """
    hs = [float(h) for h in h_seq]
    if not hs or any(h <= 0.0 for h in hs):
        raise DomainError("h_seq must contain positive reals")
    if all(h < 1.0 for h in hs):
        law = short_time_limit(params)
    elif all(h > 1.0 for h in hs):
        law = long_time_limit(params)
    else:
        raise DomainError("h_seq must lie entirely below 1 (short-time) "
                          "or above 1 (long-time)")
    kappa = law.index
    if law.kind is LimitKind.GAUSSIAN_LONG_TIME:
        centered = _centered(params, compensated=True)

        def limit_exponent(z: float) -> complex:
            return complex(-0.5 * law.variance * z * z)
    else:
        centered = _centered(params, compensated=kappa > 1.0)

        def limit_exponent(z: float) -> complex:
            return _stable_exponent(z, kappa, law.deltas)

    zs = [float(z) for z in z_grid]
    out = []
    for h in hs:
        scale = h ** (-1.0 / kappa)
        dev = max(abs(h * char_exponent(centered, z * scale)
                      - limit_exponent(z))
                  for z in zs if z != 0.0)
        out.append((h, dev))
    return out


def _side_q(s, x: float) -> float:
    return core._q_scalar(x, s.alpha, s.lam, s.theta)


def stable_hellinger_integral(params: GtgsParams, inner_cutoff: float,
                              gamma: float = None) -> float:
    """int_{inner_cutoff < |x| < 1} (1 - q(x))^2 |x|^(-gamma-1) dx over
    active sides: the divergence test against the untempered stable law
    (finite limit as cutoff -> 0 iff every active alpha > gamma/2)."""
    core.validate(params)
    if gamma is None:
        gamma = _common(params, "stable_hellinger_integral", "gamma")
    if not (0.0 < inner_cutoff < 1.0):
        raise DomainError("inner_cutoff must lie in (0, 1)")
    total = 0.0
    for which in (Side.POSITIVE, Side.NEGATIVE):
        s = params.side(which)
        if s.delta == 0.0:
            continue
        val, _ = _scipy_quad(
            lambda x: (1.0 - _side_q(s, x)) ** 2 * x ** (-gamma - 1.0),
            inner_cutoff, 1.0, epsabs=1e-13, epsrel=1e-10, limit=200)
        total += val
    return total


def stable_equivalence(params: GtgsParams) -> EquivalenceVerdict:
    """Absolute continuity against the untempered gamma-stable law with
    the same per-side weights (common gamma in (0, 2)).

    Equivalent iff min(alpha) > gamma/2 over active sides.  The verdict
    carries the required stable location mu*: mu for gamma < 1;
    mu + int_{(0, inf)} x (log x - 1) r(x) dx for gamma = 1 (integration
    over the positive axis only, as stated in the source proposition --
    possibly intending all of R); mu + Gamma(1-gamma) int x r(x) dx for
    gamma in (1, 2), with r the polar-dual density.
    """
    core.validate(params)
    gamma = _common(params, "stable_equivalence", "gamma")
    if not (0.0 < gamma < 2.0):
        raise DomainError(f"stable_equivalence requires gamma in (0, 2), "
                          f"got {gamma}")
    active = [params.side(w) for w in (Side.POSITIVE, Side.NEGATIVE)
              if params.side(w).delta > 0.0]
    for s in active:
        if s.alpha >= 1.0:
            raise DomainError("stable_equivalence requires alpha in (0, 1) "
                              "on active sides")
    amin = min(s.alpha for s in active)
    if not (amin > gamma / 2.0):
        return EquivalenceVerdict(
            False,
            f"min(alpha) = {amin:.6g} <= gamma/2 = {gamma / 2.0:.6g}: the "
            "small-jump Hellinger integral diverges")
    hell = stable_hellinger_integral(params, 1e-8, gamma)
    drift = _stable_required_drift(params, gamma)
    reason = (f"min(alpha) = {amin:.6g} > gamma/2 = {gamma / 2.0:.6g}")
    if gamma == 1.0:
        reason += ("; required drift integrates x (log x - 1) r(x) over "
                   "the positive axis only, exactly as stated in the "
                   "source formula (the intended domain may be all of R)")
    return EquivalenceVerdict(True, reason, required_drift=drift,
                              hellinger_estimate=hell)


def _rosinski_line_integral(params: GtgsParams, f, lo_sign: str) -> float:
    """int f(x) r(x) dx over the requested half-lines via the edge
    substitution 1 - theta x = u^(1/alpha) on tilted sides."""
    total = 0.0
    for which, sgn in ((Side.POSITIVE, 1.0), (Side.NEGATIVE, -1.0)):
        if lo_sign == "positive" and which is not Side.POSITIVE:
            continue
        s = params.side(which)
        if s.delta == 0.0:
            continue
        if s.theta > 0.0:
            a = s.alpha
            edge = 1.0 / s.theta

            def integrand(u: float) -> float:
                x = (1.0 - u ** (1.0 / a)) * edge
                if x <= 0.0 or x >= edge:
                    return 0.0
                dens = rosinski_density(params, sgn * x)
                jac = edge * u ** (1.0 / a - 1.0) / a
                return f(sgn * x) * dens * jac

            val, _ = _scipy_quad(integrand, 0.0, 1.0, epsabs=1e-12,
                                 epsrel=1e-10, limit=200)
        else:
            val, _ = _scipy_quad(
                lambda x: f(sgn * x) * rosinski_density(params, sgn * x),
                0.0, np.inf, epsabs=1e-12, epsrel=1e-10, limit=200)
        total += val
    return total


def _stable_required_drift(params: GtgsParams, gamma: float) -> float:
    if gamma < 1.0:
        return params.mu
    if gamma == 1.0:
        val = _rosinski_line_integral(
            params, lambda x: x * (math.log(abs(x)) - 1.0), "positive")
        return params.mu + val
    val = _rosinski_line_integral(params, lambda x: x, "both")
    return params.mu + _real_gamma(1.0 - gamma) * val


def mutual_hellinger_integral(p1: GtgsParams, p2: GtgsParams,
                              inner_cutoff: float) -> float:
    """int_{|x| > inner_cutoff} (sqrt(m1) - sqrt(m2))^2 dx, the Hellinger
    distance between the two Levy densities away from the origin."""
    core.validate(p1)
    core.validate(p2)
    if not (0.0 < inner_cutoff < 1.0):
        raise DomainError("inner_cutoff must lie in (0, 1)")
    total = 0.0
    for sgn in (1.0, -1.0):
        def integrand(x: float) -> float:
            d1 = core.levy_density(p1, sgn * x)
            d2 = core.levy_density(p2, sgn * x)
            return (math.sqrt(d1) - math.sqrt(d2)) ** 2

        val, _ = _scipy_quad(integrand, inner_cutoff, np.inf,
                             epsabs=1e-12, epsrel=1e-9, limit=300)
        total += val
    return total


def mutual_equivalence(p1: GtgsParams, p2: GtgsParams) -> EquivalenceVerdict:
    """Absolute continuity between two family laws: equivalent iff gammas
    and deltas agree per active side and min(alpha, alpha') > gamma/2 on
    each active side."""
    core.validate(p1)
    core.validate(p2)
    for name in ("delta_plus", "delta_minus"):
        a, b = getattr(p1, name), getattr(p2, name)
        if a != b:
            return EquivalenceVerdict(
                False, f"side weights differ ({name}: {a} != {b})")
    for which in (Side.POSITIVE, Side.NEGATIVE):
        s1, s2 = p1.side(which), p2.side(which)
        if s1.delta == 0.0:
            continue
        if s1.gamma != s2.gamma:
            return EquivalenceVerdict(
                False, f"stability exponents differ on the "
                f"{which.name.lower()} side ({s1.gamma} != {s2.gamma})")
        if not (min(s1.alpha, s2.alpha) > s1.gamma / 2.0):
            return EquivalenceVerdict(
                False, f"min(alpha, alpha') = "
                f"{min(s1.alpha, s2.alpha):.6g} <= gamma/2 = "
                f"{s1.gamma / 2.0:.6g} on the {which.name.lower()} side")
    hell = mutual_hellinger_integral(p1, p2, 1e-8)
    return EquivalenceVerdict(
        True, "gammas and deltas agree; every active side has "
        "min(alpha, alpha') > gamma/2", hellinger_estimate=hell)


def density_process_log_jump(p1: GtgsParams, p2: GtgsParams,
                             x: float) -> float:
    """Log jump transform of the density process between two equivalent
    laws (module docstring); exp(l(x)) m1(x) = m2(x)."""
    verdict = mutual_equivalence(p1, p2)
    if not verdict.equivalent:
        raise NotEquivalent(verdict.reason)
    x = float(x)
    if x == 0.0:
        raise DomainError("density_process_log_jump requires x != 0")
    which = Side.POSITIVE if x > 0.0 else Side.NEGATIVE
    s1, s2 = p1.side(which), p2.side(which)
    r = abs(x)
    q1 = core._q_scalar(r, s1.alpha, s1.lam, 0.0)
    q2 = core._q_scalar(r, s2.alpha, s2.lam, 0.0)
    if x > 0.0:
        return (s1.theta - s2.theta) * x + math.log(q2 / q1)
    return (s2.theta - s1.theta) * x + math.log(q2 / q1)
