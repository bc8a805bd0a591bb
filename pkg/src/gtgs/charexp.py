"""Closed-form characteristic exponents.

Every supported parameter regime is evaluated per jump side: the full
exponent is

    psi(z) = i z mu + S(z; plus side) + S(-z; minus side),

where S(w; gamma, alpha, lam, theta, delta) is the closed form of the
standard-truncation half-line integral

    S(w) = int_0^inf (e^{iwx} - 1 - iwx 1_{x<1}) delta q(x) x^(-1-gamma) dx.

Each regime's closed form naturally carries a different centering (no
compensation, or full mean compensation); the difference from the standard
truncation is a linear drift given by the half-line truncation moments

    t0 = int_0^1 x m_side(x) dx,    t1 = int_1^inf x m_side(x) dx,

which are added back so that all regimes, and the quadrature oracle, share
one convention and psi(0) = 0 exactly.

Regime map per side (alpha < 1 unless stated):

* theta > 0, gamma = 0: logarithmic form, uncompensated core, drift -iw t0.
* theta > 0, gamma in (0,2) excluding 1: stretched-hypergeometric form.
  For gamma < 1 two equivalent cores exist -- uncompensated (drift
  -iw t0, the default: uniformly stable in theta) and fully mean
  compensated (drift +iw t1); gamma > 1 has only the compensated core.
* theta > 0, gamma = 1: Lerch-transcendent form, drift +iw t1.  At
  alpha = 1/(1+n) the two Lerch terms are individually infinite (their
  poles cancel only in the limit), so PoleError is raised.
* theta = 0, gamma = 0: logarithmic form in (-iw)^alpha, drift -iw t0.
* theta = 0, alpha + gamma < 1: power form minus its w -> 0 limit, drift
  -iw t0.
* theta = 0, alpha + gamma >= 1, gamma != 1: same power core with both
  scaling-limit subtractions, drift +iw t1 (alpha + gamma = 1 exactly has
  a divergent t1 and a pole in the subtraction; it is reported as such).
* theta = 0, gamma = 1: no closed form is known; UnsupportedRegime.
* alpha = 1 (any theta): the Mittag-Leffler kernel collapses to
  exp(-lam x), so the side is a classical exponentially tempered stable
  side with rate b = theta + lam, handled by the corresponding log /
  power / (b - iw) log forms -- except theta = 0, gamma = 1, which the
  regime map above already excludes.
"""
from __future__ import annotations

import cmath
import math
from enum import Enum

import numpy as np

from . import core
from .core import GtgsParams, Side
from .errors import (DivergentMoment, DomainError, PoleError,
                     UnsupportedRegime)
from .specfun import _ell_core, _real_gamma, lerch_phi, r2_1

__all__ = [
    "RegimeTag", "side_regime", "regime_tags", "theta_factor", "ell",
    "char_exponent", "char_function", "analytic_strip", "lemma_limit_check",
]

_FORMS = ("auto", "mean_compensated", "uncompensated")


class RegimeTag(Enum):
    """Per-side closed-form regime, determined by (gamma, theta,
    alpha + gamma)."""
    GAMMA0_THETA_POS = "Gamma0_ThetaPos"
    GAMMA_IN_02_THETA_POS = "GammaIn02_ThetaPos"
    GAMMA1_THETA_POS = "Gamma1_ThetaPos"
    THETA0_GAMMA0 = "Theta0_Gamma0"
    THETA0_ALPHA_GAMMA_LT1 = "Theta0_AlphaGammaLt1"
    THETA0_ALPHA_GAMMA_GE1 = "Theta0_AlphaGammaGe1"
    UNSUPPORTED = "Unsupported"


def side_regime(gamma: float, alpha: float, theta: float) -> RegimeTag:
    """Classify one side; see the module docstring for the map."""
    if theta > 0.0:
        if gamma == 0.0:
            return RegimeTag.GAMMA0_THETA_POS
        if gamma == 1.0:
            return RegimeTag.GAMMA1_THETA_POS
        return RegimeTag.GAMMA_IN_02_THETA_POS
    if gamma == 1.0:
        return RegimeTag.UNSUPPORTED
    if gamma == 0.0:
        return RegimeTag.THETA0_GAMMA0
    if alpha + gamma < 1.0:
        return RegimeTag.THETA0_ALPHA_GAMMA_LT1
    return RegimeTag.THETA0_ALPHA_GAMMA_GE1


def regime_tags(params: GtgsParams) -> tuple:
    """(plus tag, minus tag); tags classify parameters whether or not the
    side is active (delta = 0)."""
    sp = params.side(Side.POSITIVE)
    sm = params.side(Side.NEGATIVE)
    return (side_regime(sp.gamma, sp.alpha, sp.theta),
            side_regime(sm.gamma, sm.alpha, sm.theta))


def theta_factor(alpha: float, z: float) -> complex:
    """Phase factor of the untempered power kernel:

        theta_factor(alpha, z) = cos(alpha pi / 2)
                                 (1 - i tan(alpha pi / 2) sgn z),

    so that |z|^alpha theta_factor(alpha, z) = (-iz)^alpha (principal
    branch).  Requires alpha in (0, 1)."""
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"theta_factor requires alpha in (0, 1), got {alpha}")
    half = 0.5 * math.pi * alpha
    sgn = 0.0 if z == 0.0 else math.copysign(1.0, z)
    return math.cos(half) * (1.0 - 1j * math.tan(half) * sgn)


def ell(x: float, y: float, z: float) -> float:
    """ell(x, y, z) = z^(x/y) pi / (sin(-pi x / y) y Gamma(1 + x)).

    This is the w -> 0 limit of Gamma(x) w^-x 2R1(1, x, 1, y; -z/w^y) and
    the building block of the untilted (theta = 0) closed forms.  y must
    lie in (0, 1) and z must be positive; x/y at a nonpositive-integer
    resonance raises PoleError."""
    if not (0.0 < y < 1.0):
        raise DomainError(f"ell requires y in (0, 1), got {y}")
    if not (z > 0.0):
        raise DomainError(f"ell requires z > 0, got {z}")
    val = _ell_core(x, y, z)
    return float(val.real)


def _minus_iw_pow(w: float, expo: float) -> complex:
    """(-iw)^expo, principal branch."""
    return cmath.exp(expo * cmath.log(complex(0.0, -w)))


def _check_r_resonance(gamma: float, alpha: float, shift: float) -> None:
    """The stretched hypergeometric 2R1(1, shift - gamma, 1, alpha; .) has a
    genuine parameter pole when gamma - shift is a positive integer multiple
    of alpha (a series coefficient hits a gamma pole)."""
    k = (gamma - shift) / alpha
    if abs(k - round(k)) < 1e-10 and round(k) >= 1:
        raise PoleError(
            f"closed form degenerates at gamma = {shift} + k alpha "
            f"(k = {int(round(k))}): a series coefficient of the stretched "
            "hypergeometric has a gamma pole; perturb the parameters or use "
            "the quadrature oracle")


def _lerch_neg_a(z: complex, a: float) -> complex:
    """Lerch transcendent Phi(z, 1, a) for the gamma = 1 form."""
    if abs(a - round(a)) < 1e-12 and round(a) <= 0:
        raise PoleError(
            "the gamma = 1 closed form degenerates when (alpha-1)/alpha is a "
            "nonpositive integer (alpha = 1/(1+n)): the two Lerch terms are "
            "individually infinite; perturb alpha or use the quadrature "
            "oracle")
    return lerch_phi(z, 1.0, a)


def _side_core(s: core.SideParams, w: float, form: str) -> tuple:
    """Closed-form half-line core and its centering.

    Returns (core value K(w), drift_kind) where drift_kind is "t0" when
    K(w) = int (e^{iwx} - 1) m_side dx (uncompensated) and "t1" when
    K(w) = int (e^{iwx} - 1 - iwx) m_side dx (fully compensated).
    """
    gamma, alpha, lam, theta, delta = (s.gamma, s.alpha, s.lam, s.theta,
                                       s.delta)
    iw = 1j * w
    if form == "uncompensated" and gamma > 1.0:
        raise DomainError(
            "uncompensated form requires gamma < 1 on every side with "
            f"gamma not in {{0, 1}}, got gamma = {gamma}")
    # The uncompensated core is uniformly stable in theta (the compensated
    # one cancels two terms that grow like theta^(alpha+gamma-1) as
    # theta -> 0), so it is the default whenever it exists.
    uncomp = (form == "uncompensated"
              or (form == "auto" and 0.0 < gamma < 1.0))
    if alpha == 1.0:
        b = theta + lam
        if gamma == 0.0:
            return delta * cmath.log(b / (b - iw)), "t0"
        if gamma == 1.0:
            return delta * ((b - iw) * cmath.log((b - iw) / b) + iw), "t1"
        gneg = _real_gamma(-gamma)
        if uncomp:
            return delta * gneg * ((b - iw) ** gamma - b ** gamma), "t0"
        return delta * gneg * ((b - iw) ** gamma - b ** gamma
                               + iw * gamma * b ** (gamma - 1.0)), "t1"
    if theta > 0.0:
        tw = theta - iw
        if gamma == 0.0:
            num = theta ** alpha + lam
            den = tw ** alpha + lam
            return (delta / alpha) * cmath.log(num / den), "t0"
        if gamma == 1.0:
            a_sh = (alpha - 1.0) / alpha
            y0 = -lam / theta ** alpha
            yw = -lam / tw ** alpha
            lerch = (delta * lam / alpha) * (
                _lerch_neg_a(y0, a_sh) / theta ** (alpha - 1.0)
                - _lerch_neg_a(yw, a_sh) / tw ** (alpha - 1.0))
            logt = (delta * tw / alpha) * cmath.log(
                (tw ** alpha + lam) / (theta ** alpha + lam))
            return lerch + logt + delta * iw, "t1"
        _check_r_resonance(gamma, alpha, 0.0)
        gneg = _real_gamma(-gamma)
        arg_w = -lam / tw ** alpha
        arg_0 = -lam / theta ** alpha
        r_w = r2_1(1.0, -gamma, 1.0, alpha, arg_w)
        r_0 = r2_1(1.0, -gamma, 1.0, alpha, arg_0)
        if uncomp:
            return delta * gneg * (tw ** gamma * r_w
                                   - theta ** gamma * r_0), "t0"
        _check_r_resonance(gamma, alpha, 1.0)
        r1_0 = r2_1(1.0, 1.0 - gamma, 1.0, alpha, arg_0)
        val = delta * gneg * (tw ** gamma * r_w
                              + iw * gamma * theta ** (gamma - 1.0) * r1_0
                              - theta ** gamma * r_0)
        return val, "t1"
    # theta == 0, alpha < 1
    if gamma == 1.0:
        raise UnsupportedRegime(
            "no closed form is available for an untilted (theta = 0) side "
            "with gamma = 1")
    if gamma == 0.0:
        den = _minus_iw_pow(w, alpha) + lam
        return (delta / alpha) * cmath.log(lam / den), "t0"
    _check_r_resonance(gamma, alpha, 0.0)
    gneg = _real_gamma(-gamma)
    arg_w = -lam / _minus_iw_pow(w, alpha)
    head = gneg * _minus_iw_pow(w, gamma) * r2_1(1.0, -gamma, 1.0, alpha,
                                                 arg_w)
    if alpha + gamma < 1.0:
        return delta * (head - ell(gamma, alpha, lam)), "t0"
    val = delta * (head - ell(gamma, alpha, lam)
                   - iw * ell(gamma - 1.0, alpha, lam))
    return val, "t1"


def _side_exponent(params: GtgsParams, which: Side, w: float,
                   form: str) -> complex:
    s = params.side(which)
    if s.delta == 0.0:
        return 0.0 + 0.0j
    tag = side_regime(s.gamma, s.alpha, s.theta)
    if tag is RegimeTag.UNSUPPORTED:
        raise UnsupportedRegime(
            "no closed form is available for an untilted (theta = 0) side "
            "with gamma = 1")
    kval, drift_kind = _side_core(s, w, form)
    t0, t1 = core.side_truncation_moments(params, which)
    if drift_kind == "t0":
        if t0 is None:
            raise DivergentMoment(
                "mu0 diverges on the selected side (gamma >= 1); no "
                "uncompensated centering exists")
        return kval - 1j * w * t0
    if t1 is None:
        raise DivergentMoment(
            "mu1 diverges on the selected side: theta = 0 and alpha + gamma "
            f"= {s.alpha + s.gamma} <= 1, so the compensated closed form "
            "has no finite standard-truncation centering")
    return kval + 1j * w * t1


def _char_exponent_scalar(params: GtgsParams, z: float, form: str) -> complex:
    if z == 0.0:
        return 0.0 + 0.0j
    total = 1j * z * params.mu
    total += _side_exponent(params, Side.POSITIVE, z, form)
    total += _side_exponent(params, Side.NEGATIVE, -z, form)
    return total


def char_exponent(params: GtgsParams, z, form: str = "auto"):
    """Characteristic exponent psi(z) of the time-one law, closed form.

    ``form`` selects the centering of the power-form cores: for gamma in
    (0, 1) both a raw-jump ("uncompensated") and a fully mean-compensated
    core exist and produce identical psi values (they differ only in which
    truncation moment restores the standard centering), which the tests
    exploit as a consistency check.  "auto" picks the uncompensated core
    whenever it exists because it stays numerically stable as theta -> 0,
    where the compensated core cancels two terms growing like
    theta^(alpha+gamma-1); gamma in (1, 2) always uses the compensated
    core, and requesting "uncompensated" there raises DomainError.

    Scalar z returns complex; array z returns a complex array.
    """
    if form not in _FORMS:
        raise DomainError(f"unknown form {form!r}; expected one of {_FORMS}")
    core.validate(params)
    if np.isscalar(z):
        return _char_exponent_scalar(params, float(z), form)
    arr = np.asarray(z, dtype=float)
    out = np.empty(arr.shape, dtype=complex)
    flat = arr.reshape(-1)
    dst = out.reshape(-1)
    for i, zi in enumerate(flat):
        dst[i] = _char_exponent_scalar(params, float(zi), form)
    return out


def char_function(params: GtgsParams, z, t: float = 1.0):
    """Characteristic function E e^{izX_t} = exp(t psi(z))."""
    if t < 0.0:
        raise DomainError("time horizon t must be nonnegative")
    psi = char_exponent(params, z)
    if np.isscalar(z):
        return cmath.exp(t * psi)
    return np.exp(t * np.asarray(psi))


def analytic_strip(params: GtgsParams) -> tuple:
    """Strip of analyticity (-theta_minus, theta_plus) of the exponent in
    the imaginary direction; (0, 0) when both tilts vanish."""
    core.validate(params)
    return (-params.theta_minus, params.theta_plus)


def lemma_limit_check(a: float, b: float, c: float, z_seq) -> tuple:
    """Small-argument law of the scaled stretched hypergeometric:

        Gamma(a) z^-a 2R1(1, a, 1, b; -c/z^b)
            ->  c^(-a/b) pi / (b Gamma(1 - a) sin(pi a / b))    (z -> 0).

    Returns (left, right): the left side evaluated at the smallest entry of
    ``z_seq`` and the closed-form limit.  Requires 0 < b < 1, a <= b with
    a != 0, c > 0, and a decreasing sequence of positive z values.
    """
    if not (0.0 < b < 1.0):
        raise DomainError(f"lemma_limit_check requires b in (0, 1), got {b}")
    if not (a <= b) or a == 0.0:
        raise DomainError("lemma_limit_check requires a <= b with a != 0")
    if not (c > 0.0):
        raise DomainError(f"lemma_limit_check requires c > 0, got {c}")
    zs = [float(v) for v in z_seq]
    if not zs or any(v <= 0.0 for v in zs):
        raise DomainError("z_seq must contain positive values")
    if any(z2 >= z1 for z1, z2 in zip(zs[:-1], zs[1:])):
        raise DomainError("z_seq must be strictly decreasing")
    z = zs[-1]
    left = _real_gamma(a) * z ** (-a) * r2_1(1.0, a, 1.0, b, -c / z ** b)
    right = ell(-a, b, c)
    return (float(left.real), float(right))
