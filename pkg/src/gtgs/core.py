"""Parameter record, validation, and Levy/tempering densities.

The distribution family is parametrized per jump direction by a stability
index ``gamma`` in [0, 2), a tempering-kernel index ``alpha`` in (0, 1], a
kernel scale ``lambda > 0``, an exponential tilt ``theta >= 0``, and an
intensity ``delta >= 0``, plus a global drift ``mu``.  The positive-side
Levy density is

    m(x) = delta_plus exp(-theta_plus x) E_alpha(-lambda_plus x^alpha)
           / x^(1 + gamma_plus),    x > 0,

with the mirrored expression in |x| on the negative axis.  ``E_alpha`` is
the one-parameter Mittag-Leffler function, so the tempering interpolates
between a pure power kernel (as the kernel index shrinks the product decays
faster near zero) and the classical exponential tilt (alpha = 1 collapses
the kernel to exp(-lambda|x|)).
"""
from __future__ import annotations

import dataclasses
import functools
import json
import math
from enum import Enum

import numpy as np
from scipy.integrate import quad as _scipy_quad

from .errors import DivergentMoment, DomainError, InvalidParams
from .specfun import SeriesControl, ml_neg_axis, _DEFAULT

__all__ = [
    "GtgsParams", "Side", "validate", "from_json", "to_json",
    "tempering_function", "levy_density", "canonical_density",
    "truncation_moments", "side_truncation_moments",
]

_FIELDS = ("gamma_plus", "gamma_minus", "alpha_plus", "alpha_minus",
           "lambda_plus", "lambda_minus", "theta_plus", "theta_minus",
           "delta_plus", "delta_minus", "mu")


class Side(Enum):
    """Jump direction selector."""
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclasses.dataclass(frozen=True)
class GtgsParams:
    """Immutable parameter record; see the module docstring for roles."""
    gamma_plus: float = 0.0
    gamma_minus: float = 0.0
    alpha_plus: float = 1.0
    alpha_minus: float = 1.0
    lambda_plus: float = 1.0
    lambda_minus: float = 1.0
    theta_plus: float = 0.0
    theta_minus: float = 0.0
    delta_plus: float = 0.0
    delta_minus: float = 0.0
    mu: float = 0.0

    def __post_init__(self):
        for name in _FIELDS:
            object.__setattr__(self, name, float(getattr(self, name)))

    def side(self, side: Side) -> "SideParams":
        if side is Side.POSITIVE:
            return SideParams(self.gamma_plus, self.alpha_plus,
                              self.lambda_plus, self.theta_plus,
                              self.delta_plus)
        return SideParams(self.gamma_minus, self.alpha_minus,
                          self.lambda_minus, self.theta_minus,
                          self.delta_minus)

    def replace(self, **kw) -> "GtgsParams":
        return dataclasses.replace(self, **kw)


@dataclasses.dataclass(frozen=True)
class SideParams:
    """One-sided parameter view (gamma, alpha, lam, theta, delta)."""
    gamma: float
    alpha: float
    lam: float
    theta: float
    delta: float


def validate(params: GtgsParams) -> GtgsParams:
    """Check every parameter constraint; return ``params`` unchanged.

    Raises InvalidParams naming the violated clause.
    """
    p = params
    for tag, gamma in (("gamma_plus", p.gamma_plus),
                       ("gamma_minus", p.gamma_minus)):
        if not (0.0 <= gamma < 2.0) or math.isnan(gamma):
            raise InvalidParams(f"{tag} must lie in [0, 2), got {gamma}")
    for tag, alpha in (("alpha_plus", p.alpha_plus),
                       ("alpha_minus", p.alpha_minus)):
        if not (0.0 < alpha <= 1.0):
            raise InvalidParams(f"{tag} must lie in (0, 1], got {alpha}")
    for tag, lam in (("lambda_plus", p.lambda_plus),
                     ("lambda_minus", p.lambda_minus)):
        if not (lam > 0.0) or math.isinf(lam):
            raise InvalidParams(f"{tag} must be positive and finite, got {lam}")
    for tag, theta in (("theta_plus", p.theta_plus),
                       ("theta_minus", p.theta_minus)):
        if not (theta >= 0.0) or math.isinf(theta):
            raise InvalidParams(f"{tag} must be nonnegative and finite, "
                                f"got {theta}")
    for tag, delta in (("delta_plus", p.delta_plus),
                       ("delta_minus", p.delta_minus)):
        if not (delta >= 0.0) or math.isinf(delta):
            raise InvalidParams(f"{tag} must be nonnegative and finite, "
                                f"got {delta}")
    if p.delta_plus == 0.0 and p.delta_minus == 0.0:
        raise InvalidParams("at least one of delta_plus, delta_minus must be "
                            "positive: (delta_plus, delta_minus) != (0, 0)")
    if not math.isfinite(p.mu):
        raise InvalidParams(f"mu must be finite, got {p.mu}")
    # A side with no exponential tilt relies on the Mittag-Leffler kernel for
    # integrability at infinity, so that kernel must be genuinely present.
    for tag, s in (("plus", p.side(Side.POSITIVE)),
                   ("minus", p.side(Side.NEGATIVE))):
        if s.delta > 0.0 and s.theta == 0.0 and not (s.alpha > 0.0
                                                     and s.lam > 0.0):
            raise InvalidParams(
                f"active {tag} side with theta_{tag} = 0 requires "
                f"alpha_{tag} > 0 and lambda_{tag} > 0")
    return params


def to_json(params: GtgsParams) -> str:
    """Serialize to a flat JSON object with the canonical field names."""
    return json.dumps({name: getattr(params, name) for name in _FIELDS})


def from_json(text: str) -> GtgsParams:
    """Parse and validate a flat JSON parameter object.

    Unknown fields are rejected so that typos cannot silently produce a
    default-valued parameter.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParams(f"malformed parameter JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise InvalidParams("parameter JSON must be a flat object")
    unknown = sorted(set(raw) - set(_FIELDS))
    if unknown:
        raise InvalidParams(f"unknown parameter fields: {', '.join(unknown)}")
    bad = [k for k, v in raw.items() if not isinstance(v, (int, float))
           or isinstance(v, bool)]
    if bad:
        raise InvalidParams(f"non-numeric parameter fields: {', '.join(bad)}")
    return validate(GtgsParams(**{k: float(v) for k, v in raw.items()}))


# ---------------------------------------------------------------------------
# densities
# ---------------------------------------------------------------------------

def _q_scalar(x: float, alpha: float, lam: float, theta: float,
              control: SeriesControl = _DEFAULT) -> float:
    """exp(-theta x) E_alpha(-lam x^alpha) at scalar x > 0."""
    if alpha == 1.0:
        return math.exp(-(theta + lam) * x)
    ml = float(ml_neg_axis(alpha, np.asarray([lam * x ** alpha]), control)[0])
    return math.exp(-theta * x) * ml


def tempering_function(params: GtgsParams, x) -> "float | np.ndarray":
    """Tempering factor q(x): exp(-theta|x|) E_alpha(-lam|x|^alpha) with the
    parameters of the side selected by the sign of x.

    Vectorized over x; x = 0 raises DomainError (the Levy density has a
    non-removable singularity at the origin, and q is a jump-size weight).
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr == 0.0):
        raise DomainError("tempering_function is undefined at x = 0")
    out = np.empty(arr.shape, dtype=float)
    for side, mask in ((params.side(Side.POSITIVE), arr > 0),
                       (params.side(Side.NEGATIVE), arr < 0)):
        if not np.any(mask):
            continue
        ax = np.abs(arr[mask])
        if side.alpha == 1.0:
            out[mask] = np.exp(-(side.theta + side.lam) * ax)
        else:
            ml = ml_neg_axis(side.alpha, side.lam * ax ** side.alpha)
            out[mask] = np.exp(-side.theta * ax) * ml
    if np.isscalar(x) or arr.ndim == 0:
        return float(out.reshape(-1)[0])
    return out


def levy_density(params: GtgsParams, x) -> "float | np.ndarray":
    """Levy density m(x) = delta_side q(|x|) / |x|^(1 + gamma_side)."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr == 0.0):
        raise DomainError("levy_density is undefined at x = 0")
    q = np.asarray(tempering_function(params, arr), dtype=float)
    out = np.empty(arr.shape, dtype=float)
    for side, mask in ((params.side(Side.POSITIVE), arr > 0),
                       (params.side(Side.NEGATIVE), arr < 0)):
        if not np.any(mask):
            continue
        ax = np.abs(arr[mask])
        out[mask] = side.delta * np.asarray(q)[mask] / ax ** (1.0 + side.gamma)
    if np.isscalar(x) or arr.ndim == 0:
        return float(out.reshape(-1)[0])
    return out


def canonical_density(params: GtgsParams, x) -> "float | np.ndarray":
    """Canonical density k(x) = |x| m(x)."""
    arr = np.asarray(x, dtype=float)
    val = np.abs(arr) * np.asarray(levy_density(params, arr), dtype=float)
    if np.isscalar(x) or arr.ndim == 0:
        return float(np.asarray(val).reshape(-1)[0])
    return val


# ---------------------------------------------------------------------------
# truncation moments
# ---------------------------------------------------------------------------

def _side_t0(gamma: float, alpha: float, lam: float, theta: float,
             abs_tol: float) -> float:
    """int_0^1 x^(-gamma) q(x) dx for gamma < 1 (delta excluded).

    The substitution x = u^(1/(1-gamma)) absorbs the algebraic factor:
    the integrand becomes q(u^(1/(1-gamma))) / (1 - gamma), smooth on (0, 1].
    """
    pw = 1.0 / (1.0 - gamma)

    def f(u: float) -> float:
        return pw * _q_scalar(u ** pw, alpha, lam, theta)

    val, _ = _scipy_quad(f, 0.0, 1.0, epsabs=abs_tol, epsrel=abs_tol,
                         limit=200)
    return val


def _side_t1(gamma: float, alpha: float, lam: float, theta: float,
             abs_tol: float) -> float:
    """int_1^inf x^(-gamma) q(x) dx when convergent (delta excluded)."""

    def f(x: float) -> float:
        return x ** (-gamma) * _q_scalar(x, alpha, lam, theta)

    val, _ = _scipy_quad(f, 1.0, np.inf, epsabs=abs_tol, epsrel=abs_tol,
                         limit=300)
    return val


@functools.lru_cache(maxsize=512)
def _side_moments_cached(gamma: float, alpha: float, lam: float, theta: float,
                         abs_tol: float) -> tuple:
    t0 = (_side_t0(gamma, alpha, lam, theta, abs_tol)
          if gamma < 1.0 else None)
    t1_finite = theta > 0.0 or alpha == 1.0 or alpha + gamma > 1.0
    t1 = (_side_t1(gamma, alpha, lam, theta, abs_tol)
          if t1_finite else None)
    return (t0, t1)


def side_truncation_moments(params: GtgsParams, side: Side,
                            abs_tol: float = 1e-12) -> tuple:
    """Half-line truncation moments of one side, delta included:

        t0 = int_0^1 x m_side(x) dx,    t1 = int_1^inf x m_side(x) dx,

    where m_side is the selected side's Levy density folded onto (0, inf).
    Entries are None when the corresponding integral diverges; an inactive
    side (delta = 0) reports (0.0, 0.0).
    """
    s = params.side(side)
    if s.delta == 0.0:
        return (0.0, 0.0)
    t0, t1 = _side_moments_cached(s.gamma, s.alpha, s.lam, s.theta, abs_tol)
    return (None if t0 is None else s.delta * t0,
            None if t1 is None else s.delta * t1)


def truncation_moments(params: GtgsParams, quad=None) -> tuple:
    """Signed truncation moments of the Levy density:

        mu0 = int_{|x|<1} x m(x) dx,    mu1 = int_{|x|>=1} x m(x) dx.

    ``quad`` may carry ``abs_tol`` (duck-typed; defaults to 1e-12).  Raises
    DivergentMoment naming the moment and the offending side; divergence is
    reported even for symmetric parameters (no principal value is taken).
    """
    abs_tol = getattr(quad, "abs_tol", 1e-12)
    vals = {}
    for side, tag in ((Side.POSITIVE, "positive"), (Side.NEGATIVE,
                                                    "negative")):
        s = params.side(side)
        t0, t1 = side_truncation_moments(params, side, abs_tol)
        if t0 is None:
            raise DivergentMoment(
                f"mu0 diverges on the {tag} side: gamma = {s.gamma} >= 1")
        if t1 is None:
            raise DivergentMoment(
                f"mu1 diverges on the {tag} side: theta = 0 and "
                f"alpha + gamma = {s.alpha + s.gamma} <= 1")
        vals[side] = (t0, t1)
    mu0 = vals[Side.POSITIVE][0] - vals[Side.NEGATIVE][0]
    mu1 = vals[Side.POSITIVE][1] - vals[Side.NEGATIVE][1]
    return (mu0, mu1)
