"""Independent quadrature oracle and Fourier inversion.

``lk_quadrature`` evaluates the characteristic exponent directly from its
integral definition

    psi(z) = i z mu + int (e^{izx} - 1 - izx 1_{|x|<1}) m(x) dx

with adaptive quadrature, sharing nothing with the closed-form evaluator
except the Levy density itself.  Every closed form in the package reduces
to this single truncation convention, so oracle values are directly
comparable in every regime.  ``cumulant_quadrature`` does the same for
power moments of the Levy density, and ``gil_pelaez_cdf`` / ``fft_pdf``
invert a characteristic function into distribution quantities.
"""
from __future__ import annotations

import cmath
import dataclasses
import math
import warnings

import numpy as np
from scipy.integrate import quad as _quad

from . import core
from .core import GtgsParams, Side
from .errors import (DivergentMoment, GridTooNarrow, QuadratureFailure,
                     SlowDecay)

__all__ = [
    "QuadratureConfig", "GridSpec", "lk_quadrature", "cumulant_quadrature",
    "gil_pelaez_cdf", "fft_pdf",
]


@dataclasses.dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and cutoffs for the oracle integrals.

    ``inner_cutoff`` is the |z x| threshold below which the oscillatory
    factors are evaluated by truncated series instead of direct
    trigonometric differences (cancellation control near the origin).
    ``outer_cutoff_policy`` selects how the tail truncation point is bounded
    when the infinite-range oscillatory rule is unavailable:
    "exponential_tail_bound" uses the e^{-theta x} envelope,
    "power_tail_bound" the x^{-1-gamma-alpha} envelope, "auto" picks by
    side.
    """
    abs_tol: float = 1e-11
    rel_tol: float = 1e-9
    max_subdivisions: int = 200
    inner_cutoff: float = 0.35
    outer_cutoff_policy: str = "auto"

    def __post_init__(self):
        if not (0.0 < self.inner_cutoff < 1.0):
            raise ValueError("inner_cutoff must lie in (0, 1)")
        if self.outer_cutoff_policy not in ("auto", "exponential_tail_bound",
                                            "power_tail_bound"):
            raise ValueError("unknown outer_cutoff_policy "
                             f"{self.outer_cutoff_policy!r}")


_DEFAULT_CFG = QuadratureConfig()


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """Uniform inversion grid: n points (a power of two) on [x_min, x_max)."""
    n: int
    x_min: float
    x_max: float

    def __post_init__(self):
        if self.n < 8 or (self.n & (self.n - 1)) != 0:
            raise ValueError("GridSpec.n must be a power of two >= 8")
        if not (self.x_max > self.x_min):
            raise ValueError("GridSpec requires x_max > x_min")


# ---------------------------------------------------------------------------
# cancellation-safe oscillatory factors
# ---------------------------------------------------------------------------

def _cos_minus_one(s: float) -> float:
    """cos(s) - 1 without cancellation."""
    h = math.sin(0.5 * s)
    return -2.0 * h * h


def _sin_minus_lin(s: float, cutoff: float) -> float:
    """sin(s) - s without cancellation near s = 0."""
    if abs(s) < cutoff:
        s2 = s * s
        return -s ** 3 / 6.0 * (1.0 - s2 / 20.0 * (1.0 - s2 / 42.0
                                                   * (1.0 - s2 / 72.0)))
    return math.sin(s) - s


# ---------------------------------------------------------------------------
# Levy-Khintchine quadrature
# ---------------------------------------------------------------------------

def _tail_cutoff(side: core.SideParams, tol: float, policy: str) -> float:
    """x beyond which the side tail integrand is below tol (fallback use)."""
    if policy == "exponential_tail_bound" or (policy == "auto"
                                              and side.theta > 0.0):
        theta_eff = side.theta + (side.lam if side.alpha == 1.0 else 0.0)
        return 1.0 + (-math.log(tol)) / max(theta_eff, 1e-10)
    rho = side.gamma + side.alpha
    return max(2.0, tol ** (-1.0 / max(rho, 0.05)))


def _side_inner(side: core.SideParams, w: float,
                cfg: QuadratureConfig) -> complex:
    """int_0^1 (e^{iwx} - 1 - iwx) q(x) x^(-1-gamma) dx for one side."""
    gamma = side.gamma
    m = max(1, math.ceil(2.0 / (2.0 - gamma)))

    def base(u: float) -> tuple:
        x = u ** m
        jac = m * u ** (m - 1)
        q = core._q_scalar(x, side.alpha, side.lam, side.theta)
        scale = q * x ** (-1.0 - gamma) * jac
        return x, scale

    def f_re(u: float) -> float:
        if u == 0.0:
            return 0.0
        x, scale = base(u)
        return _cos_minus_one(w * x) * scale

    def f_im(u: float) -> float:
        if u == 0.0:
            return 0.0
        x, scale = base(u)
        return _sin_minus_lin(w * x, cfg.inner_cutoff) * scale

    lim = cfg.max_subdivisions
    re, _ = _quad(f_re, 0.0, 1.0, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                  limit=lim)
    im, _ = _quad(f_im, 0.0, 1.0, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                  limit=lim)
    return re + 1j * im


def _side_outer(side: core.SideParams, w: float,
                cfg: QuadratureConfig) -> complex:
    """int_1^inf (e^{iwx} - 1) q(x) x^(-1-gamma) dx for one side."""

    def g(x: float) -> float:
        return core._q_scalar(x, side.alpha, side.lam, side.theta) \
            * x ** (-1.0 - side.gamma)

    lim = cfg.max_subdivisions
    tol = max(cfg.abs_tol, 1e-12)
    minus_one, _ = _quad(g, 1.0, np.inf, epsabs=tol, epsrel=cfg.rel_tol,
                         limit=3 * lim)
    if w == 0.0:
        return 0.0 + 0.0j
    aw = abs(w)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            re, _ = _quad(g, 1.0, np.inf, weight="cos", wvar=aw, epsabs=tol,
                          limit=lim, limlst=60)
            im, _ = _quad(g, 1.0, np.inf, weight="sin", wvar=aw, epsabs=tol,
                          limit=lim, limlst=60)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise QuadratureFailure("oscillatory tail returned non-finite")
    except Exception:
        # fallback: truncate where the envelope is negligible and resolve
        # the oscillation with a generous subdivision budget
        hi = _tail_cutoff(side, 1e-14, cfg.outer_cutoff_policy)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            re, _ = _quad(lambda x: g(x) * math.cos(aw * x), 1.0, hi,
                          epsabs=tol, epsrel=cfg.rel_tol, limit=20 * lim)
            im, _ = _quad(lambda x: g(x) * math.sin(aw * x), 1.0, hi,
                          epsabs=tol, epsrel=cfg.rel_tol, limit=20 * lim)
    if w < 0.0:
        im = -im
    return (re - minus_one) + 1j * im


def lk_quadrature(params: GtgsParams, z: float,
                  quad: QuadratureConfig = _DEFAULT_CFG) -> complex:
    """Characteristic exponent by direct quadrature of its definition."""
    core.validate(params)
    z = float(z)
    if z == 0.0:
        return 0.0 + 0.0j
    total = 1j * z * params.mu
    for which, w in ((Side.POSITIVE, z), (Side.NEGATIVE, -z)):
        s = params.side(which)
        if s.delta == 0.0:
            continue
        val = _side_inner(s, w, quad) + _side_outer(s, w, quad)
        total += s.delta * val
    return total


def cumulant_quadrature(params: GtgsParams, n: int,
                        quad: QuadratureConfig = _DEFAULT_CFG) -> float:
    """n-th cumulant of the time-one law by quadrature.

    n = 1 returns mu + mu1 (mean); n >= 2 returns int x^n m(x) dx.  Raises
    DivergentMoment when a side's power tail makes the integral infinite.
    """
    core.validate(params)
    if n < 1:
        raise ValueError("cumulant order must be a positive integer")
    if n == 1:
        t1p = core.side_truncation_moments(params, Side.POSITIVE,
                                           quad.abs_tol)[1]
        t1m = core.side_truncation_moments(params, Side.NEGATIVE,
                                           quad.abs_tol)[1]
        if t1p is None or t1m is None:
            raise DivergentMoment(
                "mean diverges: an untilted side has alpha + gamma <= 1")
        return params.mu + (t1p - t1m)
    total = 0.0
    for which, sign, tag in ((Side.POSITIVE, 1.0, "positive"),
                             (Side.NEGATIVE, (-1.0) ** n, "negative")):
        s = params.side(which)
        if s.delta == 0.0:
            continue
        heavy = s.theta == 0.0 and s.alpha < 1.0
        if heavy and n >= s.alpha + s.gamma:
            raise DivergentMoment(
                f"order-{n} moment diverges on the {tag} side: theta = 0 and "
                f"alpha + gamma = {s.alpha + s.gamma} <= {n}")

        def f_lo(u: float, s=s) -> float:
            pw = 1.0 / (n - s.gamma)
            x = u ** pw
            return pw * core._q_scalar(x, s.alpha, s.lam, s.theta)

        def f_hi(x: float, s=s) -> float:
            return x ** (n - 1.0 - s.gamma) \
                * core._q_scalar(x, s.alpha, s.lam, s.theta)

        lo, _ = _quad(f_lo, 0.0, 1.0, epsabs=quad.abs_tol,
                      epsrel=quad.rel_tol, limit=quad.max_subdivisions)
        hi, _ = _quad(f_hi, 1.0, np.inf, epsabs=quad.abs_tol,
                      epsrel=quad.rel_tol, limit=3 * quad.max_subdivisions)
        total += sign * s.delta * (lo + hi)
    return total


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------

def _decay_horizon(psi, t: float, tol: float) -> tuple:
    """Smallest probed z with |e^{t psi(z)}| < tol, and a slow-decay flag."""
    z = 1.0
    cap = 1e6
    while z <= cap:
        env = math.exp(t * (psi(z)).real)
        if env < tol:
            return z, False
        z *= 2.0
    return cap, True


def gil_pelaez_cdf(psi, x: float, t: float = 1.0,
                   quad: QuadratureConfig = _DEFAULT_CFG) -> float:
    """Distribution function by inversion:

        F(x) = 1/2 - (1/pi) int_0^inf Im(e^{-izx} e^{t psi(z)}) / z dz.

    ``psi`` is a callable z -> complex characteristic exponent.  Emits a
    SlowDecay warning (and truncates) when the integrand envelope has not
    fallen below tolerance by z = 1e6.
    """
    if t <= 0.0:
        raise ValueError("time horizon t must be positive")
    hi, slow = _decay_horizon(psi, t, 1e-13)
    if slow:
        warnings.warn(SlowDecay(
            "characteristic function envelope above tolerance at z = 1e6; "
            "the inversion integral was truncated"))

    def a_part(z: float) -> float:
        return cmath.exp(t * psi(z)).real / z

    def b_part(z: float) -> float:
        return cmath.exp(t * psi(z)).imag / z

    def direct(z: float) -> float:
        return (cmath.exp(-1j * z * x + t * psi(z))).imag / z

    lim = quad.max_subdivisions
    ax = abs(x)
    total = 0.0
    lo = min(0.1, hi / 8.0, (2.0 * math.pi / max(ax, 1.0)) / 8.0)
    val, _ = _quad(direct, 0.0, lo, epsabs=quad.abs_tol, epsrel=1e-9,
                   limit=lim, points=[lo * 1e-6, lo * 1e-3])
    total += val
    edges = [lo]
    while edges[-1] < hi:
        edges.append(min(edges[-1] * 3.0, hi))
    for a, b in zip(edges[:-1], edges[1:]):
        if ax * (b - a) > 30.0:
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("error")
                    vb, _ = _quad(b_part, a, b, weight="cos", wvar=ax,
                                  epsabs=quad.abs_tol, limit=lim)
                    va, _ = _quad(a_part, a, b, weight="sin", wvar=ax,
                                  epsabs=quad.abs_tol, limit=lim)
                # Im(e^{t psi} e^{-izx}) = Im cos(zx) - Re sin(zx) for x > 0
                val = vb - va if x >= 0.0 else vb + va
            except Exception:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    val, _ = _quad(direct, a, b, epsabs=quad.abs_tol,
                                   epsrel=1e-9, limit=20 * lim)
        else:
            val, _ = _quad(direct, a, b, epsabs=quad.abs_tol, epsrel=1e-9,
                           limit=lim)
        total += val
    f_val = 0.5 - total / math.pi
    if f_val < -1e-3 or f_val > 1.0 + 1e-3:
        raise QuadratureFailure(
            f"Gil-Pelaez inversion out of range: F = {f_val!r}")
    return min(1.0, max(0.0, f_val))


def fft_pdf(psi, grid: GridSpec, t: float = 1.0) -> np.ndarray:
    """Density on a uniform grid by FFT inversion of e^{t psi}.

    Returns an (n, 2) array with columns (x, density).  Raises
    GridTooNarrow when the characteristic function has not decayed at the
    conjugate-grid edge or when more than 1e-4 probability mass sits in the
    outermost bins; values in (-1e-6, 0) are clipped to zero.
    """
    if t <= 0.0:
        raise ValueError("time horizon t must be positive")
    n = grid.n
    span = grid.x_max - grid.x_min
    dx = span / n
    dz = 2.0 * math.pi / span
    ks = np.arange(n)
    zs = (ks - n / 2) * dz
    try:
        phi = np.asarray([cmath.exp(t * psi(z)) if z != 0.0 else 1.0 + 0.0j
                          for z in zs], dtype=complex)
    except Exception as exc:
        raise QuadratureFailure(f"psi evaluation failed on the grid: {exc}")
    edge_cf = max(abs(phi[0]), abs(phi[-1]))
    if edge_cf > 1e-6:
        raise GridTooNarrow(
            f"characteristic function magnitude {edge_cf:.2e} at the "
            "conjugate-grid edge; increase n or shrink the x-span")
    xs = grid.x_min + ks * dx
    g = phi * np.exp(-1j * zs * grid.x_min)
    vals = np.fft.fft(g) * ((-1.0) ** ks) * (dz / (2.0 * math.pi))
    dens = vals.real
    worst_imag = float(np.max(np.abs(vals.imag)))
    if worst_imag > 1e-6:
        raise QuadratureFailure(
            f"inversion left imaginary residue {worst_imag:.2e}")
    neg = dens.min()
    if neg < -1e-6:
        raise GridTooNarrow(
            f"negative density {neg:.2e} beyond clipping tolerance; "
            "the x-grid likely truncates the support")
    dens = np.clip(dens, 0.0, None)
    k_edge = max(1, n // 64)
    edge_mass = (dens[:k_edge].sum() + dens[-k_edge:].sum()) * dx
    if edge_mass > 1e-4:
        raise GridTooNarrow(
            f"boundary mass {edge_mass:.2e} exceeds 1e-4; widen the x-grid")
    mass = float(dens.sum() * dx)
    if abs(mass - 1.0) > 1e-3:
        raise GridTooNarrow(
            f"density integrates to {mass!r}, outside 1 +/- 1e-3")
    return np.column_stack([xs, dens])
