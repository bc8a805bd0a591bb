"""Special functions: three-parameter Mittag-Leffler, a Gauss-type
hypergeometric series with stretched index, and the Lerch transcendent.

Evaluation strategy (shared by all three):

* defining series with Kahan compensation while the argument is inside a
  cancellation-safe radius,
* a quadrature-evaluated integral representation in the annulus between the
  series radius and ``switch_radius``,
* a large-argument expansion beyond ``switch_radius`` (with near-pole
  fallback to the integral representation).

Only the negative real axis is supported at large ``|z|`` for the
Mittag-Leffler function; that is the regime the rest of the package needs
(completely monotone tempering factors).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln, gammasgn, hyp1f1, hyp2f1, rgamma

from ._numutil import geometric_edges, gl_rule, panel_rule
from .errors import BranchCut, DomainError, NonConvergence, PoleError

__all__ = ["SeriesControl", "mittag_leffler", "ml_neg_axis", "r2_1",
           "lerch_phi"]

_EULER_GAMMA_SAFE = 170.0  # largest argument for scipy gamma without overflow


@dataclass(frozen=True)
class SeriesControl:
    """Knobs for the series/quadrature/expansion dispatch.

    Attributes
    ----------
    rel_tol : target relative accuracy of a single function evaluation.
    max_terms : hard cap on series terms before NonConvergence.
    switch_radius : |z| beyond which the large-argument expansion is used.
    annulus_quadrature_nodes : Gauss-Legendre nodes per panel for the
        integral representation used in the annulus.
    """

    rel_tol: float = 1e-10
    max_terms: int = 2048
    switch_radius: float = 8.0
    annulus_quadrature_nodes: int = 64


_DEFAULT = SeriesControl()


def _gamma_pole(x: float) -> bool:
    """True when x is a nonpositive integer (gamma pole).

    rgamma returns exactly 0.0 there and nowhere else on x <= 0, which makes
    it a dependable detector; gammasgn returns NaN/1.0 at the poles and can
    not be used for this.
    """
    return x <= 0.0 and rgamma(x) == 0.0


def _real_gamma(x: float) -> float:
    """Real gamma via sign/log decomposition; inf at poles."""
    if _gamma_pole(x):
        return math.inf
    return gammasgn(x) * math.exp(gammaln(x))


# --------------------------------------------------------------------------
# Mittag-Leffler
# --------------------------------------------------------------------------


def _ml_series(a: float, b: float, c: float, z: complex,
               control: SeriesControl) -> complex:
    """Defining series sum_k (c)_k z^k / (k! Gamma(a k + b))."""
    acc = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation
    coef = 1.0  # (c)_k / k!
    zk = 1.0 + 0.0j
    small_run = 0
    for k in range(control.max_terms):
        term = coef * zk * rgamma(a * k + b)
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        if abs(term) <= control.rel_tol * 0.01 * max(1e-300, abs(acc)):
            small_run += 1
            if small_run >= 3 and k >= 4:
                return acc
        else:
            small_run = 0
        coef *= (c + k) / (k + 1.0)
        zk *= z
    raise NonConvergence(
        f"Mittag-Leffler series needed more than {control.max_terms} terms")


def _ml_series_radius(a: float) -> float:
    """|z| below which the alternating series keeps ~1e-10 relative accuracy.

    The largest series term is ~exp(|z|^(1/a)), so 9^a bounds the float64
    cancellation amplification by ~e^9.  The extra cap at 2 protects the
    a -> 1 corner, where E_a(-y) itself decays like e^{-y} and even a
    moderate amplification would dominate the answer.
    """
    return min(2.0, 9.0 ** a)


def _ml_neg_integral(a: float, y: np.ndarray, nodes_per_panel: int = 24
                     ) -> np.ndarray:
    """Vectorized E_a(-y) for y > 0 via the completely-monotone integral

        E_a(-y) = sin(a pi)/(a pi) * int_0^inf e^{-(y w)^{1/a}}
                  / (w^2 + 2 w cos(a pi) + 1) dw,

    valid for 0 < a < 1.  Geometric panels with extra edges around the
    denominator minimum at w = -cos(a pi) when that is positive.
    """
    y = np.asarray(y, dtype=float)
    ca = math.cos(a * math.pi)
    if a <= 0.5:
        # substitute x = y w: the exponential shoulder sits at x ~ 1 with
        # relative width ~a for every y, so one x grid with panels of width
        # ~a/2 across the shoulder serves the whole batch.  cos(a pi) >= 0
        # here, so the denominator has no resonance.
        hi = 45.0 ** a
        shoulder = np.arange(0.7, hi, 0.5 * a)
        edges = np.unique(np.concatenate(
            (np.linspace(0.0, 0.7, 8), shoulder, [hi])))
        xn, wts = panel_rule(edges, nodes_per_panel)
        ratio = xn[None, :] / y[:, None]
        kern = np.exp(-xn ** (1.0 / a))[None, :] / (
            ratio * ratio + 2.0 * ca * ratio + 1.0)
        val = (kern @ wts) / y
        return math.sin(a * math.pi) / (a * math.pi) * val
    y_min = float(y.min())
    y_max = float(y.max())
    w_hi = 45.0 ** a / y_min
    w_lo = min(0.02 / y_max, 0.25 * w_hi)
    extra = []
    if ca < 0.0:
        p = -ca
        s = math.sin(a * math.pi)
        extra = [p - 3 * s, p - s, p + s, p + 3 * s]
    edges = geometric_edges(w_lo, w_hi, ratio=2.0, extra=tuple(extra))
    edges = np.concatenate(([0.0], edges))
    wn, wts = panel_rule(edges, nodes_per_panel)
    expo = (y[:, None] * wn[None, :]) ** (1.0 / a)
    kern = np.exp(-expo) / (wn * wn + 2.0 * ca * wn + 1.0)[None, :]
    val = kern @ wts
    return math.sin(a * math.pi) / (a * math.pi) * val


def _ml_neg_asymptotic(a: float, b: float, y: np.ndarray, kmax: int = 14
                       ) -> np.ndarray:
    """E_{a,b}(-y) ~ sum_{k>=1} (-1)^{k+1} y^{-k} / Gamma(b - a k), y large."""
    y = np.asarray(y, dtype=float)
    acc = np.zeros_like(y)
    prev = np.full_like(y, np.inf)
    live = np.ones(y.shape, dtype=bool)
    for k in range(1, kmax + 1):
        coef = rgamma(b - a * k)
        if coef == 0.0:
            # exact zero of the expansion (b - a k at a gamma pole); skip
            # without touching the growth detector
            continue
        term = (-1.0) ** (k + 1) * coef * y ** (-float(k))
        grow = np.abs(term) > prev
        live &= ~grow
        acc = np.where(live, acc + term, acc)
        prev = np.where(live, np.abs(term), prev)
    return acc


def ml_neg_axis(a: float, y: np.ndarray,
                control: SeriesControl = _DEFAULT) -> np.ndarray:
    """Vectorized E_a(-y) for arrays y >= 0 (two-parameter b=1, c=1 case).

    Dispatches between the defining series, the completely-monotone integral
    representation, and the reciprocal asymptotic series.  This is the
    workhorse used for Levy-density evaluation.
    """
    if not (0.0 < a <= 1.0):
        raise DomainError(f"mittag_leffler requires a in (0, 1], got {a}")
    y = np.asarray(y, dtype=float)
    if np.any(y < 0.0):
        raise DomainError("ml_neg_axis expects y >= 0 (argument -y <= 0)")
    if a == 1.0:
        return np.exp(-y)
    out = np.empty_like(y)
    r = _ml_series_radius(a)
    m_ser = y <= r
    m_asy = y >= 100.0
    m_mid = ~(m_ser | m_asy)
    if np.any(m_ser):
        ys = y[m_ser]
        # vectorized alternating series with a fixed safe term count
        kmax = 8
        while kmax < control.max_terms:
            t_est = kmax * math.log(max(r, 1.0) + 1e-9) - gammaln(a * kmax + 1)
            if t_est < math.log(1e-18):
                break
            kmax = int(kmax * 1.5) + 1
        ks = np.arange(kmax + 1)
        lg = gammaln(a * ks + 1.0)
        terms = np.exp(ks[None, :] * np.log(np.maximum(ys, 1e-300))[:, None]
                       - lg[None, :])
        terms[ys == 0.0, :] = 0.0
        terms[ys == 0.0, 0] = 1.0
        sign = (-1.0) ** ks
        out[m_ser] = terms @ sign
    if np.any(m_mid):
        out[m_mid] = _ml_neg_integral(a, y[m_mid])
    if np.any(m_asy):
        out[m_asy] = _ml_neg_asymptotic(a, 1.0, y[m_asy])
    return out


def _ml_neg_general_b(a: float, b: float, y: float,
                      control: SeriesControl) -> float:
    """Scalar E_{a,b}(-y) for 0 < a < 1 on the negative axis, any b > 0.

    Reduces b into (0, 1+a) with the recurrence
    E_{a, b+a}(z) = (E_{a,b}(z) - 1/Gamma(b)) / z, then integrates the
    spectral kernel

        E_{a,b}(-y) = int_0^inf  (1/(a pi)) r^{(1-b)/a} e^{-r^{1/a}}
                      [r sin((1-b) pi) + y sin((1-b+a) pi)]
                      / (r^2 + 2 r y cos(a pi) + y^2)  dr .
    """
    if y <= _ml_series_radius(a):
        return float(np.real(_ml_series(a, b, 1.0, complex(-y), control)))
    if y >= 100.0:
        return float(_ml_neg_asymptotic(a, b, np.asarray([y]))[0])
    n_shift = 0
    while b >= 1.0 + a:
        b -= a
        n_shift += 1

    def kernel(r: float) -> float:
        num = r * math.sin((1.0 - b) * math.pi) + y * math.sin(
            (1.0 - b + a) * math.pi)
        den = r * r + 2.0 * r * y * math.cos(a * math.pi) + y * y
        return (r ** ((1.0 - b) / a) * math.exp(-r ** (1.0 / a)) * num
                / (a * math.pi * den))

    pts = [0.0]
    if math.cos(a * math.pi) < 0.0:
        s = math.sin(a * math.pi)
        for e in (-3 * s, -s, s, 3 * s):
            p = y * (-math.cos(a * math.pi) + e)
            if p > 0.0:
                pts.append(p)
    pts += [min(1.0, y), y, 50.0 ** a, 2 * 50.0 ** a]
    pts = sorted(set(p for p in pts if p >= 0.0))
    val = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        piece, _ = quad(kernel, lo, hi, epsabs=1e-14, epsrel=1e-12, limit=200)
        val += piece
    tail, _ = quad(kernel, pts[-1], np.inf, epsabs=1e-14, epsrel=1e-12,
                   limit=200)
    val += tail
    # forward reconstruction toward the original b
    z = -y
    for _ in range(n_shift):
        val = (val - rgamma(b)) / z
        b += a
    return float(val)


def mittag_leffler(a: float, b: float, c: float, z: complex,
                   control: SeriesControl = _DEFAULT) -> complex:
    """Three-parameter Mittag-Leffler function E^c_{a,b}(z).

        E^c_{a,b}(z) = sum_k (c)_k z^k / (k! Gamma(a k + b))

    Parameters
    ----------
    a : real in (0, 1]; b, c : real > 0; z : complex.

    Supported domains: any z inside the cancellation-safe series radius,
    and the full negative real axis (the completely monotone regime).  For
    other large arguments NonConvergence is raised.
    """
    if not (0.0 < a <= 1.0):
        raise DomainError(f"mittag_leffler requires a in (0, 1], got {a}")
    if b <= 0.0 or c <= 0.0:
        raise DomainError("mittag_leffler requires b > 0 and c > 0")
    z = complex(z)
    if z == 0:
        return complex(rgamma(b))
    if a == 1.0:
        if z.imag == 0.0:
            if b == 1.0 and c == 1.0:
                return complex(math.exp(z.real))
            # E^c_{1,b}(x) = 1F1(c; b; x) / Gamma(b)
            return complex(hyp1f1(c, b, z.real) * rgamma(b))
        if abs(z) <= _ml_series_radius(a):
            return _ml_series(a, b, c, z, control)
        raise NonConvergence(
            "mittag_leffler: complex z beyond the series radius is not supported")
    if abs(z) <= _ml_series_radius(a):
        return _ml_series(a, b, c, z, control)
    if z.imag == 0.0 and z.real < 0.0:
        y = -z.real
        if c == 1.0:
            if b == 1.0:
                return complex(ml_neg_axis(a, np.asarray([y]), control)[0])
            return complex(_ml_neg_general_b(a, b, y, control))
        # general c: reciprocal asymptotic with optimal truncation
        acc = 0.0
        prev = math.inf
        good = False
        for j in range(0, 18):
            rg = rgamma(b - a * (c + j))
            if rg == 0.0:
                # exact zero of the expansion; not divergence evidence
                continue
            t = ((-1.0) ** j * _real_gamma(c + j) * rg
                 / math.factorial(j) * y ** (-(c + j)))
            if abs(t) > prev:
                good = prev <= control.rel_tol * max(abs(acc), 1e-300)
                break
            acc += t
            prev = abs(t)
        else:
            good = prev <= control.rel_tol * max(abs(acc), 1e-300)
        if not good and prev > 1e-7 * max(abs(acc), 1e-300):
            raise NonConvergence(
                "mittag_leffler: c != 1 mid-range argument not supported "
                f"(asymptotic error estimate {prev:.2e})")
        return complex(acc * rgamma(c))
    raise NonConvergence(
        "mittag_leffler: large |z| supported only on the negative real axis")


# --------------------------------------------------------------------------
# 2R1
# --------------------------------------------------------------------------


def _r21_series(a: float, b: float, c: float, tau: float, z: complex,
                control: SeriesControl) -> complex:
    """Defining series (Gamma(c)/Gamma(b)) sum_k (a)_k Gamma(b + tau k)
    z^k / (Gamma(c + tau k) k!)."""
    acc = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    # term magnitudes are carried in log space (the Pochhammer factor alone
    # overflows float64 near k ~ 170), signs and the z^k phase separately
    lpoch = 0.0
    spoch = 1.0
    labs_z = math.log(abs(z))
    phase_z = z / abs(z)
    phase = 1.0 + 0.0j
    small_run = 0
    for k in range(control.max_terms):
        bb = b + tau * k
        cc = c + tau * k
        if _gamma_pole(bb):
            raise PoleError(
                f"2R1 series hits a gamma pole at b + tau k = {bb}")
        if _gamma_pole(cc):
            raise PoleError(
                f"2R1 series hits a gamma pole at c + tau k = {cc}")
        sign = (gammasgn(bb) * gammasgn(cc) * gammasgn(b) * gammasgn(c)
                * spoch)
        lmag = (lpoch + gammaln(bb) - gammaln(cc) + gammaln(c) - gammaln(b)
                + k * labs_z - gammaln(k + 1.0))
        term = sign * math.exp(lmag) * phase
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        if abs(term) <= control.rel_tol * 0.01 * max(1e-300, abs(acc)):
            small_run += 1
            if small_run >= 3 and k >= 4:
                return acc
        else:
            small_run = 0
        if a + k == 0.0:
            # Pochhammer hits zero: the series terminates exactly
            return acc
        lpoch += math.log(abs(a + k))
        spoch *= math.copysign(1.0, a + k)
        phase *= phase_z
    raise NonConvergence(
        f"2R1 series needed more than {control.max_terms} terms")


def _r21_beta_integral(ap: float, tau: float, w: complex,
                       control: SeriesControl) -> complex:
    """(1, ap, 1, tau) family via the Beta-function representation

        Gamma(ap) 2R1(1,ap,1,tau; w) = sum_{j<J} Gamma(ap+tau j) w^j /
            Gamma(1+tau j)
          + (w^J / Gamma(1-ap)) int_0^1 t^{ap+tau J-1} (1-t)^{-ap}
            (1 - w t^tau)^{-1} dt

    with J the smallest integer making ap + tau*J > 0.  Valid for ap < 1 and
    w outside [1, inf).
    """
    if ap >= 1.0:
        raise DomainError("beta representation needs ap < 1")
    J = 0
    while ap + tau * J <= 0.0:
        J += 1
    head = 0.0 + 0.0j
    for j in range(J):
        if _gamma_pole(ap + tau * j):
            raise PoleError(
                f"beta representation: gamma pole at ap + tau j = "
                f"{ap + tau * j}")
        head += _real_gamma(ap + tau * j) * w ** j * rgamma(1.0 + tau * j)

    p = ap + tau * J - 1.0  # in (-1, tau - 1]
    q = -ap  # > -1
    t0_abs = abs(w) ** (-1.0 / tau) if w != 0 else math.inf

    def rest(t: np.ndarray) -> np.ndarray:
        return (1.0 - t) ** q / (1.0 - w * t ** tau)

    n = control.annulus_quadrature_nodes
    # left piece: geometric panels on [t_min, 1/2] plus an analytic head on
    # [0, t_min] using rest(t) = 1 + w t^tau + ap t + O(t^{2 tau}, t^{1+tau});
    # t_min keeps |w| t_min^tau small so the neglected orders are < 1e-11
    t_min = max((3e-6 / max(abs(w), 1.0)) ** (1.0 / tau), 1e-250)
    extra = []
    if t_min < t0_abs < 0.5:
        extra = [t0_abs * 0.5, t0_abs, min(0.5, t0_abs * 2.0)]
    edges = geometric_edges(t_min, 0.5, ratio=2.0, extra=tuple(extra))
    tn, wt = panel_rule(edges, n)
    left = np.sum(tn ** p * rest(tn) * wt)
    head_int = (t_min ** (p + 1.0) / (p + 1.0)
                + w * t_min ** (p + 1.0 + tau) / (p + 1.0 + tau)
                + ap * t_min ** (p + 2.0) / (p + 2.0))
    # right piece [1/2, 1] in eta = 1 - t with analytic head at eta = 0,
    # expanded to first order (the zeroth-order 1/(1-w) picks up a large
    # correction ~ w tau/(1-w) eta when w is close to 1)
    e_min = 1e-10
    edges_e = geometric_edges(e_min, 0.5, ratio=2.0)
    en, we = panel_rule(edges_e, n)
    tt = 1.0 - en
    right = np.sum(en ** q * tt ** p / (1.0 - w * tt ** tau) * we)
    c1 = -p - w * tau / (1.0 - w)
    head_e = (e_min ** (q + 1.0) / (q + 1.0)
              + c1 * e_min ** (q + 2.0) / (q + 2.0)) / (1.0 - w)
    integral = left + head_int + right + head_e
    val = head + w ** J * rgamma(1.0 - ap) * integral
    return val * rgamma(ap)


def _r21_laplace(ap: float, tau: float, w: float,
                 control: SeriesControl) -> complex:
    """(1, ap, 1, tau) family for ap > 0 and real w < 1 via

        Gamma(ap) 2R1(1,ap,1,tau; w) = int_0^inf e^{-x} x^{ap-1}
                                       E_tau(w x^tau) dx .
    """
    if ap <= 0.0:
        raise DomainError("laplace representation needs ap > 0")
    if w >= 1.0:
        raise BranchCut("2R1 branch cut on [1, inf)")
    # E_tau(w x^tau) ~ exp(w^{1/tau} x)/tau for w in (0,1), so push the upper
    # cutoff until the surviving exponential rate has decayed away
    hi = 60.0 if w <= 0.0 else 60.0 + 46.0 / (1.0 - w ** (1.0 / tau))
    # small-x head uses E_tau(w x^tau) = 1 + w x^tau/Gamma(1+tau) + O(x^2tau)
    # and e^{-x} = 1 - x + O(x^2); lo keeps |w| lo^tau below 1e-6
    lo = max(min(1e-6, (1e-6 / max(abs(w), 1.0)) ** (1.0 / tau)), 1e-200)
    edges = geometric_edges(lo, hi, ratio=2.0, extra=(1.0,))
    xn, wt = panel_rule(edges, 32)
    if w <= 0.0:
        integ = np.exp(-xn) * xn ** (ap - 1.0) * ml_neg_axis(
            tau, -w * xn ** tau, control)
    else:
        # e^{-x} E_tau(w x^tau) in scaled form: the positive-argument series
        # below the crossover, beyond it the exponential-plus-algebraic
        # large-argument form with e^{-x} folded in analytically so nothing
        # overflows
        r = w ** (1.0 / tau)
        za = w * xn ** tau
        z_star = 25.0 ** tau
        integ = np.empty_like(xn)
        m_lo = za <= z_star
        if np.any(m_lo):
            vals = np.array([float(np.real(_ml_series(
                tau, 1.0, 1.0, complex(zz), control))) for zz in za[m_lo]])
            integ[m_lo] = (np.exp(-xn[m_lo]) * xn[m_lo] ** (ap - 1.0)
                           * vals)
        if np.any(~m_lo):
            xh = xn[~m_lo]
            zh = za[~m_lo]
            alg = np.zeros_like(xh)
            for k in range(1, 15):
                cf = rgamma(1.0 - tau * k)
                if cf == 0.0:
                    continue
                alg += cf * zh ** (-float(k))
            integ[~m_lo] = xh ** (ap - 1.0) * (
                np.exp(-(1.0 - r) * xh) / tau - np.exp(-xh) * alg)
    val = float(np.sum(integ * wt))
    val += (lo ** ap / ap
            + w * lo ** (ap + tau) / ((ap + tau) * math.gamma(tau + 1.0))
            - lo ** (ap + 1.0) / (ap + 1.0))
    return complex(val * rgamma(ap))


def _ell_core(x: float, y: float, z: complex) -> complex:
    """ell(x, y, z) = z^{x/y} * pi / (sin(-pi x / y) * y * Gamma(1 + x)).

    Principal branch of z^{x/y}.  PoleError when x/y is an integer (sine
    zero) or 1 + x is a nonpositive integer (gamma pole makes the value 0 --
    that case is returned as 0, not an error).
    """
    ratio = x / y
    if abs(ratio - round(ratio)) < 1e-12:
        raise PoleError(f"ell undefined: x/y = {ratio} is an integer")
    s = math.sin(-math.pi * ratio)
    g = rgamma(1.0 + x)
    zc = complex(z)
    if zc == 0:
        raise DomainError("ell requires z != 0")
    power = np.exp((x / y) * np.log(zc))
    return power * math.pi * g / (s * y)


def _r21_ks_expansion(ap: float, tau: float, w: complex,
                      control: SeriesControl) -> complex:
    """(1, ap, 1, tau) family by the two-series large-|w| expansion

        Gamma(ap) 2R1 = - sum_k Gamma(ap - tau(k+1)) / Gamma(1 - tau(k+1))
                          w^{-k-1}
                        + sum_k ((-1)^k / k!) ell(-ap - k, tau, -w) .

    Raises PoleError if a needed coefficient sits too close to a pole.
    """
    if abs(w) <= 1.0:
        raise DomainError("large-argument expansion needs |w| > 1")
    tol = control.rel_tol
    s1 = 0.0 + 0.0j
    wk = 1.0 / w
    small = 0
    for k in range(120):
        u = tau * (k + 1)
        arg = ap - u
        rg = rgamma(1.0 - u)
        arg_pole = _gamma_pole(arg)
        if rg == 0.0:
            if arg_pole:
                # 0 * inf collision: the term has a finite nonzero limit
                # this truncated evaluation cannot recover
                raise PoleError(
                    "expansion coefficient collision at "
                    f"ap - tau(k+1) = {arg}")
            # the 1/Gamma factor kills this term exactly (tau(k+1) a
            # positive integer); skip without counting it as convergence
            wk /= w
            continue
        if arg_pole:
            raise PoleError(
                f"expansion coefficient pole at ap - tau(k+1) = {arg}")
        if abs(arg - round(arg)) < 5e-3 and round(arg) <= 0.0:
            # near a coefficient pole the term is huge and cancels against
            # its companion in the other series; float cannot track that,
            # so stop only if the term itself is below tolerance
            t_mag = math.exp(gammaln(arg)) * abs(rg) * abs(wk)
            if t_mag > tol * max(abs(s1), 1e-300):
                raise PoleError(
                    f"expansion coefficient near pole, ap - tau(k+1) = {arg}")
            break
        t = _real_gamma(arg) * rg * wk
        s1 += t
        wk /= w
        if abs(t) < tol * 1e-2 * max(abs(s1), 1e-300):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    s2 = 0.0 + 0.0j
    small = 0
    for k in range(120):
        xk = -ap - k
        ratio = xk / tau
        dist = abs(ratio - round(ratio))
        rg = rgamma(1.0 + xk)
        if rg == 0.0:
            if dist < 1e-8:
                # gamma zero against a sine zero: finite nonzero limit
                raise PoleError(
                    f"expansion 0/0 collision at (ap + k)/tau = {-ratio}")
            # 1/Gamma zero makes ell vanish identically; skip the term
            continue
        if dist < 5e-3:
            # near a sine zero of ell the term is ~ 1/dist; compute its
            # magnitude in logs and skip only when negligible
            d_eff = max(dist, 4e-16 * max(1.0, abs(ratio)))
            lmag = (ratio * math.log(abs(w)) + math.log(abs(rg))
                    - math.log(d_eff * tau) - gammaln(k + 1.0))
            floor = math.log(tol * max(abs(s2), abs(s1), 1e-300))
            if lmag > floor:
                raise PoleError(
                    f"expansion ell-pole near (ap + k)/tau = {-ratio}")
            continue
        t = ((-1.0) ** k * math.exp(-gammaln(k + 1.0))
             * _ell_core(xk, tau, -w))
        s2 += t
        if abs(t) < tol * 1e-2 * max(abs(s2), 1e-300):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    return (s2 - s1) * rgamma(ap)


def _r21_family(ap: float, tau: float, w: complex,
                control: SeriesControl) -> complex:
    """Dispatcher for 2R1(1, ap, 1, tau; w) over the whole cut plane."""
    if w.imag == 0.0 and w.real > 1.0:
        raise BranchCut("2R1 has a branch cut on (1, inf)")
    aw = abs(w)
    if aw <= 0.9:
        return _r21_series(1.0, ap, 1.0, tau, w, control)
    if aw >= control.switch_radius:
        try:
            return _r21_ks_expansion(ap, tau, w, control)
        except PoleError:
            pass  # fall through to the integral representations
    if ap < 1.0:
        return _r21_beta_integral(ap, tau, w, control)
    if w.imag == 0.0 and w.real < 1.0:
        return _r21_laplace(ap, tau, float(w.real), control)
    raise NonConvergence(
        "2R1: no representation for ap >= 1 with complex argument")


def r2_1(a: float, b: float, c: float, tau: float, z: complex,
         control: SeriesControl = _DEFAULT) -> complex:
    """Gauss-type hypergeometric series with stretched index tau:

        2R1(a, b, c, tau; z) = (Gamma(c)/Gamma(b)) sum_k (a)_k
            Gamma(b + tau k) z^k / (Gamma(c + tau k) k!) .

    tau=1 reduces to the Gauss hypergeometric function.  The series
    converges for |z| < 1; the function continues analytically to the cut
    plane C \\ (1, inf).  Beyond the series radius only the family
    a = c = 1 (the one used by the closed-form characteristic exponents) is
    supported.
    """
    if not (0.0 < tau <= 1.0):
        raise DomainError(f"r2_1 requires tau in (0, 1], got {tau}")
    z = complex(z)
    if z.imag == 0.0 and z.real > 1.0:
        raise BranchCut("r2_1 has a branch cut on (1, inf)")
    if _gamma_pole(c):
        raise DomainError("r2_1 requires c not a nonpositive integer")
    if z == 0:
        return 1.0 + 0.0j
    if _gamma_pole(b):
        # degenerate limit: the 1/Gamma(b) prefactor suppresses every
        # term except k = 0
        return 1.0 + 0.0j
    if tau == 1.0:
        if c == b:
            return (1.0 - z) ** (-a)
        if a == 1.0 and c == 1.0:
            return (1.0 - z) ** (-b)
        if z.imag == 0.0 and abs(z) < 1.0:
            return complex(hyp2f1(a, b, c, z.real))
        if abs(z) <= 0.9:
            return _r21_series(a, b, c, tau, z, control)
        raise NonConvergence(
            "r2_1 at tau=1: unsupported argument for the general case")
    if a == 1.0 and c == 1.0:
        return _r21_family(b, tau, z, control)
    if abs(z) <= 0.9:
        return _r21_series(a, b, c, tau, z, control)
    raise NonConvergence(
        "r2_1 beyond the series radius is supported only for a = c = 1")


# --------------------------------------------------------------------------
# Lerch transcendent
# --------------------------------------------------------------------------


def lerch_phi(z: complex, s: float, a: float,
              control: SeriesControl = _DEFAULT) -> complex:
    """Lerch transcendent Phi(z, s, a) = sum_k z^k / (a + k)^s.

    a must not be a nonpositive integer (DomainError); real z >= 1 lies on
    the branch cut (BranchCut).  Negative non-integer a is shifted into
    (0, 1] with Phi(z,s,a) = a^{-s} + z Phi(z,s,a+1); beyond the series
    radius the exponential integral representation is used (requires real
    s > 0).
    """
    z = complex(z)
    if abs(a - round(a)) < 1e-12 and round(a) <= 0:
        raise DomainError(f"lerch_phi requires a not a nonpositive integer, got {a}")
    if z.imag == 0.0 and z.real >= 1.0:
        raise BranchCut("lerch_phi has a branch cut on [1, inf)")
    # shift a into (0, 1]
    head = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    aa = float(a)
    while aa <= 0.0:
        head += zpow * complex(aa) ** (-s)
        zpow *= z
        aa += 1.0
    if abs(z) <= 0.9:
        acc = 0.0 + 0.0j
        zk = 1.0 + 0.0j
        for k in range(control.max_terms):
            term = zk / (aa + k) ** s
            acc += term
            if abs(term) <= control.rel_tol * 1e-2 * max(abs(acc), 1e-300) \
                    and k > 4:
                return head + zpow * acc
            zk *= z
        raise NonConvergence("lerch_phi series did not converge")
    if s <= 0.0:
        raise DomainError(
            "lerch_phi beyond the series radius requires real s > 0")

    # integral representation (1/Gamma(s)) int_0^inf t^{s-1} e^{-aa t}
    # / (1 - z e^{-t}) dt
    split = [0.0]
    if abs(z) > 1.0:
        split.append(math.log(abs(z)))
    split += [1.0, 5.0, 60.0 / max(aa, 0.05)]
    split = sorted(set(p for p in split if p >= 0.0))

    def integrand_re(t: float) -> float:
        if t == 0.0:
            return 0.0
        val = t ** (s - 1.0) * math.exp(-aa * t) / (1.0 - z * math.exp(-t))
        return val.real

    def integrand_im(t: float) -> float:
        if t == 0.0:
            return 0.0
        val = t ** (s - 1.0) * math.exp(-aa * t) / (1.0 - z * math.exp(-t))
        return val.imag

    total = 0.0 + 0.0j
    for lo, hi in zip(split[:-1], split[1:]):
        re, _ = quad(integrand_re, lo, hi, epsabs=1e-14, epsrel=1e-12,
                     limit=200)
        im, _ = quad(integrand_im, lo, hi, epsabs=1e-14, epsrel=1e-12,
                     limit=200)
        total += re + 1j * im
    re, _ = quad(integrand_re, split[-1], np.inf, epsabs=1e-14, epsrel=1e-12,
                 limit=200)
    im, _ = quad(integrand_im, split[-1], np.inf, epsabs=1e-14, epsrel=1e-12,
                 limit=200)
    total += re + 1j * im
    return head + zpow * total * rgamma(s)
