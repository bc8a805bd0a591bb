"""Internal vectorized quadrature plumbing shared across modules.

Deterministic Gauss-Legendre panel rules (vectorized over panels and over
batch evaluation points), geometric/log panel edge builders, asymptotic tail
integrals of exponential-power type, and Wynn's epsilon extrapolation for
slowly convergent oscillatory panel sums.  Everything here is private to the
package.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import gammaln

__all__ = [
    "gl_rule",
    "panel_rule",
    "geometric_edges",
    "exp_power_tail",
    "gamma_tail",
    "wynn_epsilon",
]


@lru_cache(maxsize=32)
def gl_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1], cached."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def panel_rule(edges: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule over consecutive panels.

    Parameters
    ----------
    edges : array of shape (m+1,), strictly increasing panel edges.
    n : nodes per panel.

    Returns
    -------
    nodes, weights : flat arrays of length m*n such that
        ``integral ~= f(nodes) @ weights``.
    """
    edges = np.asarray(edges, dtype=float)
    x, w = gl_rule(n)
    a = edges[:-1][:, None]
    b = edges[1:][:, None]
    half = 0.5 * (b - a)
    nodes = (0.5 * (a + b) + half * x[None, :]).ravel()
    weights = (half * w[None, :]).ravel()
    return nodes, weights


def geometric_edges(lo: float, hi: float, ratio: float = 2.0,
                    extra: tuple[float, ...] = ()) -> np.ndarray:
    """Geometric panel edges from lo to hi (ratio per panel) plus extra cuts."""
    if not (0.0 < lo < hi):
        raise ValueError("need 0 < lo < hi")
    pts = [lo]
    x = lo
    while x * ratio < hi:
        x *= ratio
        pts.append(x)
    pts.append(hi)
    for e in extra:
        if lo < e < hi:
            pts.append(float(e))
    edges = np.unique(np.asarray(pts, dtype=float))
    # drop near-duplicate edges that would create degenerate panels
    keep = np.concatenate(([True], np.diff(edges) > 1e-12 * edges[1:]))
    return edges[keep]


def exp_power_tail(w: complex, s: float, x0: float, kmax: int = 40) -> complex:
    """Asymptotic tail integral  int_x0^inf e^{-w x} x^{-s} dx.

    Uses the divergent-asymptotic expansion
        e^{-w x0} x0^{-s} / w * sum_k (-1)^k (s)_k (w x0)^{-k}
    with optimal truncation.  Requires |w| * x0 >~ 10 for full accuracy; the
    truncation error is bounded by the first omitted term (returned accuracy
    is typically ~1e-15 relative for |w x0| >= 20).
    """
    wx = w * x0
    if abs(wx) < 2.0:
        raise ValueError("exp_power_tail needs |w*x0| >= 2")
    acc = 0.0 + 0.0j
    term = 1.0 + 0.0j
    prev = np.inf
    for k in range(kmax):
        if abs(term) > prev:
            break
        acc += term
        prev = abs(term)
        term = term * (-(s + k) / wx)
    return np.exp(-wx) * x0 ** (-s) / w * acc


def gamma_tail(s: float, t0: float) -> float:
    """Upper incomplete integral  int_{t0}^inf e^{-t} t^{-s} dt,  t0 > 0.

    Valid for any real s (the integrand is integrable on [t0, inf) for
    t0 > 0).  Computed by geometric Gauss-Legendre panels up to t = t0 + 60
    plus a closing asymptotic tail.
    """
    if t0 <= 0:
        raise ValueError("gamma_tail needs t0 > 0")
    hi = max(t0 + 60.0, 60.0)
    edges = geometric_edges(t0, hi, ratio=2.0)
    nodes, wts = panel_rule(edges, 24)
    val = float(np.sum(np.exp(-nodes) * nodes ** (-s) * wts))
    val += float(np.real(exp_power_tail(1.0 + 0.0j, s, hi)))
    return val


def log_binomial(s: float, k: int) -> float:
    """log |(s)_k / k!| sign-free helper via gammaln (s > 0)."""
    return gammaln(s + k) - gammaln(s) - gammaln(k + 1)


def wynn_epsilon(partial: np.ndarray) -> complex:
    """Wynn's epsilon extrapolation of a sequence of partial sums.

    Returns the most-accelerated entry of the epsilon table.  Works for
    complex sequences; used for slowly decaying oscillatory panel series.
    """
    s = np.asarray(partial, dtype=complex)
    n = s.size
    if n == 0:
        raise ValueError("empty sequence")
    if n == 1:
        return complex(s[0])
    eps_prev = np.zeros(n + 1, dtype=complex)  # eps_{-1}
    eps_curr = s.copy()  # eps_0
    best = s[-1]
    for _ in range(n - 1):
        nxt = np.empty(eps_curr.size - 1, dtype=complex)
        for j in range(eps_curr.size - 1):
            diff = eps_curr[j + 1] - eps_curr[j]
            if diff == 0:
                nxt[j] = eps_prev[j + 1]
            else:
                nxt[j] = eps_prev[j + 1] + 1.0 / diff
        eps_prev = eps_curr
        eps_curr = nxt
        if eps_curr.size == 0:
            break
        # even columns of the epsilon table approximate the limit
        if (n - eps_curr.size) % 2 == 0:
            best = eps_curr[-1]
    return complex(best)
