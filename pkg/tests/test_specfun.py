"""Special-function layer: frozen-table agreement, identities, error paths.

Expected values in _frozen.py come from tools/gen_reference.py (mpmath at
30-40 significant digits, written independently of the package internals)
and are committed verbatim; tolerances reflect the worst observed deviation
with an order-of-magnitude safety factor.
"""

import cmath
import math

import numpy as np
import pytest

from _frozen import ML_ONE, ML_GEN, R21_REAL, R21_COMPLEX, R21_ABC, LERCH
from gtgs import specfun
from gtgs.errors import BranchCut, DomainError, NonConvergence
from gtgs.specfun import SeriesControl


def _rel(got, want):
    return abs(got - want) / (1.0 + abs(want))


# ---------------------------------------------------------------------------
# frozen reference tables
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a, y, want", ML_ONE)
def test_mittag_leffler_one_parameter_table(a, y, want):
    got = specfun.mittag_leffler(a, 1.0, 1.0, -y)
    assert abs(got.imag) < 1e-13
    assert _rel(got.real, want) < 5e-12


@pytest.mark.parametrize("a, b, c, y, want", ML_GEN)
def test_mittag_leffler_three_parameter_table(a, b, c, y, want):
    got = specfun.mittag_leffler(a, b, c, -y)
    assert abs(got.imag) < 1e-13
    assert _rel(got.real, want) < 1e-12


@pytest.mark.parametrize("ap, tau, w_re, w_im, v_re, v_im", R21_REAL)
def test_r2_1_real_argument_table(ap, tau, w_re, w_im, v_re, v_im):
    got = specfun.r2_1(1.0, ap, 1.0, tau, complex(w_re, w_im))
    assert _rel(got, complex(v_re, v_im)) < 5e-12


@pytest.mark.parametrize("ap, tau, w_re, w_im, v_re, v_im", R21_COMPLEX)
def test_r2_1_complex_argument_table(ap, tau, w_re, w_im, v_re, v_im):
    got = specfun.r2_1(1.0, ap, 1.0, tau, complex(w_re, w_im))
    assert _rel(got, complex(v_re, v_im)) < 5e-12


@pytest.mark.parametrize("a, b, c, tau, w_re, w_im, v_re, v_im", R21_ABC)
def test_r2_1_general_parameter_table(a, b, c, tau, w_re, w_im, v_re, v_im):
    got = specfun.r2_1(a, b, c, tau, complex(w_re, w_im))
    assert _rel(got, complex(v_re, v_im)) < 1e-11


@pytest.mark.parametrize("z_re, z_im, s, a, v_re, v_im", LERCH)
def test_lerch_phi_table(z_re, z_im, s, a, v_re, v_im):
    got = specfun.lerch_phi(complex(z_re, z_im), s, a)
    assert _rel(got, complex(v_re, v_im)) < 5e-12


# ---------------------------------------------------------------------------
# closed-form identities
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("b", [0.35, 1.0, 2.4, 5.5])
@pytest.mark.parametrize("w", [0.4 + 0.0j, -2.0 + 0.0j, 0.3 + 0.55j,
                               -0.8 - 1.1j])
def test_r2_1_tau_one_collapses_to_binomial(b, w):
    got = specfun.r2_1(1.0, b, 1.0, 1.0, w)
    want = (1.0 - w) ** (-b)
    assert _rel(got, want) < 1e-12


@pytest.mark.parametrize("y", [0.05, 0.3, 2.0, 30.0, 400.0])
def test_mittag_leffler_order_one_is_exponential(y):
    got = specfun.mittag_leffler(1.0, 1.0, 1.0, -y)
    assert _rel(got.real, math.exp(-y)) < 1e-13
    assert abs(got.imag) == 0.0


@pytest.mark.parametrize("y", [0.4, 1.7, 6.0, 25.0])
def test_mittag_leffler_half_order_is_scaled_erfc(y):
    # E_{1/2}(-y) = e^{y^2} erfc(y)
    from scipy.special import erfcx
    got = specfun.mittag_leffler(0.5, 1.0, 1.0, -y)
    assert _rel(got.real, erfcx(y)) < 1e-11


@pytest.mark.parametrize("a", [0.3, 0.6, 0.95])
def test_mittag_leffler_small_argument_two_term_law(a):
    y = 1e-6
    got = specfun.mittag_leffler(a, 1.0, 1.0, -y).real
    assert abs(got - (1.0 - y / math.gamma(1.0 + a))) < 1e-11


@pytest.mark.parametrize("a", [0.3, 0.5, 0.7, 0.9])
def test_mittag_leffler_negative_axis_asymptotic_law(a):
    # E_a(-y) ~ 1 / (Gamma(1-a) y) for y -> inf, to 1% at y = 1e4
    y = 1e4
    got = specfun.mittag_leffler(a, 1.0, 1.0, -y).real
    assert abs(got * math.gamma(1.0 - a) * y - 1.0) <= 0.01


@pytest.mark.parametrize("a", [0.25, 0.45, 0.7, 0.9])
def test_mittag_leffler_negative_axis_monotone_positive(a):
    ys = np.logspace(-3, 5, 160)
    vals = specfun.ml_neg_axis(a, ys)
    assert np.all(vals > 0.0)
    assert np.all(np.diff(vals) < 0.0)


@pytest.mark.parametrize("a", [0.3, 0.45, 0.7, 0.9])
def test_mittag_leffler_negative_axis_branch_joins_smooth(a):
    # the log-log slope must drift smoothly from 0 to about -1 across the
    # series / integral / expansion switch points, with no visible seams
    ys = np.logspace(-2, 4, 400)
    vals = np.array([specfun.mittag_leffler(a, 1.0, 1.0, -y).real
                     for y in ys])
    slope = np.diff(np.log(vals)) / np.diff(np.log(ys))
    assert np.max(np.abs(np.diff(slope))) < 0.05


def test_ml_neg_axis_matches_scalar_calls():
    ys = np.array([1e-4, 0.02, 0.9, 3.0, 47.0, 1e3, 2e6])
    vec = specfun.ml_neg_axis(0.62, ys)
    sc = np.array([specfun.mittag_leffler(0.62, 1.0, 1.0, -y).real
                   for y in ys])
    assert np.max(np.abs(vec - sc) / (1.0 + np.abs(sc))) < 1e-11


def test_lerch_phi_reduces_to_polylog_and_zeta():
    # a = 1: Phi(z, s, 1) = Li_s(z) / z ; z -> 0: Phi -> a^{-s}
    got = specfun.lerch_phi(0.5 + 0.0j, 2.0, 1.0)
    want = sum((0.5 ** (k - 1)) / k ** 2 for k in range(1, 400))
    assert _rel(got.real, want) < 1e-12
    tiny = specfun.lerch_phi(0.0 + 0.0j, 1.7, 3.2)
    assert _rel(tiny.real, 3.2 ** (-1.7)) < 1e-12


def test_r2_1_at_zero_argument_is_one():
    assert specfun.r2_1(1.0, 2.3, 1.0, 0.55, 0.0 + 0.0j) == 1.0 + 0.0j


def test_r2_1_conjugate_symmetry():
    w = 0.42 + 0.73j
    up = specfun.r2_1(1.0, 1.8, 1.0, 0.6, w)
    dn = specfun.r2_1(1.0, 1.8, 1.0, 0.6, w.conjugate())
    assert _rel(up, dn.conjugate()) < 1e-13


# ---------------------------------------------------------------------------
# error paths
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a", [0.0, -0.3, 1.2])
def test_mittag_leffler_rejects_order_outside_unit_interval(a):
    with pytest.raises(DomainError):
        specfun.mittag_leffler(a, 1.0, 1.0, -1.0)


def test_mittag_leffler_rejects_nonpositive_b_and_c():
    with pytest.raises(DomainError):
        specfun.mittag_leffler(0.5, -1.0, 1.0, -1.0)
    with pytest.raises(DomainError):
        specfun.mittag_leffler(0.5, 1.0, 0.0, -1.0)


@pytest.mark.parametrize("z", [50.0, 200.0 + 0.0j])
def test_mittag_leffler_large_positive_argument_refuses(z):
    with pytest.raises(NonConvergence):
        specfun.mittag_leffler(0.5, 1.0, 1.0, z)


@pytest.mark.parametrize("tau", [0.0, -0.5, 1.3])
def test_r2_1_rejects_tau_outside_unit_interval(tau):
    with pytest.raises(DomainError):
        specfun.r2_1(1.0, 2.0, 1.0, tau, 0.5 + 0.0j)


def test_r2_1_starved_series_raises():
    with pytest.raises(NonConvergence):
        specfun.r2_1(1.0, 2.3, 1.0, 0.6, 0.9 + 0.2j,
                     control=SeriesControl(max_terms=4))


@pytest.mark.parametrize("z", [1.0, 2.5, 1.0 + 0.0j])
def test_lerch_phi_branch_cut_rejected(z):
    with pytest.raises(BranchCut):
        specfun.lerch_phi(z, 1.5, 0.7)


@pytest.mark.parametrize("a", [0.0, -3.0])
def test_lerch_phi_rejects_nonpositive_integer_offset(a):
    with pytest.raises(DomainError):
        specfun.lerch_phi(0.5 + 0.0j, 1.5, a)
