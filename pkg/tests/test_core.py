"""Parameter validation, JSON codec, densities, and truncation moments."""

import json
import math

import numpy as np
import pytest

from _frozen import TEMPERING, TRUNC_MOMENTS, POWER_MOMENTS
from gtgs import core
from gtgs.core import GtgsParams, Side
from gtgs.errors import DivergentMoment, DomainError, InvalidParams

VALID = GtgsParams(0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0)


def _one_sided(gamma, alpha, lam, theta):
    """Positive-side-only record with unit weight, used for table rows."""
    return GtgsParams(gamma_plus=gamma, alpha_plus=alpha, lambda_plus=lam,
                      theta_plus=theta, delta_plus=1.0,
                      gamma_minus=0.0, alpha_minus=0.5, lambda_minus=1.0,
                      theta_minus=1.0, delta_minus=0.0, mu=0.0)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_validate_accepts_interior_point_unchanged():
    assert core.validate(VALID) is VALID


def test_validate_accepts_untilted_mittag_leffler_side():
    p = VALID.replace(theta_plus=0.0, gamma_plus=0.3, alpha_plus=0.7)
    assert core.validate(p) is p


def test_validate_accepts_untilted_alpha_one_side():
    # alpha = 1 collapses the kernel to exp(-lambda x): integrable even
    # without an explicit tilt, so this stays a valid record
    p = VALID.replace(theta_plus=0.0, alpha_plus=1.0)
    assert core.validate(p) is p


@pytest.mark.parametrize("field, value", [
    ("gamma_plus", -0.1), ("gamma_plus", 2.0), ("gamma_minus", 2.3),
    ("gamma_minus", float("nan")),
    ("alpha_plus", 0.0), ("alpha_plus", 1.0001), ("alpha_minus", -0.5),
    ("lambda_plus", 0.0), ("lambda_minus", -2.0),
    ("lambda_plus", float("inf")),
    ("theta_plus", -0.01), ("theta_minus", float("inf")),
    ("delta_plus", -1.0), ("delta_minus", float("inf")),
    ("mu", float("nan")), ("mu", float("inf")),
])
def test_validate_rejects_each_out_of_range_field(field, value):
    with pytest.raises(InvalidParams) as exc:
        core.validate(VALID.replace(**{field: value}))
    assert field.split("_")[0] in str(exc.value)


def test_validate_rejects_both_weights_zero():
    with pytest.raises(InvalidParams, match=r"delta"):
        core.validate(VALID.replace(delta_plus=0.0, delta_minus=0.0))


def test_one_sided_record_is_valid():
    p = VALID.replace(delta_minus=0.0)
    assert core.validate(p) is p


def test_params_are_immutable_and_coerced_to_float():
    p = GtgsParams(delta_plus=1, mu=2)
    assert isinstance(p.mu, float) and p.mu == 2.0
    with pytest.raises(Exception):
        p.mu = 3.0


def test_side_accessor_selects_matching_fields():
    p = GtgsParams(0.1, 0.2, 0.3, 0.4, 1.5, 1.6, 1.7, 1.8, 1.9, 2.1, 0.0)
    sp = p.side(Side.POSITIVE)
    sm = p.side(Side.NEGATIVE)
    assert (sp.gamma, sp.alpha, sp.lam, sp.theta, sp.delta) == \
        (0.1, 0.3, 1.5, 1.7, 1.9)
    assert (sm.gamma, sm.alpha, sm.lam, sm.theta, sm.delta) == \
        (0.2, 0.4, 1.6, 1.8, 2.1)


# ---------------------------------------------------------------------------
# JSON codec
# ---------------------------------------------------------------------------

def test_json_round_trip_preserves_every_field():
    p = GtgsParams(0.5, 0.3, 0.5, 0.6, 1.0, 1.2, 1.0, 0.5, 1.0, 0.7, 0.125)
    assert core.from_json(core.to_json(p)) == p


def test_to_json_is_flat_object_with_canonical_names():
    raw = json.loads(core.to_json(VALID))
    assert set(raw) == {
        "gamma_plus", "gamma_minus", "alpha_plus", "alpha_minus",
        "lambda_plus", "lambda_minus", "theta_plus", "theta_minus",
        "delta_plus", "delta_minus", "mu"}


def test_from_json_fills_missing_fields_with_defaults_then_validates():
    p = core.from_json('{"delta_plus": 1.0, "gamma_plus": 0.5}')
    assert p.delta_plus == 1.0 and p.gamma_plus == 0.5 and p.mu == 0.0


@pytest.mark.parametrize("text, fragment", [
    ("not json", "malformed"),
    ("[1, 2]", "flat object"),
    ('{"unknown_knob": 1.0}', "unknown parameter fields"),
    ('{"gamma_plus": "big"}', "non-numeric"),
    ('{"gamma_plus": true}', "non-numeric"),
    ('{"gamma_plus": 5.0, "delta_plus": 1.0}', "gamma_plus"),
])
def test_from_json_rejects_malformed_input(text, fragment):
    with pytest.raises(InvalidParams, match=fragment):
        core.from_json(text)


# ---------------------------------------------------------------------------
# tempering function and Levy density
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("x, alpha, lam, theta, want", TEMPERING)
def test_tempering_function_matches_reference(x, alpha, lam, theta, want):
    p = _one_sided(0.5, alpha, lam, theta)
    got = core.tempering_function(p, x)
    assert abs(got - want) / (1.0 + abs(want)) < 1e-12


def test_tempering_function_uses_the_side_of_the_sign():
    p = GtgsParams(0.5, 0.5, 0.5, 1.0, 1.0, 2.0, 1.0, 3.0, 1.0, 1.0, 0.0)
    x = 0.8
    plus = core.tempering_function(p, x)
    minus = core.tempering_function(p, -x)
    assert minus == pytest.approx(math.exp(-(3.0 + 2.0) * x), rel=1e-13)
    assert plus != pytest.approx(minus)


def test_tempering_function_vectorizes_and_rejects_zero():
    p = VALID
    xs = np.array([-1.5, -0.2, 0.4, 2.0])
    vec = core.tempering_function(p, xs)
    assert vec.shape == xs.shape
    for i, x in enumerate(xs):
        assert vec[i] == pytest.approx(core.tempering_function(p, float(x)),
                                       rel=1e-13)
    with pytest.raises(DomainError):
        core.tempering_function(p, 0.0)
    with pytest.raises(DomainError):
        core.tempering_function(p, np.array([1.0, 0.0]))


def test_levy_density_structure_and_vectorization():
    p = GtgsParams(0.5, 0.3, 0.5, 0.6, 1.0, 1.2, 1.0, 0.5, 1.0, 0.7, 0.1)
    xs = np.array([-2.0, -0.5, 0.3, 4.0])
    lv = core.levy_density(p, xs)
    q = core.tempering_function(p, xs)
    deltas = np.where(xs > 0, p.delta_plus, p.delta_minus)
    gammas = np.where(xs > 0, p.gamma_plus, p.gamma_minus)
    want = deltas * q / np.abs(xs) ** (1.0 + gammas)
    assert np.max(np.abs(lv - want) / want) < 1e-13
    assert core.levy_density(p, 0.3) == pytest.approx(lv[2], rel=1e-13)
    with pytest.raises(DomainError):
        core.levy_density(p, 0.0)


def test_canonical_density_is_abs_x_times_levy_density():
    p = GtgsParams(0.5, 0.3, 0.5, 0.6, 1.0, 1.2, 1.0, 0.5, 1.0, 0.7, 0.1)
    xs = np.array([-3.0, -0.7, 0.2, 1.9])
    assert np.allclose(core.canonical_density(p, xs),
                       np.abs(xs) * core.levy_density(p, xs),
                       rtol=1e-14, atol=0.0)
    with pytest.raises(DomainError):
        core.canonical_density(p, 0.0)


def test_levy_density_inactive_side_is_zero():
    p = VALID.replace(delta_minus=0.0)
    assert core.levy_density(p, -1.3) == 0.0
    assert core.canonical_density(p, -0.4) == 0.0


# ---------------------------------------------------------------------------
# truncation moments
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("gamma, alpha, lam, theta, t0, t1", TRUNC_MOMENTS)
def test_side_truncation_moments_match_reference(gamma, alpha, lam, theta,
                                                 t0, t1):
    p = _one_sided(gamma, alpha, lam, theta)
    m0, m1 = core.side_truncation_moments(p, Side.POSITIVE)
    assert (m0 is None) == (t0 is None)
    assert (m1 is None) == (t1 is None)
    if t0 is not None:
        assert abs(m0 - t0) / (1.0 + abs(t0)) < 1e-11
    if t1 is not None:
        assert abs(m1 - t1) / (1.0 + abs(t1)) < 1e-11


def test_side_truncation_moments_scale_linearly_in_delta():
    p = _one_sided(0.5, 0.5, 1.0, 1.0)
    m0, m1 = core.side_truncation_moments(p, Side.POSITIVE)
    q0, q1 = core.side_truncation_moments(p.replace(delta_plus=3.0),
                                          Side.POSITIVE)
    assert q0 == pytest.approx(3.0 * m0, rel=1e-13)
    assert q1 == pytest.approx(3.0 * m1, rel=1e-13)


def test_side_truncation_moments_inactive_side_is_zero_pair():
    p = VALID.replace(delta_minus=0.0)
    assert core.side_truncation_moments(p, Side.NEGATIVE) == (0.0, 0.0)


def test_power_moment_order_one_splits_into_truncation_moments():
    for gamma, alpha, lam, theta, n, want in POWER_MOMENTS:
        if n != 1:
            continue
        p = _one_sided(gamma, alpha, lam, theta)
        m0, m1 = core.side_truncation_moments(p, Side.POSITIVE)
        assert abs((m0 + m1) - want) / (1.0 + abs(want)) < 1e-11


def test_truncation_moments_are_signed_side_differences():
    p = GtgsParams(0.5, 0.3, 0.5, 0.6, 1.0, 1.2, 1.0, 0.5, 1.0, 0.7, 0.1)
    t0p, t1p = core.side_truncation_moments(p, Side.POSITIVE)
    t0m, t1m = core.side_truncation_moments(p, Side.NEGATIVE)
    mu0, mu1 = core.truncation_moments(p)
    assert mu0 == pytest.approx(t0p - t0m, abs=1e-15)
    assert mu1 == pytest.approx(t1p - t1m, abs=1e-15)


def test_truncation_moments_symmetric_parameters_vanish():
    assert core.truncation_moments(VALID) == (0.0, 0.0)


def test_truncation_moments_divergence_messages_name_the_side():
    with pytest.raises(DivergentMoment, match=r"mu0.*positive.*gamma"):
        core.truncation_moments(_one_sided(1.5, 0.5, 1.0, 1.0))
    with pytest.raises(DivergentMoment, match=r"mu1.*positive.*theta = 0"):
        core.truncation_moments(_one_sided(0.2, 0.5, 1.0, 0.0))


def test_side_truncation_moments_divergence_pattern():
    # gamma >= 1 kills t0; theta = 0 with alpha + gamma <= 1 kills t1
    m0, m1 = core.side_truncation_moments(_one_sided(1.2, 0.5, 1.0, 1.0),
                                          Side.POSITIVE)
    assert m0 is None and m1 is not None
    m0, m1 = core.side_truncation_moments(_one_sided(0.2, 0.5, 1.0, 0.0),
                                          Side.POSITIVE)
    assert m0 is not None and m1 is None
