"""Generalized tempered geometric stable distributions.

A numerical library for the family of infinitely divisible laws whose
Levy density tempers a (two-sided, possibly asymmetric) stable density
with the completely monotone kernel e^(-theta|x|) E_alpha(-lam|x|^alpha):

- ``specfun``: Mittag-Leffler functions, a stretched hypergeometric
  series, and the Lerch transcendent, over the argument ranges the other
  modules need;
- ``core``: parameter set, validation, Levy/tempering densities,
  truncation moments, JSON round-trip;
- ``charexp``: closed-form characteristic exponents for every supported
  regime, with regime classification and analyticity strip;
- ``cumulants``: closed-form cumulants, moment-finiteness certificates,
  and the polynomial recursion behind the tilted cumulant formula;
- ``spectral``: Bernstein/spectral representations of the tempering
  kernel and the polar-dual jump density;
- ``limits``: scaling closure, short/long-time stable and Gaussian
  limits, and absolute-continuity verdicts with Hellinger estimates;
- ``oracle``: independent quadrature ground truth (Levy-Khintchine
  integral, Levy moments, Gil-Pelaez CDF, FFT density inversion);
- ``montecarlo``: compound-Poisson simulation with small-jump Gaussian
  refinement and empirical-CF diagnostics;
- ``cli``: file-emitting command-line front end (``gtgs``).
"""
from . import (charexp, cli, core, cumulants, errors, limits, montecarlo,
               oracle, specfun, spectral)
from .charexp import (RegimeTag, analytic_strip, char_exponent,
                      char_function, ell, lemma_limit_check, regime_tags,
                      side_regime, theta_factor)
from .core import (GtgsParams, Side, canonical_density, from_json,
                   levy_density, side_truncation_moments,
                   tempering_function, to_json, truncation_moments,
                   validate)
from .cumulants import (MomentReport, cumulant, mean_theta0, moment_finite,
                        tgs_cumulant_recursion, variance_theta0)
from .errors import (BranchCut, DivergentMoment, DomainError, GridTooNarrow,
                     GtgsError, IncompatibleParams, InvalidParams,
                     NonConvergence, NotEquivalent, PoleError,
                     QuadratureFailure, SlowDecay, TabulationFailure,
                     UnsupportedRegime)
from .limits import (EquivalenceVerdict, LimitKind, LimitLaw,
                     density_process_log_jump, long_time_limit,
                     mutual_equivalence, mutual_hellinger_integral,
                     scaling_convergence_check, scaling_transform,
                     short_time_limit, stable_equivalence,
                     stable_hellinger_integral, sum_params)
from .montecarlo import (PathSample, SimConfig, empirical_cf,
                         jump_intensity, sample_increment, sample_path,
                         small_jump_variance, truncation_drift)
from .oracle import (GridSpec, QuadratureConfig, cumulant_quadrature,
                     fft_pdf, gil_pelaez_cdf, lk_quadrature)
from .specfun import (SeriesControl, lerch_phi, mittag_leffler, ml_neg_axis,
                      r2_1)
from .spectral import (SpectralSupport, bernstein_reconstruct,
                       rosinski_density, rosinski_support,
                       side_spectral_mass, spectral_density,
                       spectral_support, stable_ratio_density)

__version__ = "1.0.0"

__all__ = (errors.__all__ + core.__all__ + specfun.__all__
           + charexp.__all__ + cumulants.__all__ + spectral.__all__
           + limits.__all__ + oracle.__all__ + montecarlo.__all__
           + ["__version__"])
