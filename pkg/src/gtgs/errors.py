"""Exception hierarchy and warning categories for the gtgs package.

Every error raised by the public API derives from :class:`GtgsError`, so
callers can catch one base class.  Input-validation failures carry the
violated clause in ``args[0]`` (and ``.clause``) so the CLI can print it.
"""

from __future__ import annotations

__all__ = [
    "GtgsError",
    "InvalidParams",
    "DomainError",
    "BranchCut",
    "NonConvergence",
    "PoleError",
    "DivergentMoment",
    "UnsupportedRegime",
    "QuadratureFailure",
    "IncompatibleParams",
    "NotEquivalent",
    "TabulationFailure",
    "GridTooNarrow",
    "SlowDecay",
]


class GtgsError(Exception):
    """Base class for all errors raised by the gtgs package."""


class InvalidParams(GtgsError):
    """Parameter set violates a validity clause.

    The message states the violated clause verbatim.
    """

    @property
    def clause(self) -> str:
        return str(self.args[0]) if self.args else ""


class DomainError(GtgsError):
    """Argument outside the mathematical domain of the requested function."""


class BranchCut(GtgsError):
    """Argument lies on a branch cut where the function is not single-valued."""


class NonConvergence(GtgsError):
    """No available series/representation converges for the given input."""


class PoleError(GtgsError):
    """The requested closed form sits on a pole of one of its factors."""


class DivergentMoment(GtgsError):
    """A requested moment or truncation moment diverges.

    The message names the moment and the side of the Levy measure responsible.
    """


class UnsupportedRegime(GtgsError):
    """Parameter regime with no implemented representation (boundary cases)."""


class QuadratureFailure(GtgsError):
    """Numerical integration failed to reach the requested tolerance."""


class IncompatibleParams(GtgsError):
    """Two parameter sets cannot be combined by the requested operation."""


class NotEquivalent(GtgsError):
    """Operation requires equivalent laws but the equivalence test fails."""


class TabulationFailure(GtgsError):
    """Inverse-CDF tabulation for the sampler failed its consistency checks."""


class GridTooNarrow(GtgsError):
    """FFT inversion grid leaves non-negligible probability mass outside."""


class SlowDecay(UserWarning):
    """Integrand/characteristic function decays too slowly for fast accuracy."""
