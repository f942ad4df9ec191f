"""Exception hierarchy for canopy spectra.

Every error also derives from the builtin a caller would naturally catch, so
``except ValueError`` keeps working around parameter problems.
"""


class CanopySpectraError(Exception):
    """Base class for all library errors."""


class GraphSizeError(CanopySpectraError, ValueError):
    """A graph or matrix would exceed a configured size limit."""


class ParameterError(CanopySpectraError, ValueError):
    """Invalid parameter combination."""


class RetryLimitError(CanopySpectraError, RuntimeError):
    """A rejection sampler exhausted its attempt budget."""


class UnsupportedLawError(CanopySpectraError, ValueError):
    """Operation is undefined for this disorder law (e.g. density of a point mass)."""


class DivergentMomentError(CanopySpectraError, ValueError):
    """Requested absolute moment is infinite."""


class SingularEnergyError(CanopySpectraError, ArithmeticError):
    """A resolvent recursion hit a vanishing pivot."""

    def __init__(self, vertex: int, energy: complex | None = None):
        self.vertex = vertex
        self.energy = energy
        where = f" for energy {energy}" if energy is not None else ""
        super().__init__(f"Singular pivot at vertex {vertex}{where}")


class MissingEigenvectorsError(CanopySpectraError, ValueError):
    """Eigenvectors were required but not kept."""


class InsufficientDataError(CanopySpectraError, ValueError):
    """Too few samples or points for the requested statistic."""


class ConvergenceError(CanopySpectraError, RuntimeError):
    """An iteration did not reach its tolerance within the cap."""


class ConfigError(CanopySpectraError, ValueError):
    """Invalid experiment configuration."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        if line is not None:
            message = f"{source or '<config>'}:{line}: {message}"
        super().__init__(message)


class MissingArtifactsError(CanopySpectraError, FileNotFoundError):
    """Expected output artifacts are absent."""
