"""Exception and warning types shared across the package."""


class NqschemError(Exception):
    """Base class for all package-specific errors."""


class ParseError(NqschemError):
    """Malformed FCIDUMP input; carries the offending line number when known."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EncodingError(NqschemError):
    """Jordan-Wigner output failed a consistency check (non-Hermitian input)."""


class DimensionMismatch(NqschemError):
    """Operands with incompatible qubit or parameter dimensions."""


class ZeroAmplitudeReference(NqschemError):
    """A ratio or derivative was requested at a configuration with zero amplitude."""


class NumericalError(NqschemError):
    """A non-finite value surfaced where a finite one is required."""


class DegenerateConfiguration(NqschemError):
    """No particle-conserving move exists (all orbitals occupied or all empty)."""


class EmptySampleSet(NqschemError):
    """An estimator was asked to average over zero samples."""


class SingularSystem(NqschemError):
    """The regularized SR system could not be solved by any available path."""


class SectorLeakage(NqschemError):
    """A Hamiltonian connected a configuration out of its particle-number sector."""


class SectorTooLarge(NqschemError):
    """The requested sector exceeds what exact enumeration can handle."""


class ConvergenceFailure(NqschemError):
    """The iterative extremal-eigenvalue solver did not converge."""


class NormalizationError(NqschemError):
    """A state vector with zero norm cannot be normalized."""


class ConfigError(NqschemError):
    """Invalid or inconsistent run configuration."""


class NonErgodicWarning(RuntimeWarning):
    """Emitted when a chain's overall acceptance rate falls below 1%."""
