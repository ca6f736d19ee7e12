"""Exception types raised by qecfom."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class NotHermitian(ValueError):
    """A matrix expected to be Hermitian is not, within tolerance."""


class NotDensityMatrix(ValueError):
    """A matrix is not a unit-trace positive semidefinite operator."""


class DegenerateChannel(ValueError):
    """Every symbol is flagged uncorrectable, so no conditional channel exists."""


class DegenerateEnsemble(ValueError):
    """Strategy II discarded the whole ensemble (kept fraction is zero)."""


class OrthonormalityViolation(RuntimeError):
    """The syndrome vectors failed the Gram-matrix check."""


class ConsistencyError(RuntimeError):
    """Two independent evaluation routes disagree beyond tolerance."""
