"""Exception types shared across the toolkit."""


class GaugedressError(Exception):
    """Base class for all toolkit errors."""


class SpecMismatch(GaugedressError):
    """Operands live over different groups or different lattices."""


class BranchCutError(GaugedressError):
    """Principal logarithm requested at (or too close to) a branch boundary."""


class NoSplitError(GaugedressError):
    """Operation requires a group carrying an H x J product split."""


class AlgebraProjectionError(GaugedressError):
    """A matrix that should lie in (or near) the Lie algebra does not."""


class ConsistencyError(GaugedressError):
    """Point frame carries differentials inconsistent with its group data."""


class VacuumZeroError(GaugedressError):
    """Scalar doublet vanishes somewhere; the dressing field is undefined there."""


class BandLimitError(GaugedressError):
    """Requested mode content does not fit on the lattice."""


class DegenerateFit(GaugedressError):
    """Convergence-order regression is underdetermined or ill-posed."""


class ParseError(GaugedressError):
    """Malformed field file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
