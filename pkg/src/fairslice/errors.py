"""Exception hierarchy shared across the package."""


class FairsliceError(Exception):
    """Base class for all domain errors raised by this package."""


class ConstructionError(FairsliceError):
    """Invalid domain object (bad portion, measure, cake, ...)."""


class MassNotOne(ConstructionError):
    """Total mass of a measure is not exactly 1."""


class NegativeDensity(ConstructionError):
    """A density polynomial takes a negative value on its piece."""


class OverlappingPieces(ConstructionError):
    """Measure pieces overlap on a set of positive length."""


class MultipleMedians(FairsliceError):
    """A procedure required a unique median but the median set is an interval."""

    def __init__(self, player: int, lo=None, hi=None):
        self.player = player
        self.lo = lo
        self.hi = hi
        super().__init__(f"player {player} has multiple medians")


class DegenerateSurplus(FairsliceError):
    """Surplus procedure denominator vanished with distinct medians."""


class Infeasible(FairsliceError):
    """No cut vector equalizes the common value for the given ordering."""


class NoFeasibleOrdering(FairsliceError):
    """Every left-to-right ordering is infeasible for the equitability search."""


class UnsupportedDensityDegree(FairsliceError):
    """Procedure restricted to lower-degree densities than supplied."""


class ExactCutUnavailable(FairsliceError):
    """A required cut point is irrational beyond quadratic surds."""


class AtomsPresent(FairsliceError):
    """Operation defined only for atomless measures."""


class ProfileFormatError(FairsliceError):
    """Malformed profile or allocation file."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{message}" + (f" (at {where})" if where else ""))
