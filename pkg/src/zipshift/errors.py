"""Exception hierarchy shared by all zipshift modules."""

from __future__ import annotations


class ZipShiftError(ValueError):
    """Base class for every error raised by this package."""


# alphabet
class UnknownSymbol(ZipShiftError):
    pass


class NotTotal(ZipShiftError):
    pass


class NotSurjective(ZipShiftError):
    pass


class DuplicateSymbol(ZipShiftError):
    pass


# point / space
class AlphabetViolation(ZipShiftError):
    pass


class EmptyPeriod(ZipShiftError):
    pass


class AlphabetMismatch(ZipShiftError):
    pass


class InvalidChoice(ZipShiftError):
    pass


class EqualPoints(ZipShiftError):
    pass


class CapExceeded(ZipShiftError):
    pass


# shadowing
class NotPseudoOrbit(ZipShiftError):
    def __init__(self, index, gap, delta):
        self.index = index
        self.gap = gap
        self.delta = delta
        super().__init__(f"pseudo-orbit breaks at step {index}: gap {gap} >= delta {delta}")


class DeltaTooLarge(ZipShiftError):
    pass


class InconsistentSplice(ZipShiftError):
    pass


# coding
class InvalidMap(ZipShiftError):
    pass


class NotFullBranch(ZipShiftError):
    pass


class ImageMismatch(ZipShiftError):
    pass


class NotACover(ZipShiftError):
    pass


class DiameterTooLarge(ZipShiftError):
    pass


class BoundaryHit(ZipShiftError):
    def __init__(self, value, step=None):
        self.value = value
        self.step = step
        where = "" if step is None else f" at step {step}"
        super().__init__(f"orbit point {value} lies on a partition boundary{where}")


class InvalidPastBranch(ZipShiftError):
    pass


class EmptyIntersection(ZipShiftError):
    pass
