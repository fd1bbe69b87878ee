"""Exception types raised across the package."""

from __future__ import annotations


class GarchMomentsError(Exception):
    """Base class for all garchmoments errors."""


class ZeroVarianceError(GarchMomentsError):
    """A series has zero sample variance, so standardized moments are undefined."""


class CsvFormatError(GarchMomentsError):
    """Malformed CSV input."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DivergentMomentError(GarchMomentsError):
    """A requested unconditional moment does not exist for these parameters.

    ``order_half`` is the smallest m such that the order-m persistence
    moment is >= 1, i.e. E[x^(2m)] diverges.
    """

    def __init__(self, order_half: int, alpha1: float, beta1: float):
        self.order_half = order_half
        super().__init__(
            f"moment of order {2 * order_half} diverges at "
            f"alpha1={alpha1!r}, beta1={beta1!r}"
        )


class NoRootError(GarchMomentsError):
    """No admissible beta1 >= 0 solves the divergence-line equation."""


class PoleError(GarchMomentsError):
    """A rational moment expression was evaluated at a zero of its denominator."""


class InfeasibleEtaError(GarchMomentsError):
    """(eta4, eta6) violate the feasibility conditions of the two-gaussian mixture."""

    def __init__(self, condition: str, lhs: float, rhs: float):
        self.condition = condition
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"infeasible mixture moments: need {condition} ({lhs!r} vs {rhs!r})")


class BoundaryEtaError(InfeasibleEtaError):
    """eta6 sits on the degenerate boundary eta6 = (15/9) eta4**2.

    The implied narrow component has zero variance; pass
    ``allow_boundary=True`` to construct it anyway.
    """


class InfeasibleMomentsError(GarchMomentsError):
    """Empirical moments cannot be matched by any admissible parameter point."""


class NegativeBetaError(GarchMomentsError):
    """The fitted trajectory leaves the beta1 >= 0 quadrant."""


class NegativeAlpha0Error(GarchMomentsError):
    """The candidate root implies alpha1 + beta1 >= 1, hence alpha0 <= 0."""


class EmptyTrajectoryError(GarchMomentsError):
    """No alpha0 on the trajectory keeps beta1 >= 0 with a finite sixth moment."""


class TrajectoryRangeError(GarchMomentsError):
    """The target sixth moment lies outside the range attainable on the trajectory."""

    def __init__(self, target: float, lo: float, hi: float):
        self.target = target
        self.lo = lo
        self.hi = hi
        super().__init__(
            f"gamma6 target {target!r} outside attainable range [{lo!r}, {hi!r}]"
        )


class OutsideRegionError(GarchMomentsError):
    """(gamma4, gamma6) lie outside the attainable region for this distribution."""


class SimulationOverflowError(GarchMomentsError):
    """The conditional variance exceeded the configured cap during simulation."""

    def __init__(self, step: int, cap: float):
        self.step = step
        self.cap = cap
        super().__init__(f"conditional variance exceeded cap {cap!r} at step {step}")
