"""Fault types raised when the model or a controller leaves its validity region."""


class SimFault(Exception):
    """Base class for all simulator faults."""


class SingularConfig(SimFault):
    """State or input left the region where the crane model is valid
    (stowed payload, near-horizontal swing, or slack cable)."""


class NonFinite(SimFault):
    """A state or input component became NaN or infinite."""


class CableSlack(SimFault):
    """Desired vertical acceleration at or below -g: the cable would slacken."""


class DegenerateLength(SimFault):
    """Desired payload length is not positive."""


class BetaSingular(SimFault):
    """Flatness inversion is singular: zero length, horizontal swing,
    or non-negative cable force."""


class GainReject(SimFault):
    """Feedback gains fail the closed-loop stability conditions."""


class IllConditioned(SimFault):
    """Polynomial boundary-value solve left residuals above tolerance."""


class InfeasibleSegment(SimFault):
    """Planned segment violates the cable-tension feasibility margin."""


class Unsolvable(SimFault):
    """Pole-placement coefficient map has no solution."""
