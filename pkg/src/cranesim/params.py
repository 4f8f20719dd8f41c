"""Physical parameters and value types for the variable-length crane."""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysParams:
    """Crane constants plus validity guards.

    Masses default to the lab prototype (cart 0.815 kg, payload 0.225 kg).
    The guards bound the region where the taut-cable model and its flatness
    inversion hold; crossing one raises a fault rather than clamping.
    """

    cart_mass: float = 0.815        # kg
    payload_mass: float = 0.225     # kg
    gravity: float = 9.81           # m/s^2
    min_length: float = 0.05        # smallest un-stowed payload length, m
    max_swing: float = math.radians(80.0)   # rad
    max_cable_force: float = -0.01  # cable force must stay below this, N
    force_limit: float | None = None  # optional |force| saturation, N (default: unlimited)

    def __post_init__(self) -> None:
        if not (self.cart_mass > 0 and self.payload_mass > 0 and self.gravity > 0):
            raise ValueError("masses and gravity must be positive")
        if not self.min_length > 0:
            raise ValueError("min_length must be positive")
        if not 0 < self.max_swing < math.pi / 2:
            raise ValueError("max_swing must lie in (0, pi/2)")
        if not self.max_cable_force < 0:
            raise ValueError("max_cable_force must be negative (taut cable)")
        if self.force_limit is not None and not self.force_limit > 0:
            raise ValueError("force_limit must be positive when set")

    @property
    def weight(self) -> float:
        """Payload weight m*g: magnitude of the equilibrium cable force."""
        return self.payload_mass * self.gravity


@dataclass(frozen=True, slots=True)
class CraneState:
    """Full simulator state.

    Besides the six mechanical coordinates this carries the cable-force
    channel (f2, f2_dot): the doubly-integrated payload-force state that the
    control law owns. Co-integrating it with the plant makes the law's
    double integral an ODE solution instead of a quadrature afterthought.
    """

    x: float            # cart position, m
    x_dot: float        # m/s
    theta: float        # swing angle from vertical, rad
    theta_dot: float    # rad/s
    l: float            # payload (cable) length, m
    l_dot: float        # m/s
    f2: float           # integrated cable-force channel, N
    f2_dot: float       # N/s
    t: float = 0.0      # simulation time, s

    @classmethod
    def at_rest(cls, x: float, l: float, params: PhysParams, t: float = 0.0) -> "CraneState":
        """Equilibrium state hanging at (x, l) with the cable channel at -m*g."""
        return cls(x, 0.0, 0.0, 0.0, l, 0.0, -params.weight, 0.0, t)

    def as_tuple(self) -> tuple[float, float, float, float, float, float, float, float]:
        return (self.x, self.x_dot, self.theta, self.theta_dot,
                self.l, self.l_dot, self.f2, self.f2_dot)


@dataclass(frozen=True, slots=True)
class ForceInput:
    """Forces applied to the plant: cart force and payload (cable) force, N.

    f2 must stay negative for taut-cable operation.
    """

    f1: float
    f2: float


@dataclass(frozen=True, slots=True)
class NoiseConfig:
    """Measurement noise levels (standard deviations at rest)."""

    enabled: bool = False
    sigma_x: float = 0.0007       # m
    sigma_l: float = 0.0059       # m
    sigma_theta: float = 0.0026   # rad
    sigma_y1: float = 0.0007      # m
    sigma_y2: float = 0.0059      # m


@dataclass(frozen=True, slots=True)
class SensorReading:
    """Emulated fiducial-marker measurement."""

    x_meas: float
    l_meas: float
    theta_meas: float
    y1_meas: float
    y2_meas: float
    timestamp: float
