"""Nonlinear crane dynamics, fixed-step RK4 integration, output map, sensors."""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .faults import NonFinite, SingularConfig
from .params import CraneState, ForceInput, NoiseConfig, PhysParams, SensorReading


class OutputPoint(NamedTuple):
    """Payload position in output space (horizontal, vertical), m."""

    y1: float
    y2: float


# Command function queried by the integrator at stage times:
# (t, state) -> (f1, f2 applied to the plant, f2_ddot for the integrated channel)
CommandFn = Callable[[float, CraneState], tuple[float, float, float]]


def _check_config(theta: float, l: float, params: PhysParams) -> None:
    if l < params.min_length:
        raise SingularConfig(f"payload length {l:.4f} m below minimum {params.min_length} m")
    if abs(theta) >= params.max_swing:
        raise SingularConfig(f"swing angle {theta:.4f} rad beyond guard {params.max_swing:.4f} rad")


def mass_matrix(state: CraneState, params: PhysParams) -> np.ndarray:
    """Inertia matrix of the (x, theta, l) coordinates."""
    M, m = params.cart_mass, params.payload_mass
    s, c = math.sin(state.theta), math.cos(state.theta)
    l = state.l
    return np.array([
        [M + m,     m * l * c, m * s],
        [m * l * c, m * l * l, 0.0],
        [m * s,     0.0,       m],
    ])


def generalized_force(state: CraneState, force: ForceInput, params: PhysParams) -> np.ndarray:
    """Right-hand side of the mass-matrix form of the dynamics."""
    m, g = params.payload_mass, params.gravity
    s, c = math.sin(state.theta), math.cos(state.theta)
    l, ld, thd = state.l, state.l_dot, state.theta_dot
    return np.array([
        m * l * thd * thd * s - 2.0 * m * ld * thd * c + force.f1,
        -2.0 * m * l * ld * thd - m * g * l * s,
        m * l * thd * thd + m * g * c + force.f2,
    ])


def dynamics_rhs(state: CraneState, force: ForceInput,
                 params: PhysParams) -> tuple[float, float, float, float, float, float]:
    """Time derivative of the six mechanical states under the applied forces.

    Uses the closed-form inverse of the mass matrix (taut cable, no rolling
    friction). Raises SingularConfig outside the validity guards; never
    mutates the state.
    """
    _check_config(state.theta, state.l, params)
    M, m, g = params.cart_mass, params.payload_mass, params.gravity
    s, c = math.sin(state.theta), math.cos(state.theta)
    l, ld, thd = state.l, state.l_dot, state.theta_dot
    f1, f2 = force.f1, force.f2

    x_dd = (f1 - s * f2) / M
    th_dd = (-2.0 * ld * thd - g * s) / l + (-c * f1 + s * c * f2) / (M * l)
    l_dd = l * thd * thd + g * c - s * f1 / M + (s * s / M + 1.0 / m) * f2
    return (state.x_dot, x_dd, thd, th_dd, ld, l_dd)


def _apply_limits(f1: float, f2: float, params: PhysParams) -> tuple[float, float]:
    lim = params.force_limit
    if lim is not None:
        f1 = max(-lim, min(lim, f1))
        f2 = max(-lim, min(params.max_cable_force, f2))
    if not (math.isfinite(f1) and math.isfinite(f2)):
        raise NonFinite(f"non-finite force command ({f1}, {f2})")
    if f2 > params.max_cable_force:
        raise SingularConfig(f"cable force {f2:.4f} N above guard {params.max_cable_force} N")
    return f1, f2


def _stage(t: float, y: tuple, command: CommandFn, params: PhysParams) -> tuple:
    st = CraneState(y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7], t)
    f1, f2, f2_dd = command(t, st)
    f1, f2 = _apply_limits(f1, f2, params)
    d = dynamics_rhs(st, ForceInput(f1, f2), params)
    return (d[0], d[1], d[2], d[3], d[4], d[5], y[7], f2_dd)


def step(state: CraneState, command: CommandFn, params: PhysParams, dt: float) -> CraneState:
    """Advance one classical RK4 step of length dt.

    `command` may be queried at any stage time within [t, t+dt]; the cable
    channel (f2, f2_dot) integrates the supplied f2_ddot alongside the
    mechanical states. Deterministic: identical inputs give bit-identical
    results on a given platform.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    t0 = state.t
    y0 = state.as_tuple()
    h2 = 0.5 * dt
    k1 = _stage(t0, y0, command, params)
    k2 = _stage(t0 + h2, tuple(a + h2 * b for a, b in zip(y0, k1)), command, params)
    k3 = _stage(t0 + h2, tuple(a + h2 * b for a, b in zip(y0, k2)), command, params)
    k4 = _stage(t0 + dt, tuple(a + dt * b for a, b in zip(y0, k3)), command, params)
    w = dt / 6.0
    y1 = tuple(a + w * (b1 + 2.0 * (b2 + b3) + b4)
               for a, b1, b2, b3, b4 in zip(y0, k1, k2, k3, k4))
    for v in y1:
        if not math.isfinite(v):
            raise NonFinite("state left the finite range")
    return CraneState(y1[0], y1[1], y1[2], y1[3], y1[4], y1[5], y1[6], y1[7], t0 + dt)


def output_map(state: CraneState) -> OutputPoint:
    """Payload position from the crane configuration: (x + l sin, -l cos)."""
    return OutputPoint(state.x + state.l * math.sin(state.theta),
                       -state.l * math.cos(state.theta))


def cart_from_outputs(y1: float, l: float, theta: float) -> float:
    """Inverse kinematics for the cart position: x = y1 - l sin(theta)."""
    return y1 - l * math.sin(theta)


def swing_from_markers(x: float, y1: float, y2: float) -> float:
    """Swing angle from marker positions (payload hangs below, y2 < 0)."""
    return math.atan((y1 - x) / (-y2))


def length_from_markers(y2: float, theta: float) -> float:
    """Payload length from the vertical marker position and swing angle."""
    return -y2 / math.cos(theta)


def sense(state: CraneState, noise: NoiseConfig | None = None,
          rng: np.random.Generator | int | None = None) -> SensorReading:
    """Emulated fiducial-marker measurement of (x, l, theta, y1, y2).

    Noise off (default) reproduces ground truth exactly. Noise on adds
    zero-mean Gaussian noise per channel; pass a Generator or seed for
    reproducible draws.
    """
    out = output_map(state)
    if noise is None or not noise.enabled:
        return SensorReading(state.x, state.l, state.theta, out.y1, out.y2, state.t)
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    n = gen.normal(0.0, 1.0, 5)
    return SensorReading(
        state.x + noise.sigma_x * n[0],
        state.l + noise.sigma_l * n[1],
        state.theta + noise.sigma_theta * n[2],
        out.y1 + noise.sigma_y1 * n[3],
        out.y2 + noise.sigma_y2 * n[4],
        state.t,
    )
