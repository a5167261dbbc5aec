"""Classical motion in the same piecewise-quadratic well.

A particle of unit mass crosses x=0 with speed v, swings out to the
turning points A_+ = v/omega_+ and A_- = v/omega_- and spends half an
angular period on each side, so the full period is pi/omega_- + pi/omega_+.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class ClassicalState:
    omega_plus: float
    omega_minus: float
    amplitude_right: float

    def __post_init__(self):
        if self.omega_plus <= 0.0 or self.omega_minus <= 0.0:
            raise DomainError("frequencies must be positive")
        if self.amplitude_right <= 0.0:
            raise DomainError("amplitude_right must be positive")

    @property
    def amplitude_left(self):
        return (self.omega_plus / self.omega_minus) * self.amplitude_right

    @property
    def energy(self):
        return 0.5 * (self.omega_plus * self.amplitude_right) ** 2

    @property
    def period(self):
        return math.pi / self.omega_minus + math.pi / self.omega_plus


def from_config(config, amplitude_right):
    return ClassicalState(omega_plus=config.omega_plus,
                          omega_minus=config.omega_minus,
                          amplitude_right=amplitude_right)


def match_energy(config, energy):
    """State with the given total energy: A_+ = sqrt(2E)/omega_+."""
    if energy <= 0.0:
        raise DomainError("energy must be positive")
    return from_config(config, math.sqrt(2.0 * energy) / config.omega_plus)


def trajectory(state, t):
    """x(t) for the motion starting at x=0 moving right; vectorized over t.

    A right half-swing x = A_+ sin(omega_+ t) occupies [0, pi/omega_+],
    followed by the left half-swing, repeating with the full period.
    """
    scalar = np.ndim(t) == 0
    tau = np.mod(np.asarray(t, dtype=float), state.period)
    t_switch = math.pi / state.omega_plus
    right = tau <= t_switch
    out = np.empty(tau.shape)
    out[right] = state.amplitude_right * np.sin(state.omega_plus * tau[right])
    out[~right] = -state.amplitude_left * np.sin(
        state.omega_minus * (tau[~right] - t_switch))
    return float(out) if scalar else out


def classical_density(state, x):
    """Time-spent position density 2 / (T omega sqrt(A^2 - x^2)).

    Defined on the open interval (-A_-, A_+); the inverse-square-root
    divergence makes the turning points themselves out of domain.
    """
    scalar = np.ndim(x) == 0
    xs = np.asarray(x, dtype=float)
    if np.any(xs >= state.amplitude_right) or np.any(xs <= -state.amplitude_left):
        raise DomainError(
            "x must lie strictly between the turning points "
            f"(-{state.amplitude_left}, {state.amplitude_right})")
    out = np.empty(xs.shape)
    right = xs >= 0.0
    out[right] = 2.0 / (state.period * state.omega_plus
                        * np.sqrt(state.amplitude_right ** 2 - xs[right] ** 2))
    out[~right] = 2.0 / (state.period * state.omega_minus
                         * np.sqrt(state.amplitude_left ** 2 - xs[~right] ** 2))
    return float(out) if scalar else out
