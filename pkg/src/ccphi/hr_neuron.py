"""Hindmarsh-Rose single-neuron simulation and spike binarization.

Three coupled first-order equations for membrane voltage S, recovery P
and slow adaptation Q:

    dS/dt = P + 3 S^2 - S^3 - Q + I
    dP/dt = 1 - 5 S^2 - P
    dQ/dt = -r (Q - 4 (S + 8/5))

Integration is fixed-step fourth-order Runge-Kutta. The voltage trace is
binarized into non-overlapping windows: a window emits 1 when its peak
voltage crosses the spike threshold. The resulting 0/1 train feeds the
complexity measures in :mod:`ccphi.complexity`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

DEFAULT_DT = 0.01
DEFAULT_DURATION = 20000.0
DEFAULT_TRANSIENT = 2000.0
DEFAULT_WINDOW = 2.0
DEFAULT_THRESHOLD = -0.1


@dataclass(frozen=True)
class HRParams:
    """External current and internal-state rate."""

    current: float
    rate: float = 0.0021

    def __post_init__(self):
        if not self.rate > 0:
            raise ValueError("rate must be positive")


@dataclass(frozen=True)
class HRState:
    s: float = 0.0
    p: float = 0.0
    q: float = 0.0


class IntegrationDivergedError(RuntimeError):
    """Raised when the state leaves the finite range mid-integration."""

    def __init__(self, step: int):
        super().__init__(f"integration diverged at step {step}")
        self.step = step


def hr_derivatives(state: HRState, params: HRParams) -> tuple[float, float, float]:
    """Right-hand side of the model at one state."""
    s, p, q = state.s, state.p, state.q
    ds = p + 3.0 * s * s - s * s * s - q + params.current
    dp = 1.0 - 5.0 * s * s - p
    dq = -params.rate * (q - 4.0 * (s + 8.0 / 5.0))
    return ds, dp, dq


@njit(cache=True)
def _rk4_trace(current, rate, dt, n_steps, keep_from, s, p, q):
    out = np.empty(n_steps - keep_from)
    for t in range(n_steps):
        if t >= keep_from:
            out[t - keep_from] = s
        # stage derivatives written out so the whole step stays in registers
        k1s = p + 3.0 * s * s - s * s * s - q + current
        k1p = 1.0 - 5.0 * s * s - p
        k1q = -rate * (q - 4.0 * (s + 1.6))

        s2 = s + 0.5 * dt * k1s
        p2 = p + 0.5 * dt * k1p
        q2 = q + 0.5 * dt * k1q
        k2s = p2 + 3.0 * s2 * s2 - s2 * s2 * s2 - q2 + current
        k2p = 1.0 - 5.0 * s2 * s2 - p2
        k2q = -rate * (q2 - 4.0 * (s2 + 1.6))

        s3 = s + 0.5 * dt * k2s
        p3 = p + 0.5 * dt * k2p
        q3 = q + 0.5 * dt * k2q
        k3s = p3 + 3.0 * s3 * s3 - s3 * s3 * s3 - q3 + current
        k3p = 1.0 - 5.0 * s3 * s3 - p3
        k3q = -rate * (q3 - 4.0 * (s3 + 1.6))

        s4 = s + dt * k3s
        p4 = p + dt * k3p
        q4 = q + dt * k3q
        k4s = p4 + 3.0 * s4 * s4 - s4 * s4 * s4 - q4 + current
        k4p = 1.0 - 5.0 * s4 * s4 - p4
        k4q = -rate * (q4 - 4.0 * (s4 + 1.6))

        s = s + (dt / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s)
        p = p + (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        q = q + (dt / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q)
        if not (np.isfinite(s) and np.isfinite(p) and np.isfinite(q)):
            return out, t
    return out, -1


def integrate(
    params: HRParams,
    dt: float = DEFAULT_DT,
    n_steps: int | None = None,
    transient_steps: int | None = None,
    init: HRState = HRState(),
) -> np.ndarray:
    """Voltage samples S(t), the transient prefix discarded.

    Defaults integrate 20000 time units at dt = 0.01 and drop the first
    2000 units. Raises :class:`IntegrationDivergedError` if the state
    becomes non-finite.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if n_steps is None:
        n_steps = int(round(DEFAULT_DURATION / dt))
    if transient_steps is None:
        transient_steps = int(round(DEFAULT_TRANSIENT / dt))
    if not n_steps > transient_steps >= 0:
        raise ValueError("need n_steps > transient_steps >= 0")
    trace, bad = _rk4_trace(
        float(params.current),
        float(params.rate),
        float(dt),
        int(n_steps),
        int(transient_steps),
        float(init.s),
        float(init.p),
        float(init.q),
    )
    if bad >= 0:
        raise IntegrationDivergedError(bad)
    return trace


def binarize_spikes(
    trace: np.ndarray,
    dt: float,
    window: float = DEFAULT_WINDOW,
    threshold: float = DEFAULT_THRESHOLD,
) -> list[int]:
    """Collapse the trace into one spike bit per time window.

    Windows are consecutive, non-overlapping, ``window`` time units long
    (a trailing partial window is dropped); a window is 1 when its
    maximum voltage exceeds ``threshold``.
    """
    trace = np.asarray(trace, dtype=float)
    if trace.size == 0:
        raise ValueError("trace must be non-empty")
    per = int(round(window / dt))
    if per < 1:
        raise ValueError("window shorter than one sample")
    n_win = trace.size // per
    if n_win == 0:
        raise ValueError("trace shorter than one window")
    peaks = trace[: n_win * per].reshape(n_win, per).max(axis=1)
    return [int(v) for v in (peaks > threshold)]
