"""Input validation helpers shared by the numeric transforms."""

import numpy as np

from .exceptions import (
    NonFiniteEntry,
    NonFiniteSample,
    TrajectoryTooShort,
    WindowTooShort,
)

MIN_WINDOW_LENGTH = 3


def as_window(samples) -> np.ndarray:
    """Coerce `samples` to a 1-D float64 window, enforcing length >= 3 and finiteness."""
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim != 1:
        raise WindowTooShort(f"window must be 1-D, got shape {x.shape}")
    if x.shape[0] < MIN_WINDOW_LENGTH:
        raise WindowTooShort(
            f"window has {x.shape[0]} samples, need at least {MIN_WINDOW_LENGTH}"
        )
    if not np.all(np.isfinite(x)):
        bad = int(np.flatnonzero(~np.isfinite(x))[0])
        raise NonFiniteSample(f"non-finite sample at index {bad}")
    return x


def as_trajectory(states) -> np.ndarray:
    """Coerce `states` to an (m, 2) float64 trajectory with m >= 2 finite states."""
    s = np.asarray(states, dtype=np.float64)
    if s.ndim != 2 or s.shape[1] != 2:
        raise TrajectoryTooShort(f"trajectory must have shape (m, 2), got {s.shape}")
    if s.shape[0] < 2:
        raise TrajectoryTooShort(f"trajectory has {s.shape[0]} states, need at least 2")
    if not np.all(np.isfinite(s)):
        raise NonFiniteSample("trajectory contains non-finite states")
    return s


def as_finite_matrix(entries) -> np.ndarray:
    """Coerce `entries` to a 2-D float64 matrix, rejecting NaN/Inf."""
    m = np.asarray(entries, dtype=np.float64)
    if m.ndim != 2:
        raise NonFiniteEntry(f"matrix must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteEntry("matrix contains non-finite entries")
    return m
