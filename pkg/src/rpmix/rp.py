"""Recurrence-plot transforms over delay-embedded sensor windows.

A scalar window ``x`` of length ``N`` is embedded into 2-D phase states
``s_j = (x_j, x_{j+1})``, giving ``N - 1`` states.  Pairwise L2 distances of
those states form the (N-1) x (N-1) recurrence matrix.  The signed variants
break the matrix's symmetry by attaching a sign that records on which side of
a 3*pi/4 cone around the base vector ``v = (1, 1)`` a state-difference vector
falls: differences pointing into the third quadrant (downhill tendency) turn
negative.  The frequency-domain variant applies the identical construction to
the delay-embedded phase-angle sequence of the window's DFT.

All functions are pure: same input, bit-identical output.
"""

import math

import numpy as np

from .exceptions import NonFiniteInput, SpectrumTooShort, WindowTooShort
from .validation import as_trajectory, as_window

# Base vector v = (1, 1); its dot product with a difference (dx, dy) is dx + dy
# and its norm is sqrt(2).
_SQRT2 = math.sqrt(2.0)

# Cosine threshold for the sign rule.  Strict less-than: a difference vector at
# exactly 3*pi/4 from v keeps the +1 sign.
SIGN_COS_THRESHOLD = math.cos(0.75 * math.pi)

#: Relative magnitude below which a DFT bin's phase is numerically meaningless
#: and gets clamped to zero.
DEFAULT_MAGNITUDE_FLOOR = 1e-12


def delay_embed(window) -> np.ndarray:
    """Embed a scalar window into 2-D phase states.

    Parameters
    ----------
    window : array-like, shape (N,)
        Scalar samples, N >= 3, all finite.

    Returns
    -------
    np.ndarray, shape (N - 1, 2)
        Row ``j`` is ``(window[j], window[j + 1])``.
    """
    x = as_window(window)
    return np.column_stack((x[:-1], x[1:]))


def sign_of(diff) -> float:
    """Sign of a single state-difference vector.

    Returns -1.0 when the cosine between ``diff`` and the base vector (1, 1)
    is strictly below cos(3*pi/4), else +1.0.  The zero vector takes the
    "otherwise" branch (+1.0) by convention, keeping diagonal signs defined.
    """
    d = np.asarray(diff, dtype=np.float64).reshape(-1)
    if d.shape[0] != 2:
        raise NonFiniteInput(f"difference vector must have 2 components, got {d.shape[0]}")
    if not np.all(np.isfinite(d)):
        raise NonFiniteInput("difference vector contains NaN or Inf")
    dx = float(d[0])
    dy = float(d[1])
    norm = math.sqrt(dx * dx + dy * dy)
    if norm == 0.0:
        return 1.0
    cosine = (dx + dy) / (norm * _SQRT2)
    return -1.0 if cosine < SIGN_COS_THRESHOLD else 1.0


def _pairwise_differences(states: np.ndarray):
    dx = states[:, 0][:, None] - states[:, 0][None, :]
    dy = states[:, 1][:, None] - states[:, 1][None, :]
    return dx, dy


def unsigned_rp(states) -> np.ndarray:
    """Classic (unsigned) recurrence matrix of pairwise state distances.

    Entry (m, n) is ``||s_m - s_n||_2``; the result is symmetric with a zero
    main diagonal and non-negative everywhere.
    """
    s = as_trajectory(states)
    dx, dy = _pairwise_differences(s)
    return np.sqrt(dx * dx + dy * dy)


def modified_rp_temporal(states) -> np.ndarray:
    """Signed recurrence matrix: the sign rule applied to temporal states.

    Entry (m, n) is ``sign_of(s_m - s_n) * ||s_m - s_n||_2``.  Magnitudes
    match :func:`unsigned_rp` bit-for-bit; only signs differ.
    """
    s = as_trajectory(states)
    dx, dy = _pairwise_differences(s)
    norm = np.sqrt(dx * dx + dy * dy)
    with np.errstate(invalid="ignore"):
        cosine = (dx + dy) / (norm * _SQRT2)
    # NaN cosines (zero-norm differences) compare False and keep +norm.
    return np.where(cosine < SIGN_COS_THRESHOLD, -norm, norm)


def phase_spectrum(window, magnitude_floor: float = DEFAULT_MAGNITUDE_FLOOR) -> np.ndarray:
    """Principal-value phase angles of the window's DFT bins.

    Parameters
    ----------
    window : array-like, shape (N,)
        Scalar samples, N >= 3, all finite.
    magnitude_floor : float
        Bins whose magnitude is at most ``magnitude_floor * max_magnitude``
        get their phase forced to 0; near-zero bins carry only rounding noise.

    Returns
    -------
    np.ndarray, shape (N,)
        Angles in radians, each in (-pi, pi].
    """
    x = as_window(window)
    bins = np.fft.fft(x)
    magnitudes = np.abs(bins)
    phases = np.angle(bins)
    # arctan2's branch cut: a negative-real bin with signed-zero imaginary part
    # lands on -pi; the principal value interval is (-pi, pi].
    phases[phases == -np.pi] = np.pi
    phases[magnitudes <= magnitude_floor * magnitudes.max()] = 0.0
    return phases


def modified_rp_frequency(spectrum) -> np.ndarray:
    """Signed recurrence matrix over the delay-embedded phase sequence.

    The phase-angle sequence is embedded exactly as :func:`delay_embed` embeds
    samples, then run through the same signed kernel as
    :func:`modified_rp_temporal`; the two code paths are bit-identical by
    construction.
    """
    phases = np.asarray(spectrum, dtype=np.float64)
    if phases.ndim != 1 or phases.shape[0] < 3:
        raise SpectrumTooShort(
            f"phase spectrum needs at least 3 bins, got shape {phases.shape}"
        )
    try:
        states = delay_embed(phases)
    except WindowTooShort as exc:  # pragma: no cover - guarded above
        raise SpectrumTooShort(str(exc)) from exc
    return modified_rp_temporal(states)
