"""Turn per-channel recurrence matrices into 8-bit RGB images, blend, write PNG."""

from dataclasses import dataclass

import numpy as np
from PIL import Image

from .exceptions import DimensionMismatch, ImageIoError
from .validation import as_finite_matrix


def _round_half_away_from_zero(values: np.ndarray) -> np.ndarray:
    # np.round is half-to-even; pixel production needs half-away-from-zero so
    # golden-image tests stay byte-stable.
    return np.sign(values) * np.floor(np.abs(values) + 0.5)


def normalize_channel(matrix) -> np.ndarray:
    """Min-max map a finite matrix onto [0, 255] uint8.

    The matrix minimum maps to 0 and the maximum to 255; an all-equal matrix
    degenerates to all zeros.  Rounding is half-away-from-zero.
    """
    m = as_finite_matrix(matrix)
    lo = m.min()
    hi = m.max()
    if hi == lo:
        return np.zeros(m.shape, dtype=np.uint8)
    scaled = 255.0 * (m - lo) / (hi - lo)
    return _round_half_away_from_zero(scaled).astype(np.uint8)


def stack_rgb(x, y, z) -> np.ndarray:
    """Stack three same-shape square matrices into an (s, s, 3) RGB image.

    Channel order is R <- x, G <- y, B <- z.
    """
    mats = [np.asarray(m, dtype=np.float64) for m in (x, y, z)]
    shape = mats[0].shape
    if any(m.shape != shape for m in mats):
        raise DimensionMismatch(
            f"channel shapes differ: {[m.shape for m in mats]}"
        )
    if len(shape) != 2 or shape[0] != shape[1]:
        raise DimensionMismatch(f"channels must be square 2-D matrices, got {shape}")
    return np.stack([normalize_channel(m) for m in mats], axis=-1)


@dataclass(frozen=True)
class MixupParams:
    """Blending parameters: Beta(alpha, beta) sampling or a fixed lambda."""

    alpha: float = 1.0
    beta: float = 1.0
    mode: str = "sampled"
    fixed_lambda: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(f"alpha and beta must be positive, got {self.alpha}, {self.beta}")
        if self.mode not in ("sampled", "fixed"):
            raise ValueError(f"mode must be 'sampled' or 'fixed', got {self.mode!r}")
        if not 0.0 <= self.fixed_lambda <= 1.0:
            raise ValueError(f"fixed_lambda must be in [0, 1], got {self.fixed_lambda}")


def draw_lambda(params: MixupParams) -> float:
    """Draw the blend weight for `params` (deterministic given the seed)."""
    if params.mode == "fixed":
        return float(params.fixed_lambda)
    rng = np.random.default_rng(params.seed)
    return float(rng.beta(params.alpha, params.beta))


def mixup_blend(a, b, params: MixupParams):
    """Blend two RGB images: ``lambda * a + (1 - lambda) * b``.

    Returns ``(image, lambda_used)`` so callers can record the drawn weight.
    Output values are rounded half-away-from-zero and clamped to [0, 255].
    """
    ia = np.asarray(a)
    ib = np.asarray(b)
    if ia.shape != ib.shape:
        raise DimensionMismatch(f"image shapes differ: {ia.shape} vs {ib.shape}")
    lam = draw_lambda(params)
    blended = lam * ia.astype(np.float64) + (1.0 - lam) * ib.astype(np.float64)
    out = np.clip(_round_half_away_from_zero(blended), 0.0, 255.0).astype(np.uint8)
    return out, lam


def write_png(img, path) -> None:
    """Write an (h, w, 3) uint8 image as an 8-bit RGB PNG (no alpha, no interlacing)."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.dtype != np.uint8:
        raise ImageIoError(
            f"expected (h, w, 3) uint8 image, got shape {arr.shape} dtype {arr.dtype}"
        )
    try:
        Image.fromarray(arr, mode="RGB").save(str(path), format="PNG")
    except OSError as exc:
        raise ImageIoError(f"cannot write PNG {path}: {exc}") from exc


def read_png(path) -> np.ndarray:
    """Read a PNG back into an (h, w, 3) uint8 array."""
    try:
        with Image.open(str(path)) as im:
            return np.asarray(im.convert("RGB"))
    except OSError as exc:
        raise ImageIoError(f"cannot read PNG {path}: {exc}") from exc
