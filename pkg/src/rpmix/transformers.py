"""Scikit-learn style transformers wrapping the recurrence-plot core.

These are stateless (fit is validation only) and compose with
sklearn pipelines; `get_params` / `set_params` / `clone` behave as usual.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array

from . import rp
from .image import MixupParams, mixup_blend, stack_rgb


def _check_windows(X) -> np.ndarray:
    X = check_array(X, dtype=np.float64, ensure_min_features=3)
    return X


class TemporalRecurrencePlot(BaseEstimator, TransformerMixin):
    """Per-window temporal recurrence matrices from scalar time series.

    Parameters
    ----------
    signed : bool, default True
        Apply the cone sign rule (signed variant); False gives the classic
        unsigned distance matrix.

    transform maps (n_windows, length) -> (n_windows, length - 1, length - 1).
    """

    def __init__(self, signed: bool = True):
        self.signed = signed

    def fit(self, X, y=None):
        X = _check_windows(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        X = _check_windows(X)
        build = rp.modified_rp_temporal if self.signed else rp.unsigned_rp
        return np.stack([build(rp.delay_embed(row)) for row in X])


class FrequencyRecurrencePlot(BaseEstimator, TransformerMixin):
    """Signed recurrence matrices over each window's DFT phase sequence.

    Parameters
    ----------
    magnitude_floor : float, default 1e-12
        Relative DFT magnitude below which a bin's phase is clamped to 0.

    transform maps (n_windows, length) -> (n_windows, length - 1, length - 1).
    """

    def __init__(self, magnitude_floor: float = rp.DEFAULT_MAGNITUDE_FLOOR):
        self.magnitude_floor = magnitude_floor

    def fit(self, X, y=None):
        X = _check_windows(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        X = _check_windows(X)
        return np.stack(
            [
                rp.modified_rp_frequency(rp.phase_spectrum(row, self.magnitude_floor))
                for row in X
            ]
        )


class RecurrenceImageEncoder(BaseEstimator, TransformerMixin):
    """Encode tri-channel windows as 8-bit RGB recurrence images.

    Parameters
    ----------
    encoding : {'trp', 'mtrp', 'frp', 'mix'}, default 'mix'
        Which image to emit; 'mix' blends the temporal and frequency images
        of each window with a mixup weight.
    alpha, beta : float
        Beta-distribution shape parameters for sampled mixup weights.
    mixup_mode : {'sampled', 'fixed'}
        'fixed' uses `fixed_lambda` for every window.
    fixed_lambda : float
    seed : int
        Seeds the per-window weight draws in 'sampled' mode.
    magnitude_floor : float
        Passed through to the phase spectrum.

    transform maps (n_episodes, 3, length) -> (n_episodes, length - 1,
    length - 1, 3) uint8, channels R/G/B from input channels 0/1/2.
    """

    ENCODINGS = ("trp", "mtrp", "frp", "mix")

    def __init__(
        self,
        encoding: str = "mix",
        alpha: float = 1.0,
        beta: float = 1.0,
        mixup_mode: str = "sampled",
        fixed_lambda: float = 0.5,
        seed: int = 0,
        magnitude_floor: float = rp.DEFAULT_MAGNITUDE_FLOOR,
    ):
        self.encoding = encoding
        self.alpha = alpha
        self.beta = beta
        self.mixup_mode = mixup_mode
        self.fixed_lambda = fixed_lambda
        self.seed = seed
        self.magnitude_floor = magnitude_floor

    def _check(self, X) -> np.ndarray:
        if self.encoding not in self.ENCODINGS:
            raise ValueError(f"encoding must be one of {self.ENCODINGS}, got {self.encoding!r}")
        X = check_array(X, dtype=np.float64, allow_nd=True)
        if X.ndim != 3 or X.shape[1] != 3:
            raise ValueError(f"expected (n_episodes, 3, length) input, got shape {X.shape}")
        return X

    def fit(self, X, y=None):
        X = self._check(X)
        self.n_features_in_ = X.shape[2]
        return self

    def _temporal_image(self, channels, signed=True):
        build = rp.modified_rp_temporal if signed else rp.unsigned_rp
        return stack_rgb(*[build(rp.delay_embed(w)) for w in channels])

    def _frequency_image(self, channels):
        return stack_rgb(
            *[
                rp.modified_rp_frequency(rp.phase_spectrum(w, self.magnitude_floor))
                for w in channels
            ]
        )

    def transform(self, X) -> np.ndarray:
        X = self._check(X)
        rng = np.random.default_rng(self.seed)
        images = []
        for channels in X:
            if self.encoding == "trp":
                images.append(self._temporal_image(channels, signed=False))
            elif self.encoding == "mtrp":
                images.append(self._temporal_image(channels))
            elif self.encoding == "frp":
                images.append(self._frequency_image(channels))
            else:
                params = MixupParams(
                    alpha=self.alpha,
                    beta=self.beta,
                    mode=self.mixup_mode,
                    fixed_lambda=self.fixed_lambda,
                    seed=int(rng.integers(0, 2**63)),
                )
                blended, _ = mixup_blend(
                    self._temporal_image(channels),
                    self._frequency_image(channels),
                    params,
                )
                images.append(blended)
        return np.stack(images)
