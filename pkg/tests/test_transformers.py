import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import Pipeline

from rpmix import rp
from rpmix.image import stack_rgb
from rpmix.transformers import (
    FrequencyRecurrencePlot,
    RecurrenceImageEncoder,
    TemporalRecurrencePlot,
)


@pytest.fixture
def windows():
    return np.random.default_rng(0).normal(size=(5, 32))


@pytest.fixture
def episodes():
    return np.random.default_rng(1).normal(size=(4, 3, 24))


class TestTemporalRecurrencePlot:
    def test_shapes(self, windows):
        out = TemporalRecurrencePlot().fit_transform(windows)
        assert out.shape == (5, 31, 31)

    def test_matches_functional_core(self, windows):
        out = TemporalRecurrencePlot(signed=True).transform(windows)
        for i, row in enumerate(windows):
            assert np.array_equal(out[i], rp.modified_rp_temporal(rp.delay_embed(row)))

    def test_unsigned_variant(self, windows):
        out = TemporalRecurrencePlot(signed=False).transform(windows)
        assert np.all(out >= 0.0)
        for i, row in enumerate(windows):
            assert np.array_equal(out[i], rp.unsigned_rp(rp.delay_embed(row)))

    def test_sklearn_params(self):
        est = TemporalRecurrencePlot(signed=False)
        assert est.get_params() == {"signed": False}
        est.set_params(signed=True)
        assert clone(est).signed is True


class TestFrequencyRecurrencePlot:
    def test_shapes_and_core(self, windows):
        out = FrequencyRecurrencePlot().fit_transform(windows)
        assert out.shape == (5, 31, 31)
        for i, row in enumerate(windows):
            want = rp.modified_rp_frequency(rp.phase_spectrum(row))
            assert np.array_equal(out[i], want)

    def test_magnitude_floor_param(self):
        est = FrequencyRecurrencePlot(magnitude_floor=1e-6)
        assert clone(est).magnitude_floor == 1e-6


class TestRecurrenceImageEncoder:
    @pytest.mark.parametrize("encoding", ["trp", "mtrp", "frp", "mix"])
    def test_output_contract(self, episodes, encoding):
        out = RecurrenceImageEncoder(encoding=encoding).fit_transform(episodes)
        assert out.shape == (4, 23, 23, 3)
        assert out.dtype == np.uint8

    def test_mtrp_matches_manual_stack(self, episodes):
        out = RecurrenceImageEncoder(encoding="mtrp").transform(episodes)
        for i, chans in enumerate(episodes):
            mats = [rp.modified_rp_temporal(rp.delay_embed(w)) for w in chans]
            assert np.array_equal(out[i], stack_rgb(*mats))

    def test_mix_seed_determinism(self, episodes):
        enc = RecurrenceImageEncoder(encoding="mix", seed=5)
        assert np.array_equal(enc.transform(episodes), enc.transform(episodes))
        other = RecurrenceImageEncoder(encoding="mix", seed=6).transform(episodes)
        assert not np.array_equal(enc.transform(episodes), other)

    def test_mix_fixed_endpoints(self, episodes):
        as_temporal = RecurrenceImageEncoder(encoding="mtrp").transform(episodes)
        lam_one = RecurrenceImageEncoder(
            encoding="mix", mixup_mode="fixed", fixed_lambda=1.0
        ).transform(episodes)
        assert np.array_equal(lam_one, as_temporal)
        as_frequency = RecurrenceImageEncoder(encoding="frp").transform(episodes)
        lam_zero = RecurrenceImageEncoder(
            encoding="mix", mixup_mode="fixed", fixed_lambda=0.0
        ).transform(episodes)
        assert np.array_equal(lam_zero, as_frequency)

    def test_rejects_bad_shapes(self):
        enc = RecurrenceImageEncoder()
        with pytest.raises(ValueError):
            enc.transform(np.zeros((4, 2, 24)))
        with pytest.raises(ValueError):
            enc.transform(np.zeros((4, 24)))

    def test_rejects_bad_encoding(self, episodes):
        with pytest.raises(ValueError):
            RecurrenceImageEncoder(encoding="gaf").transform(episodes)

    def test_composes_in_pipeline(self, episodes):
        pipe = Pipeline([("encode", RecurrenceImageEncoder(encoding="mtrp"))])
        out = pipe.fit_transform(episodes)
        assert out.shape == (4, 23, 23, 3)

    def test_get_params_round_trip(self):
        enc = RecurrenceImageEncoder(encoding="frp", alpha=2.0, seed=9)
        params = enc.get_params()
        rebuilt = RecurrenceImageEncoder(**params)
        assert rebuilt.get_params() == params