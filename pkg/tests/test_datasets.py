import numpy as np
import pytest

import oracles
from rpmix.datasets import (
    ADL_ACTIVITIES,
    CsvConfig,
    LabelMap,
    normalize_label,
    parse_adl_file,
    parse_csv_episode,
    resample_channel,
    resample_to_length,
    split_train_test,
)
from rpmix.exceptions import (
    EmptyFile,
    EmptyManifest,
    InvalidLength,
    MalformedLine,
    MissingColumn,
    UnknownLabel,
)
from rpmix.manifest import ManifestRecord, read_manifest, write_manifest
from rpmix.pipeline import EncodeConfig, discover_episode_paths
from rpmix.synthetic import ADL_CLASS_COUNTS, generate_csv_corpus


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


class TestParseAdl:
    def test_three_line_file(self, tmp_path):
        p = _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-00-Walk-m1.txt",
            "10 20 30\n11 21 31\n12 22 32\n",
        )
        ep = parse_adl_file(p)
        assert ep.label == "walk"
        assert ep.x.tolist() == [10, 11, 12]
        assert ep.y.tolist() == [20, 21, 22]
        assert ep.z.tolist() == [30, 31, 32]
        assert ep.sample_rate_hz == 32.0
        assert ep.id == "Accelerometer-2012-01-01-00-00-00-Walk-m1"

    def test_activity_token_position(self, tmp_path):
        p = _write(
            tmp_path / "Accelerometer-2011-03-24-09-24-39-climb_stairs-f1.txt",
            "1 2 3\n4 5 6\n7 8 9\n",
        )
        assert parse_adl_file(p).label == "climb_stairs"

    def test_malformed_line_reports_position(self, tmp_path):
        p = _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-00-walk-m1.txt",
            "1 2 3\n4 5\n7 8 9\n",
        )
        with pytest.raises(MalformedLine, match=":2:"):
            parse_adl_file(p)

    def test_non_numeric_field(self, tmp_path):
        p = _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-00-walk-m1.txt",
            "1 2 3\n4 x 6\n",
        )
        with pytest.raises(MalformedLine, match=":2:"):
            parse_adl_file(p)

    def test_empty_file(self, tmp_path):
        p = _write(tmp_path / "Accelerometer-2012-01-01-00-00-00-walk-m1.txt", "")
        with pytest.raises(EmptyFile):
            parse_adl_file(p)

    def test_unparseable_filename(self, tmp_path):
        p = _write(tmp_path / "x.txt", "1 2 3\n")
        with pytest.raises(UnknownLabel):
            parse_adl_file(p)

    def test_full_fixture_corpus_counts(self, adl_corpus_689):
        config = EncodeConfig(input_dir=str(adl_corpus_689), output_dir="")
        paths = discover_episode_paths(config)
        assert len(paths) == 689
        labels = {}
        for p in paths:
            ep = parse_adl_file(p)  # zero MalformedLine over the corpus
            labels[ep.label] = labels.get(ep.label, 0) + 1
        assert labels == ADL_CLASS_COUNTS
        assert set(labels) == set(ADL_ACTIVITIES)

    def test_discovery_filters_unconfigured_activities(self, tmp_path):
        _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-00-walk-m1.txt", "1 2 3\n4 5 6\n7 8 9\n"
        )
        _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-01-brush_teeth-m1.txt",
            "1 2 3\n4 5 6\n7 8 9\n",
        )
        config = EncodeConfig(input_dir=str(tmp_path), output_dir="")
        paths = discover_episode_paths(config)
        assert len(paths) == 1
        assert "walk" in paths[0].name


class TestParseCsv:
    def test_basic_headered_csv(self, tmp_path):
        p = _write(
            tmp_path / "ep0-walking.csv",
            "x,y,z\n1,2,3\n4,5,6\n7,8,9\n10,11,12\n13,14,15\n",
        )
        ep = parse_csv_episode(p, CsvConfig())
        assert len(ep) == 5
        assert ep.label == "walking"
        assert ep.sample_rate_hz == 52.0

    def test_label_from_column(self, tmp_path):
        p = _write(
            tmp_path / "whatever.csv",
            "ax,ay,az,activity\n1,2,3,Lying\n4,5,6,Lying\n7,8,9,Lying\n",
        )
        cfg = CsvConfig(x_col="ax", y_col="ay", z_col="az", label_col="activity")
        assert parse_csv_episode(p, cfg).label == "lying"

    def test_missing_column(self, tmp_path):
        p = _write(tmp_path / "e.csv", "x,y\n1,2\n")
        with pytest.raises(MissingColumn):
            parse_csv_episode(p, CsvConfig())

    def test_malformed_row(self, tmp_path):
        p = _write(tmp_path / "ep1-walking.csv", "x,y,z\n1,2,3\n4,huh,6\n")
        with pytest.raises(MalformedLine, match=":3:"):
            parse_csv_episode(p, CsvConfig())

    def test_empty_csv(self, tmp_path):
        p = _write(tmp_path / "ep2-walking.csv", "x,y,z\n")
        with pytest.raises(EmptyFile):
            parse_csv_episode(p, CsvConfig())

    def test_synthetic_corpus_counts_match_generator(self, tmp_path):
        counts = {"walking": 320, "sitting": 193, "standing": 191, "squatting": 189, "lying": 187}
        generate_csv_corpus(tmp_path, class_counts=counts, seed=5, length_range=(30, 60))
        got = {}
        for p in sorted(tmp_path.glob("*.csv")):
            ep = parse_csv_episode(p, CsvConfig())
            got[ep.label] = got.get(ep.label, 0) + 1
        assert got == counts
        assert sum(got.values()) == 1080


class TestNormalizeLabel:
    def test_snake_case(self):
        assert normalize_label("Drink Glass") == "drink_glass"
        assert normalize_label("WALK") == "walk"
        assert normalize_label("getup_bed") == "getup_bed"


class TestResample:
    def test_midpoint(self):
        assert resample_channel([0.0, 2.0], 3).tolist() == [0.0, 1.0, 2.0]

    def test_identity_when_same_length(self):
        src = np.array([3.0, 1.0, 4.0, 1.0, 5.0])
        out = resample_channel(src, 5)
        assert np.array_equal(out, src)

    def test_piecewise_linear_derived(self):
        got = resample_channel([0.0, 1.0, 4.0, 9.0], 7)
        want = oracles.linear_interp_scalar([0.0, 1.0, 4.0, 9.0], 7)
        assert got.tolist() == want
        assert got.tolist() == [0.0, 0.5, 1.0, 2.5, 4.0, 6.5, 9.0]

    def test_endpoints_exact(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            src = rng.normal(size=int(rng.integers(3, 200)))
            for length in (3, 17, 64, 301):
                out = resample_channel(src, length)
                assert out[0] == src[0]
                assert out[-1] == src[-1]

    def test_invalid_length(self):
        with pytest.raises(InvalidLength):
            resample_channel([1.0, 2.0, 3.0], 2)

    def test_episode_resample(self, tmp_path):
        p = _write(
            tmp_path / "Accelerometer-2012-01-01-00-00-00-walk-m1.txt",
            "\n".join(f"{i} {i * 2} {i * 3}" for i in range(10)) + "\n",
        )
        ep = resample_to_length(parse_adl_file(p), 64)
        assert len(ep) == 64
        assert ep.label == "walk"
        assert ep.x[0] == 0.0 and ep.x[-1] == 9.0


def _records(n_per_class, encodings=("mtrp",)):
    records = []
    for label, count in n_per_class.items():
        for i in range(count):
            episode = f"{label}-{i:03d}"
            for kind in encodings:
                records.append(
                    ManifestRecord(
                        image_path=f"images/{episode}__{kind}.png",
                        label=label,
                        episode_id=episode,
                        encoding_kind=kind,
                        seed=0,
                    )
                )
    return records


class TestSplit:
    def test_ten_episodes_seventy_thirty(self):
        out = split_train_test(_records({"walk": 10}), 0.7, seed=1)
        train = {r.episode_id for r in out if r.split == "train"}
        test = {r.episode_id for r in out if r.split == "test"}
        assert len(train) == 7
        assert len(test) == 3

    def test_same_seed_same_assignment(self):
        records = _records({"walk": 9, "sit": 5})
        a = split_train_test(records, 0.7, seed=42)
        b = split_train_test(records, 0.7, seed=42)
        assert [(r.episode_id, r.split) for r in a] == [(r.episode_id, r.split) for r in b]

    def test_different_seed_differs(self):
        records = _records({"walk": 30})
        a = split_train_test(records, 0.5, seed=1)
        b = split_train_test(records, 0.5, seed=2)
        assert [(r.episode_id, r.split) for r in a] != [(r.episode_id, r.split) for r in b]

    def test_episode_variants_stay_together(self):
        records = _records({"walk": 12, "sit": 8}, encodings=("mtrp", "frp", "mix"))
        out = split_train_test(records, 0.7, seed=3)
        per_episode = {}
        for r in out:
            per_episode.setdefault(r.episode_id, set()).add(r.split)
        assert all(len(s) == 1 for s in per_episode.values())

    def test_stratification_within_one_episode(self):
        counts = {"a": 37, "b": 11, "c": 95}
        out = split_train_test(_records(counts), 0.7, seed=4)
        for label, n in counts.items():
            train = {r.episode_id for r in out if r.label == label and r.split == "train"}
            assert abs(len(train) - 0.7 * n) <= 1.0

    def test_adl_class_sizes_train_total(self):
        counts = {"c1": 102, "c2": 96, "c3": 101, "c4": 100, "c5": 96, "c6": 95, "c7": 99}
        out = split_train_test(_records(counts), 0.7, seed=5)
        train_eps = {r.episode_id for r in out if r.split == "train"}
        assert 480 <= len(train_eps) <= 484

    def test_empty_manifest(self):
        with pytest.raises(EmptyManifest):
            split_train_test([], 0.7, seed=0)

    def test_bad_ratio(self):
        with pytest.raises(ValueError):
            split_train_test(_records({"walk": 4}), 1.0, seed=0)


class TestManifestRoundTrip:
    def test_write_read_write_byte_identical(self, tmp_path):
        records = [
            ManifestRecord(
                image_path="images/a__mtrp.png",
                label="walk",
                episode_id="a",
                encoding_kind="mtrp",
                seed=7,
                split="train",
            ),
            ManifestRecord(
                image_path="images/a__mix0.png",
                label="walk",
                episode_id="a",
                encoding_kind="mix",
                seed=123456789,
                split="train",
                mix_lambda=0.5481279381,
            ),
        ]
        path = tmp_path / "manifest.jsonl"
        write_manifest(records, path, check_files=False)
        first = path.read_bytes()
        back = read_manifest(path)
        assert back == records
        path2 = tmp_path / "manifest2.jsonl"
        write_manifest(back, path2, check_files=False)
        assert path2.read_bytes() == first

    def test_missing_file_rejected(self, tmp_path):
        from rpmix.exceptions import ManifestIntegrityError

        rec = ManifestRecord(
            image_path="images/gone.png",
            label="walk",
            episode_id="e",
            encoding_kind="mtrp",
            seed=0,
            split="test",
        )
        with pytest.raises(ManifestIntegrityError):
            write_manifest([rec], tmp_path / "m.jsonl", check_files=True)

    def test_duplicate_paths_rejected(self, tmp_path):
        from rpmix.exceptions import ManifestIntegrityError

        rec = ManifestRecord(
            image_path="images/dup.png",
            label="walk",
            episode_id="e",
            encoding_kind="mtrp",
            seed=0,
        )
        with pytest.raises(ManifestIntegrityError):
            write_manifest([rec, rec], tmp_path / "m.jsonl", check_files=False)


class TestLabelMap:
    def test_lexicographic_bijection(self):
        lm = LabelMap.from_labels(["walk", "sit", "walk", "climb"])
        assert lm.names == ("climb", "sit", "walk")
        assert lm.id_of("sit") == 1
        assert lm.name_of(2) == "walk"
        assert len(lm) == 3