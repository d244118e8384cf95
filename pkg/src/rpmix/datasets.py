"""Corpus ingestion: ADL text files, generic CSV episodes, resampling, splits."""

import csv
import math
import re
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .exceptions import (
    EmptyFile,
    EmptyManifest,
    InvalidLength,
    MalformedLine,
    MissingColumn,
    UnknownLabel,
)

# The seven wrist-accelerometer activities used from the public ADL corpus
# (climbing, drinking water, getting up from bed, pouring water, sitting down,
# standing up, walking -> the corpus's own filename tokens).
ADL_ACTIVITIES = (
    "climb_stairs",
    "drink_glass",
    "getup_bed",
    "pour_water",
    "sitdown_chair",
    "standup_chair",
    "walk",
)

ADL_SAMPLE_RATE_HZ = 32.0

DEFAULT_RESAMPLE_LENGTH = 64


@dataclass
class Episode:
    """One pre-segmented, labeled tri-axial recording."""

    id: str
    label: str
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    sample_rate_hz: float
    source_path: str = ""

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.float64)
        self.z = np.asarray(self.z, dtype=np.float64)
        n = len(self.x)
        if len(self.y) != n or len(self.z) != n:
            raise ValueError(f"channel lengths differ in episode {self.id}")
        if n < 3:
            raise ValueError(f"episode {self.id} has only {n} samples, need >= 3")
        if not self.label:
            raise ValueError(f"episode {self.id} has an empty label")

    def __len__(self) -> int:
        return len(self.x)

    @property
    def channels(self):
        return (self.x, self.y, self.z)


def normalize_label(raw: str) -> str:
    """Lowercase snake-case a label so filename variants map to one class."""
    label = re.sub(r"[^a-z0-9]+", "_", raw.strip().lower()).strip("_")
    return label


def label_from_filename(path, delimiter: str = "-", label_field: int = -2) -> str:
    """Extract the activity token from a corpus filename.

    The UCI ADL layout is ``Accelerometer-<date>-<time>-<activity>-<volunteer>.txt``,
    so the activity occupies the second-to-last hyphen field by default.
    """
    stem = Path(path).stem
    fields = stem.split(delimiter)
    try:
        raw = fields[label_field]
    except IndexError:
        raise UnknownLabel(f"cannot extract label field {label_field} from {path}") from None
    label = normalize_label(raw)
    if not label:
        raise UnknownLabel(f"empty label token in filename {path}")
    return label


def parse_adl_file(path, delimiter: str = "-", label_field: int = -2) -> Episode:
    """Parse one ADL-layout text file: whitespace-separated x y z triples."""
    label = label_from_filename(path, delimiter, label_field)
    xs, ys, zs = [], [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 3:
                raise MalformedLine(
                    f"{path}:{lineno}: expected 3 fields, got {len(parts)}"
                )
            try:
                vals = [float(p) for p in parts]
            except ValueError:
                raise MalformedLine(f"{path}:{lineno}: non-numeric field") from None
            xs.append(vals[0])
            ys.append(vals[1])
            zs.append(vals[2])
    if not xs:
        raise EmptyFile(f"{path}: no data lines")
    return Episode(
        id=Path(path).stem,
        label=label,
        x=xs,
        y=ys,
        z=zs,
        sample_rate_hz=ADL_SAMPLE_RATE_HZ,
        source_path=str(path),
    )


@dataclass(frozen=True)
class CsvConfig:
    """Column mapping and label source for generic CSV episodes.

    When ``label_col`` is None the label comes from the filename via the
    delimiter rule, as for ADL files.
    """

    x_col: str = "x"
    y_col: str = "y"
    z_col: str = "z"
    label_col: str | None = None
    filename_delimiter: str = "-"
    filename_label_field: int = -1
    sample_rate_hz: float = 52.0


def parse_csv_episode(path, config: CsvConfig = CsvConfig()) -> Episode:
    """Parse one headered CSV episode using the configured column mapping."""
    xs, ys, zs = [], [], []
    label = None
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        needed = [config.x_col, config.y_col, config.z_col]
        if config.label_col is not None:
            needed.append(config.label_col)
        for col in needed:
            if col not in header:
                raise MissingColumn(f"{path}: column {col!r} not in header {header}")
        for row in reader:
            lineno = reader.line_num
            try:
                xs.append(float(row[config.x_col]))
                ys.append(float(row[config.y_col]))
                zs.append(float(row[config.z_col]))
            except (TypeError, ValueError):
                raise MalformedLine(f"{path}:{lineno}: non-numeric field") from None
            if config.label_col is not None and label is None:
                label = normalize_label(row[config.label_col] or "")
                if not label:
                    raise UnknownLabel(f"{path}:{lineno}: empty label value")
    if not xs:
        raise EmptyFile(f"{path}: no data rows")
    if config.label_col is None:
        label = label_from_filename(
            path, config.filename_delimiter, config.filename_label_field
        )
    return Episode(
        id=Path(path).stem,
        label=label,
        x=xs,
        y=ys,
        z=zs,
        sample_rate_hz=config.sample_rate_hz,
        source_path=str(path),
    )


def resample_channel(channel: np.ndarray, length: int) -> np.ndarray:
    """Linearly interpolate a channel onto `length` equally spaced points.

    Endpoints are preserved exactly; resampling to the source length is the
    identity.
    """
    if length < 3:
        raise InvalidLength(f"resample length must be >= 3, got {length}")
    src = np.asarray(channel, dtype=np.float64)
    n = src.shape[0]
    if length == n:
        return src.copy()
    positions = np.linspace(0.0, n - 1.0, length)
    return np.interp(positions, np.arange(n, dtype=np.float64), src)


def resample_to_length(episode: Episode, length: int) -> Episode:
    """Resample all three channels of an episode to a fixed window length."""
    return replace(
        episode,
        x=resample_channel(episode.x, length),
        y=resample_channel(episode.y, length),
        z=resample_channel(episode.z, length),
    )


@dataclass(frozen=True)
class LabelMap:
    """Bijection between class names and integer ids, lexicographically ordered."""

    names: tuple

    @classmethod
    def from_labels(cls, labels) -> "LabelMap":
        return cls(names=tuple(sorted(set(labels))))

    def id_of(self, name: str) -> int:
        return self.names.index(name)

    def name_of(self, class_id: int) -> str:
        return self.names[class_id]

    def __len__(self) -> int:
        return len(self.names)


def _train_count(n: int, ratio: float) -> int:
    # round-half-up on the positive train fraction, clamped to [0, n]
    return min(n, max(0, math.floor(n * ratio + 0.5)))


def split_train_test(records, ratio: float, seed: int):
    """Assign train/test splits to manifest records, stratified per class.

    Episodes (not single images) are the unit of assignment, so every derived
    image of one episode lands in the same split.  Episode ids are sorted
    before the seeded shuffle, making the outcome independent of record order.
    """
    if not records:
        raise EmptyManifest("cannot split an empty manifest")
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"split ratio must be in (0, 1), got {ratio}")

    episode_label = {}
    for rec in records:
        episode_label.setdefault(rec.episode_id, rec.label)

    by_class = {}
    for episode_id, label in episode_label.items():
        by_class.setdefault(label, []).append(episode_id)

    rng = np.random.default_rng(seed)
    assignment = {}
    for label in sorted(by_class):
        ids = sorted(by_class[label])
        order = rng.permutation(len(ids))
        n_train = _train_count(len(ids), ratio)
        for rank, idx in enumerate(order):
            assignment[ids[idx]] = "train" if rank < n_train else "test"

    return [replace(rec, split=assignment[rec.episode_id]) for rec in records]
