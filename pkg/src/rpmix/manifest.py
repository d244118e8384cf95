"""JSON-lines manifests tying emitted images to labels, episodes, and splits."""

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .exceptions import ManifestIntegrityError

# Serialized key order is fixed so that write -> read -> write round-trips
# byte-identically.
_FIELDS = ("image_path", "label", "episode_id", "encoding_kind", "lambda", "seed", "split")


@dataclass(frozen=True)
class ManifestRecord:
    """One emitted image; `mix_lambda` is present only for mixup variants."""

    image_path: str
    label: str
    episode_id: str
    encoding_kind: str
    seed: int
    split: str = ""
    mix_lambda: float | None = None

    def to_json_line(self) -> str:
        payload = {
            "image_path": self.image_path,
            "label": self.label,
            "episode_id": self.episode_id,
            "encoding_kind": self.encoding_kind,
            "seed": self.seed,
            "split": self.split,
        }
        if self.mix_lambda is not None:
            payload["lambda"] = self.mix_lambda
        return json.dumps({k: payload[k] for k in _FIELDS if k in payload})

    @classmethod
    def from_json_line(cls, line: str) -> "ManifestRecord":
        payload = json.loads(line)
        return cls(
            image_path=payload["image_path"],
            label=payload["label"],
            episode_id=payload["episode_id"],
            encoding_kind=payload["encoding_kind"],
            seed=payload["seed"],
            split=payload.get("split", ""),
            mix_lambda=payload.get("lambda"),
        )


def write_manifest(records, path, check_files: bool = True) -> None:
    """Write records as JSON lines, atomically (temp file + rename).

    Image paths are stored relative to the manifest's directory; with
    `check_files` every referenced file must already exist, so an interrupted
    encode run can never publish a manifest pointing at missing images.
    """
    path = Path(path)
    if check_files:
        missing = [
            rec.image_path
            for rec in records
            if not (path.parent / rec.image_path).is_file()
        ]
        if missing:
            raise ManifestIntegrityError(
                f"{len(missing)} referenced images missing, first: {missing[0]}"
            )
    duplicates = _duplicated_paths(records)
    if duplicates:
        raise ManifestIntegrityError(f"duplicate image paths in manifest: {duplicates[:3]}")
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(rec.to_json_line())
            fh.write("\n")
    os.replace(tmp, path)


def _duplicated_paths(records):
    seen = set()
    dups = []
    for rec in records:
        if rec.image_path in seen:
            dups.append(rec.image_path)
        seen.add(rec.image_path)
    return dups


def read_manifest(path):
    """Read a JSON-lines manifest back into a list of records."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(ManifestRecord.from_json_line(line))
    return records
