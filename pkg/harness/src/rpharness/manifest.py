"""Reader for the encoder's JSON-lines manifest.

The manifest file and the PNGs it references are the entire contract with
the upstream encoder; nothing else is imported from it.
"""

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ImageRecord:
    image_path: str
    label: str
    episode_id: str
    encoding_kind: str
    seed: int
    split: str
    mix_lambda: float | None = None


def read_manifest(path):
    """Parse a JSON-lines manifest; image paths stay relative to its directory."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            payload = json.loads(line)
            records.append(
                ImageRecord(
                    image_path=payload["image_path"],
                    label=payload["label"],
                    episode_id=payload["episode_id"],
                    encoding_kind=payload["encoding_kind"],
                    seed=payload.get("seed", 0),
                    split=payload.get("split", ""),
                    mix_lambda=payload.get("lambda"),
                )
            )
    return records


def manifest_root(path) -> Path:
    return Path(path).resolve().parent
