import json
import sys
from pathlib import Path

import numpy as np
import pytest
from PIL import Image

sys.path.insert(0, str(Path(__file__).parent))

# Strongly color-separable classes so tiny training budgets converge.
_PALETTE = {
    0: (200, 40, 40),
    1: (40, 40, 200),
    2: (40, 200, 40),
}


def write_corpus(
    root,
    class_episodes=(("alpha", 10), ("beta", 10)),
    encodings=("mtrp", "frp", "mix"),
    side=24,
    train_fraction=0.7,
    seed=0,
):
    """Write PNGs plus a manifest.jsonl exactly in the encoder's wire format."""
    root = Path(root)
    (root / "images").mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    lines = []
    for class_idx, (label, count) in enumerate(class_episodes):
        n_train = round(train_fraction * count)
        for i in range(count):
            episode = f"{label}-ep{i:03d}"
            split = "train" if i < n_train else "test"
            for kind_idx, kind in enumerate(encodings):
                base = np.array(_PALETTE[class_idx % 3], dtype=np.int16)
                img = base + rng.integers(-25, 26, size=(side, side, 3))
                # small per-encoding tint so the variants are not identical
                img[..., kind_idx % 3] += 12
                img = np.clip(img, 0, 255).astype(np.uint8)
                name = f"{episode}__{kind}{'0' if kind == 'mix' else ''}.png"
                Image.fromarray(img, mode="RGB").save(root / "images" / name)
                payload = {
                    "image_path": f"images/{name}",
                    "label": label,
                    "episode_id": episode,
                    "encoding_kind": kind,
                    "seed": 7,
                    "split": split,
                }
                if kind == "mix":
                    payload["lambda"] = float(rng.uniform(0, 1))
                lines.append(json.dumps(payload))
    manifest = root / "manifest.jsonl"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest


@pytest.fixture(scope="session")
def corpus_manifest(tmp_path_factory):
    root = tmp_path_factory.mktemp("harness_corpus")
    return write_corpus(root)


@pytest.fixture(scope="session")
def three_class_manifest(tmp_path_factory):
    root = tmp_path_factory.mktemp("harness_corpus3")
    return write_corpus(
        root, class_episodes=(("alpha", 8), ("beta", 8), ("gamma", 8)), seed=1
    )
