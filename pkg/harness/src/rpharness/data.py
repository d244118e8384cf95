"""Record filtering and the torch dataset over manifest images."""

from pathlib import Path

import numpy as np
import torch
from PIL import Image
from torch.utils.data import Dataset

from .exceptions import InsufficientClasses, ManifestMissingImages

ENCODINGS = ("trp", "mtrp", "frp", "mix")

# ImageNet statistics, matching the pretrained backbone's training regime.
_MEAN = (0.485, 0.456, 0.406)
_STD = (0.229, 0.224, 0.225)


def select_records(records, encoding: str, split: str, supplement: bool = False):
    """Records of one split for the chosen encoding.

    With `supplement` (training with 'mix'), the source mtrp/frp images of
    the same split are added alongside the blended ones — mixup variants
    augment the originals rather than replace them.
    """
    if encoding not in ENCODINGS:
        raise ValueError(f"encoding must be one of {ENCODINGS}, got {encoding!r}")
    kinds = {encoding}
    if supplement and encoding == "mix":
        kinds |= {"mtrp", "frp"}
    return [r for r in records if r.split == split and r.encoding_kind in kinds]


def check_images_exist(records, root) -> None:
    missing = [r.image_path for r in records if not (Path(root) / r.image_path).is_file()]
    if missing:
        raise ManifestMissingImages(
            f"{len(missing)} images missing under {root}, first: {missing[0]}"
        )


def class_names(records):
    names = sorted({r.label for r in records})
    if len(names) < 2:
        raise InsufficientClasses(f"need at least 2 classes, found {names}")
    return names


def split_off_validation(records, fraction: float, seed: int):
    """Episode-level validation carve-out from the training records."""
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"validation fraction must be in (0, 1), got {fraction}")
    episodes = sorted({r.episode_id for r in records})
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(episodes))
    n_val = max(1, round(fraction * len(episodes)))
    val_ids = {episodes[i] for i in order[:n_val]}
    train = [r for r in records if r.episode_id not in val_ids]
    val = [r for r in records if r.episode_id in val_ids]
    return train, val


class ManifestImageDataset(Dataset):
    """PNGs referenced by manifest records, resized and normalized.

    When `audit_log` is given, every opened path is appended to it; the
    experiment runner uses this in test mode to prove that training never
    touches a test-split file.
    """

    def __init__(self, records, root, label_to_id, resize: int, audit_log=None):
        self.records = list(records)
        self.root = Path(root)
        self.label_to_id = dict(label_to_id)
        self.resize = resize
        self.audit_log = audit_log

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, index: int):
        rec = self.records[index]
        path = self.root / rec.image_path
        if self.audit_log is not None:
            self.audit_log.append(str(path))
        with Image.open(path) as im:
            im = im.convert("RGB").resize((self.resize, self.resize), Image.BILINEAR)
            array = np.asarray(im, dtype=np.float32) / 255.0
        tensor = torch.from_numpy(array).permute(2, 0, 1)
        mean = torch.tensor(_MEAN).view(3, 1, 1)
        std = torch.tensor(_STD).view(3, 1, 1)
        tensor = (tensor - mean) / std
        return tensor, self.label_to_id[rec.label]
