"""Fine-tune a ResNet on manifest images and evaluate on the test split."""

import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import torch
from torch import nn
from torch.utils.data import DataLoader
from torchvision.models import resnet18

from .data import (
    ManifestImageDataset,
    check_images_exist,
    class_names,
    select_records,
    split_off_validation,
)
from .exceptions import TrainingTouchedTestImage
from .manifest import manifest_root, read_manifest
from .results import ResultTable, build_result_table, ensure_dir, write_results_csv, write_summary_csv


@dataclass
class ExperimentSpec:
    """One training/evaluation run over a single encoding."""

    manifest_path: str
    encoding: str = "mix"
    epochs: int = 8
    batch_size: int = 32
    learning_rate: float = 1e-3
    val_fraction: float = 0.2
    seed: int = 0
    resize: int = 224
    pretrained: bool = True
    supplement: bool = True
    audit: bool = False
    device: str = "auto"
    output_dir: str | None = None

    def __post_init__(self):
        if not 0.0 < self.val_fraction < 1.0:
            raise ValueError(f"val_fraction must be in (0, 1), got {self.val_fraction}")
        if self.epochs < 1 or self.batch_size < 1:
            raise ValueError("epochs and batch_size must be positive")


def _seed_everything(seed: int) -> None:
    random.seed(seed)
    np.random.seed(seed % 2**32)
    torch.manual_seed(seed)
    torch.use_deterministic_algorithms(True, warn_only=True)


def _resolve_device(name: str) -> torch.device:
    if name == "auto":
        return torch.device("cuda" if torch.cuda.is_available() else "cpu")
    return torch.device(name)


def build_model(n_classes: int, pretrained: bool):
    """ResNet-18 with a fresh classification head.

    Falls back to random initialization when the pretrained weights are not
    retrievable (offline environments); the outcome is recorded so results
    stay comparable.
    """
    weights_loaded = False
    model = None
    if pretrained:
        try:
            from torchvision.models import ResNet18_Weights

            model = resnet18(weights=ResNet18_Weights.IMAGENET1K_V1)
            weights_loaded = True
        except Exception as exc:  # noqa: BLE001 - any fetch failure degrades gracefully
            print(f"warning: pretrained weights unavailable ({exc}); using random init",
                  file=sys.stderr)
    if model is None:
        model = resnet18(weights=None)
    model.fc = nn.Linear(model.fc.in_features, n_classes)
    return model, weights_loaded


def _evaluate(model, loader, device):
    model.eval()
    predictions = []
    with torch.no_grad():
        for images, labels in loader:
            logits = model(images.to(device))
            predictions.extend(logits.argmax(dim=1).cpu().tolist())
    return predictions


def run_experiment(spec: ExperimentSpec) -> ResultTable:
    """Train on the train split of the chosen encoding, evaluate on test.

    Emits `results.csv` (per-sample test predictions) and `summary.csv` into
    `spec.output_dir` when set, and returns the summary table.
    """
    _seed_everything(spec.seed)
    device = _resolve_device(spec.device)

    records = read_manifest(spec.manifest_path)
    root = manifest_root(spec.manifest_path)

    train_records = select_records(records, spec.encoding, "train", supplement=spec.supplement)
    test_records = select_records(records, spec.encoding, "test")
    check_images_exist(train_records + test_records, root)
    names = class_names(train_records + test_records)
    label_to_id = {name: i for i, name in enumerate(names)}

    fit_records, val_records = split_off_validation(train_records, spec.val_fraction, spec.seed)

    train_audit = [] if spec.audit else None
    train_data = ManifestImageDataset(fit_records, root, label_to_id, spec.resize, train_audit)
    val_data = ManifestImageDataset(val_records, root, label_to_id, spec.resize, train_audit)
    test_data = ManifestImageDataset(test_records, root, label_to_id, spec.resize)

    generator = torch.Generator().manual_seed(spec.seed)
    # a trailing batch of one sample breaks batch-norm in training mode
    drop_last = len(train_data) % spec.batch_size == 1
    train_loader = DataLoader(
        train_data,
        batch_size=spec.batch_size,
        shuffle=True,
        generator=generator,
        drop_last=drop_last,
    )
    val_loader = DataLoader(val_data, batch_size=spec.batch_size)
    test_loader = DataLoader(test_data, batch_size=spec.batch_size)

    model, weights_loaded = build_model(len(names), spec.pretrained)
    model.to(device)
    optimizer = torch.optim.Adam(model.parameters(), lr=spec.learning_rate)
    scheduler = torch.optim.lr_scheduler.StepLR(
        optimizer, step_size=max(2, spec.epochs // 3), gamma=0.6
    )
    criterion = nn.CrossEntropyLoss()

    start = time.monotonic()
    val_accuracy = 0.0
    for epoch in range(spec.epochs):
        model.train()
        epoch_loss = 0.0
        for images, labels in train_loader:
            optimizer.zero_grad()
            loss = criterion(model(images.to(device)), labels.to(device))
            loss.backward()
            optimizer.step()
            epoch_loss += float(loss.detach())
        scheduler.step()
        val_predictions = _evaluate(model, val_loader, device)
        val_truth = [label_to_id[r.label] for r in val_records]
        val_accuracy = 100.0 * sum(
            int(p == t) for p, t in zip(val_predictions, val_truth)
        ) / max(1, len(val_truth))
        print(
            f"[{spec.encoding}] epoch {epoch + 1}/{spec.epochs} "
            f"loss {epoch_loss / max(1, len(train_loader)):.4f} val {val_accuracy:.1f}%",
            file=sys.stderr,
        )

    if spec.audit:
        # guard every test-split image in the manifest, not just the
        # filtered encoding's
        test_paths = {str(root / r.image_path) for r in records if r.split == "test"}
        touched = test_paths.intersection(train_audit or [])
        if touched:
            raise TrainingTouchedTestImage(
                f"{len(touched)} test images opened during training, "
                f"first: {sorted(touched)[0]}"
            )

    predictions = _evaluate(model, test_loader, device)
    id_to_label = {i: name for name, i in label_to_id.items()}
    rows = [
        (rec.image_path, rec.label, id_to_label[pred])
        for rec, pred in zip(test_records, predictions)
    ]

    table = build_result_table(
        spec.encoding,
        rows,
        n_train=len(train_records),
        metadata={
            "epochs": spec.epochs,
            "batch_size": spec.batch_size,
            "learning_rate": spec.learning_rate,
            "val_fraction": spec.val_fraction,
            "seed": spec.seed,
            "resize": spec.resize,
            "pretrained_requested": spec.pretrained,
            "pretrained_loaded": weights_loaded,
            "supplement": spec.supplement,
            "final_val_accuracy": round(val_accuracy, 4),
            "train_seconds": round(time.monotonic() - start, 2),
            "device": str(device),
        },
    )

    if spec.output_dir:
        out = ensure_dir(spec.output_dir)
        write_results_csv(rows, out / "results.csv")
        write_summary_csv([table], out / "summary.csv")
    print(table.console_table())
    return table
