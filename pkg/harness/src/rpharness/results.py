"""Accuracy bookkeeping: per-class tables, standard error, CSV emission."""

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class ResultTable:
    """Evaluation summary for one experiment.

    `overall` and `per_class` are percentages; `stderr` is the standard
    deviation of the per-sample correctness indicator divided by the square
    root of the test-set size (also in percent), i.e. the standard error of
    the accuracy estimate, recomputable from results.csv.
    """

    encoding: str
    per_class: dict
    overall: float
    stderr: float
    n_test: int
    n_train: int
    metadata: dict = field(default_factory=dict)

    def console_table(self) -> str:
        lines = [f"encoding: {self.encoding}  (train n={self.n_train}, test n={self.n_test})"]
        width = max((len(c) for c in self.per_class), default=5)
        for label in sorted(self.per_class):
            lines.append(f"  {label:<{width}}  {self.per_class[label]:6.1f}")
        lines.append(f"  {'overall':<{width}}  {self.overall:6.2f} ± {self.stderr:.2f}")
        return "\n".join(lines)


def accuracy_stats(correct_flags):
    """(overall %, stderr %) from a sequence of 0/1 correctness flags."""
    flags = [float(c) for c in correct_flags]
    n = len(flags)
    if n == 0:
        raise ValueError("no evaluation samples")
    mean = sum(flags) / n
    variance = sum((f - mean) ** 2 for f in flags) / n
    return 100.0 * mean, 100.0 * math.sqrt(variance) / math.sqrt(n)


def build_result_table(encoding, rows, n_train, metadata=None) -> ResultTable:
    """Rows are (image_path, label, predicted) triples for the test split."""
    correct = [1.0 if label == pred else 0.0 for _, label, pred in rows]
    overall, stderr = accuracy_stats(correct)
    per_class = {}
    labels = sorted({label for _, label, _ in rows})
    for label in labels:
        flags = [1.0 if lab == pred else 0.0 for _, lab, pred in rows if lab == label]
        per_class[label] = 100.0 * sum(flags) / len(flags)
    return ResultTable(
        encoding=encoding,
        per_class=per_class,
        overall=overall,
        stderr=stderr,
        n_test=len(rows),
        n_train=n_train,
        metadata=dict(metadata or {}),
    )


def write_results_csv(rows, path) -> None:
    """Per-sample predictions: one row per test image."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["image_path", "label", "predicted", "correct"])
        for image_path, label, predicted in rows:
            writer.writerow([image_path, label, predicted, int(label == predicted)])


def write_summary_csv(tables, path) -> None:
    labels = sorted({label for t in tables for label in t.per_class})
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["encoding", *labels, "overall", "stderr", "n_test", "n_train"])
        for t in tables:
            writer.writerow(
                [t.encoding]
                + [f"{t.per_class[l]:.4f}" if l in t.per_class else "" for l in labels]
                + [f"{t.overall:.4f}", f"{t.stderr:.4f}", t.n_test, t.n_train]
            )


def recompute_from_results_csv(path):
    """Re-derive (overall %, stderr %) from an emitted results.csv."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        correct = [int(row["correct"]) for row in reader]
    return accuracy_stats(correct)


def read_summary_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def ensure_dir(path) -> Path:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path
