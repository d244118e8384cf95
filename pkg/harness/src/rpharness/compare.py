"""Side-by-side evaluation of several encodings over one manifest."""

from dataclasses import replace

from .experiment import ExperimentSpec, run_experiment
from .results import ensure_dir, write_summary_csv


def compare_encodings(specs):
    """Run each spec and tabulate overall accuracy per encoding.

    All specs must share one manifest.  Returns (tables, flags) where flags
    reports whether the blended encoding beat each single-domain one on this
    run.
    """
    if len(specs) < 2:
        raise ValueError("need at least two specs to compare")
    manifests = {s.manifest_path for s in specs}
    if len(manifests) != 1:
        raise ValueError(f"specs must share one manifest, got {sorted(manifests)}")

    tables = [run_experiment(spec) for spec in specs]
    by_encoding = {t.encoding: t for t in tables}
    flags = {}
    if "mix" in by_encoding:
        if "mtrp" in by_encoding:
            flags["mix_beats_mtrp"] = by_encoding["mix"].overall > by_encoding["mtrp"].overall
        if "frp" in by_encoding:
            flags["mix_beats_frp"] = by_encoding["mix"].overall > by_encoding["frp"].overall
    return tables, flags


def run_comparison(manifest_path, encodings, output_dir=None, **spec_kwargs):
    """Build one spec per encoding (shared hyperparameters) and compare."""
    base = ExperimentSpec(manifest_path=manifest_path, **spec_kwargs)
    specs = []
    for encoding in encodings:
        out = f"{output_dir}/{encoding}" if output_dir else None
        specs.append(replace(base, encoding=encoding, output_dir=out))
    tables, flags = compare_encodings(specs)
    if output_dir:
        write_summary_csv(tables, ensure_dir(output_dir) / "comparison.csv")
    return tables, flags
