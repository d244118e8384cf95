"""Command-line surface: `rpmix encode`, `rpmix stats`, `rpmix selfcheck`."""

import argparse
import json
import sys

from .datasets import ADL_ACTIVITIES, CsvConfig
from .exceptions import RpmixError
from .pipeline import (
    DEFAULT_ENCODINGS,
    ENCODING_KINDS,
    EncodeConfig,
    corpus_stats,
    encode_corpus,
)
from .selfcheck import run_checks

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_PARTIAL = 2

_ENCODE_DEFAULTS = {
    "dataset": "adl",
    "length": 64,
    "encodings": ",".join(DEFAULT_ENCODINGS),
    "mix_alpha": 1.0,
    "mix_beta": 1.0,
    "mix_mode": "sampled",
    "mix_fixed_lambda": 0.5,
    "mix_variants": 1,
    "split": 0.7,
    "seed": 0,
    "jobs": None,
    "fail_fast": False,
    "csv_columns": "x,y,z",
    "csv_label_col": None,
    "csv_rate": 52.0,
    "adl_activities": ",".join(ADL_ACTIVITIES),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpmix",
        description="Encode wearable sensor episodes as recurrence-plot RGB images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode a corpus into PNG images plus a split manifest")
    enc.add_argument("--input", required=True, help="corpus directory")
    enc.add_argument("--output", required=True, help="output directory")
    enc.add_argument("--config", help="JSON config file; flags override its values")
    enc.add_argument("--dataset", choices=["adl", "csv"])
    enc.add_argument("--length", type=int, help="resampled window length (default 64)")
    enc.add_argument(
        "--encodings",
        help=f"comma-separated subset of {{{','.join(ENCODING_KINDS)}}} (default mtrp,frp,mix)",
    )
    enc.add_argument("--mix-alpha", type=float, dest="mix_alpha")
    enc.add_argument("--mix-beta", type=float, dest="mix_beta")
    enc.add_argument("--mix-mode", choices=["sampled", "fixed"], dest="mix_mode")
    enc.add_argument("--mix-fixed-lambda", type=float, dest="mix_fixed_lambda")
    enc.add_argument("--mix-variants", type=int, dest="mix_variants")
    enc.add_argument("--split", type=float, help="train fraction (default 0.7)")
    enc.add_argument("--seed", type=int)
    enc.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    enc.add_argument("--fail-fast", action="store_true", default=None, dest="fail_fast")
    enc.add_argument("--csv-columns", dest="csv_columns", help="x,y,z column names")
    enc.add_argument("--csv-label-col", dest="csv_label_col")
    enc.add_argument("--csv-rate", type=float, dest="csv_rate")
    enc.add_argument("--adl-activities", dest="adl_activities", help="comma-separated activity filter")

    st = sub.add_parser("stats", help="per-class corpus statistics")
    st.add_argument("--input", required=True)
    st.add_argument("--dataset", choices=["adl", "csv"], default="adl")
    st.add_argument("--json", action="store_true", help="emit a single JSON document")
    st.add_argument("--csv-columns", dest="csv_columns", default="x,y,z")
    st.add_argument("--csv-label-col", dest="csv_label_col")
    st.add_argument("--csv-rate", type=float, dest="csv_rate", default=52.0)
    st.add_argument("--adl-activities", dest="adl_activities", default=",".join(ADL_ACTIVITIES))

    sub.add_parser("selfcheck", help="run the embedded oracle suite")
    return parser


def _merge_encode_settings(args) -> dict:
    settings = dict(_ENCODE_DEFAULTS)
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            file_settings = json.load(fh)
        unknown = set(file_settings) - set(_ENCODE_DEFAULTS)
        if unknown:
            raise RpmixError(f"unknown config keys: {sorted(unknown)}")
        settings.update(file_settings)
    for key in _ENCODE_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _csv_config(settings) -> CsvConfig:
    columns = [c.strip() for c in str(settings["csv_columns"]).split(",")]
    if len(columns) != 3:
        raise RpmixError(f"--csv-columns needs exactly 3 names, got {columns}")
    return CsvConfig(
        x_col=columns[0],
        y_col=columns[1],
        z_col=columns[2],
        label_col=settings["csv_label_col"],
        sample_rate_hz=float(settings["csv_rate"]),
    )


def _cmd_encode(args) -> int:
    settings = _merge_encode_settings(args)
    config = EncodeConfig(
        input_dir=args.input,
        output_dir=args.output,
        dataset_kind=settings["dataset"],
        length=int(settings["length"]),
        encodings=tuple(e.strip() for e in str(settings["encodings"]).split(",") if e.strip()),
        mix_alpha=float(settings["mix_alpha"]),
        mix_beta=float(settings["mix_beta"]),
        mix_mode=settings["mix_mode"],
        mix_fixed_lambda=float(settings["mix_fixed_lambda"]),
        mix_variants=int(settings["mix_variants"]),
        split_ratio=float(settings["split"]),
        seed=int(settings["seed"]),
        jobs=None if settings["jobs"] is None else int(settings["jobs"]),
        fail_fast=bool(settings["fail_fast"]),
        csv=_csv_config(settings),
        adl_activities=tuple(
            a.strip() for a in str(settings["adl_activities"]).split(",") if a.strip()
        ),
    )
    report = encode_corpus(config)
    print(
        f"encoded {report.n_episodes} episodes -> {report.n_images} images, "
        f"manifest {report.manifest_path}"
    )
    if report.skipped:
        print(f"skipped {len(report.skipped)} files:", file=sys.stderr)
        for skip in report.skipped:
            print(f"  {skip.path}: {skip.error}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def _cmd_stats(args) -> int:
    csv_config = _csv_config(
        {
            "csv_columns": args.csv_columns,
            "csv_label_col": args.csv_label_col,
            "csv_rate": args.csv_rate,
        }
    )
    activities = tuple(a.strip() for a in args.adl_activities.split(",") if a.strip())
    stats, skipped = corpus_stats(
        args.input, args.dataset, csv_config, adl_activities=activities
    )
    if args.json:
        print(json.dumps(stats, indent=2, sort_keys=True))
    else:
        if not stats["classes"]:
            print("no episodes found", file=sys.stderr)
        else:
            header = f"{'class':<20} {'count':>6} {'len min':>8} {'len med':>8} {'len max':>8} {'rate Hz':>8}"
            print(header)
            print("-" * len(header))
            for label, row in stats["classes"].items():
                print(
                    f"{label:<20} {row['count']:>6} {row['length_min']:>8} "
                    f"{row['length_median']:>8.1f} {row['length_max']:>8} "
                    f"{row['sample_rate_hz']:>8.1f}"
                )
            print(f"total episodes: {stats['total_episodes']}")
    if skipped:
        print(f"skipped {len(skipped)} files:", file=sys.stderr)
        for skip in skipped:
            print(f"  {skip.path}: {skip.error}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def _cmd_selfcheck() -> int:
    results = run_checks()
    for res in results:
        marker = "PASS" if res.passed else "FAIL"
        print(f"[{marker}] {res.name}: {res.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FATAL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "encode":
            return _cmd_encode(args)
        if args.command == "stats":
            return _cmd_stats(args)
        return _cmd_selfcheck()
    except RpmixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
