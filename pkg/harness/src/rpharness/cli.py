"""Command-line surface: `rpharness run` and `rpharness compare`."""

import argparse
import sys

from .compare import run_comparison
from .exceptions import HarnessError
from .experiment import ExperimentSpec, run_experiment


def _add_common(parser):
    parser.add_argument("--manifest", required=True, help="path to the encoder's manifest.jsonl")
    parser.add_argument("--epochs", type=int, default=8)
    parser.add_argument("--batch-size", type=int, default=32, dest="batch_size")
    parser.add_argument("--lr", type=float, default=1e-3)
    parser.add_argument("--val-fraction", type=float, default=0.2, dest="val_fraction")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--resize", type=int, default=224)
    parser.add_argument("--no-pretrained", action="store_true")
    parser.add_argument("--no-supplement", action="store_true",
                        help="train 'mix' on blended images only, without the source images")
    parser.add_argument("--device", default="auto")
    parser.add_argument("--output", help="directory for results.csv / summary.csv")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rpharness",
        description="Fine-tune an image classifier on recurrence-plot manifests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="one experiment on one encoding")
    run.add_argument("--encoding", default="mix", choices=["trp", "mtrp", "frp", "mix"])
    _add_common(run)

    cmp_parser = sub.add_parser("compare", help="evaluate several encodings side by side")
    cmp_parser.add_argument("--encodings", default="mtrp,frp,mix")
    _add_common(cmp_parser)
    return parser


def _spec_kwargs(args):
    return dict(
        epochs=args.epochs,
        batch_size=args.batch_size,
        learning_rate=args.lr,
        val_fraction=args.val_fraction,
        seed=args.seed,
        resize=args.resize,
        pretrained=not args.no_pretrained,
        supplement=not args.no_supplement,
        device=args.device,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            spec = ExperimentSpec(
                manifest_path=args.manifest,
                encoding=args.encoding,
                output_dir=args.output,
                **_spec_kwargs(args),
            )
            run_experiment(spec)
            return 0
        encodings = [e.strip() for e in args.encodings.split(",") if e.strip()]
        tables, flags = run_comparison(
            args.manifest, encodings, output_dir=args.output, **_spec_kwargs(args)
        )
        for table in tables:
            print(f"{table.encoding:>6}: {table.overall:6.2f} ± {table.stderr:.2f}")
        for name, value in flags.items():
            print(f"{name}: {'yes' if value else 'no'}")
        return 0
    except (HarnessError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
