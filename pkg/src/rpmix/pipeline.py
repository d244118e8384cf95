"""End-to-end encoding: corpus -> per-episode RGB images -> split manifest."""

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import rp
from .datasets import (
    ADL_ACTIVITIES,
    CsvConfig,
    Episode,
    parse_adl_file,
    parse_csv_episode,
    resample_to_length,
    split_train_test,
)
from .exceptions import EmptyCorpus, RpmixError
from .image import MixupParams, mixup_blend, stack_rgb, write_png
from .manifest import ManifestRecord, write_manifest

ENCODING_KINDS = ("trp", "mtrp", "frp", "mix")

DEFAULT_ENCODINGS = ("mtrp", "frp", "mix")


@dataclass
class EncodeConfig:
    """Everything one encode run depends on; (corpus, config, seed) fixes every byte."""

    input_dir: str
    output_dir: str
    dataset_kind: str = "adl"
    length: int = 64
    encodings: tuple = DEFAULT_ENCODINGS
    mix_alpha: float = 1.0
    mix_beta: float = 1.0
    mix_mode: str = "sampled"
    mix_fixed_lambda: float = 0.5
    mix_variants: int = 1
    split_ratio: float = 0.7
    seed: int = 0
    jobs: int | None = None
    fail_fast: bool = False
    csv: CsvConfig = field(default_factory=CsvConfig)
    adl_activities: tuple = ADL_ACTIVITIES

    def validate(self) -> None:
        if self.dataset_kind not in ("adl", "csv"):
            raise ValueError(f"dataset_kind must be 'adl' or 'csv', got {self.dataset_kind!r}")
        if self.length < 3:
            raise ValueError(f"window length must be >= 3, got {self.length}")
        bad = [e for e in self.encodings if e not in ENCODING_KINDS]
        if bad or not self.encodings:
            raise ValueError(
                f"encodings must be a non-empty subset of {ENCODING_KINDS}, got {self.encodings}"
            )
        if not 0.0 < self.split_ratio < 1.0:
            raise ValueError(f"split ratio must be in (0, 1), got {self.split_ratio}")
        if self.mix_variants < 1:
            raise ValueError(f"mix_variants must be >= 1, got {self.mix_variants}")
        # constructing the params validates alpha/beta/lambda/mode
        MixupParams(self.mix_alpha, self.mix_beta, self.mix_mode, self.mix_fixed_lambda, 0)


@dataclass
class SkippedFile:
    path: str
    error: str


@dataclass
class EncodeReport:
    n_episodes: int
    n_images: int
    manifest_path: str
    skipped: list


def derive_seed(base_seed: int, episode_id: str, tag: str) -> int:
    """Stable per-(episode, variant) seed, independent of worker order."""
    digest = hashlib.sha256(f"{base_seed}:{episode_id}:{tag}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def discover_episode_paths(config: EncodeConfig) -> list:
    """Sorted corpus files for the configured dataset kind.

    For ADL corpora, only files whose filename label is one of the configured
    activities are taken (the public corpus carries 14 activities; seven are
    used here).
    """
    root = Path(config.input_dir)
    if config.dataset_kind == "adl":
        paths = sorted(root.rglob("*.txt"))
        if config.adl_activities:
            wanted = set(config.adl_activities)
            kept = []
            for p in paths:
                fields = p.stem.split("-")
                if len(fields) >= 2 and fields[-2] in wanted:
                    kept.append(p)
            paths = kept
        return paths
    return sorted(root.rglob("*.csv"))


def parse_episode(path, config: EncodeConfig) -> Episode:
    if config.dataset_kind == "adl":
        return parse_adl_file(path)
    return parse_csv_episode(path, config.csv)


def encode_episode_images(episode: Episode, config: EncodeConfig):
    """Build all requested images for one episode.

    Returns a list of (filename, image, encoding_kind, lambda, seed) tuples in
    a deterministic order: trp, mtrp, frp, then mix variants.
    """
    ep = resample_to_length(episode, config.length)
    wanted = set(config.encodings)
    out = []

    def temporal(signed):
        build = rp.modified_rp_temporal if signed else rp.unsigned_rp
        return stack_rgb(*[build(rp.delay_embed(w)) for w in ep.channels])

    if "trp" in wanted:
        out.append((f"{ep.id}__trp.png", temporal(False), "trp", None, config.seed))

    mtrp_img = temporal(True) if wanted & {"mtrp", "mix"} else None
    frp_img = None
    if wanted & {"frp", "mix"}:
        frp_img = stack_rgb(
            *[rp.modified_rp_frequency(rp.phase_spectrum(w)) for w in ep.channels]
        )

    if "mtrp" in wanted:
        out.append((f"{ep.id}__mtrp.png", mtrp_img, "mtrp", None, config.seed))
    if "frp" in wanted:
        out.append((f"{ep.id}__frp.png", frp_img, "frp", None, config.seed))
    if "mix" in wanted:
        for k in range(config.mix_variants):
            seed_k = derive_seed(config.seed, ep.id, f"mix{k}")
            params = MixupParams(
                alpha=config.mix_alpha,
                beta=config.mix_beta,
                mode=config.mix_mode,
                fixed_lambda=config.mix_fixed_lambda,
                seed=seed_k,
            )
            blended, lam = mixup_blend(mtrp_img, frp_img, params)
            out.append((f"{ep.id}__mix{k}.png", blended, "mix", lam, seed_k))
    return out


def _encode_one(task):
    """Worker: parse one file, encode, write PNGs; returns (records, skipped)."""
    path_str, config, images_dir = task
    try:
        episode = parse_episode(path_str, config)
        records = []
        for filename, img, kind, lam, seed in encode_episode_images(episode, config):
            write_png(img, Path(images_dir) / filename)
            records.append(
                ManifestRecord(
                    image_path=f"images/{filename}",
                    label=episode.label,
                    episode_id=episode.id,
                    encoding_kind=kind,
                    seed=seed,
                    mix_lambda=lam,
                )
            )
        return records, None
    except RpmixError as exc:
        return None, SkippedFile(path=path_str, error=f"{type(exc).__name__}: {exc}")


def encode_corpus(config: EncodeConfig) -> EncodeReport:
    """Run the full pipeline: discover, parse, encode, write, split, manifest.

    Malformed files are skipped and reported unless `fail_fast` is set.  The
    manifest is written last via an atomic rename, so an interrupted run never
    publishes records for missing images.  Reruns with identical config and
    seed are byte-identical regardless of worker count.
    """
    config.validate()
    paths = discover_episode_paths(config)
    if not paths:
        raise EmptyCorpus(f"no episodes found under {config.input_dir}")

    out_dir = Path(config.output_dir)
    images_dir = out_dir / "images"
    images_dir.mkdir(parents=True, exist_ok=True)

    tasks = [(str(p), config, str(images_dir)) for p in paths]
    jobs = config.jobs or os.cpu_count() or 1

    records = []
    skipped = []
    if jobs <= 1 or len(tasks) == 1:
        results = map(_encode_one, tasks)
        for recs, skip in results:
            if skip is not None:
                if config.fail_fast:
                    raise RpmixError(f"{skip.path}: {skip.error}")
                skipped.append(skip)
            else:
                records.extend(recs)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs, skip in pool.map(_encode_one, tasks, chunksize=16):
                if skip is not None:
                    if config.fail_fast:
                        pool.shutdown(wait=False, cancel_futures=True)
                        raise RpmixError(f"{skip.path}: {skip.error}")
                    skipped.append(skip)
                else:
                    records.extend(recs)

    if not records:
        raise EmptyCorpus(f"no episodes could be parsed under {config.input_dir}")

    records = split_train_test(records, config.split_ratio, config.seed)
    manifest_path = out_dir / "manifest.jsonl"
    write_manifest(records, manifest_path)
    episode_ids = {r.episode_id for r in records}
    return EncodeReport(
        n_episodes=len(episode_ids),
        n_images=len(records),
        manifest_path=str(manifest_path),
        skipped=skipped,
    )


def corpus_stats(input_dir, dataset_kind: str = "adl", csv_config: CsvConfig | None = None,
                 adl_activities: tuple = ADL_ACTIVITIES):
    """Per-class episode counts and length stats; skips unparseable files.

    Returns (stats_dict, skipped_list).
    """
    config = EncodeConfig(
        input_dir=str(input_dir),
        output_dir="",
        dataset_kind=dataset_kind,
        csv=csv_config or CsvConfig(),
        adl_activities=adl_activities,
    )
    paths = discover_episode_paths(config)
    per_class = {}
    skipped = []
    for path in paths:
        try:
            ep = parse_episode(str(path), config)
        except RpmixError as exc:
            skipped.append(SkippedFile(path=str(path), error=f"{type(exc).__name__}: {exc}"))
            continue
        bucket = per_class.setdefault(
            ep.label, {"count": 0, "lengths": [], "sample_rate_hz": ep.sample_rate_hz}
        )
        bucket["count"] += 1
        bucket["lengths"].append(len(ep))

    classes = {}
    for label in sorted(per_class):
        lengths = np.array(per_class[label]["lengths"])
        classes[label] = {
            "count": per_class[label]["count"],
            "length_min": int(lengths.min()),
            "length_median": float(np.median(lengths)),
            "length_max": int(lengths.max()),
            "sample_rate_hz": per_class[label]["sample_rate_hz"],
        }
    stats = {
        "classes": classes,
        "total_episodes": int(sum(c["count"] for c in classes.values())),
    }
    return stats, skipped
