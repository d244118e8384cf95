"""rpmix: recurrence-plot image encoding of wearable sensor windows.

Temporal and frequency-domain (DFT-phase) signed recurrence matrices, RGB
channel stacking, mixup blending of the two domains, and a batch pipeline
from raw accelerometer corpora to PNG images plus a train/test manifest.
"""

from .datasets import (
    ADL_ACTIVITIES,
    CsvConfig,
    Episode,
    LabelMap,
    parse_adl_file,
    parse_csv_episode,
    resample_channel,
    resample_to_length,
    split_train_test,
)
from .image import (
    MixupParams,
    mixup_blend,
    normalize_channel,
    read_png,
    stack_rgb,
    write_png,
)
from .manifest import ManifestRecord, read_manifest, write_manifest
from .pipeline import EncodeConfig, EncodeReport, corpus_stats, encode_corpus
from .rp import (
    delay_embed,
    modified_rp_frequency,
    modified_rp_temporal,
    phase_spectrum,
    sign_of,
    unsigned_rp,
)
from .transformers import (
    FrequencyRecurrencePlot,
    RecurrenceImageEncoder,
    TemporalRecurrencePlot,
)

__version__ = "0.1.0"

__all__ = [
    "ADL_ACTIVITIES",
    "CsvConfig",
    "EncodeConfig",
    "EncodeReport",
    "Episode",
    "FrequencyRecurrencePlot",
    "LabelMap",
    "ManifestRecord",
    "MixupParams",
    "RecurrenceImageEncoder",
    "TemporalRecurrencePlot",
    "corpus_stats",
    "delay_embed",
    "encode_corpus",
    "mixup_blend",
    "modified_rp_frequency",
    "modified_rp_temporal",
    "normalize_channel",
    "parse_adl_file",
    "parse_csv_episode",
    "phase_spectrum",
    "read_manifest",
    "read_png",
    "resample_channel",
    "resample_to_length",
    "sign_of",
    "split_train_test",
    "stack_rgb",
    "unsigned_rp",
    "write_manifest",
    "write_png",
]
