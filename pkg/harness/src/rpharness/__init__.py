"""rpharness: train image classifiers on recurrence-plot image manifests."""

from .compare import compare_encodings, run_comparison
from .data import ManifestImageDataset, select_records, split_off_validation
from .exceptions import (
    HarnessError,
    InsufficientClasses,
    ManifestMissingImages,
    TrainingTouchedTestImage,
)
from .experiment import ExperimentSpec, build_model, run_experiment
from .manifest import ImageRecord, read_manifest
from .results import (
    ResultTable,
    accuracy_stats,
    build_result_table,
    recompute_from_results_csv,
    write_results_csv,
    write_summary_csv,
)

__version__ = "0.1.0"
