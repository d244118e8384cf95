import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rpmix.synthetic import generate_adl_corpus, generate_csv_corpus


@pytest.fixture(scope="session")
def adl_corpus_689(tmp_path_factory):
    """Full-size ADL-layout fixture corpus: 689 episodes, 7 classes."""
    root = tmp_path_factory.mktemp("adl689")
    generate_adl_corpus(root, seed=7)
    return root


@pytest.fixture(scope="session")
def small_adl_corpus(tmp_path_factory):
    """12 episodes over 3 classes; cheap enough for per-test CLI runs."""
    root = tmp_path_factory.mktemp("adl_small")
    generate_adl_corpus(
        root,
        class_counts={"walk": 4, "climb_stairs": 4, "drink_glass": 4},
        seed=3,
        length_range=(70, 120),
    )
    return root


@pytest.fixture(scope="session")
def csv_corpus_small(tmp_path_factory):
    root = tmp_path_factory.mktemp("csv_small")
    generate_csv_corpus(
        root,
        class_counts={"walking": 5, "sitting": 4, "lying": 3},
        seed=11,
        length_range=(60, 140),
    )
    return root
