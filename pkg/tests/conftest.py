import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
for entry in (str(ROOT / "src"), str(ROOT / "tests")):
    if entry not in sys.path:
        sys.path.insert(0, entry)

from memsum.corpus import read_corpus  # noqa: E402


@pytest.fixture(scope="session")
def mini_corpus():
    path = ROOT / "src" / "memsum" / "data" / "mini_corpus.jsonl"
    with open(path, encoding="utf-8") as fh:
        return list(read_corpus(fh))


@pytest.fixture(scope="session")
def mini_corpus_path():
    return ROOT / "src" / "memsum" / "data" / "mini_corpus.jsonl"
