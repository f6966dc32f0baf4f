import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nlquery.config import Config
from nlquery.corpus import bundled_corpus
from nlquery.engine import SearchEngine
from nlquery.textpipe import Lexicon
from nlquery.vocab import bundled_vocabulary

DATA_DIR = Path(__file__).parent / "data"
PACKAGE_DATA = Path(__file__).parent.parent / "src" / "nlquery" / "data"
SAMPLE_SRC = PACKAGE_DATA / "sample_src"


@pytest.fixture(scope="session")
def lexicon():
    return Lexicon.bundled()


@pytest.fixture(scope="session")
def vocab_and_deps():
    return bundled_vocabulary()


@pytest.fixture(scope="session")
def vocab(vocab_and_deps):
    return vocab_and_deps[0]


@pytest.fixture(scope="session")
def deps(vocab_and_deps):
    return vocab_and_deps[1]


@pytest.fixture(scope="session")
def corpus(lexicon):
    return bundled_corpus(lexicon)


@pytest.fixture(scope="session")
def engine():
    return SearchEngine(Config())


@pytest.fixture(scope="session")
def sample_src():
    return SAMPLE_SRC
