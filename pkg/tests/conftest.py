import json
from pathlib import Path

import pytest

from homograph_tagger import default_tagmap, load_lexicon

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def news_lexicon():
    return load_lexicon(FIXTURES / "pipeline_lexicon.jsonl")


@pytest.fixture(scope="session")
def penn():
    return default_tagmap()


@pytest.fixture(scope="session")
def news_counts():
    return json.loads((FIXTURES / "news_corpus_counts.json").read_text("utf-8"))
