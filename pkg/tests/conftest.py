import json
from pathlib import Path

import pytest

from surfcut.embedding import parse_embedding
from surfcut.solver import SolveContext

ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT / "corpus"


@pytest.fixture(scope="session")
def manifest():
    return json.loads((CORPUS_DIR / "manifest.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def corpus_graphs(manifest):
    graphs = {}
    for item in manifest:
        text = (CORPUS_DIR / item["file"]).read_text(encoding="utf-8")
        graphs[item["name"]] = parse_embedding(text)
    return graphs


@pytest.fixture(scope="session")
def corpus_contexts(corpus_graphs):
    """One shared pipeline context per corpus instance.

    The walk tables are the expensive part and are independent of the
    balance function, so every test that needs them reuses these.
    """
    return {name: SolveContext(g) for name, g in corpus_graphs.items()}
