import os
from pathlib import Path

import numpy as np
import pytest

from footprints.vsm import VectorSpace, load_vectors

FIXTURES = Path(__file__).parent / "fixtures"
REPO_ROOT = Path(__file__).parent.parent
DEMO_VECTORS = REPO_ROOT / "data" / "demo" / "vectors_demo.txt"


def glove_file(name: str) -> Path | None:
    """Locate a real GloVe file, if the user has provided one.

    Looked up under $FOOTPRINTS_GLOVE_DIR, then <repo>/data/glove/. These
    files are too large to bundle; tests that need them skip when absent.
    """
    candidates = []
    env = os.environ.get("FOOTPRINTS_GLOVE_DIR")
    if env:
        candidates.append(Path(env) / name)
    candidates.append(REPO_ROOT / "data" / "glove" / name)
    for path in candidates:
        if path.is_file():
            return path
    return None


def brute_force_nearest(space: VectorSpace, query, k, exclude=()):
    """Independent top-k oracle: per-row cosine in a plain loop, then sort."""
    q = np.asarray(query, dtype=np.float64)
    qnorm = np.linalg.norm(q)
    excluded = {space.normalize_token(e) for e in exclude}
    sims = []
    for token in space.tokens:
        if token in excluded:
            continue
        row = space.matrix[space.index[token]]
        sim = float(np.dot(row, q) / (np.linalg.norm(row) * qnorm))
        sims.append((token, min(1.0, max(-1.0, sim))))
    sims.sort(key=lambda pair: (-pair[1], pair[0]))
    return sims[:k]


@pytest.fixture(scope="session")
def demo_space() -> VectorSpace:
    return load_vectors(DEMO_VECTORS)
