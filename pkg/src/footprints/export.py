"""Analysis artifacts: projector TSV pairs, word-cloud JSON, PCA coordinates.

Output conventions follow the figures this toolkit reproduces: word size
encodes relevance, fill encodes a three-way sentiment bucket, and the
outline encodes the dominant emotion when one clearly dominates. Every
writer is deterministic byte-for-byte: stable ordering and shortest
round-trip decimal floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .footprint import Footprint, ThemeCluster
from .nlu import EMOTIONS
from .vsm import pca_2d

SENTIMENT_THRESHOLDS = (-0.15, 0.15)
DOMINANT_EMOTION_FLOOR = 0.5


def format_float32(value: float) -> str:
    """Shortest decimal string that round-trips at float32 precision."""
    return np.format_float_positional(np.float32(value), unique=True, trim="-")


def sentiment_bucket(
    sentiment: float, thresholds: tuple[float, float] = SENTIMENT_THRESHOLDS
) -> str:
    lo, hi = thresholds
    if sentiment < lo:
        return "negative"
    if sentiment > hi:
        return "positive"
    return "neutral"


def dominant_emotion(
    emotions: dict, floor: float = DOMINANT_EMOTION_FLOOR
) -> str | None:
    """The strongest emotion when it reaches the floor, else None."""
    best_name, best_value = None, -1.0
    for name in EMOTIONS:
        value = emotions.get(name, 0.0)
        if value > best_value:
            best_name, best_value = name, value
    return best_name if best_value >= floor else None


@dataclass(frozen=True)
class WordCloudEntry:
    text: str
    size: float                  # relevance in [0, 1]
    sentiment_bucket: str        # negative | neutral | positive
    dominant_emotion: str | None
    cluster_id: int

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "size": self.size,
            "sentiment_bucket": self.sentiment_bucket,
            "dominant_emotion": self.dominant_emotion,
            "cluster_id": self.cluster_id,
        }


def _clean_cell(text: str) -> str:
    """Metadata cells may not contain tabs or newlines; replace with spaces."""
    return text.replace("\t", " ").replace("\n", " ").replace("\r", " ")


def write_projector(fp: Footprint, out_dir: str | Path) -> dict:
    """Write the projector pair: ``vectors.tsv`` and ``metadata.tsv``.

    vectors.tsv has one headerless row of tab-separated floats per term;
    metadata.tsv has a header row then one row per term in the same order.
    Reloading vectors.tsv reproduces the vectors at float32 precision.
    """
    if not fp.terms:
        raise ValueError("cannot export an empty footprint")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    vectors_path = out_dir / "vectors.tsv"
    metadata_path = out_dir / "metadata.tsv"

    vec_lines = [
        "\t".join(format_float32(x) for x in term.vector) for term in fp.terms
    ]
    vectors_path.write_text("\n".join(vec_lines) + "\n", encoding="utf-8")

    meta_lines = ["surface\trelevance\tsentiment\tdominant_emotion\tsynthetic"]
    for term in fp.terms:
        emotion = dominant_emotion(term.key.emotions) or "none"
        meta_lines.append(
            "\t".join(
                [
                    _clean_cell(term.surface),
                    repr(term.key.relevance),
                    repr(term.key.sentiment),
                    emotion,
                    "true" if term.embedded.synthetic else "false",
                ]
            )
        )
    metadata_path.write_text("\n".join(meta_lines) + "\n", encoding="utf-8")
    return {"vectors": vectors_path, "metadata": metadata_path}


def read_projector_vectors(path: str | Path) -> np.ndarray:
    """Reload a vectors.tsv as float32 values held in a float64 array."""
    rows = [
        np.array(line.split("\t"), dtype=np.float32).astype(np.float64)
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line
    ]
    return np.stack(rows)


def wordcloud_entries(clusters: Sequence[ThemeCluster]) -> list[WordCloudEntry]:
    """Flatten clusters into drawable entries, seed first, members by similarity."""
    entries: list[WordCloudEntry] = []
    for cluster_id, cluster in enumerate(clusters):
        for term in [cluster.seed] + [m for m, _ in cluster.members]:
            entries.append(
                WordCloudEntry(
                    text=term.surface,
                    size=term.key.relevance,
                    sentiment_bucket=sentiment_bucket(term.key.sentiment),
                    dominant_emotion=dominant_emotion(term.key.emotions),
                    cluster_id=cluster_id,
                )
            )
    return entries


def write_wordcloud(clusters: Sequence[ThemeCluster], out: str | Path) -> Path:
    """Write the word-cloud JSON document for a cluster set."""
    doc = {"entries": [e.to_dict() for e in wordcloud_entries(clusters)]}
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return out


def projection_document(fp: Footprint) -> dict:
    """PCA scatter coordinates plus drawing metadata for one footprint."""
    coords = pca_2d([t.vector for t in fp.terms])
    points = []
    for term, (x, y) in zip(fp.terms, coords):
        points.append(
            {
                "surface": term.surface,
                "x": float(x),
                "y": float(y),
                "relevance": term.key.relevance,
                "sentiment_bucket": sentiment_bucket(term.key.sentiment),
                "dominant_emotion": dominant_emotion(term.key.emotions),
                "synthetic": term.embedded.synthetic,
            }
        )
    return {"source": fp.source, "space_id": fp.space_id, "points": points}


def write_projection(fp: Footprint, out: str | Path) -> Path:
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(projection_document(fp), indent=2) + "\n", encoding="utf-8")
    return out
