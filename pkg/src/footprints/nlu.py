"""Scored key terms per document: imported from NLU-service JSON or extracted locally.

The importer reads the two-file JSON shape a commercial NLU service emits
(an ``entities`` document and a ``keywords`` document) and merges them,
entity records winning on collision. The extractor is a self-contained
stand-in for that service: TF-IDF-ranked stopword-free n-grams, with
sentiment and emotion read off co-occurrence windows against small
pluggable lexicons. It aims for plausible term lists, not for replicating
any proprietary ranking.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import SpeakerDocument, tokenize
from .errors import EmptyDocument, RangeError, SchemaError

EMOTIONS = ("anger", "disgust", "fear", "joy", "sadness")

_DATA_PACKAGE = "footprints.data"


def _clamp(value: float, lo: float, hi: float) -> float:
    return min(hi, max(lo, value))


@dataclass(frozen=True)
class KeyTerm:
    """A discourse term with relevance, sentiment and emotion scores."""

    surface: str
    kind: str  # "entity" | "keyword"
    relevance: float
    sentiment: float = 0.0
    emotions: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.surface.strip():
            raise ValueError("KeyTerm surface must be non-empty")
        object.__setattr__(self, "surface", self.surface.strip())
        object.__setattr__(self, "relevance", _clamp(float(self.relevance), 0.0, 1.0))
        object.__setattr__(self, "sentiment", _clamp(float(self.sentiment), -1.0, 1.0))
        emotions = {e: _clamp(float(self.emotions.get(e, 0.0)), 0.0, 1.0) for e in EMOTIONS}
        object.__setattr__(self, "emotions", emotions)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "kind": self.kind,
            "relevance": self.relevance,
            "sentiment": self.sentiment,
            "emotions": dict(self.emotions),
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> "KeyTerm":
        return cls(
            surface=payload["surface"],
            kind=payload.get("kind", "keyword"),
            relevance=payload["relevance"],
            sentiment=payload.get("sentiment", 0.0),
            emotions=payload.get("emotions", {}),
        )


@dataclass(frozen=True)
class Lexicons:
    """Sentiment/emotion lexicons plus a stopword set, all lowercase tokens."""

    sentiment: Mapping[str, float] = field(default_factory=dict)
    emotion: Mapping[str, frozenset] = field(default_factory=dict)
    stopwords: frozenset = frozenset()

    @classmethod
    def empty(cls) -> "Lexicons":
        return cls()


def load_sentiment_lexicon(path: str | Path) -> dict[str, float]:
    """Read a ``token<TAB>score`` file into a polarity map."""
    out: dict[str, float] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        token, score = line.split("\t")
        out[token.lower()] = _clamp(float(score), -1.0, 1.0)
    return out


def load_emotion_lexicon(path: str | Path) -> dict[str, frozenset]:
    """Read a ``token<TAB>emotion`` file (one pair per line) into a map."""
    pairs: dict[str, set] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        token, emotion = line.split("\t")
        emotion = emotion.strip().lower()
        if emotion not in EMOTIONS:
            raise ValueError(f"unknown emotion {emotion!r} in {path}")
        pairs.setdefault(token.lower(), set()).add(emotion)
    return {tok: frozenset(ems) for tok, ems in pairs.items()}


def load_stopwords(path: str | Path) -> frozenset:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return frozenset(ln.strip().lower() for ln in lines if ln.strip() and not ln.startswith("#"))


def _data_path(name: str) -> Path:
    return Path(str(resources.files(_DATA_PACKAGE).joinpath(name)))


def bundled_lexicons() -> Lexicons:
    """The small demo lexicons shipped with the package."""
    return Lexicons(
        sentiment=load_sentiment_lexicon(_data_path("sentiment_demo.tsv")),
        emotion=load_emotion_lexicon(_data_path("emotions_demo.tsv")),
        stopwords=load_stopwords(_data_path("stopwords.txt")),
    )


class BackgroundFrequencies:
    """Document frequencies of common English words, for IDF weighting.

    The bundled table is a coarse, hand-assembled approximation of how
    often words appear in general English documents; tokens missing from
    it get the maximum IDF. ``idf(t) = ln((N + 1) / (df(t) + 1)) + 1``.
    """

    def __init__(self, doc_count: int, df: Mapping[str, int]):
        if doc_count <= 0:
            raise ValueError("doc_count must be positive")
        self.doc_count = doc_count
        self._df = dict(df)
        self._max_idf = math.log((doc_count + 1) / 1.0) + 1.0

    @classmethod
    def load(cls, path: str | Path) -> "BackgroundFrequencies":
        doc_count = None
        df: dict[str, int] = {}
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if "total_documents:" in line:
                    doc_count = int(line.split("total_documents:")[1].strip())
                continue
            token, count = line.split("\t")
            df[token.lower()] = int(count)
        if doc_count is None:
            raise ValueError(f"{path}: missing '# total_documents: N' header")
        return cls(doc_count, df)

    @classmethod
    def bundled(cls) -> "BackgroundFrequencies":
        return cls.load(_data_path("background_df.tsv"))

    def idf(self, token: str) -> float:
        df = self._df.get(token.lower())
        if df is None:
            return self._max_idf
        return math.log((self.doc_count + 1) / (df + 1)) + 1.0


# --- NLU JSON import --------------------------------------------------------

def _read_score(item: Mapping, field_name: str, source: str) -> float:
    if field_name not in item:
        raise SchemaError(f"{source}: missing field {field_name!r}")
    value = item[field_name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise RangeError(f"{source}: field {field_name!r} is not numeric: {value!r}")
    return float(value)


def _term_from_item(item: Mapping, kind: str, source: str) -> KeyTerm:
    if "text" not in item:
        raise SchemaError(f"{source}: missing field 'text'")
    relevance = _clamp(_read_score(item, "relevance", source), 0.0, 1.0)
    sentiment = 0.0
    if isinstance(item.get("sentiment"), Mapping) and "score" in item["sentiment"]:
        sentiment = _clamp(_read_score(item["sentiment"], "score", source), -1.0, 1.0)
    emotions = {}
    if isinstance(item.get("emotion"), Mapping):
        for name in EMOTIONS:
            if name in item["emotion"]:
                emotions[name] = _clamp(_read_score(item["emotion"], name, source), 0.0, 1.0)
    return KeyTerm(item["text"], kind, relevance, sentiment, emotions)


def import_nlu_json(entities_doc: Mapping, keywords_doc: Mapping) -> list[KeyTerm]:
    """Merge an entities document and a keywords document into key terms.

    Terms are keyed by case-folded surface; when the same term appears in
    both documents the entity record wins. Scores are clamped into their
    legal ranges. Output is sorted by relevance (desc), then surface.
    """
    if "entities" not in entities_doc:
        raise SchemaError("entities document: missing field 'entities'")
    if "keywords" not in keywords_doc:
        raise SchemaError("keywords document: missing field 'keywords'")

    merged: dict[str, KeyTerm] = {}
    for item in keywords_doc["keywords"]:
        term = _term_from_item(item, "keyword", "keywords")
        merged[term.surface.casefold()] = term
    for item in entities_doc["entities"]:
        term = _term_from_item(item, "entity", "entities")
        merged[term.surface.casefold()] = term  # entity version wins
    return sorted(merged.values(), key=lambda t: (-t.relevance, t.surface))


def read_nlu_files(entities_path: str | Path, keywords_path: str | Path) -> list[KeyTerm]:
    entities = json.loads(Path(entities_path).read_text(encoding="utf-8"))
    keywords = json.loads(Path(keywords_path).read_text(encoding="utf-8"))
    return import_nlu_json(entities, keywords)


# --- built-in extractor ------------------------------------------------------

@dataclass(frozen=True)
class ExtractParams:
    max_terms: int = 150
    ngram_max: int = 2
    window: int = 10


def _candidate_ngrams(tokens: list[str], stopwords: frozenset, ngram_max: int):
    """Stopword-free n-grams; tokens need a letter and at least 2 chars.

    Yields (surface, start_index, n) for every occurrence.
    """
    ok = [
        len(t) > 1 and t not in stopwords and any(c.isalpha() for c in t)
        for t in tokens
    ]
    for n in range(1, ngram_max + 1):
        for i in range(len(tokens) - n + 1):
            if all(ok[i:i + n]):
                yield " ".join(tokens[i:i + n]), i, n


def extract_keyterms(
    doc: SpeakerDocument | str,
    lex: Lexicons,
    params: ExtractParams = ExtractParams(),
    background: BackgroundFrequencies | None = None,
) -> list[KeyTerm]:
    """Extract scored key terms from one document.

    Ranking: ``tf(ngram) * mean(idf(token))`` with IDF from the background
    table; relevances are divided by the best raw score so the top term is
    exactly 1.0. Ties break lexicographically by surface. Sentiment is the
    mean lexicon polarity of tokens within ``window`` positions of each
    occurrence (the occurrence's own tokens included); emotion intensity is
    ``m / (m + 1)`` where m is the mean per-occurrence count of emotion
    hits in the same windows, so absent evidence stays exactly 0.
    """
    if params.ngram_max < 1:
        raise ValueError("ngram_max must be >= 1")
    text = doc.text if isinstance(doc, SpeakerDocument) else doc
    tokens = tokenize(text)
    if not tokens:
        raise EmptyDocument("document has no tokens")
    if background is None:
        background = BackgroundFrequencies.bundled()

    occurrences: dict[str, list[tuple[int, int]]] = {}
    for surface, start, n in _candidate_ngrams(tokens, lex.stopwords, params.ngram_max):
        occurrences.setdefault(surface, []).append((start, n))
    if not occurrences:
        raise EmptyDocument("no candidate terms after stopword filtering")

    scored: list[tuple[float, str]] = []
    for surface, occs in occurrences.items():
        parts = surface.split(" ")
        idf = sum(background.idf(p) for p in parts) / len(parts)
        scored.append((len(occs) * idf, surface))
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    top = scored[: params.max_terms]
    max_score = top[0][0]

    terms = []
    for raw, surface in top:
        sentiment, emotions = _window_scores(
            tokens, occurrences[surface], params.window, lex
        )
        terms.append(
            KeyTerm(surface, "keyword", raw / max_score, sentiment, emotions)
        )
    return terms


def _window_scores(
    tokens: list[str],
    occs: list[tuple[int, int]],
    window: int,
    lex: Lexicons,
) -> tuple[float, dict[str, float]]:
    """Sentiment and emotion evidence around each occurrence of a term."""
    polarities: list[float] = []
    hit_counts = {e: 0 for e in EMOTIONS}
    for start, n in occs:
        lo = max(0, start - window)
        hi = min(len(tokens), start + n + window)
        for tok in tokens[lo:hi]:
            if tok in lex.sentiment:
                polarities.append(lex.sentiment[tok])
            for emotion in lex.emotion.get(tok, ()):
                hit_counts[emotion] += 1
    sentiment = _clamp(sum(polarities) / len(polarities), -1.0, 1.0) if polarities else 0.0
    emotions = {}
    for e in EMOTIONS:
        mean_hits = hit_counts[e] / len(occs)
        emotions[e] = mean_hits / (mean_hits + 1.0)
    return sentiment, emotions


# --- keyterms document I/O ---------------------------------------------------

def keyterms_to_json(source: str, terms: Iterable[KeyTerm]) -> dict:
    return {"source": source, "terms": [t.to_dict() for t in terms]}

def keyterms_from_json(payload: Mapping) -> tuple[str, list[KeyTerm]]:
    return payload["source"], [KeyTerm.from_dict(t) for t in payload["terms"]]
