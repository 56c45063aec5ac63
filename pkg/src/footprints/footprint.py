"""Political footprints and the three comparison heuristics over them.

A footprint is a document's scored key terms, each placed in a shared
vector space. On top of that one object sit three analysis moves:
within-discourse theme clusters around the most relevant terms, global
theme words cross-referenced against who uses them (with per-speaker
drilldown), and whole-footprint centroid distances. A relevance-weighted
spherical k-means rounds out the clustering side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .corpus import tokenize
from .errors import (
    EmptyInput,
    KTooLarge,
    NothingEmbeddable,
    SeedNotInFootprint,
    ThemeNotInSpace,
    ZeroVector,
    ZeroWeightSum,
)
from .nlu import KeyTerm
from .vsm import EmbeddedTerm, VectorSpace, centroid, cosine, embed_term, lookup, nearest


@dataclass(frozen=True)
class FootprintTerm:
    """One key term with its placement in the space."""

    key: KeyTerm
    embedded: EmbeddedTerm

    def __post_init__(self):
        if self.key.surface != self.embedded.surface:
            raise ValueError("key and embedding describe different surfaces")

    @property
    def surface(self) -> str:
        return self.key.surface

    @property
    def vector(self) -> np.ndarray:
        return self.embedded.vector

    @property
    def relevance(self) -> float:
        return self.key.relevance

    def to_dict(self) -> dict:
        payload = self.key.to_dict()
        payload["vector"] = [float(x) for x in self.embedded.vector]
        payload["synthetic"] = self.embedded.synthetic
        return payload

    @classmethod
    def from_dict(cls, payload: Mapping) -> "FootprintTerm":
        key = KeyTerm.from_dict(payload)
        vector = np.asarray(payload["vector"], dtype=np.float64)
        embedded = EmbeddedTerm(
            surface=key.surface,
            vector=vector,
            synthetic=bool(payload.get("synthetic", False)),
        )
        return cls(key, embedded)


@dataclass(frozen=True)
class Footprint:
    """A speaker/document's embedded key terms."""

    source: str
    space_id: str
    terms: tuple[FootprintTerm, ...]
    dropped: tuple[str, ...] = ()   # surfaces that could not be embedded

    def __len__(self) -> int:
        return len(self.terms)

    def find(self, surface: str) -> FootprintTerm | None:
        folded = surface.casefold()
        for term in self.terms:
            if term.surface.casefold() == folded:
                return term
        return None

    def token_set(self) -> frozenset:
        """Case-folded tokens of every surface, components of synthetic
        terms included (how heuristic-2 usage matching sees this footprint)."""
        out: set = set()
        for term in self.terms:
            out.update(tokenize(term.surface))
        return frozenset(out)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "space_id": self.space_id,
            "terms": [t.to_dict() for t in self.terms],
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> "Footprint":
        return cls(
            source=payload["source"],
            space_id=payload.get("space_id", ""),
            terms=tuple(FootprintTerm.from_dict(t) for t in payload["terms"]),
        )


@dataclass(frozen=True)
class ThemeCluster:
    """A seed term plus its nearest co-footprint terms."""

    seed: FootprintTerm
    members: tuple[tuple[FootprintTerm, float], ...]


@dataclass(frozen=True)
class ThemeComparison:
    """A theme word's global neighbors with per-footprint usage flags."""

    theme: str
    candidates: tuple[tuple[str, float, dict], ...]   # (token, similarity, {source: used})


@dataclass(frozen=True)
class DistanceReport:
    """Pairwise cosine distances between footprint centroids."""

    ids: tuple[str, ...]
    matrix: np.ndarray       # symmetric, zero diagonal, entries in [0, 2]
    weighting: str

    def to_dict(self) -> dict:
        return {
            "ids": list(self.ids),
            "weighting": self.weighting,
            "matrix": [[float(x) for x in row] for row in self.matrix],
        }


def build_footprint(
    keyterms: Sequence[KeyTerm],
    space: VectorSpace,
    policy: str = "average",
    source: str = "",
    space_id: str | None = None,
) -> Footprint:
    """Embed key terms into a footprint.

    Duplicate surfaces (after case-folding) keep the record with the
    higher relevance; terms that cannot be embedded are dropped and
    reported on ``Footprint.dropped``. Raises NothingEmbeddable when no
    term survives.
    """
    if not keyterms:
        raise EmptyInput("no key terms")
    best: dict[str, KeyTerm] = {}
    for term in sorted(keyterms, key=lambda t: (-t.relevance, t.surface)):
        best.setdefault(term.surface.casefold(), term)

    terms: list[FootprintTerm] = []
    dropped: list[str] = []
    for term in sorted(best.values(), key=lambda t: (-t.relevance, t.surface)):
        embedded = embed_term(space, term.surface, policy)
        if embedded is None:
            dropped.append(term.surface)
        else:
            terms.append(FootprintTerm(term, embedded))
    if not terms:
        raise NothingEmbeddable(f"none of the {len(keyterms)} terms embeds")
    return Footprint(
        source=source,
        space_id=space_id if space_id is not None else space.source,
        terms=tuple(terms),
        dropped=tuple(dropped),
    )


def _cluster_around(fp: Footprint, seed: FootprintTerm, k: int) -> ThemeCluster:
    seed_norm = np.linalg.norm(seed.vector)
    scored = []
    for term in fp.terms:
        if term.surface == seed.surface:
            continue
        norm = np.linalg.norm(term.vector)
        if seed_norm == 0.0 or norm == 0.0:
            continue
        sim = float(np.dot(seed.vector, term.vector) / (seed_norm * norm))
        scored.append((term, min(1.0, max(-1.0, sim))))
    scored.sort(key=lambda pair: (-pair[1], pair[0].surface))
    return ThemeCluster(seed=seed, members=tuple(scored[:k]))


def theme_clusters(fp: Footprint, num_seeds: int = 10, k: int = 10) -> list[ThemeCluster]:
    """Heuristic 1: cluster the footprint around its most relevant terms.

    Seeds are the top ``num_seeds`` terms by relevance; each cluster's
    members are the ``k`` nearest terms *from the footprint itself* (the
    discourse's own vocabulary, not the global space).
    """
    if num_seeds < 1 or k < 1:
        raise ValueError("num_seeds and k must be >= 1")
    seeds = sorted(fp.terms, key=lambda t: (-t.relevance, t.surface))[:num_seeds]
    return [_cluster_around(fp, seed, k) for seed in seeds]


def neighbors_of(fp: Footprint, seed_surface: str, k: int = 10) -> ThemeCluster:
    """A single heuristic-1 cluster around an arbitrary in-footprint term."""
    seed = fp.find(seed_surface)
    if seed is None:
        raise SeedNotInFootprint(f"{seed_surface!r} is not in footprint {fp.source!r}")
    return _cluster_around(fp, seed, k)


def global_neighbors(
    space: VectorSpace, fp: Footprint, seed_surface: str, k: int = 10
) -> list[tuple[str, float]]:
    """Exploration variant of neighbors_of: search the whole space.

    Returns space tokens, not footprint terms; the default restricted
    search is what the figure conventions use.
    """
    seed = fp.find(seed_surface)
    if seed is None:
        raise SeedNotInFootprint(f"{seed_surface!r} is not in footprint {fp.source!r}")
    return nearest(space, seed.vector, k, exclude=set(tokenize(seed.surface)))


def compare_theme(
    space: VectorSpace,
    fps: Sequence[Footprint],
    theme: str,
    n: int = 20,
) -> ThemeComparison:
    """Heuristic 2: the theme's n nearest space tokens, flagged per speaker.

    Candidates come from a global vector-space search; a footprint's flag
    is set when the candidate token appears among its surface tokens
    (components of synthetic terms count).
    """
    if not fps:
        raise EmptyInput("compare_theme needs at least one footprint")
    theme_norm = space.normalize_token(theme)
    vec = lookup(space, theme_norm)
    if vec is None:
        raise ThemeNotInSpace(f"{theme!r} is not in the vector space")
    token_sets = {fp.source: fp.token_set() for fp in fps}
    candidates = []
    for token, sim in nearest(space, vec, n, exclude={theme_norm}):
        usage = {source: token in tokens for source, tokens in token_sets.items()}
        candidates.append((token, sim, usage))
    return ThemeComparison(theme=theme_norm, candidates=tuple(candidates))


def drilldown(
    space: VectorSpace,
    fps: Sequence[Footprint],
    chosen: str,
    k: int = 10,
) -> dict[str, ThemeCluster]:
    """Heuristic 2, step two: per-speaker clusters around a chosen term.

    Footprints that do not use the term are simply absent from the result.
    When several terms of a footprint match the token, the most relevant
    one seeds the cluster.
    """
    chosen_norm = space.normalize_token(chosen)
    if chosen_norm not in space:
        raise ThemeNotInSpace(f"{chosen!r} is not in the vector space")
    out: dict[str, ThemeCluster] = {}
    for fp in fps:
        matches = [t for t in fp.terms if chosen_norm in tokenize(t.surface)]
        if not matches:
            continue
        exact = [t for t in matches if t.surface.casefold() == chosen_norm]
        pool = exact or matches
        seed = sorted(pool, key=lambda t: (-t.relevance, t.surface))[0]
        out[fp.source] = _cluster_around(fp, seed, k)
    return out


def footprint_centroid(fp: Footprint, weighting: str = "uniform") -> np.ndarray:
    """Heuristic 3 ingredient: the footprint's center of gravity."""
    if weighting not in ("uniform", "relevance"):
        raise ValueError(f"unknown weighting {weighting!r}")
    if not fp.terms:
        raise EmptyInput("footprint has no terms")
    vectors = [t.vector for t in fp.terms]
    if weighting == "uniform":
        return centroid(vectors)
    return centroid(vectors, [t.relevance for t in fp.terms])


def distance_matrix(fps: Sequence[Footprint], weighting: str = "uniform") -> DistanceReport:
    """Heuristic 3: pairwise cosine distances between footprint centroids."""
    if len(fps) < 2:
        raise EmptyInput("distance matrix needs at least 2 footprints")
    centroids = [footprint_centroid(fp, weighting) for fp in fps]
    n = len(fps)
    matrix = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = 1.0 - cosine(centroids[i], centroids[j])
            d = min(2.0, max(0.0, d))
            matrix[i, j] = d
            matrix[j, i] = d
    return DistanceReport(
        ids=tuple(fp.source for fp in fps), matrix=matrix, weighting=weighting
    )


@dataclass(frozen=True)
class KMeansCluster:
    members: tuple[FootprintTerm, ...]
    centroid: np.ndarray


@dataclass(frozen=True)
class KMeansResult:
    clusters: tuple[KMeansCluster, ...]
    objective: tuple[float, ...]   # weighted within-cluster SSQ per iteration
    iterations: int


def _kmeans_pp_init(
    points: np.ndarray, k: int, rng: np.random.Generator
) -> np.ndarray:
    n = points.shape[0]
    centers = [int(rng.integers(n))]
    for _ in range(k - 1):
        diff = points[:, None, :] - points[centers][None, :, :]
        d2 = np.min(np.sum(diff * diff, axis=2), axis=1)
        total = d2.sum()
        if total <= 0.0:
            remaining = [i for i in range(n) if i not in centers]
            centers.append(int(rng.choice(remaining)))
        else:
            centers.append(int(rng.choice(n, p=d2 / total)))
    return points[centers].copy()


def kmeans(
    fp: Footprint,
    k: int,
    weighted: bool = False,
    rng_seed: int = 0,
    max_iter: int = 100,
    tol: float = 1e-6,
) -> KMeansResult:
    """Spherical k-means over the footprint's terms.

    Term vectors are length-normalized once, then plain Lloyd iterations
    run with Euclidean assignments and mean updates; the weighted variant
    scales each point's contribution to centroid updates by its relevance
    (assignments are unaffected). Initialization is k-means++ seeded by
    ``rng_seed``; an emptied cluster is re-seeded from the point farthest
    from its assigned centroid. The weighted within-cluster sum of squared
    distances is recorded per iteration and asserted non-increasing.
    """
    n = len(fp.terms)
    if k < 1 or k > n:
        raise KTooLarge(f"k={k} outside [1, {n}]")
    raw = np.stack([t.vector for t in fp.terms]).astype(np.float64)
    norms = np.linalg.norm(raw, axis=1)
    if np.any(norms == 0.0):
        raise ZeroVector("cannot length-normalize a zero term vector")
    points = raw / norms[:, None]
    weights = (
        np.array([t.relevance for t in fp.terms], dtype=np.float64)
        if weighted
        else np.ones(n)
    )
    if weighted and weights.sum() == 0.0:
        raise ZeroWeightSum("all relevances are zero")

    rng = np.random.default_rng(rng_seed)
    centers = _kmeans_pp_init(points, k, rng)

    objective: list[float] = []
    assignments = np.zeros(n, dtype=int)
    for iteration in range(max_iter):
        diff = points[:, None, :] - centers[None, :, :]
        d2 = np.sum(diff * diff, axis=2)
        assignments = np.argmin(d2, axis=1)

        obj = float(np.sum(weights * d2[np.arange(n), assignments]))
        if objective and obj > objective[-1] + 1e-9:
            raise AssertionError("k-means objective increased")
        objective.append(obj)

        new_centers = centers.copy()
        point_dist = d2[np.arange(n), assignments].copy()
        for c in range(k):
            mask = assignments == c
            if not np.any(mask):
                farthest = int(np.argmax(point_dist))
                point_dist[farthest] = -1.0   # not reusable for another empty cluster
                new_centers[c] = points[farthest]
                continue
            w = weights[mask]
            if w.sum() == 0.0:
                continue   # zero total weight cannot move this centroid
            new_centers[c] = (points[mask] * w[:, None]).sum(axis=0) / w.sum()
        movement = float(np.max(np.linalg.norm(new_centers - centers, axis=1)))
        centers = new_centers
        if movement < tol:
            break

    clusters = []
    for c in range(k):
        members = tuple(fp.terms[i] for i in range(n) if assignments[i] == c)
        clusters.append(KMeansCluster(members=members, centroid=centers[c]))
    return KMeansResult(
        clusters=tuple(clusters),
        objective=tuple(objective),
        iterations=len(objective),
    )
