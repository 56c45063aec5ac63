"""Pre-trained word-vector space: loading, similarity, neighbors, centroids, PCA.

The space is one contiguous (vocab x dim) matrix plus a token -> row map;
queries scan that matrix flat, so exact top-k stays fast at desk scale
(a 400k x 300 vocabulary scans in well under a second) and stays trivially
comparable against a brute-force oracle. Values are parsed at float32
precision but held in a float64 matrix so every accumulation (cosine,
matmul scans, centroids) runs in 64-bit without copying at query time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .corpus import tokenize
from .errors import (
    DegenerateData,
    DimMismatch,
    EmptyFile,
    EmptyInput,
    ParseError,
    ZeroVector,
    ZeroWeightSum,
)

_PCA_TOL = 1e-9
_PCA_MAX_ITER = 10000


@dataclass(frozen=True)
class VectorSpace:
    """Immutable token -> vector map over a contiguous matrix."""

    dim: int
    tokens: tuple[str, ...]
    index: dict[str, int]
    matrix: np.ndarray          # (n, dim) float64, C-contiguous, read-only
    norms: np.ndarray           # (n,) float64 row norms
    normalization: str = "lower"   # "lower" | "none"
    rejected_lines: int = 0
    source: str = ""

    def __len__(self) -> int:
        return len(self.tokens)

    def normalize_token(self, token: str) -> str:
        return token.lower() if self.normalization == "lower" else token

    def __contains__(self, token: str) -> bool:
        return self.normalize_token(token) in self.index


def build_space(
    entries: Iterable[tuple[str, Sequence[float]]],
    normalization: str = "lower",
    rejected_lines: int = 0,
    source: str = "",
) -> VectorSpace:
    """Assemble a VectorSpace from (token, vector) pairs.

    Values are rounded through float32 first (file precision) and stored
    in float64. Duplicate tokens after normalization keep the first entry.
    """
    tokens: list[str] = []
    index: dict[str, int] = {}
    rows: list[np.ndarray] = []
    dim = None
    for token, values in entries:
        norm_tok = token.lower() if normalization == "lower" else token
        if norm_tok in index:
            continue
        row = np.asarray(values, dtype=np.float32).astype(np.float64)
        if dim is None:
            dim = row.shape[0]
        elif row.shape[0] != dim:
            raise ValueError(f"vector for {token!r} has dim {row.shape[0]}, expected {dim}")
        if not np.all(np.isfinite(row)):
            raise ValueError(f"vector for {token!r} has non-finite components")
        index[norm_tok] = len(tokens)
        tokens.append(norm_tok)
        rows.append(row)
    if not rows:
        raise EmptyFile("no vectors")
    matrix = np.ascontiguousarray(np.vstack(rows))
    matrix.setflags(write=False)
    norms = np.linalg.norm(matrix, axis=1)
    norms.setflags(write=False)
    return VectorSpace(
        dim=dim,
        tokens=tuple(tokens),
        index=index,
        matrix=matrix,
        norms=norms,
        normalization=normalization,
        rejected_lines=rejected_lines,
        source=source,
    )


def load_vectors(
    path: str | Path,
    expected_dim: int | None = None,
    normalization: str = "lower",
) -> VectorSpace:
    """Load a GloVe-format text file: ``token f1 f2 ... fd`` per line.

    An optional FastText-style count/dim header line is detected and
    skipped. Dimensionality is inferred from the first data line; lines
    with the wrong number of fields are rejected (count kept on the
    returned space); unparseable or non-finite floats raise ParseError
    with the offending line number.
    """
    path = Path(path)
    raw = path.read_bytes()
    if not raw.strip():
        raise EmptyFile(f"{path} is empty")

    entries: list[tuple[str, np.ndarray]] = []
    dim = None
    rejected = 0
    lines = raw.splitlines()
    start = 0
    first_fields = lines[0].split(b" ")
    if len(first_fields) == 2:
        try:
            int(first_fields[0]), int(first_fields[1])
            start = 1  # FastText header
        except ValueError:
            pass

    for lineno, line_bytes in enumerate(lines[start:], start=start + 1):
        if not line_bytes.strip():
            continue
        try:
            line = line_bytes.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}", lineno) from exc
        fields = line.rstrip().split(" ")
        if dim is None:
            if len(fields) < 2:
                raise ParseError("first data line has no vector components", lineno)
            dim = len(fields) - 1
            if expected_dim is not None and dim != expected_dim:
                raise DimMismatch(f"{path}: dim {dim}, expected {expected_dim}")
        if len(fields) != dim + 1:
            rejected += 1
            continue
        try:
            row = np.array(fields[1:], dtype=np.float32)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        if not np.all(np.isfinite(row)):
            raise ParseError("non-finite vector component", lineno)
        entries.append((fields[0], row))

    if not entries:
        raise EmptyFile(f"{path} has no data lines")
    return build_space(
        entries, normalization=normalization, rejected_lines=rejected, source=str(path)
    )


def lookup(space: VectorSpace, token: str) -> np.ndarray | None:
    """Exact-match vector for a token after normalization; None if absent."""
    row = space.index.get(space.normalize_token(token))
    if row is None:
        return None
    return space.matrix[row]


@dataclass(frozen=True)
class EmbeddedTerm:
    """A term placed in the space; synthetic when averaged from parts."""

    surface: str
    vector: np.ndarray
    synthetic: bool = False
    missing_parts: tuple[str, ...] = ()


def embed_term(
    space: VectorSpace, surface: str, policy: str = "average"
) -> EmbeddedTerm | None:
    """Embed a (possibly multiword) term; None when nothing is embeddable.

    Multiword terms have no vector of their own in word-based spaces, so
    under ``average`` they get the mean of their component vectors and are
    flagged synthetic; ``first`` takes the first found component; ``skip``
    refuses multiword terms outright. Components not in the space are
    reported in ``missing_parts``.
    """
    if policy not in ("average", "first", "skip"):
        raise ValueError(f"unknown embed policy {policy!r}")
    parts = tokenize(surface)
    if not parts:
        return None

    if len(parts) == 1:
        vec = lookup(space, parts[0])
        if vec is None:
            return None
        return EmbeddedTerm(surface, vec, synthetic=False, missing_parts=())

    if policy == "skip":
        return None
    found = [(p, lookup(space, p)) for p in parts]
    missing = tuple(p for p, v in found if v is None)
    vectors = [v for _, v in found if v is not None]
    if not vectors:
        return None
    if policy == "first":
        vec = vectors[0]
    else:
        vec = np.mean(np.stack(vectors), axis=0)
    return EmbeddedTerm(surface, vec, synthetic=True, missing_parts=missing)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity in [-1, 1], accumulated in float64."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dim mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ZeroVector("cosine undefined for zero vectors")
    if np.array_equal(u, v):
        return 1.0   # exact by definition; spares equal centroids a stray ulp
    return float(min(1.0, max(-1.0, np.dot(u, v) / (nu * nv))))


def nearest(
    space: VectorSpace,
    query: np.ndarray,
    k: int,
    exclude: Iterable[str] = (),
) -> list[tuple[str, float]]:
    """Exact top-k tokens by cosine similarity to ``query``, descending.

    Full flat scan, no approximation. Ties break lexicographically by
    token. ``exclude`` tokens (normalized) are left out of the ranking.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    q = np.asarray(query, dtype=np.float64)
    qnorm = np.linalg.norm(q)
    if qnorm == 0.0:
        raise ZeroVector("nearest undefined for a zero query vector")

    sims = (space.matrix @ q) / (space.norms * qnorm)
    np.clip(sims, -1.0, 1.0, out=sims)
    excluded_rows = [
        space.index[t]
        for t in (space.normalize_token(e) for e in exclude)
        if t in space.index
    ]
    if excluded_rows:
        sims = sims.copy()
        sims[excluded_rows] = -np.inf

    n = sims.shape[0]
    k_eff = min(k, n - len(excluded_rows))
    if k_eff <= 0:
        return []
    if k_eff == n:
        candidates = np.arange(n)
    else:
        threshold = np.partition(sims, n - k_eff)[n - k_eff]
        candidates = np.nonzero(sims >= threshold)[0]
    ranked = sorted(candidates, key=lambda i: (-sims[i], space.tokens[i]))[:k_eff]
    return [(space.tokens[i], float(sims[i])) for i in ranked]


def centroid(
    vectors: Sequence[np.ndarray], weights: Sequence[float] | None = None
) -> np.ndarray:
    """Weighted arithmetic mean of vectors (uniform when weights omitted)."""
    if len(vectors) == 0:
        raise EmptyInput("centroid of nothing")
    stack = np.asarray(np.stack([np.asarray(v, dtype=np.float64) for v in vectors]))
    if weights is None:
        return stack.mean(axis=0)
    w = np.asarray(weights, dtype=np.float64)
    if w.shape[0] != stack.shape[0]:
        raise ValueError("weights length differs from vector count")
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    total = w.sum()
    if total == 0.0:
        raise ZeroWeightSum("weights sum to zero")
    # normalize first: keeps the single-point identity exact (w/total == 1)
    return (stack * (w / total)[:, None]).sum(axis=0)


def _power_iteration(cov: np.ndarray, rng: np.random.Generator) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a PSD matrix by plain power iteration."""
    d = cov.shape[0]
    v = rng.standard_normal(d)
    v /= np.linalg.norm(v)
    for _ in range(_PCA_MAX_ITER):
        w = cov @ v
        norm = np.linalg.norm(w)
        if norm < 1e-300:
            return v, 0.0
        w /= norm
        if np.linalg.norm(w - v) < _PCA_TOL:
            v = w
            break
        v = w
    eigval = float(v @ cov @ v)
    return v, eigval


def _orthogonal_unit(v: np.ndarray) -> np.ndarray:
    """Any deterministic unit vector orthogonal to v."""
    d = v.shape[0]
    for i in range(d):
        e = np.zeros(d)
        e[i] = 1.0
        w = e - (e @ v) * v
        norm = np.linalg.norm(w)
        if norm > 1e-12:
            return w / norm
    raise DegenerateData("cannot build an orthogonal direction")


def pca_2d(vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Project points onto their top-2 principal directions.

    Plain covariance PCA via iterated power method with deflation
    (tolerance 1e-9, at most 10000 iterations per component). Sign
    convention: each component's largest-magnitude loading is positive.
    Returns an (n, 2) float64 array of coordinates.
    """
    if len(vectors) < 2:
        raise ValueError("pca_2d needs at least 2 vectors")
    X = np.stack([np.asarray(v, dtype=np.float64) for v in vectors])
    Xc = X - X.mean(axis=0)
    cov = (Xc.T @ Xc) / (X.shape[0] - 1)
    scale = max(1.0, float(np.abs(X).max()) ** 2)
    if float(np.trace(cov)) <= 1e-15 * scale:
        raise DegenerateData("zero variance in every direction")

    rng = np.random.default_rng(0)
    components = []
    deflated = cov.copy()
    for _ in range(2):
        vec, eigval = _power_iteration(deflated, rng)
        if eigval <= 1e-12 * float(np.trace(cov)):
            vec = _orthogonal_unit(components[0]) if components else vec
            eigval = 0.0
        peak = int(np.argmax(np.abs(vec)))
        if vec[peak] < 0:
            vec = -vec
        components.append(vec)
        deflated = deflated - eigval * np.outer(vec, vec)
    basis = np.stack(components, axis=1)   # (dim, 2)
    return Xc @ basis
