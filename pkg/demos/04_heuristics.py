#!/usr/bin/env python3
"""The three analysis heuristics end to end on the bundled debate fixture:
theme clusters, cross-speaker theme comparison with drilldown, and
centroid distances (plus the relevance-weighted k-means variant)."""

from pathlib import Path

from footprints.corpus import ingest, load_corpus_config
from footprints.footprint import (
    build_footprint,
    compare_theme,
    distance_matrix,
    drilldown,
    kmeans,
    theme_clusters,
)
from footprints.nlu import bundled_lexicons, extract_keyterms
from footprints.vsm import load_vectors

ROOT = Path(__file__).resolve().parent.parent

space = load_vectors(ROOT / "data" / "demo" / "vectors_demo.txt")
config = load_corpus_config(ROOT / "tests" / "fixtures" / "debate.ini")
raw = (ROOT / "tests" / "fixtures" / "debate_small.txt").read_bytes()

footprints = []
for doc in ingest(raw, config):
    terms = extract_keyterms(doc.text, bundled_lexicons())
    fp = build_footprint(terms, space, source=doc.speaker)
    print(f"{doc.speaker}: footprint of {len(fp)} terms "
          f"({len(fp.dropped)} dropped as out-of-vocabulary: {fp.dropped})")
    footprints.append(fp)

print("\n=== heuristic 1: clusters around each speaker's top terms ===")
for fp in footprints:
    print(f"\n{fp.source}:")
    for cluster in theme_clusters(fp, num_seeds=2, k=3):
        members = ", ".join(f"{t.surface} ({s:.2f})" for t, s in cluster.members)
        print(f"  {cluster.seed.surface:12s} -> {members}")

print("\n=== heuristic 2: who uses the words closest to 'values'? ===")
comparison = compare_theme(space, footprints, "values", n=8)
for token, sim, usage in comparison.candidates:
    users = [src for src, used in usage.items() if used] or ["-"]
    print(f"  {sim:6.3f}  {token:14s} used by: {', '.join(users)}")

print("\n...then drill into a shared term ('trade'):")
for source, cluster in drilldown(space, footprints, "trade", k=3).items():
    members = ", ".join(t.surface for t, _ in cluster.members)
    print(f"  {source:8s} {cluster.seed.surface} -> {members}")

print("\n=== heuristic 3: centroid distances ===")
for weighting in ["uniform", "relevance"]:
    report = distance_matrix(footprints, weighting)
    d = report.matrix[0, 1]
    print(f"  {weighting:9s} distance({report.ids[0]}, {report.ids[1]}) = {d:.4f}")

print("\n=== relevance-weighted spherical k-means (k=3) ===")
result = kmeans(footprints[0], k=3, weighted=True, rng_seed=0)
print(f"objective per iteration: {[round(o, 3) for o in result.objective]}")
for i, cluster in enumerate(result.clusters):
    print(f"  cluster {i}: {[t.surface for t in cluster.members][:6]}")
