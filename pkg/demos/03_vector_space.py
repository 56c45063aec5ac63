#!/usr/bin/env python3
"""Vector-space queries on the bundled demo space: lookup, cosine,
exact top-k neighbors, compound-noun embedding, centroids and 2-D PCA.

Swap the path for a real glove.6B file to run this at full scale; the demo
space is a tiny synthetic stand-in with the same file format.
"""

from pathlib import Path

import numpy as np

from footprints.vsm import centroid, cosine, embed_term, load_vectors, lookup, nearest, pca_2d

ROOT = Path(__file__).resolve().parent.parent

space = load_vectors(ROOT / "data" / "demo" / "vectors_demo.txt")
print(f"loaded {len(space)} tokens x {space.dim} dims from {Path(space.source).name}")

print("\ncosine('jobs', 'workers') =", round(cosine(lookup(space, "jobs"), lookup(space, "workers")), 4))
print("cosine('jobs', 'war')     =", round(cosine(lookup(space, "jobs"), lookup(space, "war")), 4))

print("\n10 nearest to 'values':")
for token, sim in nearest(space, lookup(space, "values"), 10, exclude={"values"}):
    print(f"  {sim:6.3f}  {token}")

print("\ncompound nouns are averaged from their parts and flagged synthetic:")
term = embed_term(space, "wall street")
print(f"  'wall street' -> synthetic={term.synthetic}, missing_parts={term.missing_parts}")
mean = (lookup(space, "wall") + lookup(space, "street")) / 2
print("  equals mean(v_wall, v_street):", bool(np.allclose(term.vector, mean)))

print("\ncentroid of the security cluster:")
words = ["war", "military", "defense"]
c = centroid([lookup(space, w) for w in words])
nearest_to_c = nearest(space, c, 4, exclude=set(words))
print(f"  nearest tokens to centroid({words}): {[t for t, _ in nearest_to_c]}")

print("\n2-D PCA of the whole demo space (first 5 points):")
coords = pca_2d([space.matrix[i] for i in range(len(space))])
for token, (x, y) in list(zip(space.tokens, coords))[:5]:
    print(f"  {token:12s} ({x:+.3f}, {y:+.3f})")
