#!/usr/bin/env python3
"""Produce the shareable artifacts (projector TSV pair, word-cloud JSON,
PCA coordinates), assemble a servable workspace, and query it in-process."""

import json
import shutil
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from footprints.corpus import ingest, load_corpus_config
from footprints.export import write_projection, write_projector, write_wordcloud
from footprints.footprint import build_footprint, theme_clusters
from footprints.nlu import bundled_lexicons, extract_keyterms
from footprints.server import create_app, load_workspace
from footprints.vsm import load_vectors

ROOT = Path(__file__).resolve().parent.parent
work = Path(tempfile.mkdtemp(prefix="footprints_demo_"))
print(f"working in {work}")

# Build a workspace: vectors + one footprint per speaker.
shutil.copy(ROOT / "data" / "demo" / "vectors_demo.txt", work / "vectors.txt")
space = load_vectors(work / "vectors.txt")
config = load_corpus_config(ROOT / "tests" / "fixtures" / "debate.ini")
raw = (ROOT / "tests" / "fixtures" / "debate_small.txt").read_bytes()
(work / "footprints").mkdir()
for doc in ingest(raw, config):
    terms = extract_keyterms(doc.text, bundled_lexicons())
    fp = build_footprint(terms, space, source=doc.speaker, space_id="vectors.txt")
    (work / "footprints" / f"{doc.speaker}.json").write_text(
        json.dumps(fp.to_dict(), indent=2)
    )

    out_dir = work / "artifacts" / doc.speaker
    write_projector(fp, out_dir)
    write_wordcloud(theme_clusters(fp, num_seeds=3, k=4), out_dir / "wordcloud.json")
    write_projection(fp, out_dir / "projection.json")
    print(f"{doc.speaker}: wrote vectors.tsv / metadata.tsv / wordcloud.json / projection.json")

print("\nvectors.tsv starts like this (load it into any embedding projector):")
print("\n".join(
    line[:68] + "..."
    for line in (work / "artifacts" / "TRUMP" / "vectors.tsv").read_text().splitlines()[:2]
))

# The same workspace serves the exploration UI; exercise it in-process here.
workspace = load_workspace(work)
client = TestClient(create_app(workspace))
print("\nGET /api/footprints ->", client.get("/api/footprints").json())
theme = client.get("/api/theme/values?n=5").json()
print("\nGET /api/theme/values?n=5 ->")
for candidate in theme["candidates"]:
    print(f"  {candidate['similarity']:.3f} {candidate['token']:12s} {candidate['usage']}")

print("\nto serve this workspace for real:")
print(f"  footprint serve --workspace {work} --bind 127.0.0.1:8000")
