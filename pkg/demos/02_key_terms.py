#!/usr/bin/env python3
"""Score key terms two ways: the built-in extractor on the Kyoto Protocol,
and an import of NLU-service JSON (entities win collisions)."""

import json
from pathlib import Path

from footprints.nlu import bundled_lexicons, extract_keyterms, import_nlu_json

ROOT = Path(__file__).resolve().parent.parent

print("=== built-in extractor on the Kyoto Protocol ===")
text = (ROOT / "data" / "corpora" / "kyoto_protocol.txt").read_text()
terms = extract_keyterms(text, bundled_lexicons())
print(f"{len(terms)} terms; the 15 most relevant:")
for t in terms[:15]:
    emo = max(t.emotions, key=t.emotions.get)
    emo = emo if t.emotions[emo] >= 0.5 else "-"
    print(f"  {t.relevance:5.3f}  {t.surface:28s} sentiment {t.sentiment:+.2f}  emotion {emo}")

wanted = {"climate", "greenhouse", "sustainable", "economic"}
present = wanted & {t.surface for t in terms}
print(f"\ncontent words captured in the footprint vocabulary: {sorted(present)}")

print("\n=== NLU-service JSON import ===")
entities = json.loads((ROOT / "tests" / "fixtures" / "nlu_entities.json").read_text())
keywords = json.loads((ROOT / "tests" / "fixtures" / "nlu_keywords.json").read_text())
merged = import_nlu_json(entities, keywords)
for t in merged:
    print(f"  {t.relevance:5.2f}  {t.surface:14s} kind={t.kind}")
print("('isis', 'clinton' and 'wall street' exist in both files; the entity record won)")
