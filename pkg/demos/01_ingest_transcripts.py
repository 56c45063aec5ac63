#!/usr/bin/env python3
"""Walk through corpus ingestion: parsing turns, dropping stage cues,
splitting per speaker, and sizing treaty texts."""

from pathlib import Path

from footprints.corpus import (
    TranscriptFormat,
    filter_stage_directions,
    parse_transcript,
    split_by_speaker,
    token_count,
)

ROOT = Path(__file__).resolve().parent.parent

raw = (ROOT / "tests" / "fixtures" / "debate_small.txt").read_text()
print("=== raw transcript (first lines) ===")
print("\n".join(raw.splitlines()[:8]))

utterances = parse_transcript(raw)
print(f"\nparsed {len(utterances)} turns:")
for u in utterances:
    print(f"  [{u.index}] {u.speaker:8s} {u.text[:60]}...")

cleaned = filter_stage_directions(utterances)
print("\nafter stage-direction filtering, the applause is gone:")
print(" ", cleaned[0].text)

docs = split_by_speaker(cleaned, exclude=["HOLT"])
print(f"\n{len(docs)} speaker documents (moderator excluded):")
for doc in docs:
    print(f"  {doc.speaker:8s} {doc.token_count:4d} tokens")

# Treaty texts enter the same pipeline as a single synthetic speaker.
print("\n=== treaty sizing ===")
for name in ["kyoto_protocol.txt", "paris_agreement.txt"]:
    text = (ROOT / "data" / "corpora" / name).read_text()
    treaty = parse_transcript(text, TranscriptFormat.document())
    print(f"  {name:22s} {token_count(treaty[0].text):5d} tokens")
