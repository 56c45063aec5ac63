"""Transcript ingestion: parse speaker-labelled text, drop stage cues, split per speaker.

Debate transcripts arrive as plain text with `NAME:` turn labels; treaty
texts are ingested as a single synthetic speaker so the rest of the pipeline
sees one uniform shape. Audience reactions ("(APPLAUSE)", "[LAUGHTER]") are
stripped before any counting happens.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import AllSpeakersExcluded, MalformedInput, NoSpeakersFound

# Canonical tokenizer: lowercase, split on whitespace/punctuation boundaries,
# keep internal apostrophes and hyphens ("don't", "co-operate" stay whole).
TOKEN_RE = re.compile(r"\w+(?:['’\-]\w+)*")

# Innermost parenthesized or bracketed spans, candidates for stage cues.
_SPAN_RE = re.compile(r"\([^()\n]*\)|\[[^\[\]\n]*\]")
_WS_RE = re.compile(r"\s+")

# Honorifics stripped from speaker labels so "MR. TRUMP" and "TRUMP" merge.
_TITLES = {
    "MR", "MRS", "MS", "DR", "SEN", "SENATOR", "REP", "REPRESENTATIVE",
    "GOV", "GOVERNOR", "PRES", "PRESIDENT", "SEC", "SECRETARY", "MAYOR",
}

# Speaker labels are all-caps words followed by a colon at line start
# (the convention of televised-debate transcripts).
DEFAULT_SPEAKER_PATTERN = r"^([A-Z][A-Z.'\-]*(?:\s+[A-Z][A-Z.'\-]*){0,3}):\s*"

# A bracketed span is treated as a stage cue when its content is short and
# mostly uppercase: catches (APPLAUSE), [LAUGHTER], (CROSSTALK) without a
# hand-kept cue list.
_CUE_MAX_TOKENS = 4


def tokenize(text: str) -> list[str]:
    """Split text into canonical lowercase tokens."""
    return TOKEN_RE.findall(text.lower())


def normalize_speaker(label: str) -> str:
    """Uppercase a speaker label, drop honorifics, collapse whitespace."""
    parts = [p for p in _WS_RE.split(label.strip().upper()) if p]
    kept = [p for p in parts if p.rstrip(".") not in _TITLES]
    if not kept:
        kept = parts
    return " ".join(kept)


@dataclass(frozen=True)
class Utterance:
    """One speaker turn: who said it, where in the transcript, and the text."""

    speaker: str
    index: int
    text: str


@dataclass(frozen=True)
class SpeakerDocument:
    """All retained text of one speaker, with its canonical token count."""

    speaker: str
    text: str
    token_count: int


@dataclass(frozen=True)
class TranscriptFormat:
    """Speaker-label convention of a raw transcript.

    ``speaker_pattern`` must capture the raw label in group 1. When
    ``single_speaker`` is set, the whole input becomes one utterance under
    that synthetic speaker (how treaty texts enter the pipeline).
    """

    speaker_pattern: str = DEFAULT_SPEAKER_PATTERN
    single_speaker: str | None = None

    @classmethod
    def debate(cls, speaker_pattern: str = DEFAULT_SPEAKER_PATTERN) -> "TranscriptFormat":
        return cls(speaker_pattern=speaker_pattern)

    @classmethod
    def document(cls, speaker: str = "DOCUMENT") -> "TranscriptFormat":
        return cls(single_speaker=speaker)


def parse_transcript(raw: str | bytes, fmt: TranscriptFormat | None = None) -> list[Utterance]:
    """Parse raw transcript text into speaker turns, in document order.

    Lines that do not open a new speaker turn attach to the previous one.
    Raises NoSpeakersFound when nothing matches the label convention and
    MalformedInput when the bytes are not UTF-8 text.
    """
    if fmt is None:
        fmt = TranscriptFormat()
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"input is not UTF-8 text: {exc}") from exc
    if "\x00" in raw:
        raise MalformedInput("input contains NUL bytes")

    if fmt.single_speaker is not None:
        body = raw.strip()
        if not body:
            raise NoSpeakersFound("document is empty")
        return [Utterance(normalize_speaker(fmt.single_speaker), 0, body)]

    label_re = re.compile(fmt.speaker_pattern)
    utterances: list[Utterance] = []
    speaker: str | None = None
    lines: list[str] = []

    def flush() -> None:
        nonlocal lines
        if speaker is not None:
            text = " ".join(part for part in (ln.strip() for ln in lines) if part)
            if text:
                utterances.append(Utterance(speaker, len(utterances), text))
        lines = []

    for line in raw.splitlines():
        match = label_re.match(line)
        if match:
            flush()
            speaker = normalize_speaker(match.group(1))
            lines = [line[match.end():]]
        elif speaker is not None:
            lines.append(line)
        # lines before the first label (headers, dates) are dropped
    flush()

    if not utterances:
        raise NoSpeakersFound("no line matched the speaker-label convention")
    return utterances


def _is_stage_cue(span: str) -> bool:
    """True for short, uppercase-dominant bracketed content like APPLAUSE."""
    tokens = tokenize(span)
    if not tokens or len(tokens) > _CUE_MAX_TOKENS:
        return False
    letters = [c for c in span if c.isalpha()]
    if not letters:
        return False
    upper = sum(1 for c in letters if c.isupper())
    return upper * 2 > len(letters)


def filter_stage_directions(
    utterances: Iterable[Utterance],
    patterns: Sequence[str] | None = None,
) -> list[Utterance]:
    """Remove stage-direction spans; drop utterances that become blank.

    With no explicit ``patterns``, any fully parenthesized/bracketed span
    whose content is at most four tokens and mostly uppercase is removed.
    Explicit patterns are regexes and replace the default rule entirely.
    """
    if patterns is None:
        def clean(text: str) -> str:
            return _SPAN_RE.sub(
                lambda m: "" if _is_stage_cue(m.group(0)[1:-1]) else m.group(0),
                text,
            )
    else:
        compiled = [re.compile(p) for p in patterns]

        def clean(text: str) -> str:
            for rx in compiled:
                text = rx.sub("", text)
            return text

    kept: list[Utterance] = []
    for utt in utterances:
        text = clean(utt.text)
        if text.strip():
            kept.append(Utterance(utt.speaker, utt.index, text))
    return kept


def split_by_speaker(
    utterances: Iterable[Utterance],
    exclude: Sequence[str] = (),
) -> list[SpeakerDocument]:
    """Group utterances into one document per retained speaker.

    ``exclude`` lists speakers (moderators) to drop, matched after label
    normalization. Raises AllSpeakersExcluded when nothing remains.
    """
    excluded = {normalize_speaker(name) for name in exclude}
    grouped: dict[str, list[str]] = {}
    for utt in utterances:
        if utt.speaker in excluded:
            continue
        grouped.setdefault(utt.speaker, []).append(utt.text)
    if not grouped:
        raise AllSpeakersExcluded("every speaker was excluded")
    return [
        SpeakerDocument(speaker, text, len(tokenize(text)))
        for speaker, text in ((s, "\n".join(parts)) for s, parts in grouped.items())
    ]


def token_count(doc: SpeakerDocument | str) -> int:
    """Canonical token count of a document (or raw string)."""
    text = doc.text if isinstance(doc, SpeakerDocument) else doc
    return len(tokenize(text))


@dataclass(frozen=True)
class CorpusConfig:
    """Per-corpus ingestion settings, read from an INI file.

    ::

        [corpus]
        format = debate            ; or: document
        moderators = HOLT, COOPER  ; excluded speakers, comma separated
        speaker_pattern = ...      ; optional regex override
        stage_patterns =           ; optional regexes, one per line
    """

    fmt: TranscriptFormat
    moderators: tuple[str, ...] = ()
    stage_patterns: tuple[str, ...] | None = None


def load_corpus_config(path: str | Path) -> CorpusConfig:
    parser = configparser.ConfigParser()
    read = parser.read(path, encoding="utf-8")
    if not read or not parser.has_section("corpus"):
        raise MalformedInput(f"{path}: missing [corpus] section")
    section = parser["corpus"]

    kind = section.get("format", "debate").strip().lower()
    if kind == "document":
        fmt = TranscriptFormat.document(section.get("speaker", "DOCUMENT").strip())
    elif kind == "debate":
        fmt = TranscriptFormat.debate(section.get("speaker_pattern", DEFAULT_SPEAKER_PATTERN))
    else:
        raise MalformedInput(f"{path}: unknown format {kind!r}")

    moderators = tuple(
        name.strip() for name in section.get("moderators", "").split(",") if name.strip()
    )
    raw_patterns = section.get("stage_patterns", "").strip()
    stage_patterns = tuple(ln.strip() for ln in raw_patterns.splitlines() if ln.strip()) or None
    return CorpusConfig(fmt=fmt, moderators=moderators, stage_patterns=stage_patterns)


def ingest(raw: str | bytes, config: CorpusConfig) -> list[SpeakerDocument]:
    """Full ingestion: parse, strip stage cues, split into speaker documents."""
    utterances = parse_transcript(raw, config.fmt)
    cleaned = filter_stage_directions(utterances, config.stage_patterns)
    return split_by_speaker(cleaned, config.moderators)
