"""Command-line pipeline: ingest -> extract/import-nlu -> footprint -> analyses.

Every subcommand reads and writes the documented JSON/TSV formats so the
stages compose through files. Exit codes: 0 success, 1 usage error,
2 data error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import footprint as fp_mod
from .corpus import ingest as corpus_ingest
from .corpus import load_corpus_config
from .errors import FootprintError
from .export import write_projection, write_projector, write_wordcloud
from .footprint import Footprint, build_footprint
from .nlu import (
    ExtractParams,
    Lexicons,
    bundled_lexicons,
    extract_keyterms,
    keyterms_from_json,
    keyterms_to_json,
    load_emotion_lexicon,
    load_sentiment_lexicon,
    load_stopwords,
    read_nlu_files,
)
from .server import load_workspace, serve
from .vsm import load_vectors


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors instead of exiting with code 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _write_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def _load_footprint(path: str) -> Footprint:
    return Footprint.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def _lexicons_from_args(args) -> Lexicons:
    lex = bundled_lexicons()
    sentiment = load_sentiment_lexicon(args.sentiment_lexicon) if args.sentiment_lexicon else lex.sentiment
    emotion = load_emotion_lexicon(args.emotion_lexicon) if args.emotion_lexicon else lex.emotion
    stopwords = load_stopwords(args.stopwords) if args.stopwords else lex.stopwords
    return Lexicons(sentiment=sentiment, emotion=emotion, stopwords=stopwords)


def _safe_filename(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name) or "UNNAMED"


def _cluster_payload(cluster) -> dict:
    return {
        "seed": cluster.seed.to_dict(),
        "members": [
            {"term": term.to_dict(), "similarity": sim} for term, sim in cluster.members
        ],
    }


# --- subcommand bodies -------------------------------------------------------

def _cmd_ingest(args) -> None:
    config = load_corpus_config(args.config)
    raw = Path(args.input).read_bytes()
    documents = corpus_ingest(raw, config)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = {"source_file": str(args.input), "documents": []}
    for doc in documents:
        filename = _safe_filename(doc.speaker) + ".txt"
        (out_dir / filename).write_text(doc.text + "\n", encoding="utf-8")
        manifest["documents"].append(
            {"speaker": doc.speaker, "token_count": doc.token_count, "path": filename}
        )
    _write_json(manifest, str(out_dir / "manifest.json"))


def _cmd_extract(args) -> None:
    text = Path(args.input).read_text(encoding="utf-8")
    source = args.source or Path(args.input).stem.upper()
    params = ExtractParams(
        max_terms=args.max_terms, ngram_max=args.ngram_max, window=args.window
    )
    terms = extract_keyterms(text, _lexicons_from_args(args), params)
    _write_json(keyterms_to_json(source, terms), args.out)


def _cmd_import_nlu(args) -> None:
    terms = read_nlu_files(args.entities, args.keywords)
    _write_json(keyterms_to_json(args.source, terms), args.out)


def _cmd_footprint(args) -> None:
    payload = json.loads(Path(args.keyterms).read_text(encoding="utf-8"))
    source, terms = keyterms_from_json(payload)
    space = load_vectors(args.vectors)
    fp = build_footprint(
        terms, space, policy=args.policy, source=source, space_id=Path(args.vectors).name
    )
    doc = fp.to_dict()
    if fp.dropped:
        print(f"dropped {len(fp.dropped)} unembeddable terms: "
              f"{', '.join(fp.dropped[:8])}{'...' if len(fp.dropped) > 8 else ''}",
              file=sys.stderr)
    _write_json(doc, args.out)


def _cmd_clusters(args) -> None:
    fp = _load_footprint(args.footprint)
    clusters = fp_mod.theme_clusters(fp, num_seeds=args.seeds, k=args.k)
    _write_json(
        {"source": fp.source, "clusters": [_cluster_payload(c) for c in clusters]},
        args.out,
    )


def _theme_inputs(args) -> tuple:
    if args.workspace:
        ws = load_workspace(args.workspace)
        return ws.space, list(ws.footprints.values())
    if not args.vectors or not args.footprints:
        raise UsageError("theme/distances need --workspace or --vectors with --footprints")
    space = load_vectors(args.vectors)
    return space, [_load_footprint(p) for p in args.footprints]


def _cmd_theme(args) -> None:
    space, fps = _theme_inputs(args)
    comparison = fp_mod.compare_theme(space, fps, args.word, args.n)
    _write_json(
        {
            "theme": comparison.theme,
            "candidates": [
                {"token": token, "similarity": sim, "usage": usage}
                for token, sim, usage in comparison.candidates
            ],
        },
        args.out,
    )


def _cmd_distances(args) -> None:
    if args.workspace:
        fps = list(load_workspace(args.workspace).footprints.values())
    elif args.footprints:
        fps = [_load_footprint(p) for p in args.footprints]
    else:
        raise UsageError("distances needs --workspace or --footprints")
    report = fp_mod.distance_matrix(fps, weighting=args.weighting)
    _write_json(report.to_dict(), args.out)


def _cmd_kmeans(args) -> None:
    fp = _load_footprint(args.footprint)
    result = fp_mod.kmeans(
        fp,
        args.k,
        weighted=args.weighted,
        rng_seed=args.seed,
        max_iter=args.max_iter,
        tol=args.tol,
    )
    _write_json(
        {
            "source": fp.source,
            "k": args.k,
            "weighted": args.weighted,
            "rng_seed": args.seed,
            "iterations": result.iterations,
            "objective": list(result.objective),
            "clusters": [
                {
                    "centroid": [float(x) for x in cluster.centroid],
                    "members": [
                        {"surface": t.surface, "relevance": t.relevance}
                        for t in cluster.members
                    ],
                }
                for cluster in result.clusters
            ],
        },
        args.out,
    )


def _cmd_export(args) -> None:
    fp = _load_footprint(args.footprint)
    out_dir = Path(args.out_dir)
    write_projector(fp, out_dir)
    clusters = fp_mod.theme_clusters(fp, num_seeds=args.seeds, k=args.k)
    write_wordcloud(clusters, out_dir / "wordcloud.json")
    if len(fp.terms) >= 2:
        write_projection(fp, out_dir / "projection.json")


def _cmd_serve(args) -> None:
    workspace = load_workspace(args.workspace)
    serve(workspace, bind=args.bind)


# --- parser wiring -----------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="footprint", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    p = sub.add_parser("ingest",
                       help="split a raw transcript into per-speaker documents")
    p.add_argument("--input", required=True)
    p.add_argument("--config", required=True, help="corpus INI file")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("extract",
                       help="extract scored key terms from a document")
    p.add_argument("--input", required=True)
    p.add_argument("--source", default=None, help="document id (default: file stem)")
    p.add_argument("--max-terms", type=_positive_int, default=ExtractParams.max_terms)
    p.add_argument("--ngram-max", type=_positive_int, default=ExtractParams.ngram_max)
    p.add_argument("--window", type=_positive_int, default=ExtractParams.window)
    p.add_argument("--sentiment-lexicon", default=None)
    p.add_argument("--emotion-lexicon", default=None)
    p.add_argument("--stopwords", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("import-nlu",
                       help="merge NLU-service entities/keywords JSON files")
    p.add_argument("--entities", required=True)
    p.add_argument("--keywords", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_import_nlu)

    p = sub.add_parser("footprint",
                       help="embed key terms into a footprint")
    p.add_argument("--keyterms", required=True)
    p.add_argument("--vectors", required=True)
    p.add_argument("--policy", choices=["average", "first", "skip"], default="average")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_footprint)

    p = sub.add_parser("clusters",
                       help="theme clusters around the most relevant terms")
    p.add_argument("--footprint", required=True)
    p.add_argument("--seeds", type=_positive_int, default=10)
    p.add_argument("--k", type=_positive_int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_clusters)

    p = sub.add_parser("theme",
                       help="global neighbors of a theme word with usage flags")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=_positive_int, default=20)
    p.add_argument("--workspace", default=None)
    p.add_argument("--vectors", default=None)
    p.add_argument("--footprints", nargs="*", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_theme)

    p = sub.add_parser("distances",
                       help="pairwise centroid distances between footprints")
    p.add_argument("--weighting", choices=["uniform", "relevance"], default="uniform")
    p.add_argument("--workspace", default=None)
    p.add_argument("--footprints", nargs="*", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_distances)

    p = sub.add_parser("kmeans",
                       help="spherical k-means over a footprint's terms")
    p.add_argument("--footprint", required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iter", type=_positive_int, default=100)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_kmeans)

    p = sub.add_parser("export",
                       help="write projector TSVs, word-cloud and PCA JSON")
    p.add_argument("--footprint", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seeds", type=_positive_int, default=10)
    p.add_argument("--k", type=_positive_int, default=10)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("serve",
                       help="serve a workspace over HTTP/JSON")
    p.add_argument("--workspace", required=True)
    p.add_argument("--bind", default="127.0.0.1:8000")
    p.set_defaults(func=_cmd_serve)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_usage())
        args.func(args)
        return 0
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (FootprintError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
