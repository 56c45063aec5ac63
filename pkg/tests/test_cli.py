import json
from pathlib import Path

import pytest

from conftest import DEMO_VECTORS, FIXTURES
from footprints.cli import cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def pipeline_dir(tmp_path):
    """Run ingest -> extract -> footprint on the bundled debate fixture."""
    out = tmp_path
    code = cli_main([
        "ingest",
        "--input", str(FIXTURES / "debate_small.txt"),
        "--config", str(FIXTURES / "debate.ini"),
        "--out-dir", str(out / "docs"),
    ])
    assert code == 0
    for speaker in ["TRUMP", "CLINTON"]:
        code = cli_main([
            "extract",
            "--input", str(out / "docs" / f"{speaker}.txt"),
            "--source", speaker,
            "--out", str(out / f"{speaker.lower()}_terms.json"),
        ])
        assert code == 0
        code = cli_main([
            "footprint",
            "--keyterms", str(out / f"{speaker.lower()}_terms.json"),
            "--vectors", str(DEMO_VECTORS),
            "--out", str(out / f"{speaker.lower()}_fp.json"),
        ])
        assert code == 0
    return out


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "--nope")
        assert code == 1
        assert "usage" in err.lower()

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1

    def test_no_subcommand(self, capsys):
        code, _, err = run(capsys, )
        assert code == 1

    def test_missing_required_option(self, capsys):
        code, _, err = run(capsys, "clusters")
        assert code == 1
        assert "usage" in err.lower()


class TestDataErrors:
    def test_missing_input_file(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "clusters", "--footprint", str(tmp_path / "nope.json")
        )
        assert code == 2

    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json")
        code, _, err = run(capsys, "clusters", "--footprint", str(bad))
        assert code == 2

    def test_serve_missing_workspace(self, capsys, tmp_path):
        code, _, err = run(capsys, "serve", "--workspace", str(tmp_path / "nowhere"))
        assert code == 2

    def test_empty_transcript(self, capsys, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("")
        code, _, err = run(
            capsys, "ingest", "--input", str(empty),
            "--config", str(FIXTURES / "debate.ini"), "--out-dir", str(tmp_path / "o"),
        )
        assert code == 2


class TestIngest:
    def test_manifest_and_documents(self, pipeline_dir):
        manifest = json.loads((pipeline_dir / "docs" / "manifest.json").read_text())
        speakers = {d["speaker"] for d in manifest["documents"]}
        assert speakers == {"TRUMP", "CLINTON"}   # HOLT excluded as moderator
        for doc in manifest["documents"]:
            text = (pipeline_dir / "docs" / doc["path"]).read_text()
            assert "(APPLAUSE)" not in text and "[LAUGHTER]" not in text
            assert doc["token_count"] > 0


class TestExtractAndFootprint:
    def test_keyterms_schema(self, pipeline_dir):
        doc = json.loads((pipeline_dir / "trump_terms.json").read_text())
        assert doc["source"] == "TRUMP"
        assert doc["terms"][0]["relevance"] == 1.0
        for term in doc["terms"]:
            assert set(term) == {"surface", "kind", "relevance", "sentiment", "emotions"}

    def test_footprint_schema(self, pipeline_dir):
        doc = json.loads((pipeline_dir / "trump_fp.json").read_text())
        assert doc["source"] == "TRUMP"
        assert doc["space_id"] == "vectors_demo.txt"
        for term in doc["terms"]:
            assert len(term["vector"]) == 10
        surfaces = [t["surface"] for t in doc["terms"]]
        assert "wall street" in surfaces
        wall = next(t for t in doc["terms"] if t["surface"] == "wall street")
        assert wall["synthetic"] is True


class TestImportNlu:
    def test_entity_wins_and_schema(self, capsys, tmp_path):
        out = tmp_path / "kt.json"
        code, _, _ = run(
            capsys, "import-nlu",
            "--entities", str(FIXTURES / "nlu_entities.json"),
            "--keywords", str(FIXTURES / "nlu_keywords.json"),
            "--source", "TRUMP", "--out", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        by_surface = {t["surface"]: t for t in doc["terms"]}
        assert len(doc["terms"]) == 6   # 4 entities + 5 keywords - 3 collisions
        for name in ["isis", "clinton", "wall street"]:
            assert by_surface[name]["kind"] == "entity"
        assert by_surface["isis"]["relevance"] == 0.91


class TestAnalyses:
    def test_clusters_ten_by_ten(self, capsys, pipeline_dir):
        out = pipeline_dir / "clusters.json"
        code, _, _ = run(
            capsys, "clusters", "--footprint", str(pipeline_dir / "trump_fp.json"),
            "--seeds", "10", "--k", "10", "--out", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert len(doc["clusters"]) == 10

    def test_theme_default_n_twenty(self, capsys, pipeline_dir):
        out = pipeline_dir / "theme.json"
        code, _, _ = run(
            capsys, "theme", "--word", "values",
            "--vectors", str(DEMO_VECTORS),
            "--footprints", str(pipeline_dir / "trump_fp.json"),
            str(pipeline_dir / "clinton_fp.json"),
            "--out", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert len(doc["candidates"]) == 20
        for candidate in doc["candidates"]:
            assert set(candidate["usage"]) == {"TRUMP", "CLINTON"}

    def test_distances(self, capsys, pipeline_dir):
        out = pipeline_dir / "dist.json"
        code, _, _ = run(
            capsys, "distances",
            "--footprints", str(pipeline_dir / "trump_fp.json"),
            str(pipeline_dir / "clinton_fp.json"),
            "--out", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["ids"] == ["TRUMP", "CLINTON"]
        matrix = doc["matrix"]
        assert matrix[0][0] == 0.0 and matrix[1][1] == 0.0
        assert matrix[0][1] == matrix[1][0]
        assert 0.0 <= matrix[0][1] <= 2.0

    def test_kmeans(self, capsys, pipeline_dir):
        out = pipeline_dir / "km.json"
        code, _, _ = run(
            capsys, "kmeans", "--footprint", str(pipeline_dir / "trump_fp.json"),
            "--k", "3", "--seed", "42", "--out", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert len(doc["clusters"]) == 3
        objective = doc["objective"]
        assert all(b <= a + 1e-12 for a, b in zip(objective, objective[1:]))

    def test_export_artifacts(self, capsys, pipeline_dir):
        out_dir = pipeline_dir / "artifacts"
        code, _, _ = run(
            capsys, "export", "--footprint", str(pipeline_dir / "trump_fp.json"),
            "--out-dir", str(out_dir),
        )
        assert code == 0
        assert (out_dir / "vectors.tsv").exists()
        assert (out_dir / "metadata.tsv").exists()
        assert (out_dir / "wordcloud.json").exists()
        assert (out_dir / "projection.json").exists()
        fp_doc = json.loads((pipeline_dir / "trump_fp.json").read_text())
        n_terms = len(fp_doc["terms"])
        assert len((out_dir / "vectors.tsv").read_text().splitlines()) == n_terms
        assert len((out_dir / "metadata.tsv").read_text().splitlines()) == n_terms + 1
        projection = json.loads((out_dir / "projection.json").read_text())
        assert len(projection["points"]) == n_terms


class TestByteIdenticalReruns:
    def test_every_file_producing_subcommand(self, capsys, pipeline_dir, tmp_path):
        fp = str(pipeline_dir / "trump_fp.json")
        fp2 = str(pipeline_dir / "clinton_fp.json")
        vectors = str(DEMO_VECTORS)
        runs = {
            "ingest": lambda d: [
                "ingest", "--input", str(FIXTURES / "debate_small.txt"),
                "--config", str(FIXTURES / "debate.ini"), "--out-dir", str(d / "docs"),
            ],
            "extract": lambda d: [
                "extract", "--input", str(pipeline_dir / "docs" / "TRUMP.txt"),
                "--source", "TRUMP", "--out", str(d / "kt.json"),
            ],
            "import-nlu": lambda d: [
                "import-nlu", "--entities", str(FIXTURES / "nlu_entities.json"),
                "--keywords", str(FIXTURES / "nlu_keywords.json"),
                "--source", "S", "--out", str(d / "kt.json"),
            ],
            "footprint": lambda d: [
                "footprint", "--keyterms", str(pipeline_dir / "trump_terms.json"),
                "--vectors", vectors, "--out", str(d / "fp.json"),
            ],
            "clusters": lambda d: [
                "clusters", "--footprint", fp, "--out", str(d / "cl.json"),
            ],
            "theme": lambda d: [
                "theme", "--word", "values", "--vectors", vectors,
                "--footprints", fp, fp2, "--out", str(d / "theme.json"),
            ],
            "distances": lambda d: [
                "distances", "--footprints", fp, fp2, "--out", str(d / "dist.json"),
            ],
            "kmeans": lambda d: [
                "kmeans", "--footprint", fp, "--k", "3", "--out", str(d / "km.json"),
            ],
            "export": lambda d: [
                "export", "--footprint", fp, "--out-dir", str(d / "art"),
            ],
        }
        for name, argv in runs.items():
            dir_a, dir_b = tmp_path / f"{name}_a", tmp_path / f"{name}_b"
            dir_a.mkdir(), dir_b.mkdir()
            assert cli_main(argv(dir_a)) == 0, name
            assert cli_main(argv(dir_b)) == 0, name
            capsys.readouterr()
            files_a = sorted(p for p in dir_a.rglob("*") if p.is_file())
            files_b = sorted(p for p in dir_b.rglob("*") if p.is_file())
            assert [p.relative_to(dir_a) for p in files_a] == [
                p.relative_to(dir_b) for p in files_b
            ], name
            for a, b in zip(files_a, files_b):
                assert a.read_bytes() == b.read_bytes(), f"{name}: {a.name} differs"
