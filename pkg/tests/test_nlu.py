import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from footprints.errors import EmptyDocument, RangeError, SchemaError
from footprints.nlu import (
    EMOTIONS,
    BackgroundFrequencies,
    ExtractParams,
    KeyTerm,
    Lexicons,
    bundled_lexicons,
    extract_keyterms,
    import_nlu_json,
    keyterms_from_json,
    keyterms_to_json,
)


def entity(text, relevance, **kw):
    return {"text": text, "relevance": relevance, "type": "Thing", **kw}


def keyword(text, relevance, **kw):
    return {"text": text, "relevance": relevance, **kw}


class TestImportNluJson:
    def test_entity_wins_on_collision(self):
        entities = {"entities": [entity("isis", 0.91, emotion={"anger": 0.6})]}
        keywords = {"keywords": [keyword("isis", 0.7)]}
        merged = import_nlu_json(entities, keywords)
        assert len(merged) == 1
        term = merged[0]
        assert term.kind == "entity"
        assert term.relevance == 0.91
        assert term.emotions["anger"] == 0.6

    def test_both_empty(self):
        assert import_nlu_json({"entities": []}, {"keywords": []}) == []

    def test_disjoint_union(self):
        entities = {"entities": [entity(t, 0.5) for t in ["a", "b", "c"]]}
        keywords = {"keywords": [keyword(t, 0.5) for t in ["d", "e"]]}
        assert len(import_nlu_json(entities, keywords)) == 5

    def test_case_folded_collision(self):
        entities = {"entities": [entity("Wall Street", 0.8)]}
        keywords = {"keywords": [keyword("wall street", 0.9)]}
        merged = import_nlu_json(entities, keywords)
        assert len(merged) == 1
        assert merged[0].kind == "entity"

    def test_size_accounting(self):
        # |entities| + |keywords| - |collisions|
        entities = {"entities": [entity("a", 0.5), entity("b", 0.5)]}
        keywords = {"keywords": [keyword("b", 0.4), keyword("c", 0.4), keyword("d", 0.4)]}
        assert len(import_nlu_json(entities, keywords)) == 2 + 3 - 1

    def test_scores_clamped(self):
        entities = {"entities": [entity("x", 1.7, sentiment={"score": -3.0})]}
        merged = import_nlu_json(entities, {"keywords": []})
        assert merged[0].relevance == 1.0
        assert merged[0].sentiment == -1.0

    def test_missing_field_named_in_error(self):
        with pytest.raises(SchemaError, match="relevance"):
            import_nlu_json({"entities": [{"text": "x"}]}, {"keywords": []})
        with pytest.raises(SchemaError, match="text"):
            import_nlu_json({"entities": [{"relevance": 0.5}]}, {"keywords": []})
        with pytest.raises(SchemaError, match="entities"):
            import_nlu_json({}, {"keywords": []})

    def test_non_numeric_score(self):
        with pytest.raises(RangeError):
            import_nlu_json({"entities": [entity("x", "high")]}, {"keywords": []})

    def test_unknown_fields_ignored(self):
        entities = {"entities": [entity("x", 0.5, count=12, disambiguation={"a": 1})]}
        assert len(import_nlu_json(entities, {"keywords": []})) == 1


class TestExtractKeyterms:
    def test_single_candidate_normalizes_to_one(self):
        terms = extract_keyterms(
            "climate climate climate", Lexicons.empty(), ExtractParams(ngram_max=1)
        )
        assert len(terms) == 1
        term = terms[0]
        assert term.surface == "climate"
        assert term.relevance == 1.0
        assert term.sentiment == 0.0
        assert all(v == 0.0 for v in term.emotions.values())

    def test_empty_document(self):
        with pytest.raises(EmptyDocument):
            extract_keyterms("", Lexicons.empty())

    def test_all_stopwords(self):
        lex = Lexicons(stopwords=frozenset({"the", "and"}))
        with pytest.raises(EmptyDocument):
            extract_keyterms("the and the", lex)

    def test_tfidf_matches_independent_oracle(self):
        # Frozen oracle (brute force, computed before the implementation):
        #   glaciers raw=15.817509558630 rel=1.0
        #   melts    raw=11.212339372642 rel=0.708856178091
        #   ice      raw= 9.910753779981 rel=0.626568534272
        #   calve/collapses/retreat/shelf raw=7.908754779315 rel=0.5
        #   fast/slowly raw=3.303584593327 rel=0.208856178091
        doc = "ice melts fast ice melts slowly glaciers retreat glaciers calve ice shelf collapses"
        background = BackgroundFrequencies(
            1000, {"ice": 99, "melts": 9, "fast": 99, "slowly": 99}
        )
        terms = extract_keyterms(
            doc, Lexicons.empty(), ExtractParams(ngram_max=1), background
        )
        assert [t.surface for t in terms] == [
            "glaciers", "melts", "ice",
            "calve", "collapses", "retreat", "shelf",
            "fast", "slowly",
        ]
        # independent recomputation, same numbers
        tf = Counter(doc.split())
        idf = lambda t: math.log(1001 / ({"ice": 99, "melts": 9, "fast": 99, "slowly": 99}.get(t, 0) + 1)) + 1
        raw = {t: tf[t] * idf(t) for t in tf}
        max_raw = max(raw.values())
        for term in terms:
            assert term.relevance == pytest.approx(raw[term.surface] / max_raw, abs=0)
        assert terms[1].relevance == pytest.approx(0.708856178091, abs=1e-12)
        assert terms[2].relevance == pytest.approx(0.626568534272, abs=1e-12)

    def test_relevance_non_increasing_and_max_one(self):
        text = "taxes rose while jobs fell and trade deals stalled in congress"
        terms = extract_keyterms(text, bundled_lexicons())
        assert terms[0].relevance == 1.0
        rels = [t.relevance for t in terms]
        assert rels == sorted(rels, reverse=True)

    def test_window_sentiment_and_emotion(self):
        lex = Lexicons(
            sentiment={"disaster": -0.8, "great": 0.6},
            emotion={"disaster": frozenset({"fear"})},
        )
        # "storm" occurs once; "disaster" is inside the +/-2 window, "great" is not
        doc = "storm was disaster here but otherwise nothing else was great today"
        terms = extract_keyterms(doc, lex, ExtractParams(ngram_max=1, window=2))
        storm = next(t for t in terms if t.surface == "storm")
        assert storm.sentiment == pytest.approx(-0.8)
        assert storm.emotions["fear"] == pytest.approx(1 / 2)  # one hit: 1/(1+1)
        assert storm.emotions["joy"] == 0.0

    def test_no_emotion_invented_from_nothing(self):
        terms = extract_keyterms(
            "glaciers retreat worldwide", Lexicons.empty(), ExtractParams(ngram_max=1)
        )
        for term in terms:
            assert all(v == 0.0 for v in term.emotions.values())

    def test_deterministic(self):
        text = "jobs trade jobs taxes trade health climate jobs"
        lex = bundled_lexicons()
        first = extract_keyterms(text, lex)
        second = extract_keyterms(text, lex)
        assert first == second

    def test_ties_break_lexicographically(self):
        terms = extract_keyterms(
            "zebra apple", Lexicons.empty(), ExtractParams(ngram_max=1)
        )
        assert [t.surface for t in terms] == ["apple", "zebra"]

    def test_max_terms_cap(self):
        text = " ".join(f"word{i}" for i in range(30))
        terms = extract_keyterms(text, Lexicons.empty(), ExtractParams(max_terms=5, ngram_max=1))
        assert len(terms) == 5

    def test_ngrams_are_stopword_free(self):
        lex = Lexicons(stopwords=frozenset({"of"}))
        terms = extract_keyterms(
            "bank of america bank of america", lex, ExtractParams(ngram_max=2)
        )
        surfaces = {t.surface for t in terms}
        assert "bank" in surfaces and "america" in surfaces
        assert all("of" not in s.split() for s in surfaces)


class TestKeyTerm:
    def test_ranges_clamped(self):
        term = KeyTerm("x", "keyword", 2.0, -1.5, {"anger": 3.0})
        assert term.relevance == 1.0
        assert term.sentiment == -1.0
        assert term.emotions["anger"] == 1.0
        assert set(term.emotions) == set(EMOTIONS)

    def test_empty_surface_rejected(self):
        with pytest.raises(ValueError):
            KeyTerm("   ", "keyword", 0.5)

    def test_json_round_trip(self):
        term = KeyTerm("wall street", "entity", 0.8, 0.2, {"joy": 0.4})
        doc = keyterms_to_json("TRUMP", [term])
        source, terms = keyterms_from_json(doc)
        assert source == "TRUMP"
        assert terms == [term]


@given(
    st.lists(
        st.sampled_from(["alpha", "beta", "gamma", "delta", "epsilon"]),
        min_size=1,
        max_size=40,
    )
)
def test_extract_invariants_on_random_docs(words):
    terms = extract_keyterms(" ".join(words), bundled_lexicons())
    rels = [t.relevance for t in terms]
    assert rels[0] == 1.0
    assert rels == sorted(rels, reverse=True)
    assert len({t.surface for t in terms}) == len(terms)
