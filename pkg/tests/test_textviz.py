"""Tokenizer, stopword list, and word-cloud term-count tests."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossmap import (
    ColumnSchema,
    Dataset,
    DimensionSpec,
    NoTextDimension,
    Term,
    build_engine,
    term_counts,
    tokenize,
)
from crossmap.textviz import stopwords

from .oracle import oracle_tokenize


def text_engine(titles):
    schema = [ColumnSchema("title", "text", nullable=True)]
    ds = Dataset.from_columns(schema, {"title": titles})
    return build_engine(ds, [DimensionSpec("topics", "text_term", ("title",))])


# --- tokenize -------------------------------------------------------------

def test_tokenize_basic():
    assert tokenize("Google Earth Engine") == ["google", "earth", "engine"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_hyphen_and_no_dedup():
    assert tokenize("machine-learning, Machine Learning") == \
        ["machine-learning", "machine", "learning"]


def test_tokenize_drops_single_chars_and_stopwords():
    assert tokenize("a model of the x") == ["model"]


def test_tokenize_keeps_digits():
    assert tokenize("landsat 8 2020") == ["landsat", "2020"]  # "8" has length 1


@given(st.text(alphabet="abcXYZ-09 ,.;:()/&\"'é", max_size=60))
def test_tokenize_matches_oracle_tokenizer(s):
    assert tokenize(s) == oracle_tokenize(s)


@given(st.text(max_size=60))
def test_tokenize_output_is_clean(s):
    for token in tokenize(s):
        assert len(token) > 1
        assert token == token.lower()
        assert all(c.isascii() and (c.isalnum() or c == "-") for c in token)


def test_stopword_list_shipped():
    words = stopwords()
    assert len(words) == 174
    assert "the" in words and "while" in words
    assert "model" not in words


# --- term_counts ----------------------------------------------------------

def test_term_counts_two_records():
    eng = text_engine(["deep learning", "deep mapping"])
    got = [(t.term, t.frequency) for t in term_counts(eng, 10)]
    assert got == [("deep", 2), ("learning", 1), ("mapping", 1)]


def test_term_counts_k_one():
    eng = text_engine(["deep learning", "deep mapping"])
    got = term_counts(eng, 1)
    assert len(got) == 1 and got[0].term == "deep" and got[0].frequency == 2


def test_term_counts_record_level_not_occurrence_level():
    eng = text_engine(["flood flood flood flood flood", "flood"])
    assert [(t.term, t.frequency) for t in term_counts(eng, 5)] == [("flood", 2)]


def test_term_filter_visibility():
    eng = text_engine(["deep learning", "deep mapping"])
    eng.set_filter("topics", Term("deep"))
    assert eng.visible_count()[0] == 2
    eng.set_filter("topics", Term("learning"))
    assert eng.visible_count()[0] == 1
    eng.set_filter("topics", Term("nonexistent"))
    assert eng.visible_count()[0] == 0


def test_term_counts_self_exclusion():
    eng = text_engine(["deep learning", "deep mapping"])
    baseline = term_counts(eng, 10)
    eng.set_filter("topics", Term("learning"))
    assert term_counts(eng, 10) == baseline  # own filter excluded


def test_term_counts_respect_other_filters():
    schema = [ColumnSchema("title", "text"), ColumnSchema("cat", "categorical")]
    ds = Dataset.from_columns(schema, {
        "title": ["deep learning", "deep mapping"],
        "cat": ["x", "y"]})
    eng = build_engine(ds, [DimensionSpec("topics", "text_term", ("title",)),
                            DimensionSpec("cat", "categorical", ("cat",))])
    from crossmap import ValueSet
    eng.set_filter("cat", ValueSet({"x"}))
    got = [(t.term, t.frequency) for t in term_counts(eng, 10)]
    assert got == [("deep", 1), ("learning", 1)]  # zero-count terms dropped


def test_term_counts_requires_text_dimension():
    schema = [ColumnSchema("cat", "categorical")]
    ds = Dataset.from_columns(schema, {"cat": ["x"]})
    eng = build_engine(ds, [DimensionSpec("cat", "categorical", ("cat",))])
    with pytest.raises(NoTextDimension):
        term_counts(eng, 5)
