"""Tests for CSV, JSON and b-file rendering."""

import json

import numpy as np
import pandas as pd
import pytest

from subperm_patterns.output_manager import (
    SCHEMA_VERSION,
    bfile_text,
    emit,
    json_document,
    render_frame,
)


@pytest.fixture
def frame():
    return pd.DataFrame({"n": [1, 2], "value": [1 / 3, 0.5]})


def test_csv_uses_crlf(frame):
    assert render_frame(frame, "csv", 6) == "n,value\r\n1,0.333333\r\n2,0.5\r\n"


def test_json_rows_are_plain(frame):
    document = json.loads(render_frame(frame, "json"))
    assert document["schema_version"] == SCHEMA_VERSION
    assert document["columns"] == ["n", "value"]
    assert document["rows"][0] == {"n": 1, "value": 1 / 3}


def test_json_document_sorts_keys():
    text = json_document({"b": np.int64(2), "a": 1})
    assert text.endswith("\n")
    assert list(json.loads(text)) == ["a", "b", "schema_version"]


def test_unknown_format(frame):
    with pytest.raises(ValueError):
        render_frame(frame, "xml")


def test_bfile():
    assert bfile_text(["0 1", "1 1"]) == "0 1\n1 1\n"


def test_emit_to_file_keeps_crlf(tmp_path, frame):
    path = tmp_path / "out.csv"
    emit(render_frame(frame, "csv"), str(path))
    assert path.read_bytes().count(b"\r\n") == 3
