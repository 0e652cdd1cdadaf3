import errno
import json

import numpy as np
import pandas as pd
import pytest

from regimelab import OutputError
from regimelab._io import OutputWriter, jsonable


def test_jsonable():
    payload = {"a": np.float64(1.5), 2: np.arange(3), "b": (float("nan"), np.inf), "c": np.int64(4)}
    assert jsonable(payload) == {"a": 1.5, "2": [0, 1, 2], "b": [None, None], "c": 4}


def test_writer_records_files_in_order(tmp_path):
    writer = OutputWriter(tmp_path / "run")
    writer.write_frame("a.csv", pd.DataFrame({"x": [1, 2]}))
    writer.write_json("b.json", {"y": np.float64(0.5)})
    writer.write_frame("a.csv", pd.DataFrame({"x": [3]}))
    assert writer.files == ["a.csv", "b.json"]
    assert json.loads((tmp_path / "run" / "b.json").read_text()) == {"y": 0.5}


def test_failed_csv_write_raises_output_error(mocker, tmp_path):
    mocker.patch.object(pd.DataFrame, "to_csv", side_effect=OSError(errno.ENOSPC, "No space left on device"))
    writer = OutputWriter(tmp_path)
    with pytest.raises(OutputError, match="No space left on device"):
        writer.write_frame("a.csv", pd.DataFrame({"x": [1]}))
    assert writer.files == []


def test_failed_directory_creation_raises_output_error(mocker, tmp_path):
    mkdir = mocker.patch("pathlib.Path.mkdir", side_effect=PermissionError(errno.EACCES, "Permission denied"))
    with pytest.raises(OutputError, match="Permission denied"):
        OutputWriter(tmp_path / "run").write_json("b.json", {})
    mkdir.assert_called_once_with(parents=True, exist_ok=True)
