import io
import json
import logging

import numpy as np
import pytest

from isdc.core.objects import NumpyEncoder, ObjDir, ObjFile
from isdc.utils.logging import configure_logger, log_duration


class Note(ObjFile):
    def __init__(self, name, parent_path, **kwargs):
        super().__init__(name, parent_path)
        self.update(kwargs)


class Folder(ObjDir):
    def __init__(self, name, parent_path, **kwargs):
        super().__init__(name, parent_path)
        self.update(kwargs)


def test_numpy_encoder():
    data = {"a": np.arange(3), "b": np.float64(0.5), "c": np.int32(2), "d": np.bool_(1)}
    assert json.loads(json.dumps(data, cls=NumpyEncoder)) == {
        "a": [0, 1, 2],
        "b": 0.5,
        "c": 2,
        "d": True,
    }


def test_file_object_round_trip(tmp_path):
    note = Note("note", tmp_path, values=np.linspace(0.0, 1.0, 3), count=2)
    note.save()
    loaded = Note.load(tmp_path / "note.json")
    pytest.assume(note.json_path == tmp_path / "note.json")
    pytest.assume(loaded.name == "note")
    pytest.assume(loaded["values"] == [0.0, 0.5, 1.0])
    pytest.assume(loaded["count"] == 2)


def test_save_refuses_to_override(tmp_path):
    note = Note("note", tmp_path)
    note.save()
    with pytest.raises(FileExistsError):
        note.save(exist_ok=False)


def test_load_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        Note.load(tmp_path / "missing.json")
    path = tmp_path / "note.txt"
    path.write_text("{}")
    with pytest.raises(ValueError):
        Note.load(path)


def test_name_must_be_a_string(tmp_path):
    with pytest.raises(TypeError):
        Note(3, tmp_path)


def test_dir_object_round_trip(tmp_path):
    folder = Folder("results", tmp_path)
    pytest.assume(folder.path.is_dir())
    path = folder.write_text("table_path", "cycles\n")
    pytest.assume(path == tmp_path / "results" / "results.txt")
    pytest.assume(folder["table_path"] == "results.txt")
    folder.save()
    loaded = Folder.load(folder.json_path)
    pytest.assume(loaded.path == folder.path)
    pytest.assume(loaded.get_file("table_path") == path)
    pytest.assume(loaded.read_text("table_path") == "cycles\n")


def test_dir_object_missing_file(tmp_path):
    folder = Folder("results", tmp_path)
    pytest.assume(folder.get_file("csv_path") is None)
    with pytest.raises(FileNotFoundError):
        folder.read_text("csv_path")
    with pytest.raises(ValueError):
        folder.set_file("csv_path", tmp_path / "outside.csv")


def test_load_all_records(tmp_path):
    for name, count in (("b", 2), ("a", 1)):
        Note(name, tmp_path / "notes", count=count).save()
    notes = Note.load_all(tmp_path / "notes")
    pytest.assume([note.name for note in notes] == ["a", "b"])
    pytest.assume([note["count"] for note in notes] == [1, 2])
    pytest.assume(Note.load_all(tmp_path / "missing") == [])


def test_configure_logger_is_idempotent():
    stream = io.StringIO()
    configure_logger(logging.INFO, stream=stream)
    logger = configure_logger(logging.INFO, stream=stream)
    logging.getLogger("isdc.tests").info("hello")
    handlers = [h for h in logger.handlers if getattr(h, "_isdc_handler", False)]
    pytest.assume(len(handlers) == 1)
    pytest.assume(stream.getvalue() == "[INFO] hello\n")
    for handler in handlers:
        logger.removeHandler(handler)


def test_log_duration(caplog):
    logger = logging.getLogger("isdc.tests")
    with caplog.at_level(logging.INFO, logger="isdc"):
        with log_duration(logger, "block", logging.INFO) as timer:
            pass
    pytest.assume(timer.elapsed >= 0.0)
    pytest.assume("block took" in caplog.text)
