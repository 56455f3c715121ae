"""
Unit tests for settings, exceptions, logging and report writing
"""

import json

import pandas as pd
import pytest
from pydantic import ValidationError

from src.core.config.settings import Settings
from src.core.exceptions import (
    FilterLabError,
    InvalidParameterError,
    ModelFormatError,
    NoCrossingError,
    ShapeError,
)
from src.core.logger import logger, setup_logger
from src.core.report_manager import ReportManager, load_manifest
from src.nnet.serialization import load_model, save_model
from src.version import __version__


@pytest.mark.unit
class TestSettings:
    """Tests for environment-driven settings"""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("FILTERLAB_THREADS", raising=False)
        config = Settings(_env_file=None)
        assert config.threads == 4
        assert config.seed == 2023
        assert config.gain_threshold == 0.7
        assert config.sampling_rate_hz == 8000.0

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("FILTERLAB_THREADS", "2")
        monkeypatch.setenv("FILTERLAB_REGION_GRID_DENSITY", "51")
        config = Settings(_env_file=None)
        assert config.threads == 2
        assert config.region_grid_density == 51

    def test_thread_cap_must_be_positive(self, monkeypatch):
        monkeypatch.setenv("FILTERLAB_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


@pytest.mark.unit
class TestExceptions:
    """Tests for the error hierarchy"""

    def test_value_errors(self):
        assert issubclass(InvalidParameterError, ValueError)
        assert issubclass(ShapeError, FilterLabError)
        assert not issubclass(NoCrossingError, ValueError)

    def test_format_error_location(self):
        error = ModelFormatError("Bad document", field="layers[0].weights", line=3, column=7)
        assert str(error) == "Bad document (field 'layers[0].weights'; line 3, column 7)"
        assert str(ModelFormatError("Bad document")) == "Bad document"


@pytest.mark.unit
class TestLogger:
    """Tests for logger setup"""

    def test_writes_log_files(self, tmp_path):
        setup_logger(level="WARNING", log_dir=tmp_path)
        logger.error("report write failed")
        logger.complete()
        assert (tmp_path / "framework.log").exists()
        assert "report write failed" in (tmp_path / "errors.log").read_text()


@pytest.mark.unit
class TestReportManager:
    """Tests for artifact and manifest writing"""

    def test_manifest_lists_artifacts(self, tmp_path):
        reports = ReportManager(tmp_path / "run")
        reports.write_csv(pd.DataFrame({"x": [0.1, 1 / 3]}), "values.csv")
        reports.write_json({"a": 1}, "sub/doc.json")
        manifest = reports.write_manifest("dataset", {"size": 2}, {"data": 1})
        assert manifest.version == __version__
        loaded = load_manifest(tmp_path / "run" / "manifest.json")
        assert loaded.command == "dataset"
        assert loaded.seeds == {"data": 1}
        assert [p.split("/")[-1] for p in loaded.artifacts] == ["values.csv", "doc.json"]

    def test_csv_keeps_full_precision(self, tmp_path):
        reports = ReportManager(tmp_path)
        path = reports.write_csv(pd.DataFrame({"x": [1 / 3]}), "values.csv")
        assert path.read_text() == "x\n0.33333333333333331\n"

    def test_json_is_indented(self, tmp_path):
        path = ReportManager(tmp_path).write_json({"a": [1, 2]}, "doc.json")
        assert json.loads(path.read_text()) == {"a": [1, 2]}
        assert path.read_text().endswith("\n")

    def test_domain_writer_is_tracked(self, tmp_path, printed_relu_model):
        reports = ReportManager(tmp_path)
        path = reports.write_artifact(save_model, printed_relu_model, "nested/model.json")
        assert load_model(path).widths == (2, 2, 1)
        assert reports.written == [path]

    def test_domain_writer_failure(self, tmp_path, printed_relu_model):
        blocker = tmp_path / "file.txt"
        blocker.write_text("x")
        reports = ReportManager(tmp_path)
        with pytest.raises(OSError):
            reports.write_artifact(save_model, printed_relu_model, blocker / "model.json")
        assert reports.written == []

    def test_unwritable_location(self, tmp_path):
        blocker = tmp_path / "file.txt"
        blocker.write_text("x")
        with pytest.raises(OSError):
            ReportManager(blocker / "sub")
