"""
配置、基类与工具函数测试
"""

import logging
import math
from fractions import Fraction

import pytest

from config.settings import settings
from core.base_module import BaseModule
from core.exceptions import ConfigurationError, DataStorageError, HardCoreToolkitException
from core.models import EvalResult
from modules.graph_core import cycle, petersen
from utils import DataProcessor, FileManager, format_fraction, setup_logger
from utils.logger import _parse_size


class DemoModule(BaseModule):
    settings_section = "SCAN_CONFIG"


def test_setting_priority(restore_settings):
    module = DemoModule({"top_k": 3})
    assert module.get_setting("top_k") == 3
    assert DemoModule().get_setting("top_k") == settings.SCAN_CONFIG["top_k"]
    assert DemoModule().get_setting("missing", "fallback") == "fallback"
    settings.update_config("SCAN_CONFIG", {"top_k": 7})
    assert DemoModule().get_setting("top_k") == 7


def test_update_config_errors():
    with pytest.raises(ConfigurationError):
        settings.update_config("NO_SUCH_CONFIG", {})
    with pytest.raises(ConfigurationError):
        settings.update_config("ROOT_DIR", {})


def test_load_yaml(tmp_path, restore_settings):
    good = tmp_path / "good.yaml"
    good.write_text("SAMPLER_CONFIG:\n  batch_count: 5\n", encoding="utf-8")
    settings.load_yaml(good)
    assert settings.SAMPLER_CONFIG["batch_count"] == 5
    bad = tmp_path / "bad.yaml"
    bad.write_text("- just\n- a list\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        settings.load_yaml(bad)
    with pytest.raises(ConfigurationError):
        settings.load_yaml(tmp_path / "absent.yaml")


def test_snapshot_is_a_copy():
    snapshot = settings.snapshot("EXACT_CONFIG")
    snapshot["max_vertices"] = -1
    assert settings.EXACT_CONFIG["max_vertices"] != -1
    assert "LOGGING_CONFIG" in settings.snapshot()


def test_module_lifecycle():
    with DemoModule() as module:
        assert module.get_status()["initialized"]
    assert DemoModule({"max_workers": 3}).worker_count() == 3
    assert DemoModule({"max_workers": 0}).worker_count() == 1
    module.update_config({"top_k": 5})
    assert module.get_setting("top_k") == 5
    with pytest.raises(NotImplementedError):
        DemoModule().process(None)


def test_exception_carries_code_and_details():
    error = HardCoreToolkitException("boom", details={"k": 1})
    assert error.code == "HardCoreToolkitException"
    assert error.details == {"k": 1}


def test_format_fraction():
    assert format_fraction(Fraction(6, 3)) == "2"
    assert format_fraction(Fraction(197136, 137585)) == "197136/137585"


def test_to_plain():
    processor = DataProcessor()
    result = EvalResult(lam=Fraction(1), p=Fraction(11), p_prime=Fraction(15), p_second=Fraction(10),
                        mean_size=Fraction(15, 11), occupancy=Fraction(3, 11),
                        variance=Fraction(50, 121), exact=True)
    plain = processor.to_plain(result)
    assert plain["occupancy"] == "3/11"
    assert plain["exact"] is True
    assert processor.to_plain({"x": math.inf, "g": cycle(5)}) == {"x": "inf", "g": "Dhc"}


def test_batches():
    assert list(DataProcessor().batches(range(5), 2)) == [[0, 1], [2, 3], [4]]
    with pytest.raises(ValueError):
        list(DataProcessor().batches([], 0))


def test_file_manager_round_trips(tmp_path):
    manager = FileManager(tmp_path)
    assert manager.write_graph6([cycle(5), petersen()], "out/graphs.g6") == 2
    items = list(manager.iter_graph6("out/graphs.g6"))
    assert [(line, text) for line, text, _ in items] == [(1, "Dhc"), (2, "IheA@GUAo")]
    assert manager.save_jsonl([{"ratio": "4/3"}], "r.jsonl") == 1
    assert manager.load_jsonl("r.jsonl") == [{"ratio": "4/3"}]
    manager.save_csv([{"a": 1, "b": 2}], "t.csv", columns=["b", "a"])
    assert list(manager.load_csv("t.csv").columns) == ["b", "a"]


def test_file_manager_missing_files(tmp_path):
    manager = FileManager(tmp_path)
    with pytest.raises(DataStorageError):
        list(manager.iter_graph6("absent.g6"))
    with pytest.raises(DataStorageError):
        manager.load_text("absent.txt")
    with pytest.raises(DataStorageError):
        manager.load_csv("absent.csv")


def test_iter_graph6_records_skipped_lines(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\n\nB\nDhc\n", encoding="ascii")
    manager = FileManager()
    assert [text for _, text, _ in manager.iter_graph6(path)] == ["Bw", "Dhc"]
    assert manager.last_skipped == [3]


def test_setup_logger_uses_stderr(tmp_path):
    logger = setup_logger("hardcore.test", level="debug", log_file=tmp_path / "logs" / "run.log")
    assert logger.level == logging.DEBUG
    assert any(isinstance(h, logging.StreamHandler) and getattr(h, "stream", None) is not None
               for h in logger.handlers)
    assert (tmp_path / "logs" / "run.log").exists()
    again = setup_logger("hardcore.test", level="WARNING")
    assert again is logger and logger.level == logging.WARNING


def test_parse_size():
    assert _parse_size("10MB") == 10 * 1024 * 1024
    assert _parse_size("2KB") == 2048


def test_build_corpus_script(tmp_path):
    from scripts.build_corpus import main as build_corpus

    out = tmp_path / "tf.g6"
    assert build_corpus(["--out", str(out), "--atlas", "4", "--triangle-free"]) == 0
    graphs = [g for _, _, g in FileManager().iter_graph6(out)]
    # 1..4 个顶点的无三角形图共 1 + 2 + 3 + 7 个
    assert len(graphs) == 13
    assert all(g.n <= 4 for g in graphs)

    out = tmp_path / "random.g6"
    assert build_corpus(["--out", str(out), "--random", "3", "--n-min", "9", "--n-max", "10", "--seed", "4"]) == 0
    first = [g for _, _, g in FileManager().iter_graph6(out)]
    assert [g.n for g in first] == [9, 10, 9]


def test_data_paths():
    assert settings.get_data_path("corpora").name == "corpora"
    assert (settings.get_data_path("corpora") / "small_named.g6").exists()
    assert settings.get_data_path("unknown") == settings.DATA_DIR
