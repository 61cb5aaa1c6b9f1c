"""Test utils."""

import pytest
import yaml

from KOSTKA import utils


def _square(inputs, x):
    return inputs + x * x


def test_parse_parameters(tmp_path, monkeypatch):
    """Test defaults, overrides, yaml files and the grid size variable."""
    monkeypatch.delenv("KOSTKA_GRID_MAX", raising=False)
    params = utils.parse_parameters()
    assert params["method"] == "rc"
    assert params["grid_max_size"] == 6

    assert utils.parse_parameters({"method": "paths"})["method"] == "paths"

    file = tmp_path / "params.yaml"
    file.write_text(yaml.safe_dump({"method": "weyl", "max_M": 4}))
    params = utils.parse_parameters(str(file))
    assert params["method"] == "weyl"
    assert params["max_M"] == 4
    assert params["charge_method"] == "via_bijection"

    monkeypatch.setenv("KOSTKA_GRID_MAX", "3")
    assert utils.parse_parameters()["grid_max_size"] == 3
    assert utils.parse_parameters({"grid_max_size": 2})["grid_max_size"] == 2


def test_check_parameters():
    """Test that invalid parameters are rejected."""
    with pytest.raises(AssertionError):
        utils.parse_parameters({"method": "unknown"})
    with pytest.raises(AssertionError):
        utils.parse_parameters({"max_M": 1})
    with pytest.raises(AssertionError):
        utils.check_parameters({"method": "rc"})


def test_parallel_proc():
    """Test serial and parallel evaluation."""
    assert utils.parallel_proc(_square, [1, 2, 3], 1, processes=1, verbose=False) == [2, 5, 10]
    assert utils.parallel_proc(_square, [1, 2, 3], 1, processes=2, verbose=False) == [2, 5, 10]


def test_errors():
    """Test that every library error derives from KostkaError."""
    for error in (utils.SizeMismatch, utils.LevelTooSmall, utils.NoStabilization):
        assert issubclass(error, utils.KostkaError)
