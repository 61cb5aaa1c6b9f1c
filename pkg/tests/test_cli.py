"""Test the command line interface."""

import json

import pytest
from click.testing import CliRunner

from KOSTKA.cli import SCHEMA
from KOSTKA.cli import cli

EXAMPLE = ["--n", "3", "--lambda", "3,2,1", "--rects", "1x2,1x1,1x1,1x1,1x1"]


def test_kostka():
    """Test text and JSON output of a single polynomial."""
    runner = CliRunner()
    result = runner.invoke(cli, ["kostka"] + EXAMPLE + ["--ell", "2"])
    assert result.exit_code == 0
    assert result.output == "q^2 + q^3 + q^4\n"

    result = runner.invoke(cli, ["kostka", "--n", "2", "--lambda", "3,3", "--rects", "2x3"])
    assert result.exit_code == 0
    assert result.output == "1\n"

    result = runner.invoke(cli, ["kostka"] + EXAMPLE + ["--ell", "2", "--method", "weyl", "--json"])
    out = json.loads(result.output)
    assert out["schema"] == SCHEMA
    assert out["method"] == "weyl"
    assert out["lambda"] == [3, 2, 1]
    assert out["poly"] == {"2": 1, "3": 1, "4": 1}


def test_kostka_errors():
    """Test that usage and domain errors exit with code 2."""
    runner = CliRunner()
    assert runner.invoke(cli, ["kostka", "--n", "3"]).exit_code == 2
    bad_lambda = ["kostka", "--n", "2", "--lambda", "1,2", "--rects", "1x3"]
    assert runner.invoke(cli, bad_lambda).exit_code == 2
    bad_size = ["kostka", "--n", "2", "--lambda", "2,1", "--rects", "1x2"]
    assert runner.invoke(cli, bad_size).exit_code == 2
    low_level = ["kostka"] + EXAMPLE + ["--ell", "1", "--method", "fermionic"]
    assert runner.invoke(cli, low_level).exit_code == 2


def test_kostka_verify_all():
    """Test the comparison of all evaluators on one instance."""
    result = CliRunner().invoke(cli, ["kostka"] + EXAMPLE + ["--ell", "2", "--verify-all"])
    assert result.exit_code == 0
    assert "q^2 + q^3 + q^4" in result.output


def test_verify_bijection():
    """Test the bijection check."""
    result = CliRunner().invoke(cli, ["verify-bijection"] + EXAMPLE + ["--ell", "2", "--json"])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert out["counterexamples"] == []
    assert len(out["rows"]) == 8

    rows = "1x2,1x2,1x2,1x2,1x1"
    args = ["verify-bijection", "--n", "4", "--lambda", "3,3,2,1", "--rects", rows]
    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 0
    assert "0 counterexamples" in result.output


def test_branching():
    """Test the branching function and its truncation."""
    runner = CliRunner()
    args = ["branching", "--weight", "1,1", "--level-split", "1,1", "--rs", "1,1"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.output == "1 + q + q^2 + 2*q^3 + 2*q^4 + 3*q^5 + O(q^6)\n"

    result = runner.invoke(cli, args + ["--trunc", "0", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["limit"]["coeffs"] == {"0": 1}

    assert runner.invoke(cli, args + ["--n", "3"]).exit_code == 2
    assert runner.invoke(cli, args[:-1] + ["1"]).exit_code == 2


def test_branching_fermionic():
    """Test the fermionic branching function and its comparison with the limit."""
    runner = CliRunner()
    args = ["branching", "--weight", "1,1", "--level-split", "1,1", "--rs", "1,1", "--json"]
    ising = {"0": 1, "1": 1, "2": 1, "3": 2, "4": 2, "5": 3}

    result = runner.invoke(cli, args + ["--method", "fermionic"])
    assert result.exit_code == 0
    assert json.loads(result.output)["fermionic"]["coeffs"] == ising

    result = runner.invoke(cli, args + ["--method", "both"])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert out["limit"]["coeffs"] == out["fermionic"]["coeffs"] == ising


@pytest.mark.parametrize("method", ["limit", "fermionic", "both"])
def test_branching_level_split(method):
    """Test that a level split not adding up to the level of the weight is a usage error."""
    args = ["branching", "--weight", "1,1", "--level-split", "1,2", "--rs", "1,1"]
    result = CliRunner().invoke(cli, args + ["--method", method])
    assert result.exit_code == 2
    assert "--level-split" in result.output


def test_conjecture_skew():
    """Test that the experimental check always succeeds."""
    result = CliRunner().invoke(cli, ["conjecture-skew", "--max-size", "2"])
    assert result.exit_code == 0
    assert result.output.startswith("EXPERIMENTAL")


def test_conjecture_skew_larger():
    """Test the skew check on instances with |lambda| = 3, where relabeling merges letters."""
    result = CliRunner().invoke(cli, ["conjecture-skew", "--max-size", "3", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["schema"] == SCHEMA
