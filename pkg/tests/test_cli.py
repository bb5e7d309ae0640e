"""Tests for the command-line entry point."""

import csv
import io
import json
import logging

import pytest

from main import build_parser, main, parse_caps
from src.config import get_config
from src.errors import MalformedInput


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    saved = (root.level, root.handlers[:])
    yield
    root.setLevel(saved[0])
    root.handlers[:] = saved[1]


def run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    captured = capsys.readouterr()
    return code, captured.out


class TestExitCodes:
    """Test the exit-code contract."""

    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_malformed_graph6(self, capsys):
        code, out = run(capsys, "spread", "~~")
        assert code == 2
        assert out == ""

    def test_refused_psi_range(self, capsys):
        code, _ = run(capsys, "psi-max", "--s", "11", "--t", "11")
        assert code == 1

    def test_refused_non_admissible(self, capsys):
        code, _ = run(capsys, "ell0", "--s", "8", "--t", "8", "--n", "100")
        assert code == 1

    def test_bad_caps(self, capsys):
        code, _ = run(capsys, "spread", "A_", "--caps", "threads=many")
        assert code == 2


class TestCommands:
    """Test individual commands end to end."""

    def test_spread_of_k2(self, capsys):
        code, out = run(capsys, "spread", "A_")
        assert code == 0
        assert out.strip() == "2.0"

    def test_spread_json(self, capsys):
        code, out = run(capsys, "spread", "Bw", "--json")
        report = json.loads(out)
        assert code == 0
        assert report['command'] == "spread"
        assert report['results']['n'] == 3
        assert report['results']['spread'] == pytest.approx(3.0)

    def test_ell0_json(self, capsys):
        code, out = run(capsys, "ell0", "--s", "2", "--t", "2", "--n", "100", "--json")
        results = json.loads(out)['results']
        assert code == 0
        assert results['ell_one']['num'] == 890
        assert results['ell_one']['den'] == 27
        assert results['ell_candidates'] == [33]

    def test_admissible_csv(self, capsys):
        code, out = run(capsys, "admissible", "--s-max", "8", "--t-max", "24", "--csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        verdicts = {(int(r['s']), int(r['t'])): r['admissible'] for r in rows}
        assert verdicts[(8, 8)] == "no"
        assert verdicts[(8, 9)] == "yes"
        assert verdicts[(2, 2)] == "yes"

    def test_psi_max(self, capsys):
        code, out = run(capsys, "psi-max", "--s", "3", "--t", "3")
        assert code == 0
        assert out.startswith("psi_max = 0 (admissible)")

    def test_construct_default_ell(self, capsys):
        code, out = run(capsys, "construct", "--s", "2", "--t", "2", "--n", "40", "--json")
        results = json.loads(out)['results']
        assert code == 0
        assert results['ell'] == 13
        assert results['edges'] == 52

    def test_kst_minor(self, capsys):
        code, out = run(capsys, "kst-minor", "Cr", "--s", "2", "--t", "2")
        assert code == 0
        assert out.startswith("minor found")
        code, out = run(capsys, "minor", "Cr", "C~")
        assert out.strip() == "no minor"

    def test_search(self, capsys):
        code, out = run(capsys, "search", "--n", "4", "--s", "2", "--t", "2", "--json")
        results = json.loads(out)['results']
        assert code == 0
        assert results['examined'] == 11
        assert results['census_size'] == 8

    def test_expand_without_implicit_solve(self, capsys):
        # K1 ∨ K5: Δ(R) = 4 exceeds √a₀ = √5
        code, out = run(capsys, "expand", "@", "D~{", "--json")
        report = json.loads(out)
        assert code == 0
        assert report['results']['implicit_spread'] is None
        assert report['results']['exact_spread'] == pytest.approx(6.0)
        assert "implicit_spread" in report['diagnostics']

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "spread.json"
        code, out = run(capsys, "spread", "A_", "--json", "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())['results']['spread'] == pytest.approx(2.0)

    def test_csv_without_table_falls_back_to_json(self, capsys):
        code, out = run(capsys, "ell0", "--s", "2", "--t", "2", "--n", "40", "--csv")
        assert code == 0
        assert json.loads(out)['results']['ell_candidates'] == [13]


class TestCaps:
    """Test --caps parsing and configuration overrides."""

    def test_parse_caps(self):
        caps = parse_caps("enum_max_n=7,minor-max-n=12,mader_factor=2.5,log_level=debug")
        assert caps == {'enum_max_n': 7, 'minor_max_n': 12, 'mader_factor': 2.5, 'log_level': "DEBUG"}
        assert parse_caps(None) == {}

    @pytest.mark.parametrize("text", ["threads", "=3", "colour=blue", "threads=x"])
    def test_parse_caps_rejects(self, text):
        with pytest.raises(MalformedInput):
            parse_caps(text)

    def test_caps_reach_the_config(self, capsys):
        code, _ = run(capsys, "spread", "A_", "--caps", "minor_max_n=9", "--threads", "2")
        assert code == 0
        assert get_config().minor_max_n == 9
        assert get_config().threads == 2

    def test_search_cap_is_refused(self, capsys):
        code, _ = run(capsys, "search", "--n", "5", "--s", "2", "--t", "2", "--caps", "search_max_n=4")
        assert code == 1

    def test_parser_lists_all_commands(self):
        parser = build_parser()
        args = parser.parse_args(["converge", "--s", "2", "--t", "2", "--n", "200", "400"])
        assert args.n == [200, 400]
        assert args.dps == 50
