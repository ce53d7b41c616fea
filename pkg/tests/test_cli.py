import json
import subprocess
import sys

import pytest

from hopfly.cli import main
from hopfly.ring import parse_ring_elem, ring_elem_from_json
from hopfly.partitions import Partition
from hopfly.hopf import hopf_invariant


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestHopfCommand:
    def test_empty_pair(self, capsys):
        code, out, _ = run_cli(capsys, "hopf", "--lambda", "0", "--mu", "0")
        assert code == 0
        assert "value: 1*v^0*s^0" in out

    def test_golden_pair_text(self, capsys):
        code, out, _ = run_cli(capsys, "hopf", "--lambda", "3,1", "--mu", "2,2")
        assert code == 0
        value_line = next(l for l in out.splitlines() if l.startswith("value:"))
        parsed = parse_ring_elem(value_line.split("value:", 1)[1].strip())
        assert parsed == hopf_invariant(Partition((3, 1)), Partition((2, 2))).value

    def test_json_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "hopf", "--lambda", "2,1", "--mu", "1,1",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["lambda"] == [2, 1] and payload["mu"] == [1, 1]
        expected = hopf_invariant(Partition((2, 1)), Partition((1, 1))).value
        assert ring_elem_from_json(payload["value"]) == expected
        assert parse_ring_elem(payload["value"]["text"]) == expected


class TestOtherCommands:
    def test_unknot(self, capsys):
        code, out, _ = run_cli(capsys, "unknot", "--lambda", "1")
        assert code == 0
        assert "framing" in out

    def test_series(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--lambda", "1", "--degree", "3")
        assert code == 0
        assert "elementary series" in out and "complete series" in out

    def test_minor_q_display(self, capsys):
        code, out, _ = run_cli(capsys, "minor", "--lambda", "3,1", "--mu", "2,2", "--N", "3")
        assert code == 0
        assert "q = s^2" in out and "q^26" in out

    def test_sln_routes_agree(self, capsys):
        code, out, _ = run_cli(capsys, "sln", "--lambda", "3,1", "--mu", "2,2", "--N", "3")
        assert code == 0
        assert "routes agree: true" in out

    def test_sln_json(self, capsys):
        code, out, _ = run_cli(capsys, "sln", "--lambda", "1", "--mu", "1", "--N", "2",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["routes_agree"] is True
        assert payload["correction_exponent"] == {"numerator": -1, "denominator": 1}

    def test_verify_small_bounds(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-size", "2", "--max-n", "2",
                               "--degree", "4")
        assert code == 0
        assert "checks passed" in out
        # determinism: a second run prints the identical report
        _, out2, _ = run_cli(capsys, "verify", "--max-size", "2", "--max-n", "2",
                             "--degree", "4")
        assert out == out2


class TestErrorHandling:
    def test_bad_partition_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["hopf", "--lambda", "1,2", "--mu", "0"])
        assert exc.value.code == 2

    def test_missing_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["hopf", "--lambda", "1"])
        assert exc.value.code == 2

    def test_n_below_length_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "minor", "--lambda", "1,1,1", "--mu", "0", "--N", "2")
        assert code == 2
        assert "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfly", "hopf", "--lambda", "0", "--mu", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "v^-1" in proc.stdout
