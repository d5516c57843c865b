import json
import subprocess
import sys

import pytest

from corekit import cli, verify
from corekit.report import CheckReport


def run_ok(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def expect_usage_error(argv):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)
    assert excinfo.value.code == 2


class TestSeriesCommand:
    def test_text_default_method(self, capsys):
        code, out, _ = run_ok(capsys, ["series", "--t", "3", "--limit", "9"])
        assert code == 0
        assert out.splitlines() == ["1", "1", "1", "0", "1", "0", "1", "0", "0", "1"]

    def test_limit_zero(self, capsys):
        code, out, _ = run_ok(capsys, ["series", "--t", "2", "--limit", "0"])
        assert code == 0
        assert out.splitlines() == ["1"]

    def test_json(self, capsys):
        code, out, _ = run_ok(
            capsys, ["series", "--t", "3", "--limit", "9", "--format", "json"]
        )
        assert code == 0
        assert json.loads(out) == {
            "t": 3,
            "limit": 9,
            "coeffs": [1, 1, 1, 0, 1, 0, 1, 0, 0, 1],
        }
        assert json.dumps(json.loads(out), separators=(",", ":")) == out.strip()

    def test_methods_agree(self, capsys):
        outputs = []
        for method in ("eq2", "closed", "oracle"):
            _, out, _ = run_ok(
                capsys, ["series", "--t", "4", "--limit", "30", "--method", method]
            )
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_closed_needs_small_modulus(self):
        expect_usage_error(["series", "--t", "5", "--limit", "9", "--method", "closed"])

    def test_oracle_cap(self):
        expect_usage_error(["series", "--t", "3", "--limit", "200", "--method", "oracle"])

    def test_rejects_t_below_two(self):
        expect_usage_error(["series", "--t", "1", "--limit", "5"])


class TestEnumerateCommand:
    def test_text(self, capsys):
        code, out, _ = run_ok(capsys, ["enumerate", "--t1", "2", "--t2", "3"])
        assert code == 0
        assert out.splitlines() == [
            "parts=[] size=0 beta=[]",
            "parts=[1] size=1 beta=[1]",
        ]

    def test_distinct_json(self, capsys):
        code, out, _ = run_ok(
            capsys,
            ["enumerate", "--t1", "4", "--t2", "5", "--distinct", "--format", "json"],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 5
        assert [p["size"] for p in payload["partitions"]] == [0, 1, 2, 3, 3]
        assert payload["partitions"][4] == {"parts": [2, 1], "size": 3, "beta": [3, 1]}
        assert json.dumps(payload, separators=(",", ":")) == out.strip()

    def test_rejects_non_coprime(self):
        expect_usage_error(["enumerate", "--t1", "4", "--t2", "6"])

    def test_rejects_oversized_gap_set(self):
        expect_usage_error(["enumerate", "--t1", "12", "--t2", "13"])


class TestStatsCommand:
    def test_text(self, capsys):
        code, out, _ = run_ok(capsys, ["stats", "--t", "4"])
        assert code == 0
        assert out.splitlines() == [
            "count=5",
            "largest_size=3",
            "maximizer_count=2",
            "maximizers=[[3], [2, 1]]",
            "total_size=9",
            "average_size=9/5",
        ]

    def test_small_t(self, capsys):
        code, out, _ = run_ok(capsys, ["stats", "--t", "2"])
        assert code == 0
        assert "count=2" in out and "average_size=1/2" in out

    def test_json(self, capsys):
        code, out, _ = run_ok(capsys, ["stats", "--t", "4", "--format", "json"])
        payload = json.loads(out)
        assert payload["count"] == 5
        assert payload["average_size"] == "9/5"
        assert payload["maximizers"][0] == {"parts": [3], "size": 3, "beta": [3]}

    def test_rejects_t_one(self):
        expect_usage_error(["stats", "--t", "1"])


class TestTableCommand:
    def test_csv(self, capsys):
        code, out, _ = run_ok(capsys, ["table", "--t-max", "5"])
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "t,a,b,c,d,e,phi,psi,F"
        assert lines[1] == "2,2,1,1,1,1,1,0,1"
        assert lines[4] == "5,8,10,16,25,22,10,9,5"

    def test_json_round_trips_byte_identically(self, capsys):
        _, out, _ = run_ok(capsys, ["table", "--t-max", "8", "--format", "json"])
        reserialized = json.dumps(json.loads(out), separators=(",", ":"))
        assert reserialized == out.strip()

    def test_cap(self):
        expect_usage_error(["table", "--t-max", "91"])


class TestVerifyCommand:
    def test_small_sweep_passes(self, capsys):
        code, out, err = run_ok(
            capsys,
            ["verify", "--suite", "genfun", "--t-max", "4", "--n-max", "20"],
        )
        assert code == 0
        assert "passed 4/4 checks" in out
        assert "running" in err  # progress goes to stderr only

    def test_all_suite_small(self, capsys):
        code, out, _ = run_ok(
            capsys,
            ["verify", "--suite", "all", "--t-max", "4", "--n-max", "12", "--jobs", "2"],
        )
        assert code == 0
        assert "passed 20/20 checks" in out

    def test_json_output(self, capsys):
        code, out, _ = run_ok(
            capsys,
            [
                "verify",
                "--suite",
                "eta",
                "--t-max",
                "4",
                "--n-max",
                "10",
                "--format",
                "json",
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"] == {"total": 3, "passed": 3, "failed": 0}
        names = [c["check"] for c in payload["checks"]]
        assert names == sorted(names)

    def test_deterministic_modulo_elapsed(self, capsys):
        argv = ["verify", "--suite", "eta", "--t-max", "3", "--n-max", "8", "--format", "json"]
        _, first, _ = run_ok(capsys, argv)
        _, second, _ = run_ok(capsys, argv)

        def strip_elapsed(text):
            payload = json.loads(text)
            for check in payload["checks"]:
                check.pop("elapsed_ms")
            return payload

        assert strip_elapsed(first) == strip_elapsed(second)

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        def broken(t_max, n_max):
            return CheckReport(
                check="kernel.broken", status="fail", detail="forced counterexample"
            )

        monkeypatch.setitem(verify.SUITES, "kernel", {"kernel.broken": broken})
        code, out, _ = run_ok(capsys, ["verify", "--suite", "kernel"])
        assert code == 1
        assert "FAIL kernel.broken" in out
        assert "forced counterexample" in out

    def test_t_max_cap(self):
        expect_usage_error(["verify", "--suite", "all", "--t-max", "10000"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "corekit", "stats", "--t", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "count=2" in proc.stdout


def test_missing_command_is_usage_error():
    expect_usage_error([])
