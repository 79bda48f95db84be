import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from fibpart import cli
from fibpart.identities import IdentitySchedule, IdentityTerm, schedule_for

REPORT_SCHEMA = {
    "type": "object",
    "required": ["kind", "params", "passed", "residuals", "elapsed_ms"],
    "properties": {
        "kind": {"enum": ["verify", "lemma", "count", "terms", "table"]},
        "params": {"type": "object"},
        "passed": {"type": "boolean"},
        "residuals": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "value"],
                "properties": {"n": {"type": "integer"}, "value": {"type": "string", "pattern": "^-?[0-9]+$"}},
            },
        },
        "elapsed_ms": {"type": "number"},
    },
}


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return status, doc


def payload(doc):
    return {k: v for k, v in doc.items() if k != "elapsed_ms"}


class TestCount:
    def test_restricted(self, capsys):
        status, out, _ = run(capsys, "count", "--n", "29", "--modulus", "27", "--forbid", "0,12,15")
        assert status == 0 and out.strip().endswith("= 4133")

    def test_unrestricted(self, capsys):
        status, doc = run_json(capsys, "count", "--n", "29")
        assert status == 0 and doc["value"] == "4565"

    def test_everything_forbidden(self, capsys):
        status, doc = run_json(capsys, "count", "--n", "0", "--modulus", "5", "--forbid", "0,1,2,3,4")
        assert status == 0 and doc["value"] == "1"

    def test_paper_notation_normalized(self, capsys):
        status, doc = run_json(capsys, "count", "--n", "29", "--modulus", "27", "--forbid", "12,15,27")
        assert doc["value"] == "4133"
        assert doc["params"]["forbidden"] == [0, 12, 15]

    @pytest.mark.parametrize("forbid", ["1,,2", "a,b", "", "3;4"])
    def test_malformed(self, capsys, forbid):
        status, _, err = run(capsys, "count", "--n", "5", "--modulus", "7", "--forbid", forbid)
        assert status == 2 and "malformed" in err

    def test_forbid_needs_modulus(self, capsys):
        assert run(capsys, "count", "--n", "5", "--forbid", "1")[0] == 2

    def test_oracle(self, capsys):
        status, doc = run_json(capsys, "count", "--n", "20", "--modulus", "27", "--forbid", "0,3,24", "--oracle")
        assert status == 0 and doc["oracle"] == doc["value"]

    def test_oracle_bound_env(self, capsys, monkeypatch):
        monkeypatch.setenv("PARTITION_ORACLE_BOUND", "5")
        assert run(capsys, "count", "--n", "20", "--oracle")[0] == 2

    def test_csv(self, capsys):
        status, out, _ = run(capsys, "count", "--n", "28", "--modulus", "27", "--forbid", "0,6,21", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows == [{"n": "28", "modulus": "27", "forbidden": "0 6 21", "count": "2701"}]


class TestTerms:
    def test_m1(self, capsys):
        status, doc = run_json(capsys, "terms", "--m", "1")
        assert status == 0 and doc["params"]["modulus"] == 27
        assert [(t["shift"], t["sign"], t["forbidden"]) for t in doc["terms"]] == [
            (0, 1, [0, 12, 15]), (1, -1, [0, 6, 21]), (2, -1, [0, 3, 24])]

    def test_m2_text(self, capsys):
        status, out, _ = run(capsys, "terms", "--m", "2")
        lines = out.strip().splitlines()
        assert lines[0] == "m = 2, modulus = 75"
        assert lines[4] == "+ p(n - 5 | parts !== {0,10,65} (mod 75))"
        assert len(lines) == 6

    def test_m3_csv(self, capsys):
        status, out, _ = run(capsys, "terms", "--m", "3", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 7 and {r["modulus"] for r in rows} == {"147"}

    def test_m0_is_usage_error(self, capsys):
        assert run(capsys, "terms", "--m", "0")[0] == 2


class TestVerify:
    def test_both(self, capsys):
        status, doc = run_json(capsys, "verify", "--m", "1", "--max-n", "500", "--method", "both")
        assert status == 0 and doc["passed"] and doc["residuals"] == []
        assert [c["method"] for c in doc["checks"]] == ["counting", "series"]
        assert doc["checks"][0]["residual_at_zero"] == "1"

    def test_m2_text(self, capsys):
        status, out, _ = run(capsys, "verify", "--m", "2", "--max-n", "300")
        assert status == 0 and "PASS" in out

    def test_m5_json(self, capsys):
        status, doc = run_json(capsys, "verify", "--m", "5", "--max-n", "200")
        assert status == 0 and doc["passed"] is True

    def test_ceiling(self, capsys):
        assert run(capsys, "verify", "--m", "1", "--max-n", "5001")[0] == 2
        assert run(capsys, "verify", "--m", "1", "--max-n", "5001", "--ceiling", "6000", "--format", "csv")[0] == 0

    def test_corrupted_schedule(self, capsys, monkeypatch):
        def corrupted(m):
            s = schedule_for(m)
            t = s.terms[-1]
            return IdentitySchedule(m, s.modulus, s.terms[:-1] + (IdentityTerm(t.shift, -t.sign, t.restriction),))

        monkeypatch.setattr(cli, "schedule_for", corrupted)
        status, doc = run_json(capsys, "verify", "--m", "2", "--max-n", "60", "--method", "both")
        assert status == 1 and doc["passed"] is False
        assert doc["first_failing_n"] == 7
        assert doc["residuals"][0]["n"] == 7
        status, out, _ = run(capsys, "verify", "--m", "2", "--max-n", "60")
        assert status == 1 and "first failing n = 7" in out


class TestLemma:
    @pytest.mark.parametrize("k, order", [(1, 200), (4, 300), (1, 0)])
    def test_passes(self, capsys, k, order):
        status, doc = run_json(capsys, "lemma", "--k", str(k), "--order", str(order))
        assert status == 0 and doc["passed"] and doc["failing_i"] == []

    def test_failure_exit(self, capsys, monkeypatch):
        from fibpart import identities
        from fibpart.series import make_series

        monkeypatch.setattr(identities, "triple_product_sum_side", lambda k, i, o: make_series(o, {0: 1}))
        status, doc = run_json(capsys, "lemma", "--k", "2", "--order", "20")
        assert status == 1 and doc["failing_i"] == [1, 2, 3, 4]


class TestTable:
    def test_worked_example(self, capsys):
        status, doc = run_json(capsys, "table", "--m", "1", "--from", "27", "--to", "29")
        assert status == 0
        assert doc["rows"][-1] == {"n": 29, "counts": ["4133", "2701", "1432"], "residual": "0"}

    def test_n0(self, capsys):
        status, doc = run_json(capsys, "table", "--m", "1", "--from", "0", "--to", "0")
        assert doc["residuals"] == [{"n": 0, "value": "1"}]
        assert status == 0

    def test_m2_n7(self, capsys):
        status, out, _ = run(capsys, "table", "--m", "2", "--from", "7", "--to", "7", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert status == 0 and rows[0]["residual"] == "0"

    def test_reversed_range(self, capsys):
        assert run(capsys, "table", "--m", "1", "--from", "5", "--to", "2")[0] == 2


def test_text_and_json_agree(capsys):
    _, doc = run_json(capsys, "table", "--m", "1", "--from", "25", "--to", "29")
    _, out, _ = run(capsys, "table", "--m", "1", "--from", "25", "--to", "29")
    text_rows = [line.split("\t") for line in out.strip().splitlines()[2:]]
    json_rows = [[str(r["n"]), *r["counts"], r["residual"]] for r in doc["rows"]]
    assert text_rows == json_rows


@pytest.mark.parametrize("argv", [
    ["count", "--n", "40", "--modulus", "27", "--forbid", "0,12,15"],
    ["terms", "--m", "4"],
    ["verify", "--m", "3", "--max-n", "150", "--method", "both"],
    ["lemma", "--k", "2", "--order", "50"],
    ["table", "--m", "2", "--from", "0", "--to", "12"],
])
def test_deterministic(capsys, argv):
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    assert payload(a) == payload(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fibpart", "count", "--n", "27"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "p(27) = 3010"
    proc = subprocess.run([sys.executable, "-m", "fibpart", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
