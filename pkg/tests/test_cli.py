from __future__ import annotations

import csv
import io
import json

import pytest

from twobridge.bounds import DeltaBoundReport, bound_report
from twobridge.cli import main
from twobridge.lab import FamilyBounds, enumerate_family, verify_table1, verify_table2
from twobridge.reports import emit_report, table2_matrix


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestCommands:
    def test_a2(self):
        assert run("a2", "C(3,2,2,1,2)") == (0, "0\n", "")

    def test_a2_json(self):
        code, out, _ = run("--format", "json", "a2", "2,2")
        assert code == 0 and json.loads(out) == {"word": "C(2,2)", "a2": -1}

    def test_udelta(self):
        code, out, _ = run("udelta", "C(2,2)")
        assert code == 0 and out.startswith("lower 1, upper 1, exact")

    def test_udelta_json(self):
        code, out, _ = run("--format", "json", "udelta", "C(2,1,5)")
        d = json.loads(out)
        assert code == 0 and d["exact"] and d["lower"] == 2

    def test_dgd(self):
        code, out, _ = run("--format", "json", "dgd", "C(6,2)", "C(4,4)")
        d = json.loads(out)
        assert code == 0 and (d["lower"], d["upper"]) == (1, 3)

    def test_identify(self):
        code, out, _ = run("--format", "json", "identify", "C(5,1,2)")
        d = json.loads(out)
        assert code == 0 and d["name"] == "8_2" and d["p"] == 17 and d["a2"] == 0

    def test_identify_link(self):
        code, out, _ = run("--format", "json", "identify", "C(2)")
        assert code == 0 and json.loads(out)["kind"] == "link"

    def test_table1(self):
        code, out, _ = run("table1")
        assert code == 0 and "table 1: ok" in out

    def test_table2_text(self):
        code, out, _ = run("--format", "text", "table2")
        assert code == 0
        assert out.count("1 or 3") == 1 and out.count("2 or 4") == 2
        assert "table 2: ok" in out

    def test_scan_family_jsonl(self):
        code, out, _ = run("--format", "json", "scan-family", "--n-max", "1", "--beta-min", "-1",
                           "--beta-max", "1")
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 0 and len(lines) == 3 + 9
        assert set(lines[0]) == {"params", "word", "p", "q", "name", "a2", "chirality"}

    def test_scan_family_limit(self):
        code, out, _ = run("--format", "json", "scan-family", "--limit", "2")
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 0 and len(lines) == 3 and lines[-1]["truncated"]

    def test_catalog(self):
        code, out, _ = run("--format", "json", "catalog")
        rows = json.loads(out)
        assert code == 0 and any(r["name"] == "10_6" for r in rows)

    def test_convention_check(self):
        assert run("--seed-convention-check", "a2", "C(3)")[0] == 0


class TestExitCodes:
    def test_malformed_word(self):
        code, out, err = run("a2", "C(2,x)")
        assert code == 2 and out == ""
        assert "position 4" in err and "^" in err

    def test_link_where_knot_needed(self):
        code, _, err = run("udelta", "C(2)")
        assert code == 2 and "link" in err

    def test_unknown_command(self):
        assert run("frobnicate")[0] == 2

    def test_bad_scan_bounds(self):
        assert run("scan-family", "--beta-min", "3", "--beta-max", "1")[0] == 2

    def test_table_mismatch_exits_one(self, monkeypatch):
        import twobridge.lab as lab
        monkeypatch.setitem(lab.TABLE2, ("4_1", "6_1"), (3,))
        assert run("table2")[0] == 1


class TestReports:
    def test_bound_json_keys_and_round_trip(self):
        d = json.loads(emit_report(bound_report("C(3,4)"), "json"))
        assert list(d) == ["lower", "upper", "exact", "certificate", "provenance"]
        assert DeltaBoundReport.from_dict(d).as_dict() == d

    def test_bound_csv(self):
        rows = list(csv.reader(io.StringIO(emit_report(bound_report("C(2,2)"), "csv"))))
        assert rows[0][:3] == ["lower", "upper", "exact"] and rows[1][:3] == ["1", "1", "True"]

    def test_table2_csv_is_upper_triangular(self):
        rows = list(csv.reader(io.StringIO(emit_report(verify_table2(), "csv"))))
        assert len(rows) == 7 and all(len(r) == 7 for r in rows)
        body = [r[1:] for r in rows[1:]]
        for i in range(6):
            assert body[i][i] == "0"
            assert all(body[i][j] == "" for j in range(i))
            assert all(body[i][j] for j in range(i + 1, 6))
        assert body[2][3] == "1 or 3"

    def test_table2_matrix(self):
        m = table2_matrix(verify_table2())
        assert m[0][5] == "5" and m[3][4] == "2 or 4"

    def test_table1_formats(self):
        report = verify_table1()
        assert json.loads(emit_report(report, "json"))["ok"]
        assert len(list(csv.reader(io.StringIO(emit_report(report, "csv"))))) == 29

    def test_scan_csv(self):
        items = list(enumerate_family(FamilyBounds(n_max=0, beta_min=0, beta_max=2)))
        rows = list(csv.reader(io.StringIO(emit_report(items, "csv"))))
        assert rows[0][0] == "beta" and len(rows) == 4

    @pytest.mark.parametrize("fmt", ["text", "json", "csv"])
    def test_deterministic(self, fmt):
        first = [run("--format", fmt, cmd, *args) for cmd, args in
                 [("table2", ()), ("udelta", ("C(4,4,2,2)",)), ("catalog", ())]]
        second = [run("--format", fmt, cmd, *args) for cmd, args in
                  [("table2", ()), ("udelta", ("C(4,4,2,2)",)), ("catalog", ())]]
        assert first == second

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(bound_report("C(3)"), "xml")

    def test_unrenderable(self):
        with pytest.raises(TypeError):
            emit_report(3, "text")
