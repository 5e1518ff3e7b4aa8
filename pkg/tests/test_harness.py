import csv
import io
import json

import pytest

from blockcodes import cli, harness
from blockcodes.families import clique, path, path_power, thin_spider
from blockcodes.graph_core import Graph, emit_graph


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestRunChecks:
    def test_every_check_has_status(self):
        r = harness.run_checks(thin_spider(4))
        assert list(r.checks) == list(harness.CHECKS)
        assert all(st.status in ("pass", "fail", "skip", "finding") for st in r.checks.values())
        assert r.gamma_id == 5 and r.gamma_old == 4

    def test_p4_old_ub_skipped(self):
        r = harness.run_checks(path(4))
        assert r.checks["old_ub"].status == "skip"
        assert r.checks["old_ub"].reason == "exception graph"

    def test_path_power_scope(self):
        r = harness.run_checks(path_power(6, 2))
        assert r.checks["id_ub"].status == "skip"
        assert r.checks["id_ub"].reason == "not a block graph"
        assert r.gamma_id == 5 and r.nq == 4

    def test_gamma_absent_iff_inadmissible(self):
        r = harness.run_checks(clique(3))
        assert r.gamma_id is None and r.gamma_old is not None and r.gamma_ld == 2
        r = harness.run_checks(path(3))
        assert r.gamma_old is None and r.gamma_id == 2

    def test_doubling_is_a_finding_not_a_failure(self):
        r = harness.run_checks(path(4))
        assert r.checks["double_ld"].status == "finding"
        assert "double_ld" not in r.failed
        assert r.checks["double_ld"].witness == emit_graph(path(4))

    def test_failures_carry_witness(self):
        r = harness.run_checks(clique(4))
        assert r.checks["claims"].status == "fail"
        assert r.checks["claims"].witness == emit_graph(clique(4))
        assert "LD:v4_refined" in r.checks["claims"].reason

    def test_canonical_id(self):
        a = harness.run_checks(path(4))
        b = harness.run_checks(Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)]))
        assert a.canon == b.canon


class TestReports:
    def test_json_deterministic(self):
        a = harness.reports_to_json(harness.run_sweep(6, families=False))
        b = harness.reports_to_json(harness.run_sweep(6, families=False))
        assert a == b

    def test_csv_matches_json(self):
        reports = harness.run_sweep(6, families=True)
        js = json.loads(harness.reports_to_json(reports))
        rows = list(csv.DictReader(io.StringIO(harness.reports_to_csv(reports))))
        assert len(rows) == len(js)
        for row, obj in zip(rows, js):
            assert row["canon"] == obj["canon"]
            for key in ("n", "nq"):
                assert int(row[key]) == obj[key]
            for key in ("identifiable", "old_admissible"):
                assert bool(int(row[key])) == obj[key]
            for key in ("gamma_id", "gamma_ld", "gamma_old"):
                assert (int(row[key]) if row[key] else None) == obj[key]
            for name in harness.CHECKS:
                assert row[name] == harness.CSV_LETTER[obj["checks"][name]["status"]]

    def test_csv_header(self):
        text = harness.reports_to_csv(harness.run_sweep(3))
        header = text.splitlines()[0].split(",")
        assert header == harness.CSV_COLUMNS + list(harness.CHECKS)


class TestCli:
    def test_solve_p4_old(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["solve", "--format", "edgelist", "--code", "old"], "4 3\n0 1\n1 2\n2 3\n", monkeypatch)
        assert code == 0
        assert json.loads(out)["gamma"] == 4

    def test_gen_spider_pipe_solve(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["gen", "--family", "spider", "--k", "3"])
        assert code == 0
        code, out, _ = run_cli(capsys, ["solve", "--code", "id"], out, monkeypatch)
        assert code == 0 and json.loads(out)["gamma"] == 4

    def test_solve_brute(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["solve", "--code", "ld", "--brute"], "C~\n", monkeypatch)
        assert json.loads(out)["gamma"] == 3

    def test_solve_inadmissible(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["solve", "--code", "id"], "A_\n", monkeypatch)
        assert code == 1 and json.loads(out)["error"] == "true twins"

    def test_gen_formats(self, capsys):
        code, out, _ = run_cli(capsys, ["gen", "--family", "path_power", "--k", "4", "--p", "1", "--format", "edgelist"])
        assert out == "4 3\n0 1\n1 2\n2 3\n"
        code, out, _ = run_cli(capsys, ["gen", "--family", "random_block", "--k", "5", "--p", "3", "--seed", "2"])
        assert code == 0 and out.strip()

    def test_enumerate_to_file(self, capsys, tmp_path):
        dest = tmp_path / "n5.g6"
        assert cli.main(["enumerate", "--n", "5", "--out", str(dest)]) == 0
        assert len(dest.read_text().splitlines()) == 9

    def test_construct_trace(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["construct"], emit_graph(thin_spider(3)) + "\n", monkeypatch)
        data = json.loads(out)
        assert code == 0 and data["size"] <= 4 and data["trace"][-1]["depth"] == 0

    def test_construct_precondition(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["construct"], "Bw\n", monkeypatch)
        assert code == 1 and "identifiable" in json.loads(out)["error"]

    @pytest.mark.parametrize(
        "argv",
        [[], ["bogus"], ["gen", "--family", "nope", "--k", "3"], ["gen", "--family", "spider", "--k", "2"],
         ["gen", "--family", "path_power", "--k", "4"], ["verify", "--max-n", "12"], ["enumerate", "--n", "0"]],
    )
    def test_usage_errors(self, capsys, argv):
        assert cli.main(argv) == 2

    def test_parse_error_is_usage(self, capsys, monkeypatch):
        code, _, err = run_cli(capsys, ["solve", "--format", "edgelist"], "2 1\n0 5\n", monkeypatch)
        assert code == 2 and "outside" in err

    def test_verify_clean_sweep_exits_zero(self, capsys, tmp_path):
        assert cli.main(["verify", "--max-n", "3", "--out", str(tmp_path / "r.json")]) == 0

    def test_verify_exit_matches_report(self, capsys, tmp_path):
        out = tmp_path / "r.json"
        code = cli.main(["verify", "--max-n", "6", "--out", str(out)])
        failed = [r for r in json.loads(out.read_text()) if any(c["status"] == "fail" for c in r["checks"].values())]
        assert code == (1 if failed else 0)

    def test_failure_injection_flips_exit(self, capsys, monkeypatch):
        assert cli.main(["verify", "--max-n", "3"]) == 0
        corrupted = lambda f: harness._verdict(f.gid <= f.nq - 1) if f.block and f.identifiable else harness.CheckStatus("skip")  # noqa: E731
        monkeypatch.setitem(harness.CHECKS, "id_ub", corrupted)
        assert cli.main(["verify", "--max-n", "3"]) == 1


def test_old_lower_bounds_fail_on_k4_with_three_pendants():
    # K4 on {3,4,5,6}, pendants at 4, 5, 6; {4,5,6} is an OLD code of size 3 < 7/3 + 1
    g = Graph.from_edges(7, [(0, 6), (1, 5), (2, 4), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
    r = harness.run_checks(g)
    assert r.gamma_old == 3 and r.n == 7 and r.nq == 4
    assert r.checks["lb_n"].status == "fail"
    assert r.checks["lb_nq"].status == "fail"


def test_spider_three_breaks_old_nq_bound():
    r = harness.run_checks(thin_spider(3))
    assert (r.gamma_old, r.nq) == (3, 4)
    assert r.checks["lb_nq"].status == "fail" and r.checks["lb_n"].status == "pass"
