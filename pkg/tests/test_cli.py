import io
import json
from contextlib import redirect_stderr, redirect_stdout

from seifert_delta.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    report = json.loads(out)
    assert report["schema"] == "seifert-delta/1"
    return report


def no_floats(node):
    if isinstance(node, float):
        return False
    if isinstance(node, dict):
        return all(no_floats(v) for v in node.values())
    if isinstance(node, list):
        return all(no_floats(v) for v in node)
    return True


class TestDeltaCommand:
    def test_hantzsche_wendt_multiset(self):
        report = run_json("delta", "1;(2,1),(2,1)")
        assert report["result"]["multiset"] == [
            {"value": "-1/4", "count": 6},
            {"value": "0", "count": 4},
            {"value": "1/4", "count": 6},
        ]
        assert len(report["result"]["structures"]) == 16
        assert report["result"]["h1_order"] == 16

    def test_circle_bundle(self):
        report = run_json("delta", "3;")
        values = sorted(e["value"] for e in report["result"]["multiset"])
        assert values == ["0", "1/8", "5/8"]
        assert sum(e["count"] for e in report["result"]["multiset"]) == 4

    def test_l_zero_is_valid(self):
        code, out, _ = run("delta", "0;(2,1),(2,1)")
        assert code == 0
        assert json.loads(out)["result"]["l"] == "-1"

    def test_parse_error_exit_2(self):
        code, _, err = run("delta", "garbage")
        assert code == 2 and "error" in err

    def test_domain_error_exit_3(self):
        code, _, err = run("delta", "1;(4,2)")
        assert code == 3 and "error" in err

    def test_policy_flag(self):
        report = run_json("delta", "1;(2,1),(2,1)", "--policy", "plus-first")
        m0 = [r for r in report["result"]["structures"] if r["m"] == 0]
        assert all(isinstance(r["delta_invariant"], str) for r in m0)
        plus = [r["delta_invariant"] for r in m0 if r["tau"] == "+"]
        minus = [r["delta_invariant"] for r in m0 if r["tau"] == "-"]
        assert set(plus) == {"-1/4"} and set(minus) == {"1/4"}

    def test_unresolved_pairs(self):
        report = run_json("delta", "1;(2,1),(2,1)")
        m0 = [r for r in report["result"]["structures"] if r["m"] == 0]
        assert all(r["delta_invariant"] == ["-1/4", "1/4"] for r in m0)

    def test_determinism(self):
        a = run("delta", "2;(3,1),(5,2)")
        b = run("delta", "2;(3,1),(5,2)")
        assert a == b

    def test_no_floats_in_result(self):
        for argv in (
            ("delta", "1;(2,1),(2,1)"),
            ("lens", "2", "1"),
            ("dedekind", "1", "3"),
            ("lambda", "1", "2", "0"),
            ("prism", "2", "1"),
            ("plumb", "1;(2,1),(2,1)"),
        ):
            report = run_json(*argv)
            assert no_floats(report["result"]), argv


class TestSmallCommands:
    def test_lens(self):
        report = run_json("lens", "2", "1")
        assert report["result"]["deltas"] == [
            {"u": 0, "delta": "1/8"},
            {"u": 1, "delta": "-1/8"},
        ]
        assert report["diagnostics"]["numeric_residual"] < 1e-9

    def test_lens_single_label(self):
        report = run_json("lens", "3", "1", "2")
        assert report["result"]["deltas"] == [{"u": 2, "delta": "-1/4"}]

    def test_dedekind(self):
        assert run_json("dedekind", "1", "3")["result"]["value"] == "1/18"

    def test_lambda(self):
        assert run_json("lambda", "1", "2", "0")["result"]["value"] == "1/8"

    def test_lens_not_coprime_exit_3(self):
        code, _, _ = run("lens", "4", "2")
        assert code == 3


class TestPrismCommand:
    def test_table(self):
        report = run_json("prism", "2", "1")
        rows = report["result"]["characters"]
        assert len(rows) == 8
        nu0 = [r for r in rows if r["nu"] == 0]
        assert [r["delta_diff"] for r in nu0] == ["1/2", "1/2", "-1/2", "-1/2"]
        assert [r["pinc_sign"] for r in nu0] == ["-1/2", "-1/2", "1/2", "1/2"]
        assert all(r["delta_diff"] == "0" and r["pinc_sign"] is None for r in rows if r["nu"] == 1)

    def test_group_order(self):
        assert run_json("prism", "3", "2")["result"]["group_order"] == 24


class TestPlumbCommand:
    def test_hw(self):
        report = run_json("plumb", "1;(2,1),(2,1)")
        res = report["result"]
        assert res["sigma_double_cover"] == -4
        assert res["sigma_base"] == -2
        assert res["epsilon"] == 0
        assert res["relation_holds"] is True
        assert res["matrix"][0] == [-2, 1, 1, 1, 1]


class TestVerifyCommand:
    def test_small_pass(self):
        report = run_json("verify", "lens", "8")
        assert report["result"]["failed"] == 0
        assert report["inputs"]["bound"] == 8

    def test_unknown_suite_exit_2(self):
        code, _, err = run("verify", "bogus", "5")
        assert code == 2 and "unknown suite" in err

    def test_bound_flag(self):
        report = run_json("verify", "lens", "--bound", "6")
        assert report["inputs"]["bound"] == 6


class TestTableMode:
    def test_delta_table(self):
        code, out, _ = run("--table", "delta", "3;")
        assert code == 0
        assert "multiset:" in out and "5/8" in out

    def test_plumb_table(self):
        code, out, _ = run("--table", "plumb", "2;(3,1)")
        assert code == 0 and "relation_holds" in out


def test_usage_error_exit_2():
    code, _, _ = run("delta")  # missing argument
    assert code == 2
    code, _, _ = run()  # no subcommand
    assert code == 2
