import json

import pytest

from cauchykit.cli import EXIT_IDENTITY, EXIT_INPUT, EXIT_OK, _exit_code_for, main
from cauchykit.verify import VerificationReport

EXAMPLE = '{"xs":["1","2"],"ys":["3","5"]}'
SINGULAR = '{"xs":["1","1"],"ys":["3","5"]}'
MIN_ZERO = '{"kind":"min","xs":["1","2"],"ys":["3","4"]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheckCommands:
    def test_invsum_example(self, capsys):
        code, out, _ = run(capsys, "invsum", EXAMPLE)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["identity"] == "inverse_entry_sum"
        assert report["lhs"] == "11"
        assert report["rhs"] == "11"
        assert report["pass"] is True
        assert report["spec_echo"]["xs"] == ["1", "2"]

    def test_min_det_zero_case(self, capsys):
        code, out, _ = run(capsys, "min-det", MIN_ZERO)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["lhs"] == "0"
        assert report["pass"] is True

    def test_adjsum_accepts_singular(self, capsys):
        code, out, _ = run(capsys, "adjsum", SINGULAR)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["lhs"] == report["rhs"] == "0"

    def test_invsum_rejects_singular(self, capsys):
        code, _, err = run(capsys, "invsum", SINGULAR)
        assert code == EXIT_INPUT
        assert "strongly distinct" in err

    def test_border(self, capsys):
        code, out, _ = run(capsys, "border", EXAMPLE)
        assert code == EXIT_OK
        assert json.loads(out)["lhs"] == "-11/420"

    def test_min_invsum(self, capsys):
        code, out, _ = run(capsys, "min-invsum", '{"kind":"min","xs":["1","3"],"ys":["2","4"]}')
        assert code == EXIT_OK
        assert json.loads(out)["lhs"] == "1"

    def test_min_colsums_normalizes(self, capsys):
        code, out, _ = run(capsys, "min-colsums", '{"kind":"min","xs":["4","2"],"ys":["3","1"]}')
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["pass"] is True
        assert report["spec_echo"]["swapped"] is True
        assert report["lhs"] == '["1","0"]'

    def test_lemma_ab(self, capsys):
        code, out, _ = run(capsys, "lemma-ab", "--trials", "5", "--seed", "9")
        assert code == EXIT_OK
        reports = json.loads(out)
        assert len(reports) == 5
        assert all(r["pass"] for r in reports)

    def test_prime_ring_flag(self, capsys):
        code, out, _ = run(capsys, "invsum", '{"xs":["4","9"],"ys":["1","7"]}', "--ring", "prime:101")
        assert code == EXIT_OK
        assert json.loads(out)["lhs"] == "21"

    def test_minus_convention(self, capsys):
        flipped = '{"xs":["1","2"],"ys":["-3","-5"]}'
        code, out, _ = run(capsys, "invsum", flipped, "--minus-convention")
        assert code == EXIT_OK
        assert json.loads(out)["lhs"] == "11"


class TestComputeCommands:
    def test_build(self, capsys):
        code, out, _ = run(capsys, "build", EXAMPLE)
        assert code == EXIT_OK
        m = json.loads(out)
        assert m["entries"] == [["1/4", "1/6"], ["1/5", "1/7"]]

    def test_build_min(self, capsys):
        code, out, _ = run(capsys, "build", MIN_ZERO)
        assert code == EXIT_OK
        assert json.loads(out)["entries"] == [["1", "1"], ["2", "2"]]

    def test_det(self, capsys):
        code, out, _ = run(capsys, "det", EXAMPLE, "--format", "text")
        assert code == EXIT_OK
        assert out.strip() == "1/420"

    def test_inv(self, capsys):
        code, out, _ = run(capsys, "inv", EXAMPLE)
        assert code == EXIT_OK
        assert json.loads(out)["entries"] == [["60", "-70"], ["-84", "105"]]

    def test_gen_is_seeded(self, capsys):
        _, first, _ = run(capsys, "gen", "--seed", "5", "--n", "4")
        _, second, _ = run(capsys, "gen", "--seed", "5", "--n", "4")
        assert first == second
        spec = json.loads(first)
        assert len(spec["xs"]) == 4

    def test_gen_allow_degenerate(self, capsys):
        code, out, _ = run(capsys, "gen", "--seed", "3", "--n", "3", "--allow-degenerate")
        assert code == EXIT_OK
        spec = json.loads(out)
        values = spec["xs"] + spec["ys"]
        assert len(set(spec["xs"])) < 3 or len(set(spec["ys"])) < 3 or len(values) == 6

    def test_gen_min_kind(self, capsys):
        code, out, _ = run(capsys, "gen", "--kind", "min", "--seed", "2", "--n", "2")
        assert code == EXIT_OK
        assert json.loads(out)["kind"] == "min"


class TestInputErrors:
    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, "det", '{"xs": [')
        assert code == EXIT_INPUT
        assert "error:" in err

    def test_missing_field(self, capsys):
        code, _, _ = run(capsys, "det", '{"xs":["1"]}')
        assert code == EXIT_INPUT

    def test_min_over_prime_field(self, capsys):
        code, _, err = run(capsys, "min-det", '{"kind":"min","ring":{"prime":101},"xs":["1"],"ys":["2"]}')
        assert code == EXIT_INPUT
        assert "rational" in err

    def test_zero_pair_sum(self, capsys):
        code, _, err = run(capsys, "det", '{"xs":["1"],"ys":["-1"]}')
        assert code == EXIT_INPUT
        assert "pair sum" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "det", "/nonexistent/spec.json")
        assert code == EXIT_INPUT

    def test_bad_ring_flag(self, capsys):
        code, _, _ = run(capsys, "det", EXAMPLE, "--ring", "octonions")
        assert code == EXIT_INPUT

    def test_minus_convention_on_min_spec(self, capsys):
        code, _, _ = run(capsys, "min-det", MIN_ZERO, "--minus-convention")
        assert code == EXIT_INPUT

    def test_spec_file_path(self, capsys, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(EXAMPLE)
        code, out, _ = run(capsys, "det", str(path), "--format", "text")
        assert code == EXIT_OK
        assert out.strip() == "1/420"


class TestVerify:
    def test_seeded_run_is_byte_identical(self, capsys):
        _, first, _ = run(capsys, "verify", "--seed", "42", "--trials", "4", "--n", "4")
        _, second, _ = run(capsys, "verify", "--seed", "42", "--trials", "4", "--n", "4")
        assert first == second

    def test_passes_and_reports(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "1", "--trials", "3", "--n", "3")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["failed"] == 0
        assert doc["passed"] == len(doc["reports"])
        identities = {r["identity"] for r in doc["reports"]}
        assert "cauchy_det" in identities
        assert "min_det" in identities
        assert "weighted_trace_ab" in identities

    def test_pass_flags_recomputable(self, capsys):
        _, out, _ = run(capsys, "verify", "--seed", "8", "--trials", "2", "--n", "3")
        for r in json.loads(out)["reports"]:
            assert r["pass"] == (r["lhs"] == r["rhs"])

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "2", "--trials", "2", "--n", "3", "--format", "csv")
        assert code == EXIT_OK
        header = out.splitlines()[0]
        assert header == "identity,lhs,rhs,pass,seed"

    def test_text_format_summarizes(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "2", "--trials", "2", "--n", "3", "--format", "text")
        assert code == EXIT_OK
        assert "passed" in out.splitlines()[-1]

    def test_trials_validated(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--trials", "0"])

    def test_size_bound_validated(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--n", "9"])


class TestCanaryCommand:
    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "canary", "--n", "6", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "n,method,entry_sum_residual,identity_residual,elapsed"
        rows = [line.split(",") for line in lines[1:]]
        assert [(r[0], r[1]) for r in rows] == [
            ("3", "closed_form"), ("3", "gauss_pp"), ("6", "closed_form"), ("6", "gauss_pp"),
        ]
        for r in rows:
            assert float(r[2]) >= 0.0
            assert float(r[3]) >= 0.0

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "canary", "--n", "3", "--format", "json")
        assert code == EXIT_OK
        reports = json.loads(out)
        assert {r["method"] for r in reports} == {"closed_form", "gauss_pp"}


class TestExitCodeMapping:
    def test_all_pass(self):
        ok = VerificationReport("x", "1", "1", True, {})
        assert _exit_code_for([ok, ok]) == EXIT_OK

    def test_any_failure(self):
        ok = VerificationReport("x", "1", "1", True, {})
        bad = VerificationReport("x", "1", "2", False, {})
        assert _exit_code_for([ok, bad]) == EXIT_IDENTITY
