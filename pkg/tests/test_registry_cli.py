import json
import os

import mpmath
import pytest

from cotsums.cli import main
from cotsums.config import RunConfig
from cotsums.errors import NotCoprime, OutOfRange, ParityViolation
from cotsums.registry import REGISTRY, verify

SPEC_IDS = {
    "eq1", "eq2", "parseval", "th1", "cor1", "cor2",
    "lemma1-i", "lemma1-ii", "lemma1-iii", "lemma1-iv", "lemma1-v",
    "th2", "cor3", "th4", "cor5", "th5", "cor6", "cor7", "th7", "cor8",
    "cor9-s3", "cor9-s5", "cor10", "cor11", "eq14", "tan-sq", "remark1",
    "th9", "lemma3-a", "lemma3-b", "lehmer-th8", "cor12", "gamma-dft",
}


class TestRegistry:
    def test_registry_is_complete(self):
        assert set(REGISTRY) == SPEC_IDS

    def test_entries_carry_anchor_and_precondition(self):
        for entry in REGISTRY.values():
            assert entry.anchor
            assert entry.precondition

    def test_unknown_id(self):
        with pytest.raises(OutOfRange):
            verify("eq99", {"k": 3})

    def test_missing_parameter(self):
        with pytest.raises(OutOfRange):
            verify("eq1", {"k": 5})

    def test_precondition_messages_name_condition(self):
        with pytest.raises(NotCoprime, match="coprime"):
            verify("eq1", {"h": 2, "k": 4})
        with pytest.raises(ParityViolation, match="k must be odd"):
            verify("cor9-s3", {"h": 1, "k": 4})
        with pytest.raises(ParityViolation, match="h must be even"):
            verify("cor11", {"h": 3, "k": 5})

    def test_config_floor(self):
        cfg = RunConfig(precision=64, tolerance="2^-128")
        with pytest.raises(OutOfRange):
            verify("eq1", {"h": 1, "k": 3}, cfg)

    def test_report_round_trip_reproduces_residual(self):
        cfg = RunConfig()
        first = verify("th2", {"k": 5, "hs": (1, 2, 3, 4)}, cfg)
        payload = json.loads(first.to_json())
        again = verify(payload["id"],
                       {"k": payload["params"]["k"],
                        "hs": tuple(payload["params"]["hs"])}, cfg)
        assert again.residual == payload["residual"]
        assert again.lhs == payload["lhs"]
        assert again.rhs == payload["rhs"]

    def test_two_sided_timings_recorded(self):
        rep = verify("th2", {"k": 7, "hs": (1, 2, 3, 4)})
        assert rep.lhs_micros is not None and rep.rhs_micros is not None
        assert rep.micros > 0

    def test_lemma1_ii_paper_r1_flagged_not_crash(self):
        rep = verify("lemma1-ii", {"k": 3, "r": 1, "convention": "paper"})
        assert not rep.passed
        assert "-1/2" in rep.note


class TestCli:
    def test_compute_dedekind(self, capsys):
        assert main(["compute", "dedekind", "--h", "1", "--k", "3"]) == 0
        assert capsys.readouterr().out.strip() == "1/18"

    def test_compute_hardy(self, capsys):
        assert main(["compute", "hardy", "--which", "s3", "--h", "1",
                     "--k", "3"]) == 0
        assert capsys.readouterr().out.strip() == "1/3"

    def test_compute_gamma_rk(self, capsys):
        assert main(["compute", "gamma-rk", "--r", "1", "--k", "1"]) == 0
        assert capsys.readouterr().out.startswith("0.5772156649")

    def test_compute_json_mode(self, capsys):
        assert main(["compute", "zagier", "--hs", "1,1", "--k", "3",
                     "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"target": "zagier",
                           "params": {"hs": [1, 1], "k": 3},
                           "value": "-1/18", "exact": True}

    def test_compute_missing_param_usage_error(self, capsys):
        assert main(["compute", "dedekind", "--h", "1"]) == 2

    def test_verify_pass_and_json(self, capsys):
        code = main(["verify", "th2", "--k", "3", "--hs", "1,1", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pass"] is True
        assert payload["lhs"] == "-1/18"
        assert mpmath.mpf(payload["residual"]) < mpmath.mpf("1e-38")

    def test_verify_tan_sq(self, capsys):
        assert main(["verify", "tan-sq", "--k", "5"]) == 0
        out = capsys.readouterr().out
        assert "[PASS]" in out and "20" in out

    def test_verify_fail_exit_code(self, capsys):
        code = main(["verify", "th4", "--k", "3", "--rs", "1,1",
                     "--hs", "1,1", "--convention", "paper"])
        assert code == 1
        out = capsys.readouterr().out
        assert "7/36" in out

    def test_verify_precondition_exit_code(self, capsys):
        code = main(["verify", "cor11", "--k", "5", "--h", "3"])
        assert code == 2
        assert "even" in capsys.readouterr().err

    def test_verify_list(self, capsys):
        assert main(["verify", "--list"]) == 0
        out = capsys.readouterr().out
        for ident in SPEC_IDS:
            assert ident in out

    def test_sweep_eq1(self, capsys, tmp_path):
        csv_path = tmp_path / "eq1.csv"
        code = main(["sweep", "eq1", "--k", "1..12", "--h", "all-coprime",
                     "--csv", str(csv_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "0 fail" in out
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "id,h,k,lhs,rhs,residual,pass,micros"
        assert len(lines) == 1 + sum(1 for k in range(1, 13)
                                     for h in range(1, max(k, 2))
                                     if __import__("math").gcd(h, k) == 1)

    def test_sweep_parity_filtering(self, capsys):
        # cor11 needs h even: all-coprime expansion keeps admissible ones only
        code = main(["sweep", "cor11", "--k", "odd 3..9", "--h",
                     "all-coprime"])
        assert code == 0
        assert "0 fail" in capsys.readouterr().out

    def test_sweep_exit_on_failure(self, capsys):
        code = main(["sweep", "lemma1-ii", "--k", "3..5", "--r", "1",
                     "--convention", "paper"])
        assert code == 1

    def test_sweep_no_instances_usage_error(self, capsys):
        code = main(["sweep", "cor11", "--k", "4..4", "--h", "all-coprime"])
        assert code == 2

    def test_sweep_jobs_matches_serial(self, capsys, tmp_path):
        serial_csv = tmp_path / "serial.csv"
        parallel_csv = tmp_path / "parallel.csv"
        assert main(["sweep", "cor3", "--k", "3..6", "--h1", "all-coprime",
                     "--h2", "1", "--csv", str(serial_csv)]) == 0
        assert main(["sweep", "cor3", "--k", "3..6", "--h1", "all-coprime",
                     "--h2", "1", "--csv", str(parallel_csv),
                     "--jobs", "2"]) == 0
        capsys.readouterr()
        serial_rows = serial_csv.read_text()
        parallel_rows = parallel_csv.read_text()
        # identical rows in identical (deterministic) order, timings aside
        strip = lambda text: [",".join(line.split(",")[:-1])
                              for line in text.splitlines()]
        assert strip(serial_rows) == strip(parallel_rows)

    def test_bad_tolerance_for_precision(self, capsys):
        code = main(["verify", "eq1", "--h", "1", "--k", "3",
                     "--precision", "64"])
        assert code == 2
        assert "tolerance" in capsys.readouterr().err
