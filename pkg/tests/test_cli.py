import json
import subprocess
import sys

import pytest

from wordeq.cli import main
from wordeq.equations import EquationInstance, Exponents, canonical_instance


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_forced(capsys):
    code, out, _ = run_cli(capsys, "verify", "--i", "2", "--j", "3", "--k", "1",
                           "--max-len", "18", "--shards", "1")
    assert code == 0
    assert "forced up to bound: yes" in out


def test_verify_witness_exit_2(capsys):
    code, out, err = run_cli(capsys, "verify", "--i", "1", "--j", "3", "--k", "1",
                             "--max-len", "17", "--shards", "1")
    assert code == 2
    assert "witness:" in out
    assert "outside the proven forcing range" in err


def test_verify_bound_too_small_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--i", "2", "--j", "3", "--k", "1", "--max-len", "3"])
    assert exc.value.code == 64


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--i", "2", "--nonsense"])
    assert exc.value.code == 64


def test_solve_json_contains_known_witness(capsys):
    code, out, _ = run_cli(capsys, "solve", "--i", "1", "--j", "2", "--k", "1",
                           "--max-len", "12", "--format", "json", "--shards", "1")
    assert code == 2  # witnesses found
    obj = json.loads(out)
    assert obj["periodic_only"] is False
    rep = canonical_instance(
        EquationInstance(Exponents(1, 2, 1), "babab", "a", "bab", "aba"), 2
    )
    assert rep.to_json_obj() in obj["nonperiodic"]


def test_solve_forced_case_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "solve", "--i", "2", "--j", "4", "--k", "2",
                           "--max-len", "16", "--format", "json", "--shards", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["periodic_only"] is True
    assert obj["nonperiodic"] == []


def test_solve_no_distinct_only(capsys):
    code, out, _ = run_cli(capsys, "solve", "--i", "2", "--j", "4", "--k", "2",
                           "--max-len", "16", "--format", "json", "--shards", "1",
                           "--no-distinct-only")
    assert code == 2  # trivial non-commuting pairs are non-periodic solutions
    obj = json.loads(out)
    assert obj["periodic_only"] is False


def test_family_j2_json(capsys):
    code, out, _ = run_cli(capsys, "family", "--family", "j2", "--alpha", "a",
                           "--beta", "b", "--param-k", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "x": "aaababa",
        "y": "ba",
        "u": "a",
        "v": "ababaaaabab",
        "family": "j2",
        "params": {"alpha": "a", "beta": "b", "k": 1},
    }


def test_family_i1k1_text(capsys):
    code, out, _ = run_cli(capsys, "family", "--family", "i1k1", "--alpha", "a",
                           "--gamma", "b", "--param-j", "3")
    assert code == 0
    assert "aabbbaabbbaabbbaa" in out


def test_family_commuting_parameters_exit_65(capsys):
    code, _, err = run_cli(capsys, "family", "--family", "j2", "--alpha", "a", "--beta", "aa")
    assert code == 65
    assert "commute" in err


def test_family_bad_letters_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["family", "--family", "j2", "--alpha", "a", "--beta", "c", "--alphabet", "2"])
    assert exc.value.code == 64


def test_family_grid(capsys):
    code, out, _ = run_cli(capsys, "family", "--family", "grid", "--max-len", "1",
                           "--param-k", "1", "--param-j", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["pairs"] == 2 and obj["total"] == 4 and obj["all_valid"] is True


def test_solve_short_pattern_not_forcing(capsys):
    code, out, _ = run_cli(capsys, "solve", "--i", "1", "--j", "1", "--k", "1",
                           "--max-len", "6", "--format", "json", "--shards", "1")
    assert code == 2
    obj = json.loads(out)
    assert obj["nonperiodic"]


def test_lemma_failure_exits_3(capsys, monkeypatch):
    from wordeq import cli
    from wordeq.oracles import OracleResult

    fake = [OracleResult("overlap-commutation", 5, ("s='ab' cut=1",))]
    monkeypatch.setattr(cli, "run_lemma_suite", lambda max_len: fake)
    code, out, err = run_cli(capsys, "lemmas")
    assert code == 3
    assert "FAIL overlap-commutation" in out
    assert "overlap-commutation" in err and "cut=1" in err


def test_lemmas_small(capsys):
    code, out, _ = run_cli(capsys, "lemmas", "--max-len", "2")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    assert len(lines) == 14


def test_lemmas_zero_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["lemmas", "--max-len", "0"])
    assert exc.value.code == 64


def test_cli_output_identical_across_shards(capsys):
    outs = []
    for shards in ("1", "2"):
        code, out, _ = run_cli(capsys, "solve", "--i", "1", "--j", "3", "--k", "1",
                               "--max-len", "17", "--format", "json", "--shards", shards)
        assert code == 2
        outs.append(out)
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wordeq", "verify", "--i", "2", "--j", "3", "--k", "1",
         "--max-len", "14", "--shards", "1", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert obj["forced_up_to_bound"] is True


def test_env_var_sets_default_shards(capsys, monkeypatch):
    monkeypatch.setenv("WORDEQ_SHARDS", "2")
    code, out, _ = run_cli(capsys, "solve", "--i", "1", "--j", "3", "--k", "1",
                           "--max-len", "12", "--format", "json")
    assert code in (0, 2)
    json.loads(out)
