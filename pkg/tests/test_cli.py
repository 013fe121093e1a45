import json

import pytest

from similitude.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_plain(capsys):
    code, out, _ = run(capsys, "series", "--target", "f_z4", "--terms", "4")
    assert code == 0
    assert out == "1 1 1\n2 4 3\n3 9 8\n4 16 3\n"


def test_series_csv_header_and_rows(capsys):
    code, out, _ = run(capsys, "series", "--target", "riemann", "--terms", "3", "--format", "csv")
    assert code == 0
    assert out == "m,index,count\n1,1,1\n2,2,1\n3,3,1\n"
    code, out, _ = run(capsys, "series", "--target", "zeta_j", "--terms", "3", "--format", "csv")
    assert out == "m,index,count\n1,1,1\n2,4,1\n3,9,4\n"


def test_series_json_roundtrip(capsys):
    code, out, _ = run(capsys, "series", "--target", "zeta_i", "--terms", "6", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"target": "zeta_i", "index_kind": "square", "terms": [1, 0, 0, 5, 6, 0]}


def test_series_rejects_bad_terms(capsys):
    code, _, err = run(capsys, "series", "--target", "f_j", "--terms", "0")
    assert code == 2
    assert "terms must be >= 1" in err


def test_verify_single_target(capsys):
    code, out, _ = run(capsys, "verify", "--target", "zeta_j", "--terms", "200")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert any("sum-of-odd-divisors" in line for line in lines)


def test_verify_all_targets(capsys):
    code, out, _ = run(capsys, "verify", "--terms", "300")
    assert code == 0
    assert "FAIL" not in out


def test_verify_bad_terms(capsys):
    code, _, err = run(capsys, "verify", "--target", "f_i", "--terms", "0")
    assert code == 2
    assert "terms must be >= 1" in err


def test_oracle_lattice(capsys):
    code, out, _ = run(capsys, "oracle", "--lattice", "z4", "--max-m", "3")
    assert code == 0
    assert out == "m=1: oracle=1 formula=1 MATCH\nm=2: oracle=3 formula=3 MATCH\nm=3: oracle=8 formula=8 MATCH\n"
    code, out, _ = run(capsys, "oracle", "--lattice", "d4star", "--max-m", "2")
    assert code == 0
    assert out.endswith("m=2: oracle=1 formula=1 MATCH\n")


def test_oracle_icosian(capsys):
    code, out, _ = run(capsys, "oracle", "--module", "icosian", "--m", "4")
    assert code == 0
    assert "10 SSMs: 5 right, 5 left, 0 two-sided" in out
    assert "MATCH" in out


def test_oracle_bound_violation(capsys):
    code, _, err = run(capsys, "oracle", "--lattice", "z4", "--max-m", "8")
    assert code == 2
    assert "bound" in err
    code, _, err = run(capsys, "oracle", "--module", "icosian", "--m", "26")
    assert code == 2


def test_oracle_module_requires_m(capsys):
    code, _, err = run(capsys, "oracle", "--module", "icosian")
    assert code == 2
    assert "--m" in err


def test_constants_rows(capsys):
    code, out, _ = run(capsys, "constants")
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.strip().splitlines())
    assert lines["residue_dedekind_tau"].endswith("0.430409")
    assert lines["slope_f_k"].endswith("0.374519")
    assert lines["C_J"].endswith("0.25")
    assert lines["C_Z4"].endswith("0.375")


def test_constants_estimate(capsys):
    code, out, _ = run(capsys, "constants", "--estimate", "--terms", "2000")
    assert code == 0
    row = next(l for l in out.splitlines() if l.startswith("C_J "))
    fields = row.split()
    assert fields[-1] == "2000"
    assert float(fields[-2]) > 0.25


def test_thread_flag_is_byte_invariant(capsys):
    outputs = set()
    for t in ("1", "4", "8"):
        code, out, _ = run(capsys, "oracle", "--lattice", "z4", "--max-m", "2", "--threads", t)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_threads_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SIMILITUDE_THREADS", "4")
    code, out, _ = run(capsys, "oracle", "--lattice", "z4", "--max-m", "2")
    assert code == 0
    assert "MATCH" in out


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["series", "--target", "nonsense"])
    assert info.value.code == 2


def test_verify_failure_exits_one(capsys, monkeypatch):
    import similitude.cli as cli_mod
    from similitude.dirichlet import ones

    real = cli_mod.closed_sequence

    def broken(target, n):
        seq = real(target, n)
        if target.value == "f_j":
            return ones(n)  # wrong on purpose
        return seq

    monkeypatch.setattr(cli_mod, "closed_sequence", broken)
    code, out, _ = run(capsys, "verify", "--target", "f_j", "--terms", "50")
    assert code == 1
    assert "FAIL engine-vs-closed-form" in out


def test_series_cross_check_failure_exits_one(capsys, monkeypatch):
    import similitude.cli as cli_mod
    from similitude.counting import CrossCheckFailure, Target

    def explode(target, n):
        raise CrossCheckFailure(Target.F_J, 3, 8, 7)

    monkeypatch.setattr(cli_mod, "series", explode)
    code, out, err = run(capsys, "series", "--target", "f_j", "--terms", "5")
    assert code == 1
    assert out == ""
    assert "FAIL" in err and "m = 3" in err
