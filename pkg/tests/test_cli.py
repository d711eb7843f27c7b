import json

import pytest

from omegalab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_primes_summary(capsys):
    code, out = run(capsys, "primes", "--bound", "100")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"bound": 100, "count": 25, "first": 2, "last": 97}


def test_primes_cache_roundtrip(tmp_path, capsys):
    cache = tmp_path / "p.bin"
    code, _ = run(capsys, "primes", "--bound", "10000", "--save", str(cache))
    assert code == 0 and cache.exists()
    code, out = run(capsys, "primes", "--load", str(cache))
    assert code == 0
    assert json.loads(out)["count"] == 1229


def test_primes_requires_source(capsys):
    code, _ = run(capsys, "primes")
    assert code == 2


def test_omega_range(capsys):
    code, out = run(capsys, "omega", "--lo", "1", "--hi", "10")
    assert code == 0
    assert json.loads(out)["counts"] == [0, 1, 1, 1, 1, 2, 1, 1, 1, 2]


def test_omega_truncated_big_integer(capsys):
    x = str(2**20 * 101 * 999983)
    code, out = run(capsys, "omega", "--n", x, "--bound", "1000")
    assert code == 0
    assert json.loads(out)["omega_truncated"] == 2  # 2 and 101; 999983 > bound


def test_mertens_exit_codes(capsys):
    code, out = run(capsys, "mertens", "--n", "1000")
    assert code == 0
    assert json.loads(out)["passed"] is True
    code, out = run(capsys, "mertens", "--n", "1000", "--tolerance", "mertens_gap=1e-12")
    assert code == 1


def test_chebyshev(capsys):
    code, out = run(capsys, "chebyshev", "--n", "1000")
    assert code == 0
    assert 1.5 <= json.loads(out)["extras"]["gap"] <= 2.5


def test_independence_single_pair(capsys):
    code, out = run(capsys, "independence", "--n", "100", "--p", "2", "--q", "3")
    assert code == 0
    assert json.loads(out)["lhs"] == 0.16


def test_independence_scan(capsys):
    code, out = run(capsys, "independence", "--n", "100000")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_lindeberg_command(capsys):
    code, out = run(capsys, "lindeberg", "--n", "1000", "--epsilon", "1.0")
    assert code == 0
    payload = json.loads(out)
    assert payload["lambda_value"] == 0.0
    assert payload["variant"] == "centered"


def test_lindeberg_literal_flag(capsys):
    code, out = run(
        capsys, "lindeberg", "--n", "1000", "--epsilon", "0.2", "--lindeberg", "literal"
    )
    payload = json.loads(out)
    assert payload["variant"] == "literal"
    assert payload["lambda_value"] > 1.0
    assert code == 0


def test_report_json(capsys):
    code, out = run(
        capsys,
        "report",
        "--n", "1" + "0" * 30,
        "--samples", "200",
        "--bound", "2000",
        "--seed", "7",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["config"]["sigma_mode"] == "model"
    assert payload["ks"]["n"] == 200


def test_ekdist_csv_to_file(tmp_path, capsys):
    out_path = tmp_path / "hist.csv"
    code, _ = run(
        capsys,
        "ekdist",
        "--n", "1" + "0" * 30,
        "--samples", "200",
        "--bound", "2000",
        "--seed", "7",
        "--format", "csv",
        "--out", str(out_path),
    )
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("bin_left,bin_right,count,density,normal_density")


def test_ekdist_svg(tmp_path, capsys):
    out_path = tmp_path / "hist.svg"
    code, _ = run(
        capsys,
        "ekdist",
        "--n", "1" + "0" * 30,
        "--samples", "150",
        "--bound", "1000",
        "--seed", "3",
        "--format", "svg",
        "--out", str(out_path),
    )
    assert code == 0
    assert out_path.read_text().lstrip().startswith("<svg")


def test_report_determinism_across_invocations(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _ = run(
            capsys,
            "report",
            "--n", "1" + "0" * 30,
            "--samples", "150",
            "--bound", "1500",
            "--seed", "11",
            "--out", str(p),
        )
        assert code == 0
    parsed = [json.loads(p.read_text()) for p in paths]
    for d in parsed:
        d.pop("runtime_ms")
    assert parsed[0] == parsed[1]


def test_exhaustive_mode_via_cli(capsys):
    code, out = run(
        capsys, "report", "--n", "20000", "--mode", "exhaustive", "--seed", "0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["config"]["sigma_mode"] == "lnln"
    assert payload["moments"]["count"] == 20000


def test_bad_tolerance_name_is_an_error(capsys):
    code, _ = run(capsys, "mertens", "--n", "100", "--tolerance", "bogus=1")
    assert code == 2


def test_omega_requires_arguments(capsys):
    code, _ = run(capsys, "omega")
    assert code == 2
