import dataclasses
import json

import pytest

from patternstats import distributions, formulas, generate
from patternstats.cli import main
from patternstats.formulas import binom, catalan

from helpers import naive_dist


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dist_json(capsys):
    code, out, _ = run(capsys, "dist", "--stat", "pk", "--avoid", "231",
                       "--n", "4", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["counts"] == {"0": 8, "1": 6}
    assert blob["basis"] == ["231"]
    assert blob["method"] == "oracle"
    assert naive_dist("pk", 4, [(2, 3, 1)]) == {0: 8, 1: 6}
    code, out, _ = run(capsys, "dist", "--stat", "pk", "--avoid", "321",
                       "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == {"0": 4, "1": 10}
    assert naive_dist("pk", 4, [(3, 2, 1)]) == {0: 4, 1: 10}


def test_dist_csv_pascal_row(capsys):
    code, out, _ = run(capsys, "dist", "--stat", "asc", "--avoid", "213,312",
                       "--n", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,count"
    got = {int(line.split(",")[1]): int(line.split(",")[2])
           for line in lines[1:]}
    assert got == {k: binom(5, k) for k in range(6)}


def test_dist_markdown(capsys):
    code, out, _ = run(capsys, "dist", "--stat", "vl", "--avoid", "123,132",
                       "--n", "5", "--format", "markdown")
    assert code == 0
    assert "| n | k | count |" in out
    assert "| 5 | 0 | 2 |" in out
    assert "| 5 | 1 | 12 |" in out
    assert naive_dist("vl", 5, [(1, 2, 3), (1, 3, 2)]) == {0: 2, 1: 12, 2: 2}


def test_dist_range(capsys):
    code, out, _ = run(capsys, "dist", "--stat", "des", "--avoid", "321",
                       "--n", "2-4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [2, 3, 4]


def test_dist_bad_basis_exits_2(capsys):
    code, _, err = run(capsys, "dist", "--stat", "pk", "--avoid", "2x1",
                       "--n", "4")
    assert code == 2 and err


def test_dist_unsupported_method_exits_2(capsys):
    code, _, err = run(capsys, "dist", "--stat", "pk", "--avoid", "123",
                       "--n", "4", "--method", "closed_form")
    assert code == 2 and "no closed form" in err


def test_map_psi(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "psi",
                       "--input", "617238459")
    assert code == 0
    assert out.splitlines()[0] == "UDUUDUDUUDUDUUDDDD"
    assert "input_pk=2" in out and "image_interior_uud=2" in out


def test_map_domain_violation_names_pattern(capsys):
    code, _, err = run(capsys, "map", "--bijection", "psi", "--input", "321")
    assert code == 2
    assert "321" in err


def test_map_encoding(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "enc123132",
                       "--input", "653241", "--format", "json")
    assert code == 0
    assert json.loads(out)["image"] == "11001"


def test_map_alphabet_flag(capsys):
    code, out, _ = run(capsys, "map", "--bijection", "iota", "--input",
                       "1100", "--alphabet", "10")
    assert code == 0
    assert out.splitlines()[0] == "UDUD"


def test_map_unknown_bijection(capsys):
    code, _, err = run(capsys, "map", "--bijection", "nope", "--input", "1")
    assert code == 2 and "unknown bijection" in err


def test_series_row_sums_catalan(capsys):
    code, out, _ = run(capsys, "series", "--name", "pk321", "--max-n", "6",
                       "--format", "csv")
    assert code == 0
    sums = {}
    for line in out.strip().splitlines()[1:]:
        n, _, c = (int(x) for x in line.split(","))
        sums[n] = sums.get(n, 0) + c
    assert sums == {n: catalan(n) for n in range(7)}


def test_series_ddes_row_sums(capsys):
    code, out, _ = run(capsys, "series", "--name", "ddes132213",
                       "--max-n", "6", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    for row in rows[1:]:
        assert sum(row["counts"].values()) == 2 ** (row["n"] - 1)


def test_series_d_is_shift_of_des321(capsys):
    code, out_d, _ = run(capsys, "series", "--name", "D", "--max-n", "5",
                         "--format", "json")
    assert code == 0
    code, out_a, _ = run(capsys, "series", "--name", "des321", "--max-n", "4",
                         "--format", "json")
    assert code == 0
    d_rows = {r["n"]: r["counts"] for r in json.loads(out_d)["rows"]}
    a_rows = {r["n"]: r["counts"] for r in json.loads(out_a)["rows"]}
    for n in range(5):
        assert d_rows[n + 1] == a_rows[n]


def test_series_cap(capsys):
    code, _, err = run(capsys, "series", "--name", "pk321", "--max-n", "99")
    assert code == 2 and "cap" in err


def test_series_unknown_name_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["series", "--name", "nope", "--max-n", "4"])
    assert info.value.code == 2


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--only", "FORMULA_PK231",
                       "--max-n", "6")
    assert code == 0
    assert out.startswith("PASS FORMULA_PK231")


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    names = out.split()
    assert "FORMULA_PK231" in names and "IOTA_INVOLUTION" in names


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--only", "NOPE")
    assert code == 2 and "unknown checks" in err


def test_verify_catches_injected_off_by_one(capsys, monkeypatch):
    spec = formulas.FORMULAS["PK231"]
    broken = dataclasses.replace(
        spec, fn=lambda n, k: spec.fn(n, k) + (1 if (n, k) == (4, 0) else 0))
    monkeypatch.setitem(formulas.FORMULAS, "PK231", broken)
    distributions.clear_caches()
    code, out, _ = run(capsys, "verify", "--only", "FORMULA_PK231",
                       "--max-n", "6")
    assert code == 1
    assert "FAIL FORMULA_PK231" in out
    distributions.clear_caches()


def test_verify_json_reports(capsys):
    code, out, _ = run(capsys, "verify", "--only", "SERIES_B_PK231",
                       "--max-n", "6", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["passed"] is True


def test_oeis_bfile_output(capsys):
    code, out, _ = run(capsys, "oeis", "--formula", "PK231", "--max-n", "10",
                       "--format", "bfile")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 1" and lines[1] == "2 2"


def test_oeis_unknown_formula(capsys):
    code, _, err = run(capsys, "oeis", "--formula", "UNKNOWN")
    assert code == 2 and "UNKNOWN" in err


def test_oeis_offline_check_exits_3(capsys, tmp_path):
    code, _, err = run(capsys, "oeis", "--formula", "PK231", "--check",
                       "--offline", "--cache-dir", str(tmp_path))
    assert code == 3 and "network" in err


def test_config_file_sets_caps(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(generate, "GEN_ALL_CAP", generate.GEN_ALL_CAP)
    distributions.clear_caches()
    cfg = tmp_path / "caps.cfg"
    cfg.write_text("# caps\ngen_cap = 5\n")
    code, _, err = run(capsys, "--config", str(cfg), "dist", "--stat", "asc",
                       "--avoid", "132", "--n", "6")
    assert code == 2 and "cap" in err
    code, _, _ = run(capsys, "--config", str(cfg), "dist", "--stat", "asc",
                     "--avoid", "132", "--n", "5")
    assert code == 0


def test_config_cache_dir_feeds_oeis_check(capsys, tmp_path):
    cache = tmp_path / "cache"
    cache.mkdir()
    (cache / "A000108.txt").write_text(
        "".join(f"{n} {catalan(n)}\n" for n in range(20)))
    cfg = tmp_path / "cfg"
    cfg.write_text(f"cache_dir = {cache}\n")
    code, out, _ = run(capsys, "--config", str(cfg), "oeis", "--sequence",
                       "A000108", "--check", "--offline", "--max-n", "15")
    assert code == 0
    assert json.loads(out)["first_mismatch"] is None


def test_bad_config_exits_2(capsys, tmp_path):
    cfg = tmp_path / "caps.cfg"
    cfg.write_text("gen_cap\n")
    code, _, err = run(capsys, "--config", str(cfg), "verify", "--list")
    assert code == 2 and "key=value" in err
