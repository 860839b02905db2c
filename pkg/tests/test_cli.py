"""File format round trips and the command line contract."""

import json

import numpy as np
import pytest

import helpers
from spincol import (
    NotOrthonormal,
    ParseError,
    ShapeError,
    build_overlap_blocks,
    gen_random_gchf,
    load_determinant,
    save_determinant,
)
from spincol.cli import run

PURE_ALPHA_DOC = """
{
 "basis_dim": 1,
 "n_electrons": 1,
 "coeff_alpha": [[[1, 0]]],
 "coeff_beta": [[[0, 0]]]
}
"""


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_round_trip_preserves_blocks(tmp_path):
    det = gen_random_gchf(3, 3, seed=2)
    path = tmp_path / "det.json"
    save_determinant(det, path)
    loaded = load_determinant(path)
    b1, b2 = build_overlap_blocks(det), build_overlap_blocks(loaded)
    for name in ("o_aa", "o_ab", "o_ba", "o_bb"):
        assert np.max(np.abs(getattr(b1, name) - getattr(b2, name))) < 1e-12


def test_round_trip_with_metric(tmp_path):
    det = helpers.random_metric_determinant(2, 2, seed=4)
    path = tmp_path / "det.json"
    save_determinant(det, path)
    loaded = load_determinant(path)
    assert loaded.ao_overlap is not None
    assert np.max(np.abs(loaded.ao_overlap - det.ao_overlap)) < 1e-15


def test_load_minimal_pure_alpha(tmp_path):
    det = load_determinant(_write(tmp_path, "a.json", PURE_ALPHA_DOC))
    assert det.basis_dim == 1
    assert det.n_electrons == 1
    assert det.coeff_alpha[0, 0] == 1.0
    assert det.coeff_beta[0, 0] == 0.0


def test_load_rejects_overfull_determinant(tmp_path):
    doc = {
        "basis_dim": 1,
        "n_electrons": 3,
        "coeff_alpha": [[[1, 0], [0, 0], [0, 0]]],
        "coeff_beta": [[[0, 0], [1, 0], [0, 0]]],
    }
    with pytest.raises(ShapeError):
        load_determinant(_write(tmp_path, "bad.json", json.dumps(doc)))


def test_load_rejects_malformed_json(tmp_path):
    with pytest.raises(ParseError):
        load_determinant(_write(tmp_path, "broken.json", "{not json"))


def test_load_rejects_missing_field(tmp_path):
    with pytest.raises(ParseError):
        load_determinant(_write(tmp_path, "missing.json", '{"basis_dim": 1}'))


def test_load_rejects_bad_entry(tmp_path):
    doc = '{"basis_dim": 1, "n_electrons": 1, "coeff_alpha": [[[1]]], "coeff_beta": [[[0, 0]]]}'
    with pytest.raises(ParseError):
        load_determinant(_write(tmp_path, "pair.json", doc))


def test_load_rejects_wrong_row_count(tmp_path):
    doc = {
        "basis_dim": 2,
        "n_electrons": 1,
        "coeff_alpha": [[[1, 0]]],
        "coeff_beta": [[[0, 0]], [[0, 0]]],
    }
    with pytest.raises(ShapeError):
        load_determinant(_write(tmp_path, "rows.json", json.dumps(doc)))


def test_load_rejects_non_orthonormal_with_hint(tmp_path):
    doc = '{"basis_dim": 1, "n_electrons": 1, "coeff_alpha": [[[2, 0]]], "coeff_beta": [[[0, 0]]]}'
    with pytest.raises(NotOrthonormal, match="--orthonormalize"):
        load_determinant(_write(tmp_path, "scaled.json", doc))


def test_missing_file_is_parse_error():
    with pytest.raises(ParseError):
        load_determinant("/nonexistent/path/det.json")


# ----- CLI contract -----


def _gen_file(tmp_path, capsys, kind="random", m=3, ne=3, seed=7):
    out = str(tmp_path / f"{kind}.json")
    assert run(["gen", "--kind", kind, "--m", str(m), "--ne", str(ne), "--seed", str(seed), "--out", out]) == 0
    capsys.readouterr()
    return out


def test_analyze_text_and_json_agree(tmp_path, capsys):
    path = _gen_file(tmp_path, capsys)
    assert run(["analyze", path]) == 0
    text = capsys.readouterr().out
    assert run(["analyze", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)

    assert f"basis_dim: {doc['basis_dim']}" in text
    for label, value in [
        ("N_alpha", doc["electron_counts"]["n_alpha"]),
        ("<Sz>", doc["expectations"]["sz"]),
        ("<S^2>", doc["expectations"]["s2"]),
        ("  total", doc["decomposition"]["total"]),
        ("  col", doc["collinearity"]["col"]),
    ]:
        line = next(l for l in text.splitlines() if l.startswith(label))
        printed = float(line.split()[-1])
        assert printed == pytest.approx(value, abs=5e-7)
    assert doc["input"]["sha256"]
    assert doc["version"]


def test_analyze_pure_alpha_total(tmp_path, capsys):
    path = _write(tmp_path, "alpha.json", PURE_ALPHA_DOC)
    assert run(["analyze", path]) == 0
    out = capsys.readouterr().out
    assert "<S^2>                +0.750000" in out


def test_analyze_axis_query(tmp_path, capsys):
    path = _gen_file(tmp_path, capsys)
    assert run(["analyze", path, "--axis", "0", "0", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["axis_query"]["axis"] == pytest.approx([0.0, 0.0, 1.0])
    assert doc["axis_query"]["col_along"] == pytest.approx(
        doc["decomposition"]["z_noncollinearity"], abs=1e-12
    )


def test_analyze_align_optimal(tmp_path, capsys):
    path = _gen_file(tmp_path, capsys)
    assert run(["analyze", path, "--align-optimal", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["aligned_decomposition"]["z_noncollinearity"] == pytest.approx(
        doc["collinearity"]["col"], abs=1e-10
    )


def test_analyze_orthonormalize_flag(tmp_path, capsys):
    doc = '{"basis_dim": 1, "n_electrons": 1, "coeff_alpha": [[[2, 0]]], "coeff_beta": [[[0, 0]]]}'
    path = _write(tmp_path, "scaled.json", doc)
    assert run(["analyze", path]) == 1
    assert "NotOrthonormal" in capsys.readouterr().err
    assert run(["analyze", path, "--orthonormalize"]) == 0
    assert "<S^2>                +0.750000" in capsys.readouterr().out


def test_axis_subcommand(tmp_path, capsys):
    path = _gen_file(tmp_path, capsys)
    assert run(["axis", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["eigenvalues"]) == 3
    assert doc["eigenvalues"][0] == pytest.approx(doc["col"])
    assert run(["axis", path]) == 0
    assert "optimal_axis" in capsys.readouterr().out


def test_oracle_check_passes_on_generated_file(tmp_path, capsys):
    path = _gen_file(tmp_path, capsys, m=4, ne=3, seed=9)
    assert run(["oracle-check", path]) == 0
    out = capsys.readouterr().out
    max_dev = float(out.strip().splitlines()[-1].split()[-1])
    assert max_dev < 1e-10
    assert "<S^2>" in out


def test_oracle_check_too_large_fails(tmp_path, capsys):
    det = gen_random_gchf(7, 2, seed=1)
    path = tmp_path / "big.json"
    save_determinant(det, path)
    assert run(["oracle-check", str(path)]) == 1
    assert "TooLarge" in capsys.readouterr().err


@pytest.mark.parametrize("kind,ne,s2", [("rhf", 4, 0.0), ("rohf", 3, 0.75), ("dods", 3, None)])
def test_gen_kinds_produce_valid_files(tmp_path, capsys, kind, ne, s2):
    path = _gen_file(tmp_path, capsys, kind=kind, m=4, ne=ne, seed=3)
    assert run(["analyze", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    if s2 is not None:
        assert doc["expectations"]["s2"] == pytest.approx(s2, abs=1e-10)
    assert doc["decomposition"]["z_noncollinearity"] == pytest.approx(0.0, abs=1e-12)


def test_gen_rhf_rejects_odd_count(tmp_path, capsys):
    out = str(tmp_path / "odd.json")
    assert run(["gen", "--kind", "rhf", "--m", "3", "--ne", "3", "--seed", "0", "--out", out]) == 1
    assert "even electron count" in capsys.readouterr().err


def test_paper_fixture_passes(capsys):
    assert run(["paper-fixture"]) == 0
    out = capsys.readouterr().out
    assert "PASS collinearity matrix: col" in out
    assert "0.000028" in out
    assert "FAIL" not in out


def test_malformed_file_exit_code_and_diagnostics(tmp_path, capsys):
    path = _write(tmp_path, "broken.json", "{oops")
    assert run(["analyze", path]) == 1
    err = capsys.readouterr().err
    assert "ParseError" in err

    doc = {
        "basis_dim": 1,
        "n_electrons": 3,
        "coeff_alpha": [[[1, 0], [0, 0], [0, 0]]],
        "coeff_beta": [[[0, 0], [1, 0], [0, 0]]],
    }
    path = _write(tmp_path, "shape.json", json.dumps(doc))
    assert run(["analyze", path]) == 1
    assert "ShapeError" in capsys.readouterr().err


def test_usage_errors_exit_two(capsys):
    assert run([]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["gen", "--kind", "random"]) == 2
    capsys.readouterr()


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    assert "spincol" in capsys.readouterr().out
