import json

import pytest

import cli


def run(capsys, *argv):

    code    = cli.main(list(argv))
    out     = capsys.readouterr()

    return code, out.out, out.err


def test_catalog_text(capsys):

    code, out, _ = run(capsys, "catalog")

    assert code == 0
    assert "koebe_alpha" in out
    assert "a=(1+z)/4" in out


def test_catalog_json(capsys):

    code, out, _ = run(capsys, "catalog", "--format", "json")

    entries = json.loads(out)

    assert code == 0
    assert {"name", "family", "membership", "uses_alpha"} == set(entries[0])


def test_unknown_flag_is_usage_error(capsys):

    code, _, err = run(capsys, "radius", "--bogus")

    assert code == 2
    assert "usage" in err


def test_eval_needs_z(capsys):

    code, _, _ = run(capsys, "eval")

    assert code == 2


def test_eval_extremal(capsys):

    code, out, _ = run(capsys, "eval", "--phi", "koebe_alpha", "--alpha", "0", "--dil", "a=z", "--z", "0.5")

    d = json.loads(out)

    assert code == 0
    assert d["value"]["re"] == pytest.approx(27.2991, abs=1e-4)
    assert d["value"]["im"] == pytest.approx(0.0, abs=1e-10)
    assert d["pde_residual"] < 1e-5


def test_eval_identity(capsys):

    code, out, _ = run(capsys, "eval", "--phi", "identity", "--z", "0.3")

    d = json.loads(out)

    assert code == 0
    assert d["value"]["re"] == pytest.approx(0.3)
    assert d["sigma"] == pytest.approx(1.0)


def test_eval_rejects_dilatation_off_origin(capsys):

    code, out, err = run(capsys, "eval", "--phi", "identity", "--dil", "(1+z)/4", "--z", "0.3")

    assert code == 1
    assert out == ""
    assert "dilatation must vanish at origin" in err


def test_radius_close_to_starlike(capsys):

    code, out, _ = run(capsys, "radius", "--kind", "close_to_starlike", "--alpha", "0.5")

    assert code == 0
    assert json.loads(out)["closed_form"] == pytest.approx(0.333333, abs=1e-6)


def test_radius_q_product(capsys):

    code, out, _ = run(capsys, "radius", "--kind", "q_product", "--alpha", "0.5", "--lambda", "0.25")

    d = json.loads(out)

    assert code == 0
    assert d["closed_form"] == pytest.approx(0.666667, abs=1e-6)
    assert d["lambda_weight"] == 0.25


def test_radius_q_product_needs_lambda(capsys):

    code, _, err = run(capsys, "radius", "--kind", "q_product", "--alpha", "0.5")

    assert code == 1
    assert "lambda" in err


def test_radius_with_check(capsys):

    code, out, _ = run(capsys, "radius", "--kind", "close_to_starlike", "--alpha", "0", "--check")

    assert code == 0
    assert json.loads(out)["abs_gap"] < 1e-4


def test_omega(capsys):

    code, out, _ = run(capsys, "omega", "--alpha", "0")

    d = json.loads(out)

    assert code == 0
    assert d["r0"] == pytest.approx(0.10715, abs=1e-5)
    assert d["discrepancy_flag"] is True
    assert d["paper_reported"] == pytest.approx(0.087462, abs=1e-9)


def test_json_round_trips(capsys):

    _, out, _ = run(capsys, "omega", "--alpha", "0.25")

    assert cli.dumps(json.loads(out)) == out


def test_curve_csv(capsys):

    code, out, _ = run(capsys, "curve", "--phi", "identity", "--r", "0.5", "--n", "4")

    lines = out.splitlines()

    assert code == 0
    assert lines[0] == "theta,re,im"
    assert len(lines) == 5


def test_curve_needs_four_samples(capsys):

    code, _, _ = run(capsys, "curve", "--n", "3")

    assert code == 2


def test_curve_svg(capsys):

    code, out, _ = run(capsys, "curve", "--alpha", "0.25", "--p", "half_plane_p", "--r", "0.6", "--format", "svg")

    assert code == 0
    assert out.count("<polyline") == 1


def test_curve_png_needs_out(capsys):

    code, _, _ = run(capsys, "curve", "--format", "png")

    assert code == 2


def test_curve_png(capsys, tmp_path):

    path = str(tmp_path / "c.png")
    code, out, _ = run(capsys, "curve", "--n", "90", "--format", "png", "--out", path)

    assert code == 0
    assert out == ""
    assert (tmp_path / "c.png").exists()


def test_verify_filter(capsys):

    code, out, _ = run(capsys, "verify", "--filter", "cubic_root")

    d = json.loads(out)

    assert code == 0
    assert d["passed"] is True
    assert [r["name"] for r in d["results"]] == ["cubic_root"]


def test_verify_zero_tolerance_fails(capsys):

    code, out, _ = run(capsys, "verify", "--filter", "cubic_root", "--tol-scale", "0")

    assert code == 1
    assert json.loads(out)["passed"] is False


def test_negative_tolerance_scale_is_usage_error(capsys):

    code, _, _ = run(capsys, "verify", "--tol-scale", "-1")

    assert code == 2


def test_run_command_is_deterministic():

    cfg = cli.parse_args(["eval", "--dil", "a=z", "--p", "half_plane_p", "--z", "0.3+0.2j"])

    first, ok = cli.run_command(cfg)
    second, _ = cli.run_command(cfg)

    assert ok
    assert first == second
    assert cli.dumps(json.loads(first)) == first
