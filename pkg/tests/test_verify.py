import math

import verify


def test_registry_has_named_checks():

    names = [name for name, _ in verify.checks()]

    assert len(names) == len(set(names))
    for expected in ("distortion", "pde_residual", "cubic_root", "q_limits", "omega_erratum"):
        assert expected in names


def test_filter_by_tag_runs_only_matching_checks():

    report = verify.run_suite(filter="distortion")

    assert [r.name for r in report.results] == ["distortion"]
    assert report.passed


def test_cheap_radius_checks_pass():

    for name in ("cubic_root", "quintic_numerator", "cst_continuity", "back_substitution", "q_limits", "q_monotone"):
        report = verify.run_suite(filter=name)
        assert report.passed, report.to_dict()


def test_zero_tolerance_scale_fails():

    report = verify.run_suite(filter="cubic_root", tol_scale=0.0)

    assert not report.passed
    assert report.results[0].tolerance == 0.0
    assert report.results[0].measured > 0.0


def test_unmatched_filter_is_not_a_pass():

    report = verify.run_suite(filter="no-such-check")

    assert report.results == []
    assert not report.passed


def test_report_is_json_friendly():

    d = verify.run_suite(filter="cst_continuity", seed=3).to_dict()

    assert d["seed"] == 3
    assert d["results"][0]["name"] == "cst_continuity"
    assert math.isfinite(d["results"][0]["measured"])


def test_every_module_has_checks():

    tags = set(t for _, tt in verify.checks() for t in tt)

    for module in ("analytic_fn", "logharmonic_core", "geometry", "radii", "cli"):
        assert module in tags


def test_analytic_fn_checks_pass():

    report = verify.run_suite(filter="analytic_fn")

    assert [r.name for r in report.results] == ["dilatation_catalog", "derivative_sweep", "log_quotient_exp",
                                                "radial_integral_linearity"]
    assert report.passed, report.to_dict()


def test_cli_checks_pass():

    report = verify.run_suite(filter="cli")

    assert [r.name for r in report.results] == ["cli_deterministic", "cli_json_round_trip"]
    assert report.passed, report.to_dict()
