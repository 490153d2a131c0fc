"""Acceptance criteria 1–10 on the default catalog (posets up to 3 points).

Each test prints one PASS/FAIL line and asserts zero disagreements.
"""
from __future__ import annotations

import pytest

from localelab.catalog import frames_isomorphic, generate_catalog
from localelab.frame import builtin
from localelab.maps import localic_map
from localelab.reflections import reflect
from localelab.selections import BETA_MODES, OPEN, is_S_beta_map_thm, is_S_gamma_map
from localelab.suites import SuiteConfig, run_suite

CONFIG = SuiteConfig()


@pytest.fixture(scope="module")
def reports():
    catalog = generate_catalog(CONFIG.max_poset)
    cache = {}

    def get(suite):
        if suite not in cache:
            cache[suite] = run_suite(suite, CONFIG, catalog)
        return cache[suite]

    return get


def _select(report, match):
    checks = {k: v for k, v in report.instances.items() if match(k)}
    failures = [f for f in report.failures if match(f["check"])]
    return sum(checks.values()), failures


def _verdict(capsys, number, title, checked, failures, extra_ok=True):
    ok = checked > 0 and not failures and extra_ok
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({checked} checks, {len(failures)} disagreements)")
        for fail in failures[:10]:
            print(f"    {fail}")
    assert checked > 0, "no instances checked"
    assert extra_ok, "spot value mismatch"
    assert not failures, failures[:5]


def test_criterion_01_cb_oracle(reports, capsys):
    checked, failures = _select(reports("prelim"), lambda k: k == "cb_oracle")
    _verdict(capsys, 1, "fixpoint ≪ equals the interpolating-chain oracle", checked, failures)


def test_criterion_02_cs_cb(reports, capsys):
    checked, failures = _select(reports("prelim"), lambda k: k == "cs_cb")
    _verdict(capsys, 2, "a ≪ b iff 𝔬(a), 𝔠(b) completely separated", checked, failures)


def test_criterion_03_beta_oracle(reports, capsys):
    checked, failures = _select(reports("beta_oracle"), lambda k: k == "beta_defn_vs_thm")
    f = localic_map(builtin("C3"), builtin("C2"), [0, 0, 1])
    spot = not is_S_gamma_map(f, OPEN, "beta") and not any(is_S_beta_map_thm(f, OPEN, m) for m in BETA_MODES)
    _verdict(capsys, 3, "S-beta definition equals every theorem mode", checked, failures, spot)


def test_criterion_04_ass(reports, capsys):
    checked, failures = _select(reports("ass"), lambda k: k in ("ass", "cb_preserving_conditions"))
    _verdict(capsys, 4, "open-beta iff ≪-preserving, five conditions agree", checked, failures)


def test_criterion_05_lambda_oracle(reports, capsys):
    checked, failures = _select(reports("lambda_oracle"), lambda k: k == "lambda_defn_vs_thm")
    _verdict(capsys, 5, "S-lambda definition equals every theorem mode", checked, failures)


def test_criterion_06_reflections(reports, capsys):
    checked, failures = _select(reports("reflections"), lambda k: True)
    C3, B4 = builtin("C3"), builtin("B4")
    spot = (
        reflect(C3, "beta")[0].as_frame.n == 2
        and reflect(C3, "lambda")[0].as_frame.n == 2
        and frames_isomorphic(reflect(B4, "beta")[0].as_frame, B4)
    )
    _verdict(capsys, 6, "reflection squares, regularity, units", checked, failures, spot)


_CRIT7 = ("almost_normal_five_way", "pframe_three_way", "disc_closure_mode", "table_cell")


def test_criterion_07_classifier_tables(reports, capsys):
    checked, failures = _select(reports("tables"), lambda k: k in _CRIT7)
    _verdict(capsys, 7, "classifier equivalences and table audit", checked, failures)


_CRIT8 = (
    "normal_sep[",
    "rc_preserving[",
    "disconnected_open[",
    "coz_separating[",
    "ST_open[",
    "ST_star_closed[",
    "boolean_codomain:",
    "pframe_codomain:",
    "every_map:",
)


def test_criterion_08_characterization_sweeps(reports, capsys):
    checked, failures = 0, []
    for suite in ("normality", "disconnected", "lambda_families"):
        c, f = _select(reports(suite), lambda k: k.startswith(_CRIT8))
        checked += c
        failures += f
    _verdict(capsys, 8, "characterization sweeps, both directions", checked, failures)


def test_criterion_09_embeddings(reports, capsys):
    checked, failures = _select(reports("section5"), lambda k: k.startswith("section5:"))
    _verdict(capsys, 9, "embedding equivalences over all sublocales", checked, failures)


def test_criterion_10_preservation(reports, capsys):
    checked, failures = 0, []
    for suite in ("normality", "disconnected"):
        c, f = _select(reports(suite), lambda k: k.startswith("preserve_"))
        checked += c
        failures += f
    _verdict(capsys, 10, "preservation under onto and dense maps", checked, failures)
