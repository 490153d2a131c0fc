from __future__ import annotations

import json
import subprocess
import sys

import pytest

from localelab.catalog import generate_catalog
from localelab.cli import main
from localelab.suites import SUITES, SuiteConfig, run_suite


@pytest.fixture(scope="module")
def cat2():
    return generate_catalog(2)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


@pytest.mark.parametrize("suite", ["prelim", "ass"])
def test_clean_suites(suite):
    report = run_suite(suite)
    assert report.ok, report.to_text()
    assert sum(report.instances.values()) > 0


def test_fault_injection_is_caught():
    # a fresh catalog: the fault rewrites cached tables in place
    report = run_suite("beta_oracle", SuiteConfig(fault="corrupt_cb"), generate_catalog(3))
    assert report.failures
    fail = report.failures[0]
    assert fail["check"] == "beta_defn_vs_thm" and "hom" in fail and "replay" in fail


def test_parallel_matches_serial():
    a = run_suite("lambda_oracle", SuiteConfig(max_poset=2))
    b = run_suite("lambda_oracle", SuiteConfig(max_poset=2, workers=3))
    assert json.dumps(a.to_dict(timing=False), sort_keys=True) == json.dumps(b.to_dict(timing=False), sort_keys=True)


def test_reports_are_deterministic():
    runs = [json.dumps(run_suite(s, SuiteConfig(max_poset=2)).to_dict(timing=False), sort_keys=True) for s in ("tables", "tables")]
    assert runs[0] == runs[1]


def test_every_suite_runs_on_small_catalog(cat2):
    for suite in SUITES:
        report = run_suite(suite, SuiteConfig(max_poset=2), cat2)
        assert report.ok, report.to_text()


def test_table_failures_replay_through_classify():
    report = run_suite("tables")
    for fail in report.failures:
        if fail["check"] == "table_cell":
            expected_code = 0 if fail["named"] else 1
            assert main(["classify", "--frame", fail["frame"], "--tag", fail["expected"]]) == expected_code


def test_gamma_witness_replays():
    # witnesses from the fault run name real maps; the replay command parses and runs
    report = run_suite("beta_oracle", SuiteConfig(max_poset=2, fault="corrupt_cb"), generate_catalog(2))
    cmd = report.failures[0]["replay"]
    hom = cmd.split("--hom '")[1].split("'")[0]
    code = main(["gamma-check", "--hom", hom, "--selection", report.failures[0]["selection"], "--kind", "beta"])
    assert code in (0, 1)


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "localelab.cli", "classify", "--frame", "C2", "--tag", "boolean"], capture_output=True, text=True)
    assert out.returncode == 0 and "boolean: yes" in out.stdout
