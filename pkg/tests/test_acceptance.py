"""Acceptance criteria 1-9, one test each.

Every test records a one-line verdict in ``CRITERIA``; the conftest prints
them in the terminal summary. Runtime limits are asserted where stated.
"""

import json
import subprocess
import sys
import time

from tnbraid import suite

CRITERIA: dict[int, str] = {}


def record(k, title, ok, detail=""):
    line = f"criterion {k} [{title}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    CRITERIA[k] = line
    print(line)


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def failure_summary(report, limit=3):
    return "; ".join(f"{e.check} {e.instance}" for e in report.failures()[:limit])


def test_criterion_1_golden_matrices():
    report, secs = timed(suite.golden_matrices_check)
    ok = report.passed and secs < 1.0
    record(1, "golden matrices", ok, f"{secs:.2f}s {failure_summary(report)}".strip())
    assert report.passed, report.failures()
    assert secs < 1.0


def test_criterion_2_braid_relations():
    report, secs = timed(suite.braid_relations_check, seed=0, tuples=100)
    sampled = [e for e in report.entries if e.instance.startswith("n=")]
    ok = report.passed and secs < 60.0 and len(sampled) > 0
    record(2, "braid relations", ok, f"{len(report.entries)} checks, {secs:.1f}s {failure_summary(report)}".strip())
    assert report.passed, report.failures()
    assert secs < 60.0


def test_criterion_3_inverses():
    report, secs = timed(suite.inverses_check)
    ok = report.passed and secs < 5.0
    record(3, "inverses", ok, f"{secs:.2f}s")
    assert report.passed, report.failures()
    assert secs < 5.0


def test_criterion_4_obstruction():
    report, secs = timed(suite.obstruction_check, seed=0, tuples=100)
    record(4, "obstruction formula", report.passed, f"{secs:.1f}s {failure_summary(report)}".strip())
    assert report.passed, report.failures()


def test_criterion_5_charpoly_conjecture():
    report, secs = timed(suite.charpoly_check)
    verdicts = [e for e in report.entries if e.check == "conjecture_verdict"]
    matches = sorted({m for e in verdicts for m in e.certificate["matching"]})
    record(5, "characteristic polynomial", report.passed,
           f"matching convention(s): {', '.join(matches) or 'none'}; {secs:.1f}s")
    assert report.passed, report.failures()
    # every (n, generator) case must have been examined
    assert {e.instance for e in verdicts} >= {"n=2 B(1)", "n=3 B(1)", "n=3 B(2)", "n=4 B(1)", "n=4 B(3)",
                                              "n=5 B(1)", "n=5 B(4)"}


def test_criterion_6_dimensions():
    (report, dims), secs = timed(suite.dimensions_check, seed=7, samples=5)
    detail = (f"algebra_dim={dims['algebra_dim']} (expected {suite.PUBLISHED_ALGEBRA_DIM}), "
              f"centralizer_dim={dims['centralizer_dim']} (expected {suite.PUBLISHED_CENTRALIZER_DIM}), "
              f"center_dim={dims['center_dim']}, trace_form_rank={dims['trace_form_rank']}, "
              f"{secs:.1f}s")
    ok = report.passed and secs < 60.0
    record(6, "dimensions", ok, detail)
    assert len(dims["samples"]) == 5
    assert dims["block_consistency"]["verdict"]
    assert secs < 60.0
    assert report.passed, report.failures()


def test_criterion_7_free_group_oracle():
    report, secs = timed(suite.free_group_check, seed=0, words=1000)
    ok = report.passed and secs < 30.0
    record(7, "free-group oracle", ok, f"{secs:.1f}s")
    assert report.passed, report.failures()
    assert secs < 30.0


def test_criterion_8_subspace_preservation():
    report, secs = timed(suite.subspace_check)
    record(8, "subspace preservation", report.passed, f"{secs:.2f}s")
    assert report.passed, report.failures()


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "tnbraid.cli", *argv], capture_output=True, text=True,
                          timeout=600)
    return proc.returncode, json.loads(proc.stdout)


def _statuses(results):
    return [e["status"] for section in results.values() if isinstance(section, list) for e in section]


def test_criterion_9_cli_suites():
    vcode, vdoc = _cli("verify", "--suite")
    acode, adoc = _cli("analyze", "--suite")
    v_sections = set(vdoc["results"])
    a_sections = set(adoc["results"]) - {"dimension_report"}
    # exit code must reflect the contained verdicts: 0 iff everything passed, else 1
    v_consistent = vcode == (0 if all(s == "pass" for s in _statuses(vdoc["results"])) else 1)
    a_consistent = acode == (0 if all(s == "pass" for s in _statuses(adoc["results"])) else 1)
    covered = (v_sections == set(suite.VERIFY_CRITERIA) and a_sections == set(suite.ANALYZE_CRITERIA))
    ok = v_consistent and a_consistent and covered
    record(9, "standalone CLI suites", ok, f"verify exit {vcode}, analyze exit {acode}")
    assert covered, (v_sections, a_sections)
    assert v_consistent and a_consistent
