"""Acceptance criteria 1-9, one test each.

Every test prints one ``CRITERION k: PASS|FAIL`` line (also collected into
the terminal summary). Tolerances are pinned in abchrom.verify: exact matches
for all values, wall-clock limits of 10 s per closed form, 600 s for the
largest join, 3600 s for the equivalence scan and 600 s for the extremal
witness certification. Run standalone with ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from abchrom import verify

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run
    ACCEPTANCE_LINES = []

CRITERIA = {
    1: ("closed-forms", "closed-form table (exact, <= 10 s each)"),
    2: ("joins", "join theorem spot checks (exact, largest <= 600 s)"),
    3: ("figures", "figure fixtures (exact booleans)"),
    4: ("equivalence", "definition == witnesses on n <= 6 corpus + 1000 random n <= 9 (0 disagreements, <= 3600 s)"),
    5: ("bounds", "bounds chain on the same corpus (0 violations)"),
    6: ("gap-families", "gap families (exact)"),
    7: ("extremal", "extremal family (exact, certification <= 600 s)"),
    8: ("heuristic", "heuristic sandwich, 100 runs per graph on n <= 7 corpus (0 violations)"),
    9: ("probe", "A_b vs phi probe (observational)"),
}


def evaluate(k: int):
    suite, label = CRITERIA[k]
    rows = verify.run_suite(suite)
    ok = verify.all_passed(rows)
    observational = all(r.observational for r in rows)
    tag = "INFO" if observational else ("PASS" if ok else "FAIL")
    head = f"CRITERION {k}: {tag} {label}"
    lines = [head] + [f"    {r.line()}" for r in rows]
    return ok, rows, lines


def _record(k):
    ok, rows, lines = evaluate(k)
    for line in lines:
        print(line)
    ACCEPTANCE_LINES.append(lines[0])
    return ok, rows


@pytest.mark.parametrize("k", range(1, 9))
def test_criterion(k):
    # criterion 4 is expected to fail: see the C6 analysis in the decisions ledger
    ok, rows = _record(k)
    assert ok, [r.to_json() for r in rows if not r.passed][:1]


def test_criterion_9_probe():
    ok, rows = _record(9)
    assert all(r.observational for r in rows)
    for r in rows:
        print(f"    findings: {r.detail['findings'][:3]}")


if __name__ == "__main__":
    results = {}
    for k in CRITERIA:
        ok, _, lines = evaluate(k)
        print("\n".join(lines), flush=True)
        results[k] = ok
    blocking = [k for k in CRITERIA if k != 9]
    sys.exit(0 if all(results[k] for k in blocking) else 1)
