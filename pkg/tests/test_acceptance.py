"""Acceptance battery: eight desk-scale criteria, one test each.

Run with ``pytest -v tests/test_acceptance.py`` to get one pass/fail line
per criterion.  Every check is exact (no floating point anywhere); the
budgets below are wall-clock ceilings, generous on purpose.

One test in this file fails by design:
``test_acceptance_6b_basis_theorem_over_F5_at_q_3`` demands the basis
theorem over F_5 with q = 3.  In F_5, 3 + 3^-1 = 3 + 2 = 0, so q + q^-1
(the quantum two) is not invertible there and the coefficient ring has no
image in that field.  The package rejects the specialization at
construction time, which this suite treats as the honest outcome: the leg
is reported as failed rather than silently skipped or weakened.  The
neighbouring test covers F_5 at q = 4, where the specialization exists,
so two distinct prime fields are still exercised.
"""

import time

import pytest

from c2webs import selftest
from c2webs.ring import InvalidSpecialization, PrimeField

BUDGETS = {
    "1 defining relations": 5.0,
    "2 intertwiner certification": 10.0,
    "3 elementary ladder tables": 10.0,
    "4 ladder counts vs multiplicities": 30.0,
    "5 triangularity": 300.0,
    "6 basis theorem": 300.0,
    "7 cellularity": 600.0,
    "8 duality-built cups and caps": 10.0,
}


def test_budgets_match_battery_registry():
    registry = {name: budget for name, _, budget, _ in selftest.CRITERIA}
    assert registry == BUDGETS


def run_criterion(name, fn, budget):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(f"acceptance {name}: {status} ({elapsed:.2f}s, budget {budget}s)")
    assert elapsed < budget, (
        f"{name} took {elapsed:.2f}s, over the {budget}s budget"
    )
    return ok, detail


def test_acceptance_1_defining_relations_symbolic():
    ok, detail = run_criterion(
        "1 defining relations", selftest.crit_relations, 5.0
    )
    assert ok, detail["witnesses"]


def test_acceptance_2_intertwiner_certification():
    ok, detail = run_criterion(
        "2 intertwiner certification", selftest.crit_intertwiners, 10.0
    )
    assert ok, detail["witnesses"]
    # 6 generators + 4 derived trivalents + tetravalent + 2 duality scalars
    assert detail["maps"] == 13


def test_acceptance_3_elementary_ladder_tables():
    ok, detail = run_criterion(
        "3 elementary ladder tables", selftest.crit_golden, 10.0
    )
    assert ok, detail["witnesses"]


def test_acceptance_4_ladder_counts_match_multiplicities():
    ok, detail = run_criterion(
        "4 ladder counts vs multiplicities", selftest.crit_counts, 30.0
    )
    assert ok, detail["witnesses"]
    assert detail["pairs"] == 31 * 31  # all word pairs through length 4


def test_acceptance_5_triangularity_and_upside_down():
    ok, detail = run_criterion(
        "5 triangularity", selftest.crit_triangularity, 300.0
    )
    assert ok, detail["witnesses"]
    assert detail["words"] == 62  # all non-empty words through length 5


def test_acceptance_6a_basis_theorem_attainable_fields():
    """Full rank over Q(q), Q at q=1, F_7 at q=2, and F_5 at q=4; the
    degenerate F_5 at q=2 is rejected at specialization time."""
    ok, detail = run_criterion("6 basis theorem", selftest.crit_basis, 300.0)
    # every leg that admits a specialization must pass outright
    assert detail["witnesses"] == []
    # and the one that does not must be reported, not silently dropped
    assert len(detail["expected_failures"]) == 1
    assert detail["expected_failures"][0]["leg"] == "F5 q=3"
    assert detail["pairs"] == 107  # word pairs through length 3 with hom > 0


def test_acceptance_6b_basis_theorem_over_F5_at_q_3():
    """Demanded leg: basis theorem over F_5 with q = 3.

    This fails by necessity: 3 + 3^-1 = 0 in F_5, so the coefficient
    ring, which inverts q + q^-1, has no image in that field.  Kept red
    on purpose; see the module docstring.
    """
    try:
        field = PrimeField(5, 3)
    except InvalidSpecialization as exc:
        pytest.fail(
            "basis theorem over F_5 at q = 3 is unattainable: "
            f"{exc}  (q + q^-1 = 3 + 2 = 0 in F_5, so the ring that "
            "inverts the quantum two has no image in this field; the "
            "degenerate case every statement here excludes)"
        )
    # unreachable unless the arithmetic above were wrong
    from c2webs import ladders

    rep = ladders.basis_check("11", "11", field)
    assert rep["verdict"]


def test_acceptance_7_cellularity_fixed_seed():
    ok, detail = run_criterion(
        "7 cellularity", selftest.crit_cellularity, 600.0
    )
    assert ok, detail["witnesses"]
    assert detail["seed"] == 0 or "WEBS_SEED" in __import__("os").environ
    assert detail["checks"] > 0


def test_acceptance_8_duality_built_cups_and_caps():
    ok, detail = run_criterion(
        "8 duality-built cups and caps", selftest.crit_duality_route, 10.0
    )
    assert ok, detail["witnesses"]
