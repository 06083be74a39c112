"""The desk-scale verification battery behind `c2webs selftest`.

Eight criteria, each timed against a generous budget:

  1  defining relations, symbolically over A
  2  intertwiner certification of every building-block matrix
  3  pinned elementary ladder tables, both ways up, exact
  4  double ladder counts against the multiplicity formula (words <= 4)
  5  triangularity and upside-down expansion (words <= 5, over A)
  6  basis theorem over Q(q), Q at q=1, F_7 at q=2, F_5 at q=3 (words <= 3),
     plus rejection of the degenerate F_5 at q=2
  7  cellularity sweep with a fixed seed (words <= 4)
  8  cups and caps rebuilt from the self-duality scalars

Criterion 6's F_5, q=3 leg is mathematically unattainable: 3 + 3^-1 = 0 in
F_5, the excluded degenerate case, so that leg fails by necessity and is
reported as an expected failure; F_5 at q=4 is checked instead to cover a
second prime field.
"""

from __future__ import annotations

import os
import time

from . import _golden, ladders, reps, webs, weights
from .ring import InvalidSpecialization, PrimeField, Rationals, SymbolicQq


def words_up_to(n):
    out = [""]
    level = [""]
    for _ in range(n):
        level = [w + c for w in level for c in "12"]
        out += level
    return out


def crit_relations():
    rep = webs.relation_suite(None)
    return rep["verdict"], {"witnesses": rep["witnesses"]}


def crit_intertwiners():
    failures = []
    mats = {
        "cup1": reps.cup_map("1"),
        "cup2": reps.cup_map("2"),
        "cap1": reps.cap_map("1"),
        "cap2": reps.cap_map("2"),
        "merge": reps.pvertex_map(),
        "split": reps.ivertex_map(),
    }
    for name, d in webs.derived_trivalents().items():
        mats[f"trivalent {name}"] = webs.eval_diagram(d)
    mats["tetravalent"] = webs.eval_expr(webs.tetravalent())
    for name, m in mats.items():
        ok, report = reps.check_intertwiner(m, report=True)
        if not ok:
            failures.append({"map": name, "witness": report})
    for letter in ("1", "2"):
        ok, report = reps.check_self_duality(letter, report=True)
        if not ok:
            failures.append({"map": f"duality scalars {letter}",
                             "witness": report})
    return not failures, {"witnesses": failures, "maps": len(mats) + 2}


def crit_golden():
    witnesses = _golden.check_all()
    return not witnesses, {"witnesses": witnesses}


def crit_counts():
    failures = []
    words = words_up_to(4)
    for w in words:
        n1 = w.count("1")
        size = weights.subsequence_space_size(w)
        if size != 4**n1 * 5 ** (len(w) - n1) or \
                size != len(weights.enumerate_S(w)):
            failures.append({"kind": "subsequence-count", "word": w})
    pairs = 0
    for w in words:
        for u in words:
            pairs += 1
            dls = ladders.double_ladders(w, u)
            dim = weights.hom_dim(w, u)
            if len(dls) != dim:
                failures.append({
                    "kind": "ladder-count", "bottom": w, "top": u,
                    "ladders": len(dls), "hom_dim": dim,
                })
    return not failures, {"witnesses": failures, "pairs": pairs}


def crit_triangularity():
    failures = []
    words = [w for w in words_up_to(5) if w]
    for w in words:
        rep = ladders.triangularity_check(w)
        if not rep["verdict"]:
            failures.append({"word": w, "witnesses": rep["witnesses"]})
        rep = ladders.upside_down_check(w)
        if not rep["verdict"]:
            failures.append({"word": w, "witnesses": rep["witnesses"]})
    return not failures, {"witnesses": failures, "words": len(words)}


def crit_basis():
    failures = []
    expected = []
    words = words_up_to(3)
    pairs = [
        (w, u) for w in words for u in words if weights.hom_dim(w, u) > 0
    ]
    fields = [SymbolicQq(), Rationals(1), PrimeField(7, 2)]
    for field in fields:
        for w, u in pairs:
            rep = ladders.basis_check(w, u, field)
            if not rep["verdict"]:
                failures.append({"bottom": w, "top": u,
                                 "field": field.describe(),
                                 "rank": rep["rank"],
                                 "hom_dim": rep["hom_dim"]})
    # leg (d) as stated: F_5 with q = 3; unattainable since q + q^-1 = 0
    try:
        PrimeField(5, 3)
        legd_ok = True     # would continue with basis checks if reachable
    except InvalidSpecialization as exc:
        legd_ok = False
        expected.append({
            "leg": "F5 q=3",
            "reason": str(exc),
            "note": "unattainable as specified; q = 3 is degenerate in F_5",
        })
    # the degenerate F_5, q = 2 must be rejected at specialization time
    try:
        PrimeField(5, 2)
        failures.append({"kind": "degenerate-accepted", "field": "F5 q=2"})
    except InvalidSpecialization:
        pass
    # supplementary second prime field so the coverage point still stands
    for w, u in pairs:
        rep = ladders.basis_check(w, u, PrimeField(5, 4))
        if not rep["verdict"]:
            failures.append({"bottom": w, "top": u, "field": "F5(q=4)",
                             "rank": rep["rank"],
                             "hom_dim": rep["hom_dim"]})
    verdict = not failures and legd_ok
    return verdict, {"witnesses": failures, "expected_failures": expected,
                     "pairs": len(pairs)}


def crit_cellularity():
    seed = int(os.environ.get("WEBS_SEED", "0"))
    failures = []
    checks = 0
    # the prime field covers the whole word range; exact rationals are much
    # slower per solve, so they take the shorter half as a second opinion
    legs = (
        (PrimeField(7, 2), words_up_to(4)),
        (Rationals(1), words_up_to(3)),
    )
    for field, words in legs:
        for w in words:
            rep = ladders.cellularity_sweep(w, w, field, seed=seed, trials=1)
            checks += rep["checks"]
            if not rep["verdict"]:
                failures.append({"word": w, "field": field.describe(),
                                 "witnesses": rep["witnesses"]})
    return not failures, {"witnesses": failures, "checks": checks,
                          "seed": seed}


def crit_duality_route():
    failures = []
    for letter in ("1", "2"):
        if reps.cap_from_duality(letter) != reps.cap_map(letter):
            failures.append({"map": f"cap{letter}"})
        if reps.cup_from_duality(letter) != reps.cup_map(letter):
            failures.append({"map": f"cup{letter}"})
    return not failures, {"witnesses": failures}


CRITERIA = (
    ("1 defining relations", crit_relations, 5.0, False),
    ("2 intertwiner certification", crit_intertwiners, 10.0, False),
    ("3 elementary ladder tables", crit_golden, 10.0, False),
    ("4 ladder counts vs multiplicities", crit_counts, 30.0, False),
    ("5 triangularity", crit_triangularity, 300.0, False),
    ("6 basis theorem", crit_basis, 300.0, True),
    ("7 cellularity", crit_cellularity, 600.0, False),
    ("8 duality-built cups and caps", crit_duality_route, 10.0, False),
)


def run(verbose=True):
    """Run the battery; returns a JSON-able report, prints one line each."""
    report = {"criteria": [], "backend": _backend_name()}
    overall = True
    for name, fn, budget, has_expected in CRITERIA:
        t0 = time.perf_counter()
        ok, detail = fn()
        elapsed = time.perf_counter() - t0
        in_budget = elapsed < budget
        verdict = ok and in_budget
        overall = overall and verdict
        entry = {
            "criterion": name,
            "verdict": verdict,
            "content_ok": ok,
            "elapsed": round(elapsed, 3),
            "budget": budget,
            "detail": detail,
        }
        report["criteria"].append(entry)
        if verbose:
            status = "PASS" if verdict else "FAIL"
            line = f"criterion {name}: {status} ({elapsed:.2f}s)"
            if not in_budget and ok:
                line += f"  [over budget {budget}s]"
            if not ok and has_expected and detail.get("expected_failures"):
                line += "  [contains an expected failure; see report]"
            print(line)
            if not ok:
                for w in detail.get("witnesses", [])[:5]:
                    print(f"    witness: {w}")
                for w in detail.get("expected_failures", []):
                    print(f"    expected: {w}")
    report["verdict"] = overall
    if verbose:
        print(f"selftest: {'PASS' if overall else 'FAIL'}")
    return report


def _backend_name():
    from ._backend import backend_name

    return backend_name()
