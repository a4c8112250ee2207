"""Acceptance suite: the theorem-level checks at desk scale, zero tolerance.

One test per criterion; each prints a single PASS/FAIL line (visible with
pytest -s or in captured output).  The configuration matrix covers both
normal forms for a₁, a₂ ≥ 2, both one-entry cases, and one boundary weight
whose orbit representative differs from the weight itself.
"""

import pytest

from crystalcone.cartan import (
    CartanData,
    LambdaConfig,
    Weight,
    classify_orbit,
    validate_lambda_form,
    weyl_translate,
)
from crystalcone.cone import sigma_membership, verify_descent_identities
from crystalcone.enumeration import (
    EnumConfig,
    bfs_enumerate,
    box_enumerate_sigma,
    verify_shift_equivalences,
)
from crystalcone.lattice import apply_e, apply_f, img_membership_elt
from crystalcone.suites import suite_axioms, suite_equality, suite_extremal

MATRIX = [
    (3, 3, 1, 1),
    (2, 3, 1, 2),
    (3, 2, 2, 1),
    (5, 1, 2, 1),
    (1, 5, 1, 2),
    (4, 2, 3, 2),
]

CLASSIFY_FAMILIES = [(3, 3), (2, 3), (3, 2), (1, 5), (5, 1)]


@pytest.fixture(scope="module")
def configs():
    return {key: LambdaConfig(CartanData(key[0], key[1]), key[2], key[3]) for key in MATRIX}


def _verdict(criterion: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[criterion {criterion}] {status}")
    assert not failures, f"criterion {criterion}: {failures[:3]}"


def test_criterion_1_closure(configs):
    """BFS to depth 8 stays in the cone; box cone elements are operator-closed."""
    failures = []
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=8, support=3, max_coord=4, weyl_depth=8)
        try:
            bfs_enumerate(ec)
        except Exception as exc:  # CounterexampleError included
            failures.append((key, "bfs", str(exc)))
            continue
        for elt in box_enumerate_sigma(ec):
            for i in (1, 2):
                for op in (apply_f, apply_e):
                    nxt = op(cfg.cartan, elt, i)
                    if nxt is not None and not sigma_membership(cfg, nxt):
                        failures.append((key, "box", elt, i))
    _verdict("1 closure", failures)


def test_criterion_2_containment(configs):
    """Every box cone element is an image element on both parts."""
    failures = []
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=1, support=3, max_coord=4, weyl_depth=8)
        for elt in box_enumerate_sigma(ec):
            if not img_membership_elt(cfg.cartan, elt):
                failures.append((key, elt))
    _verdict("2 containment", failures)


def test_criterion_3_descent_identities(configs):
    """Closed-form descents match exactly to index 12; coefficients all ≥ 0."""
    failures = []
    for key, cfg in configs.items():
        mismatches = verify_descent_identities(cfg, 12)
        if mismatches:
            failures.append((key, mismatches[:2]))
    _verdict("3 descent-identities", failures)


def test_criterion_4_extremality(configs):
    """Stars of depth-≤6 cone elements with empty minus part are 8-extremal,
    match the closed-form walk to |k| ≤ 6, and have vanishing walk ε/φ."""
    failures = []
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=6, support=3, max_coord=4, weyl_depth=8)
        report = suite_extremal(ec, depth=6, sw_range=6)
        if not report["verified"]:
            failures.append((key, report["witnesses"][:2]))
    _verdict("4 extremality", failures)


def test_criterion_5_equality(configs):
    """Cone = image-with-extremal-star on the box at some K in {8, 12, 16}."""
    failures = []
    achieved = {}
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=1, support=3, max_coord=3, weyl_depth=8)
        report = suite_equality(ec, escalation=(8, 12, 16))
        if not report["verified"]:
            failures.append((key, report["witnesses"]))
        else:
            achieved[key] = report["params"]["achieved_K"]
    print(f"  equality achieved at K = {achieved}")
    assert all(k in (8, 12, 16) for k in achieved.values())
    _verdict("5 equality", failures)


def test_criterion_6_classification():
    """Orbit classification agrees with the translate scan on 1 ≤ k₁,k₂ ≤ 8."""
    failures = []
    for a1, a2 in CLASSIFY_FAMILIES:
        cartan = CartanData(a1, a2)
        for k1 in range(1, 9):
            for k2 in range(1, 9):
                mu = Weight(k1, -k2)
                verdict = classify_orbit(cartan, mu)
                scan = any(
                    validate_lambda_form(
                        cartan,
                        weyl_translate(cartan, mu, k).m1,
                        -weyl_translate(cartan, mu, k).m2,
                    )
                    is not None
                    for k in range(-12, 13)
                )
                if verdict.satisfies_condition != scan:
                    failures.append(((a1, a2), (k1, k2), verdict.satisfies_condition))
    # concrete antidominant witness: w₁(Λ₁ − 3Λ₂) = −Λ₁ at (3,3)
    verdict = classify_orbit(CartanData(3, 3), Weight(1, -3))
    if verdict.satisfies_condition or verdict.witness != (1, Weight(-1, 0)):
        failures.append(("witness", verdict))
    _verdict("6 classification", failures)


def test_criterion_7_sequence_bounds(configs):
    """Interleaved ratio chains strictly decrease and stay above γ, j ≤ 20."""
    failures = []
    for key, cfg in configs.items():
        for j in range(2, 21):
            if (cfg.qnum(cfg.c(j)) - cfg.gamma(j) * cfg.c(j - 1)).sign() <= 0:
                failures.append((key, "c", j))
            if (
                cfg.qnum(cfg.cprime(j)) - cfg.gamma(j + 1) * cfg.cprime(j - 1)
            ).sign() <= 0:
                failures.append((key, "cprime", j))
        for first_plain in (True, False):
            terms = []
            for m in range(0, 19):
                kind = "c" if (m % 2 == 0) == first_plain else "cprime"
                terms.append((cfg.c(m + 2) if kind == "c" else cfg.cprime(m + 2),
                              cfg.c(m + 1) if kind == "c" else cfg.cprime(m + 1)))
            for (n1, d1), (n2, d2) in zip(terms, terms[1:]):
                if not n1 * d2 > n2 * d1:
                    failures.append((key, "interleave", first_plain))
    _verdict("7 sequence-bounds", failures)


def test_criterion_8_axioms_and_star(configs):
    """Partial inverses, φ = ε + ⟨wt, α^∨⟩, weight shifts, star involutions,
    star weight, on all depth-≤6 elements."""
    failures = []
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=6, support=3, max_coord=4, weyl_depth=8)
        report = suite_axioms(ec, depth=6)
        if not report["verified"]:
            failures.append((key, report["witnesses"][:2]))
    _verdict("8 axioms-star", failures)


def test_criterion_9_shift_equivalences(configs):
    """Shifted-vector membership and γ/c inequality equivalences, L = 10,
    violation search bound 40, zero unresolved cases."""
    failures = []
    for key, cfg in configs.items():
        ec = EnumConfig(cfg, depth=1, support=3, max_coord=4, weyl_depth=8)
        report = verify_shift_equivalences(ec, L=10, L_max=40)
        if not report["verified"]:
            failures.append((key, report["mismatches"][:2]))
    _verdict("9 shift-equivalences", failures)
