"""Named verification suites and the report/exit-code contract.

Each suite returns (exit_code, report): 0 when the property is verified,
1 when a counterexample was found (the report carries the witnesses),
2 when the configuration was invalid.  Reports are plain JSON-serializable
dicts with deterministic ordering.
"""

from __future__ import annotations

import json
from typing import Any

from .cartan import (
    CartanData,
    LambdaConfig,
    Weight,
    classify_orbit,
    color,
    validate_lambda_form,
    weyl_translate,
)
from .cone import sigma_membership, verify_descent_identities
from .enumeration import (
    CounterexampleError,
    EnumConfig,
    bfs_enumerate,
    box_enumerate_sigma,
    verify_equality,
    verify_shift_equivalences,
)
from .lattice import (
    apply_e,
    apply_f,
    elt_to_json,
    eps_phi,
    img_membership_elt,
    star_full,
    star_minus,
    star_plus,
    weight_of,
)
from .weyl import is_extremal, sw_closed_form_check, weyl_walk

SUITE_NAMES = (
    "closure",
    "appendix-a",
    "extremal",
    "equality",
    "classify",
    "axioms",
    "ippin",
)


def _report(suite: str, ec: EnumConfig | None, verified: bool, witnesses, **params):
    return {
        "suite": suite,
        "config": None if ec is None else ec.cfg.to_json(),
        "verified": verified,
        "witnesses": witnesses,
        "params": params,
    }


def suite_closure(ec: EnumConfig) -> dict:
    """BFS stays in the cone; box cone elements are operator-closed and
    image-contained."""
    witnesses: list[dict] = []
    try:
        result = bfs_enumerate(ec)
        bfs_count = len(result.elements)
    except CounterexampleError as exc:
        witnesses.append({"kind": "bfs-escape", "element": elt_to_json(exc.element), **exc.detail})
        bfs_count = None
    box = box_enumerate_sigma(ec)
    cfg, cartan = ec.cfg, ec.cfg.cartan
    for elt in box:
        if not img_membership_elt(cartan, elt):
            witnesses.append({"kind": "not-in-image", "element": elt_to_json(elt)})
        for i in (1, 2):
            for op, name in ((apply_f, "f"), (apply_e, "e")):
                nxt = op(cartan, elt, i)
                if nxt is not None and not sigma_membership(cfg, nxt):
                    witnesses.append(
                        {
                            "kind": "box-escape",
                            "op": f"{name}_{i}",
                            "element": elt_to_json(elt),
                            "image": elt_to_json(nxt),
                        }
                    )
    return _report(
        "closure",
        ec,
        not witnesses,
        witnesses,
        depth=ec.depth,
        support=ec.support,
        max_coord=ec.max_coord,
        bfs_elements=bfs_count,
        box_elements=len(box),
    )


def suite_descent(ec: EnumConfig, k_range: int = 12) -> dict:
    mismatches = verify_descent_identities(ec.cfg, k_range)
    return _report(
        "appendix-a", ec, not mismatches, mismatches, k_range=k_range
    )


def suite_extremal(ec: EnumConfig, depth: int = 6, sw_range: int = 6) -> dict:
    """Starred cone elements with empty minus part are extremal along the
    truncated Weyl walk, match the closed-form factorization, and have
    vanishing ε/φ at the walk colors."""
    cfg, cartan = ec.cfg, ec.cfg.cartan
    K = ec.weyl_depth
    witnesses: list[dict] = []
    result = bfs_enumerate(
        EnumConfig(cfg, depth, ec.support, ec.max_coord, ec.weyl_depth)
    )
    prime = [e for e in result.elements if not e.minus.entries]
    for x in prime:
        star = star_full(cartan, x)
        verdict = is_extremal(cartan, star, K)
        if not verdict.extremal:
            witnesses.append(
                {"kind": "not-extremal", "element": elt_to_json(x), **verdict.to_json()}
            )
            continue
        for k in range(-sw_range, sw_range + 1):
            if not sw_closed_form_check(cfg, x, k):
                witnesses.append(
                    {"kind": "closed-form-mismatch", "element": elt_to_json(x), "k": k}
                )
        walk = weyl_walk(cartan, star, sw_range)
        for k in range(-sw_range, sw_range + 1):
            eps_k = eps_phi(cartan, walk[k], color(k))[0]
            phi_k1 = eps_phi(cartan, walk[k], color(k + 1))[1]
            if eps_k != 0 or phi_k1 != 0:
                witnesses.append(
                    {
                        "kind": "walk-eps-phi",
                        "element": elt_to_json(x),
                        "k": k,
                        "eps": eps_k,
                        "phi": phi_k1,
                    }
                )
    return _report(
        "extremal",
        ec,
        not witnesses,
        witnesses,
        depth=depth,
        K=K,
        sw_range=sw_range,
        prime_elements=len(prime),
    )


def suite_equality(ec: EnumConfig, escalation: tuple[int, ...] = (8, 12, 16)) -> dict:
    """Cone = image-with-extremal-star over the box, escalating the Weyl
    truncation until the two sets agree."""
    last = None
    for K in escalation:
        last = verify_equality(ec, K)
        if last["equal"]:
            return _report(
                "equality",
                ec,
                True,
                [],
                achieved_K=K,
                escalation=list(escalation),
                size=last["size_sigma"],
            )
    witnesses = [
        {"kind": "only-in-cone", "elements": last["only_sigma"]},
        {"kind": "only-extremal", "elements": last["only_extremal"]},
    ]
    return _report(
        "equality", ec, False, witnesses, escalation=list(escalation), K=last["K"]
    )


def suite_classify(
    cartan: CartanData, kmax: int = 8, translate_range: int = 12
) -> dict:
    """Orbit classification agrees with the normal-form scan of translates."""
    witnesses: list[dict] = []
    for k1 in range(1, kmax + 1):
        for k2 in range(1, kmax + 1):
            mu = Weight(k1, -k2)
            verdict = classify_orbit(cartan, mu)
            by_translates = any(
                validate_lambda_form(
                    cartan,
                    weyl_translate(cartan, mu, k).m1,
                    -weyl_translate(cartan, mu, k).m2,
                )
                is not None
                for k in range(-translate_range, translate_range + 1)
            )
            if verdict.satisfies_condition != by_translates:
                witnesses.append(
                    {
                        "kind": "classification-disagreement",
                        "mu": mu.to_json(),
                        "classify": verdict.satisfies_condition,
                        "translate-scan": by_translates,
                    }
                )
            if verdict.satisfies_condition:
                rep = verdict.representative
                if (
                    rep is None
                    or validate_lambda_form(cartan, rep.m1, -rep.m2) is None
                ):
                    witnesses.append(
                        {"kind": "bad-representative", "mu": mu.to_json()}
                    )
    return _report(
        "classify",
        None,
        not witnesses,
        witnesses,
        a1=cartan.a1,
        a2=cartan.a2,
        kmax=kmax,
        translate_range=translate_range,
    )


def suite_axioms(ec: EnumConfig, depth: int = 6, ratio_range: int = 20) -> dict:
    """Crystal axioms and star identities on the BFS ball; exact sequence
    inequalities (interleaved ratio monotonicity, γ-identities)."""
    cfg, cartan = ec.cfg, ec.cfg.cartan
    witnesses: list[dict] = []

    # γ-identity 1/γ_k + γ_{k+1} = a_{i_k}, exactly
    for k in range(-ratio_range, ratio_range + 1):
        if cfg.gamma(k).inverse() + cfg.gamma(k + 1) != cartan.a_at(k):
            witnesses.append({"kind": "gamma-identity", "k": k})

    # interleaved ratios strictly above γ: c_j − γ_j c_{j−1} > 0 for j ≥ 2
    for j in range(2, ratio_range + 1):
        if (cfg.qnum(cfg.c(j)) - cfg.gamma(j) * cfg.c(j - 1)).sign() <= 0:
            witnesses.append({"kind": "ratio-bound", "seq": "c", "j": j})
        if (cfg.qnum(cfg.cprime(j)) - cfg.gamma(j + 1) * cfg.cprime(j - 1)).sign() <= 0:
            witnesses.append({"kind": "ratio-bound", "seq": "cprime", "j": j})

    result = bfs_enumerate(
        EnumConfig(cfg, depth, ec.support, ec.max_coord, ec.weyl_depth)
    )
    for elt in result.elements:
        wt = weight_of(cartan, elt)
        for i in (1, 2):
            eps, phi = eps_phi(cartan, elt, i)
            if phi != eps + wt.pairing(i):
                witnesses.append(
                    {"kind": "phi-eps-pairing", "element": elt_to_json(elt), "i": i}
                )
            down = apply_f(cartan, elt, i)
            if down is not None:
                if apply_e(cartan, down, i) != elt:
                    witnesses.append(
                        {"kind": "ef-inverse", "element": elt_to_json(elt), "i": i}
                    )
                if weight_of(cartan, down) != wt - cartan.alpha_weight(i):
                    witnesses.append(
                        {"kind": "f-weight-shift", "element": elt_to_json(elt), "i": i}
                    )
            up = apply_e(cartan, elt, i)
            if up is not None:
                if apply_f(cartan, up, i) != elt:
                    witnesses.append(
                        {"kind": "fe-inverse", "element": elt_to_json(elt), "i": i}
                    )
                if weight_of(cartan, up) != wt + cartan.alpha_weight(i):
                    witnesses.append(
                        {"kind": "e-weight-shift", "element": elt_to_json(elt), "i": i}
                    )
        if star_plus(cartan, star_plus(cartan, elt.plus)) != elt.plus:
            witnesses.append({"kind": "star-plus-involution", "element": elt_to_json(elt)})
        if star_minus(cartan, star_minus(cartan, elt.minus)) != elt.minus:
            witnesses.append({"kind": "star-minus-involution", "element": elt_to_json(elt)})
        if weight_of(cartan, star_full(cartan, elt)) != -elt.tag:
            witnesses.append({"kind": "star-weight", "element": elt_to_json(elt)})
    return _report(
        "axioms",
        ec,
        not witnesses,
        witnesses,
        depth=depth,
        elements=len(result.elements),
        ratio_range=ratio_range,
    )


def suite_ippin(ec: EnumConfig, L: int = 10, L_max: int = 40) -> dict:
    report = verify_shift_equivalences(ec, L, L_max)
    return _report(
        "ippin",
        ec,
        report["verified"],
        report["mismatches"],
        L=L,
        L_max=L_max,
        parts=report["parts"],
        checks=report["checks"],
    )


def run_suite(name: str, params: dict[str, Any]) -> tuple[int, dict]:
    """Dispatch a named suite from a flat parameter mapping.

    Required keys: a1, a2 (all suites) and k1, k2 (all but classify).
    Optional: depth, support, max_coord, weyl_depth, k_range, L, L_max,
    kmax, translate_range, escalation.
    """
    try:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
        cartan = CartanData(int(params["a1"]), int(params["a2"]))
        if name == "classify":
            report = suite_classify(
                cartan,
                kmax=int(params.get("kmax", 8)),
                translate_range=int(params.get("translate_range", 12)),
            )
        else:
            cfg = LambdaConfig(cartan, int(params["k1"]), int(params["k2"]))
            ec = EnumConfig(
                cfg,
                depth=int(params.get("depth", 8)),
                support=int(params.get("support", 3)),
                max_coord=int(params.get("max_coord", 4)),
                weyl_depth=int(params.get("weyl_depth", 8)),
            )
            if name == "closure":
                report = suite_closure(ec)
            elif name == "appendix-a":
                report = suite_descent(ec, k_range=int(params.get("k_range", 12)))
            elif name == "extremal":
                report = suite_extremal(
                    ec,
                    depth=int(params.get("extremal_depth", params.get("depth", 6))),
                    sw_range=int(params.get("sw_range", 6)),
                )
            elif name == "equality":
                escalation = tuple(params.get("escalation", (8, 12, 16)))
                report = suite_equality(ec, escalation=escalation)
            elif name == "axioms":
                report = suite_axioms(
                    ec, depth=int(params.get("axioms_depth", params.get("depth", 6)))
                )
            else:
                report = suite_ippin(
                    ec,
                    L=int(params.get("L", 10)),
                    L_max=int(params.get("L_max", 40)),
                )
    except (KeyError, ValueError, TypeError) as exc:
        return 2, {
            "suite": name,
            "verified": False,
            "error": f"invalid configuration: {exc}",
        }
    return (0 if report["verified"] else 1), report


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)
