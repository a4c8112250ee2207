"""Breadth-first and box enumeration of the cone, dual-route checks, export.

Two independent routes produce the same set: BFS closure of the vacuum under
the four crystal operators (the subcrystal route) and brute-force scanning of
a coordinate box against the cone inequalities (the polyhedral route).  The
equality check pits the cone against a third route entirely: image membership
plus truncated extremality of the starred element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cartan import LambdaConfig, c_seq, color
from .cone import first_violated_generator, sigma_membership, xi_generator
from .lattice import (
    CrystalElt,
    MinusVec,
    PlusVec,
    apply_e,
    apply_f,
    canonical_key,
    elt_to_json,
    img_membership_minus,
    img_membership_plus,
    make_elt,
    star_full,
    z_lambda,
)
from .weyl import is_extremal

MAX_BFS_DEPTH = 20


class CounterexampleError(Exception):
    """An enumeration met an element falsifying a cone property."""

    def __init__(self, message: str, element: CrystalElt, detail: dict | None = None):
        super().__init__(message)
        self.element = element
        self.detail = detail or {}


@dataclass(frozen=True)
class EnumConfig:
    cfg: LambdaConfig
    depth: int = 8
    support: int = 3
    max_coord: int = 4
    weyl_depth: int = 8

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.depth > MAX_BFS_DEPTH:
            raise ValueError(
                f"depth {self.depth} exceeds the guard {MAX_BFS_DEPTH} "
                "(frontier growth is exponential)"
            )
        if self.support < 1 or self.max_coord < 1 or self.weyl_depth < 1:
            raise ValueError("support, max_coord and weyl_depth must be positive")


@dataclass(frozen=True)
class EnumerationResult:
    elements: tuple[CrystalElt, ...]
    edges: tuple[tuple[str, int, str, str], ...]  # (src key, i, dst key, dir)
    depth_of: dict[str, int] = field(default_factory=dict)

    def f_edges(self) -> list[tuple[str, int, str]]:
        """All edges normalized to the lowering direction, deduplicated."""
        out = set()
        for src, i, dst, direction in self.edges:
            out.add((src, i, dst) if direction == "f" else (dst, i, src))
        return sorted(out)


def bfs_enumerate(ec: EnumConfig) -> EnumerationResult:
    """Closure of the vacuum under ẽ/f̃ to the configured depth.

    Every visited element is asserted to lie in the cone; a violation raises
    CounterexampleError (it would falsify the subcrystal property).
    """
    cfg = ec.cfg
    cartan = cfg.cartan
    start = z_lambda(cfg.lam)
    seen = {canonical_key(start): start}
    depth_of = {canonical_key(start): 0}
    edges: set[tuple[str, int, str, str]] = set()
    frontier = [start]
    for depth in range(1, ec.depth + 1):
        new_frontier = []
        for elt in frontier:
            src = canonical_key(elt)
            for i in (1, 2):
                for op, direction in ((apply_f, "f"), (apply_e, "e")):
                    nxt = op(cartan, elt, i)
                    if nxt is None:
                        continue
                    key = canonical_key(nxt)
                    edges.add((src, i, key, direction))
                    if key in seen:
                        continue
                    if not sigma_membership(cfg, nxt):
                        violated = first_violated_generator(cfg, nxt)
                        raise CounterexampleError(
                            "crystal operator left the cone",
                            nxt,
                            {
                                "from": elt_to_json(elt),
                                "op": f"{direction}_{i}",
                                "generator": None
                                if violated is None
                                else violated.to_json(),
                            },
                        )
                    seen[key] = nxt
                    depth_of[key] = depth
                    new_frontier.append(nxt)
        frontier = new_frontier
        if not frontier:
            break
    elements = tuple(sorted(seen.values(), key=canonical_key))
    return EnumerationResult(elements, tuple(sorted(edges)), depth_of)


def _box_scan(support: int, max_coord: int, check) -> list[dict[int, int]]:
    """Depth-first assignment of the box coordinates with pruning.

    Indices are filled 1..support then 0..−support; `check(t, coords)` is
    called after assigning index t and prunes the branch when False.
    """
    order = list(range(1, support + 1)) + list(range(0, -support - 1, -1))
    results: list[dict[int, int]] = []
    coords: dict[int, int] = {}

    def rec(pos: int) -> None:
        if pos == len(order):
            results.append(dict(coords))
            return
        t = order[pos]
        values = (
            range(0, max_coord + 1) if t >= 1 else range(0, -max_coord - 1, -1)
        )
        for v in values:
            coords[t] = v
            if check(t, coords):
                rec(pos + 1)
        del coords[t]

    rec(0)
    return results


def _coords_to_elt(cfg: LambdaConfig, coords: dict[int, int]) -> CrystalElt:
    plus = {k: v for k, v in coords.items() if k >= 1 and v != 0}
    minus = {k: v for k, v in coords.items() if k <= 0 and v != 0}
    return make_elt(plus, cfg.lam, minus)


def box_enumerate_sigma(ec: EnumConfig) -> list[CrystalElt]:
    """All cone elements with support and coordinates inside the box,
    enumerated directly from the inequalities (no crystal operators).
    """
    cfg = ec.cfg
    S = ec.support
    cfg.ensure_tail_nonneg(40 + S)

    def gens_for(t: int) -> list[object]:
        gens = []
        if t >= 2:
            gens.append(xi_generator(cfg, "plus-p", t))
            gens.append(xi_generator(cfg, "plus-gamma", t - 1))
            gens.append(xi_generator(cfg, "plus-mix", t - 1))
            if t == S:
                gens.append(xi_generator(cfg, "plus-gamma", S))
                gens.append(xi_generator(cfg, "plus-mix", S))
        elif t == 1:
            gens.append(xi_generator(cfg, "plus-p", 1))
            if S == 1:
                gens.append(xi_generator(cfg, "plus-gamma", 1))
                gens.append(xi_generator(cfg, "plus-mix", 1))
        elif t == 0:
            gens.append(xi_generator(cfg, "base-0"))
            gens.append(xi_generator(cfg, "base-1"))
            gens.append(xi_generator(cfg, "minus-p", 0))
        else:
            gens.append(xi_generator(cfg, "minus-p", t))
            gens.append(xi_generator(cfg, "minus-gamma", t + 1))
            gens.append(xi_generator(cfg, "minus-mix", t + 1))
            if t == -S:
                gens.append(xi_generator(cfg, "minus-gamma", -S))
                gens.append(xi_generator(cfg, "minus-mix", -S))
        return gens

    table = {t: gens_for(t) for t in range(-S, S + 1)}

    def check(t: int, coords: dict[int, int]) -> bool:
        return all(g.evaluate_map(coords).sign() >= 0 for g in table[t])

    boxes = _box_scan(S, ec.max_coord, check)
    return sorted(
        (_coords_to_elt(cfg, c) for c in boxes), key=canonical_key
    )


def box_enumerate_img(ec: EnumConfig) -> list[CrystalElt]:
    """All image elements inside the box (lattice-side inequalities only)."""
    cfg = ec.cfg
    cartan = cfg.cartan

    def check(t: int, coords: dict[int, int]) -> bool:
        if t >= 2:
            j = t - 1
            return (
                c_seq(cartan, "c", j) * coords.get(j, 0)
                - c_seq(cartan, "c", j - 1) * coords.get(j + 1, 0)
                >= 0
            )
        if t <= -1:
            j = t + 1
            return (
                c_seq(cartan, "cprime", -j + 1) * coords.get(j, 0)
                - c_seq(cartan, "cprime", -j) * coords.get(j - 1, 0)
                <= 0
            )
        return True

    boxes = _box_scan(ec.support, ec.max_coord, check)
    return sorted(
        (_coords_to_elt(cfg, c) for c in boxes), key=canonical_key
    )


def verify_equality(ec: EnumConfig, K: int | None = None) -> dict:
    """Compare the cone against {image elements whose star is K-extremal}.

    The two sides are computed by disjoint routes: inequalities only versus
    star + truncated Weyl walks.  The report carries both difference sets.
    """
    cfg = ec.cfg
    cartan = cfg.cartan
    if K is None:
        K = ec.weyl_depth
    sigma_side = {canonical_key(e): e for e in box_enumerate_sigma(ec)}
    extremal_side: dict[str, CrystalElt] = {}
    for elt in box_enumerate_img(ec):
        if is_extremal(cartan, star_full(cartan, elt), K).extremal:
            extremal_side[canonical_key(elt)] = elt
    only_sigma = sorted(set(sigma_side) - set(extremal_side))
    only_extremal = sorted(set(extremal_side) - set(sigma_side))
    return {
        "equal": not only_sigma and not only_extremal,
        "K": K,
        "support": ec.support,
        "max_coord": ec.max_coord,
        "size_sigma": len(sigma_side),
        "size_extremal": len(extremal_side),
        "only_sigma": [elt_to_json(sigma_side[k]) for k in only_sigma],
        "only_extremal": [elt_to_json(extremal_side[k]) for k in only_extremal],
    }


def _plus_img_parts(ec: EnumConfig) -> list[PlusVec]:
    """Distinct image plus-parts from the box with x_m ≤ p_m everywhere."""
    cfg = ec.cfg
    seen: dict[tuple, PlusVec] = {}
    for elt in box_enumerate_img(ec):
        part = elt.plus
        if part.entries in seen:
            continue
        if all(v <= cfg.p(k) for k, v in part.entries):
            seen[part.entries] = part
    return [seen[key] for key in sorted(seen)]


def verify_shift_equivalences(ec: EnumConfig, L: int = 10, L_max: int = 40) -> dict:
    """Check the shifted-vector membership equivalences and the γ-versus-c
    inequality equivalences on every box-drawn image plus-part with x ≤ p.

    For each part x̂ and 1 ≤ l ≤ L the vectors
        z₁ = (…, x₂, x₁, p₀, …, p_{−2l+1})   and
        z₂ = (x_{2l}−p_{2l}, …, x₁−p₁, 0, …)
    must be image members exactly when their finite inequality lists hold.
    The γ-form inequalities must imply every c-form inequality, and each
    strict γ-violation must be witnessed by some c-violation with l ≤ L_max.
    """
    cfg = ec.cfg
    cartan = cfg.cartan

    def c_(j: int) -> int:
        return c_seq(cartan, "c", j)

    def cp(j: int) -> int:
        return c_seq(cartan, "cprime", j)

    mismatches: list[dict] = []
    parts = _plus_img_parts(ec)
    checked = 0
    for part in parts:
        x = part.as_dict()
        top = part.max_index()

        for l in range(1, L + 1):
            z1 = {j: cfg.p(j - 2 * l) for j in range(1, 2 * l + 1)}
            z1.update({k + 2 * l: v for k, v in x.items()})
            direct = img_membership_plus(cartan, PlusVec.from_map(z1))
            finite = all(
                c_(j) * x.get(j - 2 * l, 0) - c_(j - 1) * x.get(j - 2 * l + 1, 0) >= 0
                for j in range(2 * l + 1, 2 * l + top + 2)
            )
            if direct != finite:
                mismatches.append(
                    {"part": dict(part.entries), "l": l, "check": "z1-membership"}
                )

            z2 = {
                j: x.get(j + 2 * l, 0) - cfg.p(j + 2 * l)
                for j in range(-2 * l + 1, 1)
            }
            direct2 = img_membership_minus(cartan, MinusVec.from_map(z2))
            finite2 = all(
                cp(-j + 1) * (x.get(j + 2 * l, 0) - cfg.p(j + 2 * l))
                - cp(-j) * (x.get(j + 2 * l - 1, 0) - cfg.p(j + 2 * l - 1))
                <= 0
                for j in range(-2 * l + 2, 0)
            )
            if direct2 != finite2:
                mismatches.append(
                    {"part": dict(part.entries), "l": l, "check": "z2-membership"}
                )
            checked += 2

        for k in range(1, top + 2):
            xk, xk1 = x.get(k, 0), x.get(k + 1, 0)
            gamma_form = cfg.gamma(k) * xk - xk1
            c_vals = [c_(k + 2 * l) * xk - c_(k + 2 * l - 1) * xk1 for l in range(1, L + 1)]
            if gamma_form.sign() >= 0:
                if any(v < 0 for v in c_vals):
                    mismatches.append(
                        {"part": dict(part.entries), "k": k, "check": "cxga1-implication"}
                    )
            else:
                found = any(
                    c_(k + 2 * l) * xk - c_(k + 2 * l - 1) * xk1 < 0
                    for l in range(1, L_max + 1)
                )
                if not found:
                    mismatches.append(
                        {
                            "part": dict(part.entries),
                            "k": k,
                            "check": "cxga1-unwitnessed",
                            "bound": L_max,
                        }
                    )

            i_k = color(k)
            dk = xk - cfg.p(k)
            dk1 = xk1 - cfg.p(k + 1)
            mix_form = cfg.gamma(k + 1) * cfg.p(k + 1) - cfg.p(k) + xk - cfg.gamma(
                k + 1
            ) * xk1
            cp_vals = [
                cp(2 * l + i_k) * dk1 - cp(2 * l + i_k - 1) * dk
                for l in range(1, L + 1)
            ]
            if mix_form.sign() >= 0:
                if any(v > 0 for v in cp_vals):
                    mismatches.append(
                        {"part": dict(part.entries), "k": k, "check": "cxga2-implication"}
                    )
            else:
                found = any(
                    cp(2 * l + i_k) * dk1 - cp(2 * l + i_k - 1) * dk > 0
                    for l in range(1, L_max + 1)
                )
                if not found:
                    mismatches.append(
                        {
                            "part": dict(part.entries),
                            "k": k,
                            "check": "cxga2-unwitnessed",
                            "bound": L_max,
                        }
                    )
            checked += 2

    return {
        "verified": not mismatches,
        "parts": len(parts),
        "checks": checked,
        "L": L,
        "L_max": L_max,
        "mismatches": mismatches,
    }


# ---------------------------------------------------------------------------
# graph export
# ---------------------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_graph(
    elements,
    edges,
    fmt: str = "json",
    out: str | None = None,
) -> str:
    """Serialize an enumeration as DOT or JSON; byte-stable across runs.

    Edges are normalized to the lowering direction; raising edges are their
    reverses and are not emitted.  DOT colors: red for color 1, blue for 2.
    """
    keys = sorted(canonical_key(e) for e in elements)
    by_key = {canonical_key(e): e for e in elements}
    if isinstance(edges, EnumerationResult):
        f_edges = edges.f_edges()
    else:
        f_edges = sorted(
            (s, i, d) if direction == "f" else (d, i, s)
            for (s, i, d, direction) in edges
        )
    if fmt == "json":
        doc = {
            "nodes": [elt_to_json(by_key[k]) for k in keys],
            "edges": [{"src": s, "i": i, "dst": d} for s, i, d in f_edges],
        }
        text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    elif fmt == "dot":
        lines = ["digraph crystal {"]
        for k in keys:
            lines.append(f'  "{_dot_escape(k)}";')
        for s, i, d in f_edges:
            colour = "red" if i == 1 else "blue"
            lines.append(
                f'  "{_dot_escape(s)}" -> "{_dot_escape(d)}" '
                f'[label="{i}", color="{colour}"];'
            )
        lines.append("}")
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"format must be 'json' or 'dot', got {fmt!r}")
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def graph_from_json(text: str) -> list[CrystalElt]:
    """Parse a JSON graph export back into its element set."""
    from .lattice import elt_from_json

    doc = json.loads(text)
    return [elt_from_json(node) for node in doc["nodes"]]
