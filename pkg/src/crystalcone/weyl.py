"""Weyl-group action on the lattice crystal and the extremality machinery.

The Weyl group is infinite dihedral; w_k is the alternating word of length
|k| ending in s₁ for k > 0 (w₁ = s₁, w₂ = s₂s₁, …) and in s₂ for k < 0
(w₋₁ = s₂, w₋₂ = s₁s₂, …).  S_{w_k} acts by f̃/ẽ powers prescribed by the
weight pairings, and an element is extremal (to truncation K) when along the
whole walk |k| ≤ K the operator pointing past the weight sign vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import CartanData, LambdaConfig, color
from .cone import sigma_membership
from .lattice import (
    CrystalElt,
    MinusVec,
    PlusVec,
    apply_e,
    apply_f,
    elt_to_json,
    eps_phi,
    minus_e,
    plus_e,
    plus_f,
    star_full,
    weight_of,
)


class WeylDomainError(ValueError):
    """S_i hit ⊘ part-way: the element is not normal-crystal at this point."""


def weyl_word(k: int) -> list[int]:
    """Reduced word of w_k, leftmost letter first.

    k = 2n ≥ 0:   (s₂s₁)ⁿ        k = 2n+1 ≥ 1: s₁(s₂s₁)ⁿ
    k = 2n ≤ 0:   (s₁s₂)⁻ⁿ       k = 2n−1 ≤ −1: s₂(s₁s₂)⁻ⁿ
    """
    if k >= 0:
        word = [2, 1] * (k // 2)
        return [1] + word if k % 2 else word
    word = [1, 2] * (-k // 2)
    return [2] + word if k % 2 else word


def weyl_S(cartan: CartanData, elt: CrystalElt, i: int) -> CrystalElt:
    """S_i b = f̃_i^n b (n ≥ 0) or ẽ_i^{−n} b (n < 0), n = ⟨wt(b), α_i^∨⟩."""
    n = weight_of(cartan, elt).pairing(i)
    op = apply_f if n >= 0 else apply_e
    cur = elt
    for _ in range(abs(n)):
        nxt = op(cartan, cur, i)
        if nxt is None:
            raise WeylDomainError(
                f"S_{i} undefined: operator vanished before {abs(n)} steps"
            )
        cur = nxt
    return cur


def weyl_Sw(cartan: CartanData, elt: CrystalElt, k: int) -> CrystalElt:
    """S_{w_k}, composing right-to-left along the reduced word of w_k."""
    cur = elt
    for i in reversed(weyl_word(k)):
        cur = weyl_S(cartan, cur, i)
    return cur


def weyl_walk(
    cartan: CartanData, elt: CrystalElt, K: int
) -> dict[int, CrystalElt]:
    """All S_{w_k} elt for |k| ≤ K, sharing prefixes along each direction.

    w_k = s_{i_k} w_{k−1} for k ≥ 1 and w_k = s_{i_{k+1}} w_{k+1} for k ≤ −1,
    so each step is a single S_i applied to the previous stop.
    """
    walk = {0: elt}
    cur = elt
    for k in range(1, K + 1):
        cur = weyl_S(cartan, cur, color(k))
        walk[k] = cur
    cur = elt
    for k in range(-1, -K - 1, -1):
        cur = weyl_S(cartan, cur, color(k + 1))
        walk[k] = cur
    return walk


def ef_max(cartan: CartanData, elt: CrystalElt, i: int, direction: str) -> CrystalElt:
    """ẽ_i^{ε_i} (direction "e") or f̃_i^{φ_i} (direction "f")."""
    eps, phi = eps_phi(cartan, elt, i)
    if direction == "e":
        op, count = apply_e, eps
    elif direction == "f":
        op, count = apply_f, phi
    else:
        raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")
    cur = elt
    for _ in range(count):
        nxt = op(cartan, cur, i)
        assert nxt is not None
        cur = nxt
    return cur


@dataclass(frozen=True)
class ExtremalityReport:
    element: CrystalElt
    K: int
    extremal: bool
    violations: tuple[dict, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "element": elt_to_json(self.element),
            "K": self.K,
            "extremal": self.extremal,
            "violations": list(self.violations),
        }


def is_extremal(cartan: CartanData, elt: CrystalElt, K: int) -> ExtremalityReport:
    """Truncated extremality check over the Weyl walk |k| ≤ K.

    At each stop b = S_{w_k} elt and each color i: ε_i(b) must vanish when
    ⟨wt(b), α_i^∨⟩ ≥ 0 and φ_i(b) must vanish when the pairing is ≤ 0.
    True means "no violation up to depth K", not unconditional extremality.
    """

    def check(b: CrystalElt, k: int) -> dict | None:
        for i in (1, 2):
            n = weight_of(cartan, b).pairing(i)
            eps, phi = eps_phi(cartan, b, i)
            if n >= 0 and eps != 0:
                return {"k": k, "i": i, "kind": "e_nonzero"}
            if n <= 0 and phi != 0:
                return {"k": k, "i": i, "kind": "f_nonzero"}
        return None

    violation = check(elt, 0)
    if violation is None:
        cur = elt
        for k in range(1, K + 1):
            cur = weyl_S(cartan, cur, color(k))
            violation = check(cur, k)
            if violation is not None:
                break
    if violation is None:
        cur = elt
        for k in range(-1, -K - 1, -1):
            cur = weyl_S(cartan, cur, color(k + 1))
            violation = check(cur, k)
            if violation is not None:
                break
    if violation is None:
        return ExtremalityReport(elt, K, True)
    return ExtremalityReport(elt, K, False, (violation,))


def sw_closed_form_check(cfg: LambdaConfig, x: CrystalElt, k: int) -> bool:
    """Check S_{w_k}(x*) against its factor-by-factor closed form.

    For x = x̂ ⊗ t_λ ⊗ (empty) in the cone, the walk of the star must equal,
    for k ≥ 0, the plus factor raised by ẽ_{i_j}^{x_j} (j = 1..k) tensored
    with the minus factor raised by ẽ_{i_j}^{p_j−x_j} from the empty vector;
    for k ≤ 0, the plus factor lowered by f̃_{i_j}^{p_j} (j = 0 down to k+1)
    with the minus factor left empty.
    """
    cartan = cfg.cartan
    if x.minus.entries:
        raise ValueError("element has a nonempty minus part")
    if x.tag != cfg.lam:
        raise ValueError(f"element tagged {x.tag}, config weight is {cfg.lam}")
    if not sigma_membership(cfg, x):
        raise ValueError("element is outside the cone")

    star = star_full(cartan, x)
    lhs = weyl_Sw(cartan, star, k)

    left = star.plus.as_dict()
    right: dict[int, int] = {}
    if k >= 0:
        for j in range(1, k + 1):
            i = color(j)
            for _ in range(x.coordinate(j)):
                stepped = plus_e(cartan, left, i)
                if stepped is None:
                    return False
                left = stepped
            for _ in range(cfg.p(j) - x.coordinate(j)):
                right = minus_e(cartan, right, i)
    else:
        for j in range(0, k, -1):
            i = color(j)
            for _ in range(cfg.p(j)):
                left = plus_f(cartan, left, i)

    rhs = CrystalElt(
        PlusVec.from_map(left), star.tag, MinusVec.from_map(right)
    )
    return lhs == rhs
