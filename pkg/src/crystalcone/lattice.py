"""The semi-infinite lattice crystal: coordinates, operators, images, stars.

Elements are triples  (…, x₂, x₁) ⊗ t_μ ⊗ (x₀, x₋₁, …)  with finitely many
nonzero coordinates, x_k ≥ 0 on the plus side (k ≥ 1) and x_k ≤ 0 on the minus
side (k ≤ 0).  The color of position k is i_k = 1 (k odd) / 2 (k even).

The raising/lowering operators act at the extremal positions of the local
energies σ_k; all σ-scans run over a finite window two indices past the
support on each end, where σ is constant (0 towards +∞, −⟨wt, α_i^∨⟩ towards
−∞), so maxima and argmax boundaries are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanData, Weight, c_seq, color


class LatticeError(ValueError):
    """A crystal operator tried to leave the semi-infinite lattice.

    Only reachable on elements outside the embedded image; operators are
    closed on image elements.
    """


class ImageMembershipError(ValueError):
    """A star operation was applied to a part outside its embedded image."""


@dataclass(frozen=True)
class PlusVec:
    """Finite-support plus part: entries (k, x_k) with k ≥ 1, x_k ≥ 1, k descending."""

    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, data: dict[int, int]) -> PlusVec:
        items = []
        for k, v in data.items():
            if v == 0:
                continue
            if k < 1:
                raise ValueError(f"plus-part index must be ≥ 1, got {k}")
            if v < 0:
                raise ValueError(f"plus-part value must be ≥ 0, got x_{k} = {v}")
            items.append((k, v))
        return cls(tuple(sorted(items, reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def max_index(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True)
class MinusVec:
    """Finite-support minus part: entries (k, x_k) with k ≤ 0, x_k ≤ −1, k descending."""

    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, data: dict[int, int]) -> MinusVec:
        items = []
        for k, v in data.items():
            if v == 0:
                continue
            if k > 0:
                raise ValueError(f"minus-part index must be ≤ 0, got {k}")
            if v > 0:
                raise ValueError(f"minus-part value must be ≤ 0, got x_{k} = {v}")
            items.append((k, v))
        return cls(tuple(sorted(items, reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def min_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True)
class CrystalElt:
    plus: PlusVec
    tag: Weight
    minus: MinusVec

    def coordinate(self, k: int) -> int:
        source = self.plus.entries if k >= 1 else self.minus.entries
        for idx, val in source:
            if idx == k:
                return val
        return 0


def make_elt(
    plus: dict[int, int] | None, tag: Weight, minus: dict[int, int] | None = None
) -> CrystalElt:
    return CrystalElt(
        PlusVec.from_map(plus or {}), tag, MinusVec.from_map(minus or {})
    )


def z_lambda(tag: Weight) -> CrystalElt:
    """The vacuum element: both parts empty, weight = tag."""
    return CrystalElt(PlusVec(), tag, MinusVec())


def part_weight(cartan: CartanData, entries: tuple[tuple[int, int], ...]) -> Weight:
    """−Σ x_j α_{i_j} over the given entries (α₁ = (2, −a₂), α₂ = (−a₁, 2))."""
    m1 = m2 = 0
    a1, a2 = cartan.a1, cartan.a2
    for k, v in entries:
        if k % 2:  # color 1
            m1 -= 2 * v
            m2 += a2 * v
        else:
            m1 += a1 * v
            m2 -= 2 * v
    return Weight(m1, m2)


@lru_cache(maxsize=1 << 15)
def weight_of(cartan: CartanData, elt: CrystalElt) -> Weight:
    """wt = tag − Σ x_j α_{i_j} over both parts."""
    m1, m2 = elt.tag.m1, elt.tag.m2
    a1, a2 = cartan.a1, cartan.a2
    for entries in (elt.plus.entries, elt.minus.entries):
        for k, v in entries:
            if k % 2:
                m1 -= 2 * v
                m2 += a2 * v
            else:
                m1 += a1 * v
                m2 -= 2 * v
    return Weight(m1, m2)


def sigma_k(cartan: CartanData, elt: CrystalElt, k: int) -> int:
    """Local energy at position k, straight from the defining sums.

    k ≥ 1:  x_k + Σ_{j>k} ⟨α_{i_j}, α_{i_k}^∨⟩ x_j        (plus support only)
    k ≤ 0:  −x_k − Σ_{j<k} ⟨α_{i_j}, α_{i_k}^∨⟩ x_j − ⟨wt, α_{i_k}^∨⟩
    """
    i_k = color(k)
    if k >= 1:
        total = elt.coordinate(k)
        for j, v in elt.plus.entries:
            if j > k:
                total += cartan.pairing_alpha(color(j), i_k) * v
        return total
    total = -elt.coordinate(k)
    for j, v in elt.minus.entries:
        if j < k:
            total -= cartan.pairing_alpha(color(j), i_k) * v
    return total - weight_of(cartan, elt).pairing(i_k)


@lru_cache(maxsize=1 << 15)
def _sigma_window(
    cartan: CartanData, elt: CrystalElt
) -> tuple[int, int, dict[int, int]]:
    """σ_k for every k in [lo, hi], two indices past the support on each end."""
    hi = max(elt.plus.max_index(), 0) + 2
    lo = min(elt.minus.min_index(), 0) - 2
    sig: dict[int, int] = {}
    a1, a2 = cartan.a1, cartan.a2

    # plus side, walking down with suffix accumulators per parity
    # acc[k % 2] = Σ x_j over plus entries with j > k, j ≡ k (mod 2)
    odd = even = 0
    pget = elt.plus.as_dict().get
    for k in range(hi, 0, -1):
        x = pget(k, 0)
        if k % 2:
            sig[k] = x + 2 * odd - a1 * even
            odd += x
        else:
            sig[k] = x + 2 * even - a2 * odd
            even += x

    # minus side, walking up with prefix accumulators per parity
    wt = weight_of(cartan, elt)
    w1, w2 = wt.m1, wt.m2
    odd = even = 0
    mget = elt.minus.as_dict().get
    for k in range(lo, 1):
        x = mget(k, 0)
        if k % 2:
            sig[k] = -x - 2 * odd + a1 * even - w1
            odd += x
        else:
            sig[k] = -x - 2 * even + a2 * odd - w2
            even += x

    return lo, hi, sig


def eps_phi(cartan: CartanData, elt: CrystalElt, i: int) -> tuple[int, int]:
    """(ε_i, φ_i): ε_i = max σ over color-i positions, φ_i = ε_i + ⟨wt, α_i^∨⟩."""
    lo, hi, sig = _sigma_window(cartan, elt)
    eps = max(sig[k] for k in range(_first_of_color(lo, i), hi + 1, 2))
    return eps, eps + weight_of(cartan, elt).pairing(i)


def _set_entry(
    entries: tuple[tuple[int, int], ...], k: int, val: int
) -> tuple[tuple[int, int], ...]:
    """Replace/insert/delete (k, val) keeping the descending sort."""
    out = []
    placed = False
    for idx, v in entries:
        if idx == k:
            if val != 0:
                out.append((k, val))
            placed = True
        else:
            if not placed and idx < k:
                if val != 0:
                    out.append((k, val))
                placed = True
            out.append((idx, v))
    if not placed and val != 0:
        out.append((k, val))
    return tuple(out)


def _rebuild(elt: CrystalElt, k: int, new_val: int) -> CrystalElt:
    if k >= 1:
        if new_val < 0:
            raise LatticeError(
                f"operator drove plus coordinate x_{k} below 0 "
                "(element lies outside the embedded image)"
            )
        return CrystalElt(
            PlusVec(_set_entry(elt.plus.entries, k, new_val)), elt.tag, elt.minus
        )
    if new_val > 0:
        raise LatticeError(
            f"operator drove minus coordinate x_{k} above 0 "
            "(element lies outside the embedded image)"
        )
    return CrystalElt(
        elt.plus, elt.tag, MinusVec(_set_entry(elt.minus.entries, k, new_val))
    )


def _first_of_color(k: int, i: int) -> int:
    """Smallest index ≥ k of color i (colors alternate, so at most k + 1)."""
    return k if color(k) == i else k + 1


def apply_f(cartan: CartanData, elt: CrystalElt, i: int) -> CrystalElt | None:
    """Lowering operator: adds 1 at the smallest argmax position of color i."""
    lo, hi, sig = _sigma_window(cartan, elt)
    eps = k0 = None
    for k in range(_first_of_color(lo, i), hi + 1, 2):
        v = sig[k]
        if eps is None or v > eps:  # strict: keeps the smallest argmax index
            eps, k0 = v, k
    if eps + weight_of(cartan, elt).pairing(i) == 0:
        return None
    return _rebuild(elt, k0, elt.coordinate(k0) + 1)


def apply_e(cartan: CartanData, elt: CrystalElt, i: int) -> CrystalElt | None:
    """Raising operator: subtracts 1 at the largest argmax position of color i."""
    lo, hi, sig = _sigma_window(cartan, elt)
    eps = k0 = None
    for k in range(_first_of_color(lo, i), hi + 1, 2):
        v = sig[k]
        if eps is None or v >= eps:  # weak: keeps the largest argmax index
            eps, k0 = v, k
    if eps == 0:
        return None
    return _rebuild(elt, k0, elt.coordinate(k0) - 1)


# ---------------------------------------------------------------------------
# image membership (the lattice-side inequalities)
# ---------------------------------------------------------------------------


def img_membership_plus(cartan: CartanData, part: PlusVec) -> bool:
    """c_j x_j − c_{j−1} x_{j+1} ≥ 0 for all j ≥ 1 (trivial beyond the support)."""
    d = part.as_dict()
    for j in range(1, part.max_index() + 1):
        lhs = c_seq(cartan, "c", j) * d.get(j, 0) - c_seq(cartan, "c", j - 1) * d.get(
            j + 1, 0
        )
        if lhs < 0:
            return False
    return True


def img_membership_minus(cartan: CartanData, part: MinusVec) -> bool:
    """c′_{−j+1} x_j − c′_{−j} x_{j−1} ≤ 0 for all j ≤ 0 (trivial below the support)."""
    d = part.as_dict()
    for j in range(part.min_index(), 1):
        lhs = c_seq(cartan, "cprime", -j + 1) * d.get(j, 0) - c_seq(
            cartan, "cprime", -j
        ) * d.get(j - 1, 0)
        if lhs > 0:
            return False
    return True


def img_membership(cartan: CartanData, part: PlusVec | MinusVec) -> bool:
    if isinstance(part, PlusVec):
        return img_membership_plus(cartan, part)
    return img_membership_minus(cartan, part)


def img_membership_elt(cartan: CartanData, elt: CrystalElt) -> bool:
    return img_membership_plus(cartan, elt.plus) and img_membership_minus(
        cartan, elt.minus
    )


# ---------------------------------------------------------------------------
# single-lattice operators (plus side alone / minus side alone)
# ---------------------------------------------------------------------------


def _plus_sigmas(cartan: CartanData, d: dict[int, int]) -> dict[int, int]:
    hi = max(d, default=0) + 2
    sig: dict[int, int] = {}
    acc = [0, 0]
    for k in range(hi, 0, -1):
        par = k % 2
        sig[k] = d.get(k, 0) + 2 * acc[par] - cartan.a_at(k) * acc[1 - par]
        acc[par] += d.get(k, 0)
    return sig


def _minus_sigmas(cartan: CartanData, d: dict[int, int]) -> dict[int, int]:
    lo = min(d, default=0) - 2
    sig: dict[int, int] = {}
    acc = [0, 0]
    for k in range(lo, 1):
        par = k % 2
        sig[k] = -d.get(k, 0) - 2 * acc[par] + cartan.a_at(k) * acc[1 - par]
        acc[par] += d.get(k, 0)
    return sig


def plus_eps(cartan: CartanData, d: dict[int, int], i: int) -> int:
    """ε_i of a plus part on its own lattice (the maximal plus-side σ)."""
    sig = _plus_sigmas(cartan, d)
    return max(v for k, v in sig.items() if color(k) == i)


def minus_phi(cartan: CartanData, d: dict[int, int], i: int) -> int:
    """φ_i of a minus part on its own lattice (the maximal minus-side σ)."""
    sig = _minus_sigmas(cartan, d)
    return max(v for k, v in sig.items() if color(k) == i)


def plus_f(cartan: CartanData, d: dict[int, int], i: int) -> dict[int, int]:
    """Lowering on the plus lattice alone (total)."""
    sig = _plus_sigmas(cartan, d)
    best = max(v for k, v in sig.items() if color(k) == i)
    k0 = min(k for k, v in sig.items() if color(k) == i and v == best)
    out = dict(d)
    out[k0] = out.get(k0, 0) + 1
    return out


def plus_e(cartan: CartanData, d: dict[int, int], i: int) -> dict[int, int] | None:
    """Raising on the plus lattice alone (None when ε_i = 0)."""
    sig = _plus_sigmas(cartan, d)
    best = max(v for k, v in sig.items() if color(k) == i)
    if best == 0:
        return None
    k0 = max(k for k, v in sig.items() if color(k) == i and v == best)
    out = dict(d)
    new = out.get(k0, 0) - 1
    if new < 0:
        raise LatticeError(f"plus-lattice raise at empty position {k0}")
    if new == 0:
        del out[k0]
    else:
        out[k0] = new
    return out


def minus_e(cartan: CartanData, d: dict[int, int], i: int) -> dict[int, int]:
    """Raising on the minus lattice alone (total)."""
    sig = _minus_sigmas(cartan, d)
    best = max(v for k, v in sig.items() if color(k) == i)
    k0 = max(k for k, v in sig.items() if color(k) == i and v == best)
    out = dict(d)
    out[k0] = out.get(k0, 0) - 1
    return out


def minus_f(cartan: CartanData, d: dict[int, int], i: int) -> dict[int, int] | None:
    """Lowering on the minus lattice alone (None when σ-max is 0)."""
    sig = _minus_sigmas(cartan, d)
    best = max(v for k, v in sig.items() if color(k) == i)
    if best == 0:
        return None
    k0 = min(k for k, v in sig.items() if color(k) == i and v == best)
    out = dict(d)
    new = out.get(k0, 0) + 1
    if new > 0:
        raise LatticeError(f"minus-lattice lower at empty position {k0}")
    if new == 0:
        del out[k0]
    else:
        out[k0] = new
    return out


# ---------------------------------------------------------------------------
# star operations
# ---------------------------------------------------------------------------


def star_plus(cartan: CartanData, part: PlusVec) -> PlusVec:
    """x̂* = f̃_{i₁}^{x₁} f̃_{i₂}^{x₂} ⋯ applied to the empty plus vector.

    Highest index first, as the product reads right to left.  Involutive on
    image elements; requires image membership.
    """
    if not img_membership_plus(cartan, part):
        raise ImageMembershipError("plus part is outside the embedded image")
    out: dict[int, int] = {}
    for k, v in part.entries:  # entries are sorted descending
        i = color(k)
        for _ in range(v):
            out = plus_f(cartan, out, i)
    return PlusVec.from_map(out)


def star_minus(cartan: CartanData, part: MinusVec) -> MinusVec:
    """x̂* = ẽ_{i₀}^{−x₀} ẽ_{i₋₁}^{−x₋₁} ⋯ applied to the empty minus vector."""
    if not img_membership_minus(cartan, part):
        raise ImageMembershipError("minus part is outside the embedded image")
    out: dict[int, int] = {}
    for k, v in reversed(part.entries):  # lowest index first
        i = color(k)
        for _ in range(-v):
            out = minus_e(cartan, out, i)
    return MinusVec.from_map(out)


def star_full(cartan: CartanData, elt: CrystalElt) -> CrystalElt:
    """Star of the triple: parts starred, tag = −μ − wt(plus) − wt(minus).

    The result always has total weight −μ.
    """
    new_tag = (
        -elt.tag
        - part_weight(cartan, elt.plus.entries)
        - part_weight(cartan, elt.minus.entries)
    )
    return CrystalElt(
        star_plus(cartan, elt.plus), new_tag, star_minus(cartan, elt.minus)
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _entries_to_json(entries: tuple[tuple[int, int], ...]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(entries)}


def elt_to_json(elt: CrystalElt) -> dict:
    return {
        "plus": _entries_to_json(elt.plus.entries),
        "tag": elt.tag.to_json(),
        "minus": _entries_to_json(elt.minus.entries),
    }


def elt_from_json(data: dict) -> CrystalElt:
    return make_elt(
        {int(k): int(v) for k, v in data.get("plus", {}).items()},
        Weight.from_json(data["tag"]),
        {int(k): int(v) for k, v in data.get("minus", {}).items()},
    )


def canonical_key(elt: CrystalElt) -> str:
    """Byte-stable serialization used as node id and sort key."""
    return json.dumps(elt_to_json(elt), separators=(",", ":"))
