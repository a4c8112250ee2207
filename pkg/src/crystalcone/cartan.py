"""Rank-2 Cartan data, weight orbits, and the integer sequences behind the cone.

The Cartan matrix is [[2, −a₁], [−a₂, 2]] with a₁a₂ > 4, so the Weyl group is
infinite dihedral and every element is one of the alternating words w_k, k ∈ Z.
Three integer sequences drive everything downstream:

* c_j, c′_j   — the coefficients of the lattice-image inequalities,
* p_m         — the orbit trace of λ: w_kλ is (p_{k+1}, −p_k) or (−p_k, p_{k+1}).

All three satisfy the same two-step recursion x_{m} + x_{m+2} = a_{i_m} x_{m+1},
where i_m is the alternating color (1 for odd m, 2 for even m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .quadfield import QuadNum, hyperbolic_radicand, make_alpha_beta


def color(k: int) -> int:
    """The alternating index sequence: 1 at odd positions, 2 at even ones."""
    return 1 if k % 2 else 2


@dataclass(frozen=True)
class CartanData:
    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 < 1 or self.a2 < 1:
            raise ValueError("Cartan entries must be positive integers")
        if self.a1 * self.a2 <= 4:
            raise ValueError(
                f"a1·a2 must exceed 4 (hyperbolic type), got {self.a1}·{self.a2}"
            )

    @property
    def D(self) -> int:
        return hyperbolic_radicand(self.a1, self.a2)

    def a_of(self, i: int) -> int:
        return self.a1 if i == 1 else self.a2

    def a_at(self, k: int) -> int:
        """a_{i_k}: a₁ at odd lattice positions, a₂ at even ones."""
        return self.a1 if k % 2 else self.a2

    def pairing_alpha(self, j: int, i: int) -> int:
        """⟨α_j, α_i^∨⟩, an entry of the Cartan matrix."""
        if i == j:
            return 2
        return -self.a1 if i == 1 else -self.a2

    def alpha_weight(self, i: int) -> Weight:
        """The simple root α_i in fundamental-weight coordinates."""
        return Weight(2, -self.a2) if i == 1 else Weight(-self.a1, 2)


@dataclass(frozen=True)
class Weight:
    """Integral weight m₁Λ₁ + m₂Λ₂."""

    m1: int
    m2: int

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> Weight:
        return Weight(-self.m1, -self.m2)

    def scaled(self, n: int) -> Weight:
        return Weight(n * self.m1, n * self.m2)

    def pairing(self, i: int) -> int:
        """⟨·, α_i^∨⟩ — just the i-th coordinate."""
        return self.m1 if i == 1 else self.m2

    def is_dominant(self) -> bool:
        return self.m1 >= 0 and self.m2 >= 0

    def is_antidominant(self) -> bool:
        return self.m1 <= 0 and self.m2 <= 0

    def reflect(self, cartan: CartanData, i: int) -> Weight:
        """Simple reflection s_i: μ ↦ μ − ⟨μ, α_i^∨⟩α_i."""
        n = self.pairing(i)
        a = cartan.alpha_weight(i)
        return Weight(self.m1 - n * a.m1, self.m2 - n * a.m2)

    def to_json(self) -> list[int]:
        return [self.m1, self.m2]

    @classmethod
    def from_json(cls, data: list[int]) -> Weight:
        if len(data) != 2:
            raise ValueError(f"weight JSON must be a 2-element array, got {data!r}")
        return cls(int(data[0]), int(data[1]))


@lru_cache(maxsize=None)
def c_seq(cartan: CartanData, kind: str, j: int) -> int:
    """c_j (kind="c") or c′_j (kind="cprime"): 0, 1, then x_{j+2} = a·x_{j+1} − x_j.

    For c the multiplier alternates a₁ (step from even j), a₂ (from odd j);
    c′ swaps the two.  Both are strictly positive from j = 1 on.
    """
    if kind not in ("c", "cprime"):
        raise ValueError(f"kind must be 'c' or 'cprime', got {kind!r}")
    if j < 0:
        raise ValueError("c-sequences are indexed by j ≥ 0")
    if j == 0:
        return 0
    if j == 1:
        return 1
    step_even, step_odd = (
        (cartan.a1, cartan.a2) if kind == "c" else (cartan.a2, cartan.a1)
    )
    mult = step_even if (j - 2) % 2 == 0 else step_odd
    return mult * c_seq(cartan, kind, j - 1) - c_seq(cartan, kind, j - 2)


@lru_cache(maxsize=None)
def p_seq(cartan: CartanData, mu: Weight, m: int) -> int:
    """The orbit-trace sequence of μ = kΛ₁ − lΛ₂: p₀ = l, p₁ = k, extended both
    ways by p_m + p_{m+2} = a_{i_m} p_{m+1}.  Defined for arbitrary integral μ
    and may go nonpositive; the classification watches for exactly that.
    """
    if m == 0:
        return -mu.m2
    if m == 1:
        return mu.m1
    if m > 1:
        return cartan.a_at(m - 2) * p_seq(cartan, mu, m - 1) - p_seq(cartan, mu, m - 2)
    return cartan.a_at(m) * p_seq(cartan, mu, m + 1) - p_seq(cartan, mu, m + 2)


def weyl_translate(cartan: CartanData, mu: Weight, k: int) -> Weight:
    """w_kμ read off the p-sequence: (p_{k+1}, −p_k) for even k, (−p_k, p_{k+1}) for odd."""
    pk = p_seq(cartan, mu, k)
    pk1 = p_seq(cartan, mu, k + 1)
    if k % 2 == 0:
        return Weight(pk1, -pk)
    return Weight(-pk, pk1)


def validate_lambda_form(cartan: CartanData, k1: int, k2: int) -> str | None:
    """Normal-form test for λ = k₁Λ₁ − k₂Λ₂; returns a form tag or None (reject).

    a₁, a₂ ≥ 2:  form-i  when k₂ ≤ k₁ < (a₁−1)k₂,
                 form-ii when k₁ < k₂ ≤ (a₂−1)k₁;
    a₁ = 1:      2k₁ ≤ k₂ ≤ (a₂−2)k₁;
    a₂ = 1:      2k₂ ≤ k₁ ≤ (a₁−2)k₂.
    """
    if k1 <= 0 or k2 <= 0:
        return None
    if cartan.a1 == 1:
        return "form-a1" if 2 * k1 <= k2 <= (cartan.a2 - 2) * k1 else None
    if cartan.a2 == 1:
        return "form-a2" if 2 * k2 <= k1 <= (cartan.a1 - 2) * k2 else None
    if k2 <= k1 < (cartan.a1 - 1) * k2:
        return "form-i"
    if k1 < k2 <= (cartan.a2 - 1) * k1:
        return "form-ii"
    return None


@dataclass(frozen=True)
class OrbitVerdict:
    """Outcome of the orbit classification.

    satisfies_condition is True when Wμ meets neither the dominant nor the
    antidominant cone; then representative is an orbit element in normal form.
    Otherwise witness = (k, w_kμ) exhibits a dominant or antidominant translate.
    """

    satisfies_condition: bool
    representative: Weight | None
    witness: tuple[int, Weight] | None

    def to_json(self) -> dict:
        return {
            "satisfies_condition": self.satisfies_condition,
            "representative": (
                None if self.representative is None else self.representative.to_json()
            ),
            "witness": (
                None
                if self.witness is None
                else {"k": self.witness[0], "weight": self.witness[1].to_json()}
            ),
        }


_SCAN_CAP = 400


def _growth_locked(q: dict[int, int], m: int, step: int) -> bool:
    # Once both parity subsequences are positive and weakly growing away from
    # the valley they stay so: q_{m+2s} − q_m = (a₁a₂−3)(q_m − q_{m−2s}) +
    # (a₁a₂−4)q_{m−2s} with a₁a₂ > 4 keeps the pattern by induction.
    return (
        q[m] > 0
        and q[m + step] > 0
        and q[m + 2 * step] >= q[m]
        and q[m + 3 * step] >= q[m + step]
    )


def classify_orbit(cartan: CartanData, mu: Weight) -> OrbitVerdict:
    """Decide whether Wμ avoids both ±dominant cones, by scanning p^μ both ways.

    A zero or sign change between consecutive p-values pins a dominant or
    antidominant translate (the witness).  If both directions lock into
    positive growth the orbit avoids the cones; the normal-form representative
    is then hunted among the valley translates, smallest p-value first.
    """
    if mu.m1 == 0 and mu.m2 == 0:
        return OrbitVerdict(False, None, (0, mu))

    p = {0: p_seq(cartan, mu, 0), 1: p_seq(cartan, mu, 1)}

    def extend(m: int) -> int:
        if m not in p:
            p[m] = p_seq(cartan, mu, m)
        return p[m]

    def witness_at(k: int) -> OrbitVerdict:
        return OrbitVerdict(False, None, (k, weyl_translate(cartan, mu, k)))

    # Forward: check consecutive pairs (p_m, p_{m+1}) for m = 0, 1, 2, …
    s = 0
    hi = 0
    for m in range(_SCAN_CAP):
        a, b = extend(m), extend(m + 1)
        if a == 0 or b == 0 or (a > 0) != (b > 0):
            return witness_at(m)
        if s == 0:
            s = 1 if a > 0 else -1
        extend(m + 2), extend(m + 3)
        q = {j: s * p[j] for j in range(m, m + 4)}
        if _growth_locked(q, m, 1):
            hi = m + 3
            break
    else:
        raise RuntimeError("orbit scan did not stabilize (forward)")

    lo = 0
    for m in range(0, -_SCAN_CAP, -1):
        a, b = extend(m - 1), extend(m)
        if a == 0 or b == 0 or (a > 0) != (b > 0):
            return witness_at(m - 1)
        extend(m - 2), extend(m - 3)
        q = {j: s * p[j] for j in range(m - 3, m + 1)}
        if _growth_locked(q, m, -1):
            lo = m - 3
            break
    else:
        raise RuntimeError("orbit scan did not stabilize (backward)")

    # Representative: translates landing in the (+, −) quadrant sit at even
    # Weyl indices when the p's are positive and at odd ones when negative.
    # Rank by the p-value at the pair's even index, then by closeness to 0.
    if s > 0:
        candidates = [k for k in range(lo, hi + 1) if k % 2 == 0]
        rank = {k: (s * extend(k), abs(k), k) for k in candidates}
    else:
        candidates = [k for k in range(lo, hi + 1) if k % 2 != 0]
        rank = {k: (s * extend(k + 1), abs(k), k) for k in candidates}
    for k in sorted(candidates, key=rank.__getitem__):
        cand = weyl_translate(cartan, mu, k)
        if validate_lambda_form(cartan, cand.m1, -cand.m2) is not None:
            return OrbitVerdict(True, cand, None)
    raise RuntimeError(
        f"orbit of {mu} avoids the dominant cones but no normal form was found "
        f"in the scanned window [{lo}, {hi}]"
    )


class LambdaConfig:
    """λ = k₁Λ₁ − k₂Λ₂ together with every derived sequence the cone needs.

    Accepts any λ whose Weyl orbit avoids both ±dominant cones; λ itself need
    not be in normal form (the orbit representative is, and `form` records
    which case applied, or "orbit" when λ sits elsewhere in a valid orbit).
    """

    def __init__(
        self, cartan: CartanData, k1: int, k2: int, positivity_bound: int = 60
    ) -> None:
        if k1 <= 0 or k2 <= 0:
            raise ValueError("k1 and k2 must be positive")
        self.cartan = cartan
        self.k1 = k1
        self.k2 = k2
        self.lam = Weight(k1, -k2)
        form = validate_lambda_form(cartan, k1, k2)
        if form is None:
            verdict = classify_orbit(cartan, self.lam)
            if not verdict.satisfies_condition:
                k, w = verdict.witness  # type: ignore[misc]
                raise ValueError(
                    f"orbit of {k1}Λ1-{k2}Λ2 meets a dominant/antidominant "
                    f"weight: w_{k}·λ = {w.m1}Λ1{w.m2:+d}Λ2"
                )
            form = "orbit"
        self.form = form
        self.alpha, self.beta = make_alpha_beta(cartan.a1, cartan.a2)
        self._positivity_bound = 0
        self._ensure_positive(positivity_bound)
        if (self.alpha * self.p(0) - self.p(1)).sign() < 0:
            raise ValueError("γ₀p₀ − p₁ < 0: base cone inequality fails at λ")
        self._tail_bound = 0

    @property
    def D(self) -> int:
        return self.cartan.D

    def gamma(self, k: int) -> QuadNum:
        """γ_k: α at even k, β at odd k (period two)."""
        return self.alpha if k % 2 == 0 else self.beta

    def _ensure_positive(self, bound: int) -> None:
        if bound <= self._positivity_bound:
            return
        for m in range(-bound, bound + 1):
            if p_seq(self.cartan, self.lam, m) <= 0:
                raise ValueError(f"p_{m} ≤ 0: orbit of λ meets a dominant cone")
        self._positivity_bound = bound

    def p(self, m: int) -> int:
        if abs(m) > self._positivity_bound:
            self._ensure_positive(abs(m) + 8)
        return p_seq(self.cartan, self.lam, m)

    def c(self, j: int) -> int:
        return c_seq(self.cartan, "c", j)

    def cprime(self, j: int) -> int:
        return c_seq(self.cartan, "cprime", j)

    def qnum(self, n: int) -> QuadNum:
        return QuadNum.from_int(n, self.D)

    def tail_constant_plus(self, k: int) -> QuadNum:
        """γ_{k+1}p_{k+1} − p_k, the constant of the mixed generator at k ≥ 1."""
        return self.gamma(k + 1) * self.p(k + 1) - self.p(k)

    def tail_constant_minus(self, k: int) -> QuadNum:
        """γ_{k−1}p_{k−1} − p_k, the constant of the mixed generator at k ≤ 0."""
        return self.gamma(k - 1) * self.p(k - 1) - self.p(k)

    def ensure_tail_nonneg(self, bound: int) -> None:
        """Verify the mixed-generator constants are positive out to ±bound.

        Membership queries must never consult an unverified tail; callers
        extend the verified range before touching indices beyond it.
        """
        if bound <= self._tail_bound:
            return
        if self._tail_bound == 0 and self.tail_constant_minus(0).sign() <= 0:
            raise ArithmeticError("tail constant γ_{-1}p_{-1} − p_0 ≤ 0")
        for k in range(self._tail_bound + 1, bound + 1):
            if self.tail_constant_plus(k).sign() <= 0:
                raise ArithmeticError(f"tail constant γ_{k+1}p_{k+1} − p_{k} ≤ 0")
            if self.tail_constant_minus(-k).sign() <= 0:
                raise ArithmeticError(f"tail constant γ_{-k-1}p_{-k-1} − p_{-k} ≤ 0")
        self._tail_bound = bound

    @property
    def tail_verified_bound(self) -> int:
        return self._tail_bound

    def to_json(self) -> dict:
        return {
            "a1": self.cartan.a1,
            "a2": self.cartan.a2,
            "k1": self.k1,
            "k2": self.k2,
        }

    @classmethod
    def from_json(cls, data: dict) -> LambdaConfig:
        return cls(
            CartanData(int(data["a1"]), int(data["a2"])),
            int(data["k1"]),
            int(data["k2"]),
        )

    def __repr__(self) -> str:
        return (
            f"LambdaConfig(a1={self.cartan.a1}, a2={self.cartan.a2}, "
            f"k1={self.k1}, k2={self.k2}, form={self.form!r})"
        )
