"""Affine functions over Q(√D), the cone generators, and the descent operators.

The cone is cut out by an infinite family of affine functions in the lattice
coordinates ζ_k, organized in eight families (two base functions at the seam,
three per side indexed by k).  Membership touches only the finitely many
generators whose support meets the element's, plus positivity of the mixed
generators' constants out to a verified tail bound.

The descent operator S̄_k rewrites a generator by a multiple of the
three-term function β̄_k (whose value is σ_k − σ_{k+2}); every generator
descends to a nonnegative combination of coordinates and generators, which is
exactly what makes the cone closed under the crystal operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import LambdaConfig, color
from .lattice import CrystalElt
from .quadfield import QuadNum

FAMILIES = (
    "base-0",
    "base-1",
    "plus-p",
    "plus-gamma",
    "plus-mix",
    "minus-p",
    "minus-gamma",
    "minus-mix",
)

_PLUS_FAMILIES = ("plus-p", "plus-gamma", "plus-mix")
_MINUS_FAMILIES = ("minus-p", "minus-gamma", "minus-mix")


@dataclass(frozen=True)
class LinFunc:
    """Affine function const + Σ coeffs[k]·ζ_k with Q(√D) coefficients."""

    const: QuadNum
    coeffs: tuple[tuple[int, QuadNum], ...]  # ascending index, zero coeffs dropped

    @classmethod
    def build(cls, const: QuadNum, coeffs: dict[int, QuadNum]) -> LinFunc:
        items = tuple(
            (k, c) for k, c in sorted(coeffs.items()) if c.sign() != 0
        )
        return cls(const, items)

    def coeff(self, k: int) -> QuadNum:
        for idx, c in self.coeffs:
            if idx == k:
                return c
        return QuadNum.from_int(0, self.const.D)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.coeffs)

    def evaluate(self, elt: CrystalElt) -> QuadNum:
        total = self.const
        for k, c in self.coeffs:
            x = elt.coordinate(k)
            if x:
                total = total + c * x
        return total

    def evaluate_map(self, coords: dict[int, int]) -> QuadNum:
        """Evaluation on a raw coordinate map; absent indices count as zero."""
        total = self.const
        for k, c in self.coeffs:
            x = coords.get(k, 0)
            if x:
                total = total + c * x
        return total

    def __add__(self, other: LinFunc) -> LinFunc:
        merged = dict(self.coeffs)
        for k, c in other.coeffs:
            merged[k] = merged[k] + c if k in merged else c
        return LinFunc.build(self.const + other.const, merged)

    def __sub__(self, other: LinFunc) -> LinFunc:
        return self + other.scale(QuadNum.from_int(-1, self.const.D))

    def scale(self, factor: QuadNum) -> LinFunc:
        return LinFunc.build(
            self.const * factor, {k: c * factor for k, c in self.coeffs}
        )

    def to_json(self) -> dict:
        return {
            "const": str(self.const),
            "coeffs": {str(k): str(c) for k, c in self.coeffs},
        }


def zeta_atom(cfg: LambdaConfig, j: int, sign: int) -> LinFunc:
    """±ζ_j as a LinFunc (the coordinate rays of the descent cone)."""
    return LinFunc.build(cfg.qnum(0), {j: cfg.qnum(sign)})


@lru_cache(maxsize=None)
def xi_generator(cfg: LambdaConfig, family: str, k: int = 0) -> LinFunc:
    """The cone generator of the given family at index k.

    base-0:      γ₀p₀ + γ₀ζ₀ − ζ₁
    base-1:      γ₁p₁ + ζ₀ − γ₁ζ₁
    plus-p:      p_k − ζ_k                                   (k ≥ 1)
    plus-gamma:  γ_k ζ_k − ζ_{k+1}                           (k ≥ 1)
    plus-mix:    γ_{k+1}p_{k+1} − p_k + ζ_k − γ_{k+1}ζ_{k+1} (k ≥ 1)
    minus-p:     p_k + ζ_k                                   (k ≤ 0)
    minus-gamma: ζ_{k−1} − γ_k ζ_k                           (k ≤ 0)
    minus-mix:   γ_{k−1}p_{k−1} − p_k + γ_{k−1}ζ_{k−1} − ζ_k (k ≤ 0)
    """
    one = cfg.qnum(1)
    if family == "base-0":
        g0 = cfg.gamma(0)
        return LinFunc.build(g0 * cfg.p(0), {0: g0, 1: -one})
    if family == "base-1":
        g1 = cfg.gamma(1)
        return LinFunc.build(g1 * cfg.p(1), {0: one, 1: -g1})
    if family in _PLUS_FAMILIES:
        if k < 1:
            raise ValueError(f"{family} requires k ≥ 1, got {k}")
        if family == "plus-p":
            return LinFunc.build(cfg.qnum(cfg.p(k)), {k: -one})
        if family == "plus-gamma":
            return LinFunc.build(cfg.qnum(0), {k: cfg.gamma(k), k + 1: -one})
        g = cfg.gamma(k + 1)
        return LinFunc.build(g * cfg.p(k + 1) - cfg.p(k), {k: one, k + 1: -g})
    if family in _MINUS_FAMILIES:
        if k > 0:
            raise ValueError(f"{family} requires k ≤ 0, got {k}")
        if family == "minus-p":
            return LinFunc.build(cfg.qnum(cfg.p(k)), {k: one})
        if family == "minus-gamma":
            return LinFunc.build(cfg.qnum(0), {k - 1: one, k: -cfg.gamma(k)})
        g = cfg.gamma(k - 1)
        return LinFunc.build(g * cfg.p(k - 1) - cfg.p(k), {k - 1: g, k: -one})
    raise ValueError(f"unknown generator family {family!r}")


def touched_generators(cfg: LambdaConfig, elt: CrystalElt) -> list[LinFunc]:
    """Every generator that could evaluate negatively on elt.

    Generators whose ζ-support misses the element reduce to their constants:
    p_k > 0 for the p families, 0 for the γ families, and the mixed-family
    tail constants, which are sign-checked once per config out past the
    support (guarded by the config's verified-tail counter).
    """
    s_plus = elt.plus.max_index()
    s_minus = elt.minus.min_index()
    cfg.ensure_tail_nonneg(40 + max(s_plus, -s_minus))
    gens = [xi_generator(cfg, "base-0"), xi_generator(cfg, "base-1")]
    for k in range(1, s_plus + 1):
        for fam in _PLUS_FAMILIES:
            gens.append(xi_generator(cfg, fam, k))
    for k in range(s_minus, 1):
        for fam in _MINUS_FAMILIES:
            gens.append(xi_generator(cfg, fam, k))
    return gens


def sigma_membership(cfg: LambdaConfig, elt: CrystalElt) -> bool:
    """True iff every cone generator is ≥ 0 on elt."""
    if elt.tag != cfg.lam:
        raise ValueError(f"element tagged {elt.tag}, config weight is {cfg.lam}")
    return all(g.evaluate(elt).sign() >= 0 for g in touched_generators(cfg, elt))


def first_violated_generator(
    cfg: LambdaConfig, elt: CrystalElt
) -> LinFunc | None:
    for g in touched_generators(cfg, elt):
        if g.evaluate(elt).sign() < 0:
            return g
    return None


def beta_bar(cfg: LambdaConfig, k: int) -> LinFunc:
    """ζ_k − a_{i_k}ζ_{k+1} + ζ_{k+2}, shifted by −⟨λ, α_{i_k}^∨⟩ at the seam
    (k = −1, 0).  Its value on any element is σ_k − σ_{k+2}.
    """
    one = cfg.qnum(1)
    const = 0
    if k in (-1, 0):
        const = -cfg.lam.pairing(color(k))
    return LinFunc.build(
        cfg.qnum(const), {k: one, k + 1: cfg.qnum(-cfg.cartan.a_at(k)), k + 2: one}
    )


def s_bar(cfg: LambdaConfig, k: int, phi: LinFunc) -> LinFunc:
    """Descent at k: φ − φ_k β̄_k when φ_k ≥ 0, φ − φ_k β̄_{k−2} when φ_k < 0.

    The nonnegative branch kills the ζ_k term against β̄_k (the raising
    direction, where σ_k − σ_{k+2} ≥ 1 at an argmax); the negative branch
    borrows β̄_{k−2} (the lowering direction, where σ_{k−2} − σ_k ≤ −1).
    φ_k = 0 leaves φ unchanged.
    """
    fk = phi.coeff(k)
    sign = fk.sign()
    if sign == 0:
        return phi
    pivot = beta_bar(cfg, k) if sign > 0 else beta_bar(cfg, k - 2)
    return phi - pivot.scale(fk)


# ---------------------------------------------------------------------------
# closed forms of every descent of every generator
# ---------------------------------------------------------------------------


def descent_closed_form(
    cfg: LambdaConfig, family: str, k: int, j: int
) -> list[tuple[QuadNum, LinFunc]]:
    """The expected decomposition of S̄_j(generator) as Σ coeff·term.

    Terms are cone generators or the coordinate rays +ζ_m (m ≥ 1) / −ζ_m
    (m ≤ 0); every coefficient is nonnegative.  Raises KeyError when (family,
    k, j) is not a descent case (i.e. the generator has no ζ_j term).
    """
    one = cfg.qnum(1)
    alpha, beta = cfg.alpha, cfg.beta
    G = lambda fam, kk=0: xi_generator(cfg, fam, kk)

    if family == "base-0":
        if j == 0:
            return [(cfg.gamma(0), G("plus-gamma", 1))]
        if j == 1:
            return [(beta.inverse(), G("minus-mix", 0))]
    elif family == "base-1":
        if j == 0:
            return [(alpha.inverse(), G("plus-mix", 1))]
        if j == 1:
            return [(beta, G("minus-gamma", 0))]
    elif family == "plus-p" and j == k:
        if k == 1:
            return [(one, G("minus-gamma", 0)), (beta.inverse(), zeta_atom(cfg, 0, -1))]
        if k == 2:
            return [(alpha.inverse(), G("plus-p", 1)), (one, G("base-1"))]
        return [(cfg.gamma(k).inverse(), G("plus-p", k - 1)), (one, G("plus-mix", k - 2))]
    elif family == "plus-gamma":
        if j == k:
            return [(cfg.gamma(k), G("plus-gamma", k + 1))]
        if j == k + 1:
            if k == 1:
                return [(alpha.inverse(), G("base-0"))]
            return [(cfg.gamma(k - 1).inverse(), G("plus-gamma", k - 1))]
    elif family == "plus-mix":
        if j == k:
            return [(cfg.gamma(k).inverse(), G("plus-mix", k + 1))]
        if j == k + 1:
            if k == 1:
                return [(alpha, G("base-1"))]
            return [(cfg.gamma(k + 1), G("plus-mix", k - 1))]
    elif family == "minus-p" and j == k:
        if k == 0:
            return [(alpha.inverse(), zeta_atom(cfg, 1, +1)), (one, G("plus-gamma", 1))]
        if k == -1:
            return [(beta.inverse(), G("minus-p", 0)), (one, G("base-0"))]
        return [(cfg.gamma(k).inverse(), G("minus-p", k + 1)), (one, G("minus-mix", k + 2))]
    elif family == "minus-gamma":
        if j == k - 1:
            if k == 0:
                return [(beta.inverse(), G("base-1"))]
            return [(cfg.gamma(k + 1).inverse(), G("minus-gamma", k + 1))]
        if j == k:
            return [(cfg.gamma(k), G("minus-gamma", k - 1))]
    elif family == "minus-mix":
        if j == k - 1:
            if k == 0:
                return [(beta, G("base-0"))]
            return [(cfg.gamma(k - 1), G("minus-mix", k + 1))]
        if j == k:
            return [(cfg.gamma(k - 2).inverse(), G("minus-mix", k - 1))]
    raise KeyError(f"no descent case for ({family}, k={k}, j={j})")


def _family_indices(family: str, k_range: int) -> list[int]:
    if family in ("base-0", "base-1"):
        return [0]
    if family in _PLUS_FAMILIES:
        return list(range(1, k_range + 1))
    return list(range(-k_range, 1))


def verify_descent_identities(cfg: LambdaConfig, k_range: int) -> list[dict]:
    """Check every descent S̄_j(φ), φ a generator with |k| ≤ k_range, j in φ's
    support, against its closed-form decomposition; also check that every
    decomposition coefficient has nonnegative exact sign.

    Returns the list of mismatches (empty = all identities hold exactly).
    """
    mismatches: list[dict] = []
    for family in FAMILIES:
        for k in _family_indices(family, k_range):
            gen = xi_generator(cfg, family, k)
            for j in gen.support():
                got = s_bar(cfg, j, gen)
                combo = descent_closed_form(cfg, family, k, j)
                expected = LinFunc.build(cfg.qnum(0), {})
                for coeff, term in combo:
                    if coeff.sign() < 0:
                        mismatches.append(
                            {
                                "family": family,
                                "k": k,
                                "j": j,
                                "reason": "negative-coefficient",
                                "coefficient": str(coeff),
                            }
                        )
                    expected = expected + term.scale(coeff)
                if got != expected:
                    mismatches.append(
                        {
                            "family": family,
                            "k": k,
                            "j": j,
                            "reason": "value-mismatch",
                            "got": got.to_json(),
                            "expected": expected.to_json(),
                        }
                    )
    return mismatches
