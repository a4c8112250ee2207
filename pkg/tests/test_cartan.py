"""Cartan data, c/p sequences, Weyl translates, and orbit classification."""

import pytest

from crystalcone.cartan import (
    CartanData,
    LambdaConfig,
    Weight,
    c_seq,
    classify_orbit,
    p_seq,
    validate_lambda_form,
    weyl_translate,
)

C33 = CartanData(3, 3)
C23 = CartanData(2, 3)
C32 = CartanData(3, 2)
C51 = CartanData(5, 1)
C15 = CartanData(1, 5)
C42 = CartanData(4, 2)

ALL_CARTANS = [C33, C23, C32, C51, C15, C42]


def test_cartan_validation():
    with pytest.raises(ValueError):
        CartanData(2, 2)
    with pytest.raises(ValueError):
        CartanData(0, 9)


def test_pairing_table():
    assert C23.pairing_alpha(1, 1) == 2
    assert C23.pairing_alpha(2, 1) == -2  # ⟨α₂, α₁^∨⟩ = −a₁
    assert C23.pairing_alpha(1, 2) == -3  # ⟨α₁, α₂^∨⟩ = −a₂
    assert C23.alpha_weight(1) == Weight(2, -3)
    assert C23.alpha_weight(2) == Weight(-2, 2)


def test_c_seq_examples():
    assert [c_seq(C33, "c", j) for j in range(5)] == [0, 1, 3, 8, 21]
    assert [c_seq(C23, "cprime", j) for j in range(5)] == [0, 1, 3, 5, 12]
    for cartan in ALL_CARTANS:
        assert c_seq(cartan, "c", 1) == 1
        assert c_seq(cartan, "cprime", 1) == 1


def test_c_seq_positive():
    for cartan in ALL_CARTANS:
        for j in range(1, 40):
            assert c_seq(cartan, "c", j) > 0
            assert c_seq(cartan, "cprime", j) > 0


def test_p_seq_examples():
    assert [p_seq(C33, Weight(1, -1), m) for m in range(-2, 5)] == [5, 2, 1, 1, 2, 5, 13]
    assert [p_seq(C51, Weight(2, -1), m) for m in range(-2, 6)] == [2, 3, 1, 2, 1, 3, 2, 7]
    assert p_seq(C33, Weight(1, -3), 2) == 0


def test_p_seq_recursion_consistency():
    # forward and backward recursions agree: p_m + p_{m+2} = a_{i_m} p_{m+1}
    for cartan in ALL_CARTANS:
        mu = Weight(2, -1)
        for m in range(-15, 15):
            a = cartan.a1 if m % 2 else cartan.a2
            assert p_seq(cartan, mu, m) + p_seq(cartan, mu, m + 2) == a * p_seq(
                cartan, mu, m + 1
            )


def test_weyl_translate_examples():
    mu = Weight(2, -1)
    assert weyl_translate(C33, mu, 0) == mu
    assert weyl_translate(C33, mu, -2) == Weight(1, -2)
    assert weyl_translate(C33, Weight(1, -3), 1) == Weight(-1, 0)


def test_weyl_translate_matches_reflections():
    # w_k μ from the p-sequence equals the actual composition of reflections
    # w_k μ = s_{i_k}(… s_{i_2}(s_{i_1} μ)) for k > 0, s_{i_{k+1}}(… s_{i_0} μ) for k < 0
    for cartan in (C33, C23, C51):
        mu = Weight(3, -2)
        for k in range(-6, 7):
            w = mu
            if k > 0:
                for j in range(1, k + 1):
                    w = w.reflect(cartan, 1 if j % 2 else 2)
            elif k < 0:
                for j in range(0, k, -1):
                    w = w.reflect(cartan, 1 if j % 2 else 2)
            assert weyl_translate(cartan, mu, k) == w, (cartan, k)


def test_validate_lambda_form_examples():
    assert validate_lambda_form(C33, 1, 1) == "form-i"
    assert validate_lambda_form(C51, 2, 1) == "form-a2"
    assert validate_lambda_form(C33, 2, 1) is None
    assert validate_lambda_form(C23, 1, 2) == "form-ii"
    assert validate_lambda_form(C15, 1, 2) == "form-a1"
    assert validate_lambda_form(C42, 3, 2) == "form-i"  # 2 ≤ 3 < 3·2
    assert validate_lambda_form(C32, 2, 1) is None  # boundary: k₁ = (a₁−1)k₂


def test_classify_orbit_examples():
    v = classify_orbit(C33, Weight(2, -1))
    assert v.satisfies_condition and v.representative == Weight(1, -2)
    v = classify_orbit(C33, Weight(1, -3))
    assert not v.satisfies_condition and v.witness == (1, Weight(-1, 0))
    v = classify_orbit(C33, Weight(1, 1))
    assert not v.satisfies_condition and v.witness == (0, Weight(1, 1))
    v = classify_orbit(C33, Weight(0, 0))
    assert not v.satisfies_condition and v.witness == (0, Weight(0, 0))


def test_classify_orbit_witness_is_in_cone():
    for cartan in ALL_CARTANS:
        for m1 in range(-4, 5):
            for m2 in range(-4, 5):
                v = classify_orbit(cartan, Weight(m1, m2))
                if not v.satisfies_condition:
                    k, w = v.witness
                    assert w.is_dominant() or w.is_antidominant()
                    assert weyl_translate(cartan, Weight(m1, m2), k) == w
                else:
                    rep = v.representative
                    assert validate_lambda_form(cartan, rep.m1, -rep.m2) is not None


def test_classify_negative_quadrant_mirror():
    # all-negative p-sequences: representative found among odd translates
    v = classify_orbit(C33, Weight(-2, 1))
    assert v.satisfies_condition
    rep = v.representative
    assert validate_lambda_form(C33, rep.m1, -rep.m2) is not None


def test_classify_agrees_with_translate_scan_small_grid():
    for cartan in (C33, C23):
        for k1 in range(1, 5):
            for k2 in range(1, 5):
                mu = Weight(k1, -k2)
                expect = any(
                    validate_lambda_form(
                        cartan,
                        weyl_translate(cartan, mu, k).m1,
                        -weyl_translate(cartan, mu, k).m2,
                    )
                    is not None
                    for k in range(-12, 13)
                )
                assert classify_orbit(cartan, mu).satisfies_condition == expect


def test_lambda_config_accepts_matrix():
    for a1, a2, k1, k2 in [
        (3, 3, 1, 1), (2, 3, 1, 2), (3, 2, 2, 1),
        (5, 1, 2, 1), (1, 5, 1, 2), (4, 2, 3, 2),
    ]:
        cfg = LambdaConfig(CartanData(a1, a2), k1, k2)
        assert cfg.form is not None


def test_lambda_config_rejects_bad_orbit():
    with pytest.raises(ValueError):
        LambdaConfig(C33, 1, 3)  # orbit hits an antidominant weight


def test_lambda_config_p_positive():
    for a1, a2, k1, k2 in [(3, 3, 1, 1), (2, 3, 1, 2), (5, 1, 2, 1)]:
        cfg = LambdaConfig(CartanData(a1, a2), k1, k2)
        for m in range(-40, 41):
            assert cfg.p(m) > 0


def test_ratio_bounds():
    # c_j/c_{j−1} > γ_j and c′_j/c′_{j−1} > γ_{j+1}, exactly, j ≤ 20
    for a1, a2, k1, k2 in [(3, 3, 1, 1), (2, 3, 1, 2), (5, 1, 2, 1), (4, 2, 3, 2)]:
        cfg = LambdaConfig(CartanData(a1, a2), k1, k2)
        for j in range(2, 21):
            assert (cfg.qnum(cfg.c(j)) - cfg.gamma(j) * cfg.c(j - 1)).sign() > 0
            assert (
                cfg.qnum(cfg.cprime(j)) - cfg.gamma(j + 1) * cfg.cprime(j - 1)
            ).sign() > 0


def test_interleaved_ratios_strictly_decreasing():
    # c₂/c₁ > c′₃/c′₂ > c₄/c₃ > …  and  c′₂/c′₁ > c₃/c₂ > c′₄/c′₃ > …
    for cartan in ALL_CARTANS:
        def chain(first_plain: bool):
            terms = []
            for m in range(0, 18):
                plain = (m % 2 == 0) == first_plain
                kind = "c" if plain else "cprime"
                terms.append((c_seq(cartan, kind, m + 2), c_seq(cartan, kind, m + 1)))
            return terms

        for terms in (chain(True), chain(False)):
            for (n1, d1), (n2, d2) in zip(terms, terms[1:]):
                assert n1 * d2 > n2 * d1  # cross-multiplied strict decrease


def test_even_p_monotone_tail_a2_1():
    # once the even subsequence turns weakly increasing while positive it stays so
    for a1 in (5, 6, 9):
        cartan = CartanData(a1, 1)
        for k, l in [(2, 1), (3, 1), (4, 2), (7, 2)]:
            mu = Weight(k, -l)
            vals = {m: p_seq(cartan, mu, m) for m in range(-40, 45)}
            for n in range(-15, 15):
                if 0 < vals[2 * n] <= vals[2 * n + 2]:
                    for m in range(n, n + 16):
                        assert 0 < vals[2 * m] <= vals[2 * m + 2]
                    break


def test_weight_json_round_trip():
    w = Weight(3, -4)
    assert Weight.from_json(w.to_json()) == w
    cfg = LambdaConfig(C33, 1, 1)
    assert LambdaConfig.from_json(cfg.to_json()).lam == cfg.lam


def test_classify_random_sweep():
    # representatives must be genuine orbit members in normal form; witnesses
    # must be the claimed dominant/antidominant translates
    import random

    rng = random.Random(20260808)
    families = [(3, 3), (2, 3), (3, 2), (5, 1), (1, 5), (4, 2), (2, 4), (6, 1)]
    for _ in range(300):
        cartan = CartanData(*rng.choice(families))
        mu = Weight(rng.randint(-9, 9), rng.randint(-9, 9))
        v = classify_orbit(cartan, mu)
        if v.satisfies_condition:
            rep = v.representative
            assert validate_lambda_form(cartan, rep.m1, -rep.m2) is not None
            assert any(
                weyl_translate(cartan, mu, k) == rep for k in range(-40, 41)
            ), (cartan, mu, rep)
        else:
            k, w = v.witness
            assert w.is_dominant() or w.is_antidominant()
            assert weyl_translate(cartan, mu, k) == w
