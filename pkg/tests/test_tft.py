from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rspin_tft.rspin import HigherGenus, LowRGenus, Sphere, Torus, enumerate_torus_orbits, euler_char, u_surface
from rspin_tft.skk import FormalSurfaceSum, SkkClass
from rspin_tft.tft import (
    InvertibleTft,
    arf_tft,
    euler_tft,
    evaluate,
    format_value,
    verify_skk_invariance,
)


def test_arf_examples():
    assert evaluate(arf_tft(4), Torus(0, 0)) == -1
    assert evaluate(arf_tft(4), HigherGenus(1, 1)) == Fraction(1, 4)
    assert evaluate(arf_tft(2), Sphere()) == 2


def test_arf_matches_closed_formula_on_surfaces():
    # 2^(chi/2) * (-1)^Arf with Arf = 1 for the minus structure
    for r in range(2, 13, 2):
        for l in range(1, 6):
            for arf in (1, -1):
                S = u_surface(l, r, arf)
                expected = Fraction(2) ** (euler_char(S, r) // 2) * (1 if arf == 1 else -1)
                assert evaluate(arf_tft(r), S) == expected


def test_arf_rejects_odd_r():
    with pytest.raises(ValueError):
        arf_tft(3)


def test_euler_examples():
    assert evaluate(euler_tft(3, 5), HigherGenus(2)) == Fraction(1, 25)
    q = Fraction(7, 3)
    assert evaluate(euler_tft(1, q), Sphere()) == q
    for r in range(1, 7):
        assert evaluate(euler_tft(r, 11), FormalSurfaceSum()) == 1
    with pytest.raises(ValueError):
        euler_tft(0, 2)


def test_evaluate_examples():
    assert evaluate(arf_tft(2), Torus(1, 1)) == 1
    assert evaluate(arf_tft(0), FormalSurfaceSum({Torus(0, 0): 2})) == 1
    assert evaluate(euler_tft(2, 3), FormalSurfaceSum({Sphere(): 2})) == 9
    assert evaluate(arf_tft(0), Torus(0, 0)) == -1
    assert evaluate(arf_tft(0), Torus(3, 5)) == 1


def test_evaluate_rejects_invalid_surfaces():
    from rspin_tft.rspin import InvalidSurfaceError

    with pytest.raises(InvalidSurfaceError):
        evaluate(euler_tft(5, 2), Sphere())
    with pytest.raises(InvalidSurfaceError):
        evaluate(arf_tft(4), HigherGenus(1))


def test_tft_validation():
    with pytest.raises(ValueError):
        InvertibleTft(3, 0)
    with pytest.raises(ValueError):
        InvertibleTft(4, 2, None)
    with pytest.raises(ValueError):
        InvertibleTft(3, 2, 1)
    with pytest.raises(ValueError):
        InvertibleTft(0, 2, 1)


def test_format_value():
    assert format_value(Fraction(-1)) == "-1/1"
    assert format_value(Fraction(1, 4)) == "1/4"
    assert euler_tft(3, Fraction(1, 2)).to_json() == {"name": "euler", "r": 3, "lambda": "1/2"}
    assert arf_tft(0).to_json() == {"name": "arf", "r": 0, "rho": -1}


def surfaces_for(r, rng):
    even = r % 2 == 0
    if r == 0:
        return [Torus(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3)]
    arf = (lambda: rng.choice([1, -1])) if even else (lambda: None)
    out = [Torus(rng.randrange(r), rng.randrange(r)), u_surface(rng.randint(1, 5), r, arf())]
    if r <= 2:
        out.append(Sphere())
        out.append(LowRGenus(rng.randint(2, 6), arf()))
    return out


@given(st.integers(0, 12), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_evaluate_is_multiplicative(r, rng):
    tfts = ([arf_tft(r)] if r % 2 == 0 else []) + ([euler_tft(r, Fraction(3, 2))] if r else [])
    x = FormalSurfaceSum([(S, rng.randint(-2, 2)) for S in surfaces_for(r, rng)])
    y = FormalSurfaceSum([(S, rng.randint(-2, 2)) for S in surfaces_for(r, rng)])
    for Z in tfts:
        assert evaluate(Z, x + y) == evaluate(Z, x) * evaluate(Z, y)
        assert evaluate(Z, -x) == 1 / evaluate(Z, x)


def test_arf_on_tori_is_sign_and_orbit_invariant():
    for r in range(2, 25, 2):
        Z = arf_tft(r)
        for orbit in enumerate_torus_orbits(r):
            values = {evaluate(Z, Torus(s, t)) for s, t in orbit}
            assert len(values) == 1 and values <= {1, -1}


def test_arf_minus_is_negative_of_plus():
    for r in range(2, 13, 2):
        Z = arf_tft(r)
        for l in range(1, 6):
            assert evaluate(Z, u_surface(l, r, -1)) == -evaluate(Z, u_surface(l, r, 1))


def test_euler_and_arf_separate_classes():
    for r in range(2, 13, 2):
        E, A = euler_tft(r, 2), arf_tft(r)
        seen = {}
        for j in range(-10, 11):
            for eps in (0, 1):
                pair = (E.value(j, eps), A.value(j, eps))
                assert pair not in seen
                seen[pair] = SkkClass(r, j, eps)


def test_invariance_examples():
    assert verify_skk_invariance(arf_tft(4), 1000).ok
    assert verify_skk_invariance(euler_tft(3, 7), 1000).ok
    rep = verify_skk_invariance(arf_tft(2), 0)
    assert rep.ok and rep.trials == 0 and rep.by_family == {}


def test_invariance_report_is_deterministic_and_covers_families():
    a = verify_skk_invariance(arf_tft(2), 500, seed=3).to_json()
    assert a == verify_skk_invariance(arf_tft(2), 500, seed=3).to_json()
    assert set(a["by_family"]) == {"four_term", "torus_T1u", "sl2_orbit", "u_addition", "arf_flip", "sphere_genus"}
    assert set(verify_skk_invariance(arf_tft(0), 200).by_family) == {"four_term", "torus_T1u", "sl2_orbit"}


def test_invariance_detects_a_wrong_normal_form(monkeypatch):
    from rspin_tft import tft

    def naive_class(x, r):
        # counts every torus as the nontrivial class, which breaks [T(1,u)] = 0
        x = x if isinstance(x, FormalSurfaceSum) else FormalSurfaceSum.of(x)
        return SkkClass(r, 0, sum(n for S, n in x if isinstance(S, Torus)))

    monkeypatch.setattr(tft, "skk_class", naive_class)
    rep = verify_skk_invariance(arf_tft(0), 200)
    assert not rep.ok and rep.mismatches[0]["family"] in {"torus_T1u", "four_term"}
