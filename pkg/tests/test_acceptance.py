"""Numbered acceptance criteria; the terminal summary prints one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``).
"""

import random
import sys
from fractions import Fraction

import pytest

from rspin_tft.abelian import FgAbGroup, IntMatrix, smith_normal_form
from rspin_tft.bordism import pi0_presentation
from rspin_tft.picard import (
    FormalGroupExpr,
    PicardData,
    Pi1Group,
    bord_picard_data,
    classify_functors,
    classify_rspin_tfts,
    sline,
)
from rspin_tft.rspin import Sphere, Torus, enumerate_torus_orbits, sl2_canonical, torus_orbits
from rspin_tft.skk import skk_group, torus_subgroup_oracle
from rspin_tft.tft import arf_tft, euler_tft, evaluate, verify_skk_invariance

Z2 = FgAbGroup(0, (2,))
TRIVIAL = FgAbGroup()


def table_row(r):
    """(pi1, pi0) from the homotopy-group table."""
    if r == 0:
        return Z2, Z2
    if r % 2 == 0:
        return FgAbGroup(1, (2,)), Z2
    return FgAbGroup(1), TRIVIAL


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@pytest.mark.acceptance(1, "homotopy-group table for r = 0..12 in < 10 s")
def test_criterion_1_homotopy_table(stopwatch):
    for r in range(13):
        pi1, pi0 = table_row(r)
        assert skk_group(r) == pi1
        assert pi0_presentation(r, 2, 4) == pi0
    assert stopwatch() < 10


@pytest.mark.acceptance(2, "torus-subgroup oracle via SNF for r = 0..12 in < 60 s")
def test_criterion_2_torus_oracle(stopwatch):
    for r in range(13):
        expected = Z2 if r % 2 == 0 else TRIVIAL
        assert torus_subgroup_oracle(r) == expected
    assert stopwatch() < 60


@pytest.mark.acceptance(3, "classification with super-line target for r = 0..12")
def test_criterion_3_classification_table():
    for r in range(13):
        if r == 0:
            expected = "Z/2"
        elif r % 2:
            expected = "C*"
        else:
            expected = "Z/2 x C*"
        got = classify_functors(bord_picard_data(r), sline())
        assert str(got) == expected
        assert got == classify_rspin_tfts(r, sline())


@pytest.mark.acceptance(4, "Arf TFT: T(0,0) -> -1 for even r <= 24, S^2 -> 2 for r = 2")
def test_criterion_4_arf_values():
    for r in range(0, 25, 2):
        value = evaluate(arf_tft(r), Torus(0, 0))
        assert isinstance(value, Fraction) and value == -1
    assert evaluate(arf_tft(2), Sphere()) == 2


@pytest.mark.acceptance(5, "10^4 seeded invariance trials, Arf and Euler TFTs, r = 0..12")
def test_criterion_5_relation_invariance():
    for r in range(13):
        tfts = []
        if r % 2 == 0:
            tfts.append(arf_tft(r))
        if r > 0:
            tfts.append(euler_tft(r, Fraction(3, 2)))
        for Z in tfts:
            report = verify_skk_invariance(Z, trials=10_000, seed=r)
            assert report.trials == 10_000
            assert report.mismatches == [], report.mismatches[:3]


def bfs_orbit_count(r):
    # explicit SL(2,Z) action on (Z/r)^2 through the generators S and T
    seen = set()
    count = 0
    for s in range(r):
        for t in range(r):
            if (s, t) in seen:
                continue
            count += 1
            todo = [(s, t)]
            seen.add((s, t))
            while todo:
                a, b = todo.pop()
                for x in ((b, -a % r), (a, (a + b) % r)):
                    if x not in seen:
                        seen.add(x)
                        todo.append(x)
    return count


@pytest.mark.acceptance(6, "torus orbit count is tau(r) for r <= 50, SL2 enumeration for r <= 24")
def test_criterion_6_orbit_count():
    for r in range(1, 51):
        tau = divisor_count(r)
        assert len(torus_orbits(r)) == tau
        if r <= 24:
            assert bfs_orbit_count(r) == tau
            orbits = enumerate_torus_orbits(r)
            assert len(orbits) == tau
            assert sorted(sl2_canonical(*min(o), r) for o in orbits) == torus_orbits(r)


@pytest.mark.acceptance(7, "saturation: g_max 2->3, n_max 4->6, r = 0 window 2->10")
def test_criterion_7_saturation():
    for r in range(13):
        base = pi0_presentation(r, 2, 4)
        for g_max, n_max in [(3, 4), (2, 6), (3, 6)]:
            assert pi0_presentation(r, g_max, n_max) == base
    pi0_windows = {pi0_presentation(0, 2, 4, window=w) for w in range(2, 11)}
    torus_windows = {torus_subgroup_oracle(0, window=w) for w in range(2, 11)}
    assert pi0_windows == {Z2}
    assert torus_windows == {Z2}


def random_finite_target(rng, bound=16):
    def group():
        while True:
            G = FgAbGroup.from_orders([rng.choice([2, 3, 4, 6, 8]) for _ in range(rng.randint(0, 3))])
            if G.order() <= bound:
                return G

    pi0, pi1 = group(), group()
    halves = [x for x in pi1.elements() if not any(pi1.scale(2, x))]
    k = tuple(pi1.zero() if d % 2 else rng.choice(halves) for d in pi0.orders)
    return PicardData(pi0, Pi1Group.finitely(pi1), k)


@pytest.mark.acceptance(8, "closed form vs brute-force enumeration on 20 random finite targets, r in {0, 3, 4}")
def test_criterion_8_oracle_vs_enumeration():
    rng = random.Random(2024)
    targets = [random_finite_target(rng) for _ in range(20)]
    assert len({(t.pi0, t.pi1, t.k) for t in targets}) > 1
    for target in targets:
        for r in (0, 3, 4):
            closed = classify_rspin_tfts(r, target)
            enumerated = classify_functors(bord_picard_data(r), target, method="enumerate")
            assert isinstance(enumerated, FormalGroupExpr)
            assert closed == enumerated, (r, target)


@pytest.mark.acceptance(9, "SNF checks on 10^3 random matrices up to 20x20, entries in [-50, 50], < 30 s")
def test_criterion_9_snf(stopwatch):
    rng = random.Random(9)
    for _ in range(1000):
        m, n = rng.randint(1, 20), rng.randint(1, 20)
        A = IntMatrix([[rng.randint(-50, 50) for _ in range(n)] for _ in range(m)], n)
        dec = smith_normal_form(A)
        assert dec.U @ A @ dec.V == dec.D
        assert abs(dec.U.det()) == 1 and abs(dec.V.det()) == 1
        assert dec.D.is_diagonal()
        diag = dec.D.diagonal()
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0 if a else b == 0
    assert stopwatch() < 30


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
