import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rspin_tft.abelian import FgAbGroup
from rspin_tft.rspin import HigherGenus, InvalidSurfaceError, LowRGenus, Sphere, Torus, rtilde, u_surface
from rspin_tft.skk import (
    FormalSurfaceSum,
    SkkClass,
    euler_hom,
    k_invariant_circle,
    section_phi,
    skk_class,
    skk_group,
    torus_subgroup_oracle,
    torus_subgroup_presentation,
)

Z2 = FgAbGroup(0, (2,))


def test_skk_group_closed_form():
    assert skk_group(0) == Z2
    assert skk_group(6) == FgAbGroup(1, (2,))
    assert skk_group(7) == FgAbGroup(1)
    assert str(skk_group(4)) == "Z x Z/2"


def test_skk_class_examples():
    assert skk_class(Torus(0, 0), 4) == SkkClass(4, 0, 1)
    assert skk_class(FormalSurfaceSum.of(HigherGenus(2), HigherGenus(3)), 3) == SkkClass(3, -5)
    assert skk_class(FormalSurfaceSum({Sphere(): 2}), 2) == SkkClass(2, 2, 0)
    assert skk_class(FormalSurfaceSum(), 5) == SkkClass(5)


def test_skk_class_matches_euler_characteristic():
    from rspin_tft.rspin import euler_char

    for r in range(1, 13):
        arf = 1 if r % 2 == 0 else None
        for l in range(1, 6):
            S = u_surface(l, r, arf)
            assert euler_hom(skk_class(S, r)) == euler_char(S, r)


def test_skk_class_rejects_invalid_surface():
    with pytest.raises(InvalidSurfaceError):
        skk_class(Sphere(), 3)
    with pytest.raises(InvalidSurfaceError):
        skk_class(FormalSurfaceSum.of(HigherGenus(1, 1)), 3)


def test_euler_hom():
    assert euler_hom(SkkClass(6, -1, 0)) == -6
    assert euler_hom(SkkClass(1, 1)) == 2
    assert euler_hom(SkkClass(9, 0)) == 0
    with pytest.raises(ValueError):
        euler_hom(SkkClass(0))


def test_section_phi_examples():
    assert section_phi(3, 2) == FormalSurfaceSum({Sphere(): 3})
    # U_l sits at chi / (2 r~) = -l, so positive j uses -U_j
    assert section_phi(-2, 5) == FormalSurfaceSum({HigherGenus(2): 1})
    assert section_phi(1, 6) == FormalSurfaceSum({HigherGenus(1, 1): -1})
    assert section_phi(0, 4) == FormalSurfaceSum()
    with pytest.raises(ValueError):
        section_phi(1, 0)


def test_section_round_trip():
    for r in range(1, 13):
        for j in range(-10, 11):
            x = section_phi(j, r)
            assert skk_class(x, r) == SkkClass(r, j)
            assert euler_hom(skk_class(x, r)) == 2 * rtilde(r) * j


def test_k_invariant_circle():
    assert k_invariant_circle(0, 2) == SkkClass(2, 0, 1)
    assert k_invariant_circle(1, 2) == SkkClass(2, 0, 0)
    assert k_invariant_circle(3, 6) == SkkClass(6, 0, 0)
    assert k_invariant_circle(0, 0) == SkkClass(0, 0, 1)
    assert k_invariant_circle(2, 5) == SkkClass(5)


# --- torus relations hold under the normal form ----------------------------


def test_two_torsion_of_tori():
    for r in range(0, 25):
        ks = range(r) if r else range(-8, 9)
        for k in ks:
            assert 2 * skk_class(Torus(k, 0), r) == SkkClass.zero(r)


def test_torus_shift_relation():
    for r in range(0, 25):
        res = range(r) if r else range(-8, 9)
        for k in res:
            for u in res:
                lhs = skk_class(FormalSurfaceSum.of(Torus(k, 0), Torus(k, u)), r)
                assert lhs == skk_class(Torus(k, (u + 1) % r if r else u + 1), r)


def four_term_holds(r, k, u):
    norm = (lambda x: x % r) if r else (lambda x: x)
    lhs = FormalSurfaceSum([Torus(k, x) for x in u])
    rhs = FormalSurfaceSum([Torus(k, norm(u[0] + u[1])), Torus(k, norm(u[2] + u[3]))])
    return skk_class(lhs, r) == skk_class(rhs, r)


def test_four_term_exhaustive_small_r():
    import itertools

    for r in range(1, 9):
        for k in range(r):
            for u in itertools.product(range(r), repeat=4):
                assert four_term_holds(r, k, u)


@given(st.integers(0, 40), st.data())
@settings(max_examples=300, deadline=None)
def test_four_term_sampled(r, data):
    draw = (lambda: data.draw(st.integers(0, r - 1))) if r else (lambda: data.draw(st.integers(-30, 30)))
    assert four_term_holds(r, draw(), [draw() for _ in range(4)])


def test_torus_of_type_one_is_zero():
    for r in range(0, 25):
        for u in range(r or 10):
            assert skk_class(Torus(1 % r if r else 1, u), r) == SkkClass.zero(r)


# --- homomorphism ---------------------------------------------------------


def random_sum(rng, r, size):
    even = r % 2 == 0
    terms = []
    for _ in range(size):
        kind = rng.randrange(3)
        if kind == 0 or r == 0:
            s, t = rng.randint(-20, 20), rng.randint(-20, 20)
            S = Torus(s % r if r else s, t % r if r else t)
        elif kind == 1:
            arf = rng.choice([1, -1]) if even else None
            S = u_surface(rng.randint(1, 6), r, arf)
        else:
            S = Sphere() if r <= 2 else u_surface(1, r, 1 if even else None)
        terms.append((S, rng.randint(-3, 3)))
    return FormalSurfaceSum(terms)


@given(st.integers(0, 12), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_skk_class_is_homomorphism(r, rng):
    x, y = random_sum(rng, r, 4), random_sum(rng, r, 4)
    assert skk_class(x + y, r) == skk_class(x, r) + skk_class(y, r)
    assert skk_class(-x, r) == -skk_class(x, r)
    assert skk_class(3 * x, r) == 3 * skk_class(x, r)


def test_lowr_genus_relations():
    for r in (1, 2):
        arf = 1 if r == 2 else None
        for g in range(2, 8):
            lhs = FormalSurfaceSum.of(LowRGenus(g + 1, arf), Sphere())
            assert skk_class(lhs, r) == skk_class(LowRGenus(g, arf), r)


def test_arf_flip_relation():
    for r in range(4, 13, 2):
        for l in range(1, 6):
            lhs = FormalSurfaceSum.of(HigherGenus(l, 1), Torus(0, 0))
            assert skk_class(lhs, r) == skk_class(HigherGenus(l, -1), r)


# --- classes and sums -----------------------------------------------------


def test_skk_class_validation():
    with pytest.raises(ValueError):
        SkkClass(3, 0, 1)
    with pytest.raises(ValueError):
        SkkClass(0, 1)
    with pytest.raises(ValueError):
        SkkClass(3) + SkkClass(5)
    assert SkkClass(4, 2, 3).eps == 1


def test_skk_class_json():
    assert SkkClass(4, -1, 1).to_json() == {"r": 4, "j": -1, "eps": 1}
    assert SkkClass(3, 2).to_json() == {"r": 3, "j": 2}
    assert SkkClass(0, 0, 1).to_json() == {"r": 0, "eps": 1}
    for c in (SkkClass(4, -1, 1), SkkClass(3, 2), SkkClass(0, 0, 1)):
        assert SkkClass.from_json(c.to_json()) == c


def test_formal_sum_arithmetic_and_json():
    x = FormalSurfaceSum({Torus(0, 1): 2, Sphere(): -1})
    assert x - x == FormalSurfaceSum()
    assert len(x + x) == 2 and dict((x + x).items())[Torus(0, 1)] == 4
    assert FormalSurfaceSum.from_json(x.to_json()) == x
    assert FormalSurfaceSum({Sphere(): 0}) == FormalSurfaceSum()


# --- torus subgroup from relations ----------------------------------------


def test_oracle_examples():
    assert torus_subgroup_oracle(2) == Z2
    assert torus_subgroup_oracle(3) == FgAbGroup()
    assert torus_subgroup_oracle(0, window=6) == Z2


def test_oracle_matches_closed_form():
    for r in range(0, 13):
        assert torus_subgroup_oracle(r) == skk_group(r).torsion_subgroup()


def test_presentation_shape_and_determinism():
    p = torus_subgroup_presentation(4)
    assert len(p.labels) == 16
    assert p.relation_matrix().shape == (16, len(p.relations))
    assert p.relations == torus_subgroup_presentation(4).relations
    q = torus_subgroup_presentation(11, seed=5)
    assert q.relations == torus_subgroup_presentation(11, seed=5).relations
    with pytest.raises(ValueError):
        torus_subgroup_presentation(0, window=0)


def test_oracle_quotient_map_agrees_with_normal_form():
    # the class of each torus in the oracle quotient tracks eps of skk_class
    for r in (2, 4, 6, 0):
        p = torus_subgroup_presentation(r, window=3)
        G, q = p.quotient()
        for i, (s, t) in enumerate(p.labels):
            image = q([int(i == j) for j in range(len(p.labels))])
            assert any(image) == bool(skk_class(Torus(s, t), r).eps)
