import pytest

from flagcoh.charring import CharacterPoly, complete_h, dimension_of, schur_two_row
from flagcoh.divided import (
    base_char_zero,
    divided_cohomology,
    euler_characteristic,
    nim_h1,
    oracle_divided,
    phi_factor,
)
from flagcoh.guards import SizeGuardExceeded

# Printed character of H^1(P^3, D^3 R(2)) in characteristic 3 (16 terms).
CHAR_O3 = {
    (2, 2, 1, 0): 1, (2, 1, 2, 0): 1, (1, 2, 2, 0): 1, (2, 2, 0, 1): 1,
    (2, 1, 1, 1): 1, (1, 2, 1, 1): 1, (2, 0, 2, 1): 1, (1, 1, 2, 1): 1,
    (0, 2, 2, 1): 1, (2, 1, 0, 2): 1, (1, 2, 0, 2): 1, (2, 0, 1, 2): 1,
    (1, 1, 1, 2): 1, (0, 2, 1, 2): 1, (1, 0, 2, 2): 1, (0, 1, 2, 2): 1,
}

# Printed character of H^1(P^2, D^4 R(2)) in characteristic 3 (dimension 11).
CHAR_O4 = {
    (3, 3, 0): 1, (3, 2, 1): 1, (2, 3, 1): 1, (3, 1, 2): 1, (2, 2, 2): 2,
    (1, 3, 2): 1, (3, 0, 3): 1, (2, 1, 3): 1, (1, 2, 3): 1, (0, 3, 3): 1,
}

# Printed character of H^1(P^4, D^3 R(3)) in characteristic 2 (dimension 5).
CHAR_O11 = {
    (2, 1, 1, 1, 1): 1, (1, 2, 1, 1, 1): 1, (1, 1, 2, 1, 1): 1,
    (1, 1, 1, 2, 1): 1, (1, 1, 1, 1, 2): 1,
}

# Printed character of H^1(P^3, D^4 R(7)) in characteristic 2.
CHAR_O16 = {
    (3, 3, 3, 2): 1, (3, 3, 2, 3): 1, (3, 2, 3, 3): 1, (2, 3, 3, 3): 1,
}


def test_paper_character_h1_d3e2_char3():
    f = divided_cohomology(1, 3, 3, 2, 4)
    assert dimension_of(f) == 16
    assert f == CharacterPoly(4, CHAR_O3)


def test_paper_duality_example_char3():
    f = divided_cohomology(1, 3, 4, 2, 3)
    g = divided_cohomology(0, 3, 3, 3, 3)
    assert dimension_of(f) == 11
    assert f == CharacterPoly(3, CHAR_O4)
    assert f == g


def test_paper_nim_characters():
    f = divided_cohomology(1, 2, 3, 3, 5, method="nim")
    assert dimension_of(f) == 5
    assert f == CharacterPoly(5, CHAR_O11)
    assert divided_cohomology(1, 2, 3, 3, 5) == f
    g = divided_cohomology(1, 2, 4, 7, 4, method="nim")
    assert g == CharacterPoly(4, CHAR_O16)
    assert divided_cohomology(1, 2, 4, 7, 4) == g


def test_base_char_zero():
    # s_(3,3) in three variables is the 10-monomial character with all
    # coefficients 1 (one semistandard tableau per weight); the printed
    # characteristic-3 value CHAR_O4 differs from it exactly by one extra
    # central monomial, which the recursion supplies on top of this base.
    s33 = CharacterPoly(3, {e: 1 for e in CHAR_O4})
    assert base_char_zero(0, 3, 3, 3) == s33
    assert CharacterPoly(3, CHAR_O4) - s33 == CharacterPoly(3, {(2, 2, 2): 1})
    assert base_char_zero(0, 3, 4, 3).is_zero()  # e = d-1: both shapes fail
    assert base_char_zero(1, 3, 4, 3).is_zero()
    assert base_char_zero(0, 2, 1, 1) == CharacterPoly(2, {(1, 1): 1})
    assert base_char_zero(1, 3, 3, 1) == schur_two_row(3, 2, 2)


def test_structure_sheaf_cases():
    for p in (0, 2, 5):
        for e in range(0, 4):
            assert divided_cohomology(0, p, 0, e, 3) == complete_h(3, e)
            assert divided_cohomology(1, p, 0, e, 3).is_zero()


def test_phi_factor():
    for n in (2, 3):
        for p in (2, 3):
            assert phi_factor(n, p, 0, 0) == CharacterPoly.one(n)
            for D in (-1, -3):
                assert phi_factor(n, p, D, 2).is_zero()


def test_euler_characteristic():
    for n in (2, 3, 4):
        assert euler_characteristic(n, 0, 5) == complete_h(n, 5)
        for d in range(0, 4):
            assert euler_characteristic(n, d, d - 1).is_zero()


def test_euler_identity_all_methods():
    for p, n in ((2, 3), (3, 2), (5, 3)):
        for d in range(0, 6):
            for e in range(-1, 6):
                chi = euler_characteristic(n, d, e)
                h0 = divided_cohomology(0, p, d, e, n)
                h1 = divided_cohomology(1, p, d, e, n)
                assert h0 - h1 == chi
                o0 = oracle_divided(0, p, d, e, n)
                o1 = oracle_divided(1, p, d, e, n)
                assert o0 - o1 == chi


def test_nim_h1_trivial_cases():
    for n in (2, 4):
        for e in range(0, 4):
            assert nim_h1(n, 1, e).is_zero()
    with pytest.raises(ValueError):
        nim_h1(3, 4, 1)


def test_oracle_trivial_line_bundle():
    # D^1 R = O(-1) on P^1: no cohomology in either degree at twist 0
    assert oracle_divided(0, 2, 1, 0, 2).is_zero()
    assert divided_cohomology(1, 2, 1, 0, 2, method="oracle").is_zero()


def test_oracle_matches_base_case_below_p():
    for p in (2, 3, 5):
        for n in (2, 3):
            for d in range(0, min(p, 4)):
                for e in range(-1, 6):
                    assert oracle_divided(0, p, d, e, n) == base_char_zero(0, n, d, e)
                    assert oracle_divided(1, p, d, e, n) == base_char_zero(1, n, d, e)


def test_recursive_matches_oracle_small_grid():
    for p in (2, 3):
        for n in (2, 3):
            for d in range(0, 7):
                for e in range(-1, 7):
                    for i in (0, 1):
                        assert divided_cohomology(i, p, d, e, n) == oracle_divided(
                            i, p, d, e, n
                        ), (i, p, d, e, n)


def test_oracle_duality_identity():
    # The duality h^i(D^d R(e)) = h^{1-i}(D^{e+1} R(d-1)) checked on the
    # oracle, where the two sides are genuinely independent computations.
    for p in (2, 3):
        for d in range(0, 6):
            for e in range(-1, 6):
                for i in (0, 1):
                    assert oracle_divided(i, p, d, e, 3) == oracle_divided(
                        1 - i, p, e + 1, d - 1, 3
                    )


def test_characters_nonnegative_and_symmetric():
    import random

    rng = random.Random(4)
    for _ in range(15):
        p = rng.choice((0, 2, 3, 5))
        d = rng.randint(0, 8)
        e = rng.randint(-1, 8)
        n = rng.randint(2, 4)
        i = rng.randint(0, 1)
        f = divided_cohomology(i, p, d, e, n)
        assert all(c > 0 for c in f.terms.values())
        perm = list(range(n))
        rng.shuffle(perm)
        assert {
            tuple(e2[perm[t]] for t in range(n)): c for e2, c in f.terms.items()
        } == f.terms


def test_validation_errors():
    with pytest.raises(ValueError):
        divided_cohomology(2, 3, 1, 1, 3)
    with pytest.raises(ValueError):
        divided_cohomology(0, 4, 1, 1, 3)
    with pytest.raises(ValueError):
        divided_cohomology(0, 3, -1, 1, 3)
    with pytest.raises(ValueError):
        divided_cohomology(0, 3, 1, -2, 3)
    with pytest.raises(ValueError):
        divided_cohomology(0, 3, 1, 1, 1)
    with pytest.raises(ValueError):
        divided_cohomology(0, 3, 1, 1, 3, method="nim")  # nim needs p = 2
    with pytest.raises(ValueError):
        divided_cohomology(0, 0, 1, 1, 3, method="oracle")  # oracle needs prime p


def test_oracle_size_guard(monkeypatch):
    monkeypatch.delenv("FLAGCOH_SIZE_GUARD", raising=False)
    with pytest.raises(SizeGuardExceeded):
        oracle_divided(0, 2, 13, 0, 3)
    monkeypatch.setenv("FLAGCOH_SIZE_GUARD", "100000000")
    assert dimension_of(oracle_divided(0, 2, 13, 0, 3)) >= 0
