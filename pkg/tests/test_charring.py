import itertools
import json
import math
import random

import pytest

from flagcoh.charring import (
    CharacterPoly,
    complete_h,
    dimension_of,
    dualize,
    frobenius_twist,
    nim_poly,
    schur_two_row,
    truncated_h,
    truncated_schur,
    _mul_dict,
)


def poly(n, terms, laurent=False):
    return CharacterPoly(n, terms, laurent)


def test_complete_h_small_expansions():
    assert complete_h(2, 3) == poly(2, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1})
    assert complete_h(3, 0) == CharacterPoly.one(3)
    assert complete_h(4, -1).is_zero()


def test_complete_h_dimension_is_binomial():
    for n in range(1, 6):
        for d in range(0, 9):
            assert dimension_of(complete_h(n, d)) == math.comb(n + d - 1, d)


def test_complete_h_convolution_route_matches():
    # The constructor switches to convolution for d > 64.
    direct = {e: 1 for e in itertools.product(range(66), repeat=2) if sum(e) == 65}
    assert complete_h(2, 65).terms == direct


def test_truncated_h():
    assert truncated_h(2, 2, 2) == poly(2, {(1, 1): 1})
    assert truncated_h(5, 5, 2) == poly(5, {(1, 1, 1, 1, 1): 1})
    assert truncated_h(3, 7, 3).is_zero()
    # agrees with complete_h whenever the cap is inactive
    for n in range(1, 5):
        for d in range(0, 6):
            for p in range(d + 1, d + 4):
                assert truncated_h(n, d, p) == complete_h(n, d)


def test_schur_two_row():
    assert schur_two_row(2, 1, 1) == poly(2, {(1, 1): 1})
    assert schur_two_row(3, 2, 0) == complete_h(3, 2)
    # invalid adjacent shape collapses to zero
    assert schur_two_row(3, 1, 2).is_zero()


def test_truncated_schur():
    e5e1 = {}
    for i in range(5):
        e = [1] * 5
        e[i] += 1
        e5e1[tuple(e)] = 1
    assert truncated_schur(5, 2, 5, 1) == poly(5, e5e1)
    assert truncated_schur(2, 1, 0, 0) == CharacterPoly.one(2)
    assert truncated_schur(3, 2, 9, 0).is_zero()


def test_nim_poly():
    assert nim_poly(2, 1) == poly(2, {(1, 1): 1})
    assert nim_poly(3, 1) == poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert nim_poly(2, 0) == CharacterPoly.one(2)


def test_nim_poly_brute_force_and_unit_coefficients():
    for n in (2, 3, 4):
        for m in range(0, 4):
            expanded = {
                e: 1
                for e in itertools.product(range(2 * m + 1), repeat=n)
                if sum(e) == 2 * m
                and __import__("functools").reduce(lambda a, b: a ^ b, e, 0) == 0
            }
            got = nim_poly(n, m)
            assert got.terms == expanded
            assert all(c == 1 for c in got.terms.values())


def test_frobenius_twist():
    f = poly(2, {(1, 0): 1, (0, 1): 1})
    assert frobenius_twist(f, 3) == poly(2, {(3, 0): 1, (0, 3): 1})
    assert frobenius_twist(CharacterPoly.one(4), 5) == CharacterPoly.one(4)


def test_frobenius_twist_is_ring_map():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 3)
        p = rng.choice((2, 3, 5))
        f = _random_poly(rng, n)
        g = _random_poly(rng, n)
        assert frobenius_twist(f + g, p) == frobenius_twist(f, p) + frobenius_twist(g, p)
        assert frobenius_twist(f * g, p) == frobenius_twist(f, p) * frobenius_twist(g, p)


def test_dualize():
    f = poly(2, {(2, 1): 1})
    assert dualize(f) == poly(2, {(-2, -1): 1}, laurent=True)
    g = _random_poly(random.Random(9), 3)
    assert dualize(dualize(g)) == g
    assert dimension_of(dualize(g)) == dimension_of(g)


def test_dimension_of():
    assert dimension_of(complete_h(2, 3)) == 4
    assert dimension_of(CharacterPoly.zero(3)) == 0


def test_arithmetic_identities():
    h1 = complete_h(2, 1)
    assert h1 * h1 - complete_h(2, 2) == poly(2, {(1, 1): 1})
    f = _random_poly(random.Random(1), 3)
    assert (f + (-f)).is_zero()
    z = poly(1, {(1,): 1})
    zinv = poly(1, {(-1,): 1}, laurent=True)
    assert z * zinv == CharacterPoly.one(1)


def test_variable_count_mismatch_rejected():
    with pytest.raises(ValueError):
        complete_h(2, 1) + complete_h(3, 1)
    with pytest.raises(ValueError):
        complete_h(2, 1) * complete_h(3, 1)


def test_constructors_are_symmetric():
    rng = random.Random(3)
    for f in (complete_h(4, 5), truncated_h(4, 6, 3), nim_poly(4, 2), schur_two_row(3, 4, 2)):
        perm = list(range(f.n))
        rng.shuffle(perm)
        permuted = {
            tuple(e[perm[i]] for i in range(f.n)): c for e, c in f.terms.items()
        }
        assert permuted == f.terms


def test_packed_mul_matches_dict_mul():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(1, 7)
        f = _random_poly(rng, n, laurent=True)
        g = _random_poly(rng, n, laurent=True)
        assert (f * g).terms == _mul_dict(f.terms, g.terms)


def test_render_and_json():
    f = poly(2, {(2, 1): 3, (0, 0): -1, (1, 0): 1})
    assert f.render() == "3*z1^2*z2 + z1 - 1"
    data = json.loads(f.to_json())
    assert data["terms"][0] == {"e": [2, 1], "c": 3}
    assert CharacterPoly.from_json_dict(data) == f
    assert CharacterPoly.zero(2).render() == "0"


def test_sorted_terms_descending_lex():
    f = complete_h(3, 2)
    exps = [e for e, _ in f.sorted_terms()]
    assert exps == sorted(exps, reverse=True)


def _random_poly(rng, n, laurent=False):
    lo = -3 if laurent else 0
    terms = {}
    for _ in range(rng.randint(1, 8)):
        e = tuple(rng.randint(lo, 4) for _ in range(n))
        terms[e] = rng.randint(-5, 5) or 1
    return CharacterPoly(n, terms, laurent)
