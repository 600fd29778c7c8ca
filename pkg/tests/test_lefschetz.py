import itertools

import pytest

from flagcoh.exactla import rank_exact_integer, rank_mod_p
from flagcoh.lefschetz import (
    DualGenerator,
    MonomialIdeal,
    has_slp_ci,
    has_wlp_ci,
    has_wlp_gorenstein,
    has_wlp_monomial,
    monomial_cis_without_wlp,
    sperner_number,
)


def test_paper_wlp_slp_verdicts():
    assert has_wlp_ci(7, [3, 4, 6, 8]) is False
    assert has_wlp_ci(7, [3, 4, 6, 13]) is True
    assert has_slp_ci(7, [3, 4, 6, 13]) is False
    assert has_wlp_ci(3, [3, 4, 6]) is True
    assert has_slp_ci(3, [3, 4, 6]) is False


def test_characteristic_zero_shortcuts():
    assert has_wlp_ci(0, [2, 5, 9, 14]) is True
    assert has_slp_ci(0, [2, 5, 9, 14]) is True
    assert has_wlp_ci(5, [4, 9]) is True  # n <= 2


def test_sperner_number():
    assert sperner_number([3, 4, 6]) == 12
    assert sperner_number([2]) == 1
    assert sperner_number([2, 2]) == 2


def test_wlp_methods_agree():
    for p in (2, 3, 5, 7):
        for n in (3, 4):
            for exps in itertools.combinations_with_replacement(range(1, 7), n):
                assert has_wlp_ci(p, exps) == has_wlp_ci(p, exps, "sperner"), (p, exps)


def test_slp_methods_agree_and_imply_wlp():
    for p in (2, 3, 5, 7):
        for n in (2, 3):
            for exps in itertools.combinations_with_replacement(range(1, 7), n):
                slp = has_slp_ci(p, exps)
                assert slp == has_slp_ci(p, exps, "partial-products"), (p, exps)
                if slp:
                    assert has_wlp_ci(p, exps), (p, exps)


def test_monomial_cis_without_wlp_paper_list():
    assert monomial_cis_without_wlp(5, 4, 10) == [
        [2, 2, 5, 5],
        [2, 3, 4, 5],
        [2, 4, 4, 4],
        [3, 3, 3, 5],
        [3, 3, 4, 4],
    ]
    assert monomial_cis_without_wlp(0, 4, 10) == []
    assert monomial_cis_without_wlp(7, 2, 9) == []


def test_monomial_cis_enumeration_is_complete():
    # every returned tuple fails both routes; every omitted tuple passes
    p, n, s = 5, 3, 7
    failing = {tuple(t) for t in monomial_cis_without_wlp(p, n, s)}
    for tup in itertools.combinations_with_replacement(range(2, s + 1), n):
        if sum(tup) - n != s:
            continue
        wlp = has_wlp_ci(p, tup)
        assert wlp == has_wlp_ci(p, tup, "sperner")
        assert (tuple(tup) in failing) == (not wlp)


def test_monomial_ideal_construction():
    ideal = MonomialIdeal(2, [(2, 0), (0, 2), (2, 2)])
    assert ideal.generators == [(0, 2), (2, 0)]  # minimalized
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(1, 1)])  # not Artinian
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(0, 0)])


def test_wlp_monomial_paper_example():
    ideal = MonomialIdeal(3, [(9, 0, 0), (0, 9, 0), (0, 0, 9), (3, 3, 3)])
    assert has_wlp_monomial(0, ideal) is False


def test_wlp_monomial_small_cases():
    assert has_wlp_monomial(0, MonomialIdeal(2, [(2, 0), (0, 2)])) is True
    for p in (0, 2, 7):
        assert has_wlp_monomial(p, MonomialIdeal(1, [(1,)])) is True


def test_wlp_monomial_agrees_with_ci_on_pure_powers():
    for p in (0, 2, 3, 5):
        for n in (2, 3):
            for exps in itertools.combinations_with_replacement(range(1, 7), n):
                gens = []
                for t, e in enumerate(exps):
                    g = [0] * n
                    g[t] = e
                    gens.append(tuple(g))
                ideal = MonomialIdeal(n, gens)
                assert has_wlp_monomial(p, ideal) == has_wlp_ci(p, exps), (p, exps)


def test_char_zero_monomial_ranks_match_large_primes():
    # exact integer ranks agree with reductions at two large primes on the
    # multiplication matrices of the paper's almost complete intersection
    ideal = MonomialIdeal(3, [(9, 0, 0), (0, 9, 0), (0, 0, 9), (3, 3, 3)])
    levels = ideal.standard_monomials()
    for deg in range(max(levels)):
        dom = levels.get(deg, [])
        cod = levels.get(deg + 1, [])
        if not dom or not cod:
            continue
        index = {m: i for i, m in enumerate(cod)}
        matrix = [[0] * len(dom) for _ in cod]
        for ci, mono in enumerate(dom):
            for t in range(3):
                target = mono[:t] + (mono[t] + 1,) + mono[t + 1 :]
                if target in index:
                    matrix[index[target]][ci] = 1
        exact = rank_exact_integer(matrix)
        assert exact == rank_mod_p(matrix, 2**31 - 1)
        assert exact == rank_mod_p(matrix, 10**9 + 7)


def test_gorenstein_paper_example():
    dual = DualGenerator(5, [(1, (4, 1, 1, 0, 1)), (1, (2, 2, 0, 1, 2))])
    assert has_wlp_gorenstein(0, dual) is False


def test_gorenstein_easy_cases():
    assert has_wlp_gorenstein(0, DualGenerator(1, [(1, (6,))])) is True
    assert has_wlp_gorenstein(0, DualGenerator(3, [(1, (5, 0, 0))])) is True
    assert has_wlp_gorenstein(0, DualGenerator(2, [(1, (1, 1))])) is True


def test_gorenstein_matches_ci_route_on_pure_monomials():
    # x1^{a_1-1} ... x_n^{a_n-1} presents the monomial complete intersection
    for p in (0, 3, 5):
        for exps in itertools.combinations_with_replacement(range(2, 5), 3):
            dual = DualGenerator(3, [(1, tuple(a - 1 for a in exps))])
            assert has_wlp_gorenstein(p, dual) == has_wlp_ci(p, exps), (p, exps)


def test_gorenstein_validation():
    with pytest.raises(ValueError):
        DualGenerator(2, [(1, (1, 0)), (1, (2, 0))])  # inhomogeneous
    with pytest.raises(ValueError):
        DualGenerator(2, [(1, (1, 1)), (-1, (1, 1))])  # zero
    with pytest.raises(TypeError):
        has_wlp_gorenstein(0, "x1*x2")


def test_ci_validation():
    with pytest.raises(ValueError):
        has_wlp_ci(6, [2, 2, 2])
    with pytest.raises(ValueError):
        has_wlp_ci(3, [])
    with pytest.raises(ValueError):
        has_slp_ci(3, [0, 2])
    with pytest.raises(ValueError):
        monomial_cis_without_wlp(3, 0, 5)
