import pytest

from monohecke.group import GroupParams, iter_reduced_words, length, reduced_word
from monohecke.rpoly import leq, r_star
from monohecke.subexpr import (
    NotReduced, enumerate_distinguished, fibers, lower_ideal, r_star_closed, r_star_closed_all,
)


def test_single_generator():
    P = GroupParams(2, 3)
    subs = enumerate_distinguished([1], P)
    assert [sx.n_stat for sx in subs] == [0, 1, 1, 1]
    assert subs[0].end == P.s(1)


def test_not_reduced():
    with pytest.raises(NotReduced):
        enumerate_distinguished([1, 1], GroupParams(2, 2))


def test_json():
    sx = enumerate_distinguished([1], GroupParams(2, 2))[1]
    assert sx.to_json() == {"word": [1], "steps": ["e", "d(0,1)"], "n_stat": 1}


@pytest.mark.parametrize("n,b", [(3, 1), (3, 2), (3, 3), (4, 2)])
def test_every_reduced_word_gives_the_same_rstar(n, b):
    P = GroupParams(n, b)
    for w in P.perms():
        y = P.perm_element(w)
        words = list(iter_reduced_words(w))[:4]
        tables = [r_star_closed_all(y, P, word=list(wd) if wd else None) for wd in words]
        assert all(t == tables[0] for t in tables)


@pytest.mark.parametrize("n,b", [(3, 2), (3, 3)])
def test_closed_formula_matches_recursion(n, b):
    P = GroupParams(n, b)
    for w in P.perms():
        y = P.perm_element(w)
        word = reduced_word(w)
        for x in P.elements():
            assert r_star_closed(x, word, P) == r_star(x, y, P)


@pytest.mark.parametrize("n,b", [(3, 2), (3, 4)])
def test_lower_ideal(n, b):
    P = GroupParams(n, b)
    for w in P.perms():
        y = P.perm_element(w)
        assert lower_ideal(reduced_word(w), P) == {x for x in P.elements() if leq(x, y, P)}


def test_fiber_statistics_parity():
    """X-steps keep the length and s-steps change it by one."""
    P = GroupParams(3, 2)
    word = (1, 2, 1)
    for y, subs in fibers(word, P).items():
        for sx in subs:
            assert len(sx.steps) == 4
            assert sx.n_stat <= 3 - length(y)
            assert (3 - length(y) - sx.n_stat) % 2 == 0
