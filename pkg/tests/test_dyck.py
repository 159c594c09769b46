from math import comb

import pytest
from hypothesis import given

from treelang import dyck, trees

from conftest import dyck_words


@pytest.mark.parametrize("n", range(13))
def test_catalan_numbers(n):
    assert dyck.catalan(n) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(9))
def test_enumeration_size_and_order(n):
    words = dyck.enumerate_dyck(n)
    assert len(words) == dyck.catalan(n)
    assert words == sorted(words, key=lambda w: w.replace("u", "0").replace("d", "1"))
    assert len(set(words)) == len(words)


def test_small_enumerations():
    assert dyck.enumerate_dyck(0) == [""]
    assert dyck.enumerate_dyck(2) == ["uudd", "udud"]


@pytest.mark.parametrize("bad", ["d", "du", "udd", "uud", "uxd"])
def test_non_dyck_rejected(bad):
    assert not dyck.validate_dyck(bad)
    with pytest.raises(dyck.NotDyckError):
        dyck.dyck_to_planar_tree(bad)


def test_y_word():
    t = dyck.dyck_to_planar_tree("uududd")
    assert t.children == ((1,), (2, 3), (), ())


@given(dyck_words(max_edges=8))
def test_bijection_round_trip(w):
    t = dyck.dyck_to_planar_tree(w)
    assert trees.validate(t)
    assert t.n_edges == len(w) // 2
    assert dyck.planar_tree_to_dyck(t) == w


def test_multiplicities_of_four_edges():
    mult = dyck.p_multiplicity(4)
    assert sorted(mult.values()) == [2, 4, 8]
    assert sum(mult.values()) == 14
