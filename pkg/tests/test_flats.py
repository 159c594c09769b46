import pytest

from treelang import flats, trees
from treelang.dyck import dyck_to_planar_tree

from conftest import small_trees
import oracles


@pytest.mark.parametrize("word", small_trees(3))
def test_counts_match_matroid_oracle(word):
    T = dyck_to_planar_tree(word)
    g = flats.cone(T)
    by_rank = oracles.matroid_flats_by_rank(g.n_vertices, g.edges)
    top = max(by_rank)
    assert by_rank[1] == flats.rank1_flat_count(g)
    if top >= 2:
        assert by_rank[top - 1] == flats.corank1_flat_count(g)


@pytest.mark.parametrize("word,expected", [
    ("", (1, 1, 0)), ("ud", (3, 3, 0)), ("uudd", (5, 6, 1)),
    ("udud", (5, 6, 1)), ("uuuddd", (7, 10, 3)),
])
def test_small_values(word, expected):
    T = dyck_to_planar_tree(word)
    g = flats.cone(T)
    assert (flats.rank1_flat_count(g), flats.corank1_flat_count(g), flats.kl1_formula(T)) == expected


@pytest.mark.parametrize("word", small_trees(5))
def test_kl1_from_subtrees(word):
    T = dyck_to_planar_tree(word)
    assert flats.kl1_formula(T) == flats.kl1_from_subtrees(T)
    assert flats.corank1_flat_count(flats.cone(T)) == trees.subtree_count(T)


def test_cone_shape(y_tree):
    g = flats.cone(y_tree)
    assert g.apex == 4 and len(g.edges) == 3 + 4


def test_disconnected_graph_rejected():
    with pytest.raises(ValueError):
        flats.corank1_flat_count(flats.ConeGraph(3, ((0, 1),)))
