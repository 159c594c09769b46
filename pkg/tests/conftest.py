import pytest
from hypothesis import strategies as st

from treelang.dyck import dyck_to_planar_tree, enumerate_dyck


@st.composite
def dyck_words(draw, max_edges=6):
    """Shuffle n ups and n downs; drop downs that would go below zero and close at the end."""
    n = draw(st.integers(0, max_edges))
    steps = draw(st.permutations(["u"] * n + ["d"] * n))
    out, height = [], 0
    for s in steps:
        if s == "u":
            out.append("u")
            height += 1
        elif height:
            out.append("d")
            height -= 1
    out += ["d"] * height
    return "".join(out)


@st.composite
def planar_trees(draw, max_edges=6):
    return dyck_to_planar_tree(draw(dyck_words(max_edges)))


def small_trees(max_edges):
    return [w for n in range(max_edges + 1) for w in enumerate_dyck(n)]


@pytest.fixture
def edge():
    return dyck_to_planar_tree("ud")


@pytest.fixture
def y_tree():
    return dyck_to_planar_tree("uududd")
