import pytest
from hypothesis import given, settings, strategies as st

from treelang import contraction as ct, morphism as mw
from treelang.dyck import NotDyckError, dyck_to_planar_tree
from treelang.morphism import MorphismWord
from treelang.verify import WORKED_ENCODED, worked_contraction

from conftest import planar_trees, small_trees


def test_parse_forms_agree():
    a = MorphismWord.parse("u0 d0 u1 d1")
    assert MorphismWord.parse("u0d0u1d1") == a
    assert MorphismWord.parse("u_0 d_0 u_1 d_1") == a
    assert a.tokens == ("u0", "d0", "u1", "d1")
    assert a.directions == "udud"
    assert str(a) == "u0 d0 u1 d1" and a.compact() == "u0d0u1d1"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        MorphismWord.parse("u0 x1")


def test_worked_encoding():
    assert mw.encode(worked_contraction()).compact() == WORKED_ENCODED


def test_identity_on_edge_labels_both_letters_by_child(edge):
    # both letters of a source edge carry the image of its child endpoint
    assert str(mw.encode(ct.identity(edge))) == "u1 d1"


def test_decode_basic(edge):
    c = mw.decode(MorphismWord.parse("u0 d0 u1 d1"), edge)
    assert c.vertex_map == (0, 0, 1)
    assert c.source == dyck_to_planar_tree("udud")


def test_decode_errors(edge):
    with pytest.raises(NotDyckError):
        mw.decode(MorphismWord.parse("d0 u0"), edge)
    with pytest.raises(ValueError):
        mw.decode(MorphismWord.parse("u1 d0"), edge)
    with pytest.raises(ValueError):
        mw.decode(MorphismWord.parse("u2 d2"), edge)


@settings(max_examples=60)
@given(planar_trees(max_edges=5), st.data())
def test_encode_decode_round_trip(source, data):
    targets = small_trees(min(source.n_edges, 3))
    target = dyck_to_planar_tree(data.draw(st.sampled_from(targets)))
    cs = ct.enumerate_planar_contractions(source, target)
    if not cs:
        return
    c = data.draw(st.sampled_from(cs))
    w = mw.encode(c)
    assert len(w) == 2 * source.n_edges
    assert mw.decode(w, target) == c


def test_matching():
    assert mw.matching("uudd") == [(0, 3), (1, 2)]
    assert mw.matching(MorphismWord.parse("u0d0u1d1")) == [(0, 1), (2, 3)]


def test_language_of_edge(edge):
    words = [str(w) for w in mw.language_LT(edge, 2)]
    assert words == ["u1 d1", "u0 d0 u1 d1", "u0 u1 d1 d0", "u1 d1 u0 d0", "u1 u1 d1 d1"]


def test_strong_containment():
    big = MorphismWord.parse("u0 u0 d0 d0 u1 u1 d1 d1")
    assert mw.strong_contains(big, MorphismWord.parse("u0 d0 u1 d1"))
    assert mw.strong_contains(big, MorphismWord.parse("u1 u1 d1 d1"))
    # a subword but not along matched pairs
    assert not mw.strong_contains(big, MorphismWord.parse("u0 d0 d0"))
    assert not mw.strong_contains(MorphismWord.parse("u0 d0 u1 d1"),
                                  MorphismWord.parse("u0 u1 d1 d0"))
    assert mw.strong_embeddings(big, MorphismWord.parse("u1 d1")) == [((4, 7),), ((5, 6),)]


def test_sections_of_worked_example(edge):
    w = MorphismWord.parse("u0u0d0u1u1d1d1d0")
    assert mw.sections(w, edge) == [("initial", [0, 1, 2, 3]), ("e1,u", [4, 5, 6]),
                                    ("e1,d", [7])]


def test_sections_of_rejected_word(edge):
    with pytest.raises(ValueError):
        mw.sections(MorphismWord.parse("u0 d0"), edge)
