"""Planar rooted trees, their contractions, and the automata reading them."""

from .contraction import Contraction, compose, enumerate_planar_contractions
from .dyck import catalan, dyck_to_planar_tree, enumerate_dyck, planar_tree_to_dyck
from .morphism import MorphismWord, decode, encode, strong_contains
from .trees import PlanarRootedTree

__all__ = [
    "Contraction",
    "MorphismWord",
    "PlanarRootedTree",
    "catalan",
    "compose",
    "decode",
    "dyck_to_planar_tree",
    "encode",
    "enumerate_dyck",
    "enumerate_planar_contractions",
    "planar_tree_to_dyck",
    "strong_contains",
]
