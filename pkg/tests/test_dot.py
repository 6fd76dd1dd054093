from intposets.dot import hasse_dot, poset_dot, poset_hasse_edges
from intposets.families import Family, FamilyId
from intposets.oracle import enumerate_family, enumerate_level
from intposets.perms import Permutation, chain
from intposets.weak_order import LatticeLevel


def test_chain_hasse_is_a_path():
    r = chain(Permutation.parse("123"))
    assert poset_hasse_edges(r) == [(1, 2), (2, 3)]
    dot = poset_dot(r)
    assert "1 -> 2;" in dot and "2 -> 3;" in dot and "1 -> 3;" not in dot


def test_universe_dot_sizes():
    dot = hasse_dot(enumerate_level(LatticeLevel.POSET, 3))
    assert dot.count("[label=") == 19
    hexagon = hasse_dot(enumerate_family(FamilyId(Family.WOEP), 3))
    assert hexagon.count("[label=") == 6
    assert hexagon.count(" -> ") == 6
