"""Weak order on integer binary relations and integer posets.

Relations on [n] are stored as bit masks of their increasing and
decreasing pairs.  The package covers the lattice operations at each
level (relations, antisymmetric, semitransitive, transitive, posets), the
permutree poset families, their deletion projections, and a brute-force
oracle used to certify all of it on small n.
"""

from .families import Family, FamilyId, Orientation, is_member
from .perms import OrderedPartition, Permutation, WOInterval
from .relation import IntRelation, RelationError, parse_relation
from .weak_order import LatticeLevel, join, meet, wo_leq

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FamilyId",
    "IntRelation",
    "LatticeLevel",
    "OrderedPartition",
    "Orientation",
    "Permutation",
    "RelationError",
    "WOInterval",
    "is_member",
    "join",
    "meet",
    "parse_relation",
    "wo_leq",
]
