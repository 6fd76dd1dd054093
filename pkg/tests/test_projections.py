import pytest
from hypothesis import given

from intposets.families import EPSILONS, Family, FamilyId, Orientation, interior_orientations, is_member
from intposets.oracle import FiniteOrder, brute_meet, enumerate_family, enumerate_level
from intposets.perms import OrderedPartition, Permutation, WOInterval, all_permutations, chain, linear_extensions
from intposets.perms import interval_poset, partition_poset
from intposets.projections import (
    dpip_dd,
    dwoip_dd,
    family_join,
    family_meet,
    insert_interval,
    insert_permutree,
    insert_schroder,
    ipip_id,
    iwoip_id,
    pfp_addition,
    pip_d,
    toip_d,
    woip_d,
    woip_join,
    woip_meet,
)
from intposets.relation import IntRelation, RelationError, parse_relation, strict_pairs
from intposets.weak_order import LatticeLevel, meet, wo_leq

from .strategies import poset_tuples, posets

P = parse_relation
perm = Permutation.parse
DELETION_POSET = P("n=6; inc: 1<2, 1<4, 1<5, 3<5; dec: 6>5, 6>4, 6>2, 6>1, 4>2, 3>2")
MIXED_O = Orientation(6, frozenset({4}), frozenset({1, 3, 4, 6}))
MIXED_POSET = P("n=6; inc: 1<2, 1<3, 1<4, 1<5, 3<5, 4<5; dec: 6>5, 6>4, 6>3, 6>2, 6>1, 4>3, 4>2")


def test_iwoip_dwoip_woip_deletions():
    assert str(iwoip_id(DELETION_POSET)) == "n=6; inc: 1<2; dec: 6>1, 3>2, 4>2, 6>2, 6>4, 6>5"
    assert str(dwoip_dd(DELETION_POSET)) == "n=6; inc: 1<2, 1<4, 1<5, 3<5; dec: 3>2, 4>2, 6>2, 6>4, 6>5"
    assert str(woip_d(DELETION_POSET)) == "n=6; inc: 1<2; dec: 3>2, 4>2, 6>2, 6>4, 6>5"
    assert dwoip_dd(iwoip_id(DELETION_POSET)) == woip_d(DELETION_POSET)


def test_two_sided_deletions_mixed_orientation():
    o = MIXED_O
    assert str(ipip_id("±", o, MIXED_POSET)) == "n=6; inc: 1<2, 1<3, 4<5; dec: 6>1, 4>2, 6>2, 4>3, 6>3, 6>4, 6>5"
    assert str(dpip_dd("±", o, MIXED_POSET)) == "n=6; inc: 1<2, 1<3, 1<4, 1<5, 3<5, 4<5; dec: 4>3, 6>3, 6>4, 6>5"
    assert str(pip_d(o, MIXED_POSET)) == "n=6; inc: 1<2, 1<3, 4<5; dec: 4>3, 6>3, 6>4, 6>5"


def test_one_shot_deletion_can_remove_everything():
    n = 5
    r = IntRelation.from_pairs(n, [(i, j) for i, j in strict_pairs(n) if i + 1 < j])
    assert iwoip_id(r) == IntRelation(n)


def test_one_sided_deletions_do_not_compose_to_the_two_sided_one():
    o = Orientation(4, frozenset({3}), frozenset({2}))
    r = IntRelation.from_pairs(4, [(1, 3), (2, 4), (1, 4)])
    plus, minus = ipip_id("+", o, r), ipip_id("-", o, r)
    assert plus == IntRelation.from_pairs(4, [(1, 3), (1, 4)])
    assert minus == IntRelation.from_pairs(4, [(1, 4), (2, 4)])
    assert ipip_id("±", o, r) == IntRelation(4)
    assert plus & minus == IntRelation.from_pairs(4, [(1, 4)])


@given(posets(n_max=6))
def test_one_sided_deletion_is_two_sided_with_half_orientation(r):
    n = r.n
    for o in (Orientation.boolean(n), Orientation(n, frozenset(range(2, n, 2)), frozenset(range(1, n, 3)))):
        assert ipip_id("+", o, r) == ipip_id("±", Orientation(n, o.up, frozenset()), r)
        assert ipip_id("-", o, r) == ipip_id("±", Orientation(n, frozenset(), o.down), r)
        assert dpip_dd("+", o, r) == dpip_dd("±", Orientation(n, o.up, frozenset()), r)
        assert dpip_dd("-", o, r) == dpip_dd("±", Orientation(n, frozenset(), o.down), r)


@given(posets(n_max=6))
def test_deletions_land_in_their_family(r):
    n = r.n
    assert is_member(FamilyId(Family.IWOIP), iwoip_id(r))
    assert is_member(FamilyId(Family.DWOIP), dwoip_dd(r))
    assert is_member(FamilyId(Family.WOIP), woip_d(r))
    for o in (Orientation.trivial(n), Orientation.tamari(n), Orientation.boolean(n)):
        for eps in EPSILONS:
            assert is_member(FamilyId(Family.IPIP, o, eps), ipip_id(eps, o, r))
            assert is_member(FamilyId(Family.DPIP, o, eps), dpip_dd(eps, o, r))
        out = pip_d(o, r)
        assert is_member(FamilyId(Family.PIP, o), out)
        assert wo_leq(r, iwoip_id(r)) and wo_leq(dwoip_dd(r), r)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_deletions_are_the_nearest_family_members(n):
    """IWOIPid is the smallest IWOIP poset above, DWOIPdd the largest one below."""
    universe = enumerate_level(LatticeLevel.POSET, n)
    iw = enumerate_family(FamilyId(Family.IWOIP), n)
    dw = enumerate_family(FamilyId(Family.DWOIP), n)
    for r in universe:
        above = [s for s in iw if wo_leq(r, s)]
        assert all(wo_leq(iwoip_id(r), s) for s in above) and iwoip_id(r) in above
        below = [s for s in dw if wo_leq(s, r)]
        assert all(wo_leq(s, dwoip_dd(r)) for s in below) and dwoip_dd(r) in below


def test_fixpoints():
    for r in enumerate_family(FamilyId(Family.WOIP), 4):
        assert woip_d(r) == r
    o = Orientation(4, frozenset({2}), frozenset({3}))
    for r in enumerate_family(FamilyId(Family.PIP, o), 4):
        assert pip_d(o, r) == r


def test_insertion_examples():
    s = perm("2413")
    assert insert_permutree(Orientation.trivial(4), s) == chain(s)
    assert str(insert_permutree(Orientation.tamari(3), perm("312"))) == "n=3; inc: 1<2; dec: 3>2"
    o = Orientation(4, frozenset({2}), frozenset({3}))
    assert insert_interval(o, WOInterval(s, s)) == insert_permutree(o, s)
    with pytest.raises(RelationError):
        insert_permutree(Orientation.trivial(3), s)


def test_fibers_partition_s4():
    o = Orientation(4, frozenset({2}), frozenset({2, 3}))
    images = {insert_permutree(o, s) for s in all_permutations(4)}
    assert sum(len(linear_extensions(r)) for r in images) == 24


def test_tamari_face_insertion():
    pi = OrderedPartition.parse("125|37|46")
    want = "n=7; inc: 1<3, 1<4, 2<3, 2<4, 3<4, 5<6; dec: 5>4, 7>6"
    assert str(insert_schroder(Orientation.tamari(7), pi)) == want
    assert str(toip_d(partition_poset(pi))) == want


def test_woip_not_closed_under_transitive_meet():
    a = interval_poset(WOInterval(perm("231"), perm("321")))
    b = interval_poset(WOInterval(perm("312"), perm("321")))
    assert str(meet(LatticeLevel.POSET, a, b)) == "n=3; inc: -; dec: 3>1"
    assert family_meet(FamilyId(Family.WOIP), a, b) == IntRelation(3)


def test_wofp_meet_differs_from_transitive():
    x = partition_poset(OrderedPartition.parse("2|13"))
    y = partition_poset(OrderedPartition.parse("123"))
    want = partition_poset(OrderedPartition.parse("12|3"))
    assert want == IntRelation.from_pairs(3, [(1, 3), (2, 3)])
    assert family_meet(FamilyId(Family.WOFP), x, y) == want
    assert str(meet(LatticeLevel.POSET, x, y)) == "n=3; inc: 2<3; dec: -"
    add = pfp_addition("inc", Orientation.trivial(3), woip_meet(x, y))
    assert add.converged and add.relation == want


def test_pep_not_closed_under_transitive_meet():
    o = Orientation(5, frozenset({2}), frozenset({4}))
    p = P("n=5; inc: 2<3; dec: 5>4, 4>1, 2>1, 4>3, 4>2, 5>1, 5>2, 5>3")
    q = P("n=5; inc: 3<4; dec: 5>4, 4>1, 3>1, 3>2, 2>1, 4>2, 5>1, 5>2")
    f = FamilyId(Family.PEP, o)
    assert str(meet(LatticeLevel.POSET, p, q)) == "n=5; inc: 2<3, 2<4, 3<4; dec: 2>1, 5>1, 5>4"
    assert str(family_meet(f, p, q)) == "n=5; inc: 2<3, 2<4, 3<4; dec: 2>1, 5>4"
    assert family_meet(f, p, q) == brute_meet(enumerate_family(f, 5), p, q)


def test_pfp_addition_fixpoint_and_direction():
    o = Orientation.tamari(4)
    for r in enumerate_family(FamilyId(Family.PFP, o), 4):
        res = pfp_addition("inc", o, r)
        assert res.converged and res.steps == 0 and res.relation == r
    with pytest.raises(ValueError):
        pfp_addition("up", o, IntRelation(4))


def test_pfp_addition_stall_is_reported():
    # at n = 4 the literal addition rule can stop outside the family
    a = P("n=4; inc: 2<3; dec: 2>1, 4>1, 4>3")
    b = P("n=4; inc: -; dec: 2>1, 3>1, 4>1")
    res = pfp_addition("inc", Orientation.trivial(4), woip_meet(a, b))
    assert not res.converged and res.reason
    f = FamilyId(Family.WOFP)
    assert family_meet(f, a, b) == brute_meet(enumerate_family(f, 4), a, b)
    assert str(family_meet(f, a, b)) == "n=4; inc: 2<3, 2<4; dec: 2>1"


def _families(n):
    fams = [FamilyId(Family.WOEP), FamilyId(Family.WOIP), FamilyId(Family.IWOIP), FamilyId(Family.DWOIP),
            FamilyId(Family.WOFP)]
    for o in interior_orientations(n):
        fams += [FamilyId(Family.PIP, o), FamilyId(Family.PEP, o), FamilyId(Family.PFP, o)]
        fams += [FamilyId(Family.IPIP, o, e) for e in EPSILONS]
        fams += [FamilyId(Family.DPIP, o, e) for e in EPSILONS]
    return fams


@pytest.mark.parametrize("n", [2, 3])
def test_family_operations_equal_brute_force(n):
    for f in _families(n):
        members = enumerate_family(f, n)
        order = FiniteOrder(members)
        for i, a in enumerate(order.items):
            for j in range(i, len(order.items)):
                b = order.items[j]
                assert family_meet(f, a, b) == order.items[order.meet_index(i, j)], str(f)
                assert family_join(f, a, b) == order.items[order.join_index(i, j)], str(f)


def test_family_operations_equal_brute_force_n4_sample():
    o = Orientation(4, frozenset({2}), frozenset({3}))
    for f in (FamilyId(Family.WOIP), FamilyId(Family.PIP, o), FamilyId(Family.IPIP, o, "+"),
              FamilyId(Family.DPIP, Orientation.trivial(4), "-"), FamilyId(Family.PFP, o)):
        order = FiniteOrder(enumerate_family(f, 4))
        items = order.items
        for i in range(0, len(items), 2):
            for j in range(i, len(items), 3):
                assert family_meet(f, items[i], items[j]) == items[order.meet_index(i, j)], str(f)
                assert family_join(f, items[i], items[j]) == items[order.join_index(i, j)], str(f)


def test_family_operations_reject_non_members():
    with pytest.raises(RelationError):
        family_meet(FamilyId(Family.WOIP), P("n=3; inc: 1<3; dec: -"), IntRelation(3))


@given(poset_tuples(2, n_max=6))
def test_woip_operations_stay_in_woip(pair):
    r, s = (woip_d(x) for x in pair)
    f = FamilyId(Family.WOIP)
    assert is_member(f, woip_meet(r, s)) and is_member(f, woip_join(r, s))
    assert woip_meet(r, r) == r and woip_join(r, r) == r
