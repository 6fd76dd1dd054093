import itertools

import pytest
from hypothesis import given, strategies as st

from intposets.oracle import brute_join, brute_meet
from intposets.perms import (
    OrderedPartition,
    Permutation,
    WOInterval,
    all_ordered_partitions,
    all_permutations,
    chain,
    facial_covers,
    from_chain,
    interval_poset,
    inversions,
    linear_extensions,
    maxle,
    minle,
    partition_leq,
    partition_poset,
    perm_join,
    perm_leq,
    perm_meet,
    versions,
)
from intposets.relation import IntRelation, RelationError, full_increasing, parse_relation, transitive_closure

from .strategies import posets

P = parse_relation
perm = Permutation.parse


def test_parse_and_format():
    assert perm("231").word == (2, 3, 1)
    assert perm("2,3,1") == perm("231")
    big = Permutation(tuple(range(10, 0, -1)))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.parse(str(big)) == big
    with pytest.raises(RelationError):
        perm("1224")


def test_inversions_and_versions():
    s = perm("2751346")
    assert {(2, 1), (7, 5), (5, 4)} <= inversions(s)
    assert {(1, 3), (1, 4), (5, 6)} <= versions(s)
    assert chain(s).dec_pairs() == sorted([(2, 1), (5, 1), (5, 3), (5, 4), (7, 1), (7, 3), (7, 4), (7, 5), (7, 6)],
                                          key=lambda p: (p[1], p[0]))


def test_identity_and_counts():
    e = Permutation(tuple(range(1, 5)))
    assert inversions(e) == set() and len(versions(e)) == 6
    assert chain(e) == full_increasing(4)
    for s in all_permutations(4):
        assert len(versions(s)) + len(inversions(s)) == 6
        assert from_chain(chain(s)) == s


def test_chain_poset():
    assert str(chain(perm("231"))) == "n=3; inc: 2<3; dec: 2>1, 3>1"


def test_weak_order_on_permutations():
    s, t = perm("231"), perm("312")
    assert perm_meet(s, t) == perm("123")
    assert perm_join(s, t) == perm("321")
    assert perm_meet(s, perm("123")) == perm("123")
    perms = list(all_permutations(3))
    chains = [chain(p) for p in perms]
    for a, b in itertools.product(perms, repeat=2):
        assert chain(perm_meet(a, b)) == brute_meet(chains, chain(a), chain(b))
        assert chain(perm_join(a, b)) == brute_join(chains, chain(a), chain(b))


def test_interval_poset_and_extensions():
    iv = WOInterval(perm("1324"), perm("3421"))
    r = interval_poset(iv)
    assert str(r) == "n=4; inc: 3<4; dec: 3>2"
    exts = {str(p) for p in linear_extensions(r)}
    assert exts == {"1324", "1342", "3124", "3142", "3214", "3241", "3412", "3421"}
    assert minle(r) == perm("1324") and maxle(r) == perm("3421")


def test_interval_edge_cases():
    s = perm("2413")
    assert interval_poset(WOInterval(s, s)) == chain(s)
    top = Permutation((4, 3, 2, 1))
    assert interval_poset(WOInterval(perm("1234"), top)) == IntRelation(4)
    with pytest.raises(RelationError):
        WOInterval(perm("321"), perm("123"))
    assert WOInterval.parse("[1324:3421]") == WOInterval.parse("1324;3421") == iv_text()


def iv_text():
    return WOInterval(perm("1324"), perm("3421"))


def test_linear_extensions_basics():
    assert linear_extensions(chain(perm("3142"))) == [perm("3142")]
    assert len(linear_extensions(IntRelation(4))) == 24


def test_maxle_example():
    r = P("n=4; inc: 1<2, 1<3, 1<4; dec: 4>2")
    assert maxle(r) == perm("1432")
    assert chain(maxle(r)).dec_pairs() == [(3, 2), (4, 2), (4, 3)]


@given(posets(n_max=6))
def test_minle_maxle_are_extremal(r):
    exts = linear_extensions(r)
    assert exts
    from intposets.families import is_dwoip, is_iwoip

    if is_iwoip(r):
        assert max(exts, key=lambda p: len(inversions(p))) == maxle(r)
        assert all(perm_leq(p, maxle(r)) for p in exts)
    if is_dwoip(r):
        assert all(perm_leq(minle(r), p) for p in exts)


def test_partition_poset_example():
    r = partition_poset(OrderedPartition.parse("125|37|46"))
    assert {(1, 3), (1, 4), (1, 6), (1, 7)} <= set(r.inc_pairs())
    assert {(5, 3), (5, 4), (7, 4), (7, 6)} <= set(r.dec_pairs())
    assert partition_poset(OrderedPartition.parse("1234")) == IntRelation(4)
    assert partition_poset(OrderedPartition.parse("1|2|3|4")) == full_increasing(4)


def test_ordered_partitions():
    assert sum(1 for _ in all_ordered_partitions(3)) == 13
    pi = OrderedPartition.parse("125|37|46")
    assert str(pi) == "125|37|46" and pi.block_of()[7] == 1
    with pytest.raises(RelationError):
        OrderedPartition.parse("12|23")


def test_facial_covers_small():
    assert facial_covers(OrderedPartition.parse("1|2")) == [OrderedPartition.parse("12")]
    assert facial_covers(OrderedPartition.parse("12")) == [OrderedPartition.parse("2|1")]
    assert facial_covers(OrderedPartition.parse("3|2|1")) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_facial_covers_generate_the_order(n):
    parts = list(all_ordered_partitions(n))
    up = {p: set(facial_covers(p)) for p in parts}
    for p in parts:
        reach, stack = {p}, [p]
        while stack:
            for q in up[stack.pop()]:
                if q not in reach:
                    reach.add(q)
                    stack.append(q)
        assert reach == {q for q in parts if partition_leq(p, q)}


@given(st.permutations(range(1, 6)))
def test_chain_is_total_order(word):
    r = chain(Permutation(tuple(word)))
    assert transitive_closure(r) == r
    assert len(r) == 10
