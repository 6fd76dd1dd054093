import pytest
from hypothesis import given

from intposets.relation import (
    IntRelation,
    RelationError,
    classify,
    full_decreasing,
    full_increasing,
    is_poset,
    is_semitransitive,
    is_transitive,
    parse_relation,
    strict_pairs,
    transitive_closure,
)

from .strategies import relation_pairs, relations

P = parse_relation

CHAIN_REL_MEET = "n=4; inc: 1<2, 2<3; dec: 3>1, 4>1, 4>3"
CHAIN_ST_MEET = "n=4; inc: 1<2, 1<3, 2<3; dec: 3>1, 4>1, 4>3"


def test_full_relations():
    assert str(full_increasing(3)) == "n=3; inc: 1<2, 1<3, 2<3; dec: -"
    assert str(full_decreasing(2)) == "n=2; inc: -; dec: 2>1"
    assert full_increasing(1) == IntRelation(1) == full_decreasing(1)


def test_text_format_round_trip_and_order():
    r = P("n=4; inc: 2<3, 1<2; dec: 4>1, 3>1")
    assert str(r) == "n=4; inc: 1<2, 2<3; dec: 3>1, 4>1"
    assert P(str(r)) == r
    assert P("n=3;inc:-;dec:-") == IntRelation(3)


@pytest.mark.parametrize("text", ["", "n=0; inc: -; dec: -", "n=3; inc: 2<1; dec: -", "n=3; inc: 1<4; dec: -",
                                  "n=3; inc: 1<2; dec: 1>2", "n=3; inc 1<2", "n=12; inc: -; dec: -",
                                  "n=3; inc: 1<1; dec: -"])
def test_parse_rejects(text):
    with pytest.raises(RelationError):
        P(text)


def test_pairs_and_rows():
    r = P("n=3; inc: 1<3; dec: 3>2")
    assert r.pairs() == [(1, 3), (3, 2)]
    assert (1, 3) in r and (3, 1) not in r
    assert r.rel(2, 2) and r.rel(3, 2) and not r.rel(2, 3)
    assert IntRelation.from_rows(3, r.succ) == r
    assert r.comparable(2, 3) and not r.comparable(1, 2)


def test_transitive_closure_examples():
    assert str(transitive_closure(P("n=3; inc: 1<2, 2<3; dec: -"))) == "n=3; inc: 1<2, 1<3, 2<3; dec: -"
    # 1 R 3 R 2 forces the increasing pair (1, 2)
    assert str(transitive_closure(P("n=3; inc: 1<3; dec: 3>2"))) == "n=3; inc: 1<2, 1<3; dec: 3>2"


def _tc_oracle(r):
    """Floyd-Warshall on the boolean matrix."""
    n = r.n
    m = [[r.rel(u, v) for v in range(1, n + 1)] for u in range(1, n + 1)]
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                for j in range(n):
                    m[i][j] = m[i][j] or m[k][j]
    return IntRelation.from_pairs(n, [(i + 1, j + 1) for i in range(n) for j in range(n) if i != j and m[i][j]])


@given(relations())
def test_transitive_closure_matches_floyd_warshall(r):
    t = transitive_closure(r)
    assert t == _tc_oracle(r)
    assert is_transitive(t)
    assert transitive_closure(t) == t


def test_reverse():
    assert full_increasing(4).reverse() == full_decreasing(4)
    assert str(P("n=3; inc: 1<2; dec: 3>2").reverse()) == "n=3; inc: 2<3; dec: 2>1"


@given(relations())
def test_involutions(r):
    assert r.reverse().reverse() == r
    assert r.complement().complement() == r
    assert P(str(r)) == r


@given(relation_pairs())
def test_set_operations(pair):
    r, s = pair
    assert r & r == r and r | r == r
    assert (r & s).issubset(r) and r.issubset(r | s)
    assert set((r | s).pairs()) == set(r.pairs()) | set(s.pairs())
    assert set((r - s).pairs()) == set(r.pairs()) - set(s.pairs())


def test_rel_meet_is_not_semitransitive():
    r = P("n=4; inc: 1<2; dec: 3>2, 4>3, 4>2, 3>1, 4>1")
    s = P("n=4; inc: 2<3; dec: 3>1, 4>1, 2>1, 4>3")
    assert (r.dec_part & s.dec_part).dec_pairs() == [(3, 1), (4, 1), (4, 3)]


def test_classify():
    c = classify(full_increasing(3))
    assert c.antisymmetric and c.transitive and c.poset
    assert not is_semitransitive(P(CHAIN_REL_MEET))
    st = P(CHAIN_ST_MEET)
    assert is_semitransitive(st) and not is_transitive(st)
    assert not is_poset(P("n=2; inc: 1<2; dec: 2>1"))


def test_restrict_keeps_ground_set():
    r = P("n=4; inc: 1<2, 1<4; dec: 3>2")
    assert str(r.restrict([1, 2, 3])) == "n=4; inc: 1<2; dec: 3>2"


def test_strict_pairs_order():
    assert strict_pairs(3) == ((1, 2), (1, 3), (2, 3))


def test_size_mismatch():
    with pytest.raises(RelationError):
        IntRelation(2) | IntRelation(3)
