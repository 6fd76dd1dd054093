import pytest

from intposets.families import Family, FamilyId, Orientation
from intposets.oracle import (
    BudgetError,
    FiniteOrder,
    Report,
    bst_poset,
    canonical,
    chain_lengths,
    check_graded,
    check_lattice,
    check_sublattice,
    count_table,
    enumerate_family,
    enumerate_level,
    posets_by_extension,
    read_universe,
    write_universe,
    brute_meet,
)
from intposets.perms import OrderedPartition, Permutation, WOInterval, all_permutations, chain, interval_poset
from intposets.perms import partition_poset
from intposets.projections import insert_permutree
from intposets.relation import IntRelation, is_poset, parse_relation
from intposets.weak_order import LatticeLevel, join, meet, wo_leq

P = parse_relation
perm = Permutation.parse
POSET = LatticeLevel.POSET


def test_universe_sizes():
    assert len(enumerate_level(LatticeLevel.REL, 3)) == 64
    assert len(enumerate_level(LatticeLevel.ANTISYM, 3)) == 27
    assert len(enumerate_level(LatticeLevel.SEMITRANS, 3)) == 49
    assert len(enumerate_level(LatticeLevel.TRANS, 3)) == 29
    assert [len(enumerate_level(POSET, n)) for n in range(1, 6)] == [1, 3, 19, 219, 4231]
    assert len(enumerate_family(FamilyId(Family.WOEP), 4)) == 24


def test_universes_are_canonical_and_unique():
    for n in range(1, 5):
        u = enumerate_level(POSET, n)
        assert u == canonical(u) and len(set(u)) == len(u)
        assert all(is_poset(r) for r in u)


def test_point_extension_agrees_with_filtering():
    assert posets_by_extension(4) == enumerate_level(POSET, 4)


def test_budget():
    with pytest.raises(BudgetError):
        enumerate_level(LatticeLevel.REL, 4)
    with pytest.raises(BudgetError):
        enumerate_level(POSET, 6)
    with pytest.raises(BudgetError):
        enumerate_family(FamilyId(Family.WOIP), 6)
    assert len(enumerate_family(FamilyId(Family.WOEP), 6)) == 720


def test_count_table():
    table = count_table(4)
    assert table["WOIP"] == [1, 3, 17, 151]
    assert table["TOIP"] == [1, 3, 13, 68]
    assert table["TOFP"] == [1, 3, 11, 45]
    assert table["WOFP"] == [1, 3, 13, 75]
    assert table["BOIP"] == [1, 3, 9, 27]
    # IWOIP and DWOIP are mirror images of each other
    assert table["IWOIP"] == table["DWOIP"] == [1, 3, 18, 182]


def test_brute_meet_examples():
    u3 = enumerate_level(POSET, 3)
    assert brute_meet(u3, chain(perm("231")), chain(perm("312"))) == chain(perm("123"))
    for r in u3:
        assert brute_meet(u3, r, r) == r
    wofp = enumerate_family(FamilyId(Family.WOFP), 3)
    x, y = (partition_poset(OrderedPartition.parse(t)) for t in ("2|13", "123"))
    assert brute_meet(wofp, x, y) == partition_poset(OrderedPartition.parse("12|3"))


def test_finite_order_requires_linear_extension_listing():
    u = enumerate_level(POSET, 3)
    with pytest.raises(ValueError):
        FiniteOrder(list(reversed(u)))


def test_lattice_checks():
    u4 = enumerate_level(POSET, 4)
    rep = check_lattice(u4, wo_leq, lambda a, b: meet(POSET, a, b), lambda a, b: join(POSET, a, b))
    assert rep.passed
    graded = check_graded(u4)
    assert graded.passed and graded.details["rank_jumps"] == [1] and graded.details["chain_lengths"] == [12]


def test_sublattice_failures():
    tm = lambda a, b: meet(POSET, a, b)  # noqa: E731
    tj = lambda a, b: join(POSET, a, b)  # noqa: E731
    woip = enumerate_family(FamilyId(Family.WOIP), 3)
    assert not check_sublattice(woip, tm, tj).passed
    a = interval_poset(WOInterval(perm("231"), perm("321")))
    b = interval_poset(WOInterval(perm("312"), perm("321")))
    assert tm(a, b) not in set(woip)
    o = Orientation(5, frozenset({2}), frozenset({4}))
    pep = enumerate_family(FamilyId(Family.PEP, o), 5)
    rep = check_sublattice(pep, tm, tj)
    assert not rep.passed
    p = P("n=5; inc: 2<3; dec: 5>4, 4>1, 2>1, 4>3, 4>2, 5>1, 5>2, 5>3")
    q = P("n=5; inc: 3<4; dec: 5>4, 4>1, 3>1, 3>2, 2>1, 4>2, 5>1, 5>2")
    assert tm(p, q) not in set(pep)


def test_transitive_relations_are_not_graded():
    trans = enumerate_level(LatticeLevel.TRANS, 3)
    rep = check_graded(trans)
    assert not rep.passed
    assert rep.details["chain_lengths"] == [4, 5, 6]
    assert chain_lengths(trans, through=IntRelation(3)) == {6}
    assert chain_lengths(trans, through=IntRelation(3, 7, 7)) == {4}
    rel2 = check_graded(enumerate_level(LatticeLevel.REL, 2))
    assert rel2.passed and rel2.details["chain_lengths"] == [2]


def test_bst_oracle_matches_tamari_insertion():
    for n in range(1, 6):
        o = Orientation.tamari(n)
        for s in all_permutations(n):
            assert bst_poset(s) == insert_permutree(o, s)
    assert str(bst_poset(perm("312"))) == "n=3; inc: 1<2; dec: 3>2"


def test_universe_file_round_trip(tmp_path):
    u = enumerate_level(POSET, 3)
    path = tmp_path / "poset-3.txt"
    write_universe(path, "poset", 3, u)
    assert path.read_text().splitlines()[0] == "# universe poset n=3 count=19"
    assert read_universe(path) == ("poset", 3, u)


def test_cache_directory_is_used(tmp_path, monkeypatch):
    from intposets import oracle

    monkeypatch.setenv("INTPOSETS_CACHE", str(tmp_path))
    assert oracle.cache_dir() == tmp_path
    rels = oracle._cached("demo", 2, lambda: enumerate_level(POSET, 2))
    assert (tmp_path / "demo-2.txt").exists()
    assert oracle._cached("demo", 2, lambda: []) == rels
    monkeypatch.setenv("INTPOSETS_CACHE", "")
    assert oracle.cache_dir() is None


def test_report_json():
    rep = Report("claim", "fail", {"x": 1})
    assert not rep.passed
    assert rep.as_dict() == {"claim": "claim", "status": "fail", "counterexample": {"x": 1}}
