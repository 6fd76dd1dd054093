"""Exhaustive enumeration and brute-force order oracles.

Everything here is deliberately naive: universes are listed in full and
meets are found by scanning lower bounds.  The closed forms elsewhere in
the package are checked against these routines.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Union

from .families import Family, FamilyId, Orientation, is_member
from .perms import (
    Permutation,
    WOInterval,
    all_ordered_partitions,
    all_permutations,
    chain,
    interval_poset,
    partition_poset,
    perm_leq,
)
from .relation import IntRelation, RelationError, _bits, full_mask, parse_relation
from .weak_order import LatticeLevel, belongs, rank, wo_leq

CACHE_ENV = "INTPOSETS_CACHE"

BUDGET = {
    LatticeLevel.REL: 3,
    LatticeLevel.SEMITRANS: 3,
    LatticeLevel.TRANS: 3,
    LatticeLevel.ANTISYM: 5,
    LatticeLevel.POSET: 5,
}
FAMILY_BUDGET = 5
ELEMENT_BUDGET = 6


class BudgetError(ValueError):
    """Requested universe is too large to enumerate."""


def canonical_key(r: IntRelation):
    return (rank(r), r.inc, r.dec)


def canonical(rels: Iterable[IntRelation]) -> list[IntRelation]:
    return sorted(set(rels), key=canonical_key)


# cache files


def cache_dir() -> Optional[Path]:
    env = os.environ.get(CACHE_ENV)
    if env == "":
        return None
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "intposets"


def _cache_path(name: str, n: int) -> Optional[Path]:
    d = cache_dir()
    return None if d is None else d / f"{name}-{n}.txt"


def write_universe(path: Path, name: str, n: int, rels: Sequence[IntRelation]) -> None:
    lines = [f"# universe {name} n={n} count={len(rels)}"] + [str(r) for r in rels]
    path.write_text("\n".join(lines) + "\n")


def read_universe(path: Path) -> tuple[str, int, list[IntRelation]]:
    lines = path.read_text().splitlines()
    head = lines[0].split()
    if len(head) != 5 or head[:2] != ["#", "universe"]:
        raise RelationError(f"bad cache header in {path}")
    name, n, count = head[2], int(head[3][2:]), int(head[4][6:])
    rels = [parse_relation(line) for line in lines[1:] if line.strip()]
    if len(rels) != count:
        raise RelationError(f"cache {path} holds {len(rels)} relations, header says {count}")
    return name, n, rels


def _cached(name: str, n: int, build: Callable[[], list[IntRelation]]) -> list[IntRelation]:
    path = _cache_path(name, n)
    if path is not None and path.exists():
        try:
            got_name, got_n, rels = read_universe(path)
            if got_name == name and got_n == n:
                return rels
        except (RelationError, ValueError, IndexError):
            pass
    rels = build()
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            write_universe(path, name, n, rels)
        except OSError:
            pass
    return rels


# enumeration


def all_relations(n: int) -> Iterable[IntRelation]:
    top = full_mask(n)
    for inc in range(top + 1):
        for dec in range(top + 1):
            yield IntRelation(n, inc, dec)


def _antisymmetric(n: int) -> list[IntRelation]:
    m = n * (n - 1) // 2
    out = []
    for choice in product((0, 1, 2), repeat=m):
        inc = dec = 0
        for k, c in enumerate(choice):
            if c == 1:
                inc |= 1 << k
            elif c == 2:
                dec |= 1 << k
        out.append(IntRelation(n, inc, dec))
    return canonical(out)


def _extend_posets(smaller: list[IntRelation], n: int) -> list[IntRelation]:
    """Add the element n to each poset on [n-1] in every consistent way.

    The new element gets a down-set D and an up-set U, disjoint, with
    every element of D below every element of U already.
    """
    m = n - 1
    out = []
    for p in smaller:
        succ, pred = p.succ, p.pred
        downs = [d for d in range(1 << m) if all(pred[x] & ~d == 0 for x in _bits(d))]
        ups = [u for u in range(1 << m) if all(succ[x] & ~u == 0 for x in _bits(u))]
        for d in downs:
            for u in ups:
                if d & u:
                    continue
                if any(u & ~succ[x] for x in _bits(d)):
                    continue
                rows = list(succ) + [u]
                for x in _bits(d):
                    rows[x] |= 1 << m
                out.append(IntRelation.from_rows(n, rows))
    return canonical(out)


@lru_cache(maxsize=None)
def _posets(n: int) -> tuple[IntRelation, ...]:
    if n <= 4:
        return tuple(canonical(r for r in all_relations(n) if belongs(LatticeLevel.POSET, r)))
    return tuple(_cached("poset", n, lambda: _extend_posets(list(_posets(n - 1)), n)))


def posets_by_extension(n: int) -> list[IntRelation]:
    """Posets on [n] grown one point at a time from the single poset on [1]."""
    cur = [IntRelation(1)]
    for k in range(2, n + 1):
        cur = _extend_posets(cur, k)
    return cur


@lru_cache(maxsize=None)
def _level(level: LatticeLevel, n: int) -> tuple[IntRelation, ...]:
    if level is LatticeLevel.POSET:
        return _posets(n)
    if level is LatticeLevel.ANTISYM:
        return tuple(_antisymmetric(n))
    return tuple(canonical(r for r in all_relations(n) if belongs(level, r)))


def enumerate_level(level: LatticeLevel, n: int) -> list[IntRelation]:
    if n > BUDGET[level]:
        raise BudgetError(f"{level.value} universe on [{n}] exceeds the budget n <= {BUDGET[level]}")
    return list(_level(level, n))


@lru_cache(maxsize=None)
def _family(f: FamilyId, n: int) -> tuple[IntRelation, ...]:
    if n <= FAMILY_BUDGET:
        return tuple(r for r in _posets(n) if is_member(f, r))
    return tuple(construct_family(f, n))


def enumerate_family(f: FamilyId, n: int) -> list[IntRelation]:
    if f.orientation is not None and f.orientation.n != n:
        raise RelationError("orientation size differs from n")
    if n > FAMILY_BUDGET and not (n <= ELEMENT_BUDGET and f.tag in (Family.WOEP, Family.PEP)):
        raise BudgetError(f"{f} on [{n}] exceeds the budget")
    return list(_family(f, n))


def enumerate_universe(kind: Union[LatticeLevel, FamilyId], n: int) -> list[IntRelation]:
    """Complete, duplicate-free, canonically ordered universe."""
    if isinstance(kind, LatticeLevel):
        return enumerate_level(kind, n)
    return enumerate_family(kind, n)


def construct_family(f: FamilyId, n: int) -> list[IntRelation]:
    """Build a family from its defining objects rather than its conditions."""
    from .projections import insert_permutree, insert_schroder

    tag, o = f.tag, f.orientation
    if tag is Family.WOEP:
        return canonical(chain(s) for s in all_permutations(n))
    if tag is Family.WOIP:
        perms = list(all_permutations(n))
        return canonical(interval_poset(WOInterval(s, t)) for s in perms for t in perms if perm_leq(s, t))
    if tag is Family.WOFP:
        return canonical(partition_poset(p) for p in all_ordered_partitions(n))
    if tag is Family.PEP:
        return canonical(insert_permutree(o, s) for s in all_permutations(n))
    if tag is Family.PIP:
        peps = construct_family(FamilyId(Family.PEP, o), n)
        return canonical(r & s for r in peps for s in peps if wo_leq(r, s))
    if tag is Family.PFP:
        return canonical(insert_schroder(o, p) for p in all_ordered_partitions(n))
    raise ValueError(f"no construction for {f}")


COUNT_ROWS = (
    ("WOEP", lambda n: FamilyId(Family.WOEP)),
    ("TOEP", lambda n: FamilyId(Family.PEP, Orientation.tamari(n))),
    ("BOEP", lambda n: FamilyId(Family.PEP, Orientation.boolean(n))),
    ("WOIP", lambda n: FamilyId(Family.WOIP)),
    ("TOIP", lambda n: FamilyId(Family.PIP, Orientation.tamari(n))),
    ("BOIP", lambda n: FamilyId(Family.PIP, Orientation.boolean(n))),
    ("WOFP", lambda n: FamilyId(Family.WOFP)),
    ("TOFP", lambda n: FamilyId(Family.PFP, Orientation.tamari(n))),
    ("BOFP", lambda n: FamilyId(Family.PFP, Orientation.boolean(n))),
    ("IWOIP", lambda n: FamilyId(Family.IWOIP)),
    ("DWOIP", lambda n: FamilyId(Family.DWOIP)),
    ("IPos", None),
)


def count_table(n_max: int) -> dict[str, list[int]]:
    if n_max > FAMILY_BUDGET:
        raise BudgetError(f"count table limited to n <= {FAMILY_BUDGET}")
    table: dict[str, list[int]] = {}
    for name, make in COUNT_ROWS:
        row = []
        for n in range(1, n_max + 1):
            if make is None:
                row.append(len(_posets(n)))
            else:
                row.append(len(enumerate_family(make(n), n)))
        table[name] = row
    return table


# brute-force order oracle


def brute_meet(universe: Sequence[IntRelation], r: IntRelation, s: IntRelation,
               leq: Callable = wo_leq) -> Optional[IntRelation]:
    lower = [t for t in universe if leq(t, r) and leq(t, s)]
    for t in lower:
        if all(leq(x, t) for x in lower):
            return t
    return None


def brute_join(universe: Sequence[IntRelation], r: IntRelation, s: IntRelation,
               leq: Callable = wo_leq) -> Optional[IntRelation]:
    upper = [t for t in universe if leq(r, t) and leq(s, t)]
    for t in upper:
        if all(leq(t, x) for x in upper):
            return t
    return None


class FiniteOrder:
    """A finite poset given by a universe and an order, with bitset meets.

    The universe must be listed along a linear extension (canonical order
    does this for the weak order, since rank strictly grows along it).
    Then the largest index among common lower bounds is the only candidate
    for the meet.
    """

    def __init__(self, universe: Sequence[IntRelation], leq: Callable = wo_leq):
        self.items = list(universe)
        self.index = {r: i for i, r in enumerate(self.items)}
        size = len(self.items)
        self.down = [0] * size
        self.up = [0] * size
        for i, x in enumerate(self.items):
            for j in range(i + 1):
                if leq(self.items[j], x):
                    self.down[i] |= 1 << j
                    self.up[j] |= 1 << i
                elif j < i and leq(x, self.items[j]):
                    raise ValueError("universe is not listed along a linear extension")

    def __len__(self) -> int:
        return len(self.items)

    def meet_index(self, i: int, j: int) -> Optional[int]:
        lb = self.down[i] & self.down[j]
        if not lb:
            return None
        m = lb.bit_length() - 1
        return m if self.down[m] == lb else None

    def join_index(self, i: int, j: int) -> Optional[int]:
        ub = self.up[i] & self.up[j]
        if not ub:
            return None
        m = (ub & -ub).bit_length() - 1
        return m if self.up[m] == ub else None

    def meet(self, r: IntRelation, s: IntRelation) -> Optional[IntRelation]:
        k = self.meet_index(self.index[r], self.index[s])
        return None if k is None else self.items[k]

    def join(self, r: IntRelation, s: IntRelation) -> Optional[IntRelation]:
        k = self.join_index(self.index[r], self.index[s])
        return None if k is None else self.items[k]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges (i, j) with i covered by j."""
        edges = []
        for i in range(len(self.items)):
            above = self.up[i] & ~(1 << i)
            reach = 0
            for k in _bits(above):
                reach |= self.up[k] & ~(1 << k)
            for j in _bits(above & ~reach):
                edges.append((i, j))
        return edges


def hasse_covers(universe: Sequence[IntRelation], leq: Callable = wo_leq) -> list[tuple[IntRelation, IntRelation]]:
    order = FiniteOrder(universe, leq)
    return [(order.items[i], order.items[j]) for i, j in order.covers()]


@dataclass
class Report:
    claim: str
    status: str
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        data = {"claim": self.claim, "status": self.status}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if self.details:
            data["details"] = self.details
        return json.dumps(data, sort_keys=True)

    def as_dict(self) -> dict:
        return json.loads(self.to_json())


def check_lattice(universe: Sequence[IntRelation], leq: Callable = wo_leq, meet: Optional[Callable] = None,
                  join: Optional[Callable] = None, claim: str = "lattice") -> Report:
    """Every pair has a meet and a join; optional closed forms must agree."""
    order = FiniteOrder(universe, leq)
    items = order.items
    for i in range(len(items)):
        for j in range(i, len(items)):
            m = order.meet_index(i, j)
            jn = order.join_index(i, j)
            x, y = items[i], items[j]
            if m is None or jn is None:
                return Report(claim, "fail", {"left": str(x), "right": str(y),
                                              "missing": "meet" if m is None else "join"})
            if meet is not None:
                got = meet(x, y)
                if got != items[m]:
                    return Report(claim, "fail", {"left": str(x), "right": str(y), "op": "meet",
                                                  "formula": str(got), "brute": str(items[m])})
            if join is not None:
                got = join(x, y)
                if got != items[jn]:
                    return Report(claim, "fail", {"left": str(x), "right": str(y), "op": "join",
                                                  "formula": str(got), "brute": str(items[jn])})
    return Report(claim, "pass", details={"size": len(items)})


def check_sublattice(sub: Sequence[IntRelation], sup_meet: Callable, sup_join: Callable,
                     claim: str = "sublattice") -> Report:
    members = set(sub)
    items = list(sub)
    for i, x in enumerate(items):
        for y in items[i:]:
            for op, f in (("meet", sup_meet), ("join", sup_join)):
                z = f(x, y)
                if z not in members:
                    return Report(claim, "fail", {"left": str(x), "right": str(y), "op": op, "value": str(z)})
    return Report(claim, "pass", details={"size": len(items)})


def chain_lengths(universe: Sequence[IntRelation], leq: Callable = wo_leq,
                  through: Optional[IntRelation] = None) -> set[int]:
    """Lengths of all maximal chains from the bottom to the top element.

    With ``through``, only the chains passing through that element.
    """
    order = FiniteOrder(universe, leq)
    size = len(order)
    bottoms = [i for i in range(size) if order.down[i] == 1 << i]
    tops = [i for i in range(size) if order.up[i] == 1 << i]
    if len(bottoms) != 1 or len(tops) != 1:
        raise ValueError("universe is not bounded")
    up_edges: dict[int, list[int]] = {i: [] for i in range(size)}
    down_edges: dict[int, list[int]] = {i: [] for i in range(size)}
    for i, j in order.covers():
        up_edges[i].append(j)
        down_edges[j].append(i)
    to_top: dict[int, set[int]] = {}
    for i in reversed(range(size)):
        to_top[i] = {0} if i == tops[0] else {1 + x for j in up_edges[i] for x in to_top[j]}
    if through is None:
        return to_top[bottoms[0]]
    from_bottom: dict[int, set[int]] = {}
    for i in range(size):
        from_bottom[i] = {0} if i == bottoms[0] else {1 + x for j in down_edges[i] for x in from_bottom[j]}
    k = order.index[through]
    return {x + y for x in from_bottom[k] for y in to_top[k]}


def check_graded(universe: Sequence[IntRelation], leq: Callable = wo_leq, claim: str = "graded") -> Report:
    lengths = chain_lengths(universe, leq)
    order = FiniteOrder(universe, leq)
    jumps = {rank(order.items[j]) - rank(order.items[i]) for i, j in order.covers()}
    details = {"chain_lengths": sorted(lengths), "rank_jumps": sorted(jumps)}
    if len(lengths) == 1:
        return Report(claim, "pass", details=details)
    return Report(claim, "fail", {"chain_lengths": sorted(lengths)}, details)


# independent oracles used by the tests


def bst_poset(sigma: Permutation) -> IntRelation:
    """Binary search tree of sigma read right to left, as a poset.

    i < j in the poset when i lies in the subtree of j.
    """
    n = sigma.n
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    root = None
    for v in reversed(sigma.word):
        if root is None:
            root = v
            continue
        node = root
        while True:
            side = left if v < node else right
            if node in side:
                node = side[node]
            else:
                side[node] = v
                break
    pairs = []

    def walk(node, ancestors):
        for a in ancestors:
            pairs.append((node, a))
        for side in (left, right):
            if node in side:
                walk(side[node], ancestors + [node])

    walk(root, [])
    return IntRelation.from_pairs(n, pairs)


def is_permutree_shape(o: Orientation, r: IntRelation) -> bool:
    """Hasse diagram of r is a permutree with orientation o.

    Checks the tree shape, the number of parents and children allowed by
    o, and that each parent (child) side of a node in O+ (O-) lies on one
    side of it, opposite sides when there are two.
    """
    from .relation import is_poset

    if not is_poset(r):
        return False
    n = r.n
    succ, pred = r.succ, r.pred
    parents = [0] * n
    children = [0] * n
    edges = 0
    for u in range(n):
        for v in _bits(succ[u]):
            if not succ[u] & pred[v]:
                parents[u] |= 1 << v
                children[v] |= 1 << u
                edges += 1
    if edges != n - 1:
        return False
    adj = [parents[u] | children[u] for u in range(n)]
    seen, stack = 1, [0]
    while stack:
        u = stack.pop()
        for v in _bits(adj[u] & ~seen):
            seen |= 1 << v
            stack.append(v)
    if seen != (1 << n) - 1:
        return False

    def component(start: int, cut: int) -> int:
        comp, stack = 1 << start, [start]
        while stack:
            u = stack.pop()
            for v in _bits(adj[u] & ~comp & ~(1 << cut)):
                comp |= 1 << v
                stack.append(v)
        return comp

    for v in range(n):
        for nbrs, allowed in ((parents[v], o.up), (children[v], o.down)):
            count = nbrs.bit_count()
            if v + 1 not in allowed:
                if count > 1:
                    return False
                continue
            if count > 2:
                return False
            sides = []
            for w in _bits(nbrs):
                comp = component(w, v)
                below = comp & ((1 << v) - 1)
                above = comp >> (v + 1)
                if below and above:
                    return False
                sides.append("low" if below else "high")
            if count == 2 and sides[0] == sides[1]:
                return False
    return True


def snakes_brute(r: IntRelation, o: Orientation, a: int, c: int) -> bool:
    """Search every increasing sequence from a to c for an O-snake."""
    if r.comparable(a, c):
        return True
    inner = list(range(a + 1, c))
    for mask in range(1, 1 << len(inner)):
        xs = [a] + [inner[i] for i in range(len(inner)) if mask >> i & 1] + [c]
        for first_up in (True, False):
            ok = True
            for i in range(len(xs) - 1):
                rising = (i % 2 == 0) == first_up
                if rising and not r.rel(xs[i], xs[i + 1]) or not rising and not r.rel(xs[i + 1], xs[i]):
                    ok = False
                    break
            if not ok:
                continue
            for i in range(1, len(xs) - 1):
                peak = (i % 2 == 1) == first_up
                if xs[i] not in (o.down if peak else o.up):
                    ok = False
                    break
            if ok:
                return True
    return False


__all__ = [
    "BudgetError",
    "FiniteOrder",
    "Report",
    "bst_poset",
    "brute_join",
    "brute_meet",
    "canonical",
    "chain_lengths",
    "check_graded",
    "check_lattice",
    "check_sublattice",
    "construct_family",
    "count_table",
    "enumerate_universe",
    "enumerate_family",
    "enumerate_level",
    "hasse_covers",
    "is_permutree_shape",
    "posets_by_extension",
    "snakes_brute",
    "read_universe",
    "write_universe",
]
