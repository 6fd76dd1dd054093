"""Deletion projections onto poset families, insertion maps, family meets and joins."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import Family, FamilyId, Orientation, is_member, pfp_witness, spade
from .perms import OrderedPartition, Permutation, WOInterval, chain, interval_poset, partition_poset
from .relation import IntRelation, RelationError, _bits, full_mask, is_poset, strict_pairs, transitive_closure
from .weak_order import LatticeLevel, join, meet

EPSILONS = ("", "-", "+", "±")


def _poset(r: IntRelation) -> None:
    if not is_poset(r):
        raise RelationError(f"{r} is not a poset")


def _between(a: int, c: int) -> int:
    """0-based mask of the values strictly between a and c."""
    return ((1 << (c - 1)) - 1) & ~((1 << a) - 1)


def iwoip_id(r: IntRelation) -> IntRelation:
    """Smallest IWOIP poset above r: drop a < c joined by a chain of non-relations."""
    _poset(r)
    blocked = transitive_closure(IntRelation(r.n, full_mask(r.n) & ~r.inc, 0)).inc
    return IntRelation(r.n, r.inc & ~blocked, r.dec)


def dwoip_dd(r: IntRelation) -> IntRelation:
    """Largest DWOIP poset below r, dual to :func:`iwoip_id`."""
    _poset(r)
    blocked = transitive_closure(IntRelation(r.n, 0, full_mask(r.n) & ~r.dec)).dec
    return IntRelation(r.n, r.inc, r.dec & ~blocked)


def woip_d(r: IntRelation) -> IntRelation:
    return iwoip_id(dwoip_dd(r))


def ipip_id(eps: str, o: Orientation, r: IntRelation) -> IntRelation:
    """Increasing deletion towards IPIP^eps(O)."""
    _poset(r)
    if eps not in EPSILONS:
        raise ValueError(f"bad eps {eps!r}")
    if eps == "":
        return ipip_id("±", o, iwoip_id(r))
    n = r.n
    succ, pred = r.succ, r.pred
    up, down = o.up_mask, o.down_mask
    keep = r.inc
    for k in _bits(r.inc):
        a, c = strict_pairs(n)[k]
        mid = _between(a, c)
        if eps == "+":
            drop = bool(mid & up & ~succ[a - 1])
        elif eps == "-":
            drop = bool(mid & down & ~pred[c - 1])
        else:
            # some a <= m < p <= c, m in {a} or O-, p in {c} or O+, m not below p
            lows = (mid & down) | 1 << (a - 1)
            highs = (mid & up) | 1 << (c - 1)
            drop = False
            for m in _bits(lows):
                above = highs & ~((1 << (m + 1)) - 1)
                if above & ~succ[m]:
                    drop = True
                    break
        if drop:
            keep &= ~(1 << k)
    return IntRelation(n, keep, r.dec)


def dpip_dd(eps: str, o: Orientation, r: IntRelation) -> IntRelation:
    """Decreasing deletion towards DPIP^eps(O)."""
    _poset(r)
    if eps not in EPSILONS:
        raise ValueError(f"bad eps {eps!r}")
    if eps == "":
        return dpip_dd("±", o, dwoip_dd(r))
    n = r.n
    succ, pred = r.succ, r.pred
    up, down = o.up_mask, o.down_mask
    keep = r.dec
    for k in _bits(r.dec):
        a, c = strict_pairs(n)[k]  # the relation is c > a
        mid = _between(a, c)
        if eps == "+":
            drop = bool(mid & up & ~succ[c - 1])
        elif eps == "-":
            drop = bool(mid & down & ~pred[a - 1])
        else:
            # some a <= p < m <= c, p in {a} or O+, m in {c} or O-, m not above p
            lows = (mid & up) | 1 << (a - 1)
            highs = (mid & down) | 1 << (c - 1)
            drop = False
            for p in _bits(lows):
                above = highs & ~((1 << (p + 1)) - 1)
                if above & ~pred[p]:
                    drop = True
                    break
        if drop:
            keep &= ~(1 << k)
    return IntRelation(n, r.inc, keep)


def pip_d(o: Orientation, r: IntRelation) -> IntRelation:
    return ipip_id("", o, dpip_dd("", o, r))


def toip_d(r: IntRelation) -> IntRelation:
    """Deletion for the Tamari orientation (O+ empty, O- everything)."""
    _poset(r)
    n = r.n
    succ, pred = r.succ, r.pred
    inc = r.inc
    dec = r.dec
    for k in _bits(r.inc):
        a, c = strict_pairs(n)[k]
        if _between(a, c) & ~pred[c - 1]:
            inc &= ~(1 << k)
    for k in _bits(r.dec):
        a, c = strict_pairs(n)[k]
        if _between(a, c) & ~pred[a - 1]:
            dec &= ~(1 << k)
    return IntRelation(n, inc, dec)


def _check_size(o: Orientation, n: int) -> None:
    if o.n != n:
        raise RelationError(f"orientation on [{o.n}] used with objects on [{n}]")


def insert_permutree(o: Orientation, sigma: Permutation) -> IntRelation:
    """The permutree whose linear extensions contain sigma, as a poset."""
    _check_size(o, sigma.n)
    return pip_d(o, chain(sigma))


def insert_schroder(o: Orientation, pi: OrderedPartition) -> IntRelation:
    _check_size(o, pi.n)
    return pip_d(o, partition_poset(pi))


def insert_interval(o: Orientation, iv: WOInterval) -> IntRelation:
    _check_size(o, iv.n)
    return pip_d(o, interval_poset(iv))


# family meets and joins


def _t_meet(r, s):
    return meet(LatticeLevel.POSET, r, s)


def _t_join(r, s):
    return join(LatticeLevel.POSET, r, s)


def woip_meet(r: IntRelation, s: IntRelation) -> IntRelation:
    return dwoip_dd(_t_meet(r, s))


def woip_join(r: IntRelation, s: IntRelation) -> IntRelation:
    return iwoip_id(_t_join(r, s))


@dataclass(frozen=True)
class AdditionResult:
    """Outcome of the PFP addition loop."""

    relation: IntRelation
    converged: bool
    steps: int
    reason: str = ""


def pfp_addition(direction: str, o: Orientation, r: IntRelation, cap: Optional[int] = None) -> AdditionResult:
    """Add relations between incomparable pairs until the poset is in PFP(O).

    Each round relates every incomparable a < c that satisfies neither
    face condition (increasingly for ``inc``, decreasingly for ``dec``),
    then closes transitively.  Stops on membership, on a round that adds
    nothing, on a cycle, or after ``cap`` rounds (default n^2).
    """
    if direction not in ("inc", "dec"):
        raise ValueError("direction is 'inc' or 'dec'")
    n = r.n
    cap = n * n if cap is None else cap
    pfp = FamilyId(Family.PFP, o)
    cur = r
    for step in range(cap + 1):
        if is_member(pfp, cur):
            return AdditionResult(cur, True, step)
        if step == cap:
            break
        add = []
        for a, c in strict_pairs(n):
            if cur.comparable(a, c):
                continue
            if not spade(cur, o, a, c) and not _club(cur, a, c):
                add.append((a, c) if direction == "inc" else (c, a))
        if not add:
            return AdditionResult(cur, False, step, "no addable pair but not in PFP")
        nxt = transitive_closure(cur | IntRelation.from_pairs(n, add))
        if not is_poset(nxt):
            return AdditionResult(cur, False, step, "addition created a cycle")
        cur = nxt
    return AdditionResult(cur, False, cap, "iteration cap reached")


def _club(r, a, c):
    from .families import club

    return club(r, a, c)


def woip_family(f: FamilyId) -> bool:
    return f.tag in (Family.WOIP, Family.PIP, Family.PEP)


def family_meet(f: FamilyId, r: IntRelation, s: IntRelation) -> IntRelation:
    """Meet inside the family, by the formula known for it.

    WOFP and PFP use the addition loop on the WOIP meet.  When the loop
    stalls outside the family, the meet is found by brute force among the
    enumerated family members (small n only).
    """
    for x in (r, s):
        m = is_member(f, x)
        if not m:
            raise RelationError(f"{x} is not in {f}: {m.condition} fails at {m.witness}")
    tag = f.tag
    if tag is Family.WOEP:
        return _t_meet(r, s)
    if tag in (Family.WOIP, Family.PIP, Family.PEP):
        return woip_meet(r, s)
    if tag is Family.IWOIP:
        return _t_meet(r, s)
    if tag is Family.DWOIP:
        return dwoip_dd(_t_meet(r, s))
    if tag is Family.IPIP:
        return _t_meet(r, s)
    if tag is Family.DPIP:
        return dpip_dd(f.eps, f.orientation, _t_meet(r, s))
    o = f.orientation if tag is Family.PFP else Orientation.trivial(r.n)
    res = pfp_addition("inc", o, woip_meet(r, s))
    if res.converged:
        return res.relation
    return _brute(f, r, s, "meet")


def family_join(f: FamilyId, r: IntRelation, s: IntRelation) -> IntRelation:
    for x in (r, s):
        m = is_member(f, x)
        if not m:
            raise RelationError(f"{x} is not in {f}: {m.condition} fails at {m.witness}")
    tag = f.tag
    if tag is Family.WOEP:
        return _t_join(r, s)
    if tag in (Family.WOIP, Family.PIP, Family.PEP):
        return woip_join(r, s)
    if tag is Family.IWOIP:
        return iwoip_id(_t_join(r, s))
    if tag is Family.DWOIP:
        return _t_join(r, s)
    if tag is Family.IPIP:
        return ipip_id(f.eps, f.orientation, _t_join(r, s))
    if tag is Family.DPIP:
        return _t_join(r, s)
    o = f.orientation if tag is Family.PFP else Orientation.trivial(r.n)
    res = pfp_addition("dec", o, woip_join(r, s))
    if res.converged:
        return res.relation
    return _brute(f, r, s, "join")


def _brute(f: FamilyId, r: IntRelation, s: IntRelation, op: str) -> IntRelation:
    from .oracle import brute_join, brute_meet, enumerate_family

    universe = enumerate_family(f, r.n)
    out = (brute_meet if op == "meet" else brute_join)(universe, r, s)
    if out is None:
        raise RelationError(f"no {op} of {r} and {s} in {f}")
    return out


__all__ = [
    "AdditionResult",
    "dpip_dd",
    "dwoip_dd",
    "family_join",
    "family_meet",
    "insert_interval",
    "insert_permutree",
    "insert_schroder",
    "ipip_id",
    "iwoip_id",
    "pfp_addition",
    "pip_d",
    "toip_d",
    "woip_d",
    "woip_join",
    "woip_meet",
    "pfp_witness",
]
