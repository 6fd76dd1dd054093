"""The weak order on integer relations and its meets, joins and covers.

R <= S when R has at least the increasing pairs of S and at most its
decreasing pairs.  Restricted to antisymmetric, semitransitive,
transitive relations or posets, the weak order is a lattice; the
functions below compute its meet and join at each of these levels.
"""

from __future__ import annotations

import enum
import os

from .relation import (
    IntRelation,
    RelationError,
    _bits,
    full_mask,
    is_antisymmetric,
    is_poset,
    is_semitransitive,
    is_transitive,
    strict_pairs,
    transitive_closure,
)

# Re-validate every output when set; inputs are always validated.
DEBUG = bool(os.environ.get("INTPOSETS_DEBUG"))


class LatticeLevel(enum.Enum):
    REL = "rel"
    ANTISYM = "antisym"
    SEMITRANS = "semitrans"
    TRANS = "trans"
    POSET = "poset"

    @classmethod
    def parse(cls, name: str) -> LatticeLevel:
        key = name.strip().lower().replace("-", "").replace("_", "")
        aliases = {"rel": "rel", "antisym": "antisym", "antisymmetric": "antisym",
                   "semitrans": "semitrans", "semitransitive": "semitrans", "st": "semitrans",
                   "trans": "trans", "transitive": "trans", "poset": "poset", "pos": "poset"}
        if key not in aliases:
            raise ValueError(f"unknown lattice level {name!r}")
        return cls(aliases[key])


def belongs(level: LatticeLevel, r: IntRelation) -> bool:
    if level is LatticeLevel.REL:
        return True
    if level is LatticeLevel.ANTISYM:
        return is_antisymmetric(r)
    if level is LatticeLevel.SEMITRANS:
        return is_semitransitive(r)
    if level is LatticeLevel.TRANS:
        return is_transitive(r)
    return is_poset(r)


def _require(level: LatticeLevel, *rels: IntRelation) -> None:
    n = rels[0].n
    for r in rels:
        if r.n != n:
            raise RelationError("relations on different ground sets")
        if not belongs(level, r):
            raise RelationError(f"{r} is not in the {level.value} level")


def wo_leq(r: IntRelation, s: IntRelation) -> bool:
    """Weak order comparison: Inc r contains Inc s and Dec r is inside Dec s."""
    return (r.inc & s.inc) == s.inc and (r.dec & s.dec) == r.dec


def rank(r: IntRelation) -> int:
    """|Dec r| - |Inc r|; strictly increasing along the weak order."""
    return r.dec.bit_count() - r.inc.bit_count()


def tdd(r: IntRelation) -> IntRelation:
    """Transitive decreasing deletion.

    Drops each decreasing b R a (a < b) for which some i <= b and j >= a
    give i R b R a R j but not i R j.  Applied once, not iterated.
    """
    n = r.n
    succ = r.succ
    pred = r.pred
    keep = r.dec
    for k in _bits(r.dec):
        a, b = strict_pairs(n)[k]
        below_b = ((pred[b - 1] | 1 << (b - 1)) & ((1 << b) - 1))
        above_a = ((succ[a - 1] | 1 << (a - 1)) >> (a - 1)) << (a - 1)
        for i in _bits(below_b):
            if above_a & ~(succ[i] | 1 << i):
                keep &= ~(1 << k)
                break
    return IntRelation(n, r.inc, keep)


def tid(r: IntRelation) -> IntRelation:
    """Transitive increasing deletion, the mirror of :func:`tdd`.

    Drops each increasing a R b for which some i >= a and j <= b give
    i R a R b R j but not i R j.
    """
    n = r.n
    succ = r.succ
    pred = r.pred
    keep = r.inc
    for k in _bits(r.inc):
        a, b = strict_pairs(n)[k]
        above_a = ((pred[a - 1] | 1 << (a - 1)) >> (a - 1)) << (a - 1)
        below_b = (succ[b - 1] | 1 << (b - 1)) & ((1 << b) - 1)
        for i in _bits(above_a):
            if below_b & ~(succ[i] | 1 << i):
                keep &= ~(1 << k)
                break
    return IntRelation(n, keep, r.dec)


def _tc_inc(n: int, inc: int) -> int:
    return transitive_closure(IntRelation(n, inc, 0)).inc


def _tc_dec(n: int, dec: int) -> int:
    return transitive_closure(IntRelation(n, 0, dec)).dec


def meet(level: LatticeLevel, r: IntRelation, s: IntRelation) -> IntRelation:
    _require(level, r, s)
    n = r.n
    if level in (LatticeLevel.REL, LatticeLevel.ANTISYM):
        out = IntRelation(n, r.inc | s.inc, r.dec & s.dec)
    else:
        out = IntRelation(n, _tc_inc(n, r.inc | s.inc), r.dec & s.dec)
        if level in (LatticeLevel.TRANS, LatticeLevel.POSET):
            out = tdd(out)
    if DEBUG:
        _require(level, out)
    return out


def join(level: LatticeLevel, r: IntRelation, s: IntRelation) -> IntRelation:
    _require(level, r, s)
    n = r.n
    if level in (LatticeLevel.REL, LatticeLevel.ANTISYM):
        out = IntRelation(n, r.inc & s.inc, r.dec | s.dec)
    else:
        out = IntRelation(n, r.inc & s.inc, _tc_dec(n, r.dec | s.dec))
        if level in (LatticeLevel.TRANS, LatticeLevel.POSET):
            out = tid(out)
    if DEBUG:
        _require(level, out)
    return out


def meet_all(level: LatticeLevel, rels) -> IntRelation:
    rels = list(rels)
    out = rels[0]
    for r in rels[1:]:
        out = meet(level, out, r)
    return out


def join_all(level: LatticeLevel, rels) -> IntRelation:
    rels = list(rels)
    out = rels[0]
    for r in rels[1:]:
        out = join(level, out, r)
    return out


def covers(level: LatticeLevel, r: IntRelation) -> list[IntRelation]:
    """Upper covers of r in the weak order of the given level.

    Transitive relations have no local cover rule; use
    :func:`intposets.oracle.hasse_covers` on an enumerated universe.
    """
    if level is LatticeLevel.TRANS:
        raise ValueError("covers of transitive relations need enumeration; see oracle.hasse_covers")
    _require(level, r)
    n = r.n
    pairs = strict_pairs(n)
    out: list[IntRelation] = []
    if level is LatticeLevel.REL:
        for k in _bits(r.inc):
            out.append(IntRelation(n, r.inc & ~(1 << k), r.dec))
        for k in _bits(full_mask(n) & ~r.dec):
            out.append(IntRelation(n, r.inc, r.dec | 1 << k))
        return out
    if level is LatticeLevel.ANTISYM:
        for k in _bits(r.inc):
            out.append(IntRelation(n, r.inc & ~(1 << k), r.dec))
        for k in _bits(full_mask(n) & ~r.dec & ~r.inc):
            out.append(IntRelation(n, r.inc, r.dec | 1 << k))
        return out
    succ = r.succ
    pred = r.pred
    if level is LatticeLevel.SEMITRANS:
        for k in _bits(r.inc):
            a, b = pairs[k]
            between = ((1 << (b - 1)) - 1) & ~((1 << a) - 1)
            if not (succ[a - 1] & pred[b - 1] & between):
                out.append(IntRelation(n, r.inc & ~(1 << k), r.dec))
        for k in _bits(full_mask(n) & ~r.dec):
            a, b = pairs[k]
            low = (1 << (a - 1)) - 1
            high = full_row(n) & ~((1 << b) - 1)
            # no i < a with a R i but not b R i, no j > b with j R b but not j R a
            if succ[a - 1] & low & ~succ[b - 1]:
                continue
            if pred[b - 1] & high & ~pred[a - 1]:
                continue
            out.append(IntRelation(n, r.inc, r.dec | 1 << k))
        return out
    # posets
    for k in _bits(r.inc):
        a, b = pairs[k]
        if not (succ[a - 1] & pred[b - 1]):
            out.append(IntRelation(n, r.inc & ~(1 << k), r.dec))
    for k in _bits(full_mask(n) & ~r.dec & ~r.inc):
        a, b = pairs[k]
        if succ[a - 1] & ~succ[b - 1] & ~(1 << (b - 1)):
            continue
        if pred[b - 1] & ~pred[a - 1] & ~(1 << (a - 1)):
            continue
        out.append(IntRelation(n, r.inc, r.dec | 1 << k))
    return out


def full_row(n: int) -> int:
    return (1 << n) - 1
