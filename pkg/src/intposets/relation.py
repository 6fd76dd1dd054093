"""Reflexive binary relations on [n] = {1, ..., n}.

A relation is stored as two bit masks over the strict pairs (a, b) with
a < b, ordered lexicographically.  Bit k of ``inc`` means a R b for the
k-th pair, bit k of ``dec`` means b R a.  Reflexive pairs are implicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

MAX_N = 11


class RelationError(ValueError):
    """Raised for malformed relations or text that does not parse."""


@lru_cache(maxsize=None)
def strict_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All (a, b) with 1 <= a < b <= n in lexicographic order."""
    return tuple((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(strict_pairs(n))}


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (n * (n - 1) // 2)) - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise RelationError(f"ground set size must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise RelationError(f"ground set size {n} exceeds the supported maximum {MAX_N}")


@dataclass(frozen=True)
class IntRelation:
    """A reflexive relation on [n], identified by its strict pairs."""

    n: int
    inc: int = 0
    dec: int = 0

    def __post_init__(self) -> None:
        _check_n(self.n)
        top = full_mask(self.n)
        if self.inc < 0 or self.inc & ~top or self.dec < 0 or self.dec & ~top:
            raise RelationError("pair mask out of range for n=%d" % self.n)

    # construction

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> IntRelation:
        """Build from (u, v) pairs meaning u R v.  Loops are ignored."""
        _check_n(n)
        idx = pair_index(n)
        inc = dec = 0
        for u, v in pairs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise RelationError(f"pair ({u}, {v}) outside [1, {n}]")
            if u < v:
                inc |= 1 << idx[(u, v)]
            elif u > v:
                dec |= 1 << idx[(v, u)]
        return cls(n, inc, dec)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> IntRelation:
        """Build from successor rows: bit v-1 of ``rows[u-1]`` means u R v."""
        rows = list(rows)
        inc = dec = 0
        for k, (a, b) in enumerate(strict_pairs(n)):
            if rows[a - 1] >> (b - 1) & 1:
                inc |= 1 << k
            if rows[b - 1] >> (a - 1) & 1:
                dec |= 1 << k
        return cls(n, inc, dec)

    @classmethod
    def identity(cls, n: int) -> IntRelation:
        return cls(n)

    # views

    @cached_property
    def succ(self) -> tuple[int, ...]:
        """Strict successor rows, 0-based bits: bit v-1 of succ[u-1] iff u R v."""
        rows = [0] * self.n
        pairs = strict_pairs(self.n)
        for k in _bits(self.inc):
            a, b = pairs[k]
            rows[a - 1] |= 1 << (b - 1)
        for k in _bits(self.dec):
            a, b = pairs[k]
            rows[b - 1] |= 1 << (a - 1)
        return tuple(rows)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        """Strict predecessor rows: bit u-1 of pred[v-1] iff u R v."""
        rows = [0] * self.n
        for u, row in enumerate(self.succ):
            for v in _bits(row):
                rows[v] |= 1 << u
        return tuple(rows)

    def rel(self, u: int, v: int) -> bool:
        """u R v, reflexive."""
        return u == v or bool(self.succ[u - 1] >> (v - 1) & 1)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return self.rel(*pair)

    def comparable(self, u: int, v: int) -> bool:
        return self.rel(u, v) or self.rel(v, u)

    def inc_pairs(self) -> list[tuple[int, int]]:
        pairs = strict_pairs(self.n)
        return [pairs[k] for k in _bits(self.inc)]

    def dec_pairs(self) -> list[tuple[int, int]]:
        """Decreasing pairs as (b, a) with b > a, in (a, b)-lex order."""
        pairs = strict_pairs(self.n)
        return [(b, a) for a, b in (pairs[k] for k in _bits(self.dec))]

    def pairs(self) -> list[tuple[int, int]]:
        return self.inc_pairs() + self.dec_pairs()

    @property
    def inc_part(self) -> IntRelation:
        return IntRelation(self.n, self.inc, 0)

    @property
    def dec_part(self) -> IntRelation:
        return IntRelation(self.n, 0, self.dec)

    def __len__(self) -> int:
        return self.inc.bit_count() + self.dec.bit_count()

    # set operations

    def _same(self, other: IntRelation) -> None:
        if self.n != other.n:
            raise RelationError(f"relations on different ground sets ({self.n} vs {other.n})")

    def __or__(self, other: IntRelation) -> IntRelation:
        self._same(other)
        return IntRelation(self.n, self.inc | other.inc, self.dec | other.dec)

    def __and__(self, other: IntRelation) -> IntRelation:
        self._same(other)
        return IntRelation(self.n, self.inc & other.inc, self.dec & other.dec)

    def __sub__(self, other: IntRelation) -> IntRelation:
        self._same(other)
        return IntRelation(self.n, self.inc & ~other.inc, self.dec & ~other.dec)

    def issubset(self, other: IntRelation) -> bool:
        self._same(other)
        return not (self.inc & ~other.inc) and not (self.dec & ~other.dec)

    def complement(self) -> IntRelation:
        """Strict complement; the diagonal stays."""
        top = full_mask(self.n)
        return IntRelation(self.n, top & ~self.inc, top & ~self.dec)

    def reverse(self) -> IntRelation:
        """Opposite relation: u R' v iff v R u."""
        return IntRelation(self.n, self.dec, self.inc)

    def restrict(self, elements: Iterable[int]) -> IntRelation:
        """Keep only pairs with both ends in ``elements``, on the same [n]."""
        keep = 0
        for e in elements:
            keep |= 1 << (e - 1)
        rows = [row & keep if keep >> u & 1 else 0 for u, row in enumerate(self.succ)]
        return IntRelation.from_rows(self.n, rows)

    # text format

    def __str__(self) -> str:
        inc = ", ".join(f"{a}<{b}" for a, b in self.inc_pairs()) or "-"
        dec = ", ".join(f"{b}>{a}" for b, a in self.dec_pairs()) or "-"
        return f"n={self.n}; inc: {inc}; dec: {dec}"

    @classmethod
    def parse(cls, text: str) -> IntRelation:
        return parse_relation(text)


_HEAD = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_INC = re.compile(r"^(\d+)<(\d+)$")
_DEC = re.compile(r"^(\d+)>(\d+)$")


def parse_relation(text: str) -> IntRelation:
    """Parse ``n=4; inc: 1<2, 2<3; dec: 3>1`` (whitespace-insensitive)."""
    parts = [p.strip() for p in text.strip().split(";")]
    if not parts or not _HEAD.match(parts[0]):
        raise RelationError(f"expected 'n=<k>' at start of {text!r}")
    n = int(_HEAD.match(parts[0]).group(1))
    _check_n(n)
    pairs: list[tuple[int, int]] = []
    seen = set()
    for part in parts[1:]:
        if not part:
            continue
        key, sep, body = part.partition(":")
        key = key.strip()
        if not sep or key not in ("inc", "dec") or key in seen:
            raise RelationError(f"bad section {part!r}")
        seen.add(key)
        body = re.sub(r"\s+", "", body)
        if body in ("-", ""):
            continue
        pattern = _INC if key == "inc" else _DEC
        for item in body.split(","):
            m = pattern.match(item)
            if not m:
                raise RelationError(f"bad {key} pair {item!r}")
            x, y = int(m.group(1)), int(m.group(2))
            if x >= y if key == "inc" else x <= y:
                raise RelationError(f"pair {item!r} does not belong in {key}")
            pairs.append((x, y))
    return IntRelation.from_pairs(n, pairs)


# closure and classification


def transitive_closure(r: IntRelation) -> IntRelation:
    """Smallest transitive relation containing r (repeated squaring)."""
    rows = list(r.succ)
    while True:
        new = []
        for row in rows:
            acc = row
            for v in _bits(row):
                acc |= rows[v]
            new.append(acc)
        new = [row & ~(1 << u) for u, row in enumerate(new)]
        if new == rows:
            return IntRelation.from_rows(r.n, rows)
        rows = new


def is_antisymmetric(r: IntRelation) -> bool:
    return not (r.inc & r.dec)


def is_transitive(r: IntRelation) -> bool:
    succ = r.succ
    for u, row in enumerate(succ):
        for v in _bits(row):
            if succ[v] & ~row & ~(1 << u):
                return False
    return True


def is_semitransitive(r: IntRelation) -> bool:
    return is_transitive(r.inc_part) and is_transitive(r.dec_part)


def is_poset(r: IntRelation) -> bool:
    return is_antisymmetric(r) and is_transitive(r)


@dataclass(frozen=True)
class RelationClass:
    antisymmetric: bool
    semitransitive: bool
    transitive: bool

    @property
    def poset(self) -> bool:
        return self.antisymmetric and self.transitive


def classify(r: IntRelation) -> RelationClass:
    return RelationClass(is_antisymmetric(r), is_semitransitive(r), is_transitive(r))


def full_increasing(n: int) -> IntRelation:
    """I_n: every increasing pair."""
    return IntRelation(n, full_mask(n), 0)


def full_decreasing(n: int) -> IntRelation:
    """D_n: every decreasing pair."""
    return IntRelation(n, 0, full_mask(n))
