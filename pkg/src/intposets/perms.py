"""Permutations, weak order intervals and ordered partitions as posets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterator

from .relation import IntRelation, RelationError, is_poset, strict_pairs


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    if not text.isdigit():
        raise RelationError(f"cannot read permutation {text!r}")
    return tuple(int(c) for c in text)


def _format_word(word) -> str:
    sep = "" if len(word) <= 9 else ","
    return sep.join(str(x) for x in word)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation (``word[i-1] = sigma(i)``)."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise RelationError(f"{self.word} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(_parse_word(text))

    def __str__(self) -> str:
        return _format_word(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


def all_permutations(n: int) -> Iterator[Permutation]:
    for w in _permutations(range(1, n + 1)):
        yield Permutation(w)


def versions(sigma: Permutation) -> set[tuple[int, int]]:
    """Pairs (a, b) with a < b and a before b."""
    pos = sigma.inverse().word
    return {(a, b) for a, b in strict_pairs(sigma.n) if pos[a - 1] < pos[b - 1]}


def inversions(sigma: Permutation) -> set[tuple[int, int]]:
    """Pairs (b, a) with a < b and b before a."""
    pos = sigma.inverse().word
    return {(b, a) for a, b in strict_pairs(sigma.n) if pos[a - 1] > pos[b - 1]}


def chain(sigma: Permutation) -> IntRelation:
    """The total order u < v when u appears before v in sigma."""
    n = sigma.n
    pos = sigma.inverse().word
    inc = dec = 0
    for k, (a, b) in enumerate(strict_pairs(n)):
        if pos[a - 1] < pos[b - 1]:
            inc |= 1 << k
        else:
            dec |= 1 << k
    return IntRelation(n, inc, dec)


def from_chain(r: IntRelation) -> Permutation:
    """Read the permutation off a total order."""
    if len(r) != r.n * (r.n - 1) // 2 or not is_poset(r):
        raise RelationError(f"{r} is not a total order")
    order = sorted(range(1, r.n + 1), key=lambda u: r.pred[u - 1].bit_count())
    return Permutation(tuple(order))


def perm_leq(sigma: Permutation, tau: Permutation) -> bool:
    """Weak order on permutations: inversion sets are nested."""
    if sigma.n != tau.n:
        raise RelationError("permutations of different sizes")
    return inversions(sigma) <= inversions(tau)


def perm_meet(sigma: Permutation, tau: Permutation) -> Permutation:
    from .weak_order import LatticeLevel, meet

    return from_chain(meet(LatticeLevel.POSET, chain(sigma), chain(tau)))


def perm_join(sigma: Permutation, tau: Permutation) -> Permutation:
    from .weak_order import LatticeLevel, join

    return from_chain(join(LatticeLevel.POSET, chain(sigma), chain(tau)))


@dataclass(frozen=True)
class WOInterval:
    """A weak order interval [lo, hi] of permutations."""

    lo: Permutation
    hi: Permutation

    def __post_init__(self) -> None:
        if not perm_leq(self.lo, self.hi):
            raise RelationError(f"{self.lo} is not below {self.hi} in the weak order")

    @property
    def n(self) -> int:
        return self.lo.n

    @classmethod
    def parse(cls, text: str) -> WOInterval:
        text = text.strip().strip("[]")
        lo, hi = (s.strip() for s in text.split(":" if ":" in text else ";" if ";" in text else " "))
        return cls(Permutation.parse(lo), Permutation.parse(hi))

    def __str__(self) -> str:
        return f"[{self.lo}:{self.hi}]"

    def permutations(self) -> list[Permutation]:
        return [s for s in all_permutations(self.n) if perm_leq(self.lo, s) and perm_leq(s, self.hi)]


def interval_poset(iv: WOInterval) -> IntRelation:
    """The poset whose linear extensions form the interval."""
    lo, hi = chain(iv.lo), chain(iv.hi)
    return IntRelation(iv.n, hi.inc, lo.dec)


def linear_extensions(r: IntRelation) -> list[Permutation]:
    """All linear extensions, sorted lexicographically by their words."""
    if not is_poset(r):
        raise RelationError(f"{r} is not a poset")
    n = r.n
    pred = r.pred
    out: list[Permutation] = []
    word: list[int] = []

    def grow(placed: int) -> None:
        if len(word) == n:
            out.append(Permutation(tuple(word)))
            return
        for u in range(n):
            if not placed >> u & 1 and not pred[u] & ~placed:
                word.append(u + 1)
                grow(placed | 1 << u)
                word.pop()

    grow(0)
    return out


def minle(r: IntRelation) -> Permutation:
    """Weak order minimal linear extension; needs a DWOIP poset."""
    from .families import is_dwoip

    if not is_poset(r) or not is_dwoip(r):
        raise RelationError(f"{r} has no weak order minimal linear extension")
    incomparable = ~(r.inc | r.dec)
    return from_chain(IntRelation(r.n, r.inc | (incomparable & _full(r.n)), r.dec))


def maxle(r: IntRelation) -> Permutation:
    """Weak order maximal linear extension; needs an IWOIP poset."""
    from .families import is_iwoip

    if not is_poset(r) or not is_iwoip(r):
        raise RelationError(f"{r} has no weak order maximal linear extension")
    incomparable = ~(r.inc | r.dec)
    return from_chain(IntRelation(r.n, r.inc, r.dec | (incomparable & _full(r.n))))


def _full(n: int) -> int:
    return (1 << (n * (n - 1) // 2)) - 1


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered partition of [n] into nonempty blocks."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = sorted(x for b in blocks for x in b)
        if not blocks or any(not b for b in blocks) or flat != list(range(1, len(flat) + 1)):
            raise RelationError(f"{self.blocks} is not an ordered partition of [n]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> OrderedPartition:
        parts = text.strip().split("|")
        return cls(tuple(_parse_word(p) for p in parts))

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}


def partition_poset(pi: OrderedPartition) -> IntRelation:
    """u < v when the block of u comes strictly before the block of v."""
    n = pi.n
    where = pi.block_of()
    inc = dec = 0
    for k, (a, b) in enumerate(strict_pairs(n)):
        if where[a] < where[b]:
            inc |= 1 << k
        elif where[a] > where[b]:
            dec |= 1 << k
    return IntRelation(n, inc, dec)


def all_ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """Every ordered partition of [n], by assigning block labels."""

    def surjections(k: int, m: int, prefix: list[int]):
        if len(prefix) == k:
            if len(set(prefix)) == m:
                yield tuple(prefix)
            return
        for v in range(m):
            prefix.append(v)
            yield from surjections(k, m, prefix)
            prefix.pop()

    for m in range(1, n + 1):
        for lab in surjections(n, m, []):
            yield OrderedPartition(tuple(tuple(x + 1 for x in range(n) if lab[x] == i) for i in range(m)))


def facial_covers(pi: OrderedPartition) -> list[OrderedPartition]:
    """Upper covers in the facial weak order on ordered partitions."""
    blocks = pi.blocks
    out: list[OrderedPartition] = []
    for i in range(len(blocks) - 1):
        if max(blocks[i]) < min(blocks[i + 1]):
            merged = blocks[:i] + (blocks[i] + blocks[i + 1],) + blocks[i + 2:]
            out.append(OrderedPartition(merged))
    for i, b in enumerate(blocks):
        for k in range(1, len(b)):
            low, high = b[:k], b[k:]
            out.append(OrderedPartition(blocks[:i] + (high, low) + blocks[i + 1:]))
    return out


def partition_leq(p: OrderedPartition, q: OrderedPartition) -> bool:
    """Facial weak order, read through the associated posets."""
    from .weak_order import wo_leq

    return wo_leq(partition_poset(p), partition_poset(q))
