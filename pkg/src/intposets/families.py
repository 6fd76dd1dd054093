"""Families of integer posets defined by local conditions on triples a < b < c.

Each family is a list of named conditions.  Membership reports the first
failing condition together with its lexicographically smallest witness.
Orientations (n, O+, O-) parametrize the permutree families; only the
interior values 2..n-1 of O+ and O- can ever affect a condition.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from .relation import IntRelation, RelationError, _bits, is_antisymmetric, is_poset, is_transitive, strict_pairs


@dataclass(frozen=True)
class Orientation:
    """An orientation of [n]: subsets O+ (up) and O- (down), possibly overlapping."""

    n: int
    up: frozenset = frozenset()
    down: frozenset = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "up", frozenset(self.up))
        object.__setattr__(self, "down", frozenset(self.down))
        for x in self.up | self.down:
            if not 1 <= x <= self.n:
                raise RelationError(f"orientation value {x} outside [1, {self.n}]")

    @classmethod
    def trivial(cls, n: int) -> Orientation:
        return cls(n)

    @classmethod
    def tamari(cls, n: int) -> Orientation:
        return cls(n, frozenset(), frozenset(range(1, n + 1)))

    @classmethod
    def boolean(cls, n: int) -> Orientation:
        full = frozenset(range(1, n + 1))
        return cls(n, full, full)

    @classmethod
    def cambrian(cls, n: int, down: frozenset) -> Orientation:
        down = frozenset(down)
        return cls(n, frozenset(range(1, n + 1)) - down, down)

    @property
    def is_covering(self) -> bool:
        return set(range(2, self.n)) <= self.up | self.down

    @property
    def up_mask(self) -> int:
        return sum(1 << (x - 1) for x in self.up)

    @property
    def down_mask(self) -> int:
        return sum(1 << (x - 1) for x in self.down)

    def interior(self) -> tuple[frozenset, frozenset]:
        inner = set(range(2, self.n))
        return frozenset(self.up & inner), frozenset(self.down & inner)

    def __str__(self) -> str:
        up = ",".join(map(str, sorted(self.up))) or "-"
        down = ",".join(map(str, sorted(self.down))) or "-"
        return f"n={self.n}; up: {up}; down: {down}"

    @classmethod
    def parse(cls, text: str) -> Orientation:
        m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*up\s*:\s*([-\d,\s]*);\s*down\s*:\s*([-\d,\s]*)", text)
        if not m:
            raise RelationError(f"cannot read orientation {text!r}")
        return cls(int(m.group(1)), _parse_set(m.group(2)), _parse_set(m.group(3)))


def _parse_set(text: str) -> frozenset:
    text = text.replace(" ", "")
    if text in ("", "-"):
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def all_orientations(n: int):
    """All 4^n orientations of [n]."""
    for up in range(1 << n):
        for down in range(1 << n):
            yield Orientation(n, frozenset(i + 1 for i in range(n) if up >> i & 1),
                              frozenset(i + 1 for i in range(n) if down >> i & 1))


def interior_orientations(n: int):
    """Orientations whose O+ and O- lie inside {2, ..., n-1}."""
    inner = list(range(2, n))
    k = len(inner)
    for up in range(1 << k):
        for down in range(1 << k):
            yield Orientation(n, frozenset(inner[i] for i in range(k) if up >> i & 1),
                              frozenset(inner[i] for i in range(k) if down >> i & 1))


# elementary conditions, each returning the lex-first witness or None


def _lt(r: IntRelation):
    succ = r.succ

    def lt(u: int, v: int) -> bool:
        return bool(succ[u - 1] >> (v - 1) & 1)

    return lt


def poset_witness(r: IntRelation) -> Optional[tuple]:
    if not is_antisymmetric(r):
        a, b = strict_pairs(r.n)[(r.inc & r.dec & -(r.inc & r.dec)).bit_length() - 1]
        return (a, b)
    if not is_transitive(r):
        lt = _lt(r)
        n = r.n
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                for w in range(1, n + 1):
                    if len({u, v, w}) == 3 and lt(u, v) and lt(v, w) and not lt(u, w):
                        return (u, v, w)
    return None


def _triples(r: IntRelation, bad: Callable[[int, int, int], bool]) -> Optional[tuple]:
    n = r.n
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b + 1, n + 1):
                if bad(a, b, c):
                    return (a, b, c)
    return None


def total_witness(r: IntRelation) -> Optional[tuple]:
    missing = ~(r.inc | r.dec) & ((1 << (r.n * (r.n - 1) // 2)) - 1)
    if missing:
        return strict_pairs(r.n)[(missing & -missing).bit_length() - 1]
    return None


def iwoip_witness(r: IntRelation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: lt(a, c) and not lt(a, b) and not lt(b, c))


def dwoip_witness(r: IntRelation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: lt(c, a) and not lt(b, a) and not lt(c, b))


def iwoip_cover_check(r: IntRelation) -> bool:
    """IWOIP test restricted to cover relations a < c of the poset."""
    succ, pred = r.succ, r.pred
    for k in _bits(r.inc):
        a, c = strict_pairs(r.n)[k]
        if succ[a - 1] & pred[c - 1]:
            continue
        between = ((1 << (c - 1)) - 1) & ~((1 << a) - 1)
        if between & ~succ[a - 1] & ~pred[c - 1]:
            return False
    return True


def dwoip_cover_check(r: IntRelation) -> bool:
    return iwoip_cover_check(_mirror(r))


def _mirror(r: IntRelation) -> IntRelation:
    """Relabel i -> n+1-i; swaps the roles of Inc and Dec."""
    n = r.n
    return IntRelation.from_pairs(n, [(n + 1 - u, n + 1 - v) for u, v in r.pairs()])


def wofp_between_witness(r: IntRelation) -> Optional[tuple]:
    lt = _lt(r)

    def bad(a, b, c):
        if lt(a, c) or lt(c, a):
            return False
        return lt(a, b) != lt(c, b) or lt(b, a) != lt(b, c)

    return _triples(r, bad)


def ipip_plus_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: b in o.up and lt(a, c) and not lt(a, b))


def ipip_minus_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: b in o.down and lt(a, c) and not lt(b, c))


def dpip_plus_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: b in o.up and lt(c, a) and not lt(c, b))


def dpip_minus_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    lt = _lt(r)
    return _triples(r, lambda a, b, c: b in o.down and lt(c, a) and not lt(b, a))


def snake_table(r: IntRelation, o: Orientation) -> dict[tuple[int, int], bool]:
    """snake[(a, c)] for a < c: is there an O-snake joining a to c."""
    n = r.n
    lt = _lt(r)
    table: dict[tuple[int, int], bool] = {}
    for gap in range(1, n):
        for a in range(1, n - gap + 1):
            c = a + gap
            ok = lt(a, c) or lt(c, a)
            b = a + 1
            while not ok and b < c:
                if table[(a, b)] and ((b in o.down and lt(c, b)) or (b in o.up and lt(b, c))):
                    ok = True
                b += 1
            table[(a, c)] = ok
    return table


def has_snake(r: IntRelation, o: Orientation, a: int, c: int) -> bool:
    if a == c:
        return True
    a, c = min(a, c), max(a, c)
    return snake_table(r, o)[(a, c)]


def snake_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    table = snake_table(r, o)
    for pair in strict_pairs(r.n):
        if not table[pair]:
            return pair
    return None


def spade(r: IntRelation, o: Orientation, a: int, c: int) -> bool:
    """Some a < b < c with b in O+ and a, c both off b's upper side, or b in O- mirrored."""
    lt = _lt(r)
    for b in range(a + 1, c):
        if b in o.up and not lt(a, b) and not lt(c, b):
            return True
        if b in o.down and not lt(b, a) and not lt(b, c):
            return True
    return False


def club(r: IntRelation, a: int, c: int) -> bool:
    """Every a < b < c relates to a and to c in the same direction."""
    lt = _lt(r)
    return all(lt(a, b) == lt(c, b) and lt(b, a) == lt(b, c) for b in range(a + 1, c))


def pfp_witness(r: IntRelation, o: Orientation) -> Optional[tuple]:
    for a, c in strict_pairs(r.n):
        if r.comparable(a, c):
            continue
        if not spade(r, o, a, c) and not club(r, a, c):
            return (a, c)
    return None


# families


class Family(enum.Enum):
    WOEP = "WOEP"
    WOIP = "WOIP"
    IWOIP = "IWOIP"
    DWOIP = "DWOIP"
    WOFP = "WOFP"
    PEP = "PEP"
    PIP = "PIP"
    IPIP = "IPIP"
    DPIP = "DPIP"
    PFP = "PFP"


EPSILONS = ("", "-", "+", "±")
ORIENTED = {Family.PEP, Family.PIP, Family.IPIP, Family.DPIP, Family.PFP}


@dataclass(frozen=True)
class FamilyId:
    """A family of posets; the permutree families carry an orientation.

    ``eps`` selects the variants of IPIP and DPIP: "" is the full family,
    "+" and "-" the one-sided ones, "±" their intersection.
    """

    tag: Family
    orientation: Optional[Orientation] = None
    eps: str = ""

    def __post_init__(self) -> None:
        if self.tag in ORIENTED and self.orientation is None:
            raise ValueError(f"{self.tag.value} needs an orientation")
        if self.eps and self.tag not in (Family.IPIP, Family.DPIP):
            raise ValueError("eps only applies to IPIP and DPIP")
        if self.eps not in EPSILONS:
            raise ValueError(f"bad eps {self.eps!r}")

    @property
    def name(self) -> str:
        label = self.tag.value
        if self.eps:
            label = label + self.eps
        if self.orientation is not None:
            label += f"({self.orientation})"
        return label

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, name: str, n: Optional[int] = None, orientation: Optional[Orientation] = None) -> FamilyId:
        """Read a family name.

        Accepts the generic tags (``woip``, ``pep``, ``ipip+``...) and the
        specialisations ``toep``/``toip``/``tofp`` (Tamari) and
        ``boep``/``boip``/``bofp`` (boolean), which need ``n``.
        """
        key = name.strip().upper().replace("PM", "±")
        special = {"TO": Orientation.tamari, "BO": Orientation.boolean}
        if key[:2] in special and key[2:] in ("EP", "IP", "FP"):
            if n is None:
                raise ValueError(f"{name} needs n")
            return cls(Family("P" + key[2:]), special[key[:2]](n))
        eps = ""
        for e in ("±", "+", "-"):
            if key.endswith(e):
                key, eps = key[: -len(e)], e
                break
        tag = Family(key)
        if tag in ORIENTED and orientation is None:
            if n is None:
                raise ValueError(f"{name} needs an orientation")
            orientation = Orientation.trivial(n)
        return cls(tag, orientation if tag in ORIENTED else None, eps)


def conditions(f: FamilyId) -> list[tuple[str, Callable[[IntRelation], Optional[tuple]]]]:
    o = f.orientation
    iw = ("IWOIP", iwoip_witness)
    dw = ("DWOIP", dwoip_witness)
    ip = ("IPIP+", lambda r: ipip_plus_witness(r, o))
    im = ("IPIP-", lambda r: ipip_minus_witness(r, o))
    dp = ("DPIP+", lambda r: dpip_plus_witness(r, o))
    dm = ("DPIP-", lambda r: dpip_minus_witness(r, o))
    tag = f.tag
    if tag is Family.WOEP:
        return [("total", total_witness)]
    if tag is Family.IWOIP:
        return [iw]
    if tag is Family.DWOIP:
        return [dw]
    if tag is Family.WOIP:
        return [iw, dw]
    if tag is Family.WOFP:
        return [iw, dw, ("WOFP", wofp_between_witness)]
    if tag is Family.IPIP:
        return {"": [iw, ip, im], "+": [ip], "-": [im], "±": [ip, im]}[f.eps]
    if tag is Family.DPIP:
        return {"": [dw, dp, dm], "+": [dp], "-": [dm], "±": [dp, dm]}[f.eps]
    pip = [iw, dw, ip, im, dp, dm]
    if tag is Family.PIP:
        return pip
    if tag is Family.PEP:
        return pip + [("snake", lambda r: snake_witness(r, o))]
    return pip + [("PFP", lambda r: pfp_witness(r, o))]


@dataclass(frozen=True)
class Membership:
    ok: bool
    condition: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def is_member(f: FamilyId, r: IntRelation) -> Membership:
    if f.orientation is not None and f.orientation.n != r.n:
        raise RelationError("orientation and relation sizes differ")
    w = poset_witness(r)
    if w is not None:
        return Membership(False, "poset", w)
    for name, check in conditions(f):
        w = check(r)
        if w is not None:
            return Membership(False, name, w)
    return Membership(True)


def is_iwoip(r: IntRelation) -> bool:
    return is_poset(r) and iwoip_cover_check(r)


def is_dwoip(r: IntRelation) -> bool:
    return is_poset(r) and dwoip_cover_check(r)


def is_woip(r: IntRelation) -> bool:
    return is_iwoip(r) and is_dwoip(r)


# conflict functions


class Conflict(enum.Enum):
    IWOIP = "IWOIP"
    DWOIP = "DWOIP"
    WOIP = "WOIP"
    IPIP = "IPIP"
    DPIP = "DPIP"
    PIP = "PIP"
    INCOMP = "INCOMP"
    PEP = "PEP"


@dataclass(frozen=True)
class ConflictFunctionId:
    tag: Conflict
    orientation: Optional[Orientation] = None
    eps: str = ""

    def __post_init__(self) -> None:
        if self.tag in (Conflict.IWOIP, Conflict.DWOIP, Conflict.WOIP):
            if self.orientation is not None:
                raise ValueError(f"{self.tag.value} takes no orientation")
        elif self.orientation is None:
            raise ValueError(f"{self.tag.value} needs an orientation")
        if self.eps and self.tag not in (Conflict.IPIP, Conflict.DPIP):
            raise ValueError("eps only applies to IPIP and DPIP")
        if self.eps not in EPSILONS:
            raise ValueError(f"bad eps {self.eps!r}")

    def __str__(self) -> str:
        label = "C_" + self.tag.value + self.eps
        return label + (f"({self.orientation})" if self.orientation is not None else "")


def _pairs_where(r: IntRelation, pred) -> frozenset:
    n = r.n
    out = set()
    for a, c in strict_pairs(n):
        if pred(a, c):
            out.add((a, c))
    return frozenset(out)


def conflict_set(cf: ConflictFunctionId, r: IntRelation) -> frozenset:
    """Conflicting pairs {a, c}, reported as tuples (a, c) with a < c."""
    if not is_poset(r):
        raise RelationError(f"{r} is not a poset")
    lt = _lt(r)
    o = cf.orientation
    tag = cf.tag

    def inner(a, c):
        return range(a + 1, c)

    def c_iwoip(a, c):
        return lt(a, c) and any(not lt(a, b) and not lt(b, c) for b in inner(a, c))

    def c_dwoip(a, c):
        return lt(c, a) and any(not lt(b, a) and not lt(c, b) for b in inner(a, c))

    def c_ip(a, c):
        return lt(a, c) and any(b in o.up and not lt(a, b) for b in inner(a, c))

    def c_im(a, c):
        return lt(a, c) and any(b in o.down and not lt(b, c) for b in inner(a, c))

    def c_dp(a, c):
        return lt(c, a) and any(b in o.up and not lt(c, b) for b in inner(a, c))

    def c_dm(a, c):
        return lt(c, a) and any(b in o.down and not lt(b, a) for b in inner(a, c))

    ipip = {"": [c_ip, c_im, c_iwoip], "+": [c_ip], "-": [c_im], "±": [c_ip, c_im]}
    dpip = {"": [c_dp, c_dm, c_dwoip], "+": [c_dp], "-": [c_dm], "±": [c_dp, c_dm]}
    if tag is Conflict.IWOIP:
        parts = [c_iwoip]
    elif tag is Conflict.DWOIP:
        parts = [c_dwoip]
    elif tag is Conflict.WOIP:
        parts = [c_iwoip, c_dwoip]
    elif tag is Conflict.IPIP:
        parts = ipip[cf.eps]
    elif tag is Conflict.DPIP:
        parts = dpip[cf.eps]
    elif tag is Conflict.PIP:
        parts = ipip[""] + dpip[""]
    else:
        table = snake_table(r, o)
        parts = [lambda a, c: not table[(a, c)]]
        if tag is Conflict.PEP:
            parts += ipip[""] + dpip[""]
    return _pairs_where(r, lambda a, c: any(p(a, c) for p in parts))


def free_family(cf: ConflictFunctionId) -> FamilyId:
    """The family of conflict-free posets, when it is a named one."""
    o = cf.orientation
    return {
        Conflict.IWOIP: lambda: FamilyId(Family.IWOIP),
        Conflict.DWOIP: lambda: FamilyId(Family.DWOIP),
        Conflict.WOIP: lambda: FamilyId(Family.WOIP),
        Conflict.IPIP: lambda: FamilyId(Family.IPIP, o, cf.eps),
        Conflict.DPIP: lambda: FamilyId(Family.DPIP, o, cf.eps),
        Conflict.PIP: lambda: FamilyId(Family.PIP, o),
        Conflict.PEP: lambda: FamilyId(Family.PEP, o),
    }.get(cf.tag, lambda: None)()


PROPERTIES = ("local", "increasing", "decreasing", "incomparable", "consistent", "monotone", "semitransitive")


@dataclass
class PropertyReport:
    """For each property: whether it holds and the first counterexample."""

    holds: dict = field(default_factory=dict)
    counterexample: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.holds[name]


def _support(pairs_mask_rel: IntRelation, which: str) -> frozenset:
    pairs = strict_pairs(pairs_mask_rel.n)
    mask = pairs_mask_rel.inc if which == "inc" else pairs_mask_rel.dec
    return frozenset(pairs[k] for k in _bits(mask))


def _remove(r: IntRelation, conflicts: frozenset) -> IntRelation:
    idx = {p: k for k, p in enumerate(strict_pairs(r.n))}
    drop = 0
    for p in conflicts:
        drop |= 1 << idx[p]
    return IntRelation(r.n, r.inc & ~drop, r.dec & ~drop)


_INCLUSIONS: dict = {}


def _inclusions(items: tuple) -> list[tuple[int, int]]:
    """Index pairs (i, j), i != j, with items[i] a subset of items[j]."""
    if items not in _INCLUSIONS:
        _INCLUSIONS.clear()
        _INCLUSIONS[items] = [(i, j) for i, r in enumerate(items) for j, s in enumerate(items)
                              if i != j and r.issubset(s)]
    return _INCLUSIONS[items]


def conflict_properties(cf: ConflictFunctionId, n: int, universe=None) -> PropertyReport:
    """Check the seven properties exhaustively over all posets on [n]."""
    from .oracle import enumerate_level
    from .weak_order import LatticeLevel

    if universe is None:
        universe = enumerate_level(LatticeLevel.POSET, n)
    cache = {}

    def C(r):
        if r not in cache:
            cache[r] = conflict_set(cf, r)
        return cache[r]

    report = PropertyReport()

    def record(name, example):
        if name not in report.holds:
            report.holds[name] = example is None
            if example is not None:
                report.counterexample[name] = example

    checks: dict[str, Optional[tuple]] = {p: None for p in PROPERTIES}
    for r in universe:
        conf = C(r)
        inc_s, dec_s = _support(r, "inc"), _support(r, "dec")
        if checks["increasing"] is None and not conf <= inc_s:
            checks["increasing"] = (str(r), sorted(conf - inc_s))
        if checks["decreasing"] is None and not conf <= dec_s:
            checks["decreasing"] = (str(r), sorted(conf - dec_s))
        if checks["incomparable"] is None and conf & (inc_s | dec_s):
            checks["incomparable"] = (str(r), sorted(conf & (inc_s | dec_s)))
        if checks["consistent"] is None:
            if conf & inc_s != C(r.inc_part) or conf & dec_s != C(r.dec_part):
                checks["consistent"] = (str(r),)
        if checks["semitransitive"] is None:
            from .relation import is_semitransitive

            if not is_semitransitive(_remove(r, conf)):
                checks["semitransitive"] = (str(r),)
        if checks["local"] is None:
            for a, b in strict_pairs(n):
                local = r.restrict(range(a, b + 1))
                if ((a, b) in conf) != ((a, b) in C(local)):
                    checks["local"] = (str(r), (a, b))
                    break
    if checks["monotone"] is None:
        items = tuple(universe)
        kept = [_remove(r, C(r)) for r in items]
        for i, j in _inclusions(items):
            if not kept[i].issubset(kept[j]):
                checks["monotone"] = (str(items[i]), str(items[j]))
                break
    for p in PROPERTIES:
        record(p, checks[p])
    return report
