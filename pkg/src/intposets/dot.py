"""Graphviz DOT export of Hasse diagrams."""

from __future__ import annotations

from typing import Sequence

from .relation import IntRelation, RelationError, _bits, is_poset
from .weak_order import wo_leq


def poset_hasse_edges(r: IntRelation) -> list[tuple[int, int]]:
    """Cover relations (u, v) of a poset, u below v."""
    if not is_poset(r):
        raise RelationError(f"{r} is not a poset")
    succ, pred = r.succ, r.pred
    return [(u + 1, v + 1) for u in range(r.n) for v in _bits(succ[u]) if not succ[u] & pred[v]]


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def poset_dot(r: IntRelation, name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {v};" for v in range(1, r.n + 1)]
    lines += [f"  {u} -> {v};" for u, v in poset_hasse_edges(r)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def universe_dot(universe: Sequence[IntRelation], name: str = "weak_order", leq=wo_leq) -> str:
    """Cover graph of the weak order restricted to ``universe``."""
    from .oracle import FiniteOrder, canonical

    order = FiniteOrder(canonical(universe), leq)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i, r in enumerate(order.items):
        lines.append(f"  r{i} [label={_quote(str(r))}];")
    for i, j in order.covers():
        lines.append(f"  r{i} -> r{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(obj) -> str:
    """DOT for a single poset (its Hasse diagram) or a universe (weak order covers)."""
    if isinstance(obj, IntRelation):
        return poset_dot(obj)
    return universe_dot(list(obj))
