"""Compare the PFP addition formulas against brute-force lattice operations.

Runs the literal rule (every addable pair per round) over all orientations
and, with ``--variant``, retries each stalled case adding one pair per round,
shortest pair first.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from intposets.checks import pfp_conjecture, tables
from intposets.families import Family, FamilyId, Orientation, all_orientations, club, is_member, spade
from intposets.relation import IntRelation, _bits, is_poset, strict_pairs, transitive_closure


@dataclass
class Config:
    n_max: int = 4
    variant: bool = False
    json: bool = False


def one_at_a_time(direction: str, o: Orientation, r: IntRelation):
    n = r.n
    pfp = FamilyId(Family.PFP, o)
    cur = r
    for _ in range(n * n):
        if is_member(pfp, cur):
            return cur
        cands = [(c - a, a, c) for a, c in strict_pairs(n)
                 if not cur.comparable(a, c) and not spade(cur, o, a, c) and not club(cur, a, c)]
        if not cands:
            return None
        _, a, c = min(cands)
        pair = (a, c) if direction == "inc" else (c, a)
        nxt = transitive_closure(cur | IntRelation.from_pairs(n, [pair]))
        if not is_poset(nxt):
            return None
        cur = nxt
    return None


def variant_sweep(n: int) -> dict:
    from intposets.projections import pfp_addition

    t = tables(n)
    seen = set()
    stalls = fixed = 0
    for o in all_orientations(n):
        key = o.interior()
        if key in seen:
            continue
        seen.add(key)
        inner = Orientation(n, *key)
        mask = t.members(FamilyId(Family.PFP, inner))
        idx = list(_bits(mask))
        for pos, a in enumerate(idx):
            for b in idx[pos:]:
                for direction, base, brute in (("inc", t.meet_woip, t.sub_meet), ("dec", t.join_woip, t.sub_join)):
                    start = t.items[base(a, b)]
                    if pfp_addition(direction, inner, start).converged:
                        continue
                    stalls += 1
                    got = one_at_a_time(direction, inner, start)
                    expected = brute(mask, a, b)
                    if got is not None and expected is not None and got == t.items[expected]:
                        fixed += 1
    return {"n": n, "distinct_interiors": len(seen), "stalls": stalls, "fixed_by_variant": fixed}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--variant", action="store_true")
    ap.add_argument("--json", action="store_true")
    cfg = Config(**vars(ap.parse_args(argv)))
    out = []
    for n in range(1, cfg.n_max + 1):
        row = pfp_conjecture(n)
        if cfg.variant:
            row["variant"] = variant_sweep(n)
        out.append(row)
    if cfg.json:
        print(json.dumps(out, indent=2, default=str))
    else:
        for row in out:
            line = (f"n={row['n']}: {row['comparisons']} comparisons, {row['divergences']} divergences, "
                    f"{row['cap_or_stall']} stalls")
            if "variant" in row:
                line += f", one-pair variant fixes {row['variant']['fixed_by_variant']}"
            print(line)
            if row["first_divergence"]:
                print("  first:", json.dumps(row["first_divergence"], sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
