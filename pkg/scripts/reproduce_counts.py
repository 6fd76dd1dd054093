"""Print the family count table and compare it with the reference values."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from intposets.checks import TABLE_COUNTS
from intposets.oracle import count_table


@dataclass
class Config:
    n_max: int = 4
    json: bool = False


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--json", action="store_true")
    cfg = Config(**vars(ap.parse_args(argv)))
    table = count_table(cfg.n_max)
    mismatches = {k: {"computed": v, "expected": TABLE_COUNTS[k][: len(v)]}
                  for k, v in table.items() if k in TABLE_COUNTS and v[:5] != TABLE_COUNTS[k][: len(v)]}
    if cfg.json:
        print(json.dumps({"table": table, "mismatches": mismatches}, indent=2))
    else:
        width = max(map(len, table))
        for k, v in table.items():
            flag = "  MISMATCH" if k in mismatches else ""
            print(k.ljust(width), " ".join(f"{c:>6}" for c in v) + flag)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
