"""Rank and determinant of every paving matrix, plus the tabulated spot checks.

    python scripts/appendix_report.py --types F4 E6 E7 E8
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from peterson_paving.paving_matrices import (SPOT_CHECKS, run_spot_check, verify_classical,
                                             verify_exceptional)
from peterson_paving.rootsys import LieType


@dataclass
class Config:
    types: list[str] = field(default_factory=lambda: ["G2", "F4", "E6", "E7", "E8"])
    classical_max_rank: int = 8


def main(cfg: Config) -> None:
    t0 = time.perf_counter()
    for name in cfg.types:
        lt = LieType.parse(name)
        reps = verify_classical(lt) if lt.is_classical else verify_exceptional(lt)
        dets = " ".join(str(r.det) for r in reps)
        full = all(r.full_rank for r in reps)
        print(f"{name:<4} levels={len(reps):>2} full_rank={full} dets: {dets}")
        for c in SPOT_CHECKS:
            if c.lie_type == name:
                r = run_spot_check(c)
                print(f"      h{c.height:<2} labels={c.labels} det={r.det} terms={r.nonzero_terms} "
                      f"{'ok' if r.passed else 'MISMATCH'}")
    for fam, lo in [("A", 1), ("B", 2), ("C", 2), ("D", 3)]:
        bad = [f"{fam}{n}" for n in range(lo, cfg.classical_max_rank + 1)
               if any(r.det == 0 for r in verify_classical(LieType(fam, n)))]
        print(f"classical {fam}{lo}..{fam}{cfg.classical_max_rank}: singular levels in {bad or 'none'}")
    print(f"[{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", nargs="+", default=Config().types)
    ap.add_argument("--classical-max-rank", type=int, default=8)
    a = ap.parse_args()
    main(Config(a.types, a.classical_max_rank))
