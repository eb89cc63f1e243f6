"""Adjoint elimination against the combinatorial cell formula, over every Hessenberg space."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from peterson_paving.adjoint_oracle import check_dimension_formula, dimension_identity_holds
from peterson_paving.hessenberg import all_hessenberg_spaces, cell_nonempty
from peterson_paving.rootsys import root_system
from peterson_paving.weyl import enumerate_weyl


@dataclass
class Config:
    types: list[str] = field(default_factory=lambda: ["A2", "A3", "B2", "B3", "C3", "G2", "A4"])
    seed: int = 20240611


def main(cfg: Config) -> None:
    for name in cfg.types:
        t0 = time.perf_counter()
        rs = root_system(name)
        W = enumerate_weyl(rs)
        spaces = all_hessenberg_spaces(rs)
        bad = identity_bad = 0
        for H in spaces:
            for w in W:
                bad += not check_dimension_formula(H, w, seed=cfg.seed).agrees
                identity_bad += dimension_identity_holds(H, w) != cell_nonempty(H, w)
        print(f"{name:<3} spaces={len(spaces):>3} pairs={len(spaces) * len(W):>6} "
              f"disagreements={bad} identity!=nonempty={identity_bad} [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", nargs="+", default=Config().types)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    main(Config(a.types, a.seed))
