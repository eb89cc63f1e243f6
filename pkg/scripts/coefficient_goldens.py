"""Top-power coefficients of p_v(w0) for both Coxeter orders of the full diagram.

Writes a JSON record when --out is given.
"""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from peterson_paving.billey_kumar import billey, coefficient
from peterson_paving.rootsys import root_system
from peterson_paving.weyl import coxeter_decreasing, coxeter_increasing, longest_element

# (type, 1-based variable whose top power is read off)
TARGETS = [("G2", 2), ("F4", 1), ("E6", 1), ("E7", 7), ("E8", 8)]


@dataclass
class Golden:
    lie_type: str
    variable: int
    increasing: int
    decreasing: int
    n_terms: int


def compute(name: str, var: int) -> Golden:
    rs = root_system(name)
    n = rs.rank
    exps = [0] * n
    exps[var - 1] = n
    w0 = longest_element(rs)
    up = billey(rs, coxeter_increasing(rs, range(1, n + 1)), w0)
    down = billey(rs, coxeter_decreasing(rs, range(1, n + 1)), w0)
    return Golden(name, var, coefficient(up, exps), coefficient(down, exps), len(up.terms))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None)
    a = ap.parse_args()
    rows = [compute(*t) for t in TARGETS]
    for g in rows:
        print(f"{g.lie_type:<3} a{g.variable}^rank: increasing={g.increasing:<6} "
              f"decreasing={g.decreasing:<6} terms={g.n_terms}")
    if a.out:
        with open(a.out, "w") as fh:
            json.dump([asdict(g) for g in rows], fh, indent=2)


if __name__ == "__main__":
    main()
