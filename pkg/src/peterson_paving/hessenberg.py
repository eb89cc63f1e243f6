"""Hessenberg spaces as sets of negative roots, and their Schubert-cell data.

A Hessenberg space ``H`` containing the Borel is recorded by ``M_H``: the
negative roots whose root spaces lie in ``H``.  ``M_H`` must be closed under
adding simple roots while the sum stays negative.

For the regular nilpotent Hessenberg variety the fixed points are the Weyl
group elements ``w`` for which every ``w^{-1}(alpha_j)`` is positive or lies in
``M_H``.  The cell of such a ``w`` has dimension ``|Phi_w ∩ w M_H|``: the number
of ``beta`` in ``M_H`` with ``w(beta)`` positive.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .rootsys import RootSystem, format_root, parse_root
from .weyl import (WeylElement, enumerate_weyl, group_order, longest_element,
                   subsets)


class InvalidHessenbergSpace(ValueError):
    pass


@dataclass(frozen=True)
class HessenbergSpace:
    """``negatives`` holds the indices of the positive roots ``beta`` with ``-beta`` in ``M_H``."""

    rs: RootSystem
    negatives: frozenset[int]

    def __post_init__(self) -> None:
        bad = [k for k in self.negatives if not 0 <= k < self.rs.n_positive]
        if bad:
            raise InvalidHessenbergSpace("negatives must be stored as positive root indices")
        self.validate()

    def validate(self) -> None:
        rs = self.rs
        for k in self.negatives:
            for s in rs.simple:
                # -beta + alpha_j negative  <=>  beta - alpha_j positive
                d = rs.sub(k, s)
                if d is not None and d < rs.n_positive and d not in self.negatives:
                    raise InvalidHessenbergSpace(
                        f"-{format_root(rs.roots[k])} + simple root is negative but missing")

    def contains(self, k: int) -> bool:
        """Whether the root with full index ``k`` (a negative root) is in ``M_H``."""
        return not self.rs.is_positive(k) and self.rs.negate(k) in self.negatives

    def negative_roots(self) -> list[tuple[int, ...]]:
        return [self.rs.roots[self.rs.negate(k)] for k in sorted(self.negatives)]

    @property
    def is_peterson(self) -> bool:
        return self.negatives == frozenset(self.rs.simple)

    def dump(self) -> str:
        return "\n".join(format_root(r) for r in self.negative_roots()) + "\n"


def peterson(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, frozenset(rs.simple))


def full_flag(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, frozenset(range(rs.n_positive)))


def minimal(rs: RootSystem) -> HessenbergSpace:
    """The Borel itself: no negative roots."""
    return HessenbergSpace(rs, frozenset())


def from_negative_roots(rs: RootSystem, roots: Iterable[Sequence[int]]) -> HessenbergSpace:
    out = set()
    for r in roots:
        k = rs.index(r)
        if rs.is_positive(k):
            raise InvalidHessenbergSpace(f"{format_root(r)} is not a negative root")
        out.add(rs.negate(k))
    return HessenbergSpace(rs, frozenset(out))


def load(rs: RootSystem, path: str | Path) -> HessenbergSpace:
    """Read one signed Dynkin string per line; blank lines and ``#`` comments are skipped."""
    roots = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("-"):
            raise InvalidHessenbergSpace(f"{line!r} does not name a negative root")
        roots.append(parse_root(line, rs.rank))
    return from_negative_roots(rs, roots)


def from_hessenberg_function(rs: RootSystem, h: Sequence[int]) -> HessenbergSpace:
    """Type A: ``h`` is nondecreasing with ``h(i) >= i`` on ``1..n+1``, ``H = span{E_ij : i <= h(j)}``."""
    lt = rs.lie_type
    if lt is None or lt.family != "A":
        raise InvalidHessenbergSpace("Hessenberg functions describe type A only")
    size = lt.rank + 1
    if len(h) != size:
        raise InvalidHessenbergSpace(f"need {size} values")
    for i, v in enumerate(h, start=1):
        if not i <= v <= size or (i > 1 and v < h[i - 2]):
            raise InvalidHessenbergSpace("h must be nondecreasing with i <= h(i) <= n+1")
    roots = []
    for j in range(1, size + 1):
        for i in range(j + 1, h[j - 1] + 1):
            # E_ij with i > j is the root eps_i - eps_j = -(alpha_j + ... + alpha_{i-1})
            roots.append(tuple(-1 if j <= k + 1 < i else 0 for k in range(lt.rank)))
    return from_negative_roots(rs, roots)


# -- cells --------------------------------------------------------------------


def cell_nonempty(H: HessenbergSpace, w: WeylElement) -> bool:
    """Every ``w^{-1}(alpha_j)`` positive or in ``M_H``."""
    inv = w.inverse()
    for s in H.rs.simple:
        img = inv(s)
        if not H.rs.is_positive(img) and not H.contains(img):
            return False
    return True


def cell_dimension(H: HessenbergSpace, w: WeylElement) -> int:
    """``|Phi_w ∩ w M_H|``."""
    n = H.rs.n_positive
    return sum(1 for k in H.negatives if w(k) >= n)


def fixed_points(H: HessenbergSpace, bound: int | None = None) -> list[WeylElement]:
    """Weyl group elements with nonempty cells, shortest first."""
    if H.is_peterson and group_order(H.rs) > 5040:
        return [longest_element(H.rs, J) for J in subsets(range(1, H.rs.rank + 1))]
    return [w for w in enumerate_weyl(H.rs, bound=bound) if cell_nonempty(H, w)]


def betti_numbers(H: HessenbergSpace, bound: int | None = None) -> list[int]:
    """Coefficients of the Poincare polynomial in ``q``, where ``q`` tracks complex dimension."""
    dims = Counter(cell_dimension(H, w) for w in fixed_points(H, bound))
    top = max(dims) if dims else 0
    return [dims.get(d, 0) for d in range(top + 1)]


def peterson_fixed_points(rs: RootSystem) -> dict[frozenset[int], WeylElement]:
    """``J -> w_J`` over all subsets ``J`` of simple roots."""
    return {J: longest_element(rs, J) for J in subsets(range(1, rs.rank + 1))}


def all_hessenberg_spaces(rs: RootSystem) -> list[HessenbergSpace]:
    """Every valid ``M_H``: the lower order ideals of the positive root poset."""
    below = {k: [d for s in rs.simple if (d := rs.sub(k, s)) is not None and d < rs.n_positive]
             for k in range(rs.n_positive)}
    ideals: set[frozenset[int]] = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for k in range(rs.n_positive):
                if k not in ideal and all(d in ideal for d in below[k]):
                    bigger = ideal | {k}
                    if bigger not in ideals:
                        ideals.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return [HessenbergSpace(rs, i) for i in sorted(ideals, key=lambda s: (len(s), sorted(s)))]
