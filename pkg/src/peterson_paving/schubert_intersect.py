"""Torus fixed points of Schubert-type intersections.

A Schubert variety ``X_w`` contains the fixed points ``uB`` with ``u <= w``; the
opposite variety ``X^v`` contains those with ``u >= v``.  In the Peterson
variety the Schubert piece for ``J`` contains exactly the points ``w_L`` with
``L`` inside ``J``.  Everything here is Bruhat combinatorics; no
multiplicities are computed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .hessenberg import cell_dimension, peterson
from .rootsys import RootSystem
from .weyl import (WeylElement, bruhat_leq, coxeter_decreasing, enumerate_weyl,
                   longest_element, subsets)


@dataclass(frozen=True)
class FixedPointSet:
    elements: tuple[WeylElement, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate fixed points")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self.elements

    def words(self) -> list[list[int]]:
        return [list(w.normal_word()) for w in self.elements]


def format_subset(J: Iterable[int]) -> str:
    return ",".join(str(j) for j in sorted(J))


def parse_subset(text: str) -> frozenset[int]:
    text = text.strip()
    return frozenset(int(x) for x in text.split(",") if x.strip()) if text else frozenset()


def interval_fixed_points(rs: RootSystem, v: WeylElement, w: WeylElement,
                          bound: int | None = None) -> FixedPointSet:
    """``{u : v <= u <= w}``, shortest first."""
    if not bruhat_leq(v, w):
        return FixedPointSet(())
    word = w.normal_word()
    out = [u for u in enumerate_weyl(rs, bound=bound)
           if v.length() <= u.length() <= w.length() and bruhat_leq(u, w, word) and bruhat_leq(v, u)]
    return FixedPointSet(tuple(out))


def peterson_intersection_fixed_points(rs: RootSystem, J: Iterable[int], K: Iterable[int]) -> FixedPointSet:
    """``{w_L : v_K <= w_L <= w_J}`` over all subsets ``L`` of simple roots."""
    J, K = frozenset(J), frozenset(K)
    w_J = longest_element(rs, J)
    v_K = coxeter_decreasing(rs, K)
    word = w_J.normal_word()
    out = []
    for L in subsets(range(1, rs.rank + 1)):
        w_L = longest_element(rs, L)
        if bruhat_leq(w_L, w_J, word) and bruhat_leq(v_K, w_L):
            out.append(w_L)
    return FixedPointSet(tuple(out))


def proper_intersection_check(rs: RootSystem, J: Iterable[int]) -> bool:
    """Dimensions add up to ``dim G/B`` and the only common fixed point is ``w_J``."""
    J = frozenset(J)
    w_J = longest_element(rs, J)
    v_J = coxeter_decreasing(rs, J)
    peterson_piece = cell_dimension(peterson(rs), w_J)
    opposite = rs.n_positive - v_J.length()
    if peterson_piece != len(J) or peterson_piece + opposite != rs.n_positive:
        return False
    return peterson_intersection_fixed_points(rs, J, J).elements == (w_J,)


@dataclass
class DiagonalReport:
    k: int
    subsets: list[frozenset[int]]
    matrix: list[list[int]]
    fixed_points: dict[tuple[str, str], list[list[int]]] = field(default_factory=dict)

    @property
    def is_identity(self) -> bool:
        n = len(self.subsets)
        return all(self.matrix[a][b] == (a == b) for a in range(n) for b in range(n))


def diagonal_matrix_structure(rs: RootSystem, k: int) -> DiagonalReport:
    """0/1 matrix over ``|J| = |K| = k`` marking nonempty fixed-point intersections."""
    if not 0 <= k <= rs.rank:
        raise ValueError(f"k must lie in 0..{rs.rank}")
    subs = [J for J in subsets(range(1, rs.rank + 1)) if len(J) == k]
    subs.sort(key=sorted)
    matrix, points = [], {}
    for J in subs:
        row = []
        for K in subs:
            fp = peterson_intersection_fixed_points(rs, J, K)
            row.append(1 if len(fp) else 0)
            points[(format_subset(J), format_subset(K))] = fp.words()
        matrix.append(row)
    return DiagonalReport(k, subs, matrix, points)


def b5_example() -> dict[str, bool]:
    """The non-comparable pair ``J = {2,3,4,5}``, ``K = {1,2,4,5}`` in B5."""
    from .rootsys import root_system

    rs = root_system("B5")
    J, K = {2, 3, 4, 5}, {1, 2, 4, 5}
    return {
        "v_K <= w_J": bruhat_leq(coxeter_decreasing(rs, K), longest_element(rs, J)),
        "v_J <= w_K": bruhat_leq(coxeter_decreasing(rs, J), longest_element(rs, K)),
    }
