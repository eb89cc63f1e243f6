"""Height-by-height matrices of the paving argument.

``paving_matrix(rs, i)`` has rows indexed by the roots of height ``i + 1`` and
columns by the roots of height ``i``; the entry at ``(gamma, alpha)`` is
``m(alpha, gamma - alpha)`` when ``gamma - alpha`` is simple and zero otherwise.

The ribbon map ``r`` sends each root of height ``i >= 2`` to a root of height
``i - 1`` one simple root below it, injectively at every height.  Following
``r`` down from a root ends at a simple root ``alpha_j``; ``j`` is the root's
column label.  ``square_submatrix(rs, i)`` keeps the columns of height ``i - 1``
hit by ``r``, giving a square matrix.

Classical ribbons are generated from epsilon coordinates.  Exceptional ribbons
are shipped as data files (``data/ribbon_<type>.txt``) holding one
``level gamma r(gamma)`` line per root and a checksum header.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .chevalley import ChevalleyTable, structure_constants
from .exact import bareiss_det, rank as exact_rank
from .matrix_realization import ClassicalRealization
from .rootsys import LieType, Root, RootSystem, format_root, parse_root, root_system


class RibbonDataError(ValueError):
    pass


@dataclass
class IntMatrix:
    rows: list[Root]
    cols: list[Root]
    entries: list[list[int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def det(self) -> int:
        if len(self.rows) != len(self.cols):
            raise ValueError(f"determinant of a {self.shape} matrix")
        return bareiss_det(self.entries)

    def rank(self) -> int:
        return exact_rank(self.entries) if self.rows and self.cols else 0

    def select_columns(self, keep: Sequence[Root]) -> "IntMatrix":
        pos = [self.cols.index(c) for c in keep]
        return IntMatrix(list(self.rows), list(keep), [[r[p] for p in pos] for r in self.entries])

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(len(self.rows)) for j in range(min(i, len(self.cols))))

    def pretty(self) -> str:
        head = " " * 10 + " ".join(f"{format_root(c):>10}" for c in self.cols)
        body = [f"{format_root(r):>10}" + " ".join(f"{v:>10}" for v in row) for r, row in zip(self.rows, self.entries)]
        return "\n".join([head] + body)


def leibniz_terms(entries: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero signed terms of the permutation expansion of a small square matrix."""
    n = len(entries)
    out = []
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= entries[i][j]
            if prod == 0:
                break
        if prod:
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            out.append(-prod if inversions % 2 else prod)
    return out


# -- ribbons ------------------------------------------------------------------


def _classical_columns(lt: LieType) -> list[list[tuple[int, ...]]]:
    """Columns of the classical root tables in display order, as epsilon vectors."""
    n, fam = lt.rank, lt.family
    dim = n + 1 if fam == "A" else n

    def e(*pairs: tuple[int, int]) -> tuple[int, ...]:
        v = [0] * dim
        for idx, c in pairs:
            v[idx - 1] += c
        return tuple(v)

    cols = []
    if fam == "A":
        for j in range(1, n + 1):
            cols.append([e((j, 1), (k, -1)) for k in range(j + 1, n + 2)])
    elif fam in "BC":
        for j in range(1, n + 1):
            col = [e((j, 1), (k, -1)) for k in range(j + 1, n + 1)]
            if fam == "B":
                col.append(e((j, 1)))
                col += [e((j, 1), (k, 1)) for k in range(n, j, -1)]
            else:
                col += [e((j, 1), (k, 1)) for k in range(n, j, -1)]
                col.append(e((j, 2)))
            cols.append(col)
    else:
        for j in range(1, n - 1):
            col = [e((j, 1), (k, -1)) for k in range(j + 1, n + 1)]
            col += [e((j, 1), (k, 1)) for k in range(n - 1, j, -1)]
            cols.append(col)
        cols.append([e((k, 1), (n, 1)) for k in range(n - 1, 0, -1)])
        cols.append([e((n - 1, 1), (n, -1))])
    return cols


def _ribbon_from_columns(rs: RootSystem, columns: Sequence[Sequence[Root]]) -> dict[int, int]:
    r = {}
    for col in columns:
        for lo, hi in zip(col, col[1:]):
            r[rs.index(hi)] = rs.index(lo)
    return r


def _parse_ribbon_file(rs: RootSystem, text: str) -> dict[int, int]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# ribbon "):
        raise RibbonDataError("missing ribbon header")
    head = lines[0].split()
    if head[2] != rs.name:
        raise RibbonDataError(f"ribbon file is for {head[2]}, not {rs.name}")
    body = "\n".join(lines[1:]) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()[:16]
    if head[3] != f"sha256={digest}":
        raise RibbonDataError("ribbon checksum mismatch")
    r = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        level, g, lo = line.split()
        gi = rs.index(parse_root(g, rs.rank))
        li = rs.index(parse_root(lo, rs.rank))
        if rs.heights[gi] != int(level):
            raise RibbonDataError(f"{g} is not at height {level}")
        r[gi] = li
    return r


def validate_ribbon(rs: RootSystem, r: dict[int, int]) -> None:
    """Raise unless ``r`` is an injective map ``Phi_i -> Phi_{i-1}`` with simple steps, for every ``i >= 2``."""
    for h in range(2, rs.max_height + 1):
        layer = rs.by_height[h]
        missing = [k for k in layer if k not in r]
        if missing:
            raise RibbonDataError(f"no image for {format_root(rs.roots[missing[0]])}")
        images = [r[k] for k in layer]
        if len(set(images)) != len(images):
            raise RibbonDataError(f"ribbon not injective at height {h}")
        for k in layer:
            lo = r[k]
            if rs.heights[lo] != h - 1:
                raise RibbonDataError(f"image of {format_root(rs.roots[k])} has the wrong height")
            d = rs.sub(k, lo)
            if d is None or rs.simple_index(d) is None:
                raise RibbonDataError(f"{format_root(rs.roots[k])} - r(.) is not simple")
    extra = [k for k in r if rs.heights[k] < 2]
    if extra:
        raise RibbonDataError("ribbon defined on simple roots")


@lru_cache(maxsize=None)
def _ribbon(name: str) -> tuple[tuple[int, int], ...]:
    rs = root_system(name)
    lt = rs.lie_type
    if lt.is_classical:
        real = ClassicalRealization(lt)
        cols = [[real.from_eps(v) for v in col] for col in _classical_columns(lt)]
        r = _ribbon_from_columns(rs, cols)
    else:
        text = resources.files("peterson_paving").joinpath(f"data/ribbon_{name}.txt").read_text()
        r = _parse_ribbon_file(rs, text)
    validate_ribbon(rs, r)
    return tuple(sorted(r.items()))


def ribbon(rs: RootSystem) -> dict[int, int]:
    """The ribbon map as ``{root index: image index}``."""
    return dict(_ribbon(rs.name))


def column_label(rs: RootSystem, k: int) -> int:
    """1-based index of the simple root at the bottom of the root's column."""
    r = ribbon(rs)
    while k in r:
        k = r[k]
    return rs.simple_index(k) + 1


def column_order(lt: LieType) -> list[int]:
    """Left-to-right column labels of the classical display tables."""
    n = lt.rank
    if lt.family == "D":
        return list(range(1, n - 1)) + [n, n - 1]
    return list(range(1, n + 1))


def _sort_key(rs: RootSystem, k: int) -> int:
    lab = column_label(rs, k)
    lt = rs.lie_type
    if lt is not None and lt.is_classical:
        return column_order(lt).index(lab)
    return lab


# -- matrices -----------------------------------------------------------------


def _ordered_layer(rs: RootSystem, h: int) -> list[int]:
    return sorted(rs.by_height[h], key=lambda k: _sort_key(rs, k)) if 1 <= h <= rs.max_height else []


def paving_matrix(rs: RootSystem, i: int, table: ChevalleyTable | None = None) -> IntMatrix:
    """Rows: height ``i + 1``; columns: height ``i``; both in column-label order."""
    t = table or structure_constants(rs)
    rows = _ordered_layer(rs, i + 1)
    cols = _ordered_layer(rs, i)
    entries = []
    for g in rows:
        line = []
        for a in cols:
            d = rs.sub(g, a)
            line.append(t.m(a, d) if d is not None and rs.simple_index(d) is not None else 0)
        entries.append(line)
    return IntMatrix([rs.roots[k] for k in rows], [rs.roots[k] for k in cols], entries)


def square_submatrix(rs: RootSystem, i: int, table: ChevalleyTable | None = None) -> IntMatrix:
    """Rows: height ``i``; columns: the ribbon images of those rows."""
    if i < 2:
        raise ValueError("the square submatrix needs height at least 2")
    full = paving_matrix(rs, i - 1, table)
    r = ribbon(rs)
    keep = [rs.roots[r[rs.index(g)]] for g in full.rows]
    return full.select_columns(keep)


def labeled_submatrix(rs: RootSystem, i: int, labels: Sequence[int] | None,
                      table: ChevalleyTable | None = None) -> IntMatrix:
    """``paving_matrix(rs, i)`` restricted to the columns carrying the given labels."""
    full = paving_matrix(rs, i, table)
    if labels is None:
        return full
    by_label = {column_label(rs, rs.index(c)): c for c in full.cols}
    try:
        keep = [by_label[lab] for lab in sorted(labels)]
    except KeyError as exc:
        raise ValueError(f"no column labelled {exc.args[0]} at height {i}") from None
    return full.select_columns(keep)


# -- verification -------------------------------------------------------------


@dataclass
class LevelReport:
    height: int
    shape: tuple[int, int]
    rank: int
    det: int | None
    triangular: bool | None = None

    @property
    def full_rank(self) -> bool:
        return self.rank == self.shape[0]


def verify_classical(lt: LieType) -> list[LevelReport]:
    """Determinant of every square submatrix, with the triangular-shape check."""
    rs = root_system(lt)
    out = []
    for i in range(2, rs.max_height + 1):
        m = square_submatrix(rs, i)
        tri = m.is_upper_triangular() if lt.family in "ABC" else None
        out.append(LevelReport(i, m.shape, m.rank(), m.det(), tri))
    return out


def d_type_height_two_triangular(lt: LieType) -> bool:
    """At height 2 in type D, reordering the columns as ``alpha_1..alpha_{n-3}, alpha_n, alpha_{n-2}`` makes the matrix upper triangular."""
    if lt.family != "D":
        raise ValueError("type D only")
    rs = root_system(lt)
    n = lt.rank
    m = square_submatrix(rs, 2)
    r = ribbon(rs)
    order = list(range(1, n - 2)) + [n, n - 2]
    cols = [rs.roots[rs.simple[j - 1]] for j in order]
    rows = []
    for c in cols:
        ci = rs.index(c)
        rows.append(next(g for g in m.rows if r[rs.index(g)] == ci))
    entries = [[m.entries[m.rows.index(g)][m.cols.index(c)] for c in cols] for g in rows]
    return IntMatrix(rows, cols, entries).is_upper_triangular()


def verify_exceptional(lt: LieType) -> list[LevelReport]:
    """Rank of every paving matrix, plus the determinant of its ribbon-selected square part."""
    rs = root_system(lt)
    out = []
    for i in range(1, rs.max_height):
        m = paving_matrix(rs, i)
        sq = square_submatrix(rs, i + 1)
        out.append(LevelReport(i, m.shape, m.rank(), sq.det()))
    return out


@dataclass(frozen=True)
class SpotCheck:
    """A tabulated claim about one labeled square selection of a paving matrix.

    ``abs_det`` holds a printed determinant in absolute value; when it is None
    the claim is that the permutation expansion has a single nonzero term.
    """

    lie_type: str
    height: int
    labels: tuple[int, ...] | None
    abs_det: int | None


SPOT_CHECKS: tuple[SpotCheck, ...] = (
    SpotCheck("F4", 1, (1, 2, 3), None),
    SpotCheck("F4", 2, None, None),
    SpotCheck("F4", 3, None, 3),
    SpotCheck("F4", 4, None, None),
    SpotCheck("F4", 5, (1, 2), None),
    SpotCheck("E6", 1, (1, 3, 4, 5, 6), None),
    SpotCheck("E6", 2, None, 2),
    SpotCheck("E6", 3, None, 3),
    SpotCheck("E6", 4, (1, 3, 5, 6), None),
    SpotCheck("E6", 5, (1, 3, 5), None),
    SpotCheck("E6", 6, None, None),
    SpotCheck("E6", 7, (1, 6), None),
    SpotCheck("E7", 1, (1, 2, 3, 5, 6, 7), None),
    SpotCheck("E7", 2, None, 2),
    SpotCheck("E7", 3, None, 3),
    SpotCheck("E7", 4, None, 2),
    SpotCheck("E7", 5, (1, 3, 5, 6, 7), 3),
    SpotCheck("E7", 7, (1, 3, 5, 6), None),
    SpotCheck("E7", 8, None, 2),
    SpotCheck("E7", 9, (3, 6, 7), None),
    SpotCheck("E7", 10, None, None),
    SpotCheck("E8", 1, (1, 2, 3, 4, 5, 6, 7), None),
    SpotCheck("E8", 2, None, 2),
    SpotCheck("E8", 3, None, 3),
    SpotCheck("E8", 4, None, 2),
    SpotCheck("E8", 5, None, 5),
    SpotCheck("E8", 6, None, None),
    SpotCheck("E8", 7, (1, 3, 4, 5, 6, 8), None),
    SpotCheck("E8", 8, None, 2),
    SpotCheck("E8", 9, None, 3),
    SpotCheck("E8", 10, None, None),
    SpotCheck("E8", 11, (1, 3, 4, 6, 7), 2),
    SpotCheck("E8", 12, None, None),
    SpotCheck("E8", 13, (1, 3, 4, 6), None),
    SpotCheck("E8", 14, None, 2),
    SpotCheck("E8", 15, None, None),
    SpotCheck("E8", 16, None, None),
    SpotCheck("E8", 17, (3, 4, 6), None),
    SpotCheck("E8", 18, None, None),
    SpotCheck("E8", 19, (3, 6), None),
)


@dataclass
class SpotResult:
    check: SpotCheck
    det: int
    nonzero_terms: int

    @property
    def passed(self) -> bool:
        if self.check.abs_det is None:
            return self.nonzero_terms == 1 and self.det != 0
        return abs(self.det) == self.check.abs_det


def run_spot_check(check: SpotCheck) -> SpotResult:
    rs = root_system(check.lie_type)
    m = labeled_submatrix(rs, check.height, check.labels)
    return SpotResult(check, m.det(), len(leibniz_terms(m.entries)))
