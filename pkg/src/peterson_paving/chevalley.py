"""Structure constants of a Chevalley basis.

``m(a, b)`` is the integer with ``[E_a, E_b] = m(a, b) E_{a+b}``.  Signs are
fixed by declaring every extraspecial pair positive, where pairs are compared
by the canonical root order (height, then descending lexicographic).  All
other constants follow from the standard relations between the ``N_{a,b}``:
antisymmetry, the cyclic rule for triples summing to zero, the sign flip
under negation, and the four-root identity.

The resulting basis also satisfies ``[E_a, E_{-a}] = H_a`` (the coroot),
which :func:`bracket` uses to check the Jacobi identity on the whole algebra.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from itertools import combinations
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from . import exact
from .config import LIMITS, cache_dir
from .matrix_realization import ClassicalRealization
from .rootsys import RootSystem, format_root, parse_root, root_system

CONVENTION = "extraspecial-positive/height-desclex"


class StructureConstantError(ArithmeticError):
    pass


@dataclass
class ChevalleyTable:
    rs: RootSystem
    table: dict[tuple[int, int], int] = field(repr=False)
    convention: str = CONVENTION

    def m(self, a: int, b: int) -> int:
        """Structure constant for root indices; zero when ``a + b`` is not a root."""
        return self.table.get((a, b), 0)

    def m_roots(self, alpha, beta) -> int:
        rs = self.rs
        return self.m(rs.index(alpha), rs.index(beta))

    def chain(self, j: int, a: int, b: int) -> int:
        """Coefficient of ``E_{b + j a}`` in ``(ad E_a)^j E_b``."""
        out = 1
        cur = b
        for _ in range(j):
            c = self.m(a, cur)
            if c == 0:
                return 0
            out *= c
            cur = self.rs.add(a, cur)
        return out

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for (a, b), v in sorted(self.table.items()):
            yield a, b, v

    def checksum(self) -> str:
        h = hashlib.sha256()
        for a, b, v in self.entries():
            h.update(f"{a},{b},{v};".encode())
        return h.hexdigest()[:16]


def build_structure_constants(rs: RootSystem) -> ChevalleyTable:
    n_pos = rs.n_positive
    norms = rs.norms
    pos: dict[tuple[int, int], int] = {}

    def exact_int(x: Fraction) -> int:
        if x.denominator != 1:
            raise StructureConstantError(f"non-integral structure constant {x}")
        return int(x)

    def n(x: int, y: int) -> int:
        s = rs.add(x, y)
        if s is None:
            return 0
        px, py = x < n_pos, y < n_pos
        if px and py:
            return pos[(x, y)]
        if not px and not py:
            return -n(rs.negate(x), rs.negate(y))
        if not px:
            return -n(y, x)
        z = rs.negate(s)
        if s < n_pos:
            return exact_int(Fraction(norms[z], norms[x]) * n(y, z))
        return exact_int(Fraction(norms[z], norms[y]) * n(z, x))

    for xi in range(n_pos):
        pairs = []
        for a in range(xi):
            b = rs.sub(xi, a)
            if b is not None and b < n_pos and a < b:
                pairs.append((a, b))
        if not pairs:
            continue
        a0, b0 = pairs[0]
        p = rs.root_string_down(rs.roots[a0], rs.roots[b0])
        pos[(a0, b0)] = p + 1
        pos[(b0, a0)] = -(p + 1)
        for a, b in pairs[1:]:
            total = Fraction(0)
            d = rs.sub(b, a0)
            if d is not None:
                total += Fraction(n(b, rs.negate(a0)) * n(a, rs.negate(b0)), norms[d])
            d = rs.sub(a, a0)
            if d is not None:
                total += Fraction(n(rs.negate(a0), a) * n(b, rs.negate(b0)), norms[d])
            val = exact_int(Fraction(norms[xi]) / pos[(a0, b0)] * total)
            pos[(a, b)] = val
            pos[(b, a)] = -val

    table: dict[tuple[int, int], int] = {}
    total_roots = len(rs.roots)
    for x in range(total_roots):
        for y in range(total_roots):
            if rs.add(x, y) is not None:
                table[(x, y)] = n(x, y)
    return ChevalleyTable(rs, table)


@lru_cache(maxsize=None)
def _memo_table(name: str) -> ChevalleyTable:
    rs = root_system(name)
    d = cache_dir()
    if d is not None:
        path = d / f"chevalley_{name}.txt"
        if path.exists():
            try:
                return load_table(rs, path)
            except (ValueError, KeyError):
                pass
        t = build_structure_constants(rs)
        d.mkdir(parents=True, exist_ok=True)
        save_table(t, path)
        return t
    return build_structure_constants(rs)


def structure_constants(rs: RootSystem) -> ChevalleyTable:
    """Cached table for named types, fresh build for anonymous subsystems."""
    if rs.lie_type is None:
        return build_structure_constants(rs)
    return _memo_table(str(rs.lie_type))


# -- persistence --------------------------------------------------------------


def save_table(t: ChevalleyTable, path: Path) -> None:
    lines = [f"# chevalley {t.rs.name} convention={t.convention} checksum={t.checksum()}"]
    for a, b, v in t.entries():
        lines.append(f"{format_root(t.rs.roots[a])} {format_root(t.rs.roots[b])} {v}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(rs: RootSystem, path: Path) -> ChevalleyTable:
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("# chevalley "):
        raise ValueError("missing cache header")
    fields = dict(f.split("=", 1) for f in lines[0].split()[3:])
    name = lines[0].split()[2]
    if name != rs.name or fields.get("convention") != CONVENTION:
        raise ValueError("cache belongs to another type or convention")
    table = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        sa, sb, sv = line.split()
        table[(rs.index(parse_root(sa, rs.rank)), rs.index(parse_root(sb, rs.rank)))] = int(sv)
    t = ChevalleyTable(rs, table)
    if t.checksum() != fields.get("checksum"):
        raise ValueError("cache checksum mismatch")
    return t


# -- the full Lie algebra -----------------------------------------------------

Element = dict[tuple[str, int], Fraction]


def coroot_in_simple_coroots(rs: RootSystem, k: int) -> list[Fraction]:
    """Coefficients of ``(root k)^vee`` over the simple coroots."""
    r = rs.roots[k]
    nk = rs.norms[k]
    return [Fraction(c * rs.gram[i][i], nk) for i, c in enumerate(r)]


def bracket(t: ChevalleyTable, x: Element, y: Element) -> Element:
    rs = t.rs
    out: dict[tuple[str, int], Fraction] = {}

    def add(key, val):
        if val:
            out[key] = out.get(key, Fraction(0)) + val

    for (kx, ix), cx in x.items():
        for (ky, iy), cy in y.items():
            c = cx * cy
            if kx == "H" and ky == "H":
                continue
            if kx == "H":
                add(("E", iy), c * sum(rs.roots[iy][j] * rs.cartan[ix][j] for j in range(rs.rank)))
            elif ky == "H":
                add(("E", ix), -c * sum(rs.roots[ix][j] * rs.cartan[iy][j] for j in range(rs.rank)))
            elif rs.negate(ix) == iy:
                for i, h in enumerate(coroot_in_simple_coroots(rs, ix)):
                    add(("H", i), c * h)
            else:
                s = rs.add(ix, iy)
                if s is not None:
                    add(("E", s), c * t.m(ix, iy))
    return {k: v for k, v in out.items() if v != 0}


def jacobi_defect(t: ChevalleyTable, a: tuple[str, int], b: tuple[str, int], c: tuple[str, int]) -> Element:
    one = Fraction(1)
    x, y, z = {a: one}, {b: one}, {c: one}
    total: dict[tuple[str, int], Fraction] = {}
    for term in (bracket(t, x, bracket(t, y, z)), bracket(t, y, bracket(t, z, x)), bracket(t, z, bracket(t, x, y))):
        for k, v in term.items():
            total[k] = total.get(k, Fraction(0)) + v
    return {k: v for k, v in total.items() if v != 0}


# -- the independent matrix oracle --------------------------------------------


@dataclass
class OracleReport:
    lie_type: str
    pairs_checked: int
    magnitude_mismatches: list[tuple[str, str, int, int]]
    sign_mismatches: list[tuple[str, str]]
    normalization_failures: list[str]

    @property
    def ok(self) -> bool:
        return not (self.magnitude_mismatches or self.sign_mismatches or self.normalization_failures)


def verify_matrix_oracle(rs: RootSystem) -> OracleReport:
    """Rebuild a Chevalley basis inside a classical matrix algebra and compare.

    Root vectors come from the defining matrix representation.  Simple root
    vectors are normalised against their transposes, higher root vectors are
    produced by bracketing with simple ones and rescaled so that the coroot
    condition holds.  The comparison is up to a sign change ``E_a -> eta_a E_a``
    (with ``eta_{-a} = eta_a``), which is exactly the freedom in the choice
    of a Chevalley basis.
    """
    lt = rs.lie_type
    if lt is None or not lt.is_classical or lt.rank > 4:
        raise ValueError("the matrix oracle covers classical types of rank at most 4")
    if rs.n_positive > LIMITS.max_oracle_roots:
        raise ValueError("too many roots for the matrix oracle")
    real = ClassicalRealization(lt)
    t = structure_constants(rs)
    n_pos = rs.n_positive
    eps = [real.to_eps(r) for r in rs.roots]
    failures: list[str] = []

    pos_vec: dict[int, exact.Matrix] = {}
    neg_vec: dict[int, exact.Matrix] = {}
    for i, k in enumerate(rs.simple):
        e = real.root_vector(eps[k])
        h = exact.commutator(e, exact.transpose(e))
        lam = Fraction(2) / real.eval_root(eps[k], h)
        pos_vec[k] = e
        neg_vec[k] = exact.scale(lam, exact.transpose(e))

    eta = {k: 1 for k in rs.simple}
    for g in range(n_pos):
        if g in pos_vec:
            continue
        i = next(i for i, k in enumerate(rs.simple) if rs.sub(g, k) is not None and rs.sub(g, k) < n_pos)
        si = rs.simple[i]
        beta = rs.sub(g, si)
        x = exact.commutator(pos_vec[si], pos_vec[beta])
        y = exact.commutator(neg_vec[si], neg_vec[beta])
        p = rs.root_string_down(rs.roots[si], rs.roots[beta])
        val = real.eval_root(eps[g], exact.scale(Fraction(-1), exact.commutator(x, y)))
        if val != 2 * (p + 1) ** 2:
            failures.append(format_root(rs.roots[g]))
        c = Fraction(1, p + 1)
        pos_vec[g] = exact.scale(c, x)
        neg_vec[g] = exact.scale(-c, y)
        # the table's E_g maps to eta_g times the matrix E_g
        eta[g] = eta[si] * eta[beta] * (1 if t.m(si, beta) > 0 else -1)

    vec = {}
    for k in range(n_pos):
        vec[k] = pos_vec[k]
        vec[rs.negate(k)] = neg_vec[k]
        eta[rs.negate(k)] = eta[k]
        if not real.in_algebra(pos_vec[k]) or not real.in_algebra(neg_vec[k]):
            failures.append("outside algebra: " + format_root(rs.roots[k]))

    mags: list[tuple[str, str, int, int]] = []
    signs: list[tuple[str, str]] = []
    checked = 0
    for (a, b), tab in t.table.items():
        s = rs.add(a, b)
        br = exact.commutator(vec[a], vec[b])
        target = vec[s]
        r, c = next((r, c) for r in range(len(target)) for c in range(len(target)) if target[r][c] != 0)
        coeff = br[r][c] / target[r][c]
        if exact.scale(coeff, target) != br:
            failures.append(f"bracket not proportional: {format_root(rs.roots[a])},{format_root(rs.roots[b])}")
            continue
        checked += 1
        sa, sb = format_root(rs.roots[a]), format_root(rs.roots[b])
        if abs(coeff) != abs(tab):
            mags.append((sa, sb, int(abs(coeff)), abs(tab)))
        elif coeff != eta[a] * eta[b] * eta[s] * tab:
            signs.append((sa, sb))
    return OracleReport(str(lt), checked, mags, signs, failures)


def expected_magnitude(rs: RootSystem, a: int, b: int) -> int:
    """``p + 1`` for the ``a``-string through ``b``, zero if ``a + b`` is not a root."""
    if rs.add(a, b) is None:
        return 0
    return rs.root_string_down(rs.roots[a], rs.roots[b]) + 1


def simply_laced_first_rule_holds(t: ChevalleyTable) -> bool:
    """``m(alpha_i, beta) = 1`` when ``i`` is the least index with ``alpha_i + beta - alpha_j`` a root."""
    rs = t.rs
    n_pos = rs.n_positive
    for i, si in enumerate(rs.simple):
        for b in range(n_pos):
            s = rs.add(si, b)
            if s is None:
                continue
            first = min(j for j, sj in enumerate(rs.simple) if (d := rs.sub(s, sj)) is not None and d < n_pos)
            if first == i and t.m(si, b) != 1:
                return False
    return True


def simply_laced_second_rule_violations(t: ChevalleyTable, simple_second: bool = False) -> list[tuple[int, int]]:
    """Pairs breaking ``m(a, b) = m(alpha_i, a - alpha_i) m(a - alpha_i, b)``.

    ``i`` is the least index with ``a + b - alpha_i`` a positive root; the rule
    applies only when ``a - alpha_i`` is a positive root as well.  With
    ``simple_second`` only pairs whose second root is simple are examined.
    """
    rs = t.rs
    n_pos = rs.n_positive
    bad = []
    for a in range(n_pos):
        for b in (rs.simple if simple_second else range(n_pos)):
            s = rs.add(a, b)
            if s is None:
                continue
            si = next(sj for sj in rs.simple if (d := rs.sub(s, sj)) is not None and d < n_pos)
            rest = rs.sub(a, si)
            if rest is None or rest >= n_pos:
                continue
            if t.m(a, b) != t.m(si, rest) * t.m(rest, b):
                bad.append((a, b))
    return bad


def factorial(j: int) -> int:
    return math.factorial(j)


def basis(rs: RootSystem) -> list[tuple[str, int]]:
    return [("H", i) for i in range(rs.rank)] + [("E", k) for k in range(len(rs.roots))]


def jacobi_violations(t: ChevalleyTable, limit: int | None = None) -> list[tuple]:
    """Every triple of distinct basis vectors with a nonzero Jacobi sum.

    The Jacobi sum is alternating once the bracket is antisymmetric, so
    unordered triples cover everything; antisymmetry is checked separately.
    """
    out = []
    for a, b, c in combinations(basis(t.rs), 3):
        if jacobi_defect(t, a, b, c):
            out.append((a, b, c))
            if limit is not None and len(out) >= limit:
                break
    return out


def antisymmetry_violations(t: ChevalleyTable) -> list[tuple]:
    one = Fraction(1)
    out = []
    for a, b in combinations(basis(t.rs), 2):
        xy = bracket(t, {a: one}, {b: one})
        yx = bracket(t, {b: one}, {a: one})
        if any(xy.get(k, 0) + yx.get(k, 0) for k in set(xy) | set(yx)):
            out.append((a, b))
    return out
