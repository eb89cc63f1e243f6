"""Executable height-by-height elimination for Hessenberg Schubert cells.

For ``u`` in ``U_w`` we track ``Ad(u^{-1}) X`` with ``X`` the regular nilpotent
``sum E_{alpha_i}``, one height at a time.  The root subgroups at height ``i``
are introduced with fresh symbols; the coefficients that then appear at
height ``i + 1`` are affine in those symbols, and the constraints

    coefficient of E_gamma = 0   for gamma at height i+1 in Phi_w \\ w M_H

form a linear system.  Its solution space contributes ``#symbols - rank`` to
the dimension.  A random rational point of the solution space is substituted
before moving up a height, so the symbolic work never spans two heights.

Only roots ``gamma`` with ``w^{-1}(gamma)`` negative give constraints: when
``w^{-1}(gamma)`` is positive, ``E_gamma`` already lies in ``w b w^{-1}``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import exact
from .chevalley import ChevalleyTable, structure_constants
from .config import OracleConfig
from .hessenberg import HessenbergSpace, cell_dimension, cell_nonempty
from .rootsys import RootSystem
from .weyl import WeylElement

Monomial = tuple[tuple[int, int], ...]  # sorted (variable, exponent) pairs


class Poly:
    """Sparse polynomial with rational coefficients in variables named by integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, v: int, c=1) -> "Poly":
        return cls({((v, 1),): Fraction(c)})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(out)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps = dict(m1)
                for v, e in m2:
                    exps[v] = exps.get(v, 0) + e
                m = tuple(sorted(exps.items()))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    def scale(self, c) -> "Poly":
        return Poly({m: c * x for m, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def substitute(self, values: Mapping[int, Fraction]) -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            rest = []
            for v, e in m:
                if v in values:
                    c = c * values[v] ** e
                else:
                    rest.append((v, e))
            key = tuple(rest)
            out[key] = out.get(key, Fraction(0)) + c
        return Poly(out)

    def linear_part(self, order: list[int]) -> tuple[list[Fraction], Fraction]:
        """Coefficients over ``order`` and the constant; raises if not affine."""
        if self.degree() > 1:
            raise ValueError("expected an affine polynomial")
        coeffs = {v: Fraction(0) for v in order}
        const = Fraction(0)
        for m, c in self.terms.items():
            if not m:
                const += c
            else:
                coeffs[m[0][0]] += c
        return [coeffs[v] for v in order], const

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"x{v}" + (f"^{e}" if e > 1 else "") for v, e in m)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


@dataclass
class SymbolicNilpotent:
    """``sum_gamma coeff[gamma] E_gamma`` over positive roots ``gamma``."""

    rs: RootSystem
    coeffs: dict[int, Poly] = field(default_factory=dict)

    def coefficient(self, k: int) -> Poly:
        return self.coeffs.get(k, Poly())

    def substitute(self, values: Mapping[int, Fraction]) -> "SymbolicNilpotent":
        out = {k: p.substitute(values) for k, p in self.coeffs.items()}
        return SymbolicNilpotent(self.rs, {k: p for k, p in out.items() if not p.is_zero()})


def regular_nilpotent(rs: RootSystem) -> SymbolicNilpotent:
    return SymbolicNilpotent(rs, {k: Poly.const(1) for k in rs.simple})


def adjoint_root_subgroup(t: ChevalleyTable, a: int, param: Poly, n: SymbolicNilpotent) -> SymbolicNilpotent:
    """``Ad(u_a(param)) N = sum_beta n_beta sum_j param^j / j! (ad E_a)^j E_beta``."""
    rs = t.rs
    if not rs.is_positive(a):
        raise ValueError("only positive root subgroups act on the nilradical here")
    out: dict[int, Poly] = {}
    for b, coeff in n.coeffs.items():
        out[b] = out.get(b, Poly()) + coeff
        power = Poly.const(1)
        cur, j = b, 0
        while True:
            nxt = rs.add(a, cur)
            if nxt is None:
                break
            j += 1
            power = power * param
            c = Fraction(t.chain(j, a, b), math.factorial(j))
            out[nxt] = out.get(nxt, Poly()) + (coeff * power).scale(c)
            cur = nxt
    return SymbolicNilpotent(rs, {k: p for k, p in out.items() if not p.is_zero()})


def adjoint_word(t: ChevalleyTable, factors: Iterable[tuple[int, Poly]], n: SymbolicNilpotent) -> SymbolicNilpotent:
    """``Ad(u_{a_1}(p_1) ... u_{a_k}(p_k)) N``: the rightmost factor acts first."""
    for a, p in reversed(list(factors)):
        n = adjoint_root_subgroup(t, a, p, n)
    return n


@dataclass
class HeightStep:
    height: int
    n_variables: int
    n_equations: int
    rank: int
    consistent: bool

    @property
    def free(self) -> int:
        return self.n_variables - self.rank


@dataclass
class CellSolution:
    nonempty: bool
    dimension: int | None
    steps: list[HeightStep]
    point: dict[int, Fraction]
    final: SymbolicNilpotent | None

    def ranks(self) -> list[int]:
        return [s.rank for s in self.steps]


def constraint_roots(H: HessenbergSpace, w: WeylElement) -> set[int]:
    """Positive ``gamma`` with ``w^{-1}(gamma)`` negative and outside ``M_H``."""
    inv = w.inverse()
    rs = H.rs
    return {g for g in range(rs.n_positive) if not rs.is_positive(inv(g)) and not H.contains(inv(g))}


def _random_fraction(rng: random.Random, cfg: OracleConfig) -> Fraction:
    num = rng.randint(-cfg.numerator_range, cfg.numerator_range)
    return Fraction(num, rng.randint(1, cfg.denominator_range))


def solve_cell(H: HessenbergSpace, w: WeylElement, seed: int | None = None,
               config: OracleConfig | None = None) -> CellSolution:
    """Eliminate height by height and report dimension and nonemptiness."""
    cfg = config or OracleConfig()
    rng = random.Random(cfg.seed if seed is None else seed)
    rs = H.rs
    t = structure_constants(rs)
    phi_w = set(w.inversion_set())
    bad = constraint_roots(H, w)
    cur = regular_nilpotent(rs)
    steps: list[HeightStep] = []
    point: dict[int, Fraction] = {}

    base_eqs = [g for g in rs.by_height[1] if g in bad]
    base_ok = all(cur.coefficient(g).is_zero() for g in base_eqs)
    steps.append(HeightStep(0, 0, len(base_eqs), 0, base_ok))
    if not base_ok:
        return CellSolution(False, None, steps, point, None)

    for h in range(1, rs.max_height + 1):
        vars_h = [a for a in rs.by_height[h] if a in phi_w]
        # Ad(u^{-1}) with u the ordered product of u_a(x_a): negate and reverse
        cur = adjoint_word(t, [(a, Poly.var(a, -1)) for a in reversed(vars_h)], cur)
        eqs = [g for g in rs.by_height[h + 1] if g in bad] if h < rs.max_height else []
        rows, rhs = [], []
        for g in eqs:
            coeffs, const = cur.coefficient(g).linear_part(vars_h)
            rows.append(coeffs)
            rhs.append(-const)
        if vars_h and rows:
            free_count = len(vars_h)
            free_vals = [_random_fraction(rng, cfg) for _ in range(free_count)]
            rk, ok, sol = exact.solve_affine(rows, rhs, free_vals)
        elif rows:
            rk = 0
            ok = all(r == 0 for r in rhs)
            sol = []
        else:
            rk, ok = 0, True
            sol = [_random_fraction(rng, cfg) for _ in vars_h]
        steps.append(HeightStep(h, len(vars_h), len(eqs), rk, ok))
        if not ok:
            return CellSolution(False, None, steps, point, None)
        values = dict(zip(vars_h, sol))
        point.update(values)
        cur = cur.substitute(values)

    leftovers = [g for g in bad if not cur.coefficient(g).is_zero()]
    if leftovers:
        raise AssertionError("elimination finished with violated constraints")
    dim = sum(s.free for s in steps)
    return CellSolution(True, dim, steps, point, cur)


@dataclass
class DimensionCheck:
    nonempty_formula: bool
    nonempty_oracle: bool
    dimension_formula: int
    dimension_oracle: int | None

    @property
    def agrees(self) -> bool:
        if self.nonempty_formula != self.nonempty_oracle:
            return False
        return not self.nonempty_formula or self.dimension_formula == self.dimension_oracle


def check_dimension_formula(H: HessenbergSpace, w: WeylElement, seed: int | None = None) -> DimensionCheck:
    sol = solve_cell(H, w, seed)
    return DimensionCheck(cell_nonempty(H, w), sol.nonempty, cell_dimension(H, w), sol.dimension)


def dimension_identity(H: HessenbergSpace, w: WeylElement) -> tuple[int, int]:
    """Both sides of the telescoping count.

    Left: sum over heights of ``|Phi_i ∩ Phi_w| - |Phi_{i+1} ∩ (Phi_w minus w M_H)|``.
    Right: ``|Phi_w ∩ w M_H|``.
    """
    rs = H.rs
    phi_w = set(w.inversion_set())
    bad = constraint_roots(H, w)
    lhs = 0
    for h in range(1, rs.max_height + 1):
        lhs += sum(1 for a in rs.by_height[h] if a in phi_w)
        if h + 1 <= rs.max_height:
            lhs -= sum(1 for g in rs.by_height[h + 1] if g in bad)
    return lhs, cell_dimension(H, w)


def dimension_identity_holds(H: HessenbergSpace, w: WeylElement) -> bool:
    lhs, rhs = dimension_identity(H, w)
    return lhs == rhs
