"""Classical Lie algebras as explicit matrix algebras.

``sl(n+1)``, ``so(2n+1)``, ``sp(2n)`` and ``so(2n)`` realised with a diagonal
Cartan subalgebra, together with the epsilon-coordinates of their roots.  The
structure-constant oracle rebuilds a Chevalley basis here from scratch and
compares it with the combinatorial table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact
from .rootsys import LieType, Root

Vec = tuple[int, ...]


@dataclass(frozen=True)
class ClassicalRealization:
    lie_type: LieType

    @cached_property
    def dim_eps(self) -> int:
        return self.lie_type.rank + (1 if self.lie_type.family == "A" else 0)

    def _unit(self, i: int, c: int = 1) -> Vec:
        return tuple(c if j == i else 0 for j in range(self.dim_eps))

    @cached_property
    def simple_eps(self) -> list[Vec]:
        """Simple roots in epsilon coordinates."""
        n, fam = self.lie_type.rank, self.lie_type.family
        out = []
        for i in range(n - 1):
            out.append(tuple(a - b for a, b in zip(self._unit(i), self._unit(i + 1))))
        if fam == "A":
            out.append(tuple(a - b for a, b in zip(self._unit(n - 1), self._unit(n))))
        elif fam == "B":
            out.append(self._unit(n - 1))
        elif fam == "C":
            out.append(self._unit(n - 1, 2))
        else:
            out.append(tuple(a + b for a, b in zip(self._unit(n - 2), self._unit(n - 1))))
        return out

    def to_eps(self, root: Root) -> Vec:
        v = [0] * self.dim_eps
        for c, s in zip(root, self.simple_eps):
            for k in range(self.dim_eps):
                v[k] += c * s[k]
        return tuple(v)

    def from_eps(self, vec: Vec) -> Root:
        cols = [list(col) for col in zip(*self.simple_eps)]
        rk, ok, sol = exact.solve_affine(cols, list(vec))
        if not ok or rk != self.lie_type.rank or sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError(f"{vec} is not in the root lattice")
        return tuple(int(x) for x in sol)

    # -- matrices -------------------------------------------------------------

    @cached_property
    def size(self) -> int:
        n, fam = self.lie_type.rank, self.lie_type.family
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[fam]

    @cached_property
    def weights(self) -> list[Vec]:
        """Weight of each standard basis vector."""
        n, fam = self.lie_type.rank, self.lie_type.family
        if fam == "A":
            return [self._unit(i) for i in range(n + 1)]
        up = [self._unit(i) for i in range(n)]
        down = [self._unit(i, -1) for i in reversed(range(n))]
        mid = [tuple([0] * n)] if fam == "B" else []
        return up + mid + down

    @cached_property
    def form(self) -> exact.Matrix | None:
        """Bilinear form ``J`` with the algebra ``{X : X^T J + J X = 0}``."""
        fam, m = self.lie_type.family, self.size
        if fam == "A":
            return None
        j = [[Fraction(0)] * m for _ in range(m)]
        for a in range(m):
            b = m - 1 - a
            j[a][b] = Fraction(1)
            if fam == "C" and a >= m // 2:
                j[a][b] = Fraction(-1)
        return j

    def eval_root(self, root_eps: Vec, h: exact.Matrix) -> Fraction:
        """Value of a root on a diagonal matrix."""
        return sum((Fraction(c) * h[k][k] for k, c in enumerate(root_eps)), Fraction(0))

    def root_vector(self, root_eps: Vec) -> exact.Matrix:
        """A spanning vector of the root space, with integer entries."""
        m = self.size
        cells = [(a, b) for a in range(m) for b in range(m)
                 if tuple(x - y for x, y in zip(self.weights[a], self.weights[b])) == root_eps]
        if not cells:
            raise ValueError(f"{root_eps} is not a root")
        j = self.form
        if j is None:
            if len(cells) != 1:
                raise AssertionError("sl root spaces are one matrix unit")
            vec = [Fraction(1)]
        else:
            eqs = []
            for c in range(m):
                for d in range(m):
                    row = []
                    for (a, b) in cells:
                        # (X^T J)[c][d] + (J X)[c][d] for X = E_ab
                        coeff = (j[a][d] if b == c else 0) + (j[c][a] if b == d else 0)
                        row.append(Fraction(coeff))
                    if any(row):
                        eqs.append(row)
            basis = exact.nullspace(eqs, len(cells))
            if len(basis) != 1:
                raise AssertionError(f"root space of {root_eps} has dimension {len(basis)}")
            vec = basis[0]
        out = [[Fraction(0)] * m for _ in range(m)]
        for (a, b), x in zip(cells, vec):
            out[a][b] = x
        return out

    def in_algebra(self, x: exact.Matrix) -> bool:
        j = self.form
        if j is None:
            return sum(x[k][k] for k in range(self.size)) == 0
        lhs = exact.matmul(exact.transpose(x), j)
        rhs = exact.matmul(j, x)
        return all(p + q == 0 for r1, r2 in zip(lhs, rhs) for p, q in zip(r1, r2))
