"""Finite crystallographic root systems in simple-root coordinates.

Roots are integer coefficient tuples over the simple roots.  Positive roots
are grown from the simple roots by root-string closure, grouped by height,
and ordered inside each height so that larger leading coefficients come
first (at height one this lists the simple roots in index order).

Every root system carries a single index space: positive roots occupy
``0 .. N-1`` and the negative of positive root ``k`` sits at ``k + N``.

Simple roots use Bourbaki labels throughout.  Short simple roots: ``alpha_n``
in type B, ``alpha_3`` and ``alpha_4`` in F4, ``alpha_1`` in G2.  The E-series
branch node ``alpha_2`` hangs off ``alpha_4``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class InvalidLieType(ValueError):
    pass


class InvalidRoot(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RULES:
            raise InvalidLieType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise InvalidLieType(f"no root system of type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "LieType":
        """Accept ``"E6"``, ``"b4"``, or a bare family letter plus ``rank``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", text)
        if not m:
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        fam = m.group(1).upper()
        if m.group(2):
            n = int(m.group(2))
            if rank is not None and rank != n:
                raise InvalidLieType(f"rank {rank} disagrees with {text!r}")
        elif rank is not None:
            n = rank
        else:
            raise InvalidLieType(f"type {text!r} needs a rank")
        return cls(fam, n)

    @property
    def is_simply_laced(self) -> bool:
        return self.family in "ADE"

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin_data(lt: LieType) -> tuple[list[int], list[tuple[int, int]]]:
    """Half squared lengths (short = 1) and 0-based edges."""
    n, fam = lt.rank, lt.family
    path = [(i, i + 1) for i in range(n - 1)]
    if fam == "A":
        return [1] * n, path
    if fam == "B":
        return [2] * (n - 1) + [1], path
    if fam == "C":
        return [1] * (n - 1) + [2], path
    if fam == "D":
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if fam == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [1] * n, edges
    if fam == "F":
        return [2, 2, 1, 1], path
    return [1, 3], path  # G2


def gram_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    """Inner products of simple roots, scaled so short roots have length 2."""
    half, edges = _dynkin_data(lt)
    n = lt.rank
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * half[i]
    for i, j in edges:
        g[i][j] = g[j][i] = -max(half[i], half[j])
    return tuple(tuple(r) for r in g)


def cartan_from_gram(gram: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """``a[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``."""
    n = len(gram)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            q, r = divmod(2 * gram[i][j], gram[i][i])
            if r:
                raise ValueError("gram matrix is not crystallographic")
            row.append(q)
        out.append(tuple(row))
    return tuple(out)


def cartan_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    return cartan_from_gram(gram_matrix(lt))


class RootSystem:
    """Root system attached to a symmetrizable Cartan datum.

    Build through :func:`root_system` for named types; the constructor also
    accepts an arbitrary Gram matrix so that parabolic subsystems can be
    handled with the same machinery.
    """

    def __init__(self, gram: Sequence[Sequence[int]], lie_type: LieType | None = None):
        self.gram = tuple(tuple(r) for r in gram)
        self.cartan = cartan_from_gram(self.gram)
        self.rank = len(self.gram)
        self.lie_type = lie_type
        self.positive: list[Root] = self._close()
        self.n_positive = len(self.positive)
        self.roots: list[Root] = self.positive + [tuple(-c for c in r) for r in self.positive]
        self._index = {r: k for k, r in enumerate(self.roots)}
        self.heights = [sum(r) for r in self.positive]
        self.max_height = max(self.heights)
        self.by_height: list[list[int]] = [[] for _ in range(self.max_height + 2)]
        for k, h in enumerate(self.heights):
            self.by_height[h].append(k)
        self.simple = [self._index[self._unit(i)] for i in range(self.rank)]
        self.reflection_tables = [self._reflection_table(i) for i in range(self.rank)]

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @property
    def name(self) -> str:
        return str(self.lie_type) if self.lie_type else f"rank{self.rank}"

    def _unit(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def _close(self) -> list[Root]:
        n = self.rank
        layers: list[list[Root]] = [[self._unit(i) for i in range(n)]]
        found = set(layers[0])
        while layers[-1]:
            nxt: set[Root] = set()
            for r in layers[-1]:
                for i in range(n):
                    pairing = sum(r[j] * self.cartan[i][j] for j in range(n))
                    down = 0
                    probe = list(r)
                    while True:
                        probe[i] -= 1
                        if tuple(probe) in found:
                            down += 1
                        else:
                            break
                    if down - pairing > 0:
                        up = list(r)
                        up[i] += 1
                        nxt.add(tuple(up))
            found |= nxt
            layers.append(sorted(nxt, reverse=True))
        return [r for layer in layers for r in layer]

    def _reflection_table(self, i: int) -> tuple[int, ...]:
        return tuple(self._index[self.simple_reflection(i, r)] for r in self.roots)

    # -- lookup -------------------------------------------------------------

    def index(self, root: Iterable[int]) -> int:
        r = tuple(root)
        try:
            return self._index[r]
        except KeyError:
            raise InvalidRoot(f"{r} is not a root of {self.name}") from None

    def is_root(self, root: Iterable[int]) -> bool:
        return tuple(root) in self._index

    def lookup(self, root: Iterable[int]) -> int | None:
        return self._index.get(tuple(root))

    def negate(self, k: int) -> int:
        return k + self.n_positive if k < self.n_positive else k - self.n_positive

    def is_positive(self, k: int) -> bool:
        return k < self.n_positive

    def height(self, root: Iterable[int]) -> int:
        return sum(root)

    def roots_of_height(self, h: int) -> list[Root]:
        """Positive roots of height ``h`` in canonical order."""
        if h < 1 or h > self.max_height:
            return []
        return [self.positive[k] for k in self.by_height[h]]

    def simple_index(self, k: int) -> int | None:
        """0-based simple-root number for root index ``k``, else None."""
        r = self.roots[k]
        if sum(r) == 1 and min(r) == 0:
            return r.index(1)
        return None

    @cached_property
    def highest_root(self) -> Root:
        return self.positive[-1]

    # -- geometry -----------------------------------------------------------

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def norm2(self, a: Sequence[int]) -> int:
        return self.inner(a, a)

    @cached_property
    def norms(self) -> tuple[int, ...]:
        """Squared length of every root, indexed like :attr:`roots`."""
        return tuple(self.norm2(r) for r in self.roots)

    def pairing(self, r: Sequence[int], alpha: Sequence[int]) -> int:
        """``<r, alpha^vee> = 2 (r, alpha) / (alpha, alpha)``."""
        v = Fraction(2 * self.inner(r, alpha), self.norm2(alpha))
        if v.denominator != 1:
            raise InvalidRoot(f"{alpha} is not a root")
        return int(v)

    def simple_reflection(self, i: int, r: Sequence[int]) -> Root:
        """``s_i(r)`` for a 0-based simple index ``i``."""
        p = sum(r[j] * self.cartan[i][j] for j in range(self.rank))
        out = list(r)
        out[i] -= p
        return tuple(out)

    def reflection(self, alpha: Sequence[int], r: Sequence[int]) -> Root:
        p = self.pairing(r, alpha)
        return tuple(x - p * a for x, a in zip(r, alpha))

    def root_string_down(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        """Largest ``p`` with ``beta - p*alpha`` a root."""
        p = 0
        cur = list(beta)
        while True:
            cur = [c - a for c, a in zip(cur, alpha)]
            if tuple(cur) in self._index:
                p += 1
            else:
                return p

    def add(self, a: int, b: int) -> int | None:
        """Index of ``roots[a] + roots[b]`` if that sum is a root."""
        ra, rb = self.roots[a], self.roots[b]
        return self._index.get(tuple(x + y for x, y in zip(ra, rb)))

    def sub(self, a: int, b: int) -> int | None:
        ra, rb = self.roots[a], self.roots[b]
        return self._index.get(tuple(x - y for x, y in zip(ra, rb)))

    # -- strings ------------------------------------------------------------

    def to_string(self, root: Sequence[int]) -> str:
        return format_root(root)

    def from_string(self, text: str) -> Root:
        r = parse_root(text, self.rank)
        if r not in self._index:
            raise InvalidRoot(f"{text!r} is not a root of {self.name}")
        return r

    def subsystem(self, nodes: Iterable[int]) -> "RootSystem":
        """Root system of the parabolic subsystem on the given 0-based nodes."""
        idx = sorted(nodes)
        sub = [[self.gram[i][j] for j in idx] for i in idx]
        return RootSystem(sub)


def format_root(root: Sequence[int]) -> str:
    """Dynkin string of a root; a leading ``-`` marks a negative root.

    >>> format_root((0, 1, 2, 2))
    '0122'
    >>> format_root((0, -1, -1))
    '-011'
    """
    if any(c < 0 for c in root):
        return "-" + "".join(str(-c) for c in root)
    return "".join(str(c) for c in root)


def parse_root(text: str, rank: int) -> Root:
    t = text.strip()
    sign = 1
    if t.startswith("-"):
        sign, t = -1, t[1:]
    if len(t) != rank or not t.isdigit():
        raise InvalidRoot(f"{text!r} is not a rank-{rank} Dynkin string")
    return tuple(sign * int(c) for c in t)


@lru_cache(maxsize=None)
def root_system(lt: LieType | str) -> RootSystem:
    if isinstance(lt, str):
        lt = LieType.parse(lt)
    return RootSystem(gram_matrix(lt), lt)


def positive_roots(lt: LieType | str) -> list[Root]:
    return list(root_system(lt).positive)


def expected_positive_count(lt: LieType) -> int:
    n = lt.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[lt.family]
