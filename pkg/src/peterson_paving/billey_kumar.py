"""Localizations of Schubert classes and smoothness of Schubert varieties.

``billey`` evaluates the restriction ``p_v(w)`` of the Schubert class of ``v``
to the fixed point ``w``: a sum over reduced subwords for ``v`` inside a fixed
reduced word for ``w`` of products of the roots ``s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})``
at the chosen positions.  The sum is computed left to right; the running
product of the chosen letters ranges over the weak prefixes of ``v`` only.

``kumar_smooth`` compares ``p_v(w)`` with the product of the positive roots
``alpha`` with ``v`` not below ``s_alpha w``; equality means the opposite
Schubert variety ``X^v`` is smooth at the fixed point ``wB``.

The block-shape prediction ``peterson_smooth`` is kept separate from the
direct test: the direct test depends on the order of the Coxeter word, and a
D5-shaped block labelled as inside E6 gives a singular point even though its
shape is classical.

Polynomials live in ``ZZ[alpha_1, ..., alpha_n]``.  Monomials are packed into
one int, eight bits per exponent, so arithmetic is plain dict work.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .config import LIMITS
from .rootsys import RootSystem
from .weyl import (WeylElement, bruhat_leq, coxeter_decreasing, coxeter_increasing,
                   from_word, identity, longest_element, reflection, weak_prefixes)

_BITS = 8
_MASK = (1 << _BITS) - 1


class NotBelow(ValueError):
    """Raised when an operation needs ``v <= w`` in Bruhat order."""


class WordTooLong(ValueError):
    pass


def _pack(exponents: Sequence[int]) -> int:
    key = 0
    for k, e in enumerate(exponents):
        if not 0 <= e <= _MASK:
            raise ValueError("exponent out of range")
        key |= e << (_BITS * k)
    return key


def _unpack(key: int, rank: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * k)) & _MASK for k in range(rank))


class RootPolynomial:
    """Integer polynomial in the simple roots."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.rank = rank
        self._terms: dict[int, int] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != rank:
                raise ValueError(f"exponent vector {exps} has the wrong length")
            if c:
                key = _pack(exps)
                self._terms[key] = self._terms.get(key, 0) + c
        self._terms = {k: c for k, c in self._terms.items() if c}

    @classmethod
    def _raw(cls, rank: int, packed: dict[int, int]) -> "RootPolynomial":
        p = cls(rank)
        p._terms = {k: c for k, c in packed.items() if c}
        return p

    @classmethod
    def one(cls, rank: int) -> "RootPolynomial":
        return cls._raw(rank, {0: 1})

    @classmethod
    def zero(cls, rank: int) -> "RootPolynomial":
        return cls(rank)

    @classmethod
    def linear(cls, root: Sequence[int]) -> "RootPolynomial":
        """The linear form ``sum c_i alpha_i``."""
        return cls._raw(len(root), {1 << (_BITS * k): c for k, c in enumerate(root) if c})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return {_unpack(k, self.rank): c for k, c in self._terms.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootPolynomial):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "RootPolynomial") -> "RootPolynomial":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return RootPolynomial._raw(self.rank, out)

    def __mul__(self, other: "RootPolynomial") -> "RootPolynomial":
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                # no carries: exponents stay below 256 because degrees do
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return RootPolynomial._raw(self.rank, out)

    def times_root(self, root: Sequence[int]) -> "RootPolynomial":
        return RootPolynomial._raw(self.rank, _times_root(self._terms, root))

    def degree(self) -> int:
        return max((sum(_unpack(k, self.rank)) for k in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(_unpack(k, self.rank)) for k in self._terms}) <= 1

    def coefficient(self, exponents: Sequence[int]) -> int:
        return coefficient(self, exponents)

    def serialize(self) -> list[str]:
        """Sorted ``coeff:e1,e2,...`` records."""
        return [f"{c}:{','.join(map(str, e))}" for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def deserialize(cls, rank: int, records: Iterable[str]) -> "RootPolynomial":
        terms: dict[tuple[int, ...], int] = {}
        for rec in records:
            c, _, e = rec.partition(":")
            exps = tuple(int(x) for x in e.split(",")) if e else ()
            terms[exps] = terms.get(exps, 0) + int(c)
        return cls(rank, terms)

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"a{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"RootPolynomial({self.pretty()})"


def _times_root(terms: dict[int, int], root: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, c in enumerate(root):
        if not c:
            continue
        shift = 1 << (_BITS * k)
        for key, x in terms.items():
            nk = key + shift
            out[nk] = out.get(nk, 0) + c * x
    return out


def coefficient(p: RootPolynomial, exponents: Sequence[int]) -> int:
    if len(exponents) != p.rank:
        raise ValueError("exponent vector has the wrong length")
    return p._terms.get(_pack(exponents), 0)


# -- Billey's formula ---------------------------------------------------------


def word_roots(rs: RootSystem, word: Sequence[int]) -> list[tuple[int, ...]]:
    """``s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`` for each position ``j`` of a reduced word."""
    x = identity(rs)
    out = []
    for i in word:
        img = x(rs.simple[i - 1])
        if not rs.is_positive(img):
            raise ValueError(f"{tuple(word)} is not reduced")
        out.append(rs.roots[img])
        x = x.right_multiply_simple(i - 1)
    return out


def billey(rs: RootSystem, v: WeylElement, w: WeylElement,
           word: Sequence[int] | None = None) -> RootPolynomial:
    """``p_v(w)``, summed along ``word`` (default: the normal word of ``w``)."""
    word = tuple(w.normal_word() if word is None else word)
    if word and from_word(rs, word) != w:
        raise ValueError("word does not spell w")
    target = v.length()
    if target > len(word):
        return RootPolynomial.zero(rs.rank)
    allowed = weak_prefixes(v)
    e = identity(rs)
    states: dict[WeylElement, dict[int, int]] = {e: {0: 1}}
    lengths = {e: 0}
    betas = word_roots(rs, word)
    for pos, (i, beta) in enumerate(zip(word, betas)):
        remaining = len(word) - pos
        grown: dict[WeylElement, dict[int, int]] = {}
        for u, terms in states.items():
            lu = lengths[u]
            if target - lu > remaining:
                continue
            y = u.right_multiply_simple(i - 1)
            if y not in allowed or y.length() != lu + 1:
                continue
            lengths[y] = lu + 1
            acc = grown.setdefault(y, {})
            for k, c in _times_root(terms, beta).items():
                acc[k] = acc.get(k, 0) + c
        for y, terms in grown.items():
            base = states.setdefault(y, {})
            for k, c in terms.items():
                base[k] = base.get(k, 0) + c
    return RootPolynomial._raw(rs.rank, states.get(v, {}))


def billey_naive(rs: RootSystem, v: WeylElement, word: Sequence[int]) -> RootPolynomial:
    """Same sum by enumerating every position subset of ``word``."""
    if len(word) > LIMITS.max_naive_word:
        raise WordTooLong(f"naive enumeration is capped at {LIMITS.max_naive_word} letters")
    betas = word_roots(rs, word)
    target = v.length()
    total = RootPolynomial.zero(rs.rank)
    for positions in combinations(range(len(word)), target):
        u = identity(rs)
        for p in positions:
            u = u.right_multiply_simple(word[p] - 1)
        if u != v or u.length() != target:
            continue
        term = RootPolynomial.one(rs.rank)
        for p in positions:
            term = term.times_root(betas[p])
        total = total + term
    return total


# -- Kumar's criterion --------------------------------------------------------


def kumar_roots(rs: RootSystem, v: WeylElement, w: WeylElement) -> list[int]:
    """Positive roots ``alpha`` with ``v`` not below ``s_alpha w``."""
    if not bruhat_leq(v, w):
        raise NotBelow("kumar's criterion needs v <= w")
    out = []
    for k in range(rs.n_positive):
        if not bruhat_leq(v, reflection(rs, rs.roots[k]) * w):
            out.append(k)
    return out


def kumar_rhs(rs: RootSystem, v: WeylElement, w: WeylElement) -> RootPolynomial:
    p = RootPolynomial.one(rs.rank)
    for k in kumar_roots(rs, v, w):
        p = p.times_root(rs.roots[k])
    return p


def kumar_smooth(rs: RootSystem, v: WeylElement, w: WeylElement) -> bool:
    roots = kumar_roots(rs, v, w)
    # both sides are homogeneous; a degree mismatch settles it without expanding
    if len(roots) != v.length():
        return False
    rhs = RootPolynomial.one(rs.rank)
    for k in roots:
        rhs = rhs.times_root(rs.roots[k])
    return billey(rs, v, w) == rhs


# -- blocks -------------------------------------------------------------------


@dataclass(frozen=True)
class DynkinBlock:
    """A connected piece of the Dynkin diagram; labels are 1-based."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int, int]]  # (i, j, bond multiplicity), i < j

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a block has at least one vertex")
        adj = self.adjacency()
        seen, stack = set(), [min(self.vertices)]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x])
        if seen != set(self.vertices):
            raise ValueError("block is not connected")

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {x: set() for x in self.vertices}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


def bond(rs: RootSystem, i: int, j: int) -> int:
    """Number of lines between nodes ``i`` and ``j`` (1-based)."""
    g = rs.gram
    a = 2 * g[i - 1][j - 1] // g[i - 1][i - 1]
    b = 2 * g[j - 1][i - 1] // g[j - 1][j - 1]
    return a * b


def blocks(rs: RootSystem, J: Iterable[int]) -> list[DynkinBlock]:
    """Connected components of the subdiagram on ``J``, ordered by least label."""
    labels = sorted(set(J))
    for j in labels:
        if not 1 <= j <= rs.rank:
            raise ValueError(f"{j} is not a simple root label")
    edges = {(i, j, bond(rs, i, j)) for i, j in combinations(labels, 2) if bond(rs, i, j)}
    adj: dict[int, set[int]] = {x: set() for x in labels}
    for i, j, _ in edges:
        adj[i].add(j)
        adj[j].add(i)
    out, seen = [], set()
    for start in labels:
        if start in seen:
            continue
        comp, stack = set(), [start]
        while stack:
            x = stack.pop()
            if x not in comp:
                comp.add(x)
                stack.extend(adj[x])
        seen |= comp
        out.append(DynkinBlock(frozenset(comp), frozenset(e for e in edges if e[0] in comp)))
    return out


def classically_embeddable(b: DynkinBlock) -> bool:
    """Shape test: path (A), path with a terminal double bond (B/C), or a D fork."""
    adj = b.adjacency()
    mults = [m for _, _, m in b.edges]
    if any(m >= 3 for m in mults):
        return False
    if len(b.edges) != len(b.vertices) - 1:
        return False
    degrees = {x: len(n) for x, n in adj.items()}
    if any(d > 3 for d in degrees.values()):
        return False
    branch_nodes = [x for x, d in degrees.items() if d == 3]
    doubles = [(i, j) for i, j, m in b.edges if m == 2]
    if not branch_nodes:
        if not doubles:
            return True
        if len(doubles) > 1:
            return False
        i, j = doubles[0]
        return degrees[i] == 1 or degrees[j] == 1
    if len(branch_nodes) > 1 or doubles:
        return False
    centre = branch_nodes[0]
    arms = sorted(_arm_length(adj, centre, n) for n in adj[centre])
    return arms[0] == 1 and arms[1] == 1


def _arm_length(adj: dict[int, set[int]], centre: int, first: int) -> int:
    length, prev, cur = 1, centre, first
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def peterson_smooth(rs: RootSystem, J: Iterable[int]) -> bool:
    """Prediction from the block shapes alone."""
    return all(classically_embeddable(b) for b in blocks(rs, J))


def parabolic_pair(rs: RootSystem, J: Iterable[int], increasing: bool = False
                   ) -> tuple[RootSystem, WeylElement, WeylElement]:
    """Subsystem on ``J`` with ``(v_J, w_J)`` transported into it (labels renumbered in order)."""
    labels = sorted(set(J))
    sub = rs.subsystem([j - 1 for j in labels])
    local = range(1, len(labels) + 1)
    v = coxeter_increasing(sub, local) if increasing else coxeter_decreasing(sub, local)
    return sub, v, longest_element(sub)


def parabolic_kumar_smooth(rs: RootSystem, J: Iterable[int], increasing: bool = False) -> bool:
    """Kumar's test for ``(v_J, w_J)`` inside the subsystem on ``J``."""
    labels = sorted(set(J))
    if not labels:
        return True
    sub, v, w = parabolic_pair(rs, labels, increasing)
    return kumar_smooth(sub, v, w)
