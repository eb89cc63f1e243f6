"""Weyl group elements as signed permutations of the root set.

An element stores the image index of every root (see the index convention
in :mod:`rootsys`).  Composition is permutation composition, length is the
number of positive roots sent negative, and Bruhat comparisons use the
subword property over one fixed reduced word.

Public simple-reflection labels are 1-based (``s_1 .. s_n``); subsets ``J`` of
simple roots are sets of such labels.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import LIMITS
from .rootsys import LieType, RootSystem


class EnumerationTooLarge(RuntimeError):
    pass


class WeylElement:
    __slots__ = ("rs", "perm", "_len", "_inv")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        self._len: int | None = None
        self._inv: WeylElement | None = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm and self.rs is other.rs

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        word = "".join(f"s{i}" for i in self.normal_word()) or "e"
        return f"<{self.rs.name} {word}>"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    # -- basic data ---------------------------------------------------------

    def __call__(self, k: int) -> int:
        """Image of the root with index ``k``."""
        return self.perm[k]

    def apply(self, root: Sequence[int]) -> tuple[int, ...]:
        return self.rs.roots[self.perm[self.rs.index(root)]]

    def length(self) -> int:
        if self._len is None:
            n = self.rs.n_positive
            self._len = sum(1 for k in range(n) if self.perm[k] >= n)
        return self._len

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            inv = [0] * len(self.perm)
            for k, img in enumerate(self.perm):
                inv[img] = k
            self._inv = WeylElement(self.rs, tuple(inv))
            self._inv._inv = self
        return self._inv

    def is_identity(self) -> bool:
        return all(k == img for k, img in enumerate(self.perm))

    def right_multiply_simple(self, i: int) -> "WeylElement":
        """``w s_i`` for a 0-based index."""
        t = self.rs.reflection_tables[i]
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in t))

    def left_multiply_simple(self, i: int) -> "WeylElement":
        """``s_i w`` for a 0-based index."""
        t = self.rs.reflection_tables[i]
        return WeylElement(self.rs, tuple(t[k] for k in self.perm))

    def has_right_descent(self, i: int) -> bool:
        return self.perm[self.rs.simple[i]] >= self.rs.n_positive

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def left_descents(self) -> list[int]:
        return [i for i in range(self.rs.rank) if self.has_left_descent(i)]

    def right_descents(self) -> list[int]:
        return [i for i in range(self.rs.rank) if self.has_right_descent(i)]

    def inversion_set(self) -> list[int]:
        """Positive roots sent negative by ``w^{-1}``, as root indices."""
        inv = self.inverse().perm
        n = self.rs.n_positive
        return [k for k in range(n) if inv[k] >= n]

    def normal_word(self) -> tuple[int, ...]:
        """Reduced word that always strips the smallest left descent first."""
        n = self.rs.n_positive
        inv = list(self.inverse().perm)
        simple = self.rs.simple
        tables = self.rs.reflection_tables
        word = []
        while True:
            for i in range(self.rs.rank):
                if inv[simple[i]] >= n:
                    break
            else:
                return tuple(word)
            word.append(i + 1)
            t = tables[i]
            inv = [inv[t[k]] for k in range(len(inv))]


# -- construction -------------------------------------------------------------


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(len(rs.roots))))


def simple(rs: RootSystem, i: int) -> WeylElement:
    """The simple reflection ``s_i`` (1-based)."""
    _check_label(rs, i)
    return WeylElement(rs, rs.reflection_tables[i - 1])


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    w = identity(rs)
    for i in word:
        _check_label(rs, i)
        w = w.right_multiply_simple(i - 1)
    return w


def reflection(rs: RootSystem, alpha: Sequence[int]) -> WeylElement:
    return WeylElement(rs, tuple(rs.index(rs.reflection(alpha, r)) for r in rs.roots))


def _check_label(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection s{i} does not exist in {rs.name}")


def _labels(rs: RootSystem, J: Iterable[int] | None) -> list[int]:
    if J is None:
        return list(range(1, rs.rank + 1))
    out = sorted(set(J))
    for i in out:
        _check_label(rs, i)
    return out


def longest_element(rs: RootSystem, J: Iterable[int] | None = None) -> WeylElement:
    """Longest element ``w_J`` of the parabolic subgroup, by greedy ascent."""
    labels = _labels(rs, J)
    w = identity(rs)
    grew = True
    while grew:
        grew = False
        for i in labels:
            if not w.has_right_descent(i - 1):
                w = w.right_multiply_simple(i - 1)
                grew = True
    return w


def coxeter_decreasing(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    """``v_J``: product of the ``s_j`` (``j`` in ``J``) with indices decreasing left to right."""
    return from_word(rs, sorted(_labels(rs, J), reverse=True))


def coxeter_increasing(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    """``u_J``: product of the ``s_j`` (``j`` in ``J``) with indices increasing left to right."""
    return from_word(rs, _labels(rs, J))


# -- order --------------------------------------------------------------------


@lru_cache(maxsize=4096)
def weak_prefixes(u: WeylElement) -> frozenset[WeylElement]:
    """All ``x`` with ``l(x) + l(x^{-1} u) = l(u)``: prefixes of reduced words of ``u``."""
    start = identity(u.rs)
    seen = {start}
    queue = deque([(start, u)])
    while queue:
        x, rest = queue.popleft()
        for i in rest.left_descents():
            y = x.right_multiply_simple(i)
            if y not in seen:
                seen.add(y)
                queue.append((y, rest.left_multiply_simple(i)))
    return frozenset(seen)


def subword_reachable(u: WeylElement, word: Sequence[int]) -> bool:
    """True when some subword of ``word`` is a reduced word for ``u``."""
    target_len = u.length()
    if target_len > len(word):
        return False
    allowed = weak_prefixes(u)
    states = {identity(u.rs)}
    for i in word:
        new = set()
        for x in states:
            y = x.right_multiply_simple(i - 1)
            if y in allowed and y.length() > x.length():
                new.add(y)
        states |= new
        if u in states:
            return True
    return u in states


def bruhat_leq(u: WeylElement, w: WeylElement, word: Sequence[int] | None = None) -> bool:
    """Bruhat order ``u <= w`` via the subword property.

    ``word`` may supply a reduced word for ``w``; the normal word is used otherwise.
    """
    if u.length() > w.length():
        return False
    if u.length() == w.length():
        return u == w
    return subword_reachable(u, w.normal_word() if word is None else word)


# -- enumeration --------------------------------------------------------------


def group_order(rs: RootSystem, J: Iterable[int] | None = None) -> int:
    """Order of ``W_J`` as the product of ``e + 1`` over the exponents.

    The exponents are read off the height distribution of positive roots:
    exactly ``c_h - c_{h+1}`` of them equal ``h``.
    """
    labels = _labels(rs, J)
    if not labels:
        return 1
    sub = rs.subsystem([i - 1 for i in labels])
    counts = [len(ix) for ix in sub.by_height[1:]] + [0]
    order = 1
    for h in range(1, len(counts)):
        order *= (h + 1) ** (counts[h - 1] - counts[h])
    return order


def enumerate_weyl(rs: RootSystem, J: Iterable[int] | None = None,
                   bound: int | None = None) -> list[WeylElement]:
    """All elements of ``W_J`` by breadth-first search, shortest first."""
    labels = _labels(rs, J)
    cap = LIMITS.max_weyl_order if bound is None else bound
    if group_order(rs, labels) > cap:
        raise EnumerationTooLarge(f"|W_J| exceeds the enumeration bound {cap}")
    start = identity(rs)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in labels:
            y = x.right_multiply_simple(i - 1)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def all_reduced_words(w: WeylElement, cap: int | None = None) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, refusing past ``cap`` words."""
    limit = LIMITS.max_reduced_words if cap is None else cap
    memo: dict[WeylElement, list[tuple[int, ...]]] = {}

    def go(x: WeylElement) -> list[tuple[int, ...]]:
        if x in memo:
            return memo[x]
        if x.length() == 0:
            return [()]
        out: list[tuple[int, ...]] = []
        for i in x.left_descents():
            for tail in go(x.left_multiply_simple(i)):
                out.append((i + 1,) + tail)
                if len(out) > limit:
                    raise EnumerationTooLarge(f"more than {limit} reduced words")
        memo[x] = out
        return out

    return go(w)


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return from_word(rs, word).length() == len(word)


def subsets(labels: Sequence[int]) -> Iterator[frozenset[int]]:
    labels = list(labels)
    for mask in range(1 << len(labels)):
        yield frozenset(labels[b] for b in range(len(labels)) if mask >> b & 1)


# -- classical longest words ---------------------------------------------------


def classical_longest_normal_form(lt: LieType, variant: str = "first") -> tuple[int, ...]:
    """Tabulated reduced words for ``w_0`` in types A-D.

    ``variant="second"`` exists only in type A and avoids putting ``s_1``
    anywhere but the first block.
    """
    n, fam = lt.rank, lt.family
    if variant not in ("first", "second"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "second" and fam != "A":
        raise ValueError("the second longest-word variant exists only in type A")
    word: list[int] = []
    if fam == "A":
        if variant == "first":
            for top in range(n, 0, -1):
                word.extend(range(1, top + 1))
        else:
            for low in range(1, n + 1):
                word.extend(range(n, low - 1, -1))
    elif fam in "BC":
        for j in range(1, n):
            word.extend(list(range(j, n + 1)) + list(range(n - 1, j - 1, -1)))
        word.append(n)
    elif fam == "D":
        for j in range(1, n - 1):
            word.extend(list(range(j, n - 1)) + [n, n - 1] + list(range(n - 2, j - 1, -1)))
        word.extend([n - 1, n])
    else:
        raise ValueError(f"{lt} is not classical")
    return tuple(word)
