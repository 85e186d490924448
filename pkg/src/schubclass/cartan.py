"""Root systems of finite type built from Cartan data.

Conventions
-----------
Simple roots are numbered 1..n following Bourbaki.  In particular, in B_n
the root alpha_n is short, in C_n it is long, in F_4 the roots alpha_1 and
alpha_2 are long, and in G_2 the root alpha_1 is short (so the highest root
is 3*alpha_1 + 2*alpha_2).

The Cartan matrix is stored 0-based with ``C[i][j] = <alpha_i^vee, alpha_j>``,
so the simple reflection s_i acts on a root written in the simple-root basis
by ``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`` where
``<beta, alpha_i^vee> = sum_j beta_j * C[i][j]``.  With this convention the
j-th column of C holds the coordinates of alpha_j in the basis of
fundamental weights.

Roots are tuples of ints in simple-root coordinates.  No floating point is
used anywhere.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InvalidCartanMatrix, InvalidRank, ParseError, UserError

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper() if isinstance(self.letter, str) else self.letter
        object.__setattr__(self, "letter", letter)
        if letter in _MIN_RANK:
            ok = isinstance(self.rank, int) and self.rank >= _MIN_RANK[letter]
        elif letter in _EXCEPTIONAL_RANKS:
            ok = self.rank in _EXCEPTIONAL_RANKS[letter]
        else:
            raise InvalidRank(f"unknown Cartan type letter {self.letter!r}")
        if not ok:
            raise InvalidRank(f"rank {self.rank} is not valid for type {letter}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings such as ``"A3"`` or ``"g2"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ParseError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.letter}{self.rank}"

    def degrees(self) -> tuple[int, ...]:
        """Degrees of the basic invariants of the Weyl group."""
        n = self.rank
        if self.letter == "A":
            return tuple(range(2, n + 2))
        if self.letter in "BC":
            return tuple(range(2, 2 * n + 1, 2))
        if self.letter == "D":
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        return {
            ("E", 6): (2, 5, 6, 8, 9, 12),
            ("E", 7): (2, 6, 8, 10, 12, 14, 18),
            ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
            ("F", 4): (2, 6, 8, 12),
            ("G", 2): (2, 6),
        }[(self.letter, n)]

    def weyl_group_order(self) -> int:
        return math.prod(self.degrees())

    def num_positive_roots(self) -> int:
        return sum(d - 1 for d in self.degrees())


def _edges(t: CartanType) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, C[i][j], C[j][i]) of the Dynkin diagram, 1-based."""
    n = t.rank
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if t.letter == "A":
        return chain
    if t.letter == "B":
        return chain[:-1] + [(n - 1, n, -1, -2)]
    if t.letter == "C":
        return chain[:-1] + [(n - 1, n, -2, -1)]
    if t.letter == "D":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if t.letter == "E":
        return [(1, 3, -1, -1), (2, 4, -1, -1)] + [(i, i + 1, -1, -1) for i in range(3, n)]
    if t.letter == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    # G2, alpha_1 short
    return [(1, 2, -3, -1)]


def cartan_matrix(t: CartanType) -> Matrix:
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in _edges(t):
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji
    return tuple(tuple(row) for row in C)


def validate_cartan_matrix(C: Sequence[Sequence[int]]) -> Matrix:
    n = len(C)
    if n == 0 or any(len(row) != n for row in C):
        raise InvalidCartanMatrix("Cartan matrix must be square and nonempty")
    for i in range(n):
        if C[i][i] != 2:
            raise InvalidCartanMatrix(f"diagonal entry C[{i + 1}][{i + 1}] is not 2")
        for j in range(n):
            if i != j:
                if C[i][j] > 0:
                    raise InvalidCartanMatrix(f"off-diagonal entry C[{i + 1}][{j + 1}] is positive")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise InvalidCartanMatrix(f"C[{i + 1}][{j + 1}] and C[{j + 1}][{i + 1}] disagree on zero")
    return tuple(tuple(int(x) for x in row) for row in C)


def _height_key(root: Root):
    return (sum(root), root)


class RootSystem:
    """Immutable root-system context.

    Attributes are computed once in the constructor; the only mutable state
    is ``_cache``, which downstream modules use to memoise derived data
    (reflections, longest elements).  Cached values are deterministic, so a
    concurrent double computation is harmless.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], cartan_type: CartanType | None = None,
                 max_roots: int = 10_000):
        self.cartan: Matrix = validate_cartan_matrix(cartan)
        self.cartan_type = cartan_type
        self.rank = len(self.cartan)
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(_close_positive_roots(self.cartan, max_roots), key=_height_key))
        self.simple_roots: tuple[Root, ...] = tuple(_unit(self.rank, i) for i in range(self.rank))
        negatives = tuple(tuple(-x for x in r) for r in self.positive_roots)
        self.roots: tuple[Root, ...] = self.positive_roots + negatives
        self.root_index: dict[Root, int] = {r: k for k, r in enumerate(self.roots)}
        self.reflection_tables: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.root_index[self.reflect(i, r)] for r in self.roots)
            for i in range(1, self.rank + 1))
        # root -> s_i(root), for fast action on matrices whose rows are roots
        self.reflection_maps: tuple[dict[Root, Root], ...] = tuple(
            {r: self.roots[t[k]] for k, r in enumerate(self.roots)} for t in self.reflection_tables)
        self._cache: dict = {}

    @property
    def name(self) -> str:
        if self.cartan_type is not None:
            return str(self.cartan_type)
        return "Cartan" + repr([list(r) for r in self.cartan])

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __reduce__(self):
        # rebuild instead of copying _cache, which may hold elements pointing back here
        return (_rebuild, (self.cartan, self.cartan_type))

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple index {i!r} outside 1..{self.rank}")
        return i

    def check_levi(self, J: Iterable[int]) -> frozenset[int]:
        J = frozenset(J)
        for j in J:
            self.check_index(j)
        return J

    def pairing(self, beta: Sequence[int], i: int) -> int:
        """``<beta, alpha_i^vee>`` for 1-based i."""
        row = self.cartan[i - 1]
        return sum(b * c for b, c in zip(beta, row))

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        p = self.pairing(beta, i)
        out = list(beta)
        out[i - 1] -= p
        return tuple(out)

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def roots_in_span(self, J: Iterable[int]) -> list[Root]:
        """Positive roots supported on the simple roots indexed by J."""
        J = self.check_levi(J)
        return [r for r in self.positive_roots
                if all(x == 0 or (k + 1) in J for k, x in enumerate(r))]

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(self.rank):
                if j not in seen and self.cartan[i][j] != 0:
                    seen.add(j)
                    queue.append(j)
        return len(seen) == self.rank


def _unit(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def _close_positive_roots(C: Matrix, max_roots: int) -> set[Root]:
    n = len(C)
    simple = [_unit(n, i) for i in range(n)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            p = sum(b * c for b, c in zip(beta, C[i]))
            if p == 0:
                continue
            gamma = list(beta)
            gamma[i] -= p
            if any(x < 0 for x in gamma):
                if any(x > 0 for x in gamma):
                    raise InvalidCartanMatrix("reflection produced a root of mixed sign")
                continue
            gamma = tuple(gamma)
            if gamma not in found:
                found.add(gamma)
                if len(found) > max_roots:
                    raise InvalidCartanMatrix("Cartan matrix is not of finite type (root closure too large)")
                queue.append(gamma)
    return found


def build_root_system(t: CartanType | str) -> RootSystem:
    """Root system for a Cartan type; results are shared per type."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: CartanType) -> RootSystem:
    return RootSystem(cartan_matrix(t), cartan_type=t)


def _rebuild(cartan: Matrix, cartan_type: CartanType | None) -> RootSystem:
    if cartan_type is not None:
        return build_root_system(cartan_type)
    return RootSystem(cartan)


def simple_root_adjacent(rs: RootSystem, i: int, J: Iterable[int]) -> bool:
    """True iff alpha_i pairs nontrivially with some alpha_j, j in J."""
    rs.check_index(i)
    J = rs.check_levi(J)
    if i in J:
        raise UserError(f"index {i} must lie outside the Levi subset")
    return any(rs.cartan[i - 1][j - 1] != 0 for j in J)
