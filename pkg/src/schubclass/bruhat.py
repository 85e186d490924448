"""Bruhat order, Bruhat intervals and Boolean-lattice recognition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import CapExceeded, NotComparable, NotHorospherical, OracleTooLarge
from .weyl import (WeylElement, _same_context, from_word, identity, is_coxeter_type,
                   longest_element, lower_covers, multiply, parabolic_decompose, sort_key,
                   support)

DEFAULT_INTERVAL_CAP = 10**6
DEFAULT_BOOLEAN_RANK_CAP = 12
DEFAULT_ORACLE_LENGTH_CAP = 20


@lru_cache(maxsize=1 << 18)
def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order by the left-descent recursion.

    For a left descent s of w: ``u <= w`` iff ``min(u, s u) <= s w``.
    """
    _same_context(u, w)
    while True:
        if u.length > w.length:
            return False
        if w.length == u.length:
            return u == w
        if u.length == 0:
            return True
        for i in range(1, w.rs.rank + 1):
            if w.has_left_descent(i):
                break
        if u.has_left_descent(i):
            u = u.left_mul(i)
        w = w.left_mul(i)


def bruhat_leq_subword_oracle(u: WeylElement, w: WeylElement,
                              max_length: int = DEFAULT_ORACLE_LENGTH_CAP) -> bool:
    """Subword test against the canonical word of ``w``; exponential, tests only."""
    _same_context(u, w)
    if w.length > max_length:
        raise OracleTooLarge(f"length {w.length} exceeds the oracle bound {max_length}")
    word = w.word
    k = u.length
    if k > len(word):
        return False
    rs = w.rs
    return any(from_word(rs, (word[p] for p in positions)) == u
               for positions in combinations(range(len(word)), k))


def lower_interval(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> list[WeylElement]:
    """All ``z <= w``, sorted by (length, canonical word).

    Built as the set of subword products of a reduced word of ``w``: reading
    the word right to left, each letter doubles the current set under left
    multiplication.
    """
    return sorted(lower_set(w, cap=cap), key=sort_key)


def lower_set(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> set[WeylElement]:
    """Unordered version of ``lower_interval``."""
    current = {identity(w.rs)}
    for i in reversed(w.word):
        current |= {z.left_mul(i) for z in current}
        if len(current) > cap:
            raise CapExceeded(f"interval below {list(w.word)} exceeds {cap} elements")
    return current


@dataclass
class BruhatInterval:
    bottom: WeylElement
    top: WeylElement
    elements: list[WeylElement]
    _covers: list[tuple[int, int]] | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.top.length - self.bottom.length

    def __len__(self):
        return len(self.elements)

    def __contains__(self, z):
        return z in self.index

    @property
    def index(self) -> dict[WeylElement, int]:
        return {z: k for k, z in enumerate(self.elements)}

    @property
    def cover_relations(self) -> list[tuple[int, int]]:
        """Pairs ``(a, b)`` of element indices with ``elements[a]`` covered by ``elements[b]``."""
        if self._covers is None:
            index = self.index
            covers = []
            for b, z in enumerate(self.elements):
                if z == self.bottom:
                    continue
                for y in lower_covers(z):
                    a = index.get(y)
                    if a is not None:
                        covers.append((a, b))
            self._covers = sorted(covers)
        return self._covers

    def to_json(self) -> dict:
        return {
            "bottom": list(self.bottom.word),
            "top": list(self.top.word),
            "rank": self.rank,
            "elements": [list(z.word) for z in self.elements],
            "cover_relations": [list(p) for p in self.cover_relations],
        }


def interval(bottom: WeylElement, top: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> BruhatInterval:
    _same_context(bottom, top)
    if not bruhat_leq(bottom, top):
        raise NotComparable(f"{list(bottom.word)} is not below {list(top.word)}")
    below = lower_interval(top, cap=cap)
    if bottom.length:
        below = [z for z in below if bruhat_leq(bottom, z)]
    return BruhatInterval(bottom, top, below)


def is_boolean_interval(iv: BruhatInterval, rank_cap: int = DEFAULT_BOOLEAN_RANK_CAP) -> bool:
    """Decide whether the interval is isomorphic to the lattice of subsets of {1..k}.

    Each element is mapped to the set of atoms below it.  The interval is
    Boolean iff the level sizes are binomial, that map is injective with
    image sizes equal to the rank, every cover maps to a strict inclusion
    and the number of covers is ``k * 2^(k-1)``.
    """
    k = iv.rank
    if k > rank_cap:
        raise CapExceeded(f"interval rank {k} exceeds the Boolean test cap {rank_cap}")
    if len(iv.elements) != 2**k:
        return False
    base = iv.bottom.length
    levels = [0] * (k + 1)
    for z in iv.elements:
        levels[z.length - base] += 1
    if levels != [comb(k, i) for i in range(k + 1)]:
        return False
    covers = iv.cover_relations
    if len(covers) != (k * 2 ** (k - 1) if k else 0):
        return False
    below: dict[int, set[int]] = {b: set() for b in range(len(iv.elements))}
    for a, b in covers:
        below[b].add(a)
    atom_sets: list[frozenset[int]] = [frozenset()] * len(iv.elements)
    # elements are sorted by length, so lower covers are processed first
    for b, z in enumerate(iv.elements):
        r = z.length - base
        if r == 1:
            atom_sets[b] = frozenset([b])
        elif r > 1:
            atom_sets[b] = frozenset().union(*(atom_sets[a] for a in below[b]))
        if len(atom_sets[b]) != r:
            return False
    if len(set(atom_sets)) != len(atom_sets):
        return False
    return all(atom_sets[a] < atom_sets[b] for a, b in covers)


@dataclass
class ProductIsomorphism:
    """Outcome of comparing [id, w] with [id, w_{0,J}] x [id, c]."""
    holds: bool
    levi_longest: WeylElement
    coxeter_factor: WeylElement
    table: dict[WeylElement, tuple[WeylElement, WeylElement]] | None = None

    def __bool__(self):
        return self.holds


def horospherical_factors(w: WeylElement, J: Iterable[int]) -> tuple[WeylElement, WeylElement] | None:
    """Return ``(w_{0,J}, c)`` if w = w_{0,J} c is a horospherical decomposition."""
    J = w.rs.check_levi(J)
    w0J = longest_element(w.rs, J)
    c = multiply(w0J, w)  # w0J is an involution
    if w.length != w0J.length + c.length:
        return None
    if not is_coxeter_type(c) or support(c) & J:
        return None
    return w0J, c


def check_product_isomorphism(w: WeylElement, J: Iterable[int],
                              cap: int = DEFAULT_INTERVAL_CAP) -> ProductIsomorphism:
    """Verify that ``z -> (u, v)`` is a poset isomorphism [id,w] -> [id,w0J] x [id,c]."""
    J = w.rs.check_levi(J)
    factors = horospherical_factors(w, J)
    if factors is None:
        raise NotHorospherical(f"{list(w.word)} has no horospherical decomposition for J={sorted(J)}")
    w0J, c = factors
    lower_w = lower_interval(w, cap=cap)
    if len(lower_w) ** 2 > cap:
        raise CapExceeded(f"pairwise order check on {len(lower_w)} elements exceeds {cap}")
    left = set(lower_interval(w0J, cap=cap))
    right = set(lower_interval(c, cap=cap))
    table = {z: parabolic_decompose(z, J) for z in lower_w}
    fail = ProductIsomorphism(False, w0J, c)
    images = set(table.values())
    if len(images) != len(lower_w) or len(lower_w) != len(left) * len(right):
        return fail
    if any(u not in left or v not in right for u, v in images):
        return fail
    for y in lower_w:
        uy, vy = table[y]
        for z in lower_w:
            uz, vz = table[z]
            if bruhat_leq(y, z) != (bruhat_leq(uy, uz) and bruhat_leq(vy, vz)):
                return fail
    return ProductIsomorphism(True, w0J, c, table)
