"""Weyl group elements and their combinatorics.

An element is stored as the integer matrix of its action on the simple-root
basis: row ``i`` holds the coordinates of ``w(alpha_{i+1})``.  Two elements
are equal iff their matrices are equal, so elements hash and compare without
any word problem.

Simple indices, words and Levi subsets are 1-based throughout the public
API.  A Levi subset is any iterable of indices; it is normalised to a
``frozenset``.
"""

from __future__ import annotations

import re
from collections import deque
from itertools import islice
from typing import Iterable, Iterator, NamedTuple, Sequence

from .cartan import Matrix, Root, RootSystem
from .errors import CapExceeded, ContextMismatch, ParseError

Word = tuple[int, ...]
LeviSubset = frozenset[int]

DEFAULT_ENUMERATION_CAP = 10**7
DEFAULT_WORD_CAP = 10_000


def _is_negative(root: Sequence[int]) -> bool:
    for x in root:
        if x:
            return x < 0
    return False


def _right_mul_s(rs: RootSystem, M: Matrix, i: int) -> Matrix:
    # (x s_i)(alpha_j) = x(alpha_j) - C[i][j] x(alpha_i)
    crow = rs.cartan[i - 1]
    ri = M[i - 1]
    return tuple(
        row if c == 0 else tuple(a - c * b for a, b in zip(row, ri))
        for row, c in zip(M, crow)
    )


def _left_mul_s(rs: RootSystem, M: Matrix, i: int) -> Matrix:
    # rows of an element matrix are roots
    table = rs.reflection_maps[i - 1]
    return tuple(table[row] for row in M)


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))


class WeylElement:
    __slots__ = ("rs", "matrix", "_inverse", "_length", "_word", "_hash")

    def __init__(self, rs: RootSystem, matrix: Sequence[Sequence[int]]):
        self.rs = rs
        self.matrix: Matrix = tuple(tuple(r) for r in matrix)
        self._inverse: WeylElement | None = None
        self._length: int | None = None
        self._word: Word | None = None
        self._hash = hash(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix and (self.rs is other.rs or self.rs == other.rs)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {list(self.word)})"

    def __reduce__(self):
        return (from_word, (self.rs, self.word))

    def _strip_right(self):
        # Right-descent stripping yields a reduced word and the inverse at once.
        rs = self.rs
        M = self.matrix
        letters = []
        while True:
            for i in range(len(M)):
                if _is_negative(M[i]):
                    break
            else:
                break
            letters.append(i + 1)
            M = _right_mul_s(rs, M, i + 1)
        inv = _identity_matrix(rs.rank)
        for i in letters:
            inv = _right_mul_s(rs, inv, i)
        self._length = len(letters)
        inverse = WeylElement(rs, inv)
        inverse._length = len(letters)
        inverse._inverse = self
        self._inverse = inverse

    @property
    def length(self) -> int:
        if self._length is None:
            self._strip_right()
        return self._length

    @property
    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            self._strip_right()
        return self._inverse

    @property
    def word(self) -> Word:
        """Canonical reduced word: repeatedly strip the smallest left descent."""
        if self._word is None:
            rs = self.rs
            y = self.inverse.matrix
            letters = []
            while True:
                for i in range(len(y)):
                    if _is_negative(y[i]):
                        break
                else:
                    break
                letters.append(i + 1)
                y = _right_mul_s(rs, y, i + 1)
            self._word = tuple(letters)
        return self._word

    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank)

    def _link(self, out: "WeylElement", inv: Matrix | None, step: int) -> "WeylElement":
        # carry length and inverse across a one-letter step when already known
        if self._length is not None:
            out._length = self._length + step
        if inv is not None:
            out._inverse = WeylElement(self.rs, inv)
            out._inverse._inverse = out
            out._inverse._length = out._length
        return out

    def left_mul(self, i: int) -> "WeylElement":
        """``s_i * self``."""
        rs = self.rs
        out = WeylElement(rs, _left_mul_s(rs, self.matrix, i))
        if self._inverse is None:
            return out
        step = -1 if self.has_left_descent(i) else 1
        return self._link(out, _right_mul_s(rs, self._inverse.matrix, i), step)

    def right_mul(self, i: int) -> "WeylElement":
        """``self * s_i``."""
        rs = self.rs
        out = WeylElement(rs, _right_mul_s(rs, self.matrix, i))
        step = -1 if self.has_right_descent(i) else 1
        inv = None if self._inverse is None else _left_mul_s(rs, self._inverse.matrix, i)
        return self._link(out, inv, step)

    def has_left_descent(self, i: int) -> bool:
        return _is_negative(self.inverse.matrix[i - 1])

    def has_right_descent(self, i: int) -> bool:
        return _is_negative(self.matrix[i - 1])


def _same_context(a: WeylElement, b: WeylElement):
    if not (a.rs is b.rs or a.rs == b.rs):
        raise ContextMismatch(f"elements of {a.rs.name} and {b.rs.name} cannot be combined")


def identity(rs: RootSystem) -> WeylElement:
    e = WeylElement(rs, _identity_matrix(rs.rank))
    e._length = 0
    e._inverse = e
    e._word = ()
    return e


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rs.check_index(i)
    return identity(rs).right_mul(i)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product ``s_{w1} s_{w2} ... s_{wk}``; the word need not be reduced."""
    M = _identity_matrix(rs.rank)
    for i in word:
        rs.check_index(i)
        M = _right_mul_s(rs, M, i)
    return WeylElement(rs, M)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _same_context(a, b)
    return WeylElement(a.rs, tuple(apply(a, row) for row in b.matrix))


def inverse(a: WeylElement) -> WeylElement:
    return a.inverse


def apply(a: WeylElement, beta: Sequence[int]) -> Root:
    """Linear action of ``a`` on a vector in simple-root coordinates."""
    n = a.rs.rank
    if len(beta) != n:
        raise ContextMismatch(f"root of length {len(beta)} in a rank-{n} system")
    out = [0] * n
    for coeff, row in zip(beta, a.matrix):
        if coeff:
            for k in range(n):
                out[k] += coeff * row[k]
    return tuple(out)


def length(w: WeylElement) -> int:
    return w.length


def inversion_set(w: WeylElement) -> set[Root]:
    """Positive roots sent to negative roots by ``w``."""
    return {b for b in w.rs.positive_roots if _is_negative(apply(w, b))}


def left_inversion_set(w: WeylElement) -> set[Root]:
    return inversion_set(w.inverse)


def canonical_reduced_word(w: WeylElement) -> Word:
    return w.word


class ReducedWords(NamedTuple):
    words: list[Word]
    truncated: bool


def all_reduced_words(w: WeylElement, cap: int = DEFAULT_WORD_CAP) -> ReducedWords:
    """Distinct reduced words of ``w`` in lexicographic order, at most ``cap``.

    Depth-first over left-descent choices; ``truncated`` is set when more
    words exist than were returned.
    """

    def dfs(x: WeylElement) -> Iterator[Word]:
        if x.length == 0:
            yield ()
            return
        for i in left_descents_sorted(x):
            for rest in dfs(x.left_mul(i)):
                yield (i,) + rest

    found = list(islice(dfs(w), cap + 1))
    truncated = len(found) > cap
    return ReducedWords(found[:cap], truncated)


def left_descents_sorted(w: WeylElement) -> list[int]:
    inv = w.inverse.matrix
    return [i + 1 for i in range(len(inv)) if _is_negative(inv[i])]


def left_descents(w: WeylElement) -> LeviSubset:
    """``{i : l(s_i w) < l(w)}``, the set indexing the stabiliser parabolic."""
    return frozenset(left_descents_sorted(w))


def right_descents(w: WeylElement) -> LeviSubset:
    return frozenset(i + 1 for i, row in enumerate(w.matrix) if _is_negative(row))


def support(w: WeylElement) -> LeviSubset:
    return frozenset(w.word)


def is_coxeter_type(w: WeylElement) -> bool:
    return w.length == len(support(w))


def longest_element(rs: RootSystem, J: Iterable[int] = None) -> WeylElement:
    """Longest element of the parabolic subgroup W_J (W itself if J is None)."""
    J = frozenset(range(1, rs.rank + 1)) if J is None else rs.check_levi(J)
    key = ("longest", J)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    x = identity(rs)
    order = sorted(J)
    while True:
        for j in order:
            if not x.has_right_descent(j):
                x = x.right_mul(j)
                break
        else:
            break
    rs._cache[key] = x
    return x


def parabolic_decompose(w: WeylElement, J: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Factor ``w = u * v`` with u in W_J and v a minimal coset representative."""
    rs = w.rs
    J = sorted(rs.check_levi(J))
    x = w
    letters = []
    while True:
        for j in J:
            if x.has_left_descent(j):
                letters.append(j)
                x = x.left_mul(j)
                break
        else:
            break
    return from_word(rs, letters), x


def min_coset_reps(rs: RootSystem, J: Iterable[int], cap: int = DEFAULT_ENUMERATION_CAP) -> list[WeylElement]:
    """Minimal length representatives of the cosets W_J \\ W.

    These are the elements with no left descent in J.  The set is closed
    under taking reduced prefixes, so a breadth-first search by right
    multiplication reaches all of it.
    """
    J = rs.check_levi(J)
    e = identity(rs)
    out = [e]
    level = [e]
    while level:
        nxt: dict[WeylElement, None] = {}
        for x in level:
            for i in range(1, rs.rank + 1):
                if x.has_right_descent(i):
                    continue
                y = x.right_mul(i)
                if y in nxt:
                    continue
                y._length = x.length + 1
                if any(y.has_left_descent(j) for j in J):
                    continue
                nxt[y] = None
        level = list(nxt)
        out.extend(level)
        if len(out) > cap:
            raise CapExceeded(f"more than {cap} coset representatives")
    return sorted(out, key=sort_key)


def sort_key(w: WeylElement):
    return (w.length, w.word)


def enumerate_group(rs: RootSystem, max_length: int | None = None,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[WeylElement]:
    """Breadth-first enumeration by length, each element exactly once.

    Without ``max_length`` the group order is checked against ``cap`` up
    front when the Cartan type is known.
    """
    if max_length is None and rs.cartan_type is not None:
        order = rs.cartan_type.weyl_group_order()
        if order > cap:
            raise CapExceeded(f"|W({rs.name})| = {order} exceeds the enumeration cap {cap}")
    e = identity(rs)
    level = [e]
    count = 1
    k = 0
    yield e
    while level and (max_length is None or k < max_length):
        nxt: dict[WeylElement, None] = {}
        for x in level:
            for i in range(1, rs.rank + 1):
                if not x.has_right_descent(i):
                    y = x.right_mul(i)
                    if y not in nxt:
                        y._length = k + 1
                        nxt[y] = None
        level = list(nxt)
        k += 1
        count += len(level)
        if count > cap:
            raise CapExceeded(f"enumeration exceeded the cap of {cap} elements")
        yield from level


def group_elements(rs: RootSystem, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[WeylElement, ...]:
    """All of W as a cached tuple, in breadth-first order."""
    cached = rs._cache.get("elements")
    if cached is None:
        cached = tuple(enumerate_group(rs, cap=cap))
        rs._cache["elements"] = cached
    return cached


def reflections(rs: RootSystem) -> dict[Root, WeylElement]:
    """Map each positive root beta to the reflection s_beta."""
    cached = rs._cache.get("reflections")
    if cached is not None:
        return cached
    e = identity(rs)
    # beta = x(alpha_k) gives s_beta = x s_k x^{-1}
    paths: dict[Root, tuple[WeylElement, int]] = {}
    queue = deque()
    for k in range(1, rs.rank + 1):
        paths[rs.simple_roots[k - 1]] = (e, k)
        queue.append(rs.simple_roots[k - 1])
    while queue:
        beta = queue.popleft()
        x, k = paths[beta]
        for i in range(1, rs.rank + 1):
            gamma = rs.reflect(i, beta)
            if not _is_negative(gamma) and gamma not in paths:
                paths[gamma] = (x.left_mul(i), k)
                queue.append(gamma)
    out = {}
    for beta in rs.positive_roots:
        x, k = paths[beta]
        out[beta] = multiply(x.right_mul(k), x.inverse)
    rs._cache["reflections"] = out
    return out


def lower_covers(w: WeylElement) -> list[WeylElement]:
    """Elements covered by ``w`` in Bruhat order: ``w t`` with length one less."""
    target = w.length - 1
    out = []
    for t in reflections(w.rs).values():
        y = multiply(w, t)
        if y.length == target:
            out.append(y)
    return sorted(out, key=sort_key)


def levi_order(rs: RootSystem, J: Iterable[int]) -> int:
    """Order of the parabolic subgroup W_J, by enumeration."""
    J = rs.check_levi(J)
    e = identity(rs)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for j in J:
            y = x.right_mul(j)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


_W0 = re.compile(r"w0\s*(?:\(\s*\[?([\d,\s]*)\]?\s*\)|\[([\d,\s]*)\])?")


def parse_indices(text: str) -> list[int]:
    """Parse ``"1 2 1"``, ``"1,2,1"`` or ``"[1, 3]"`` into a list of ints."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"cannot parse index list {text!r}") from None


def parse_element(rs: RootSystem, text: str) -> WeylElement:
    """Parse the word grammar: index lists, ``w0`` and ``w0([j, ...])``."""
    stripped = text.strip()
    m = _W0.fullmatch(stripped)
    if m:
        inner = m.group(1) if m.group(1) is not None else m.group(2)
        if inner is None:
            return longest_element(rs)
        return longest_element(rs, parse_indices(inner))
    return from_word(rs, parse_indices(stripped))
