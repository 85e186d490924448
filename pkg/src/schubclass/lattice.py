"""Integer lattices, normal forms and joint kernels of characters of T.

A set of roots cuts out the diagonalizable subgroup ``D = cap ker(beta)``
of the maximal torus.  Its character group is ``X(T) / <beta_1, ...>``,
whose free rank is the dimension of D's identity component and whose
torsion (the invariant factors > 1) is the component group.

Python ints are arbitrary precision, so elimination never overflows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cartan import Root, RootSystem
from .errors import CapExceeded, NotReduced, ParseError
from .weyl import DEFAULT_WORD_CAP, WeylElement, _same_context, all_reduced_words, from_word

@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]
    rank_of_image: int


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithForm:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                # each remainder is smaller than the pivot, so this terminates
                _, i, j = min(rest)
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return SmithForm(tuple(diag), len(diag))


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Canonical basis of the row lattice.

    Row style and lower triangular: rows are returned in order of increasing
    pivot column, each pivot is positive and is the last nonzero entry of
    its row, and entries in a pivot column of later rows are reduced into
    ``[0, pivot)``.
    """
    A = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    A = [r for r in A if any(r)]
    k = 0
    for col in reversed(range(ncols)):
        while True:
            nz = [i for i in range(k, len(A)) if A[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(A[i][col]))
            A[k], A[best] = A[best], A[k]
            if len(nz) == 1:
                break
            p = A[k][col]
            for i in range(k + 1, len(A)):
                q = A[i][col] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        if k < len(A) and A[k][col]:
            if A[k][col] < 0:
                A[k] = [-a for a in A[k]]
            p = A[k][col]
            for i in range(k):
                q = A[i][col] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
            k += 1
    return [tuple(r) for r in reversed(A[:k])]


def sublattice_equal(rs: RootSystem | None, roots_a: Iterable[Sequence[int]],
                     roots_b: Iterable[Sequence[int]]) -> bool:
    """Whether two families of vectors span the same integer lattice."""
    roots_a, roots_b = list(roots_a), list(roots_b)
    n = rs.rank if rs is not None else len((roots_a or roots_b or [()])[0])
    return hermite_normal_form(roots_a, n) == hermite_normal_form(roots_b, n)


class IsogenyType(enum.Enum):
    ADJOINT = "adjoint"
    SIMPLY_CONNECTED = "simply_connected"

    @classmethod
    def parse(cls, text: str) -> "IsogenyType":
        key = text.strip().lower().replace("-", "_")
        aliases = {"adjoint": cls.ADJOINT, "ad": cls.ADJOINT,
                   "simply_connected": cls.SIMPLY_CONNECTED, "sc": cls.SIMPLY_CONNECTED}
        if key not in aliases:
            raise ParseError(f"unknown isogeny type {text!r}")
        return aliases[key]


@dataclass(frozen=True)
class CharacterLattice:
    """X(T) with a basis; ``root_coords[j]`` is alpha_{j+1} in that basis."""
    isogeny: IsogenyType
    rank: int
    root_coords: tuple[tuple[int, ...], ...]

    def coordinates(self, beta: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.rank
        for b, col in zip(beta, self.root_coords):
            if b:
                for k in range(self.rank):
                    out[k] += b * col[k]
        return tuple(out)


def character_lattice(rs: RootSystem, isogeny: IsogenyType | str) -> CharacterLattice:
    """Root lattice for adjoint groups, weight lattice for simply connected ones."""
    if isinstance(isogeny, str):
        isogeny = IsogenyType.parse(isogeny)
    n = rs.rank
    if isogeny is IsogenyType.ADJOINT:
        coords = tuple(tuple(1 if k == j else 0 for k in range(n)) for j in range(n))
    else:
        # alpha_j = sum_i <alpha_i^vee, alpha_j> omega_i: column j of C
        coords = tuple(tuple(rs.cartan[i][j] for i in range(n)) for j in range(n))
    return CharacterLattice(isogeny, n, coords)


@dataclass(frozen=True)
class KernelReport:
    torus_dimension: int
    component_group: tuple[int, ...]
    connected: bool

    def to_json(self) -> dict:
        return {"torus_dim": self.torus_dimension,
                "components": list(self.component_group),
                "connected": self.connected}


def kernel_report(lat: CharacterLattice, roots: Iterable[Sequence[int]]) -> KernelReport:
    rows = [lat.coordinates(b) for b in roots]
    if not rows:
        return KernelReport(lat.rank, (), True)
    snf = smith_normal_form(rows)
    torsion = tuple(d for d in snf.invariant_factors if d > 1)
    return KernelReport(lat.rank - snf.rank_of_image, torsion, not torsion)


def beta_sequence(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    """``beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`` for a reduced word."""
    word = tuple(word)
    if from_word(rs, word).length != len(word):
        raise NotReduced(f"word {list(word)} is not reduced")
    prefix = from_word(rs, ())
    out = []
    for i in word:
        out.append(prefix.matrix[i - 1])
        prefix = prefix.right_mul(i)
    return out


def word_kernel_equality(rs: RootSystem, word: Sequence[int]) -> bool:
    """Compare the beta-sequence of a reduced word with the simple roots it uses.

    Checks equality of the spanned sublattices of the root lattice and
    equality of the kernel reports in both isogeny types.
    """
    betas = beta_sequence(rs, word)
    alphas = [rs.simple_roots[i - 1] for i in sorted(set(word))]
    if not sublattice_equal(rs, betas, alphas):
        return False
    for iso in IsogenyType:
        lat = character_lattice(rs, iso)
        if kernel_report(lat, betas) != kernel_report(lat, alphas):
            return False
    return True


def verify_beta_kernel_equality(rs: RootSystem, w: WeylElement, all_words: bool = False,
                                cap: int = DEFAULT_WORD_CAP) -> bool:
    """Joint kernel of the beta-sequence equals that of the support of w.

    Uses the canonical reduced word, or every reduced word when
    ``all_words`` is set (``CapExceeded`` if there are more than ``cap``).
    """
    _same_context(from_word(rs, ()), w)
    if not all_words:
        return word_kernel_equality(rs, w.word)
    words = all_reduced_words(w, cap=cap)
    if words.truncated:
        raise CapExceeded(f"{list(w.word)} has more than {cap} reduced words")
    return all(word_kernel_equality(rs, word) for word in words.words)
