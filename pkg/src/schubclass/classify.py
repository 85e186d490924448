"""Classification of Schubert varieties X_wB under Levi subgroups L_J.

Every criterion here is a decision procedure on the pair (w, J), or on w
alone, phrased through the factorisation ``w = w_{0,J} c``:

* spherical: lengths add and ``c`` is of Coxeter type;
* horospherical: spherical and ``supp(c)`` misses J;
* nearly toric: ``w = s_a c`` with ``c`` of Coxeter type, ``a`` in
  ``supp(c)`` and ``l(w) = l(c) + 1``;
* doubly spherical: every ``v <= w`` is spherical for some ``J <= I_v``;
* simple / wonderful: ``w = w_{0,J}``.

Levi-dependent queries require J to lie inside the left descent set I_w.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .bruhat import DEFAULT_INTERVAL_CAP, lower_interval, lower_set
from .cartan import RootSystem, simple_root_adjacent
from .errors import (CapExceeded, DisconnectedDiagram, EmptyLevi, InternalInconsistency,
                     LeviNotInDescents, NotHorospherical)
from .weyl import (LeviSubset, WeylElement, identity, is_coxeter_type, left_descents,
                   longest_element, lower_covers, multiply, parabolic_decompose,
                   simple_reflection, support)


@dataclass(frozen=True)
class Decomposition:
    """Boolean verdict carrying the factorisation that decided it."""
    holds: bool
    levi: LeviSubset
    levi_longest: WeylElement | None = None
    coxeter_factor: WeylElement | None = None
    alpha: int | None = None

    def __bool__(self):
        return self.holds


def _checked_levi(w: WeylElement, J: Iterable[int]) -> LeviSubset:
    J = w.rs.check_levi(J)
    extra = J - left_descents(w)
    if extra:
        raise LeviNotInDescents(
            f"J not contained in left descent set: {sorted(extra)} not in "
            f"{sorted(left_descents(w))} for w={list(w.word)}")
    return J


def is_toric(w: WeylElement) -> bool:
    return is_coxeter_type(w)


def _spherical(w: WeylElement, J: LeviSubset) -> Decomposition:
    w0J = longest_element(w.rs, J)
    c = multiply(w0J, w)
    ok = w.length == w0J.length + c.length and is_coxeter_type(c)
    return Decomposition(ok, J, w0J, c)


def is_spherical(w: WeylElement, J: Iterable[int]) -> Decomposition:
    return _spherical(w, _checked_levi(w, J))


def is_horospherical(w: WeylElement, J: Iterable[int]) -> Decomposition:
    d = is_spherical(w, J)
    if d.holds and support(d.coxeter_factor) & d.levi:
        return Decomposition(False, d.levi, d.levi_longest, d.coxeter_factor)
    return d


def is_nonsingular_horospherical(w: WeylElement, J: Iterable[int]) -> bool:
    """Sufficient condition for X_wB to be a nonsingular horospherical variety.

    True when the Coxeter factor ``c`` has pairwise commuting letters.  A
    False answer means only that this condition fails, not that X_wB is
    singular.
    """
    d = is_horospherical(w, J)
    if not d.holds:
        raise NotHorospherical(f"w={list(w.word)} is not horospherical for J={sorted(d.levi)}")
    C = w.rs.cartan
    letters = sorted(support(d.coxeter_factor))
    return all(C[i - 1][j - 1] == 0 for i, j in combinations(letters, 2))


def is_nearly_toric(w: WeylElement) -> Decomposition:
    """Search every left descent; the smallest valid one is the witness."""
    for a in sorted(left_descents(w)):
        c = w.left_mul(a)
        if c.length == w.length - 1 and is_coxeter_type(c) and a in support(c):
            return Decomposition(True, frozenset([a]), simple_reflection(w.rs, a), c, alpha=a)
    return Decomposition(False, frozenset())


def _subsets(items: Iterable[int]):
    items = sorted(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def spherical_for_some_levi(v: WeylElement) -> Decomposition:
    """First J <= I_v (by size, then lexicographic) for which v is spherical."""
    memo = v.rs._cache.setdefault("spherical_some_levi", {})
    hit = memo.get(v)
    if hit is None:
        hit = Decomposition(False, frozenset())
        for J in _subsets(left_descents(v)):
            d = _spherical(v, frozenset(J))
            if d.holds:
                hit = d
                break
        memo[v] = hit
    return hit


def is_doubly_spherical(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> bool:
    """Every Schubert subvariety X_vB (v <= w) is spherical for some Levi.

    The lower interval is swept through lower covers, so each element is
    visited at most once; verdicts are memoised per element on the root
    system and shared by later queries.
    """
    memo = w.rs._cache.setdefault("doubly_spherical", {})
    if w in memo:
        return memo[w]
    # iterative post-order over the lower interval
    visited = set()
    stack = [(w, False)]
    while stack:
        x, expanded = stack.pop()
        if x in memo:
            continue
        if expanded:
            memo[x] = spherical_for_some_levi(x).holds and all(memo[y] for y in lower_covers(x))
            continue
        if not spherical_for_some_levi(x).holds:
            memo[x] = False
            continue
        if x in visited:
            continue
        visited.add(x)
        if len(visited) > cap:
            raise CapExceeded(f"interval below {list(w.word)} exceeds {cap} elements")
        stack.append((x, True))
        stack.extend((y, False) for y in lower_covers(x) if y not in memo)
    return memo[w]


def is_doubly_spherical_sweep(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> bool:
    """Direct sweep of the full lower interval; reference version of the above."""
    return all(spherical_for_some_levi(v).holds for v in lower_interval(w, cap=cap))


def is_simple_variety(w: WeylElement, J: Iterable[int]) -> bool:
    J = _checked_levi(w, J)
    return w == longest_element(w.rs, J)


def is_wonderful(w: WeylElement, J: Iterable[int]) -> bool:
    """Same criterion as ``is_simple_variety``; a wonderful X_wB has rank 0."""
    return is_simple_variety(w, J)


def count_closed_orbits(w: WeylElement, J: Iterable[int], cap: int = DEFAULT_INTERVAL_CAP) -> int:
    """Number of closed L_J-orbits in X_wB.

    With ``w = w_{0,J} v`` this counts ``u <= v`` for which
    ``l(w_{0,J} u) = l(w_{0,J}) + l(u)``, i.e. u has no left descent in J.
    """
    J = _checked_levi(w, J)
    u, v = parabolic_decompose(w, J)
    if u != longest_element(w.rs, J):
        raise InternalInconsistency("left W_J factor differs from w_{0,J}")
    return sum(1 for x in lower_set(v, cap=cap)
               if not any(x.has_left_descent(j) for j in J))


def construct_prescribed(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    """Nonsingular horospherical X_wB whose stabiliser parabolic is P_J.

    Returns w0 when J is everything, otherwise ``w_{0,J} s_a`` with a the
    smallest index outside J adjacent to J in the Dynkin diagram.
    """
    J = rs.check_levi(J)
    if not J:
        raise EmptyLevi("the Levi subset must be nonempty")
    if not rs.is_connected():
        raise DisconnectedDiagram("Dynkin diagram is disconnected; adjacency cannot be guaranteed")
    full = frozenset(range(1, rs.rank + 1))
    if J == full:
        w = longest_element(rs)
    else:
        a = min(i for i in full - J if simple_root_adjacent(rs, i, J))
        w = longest_element(rs, J).right_mul(a)
    if left_descents(w) != J:
        raise InternalInconsistency(f"left descents of {list(w.word)} are not {sorted(J)}")
    if not is_horospherical(w, J).holds or not is_nonsingular_horospherical(w, J):
        raise InternalInconsistency(f"{list(w.word)} fails the horospherical postconditions")
    return w


def _word(x: WeylElement | None):
    return None if x is None else list(x.word)


@dataclass
class Witness:
    levi_longest: WeylElement | None = None
    coxeter_factor: WeylElement | None = None
    alpha: int | None = None
    alpha_factor: WeylElement | None = None

    def to_json(self) -> dict:
        return {
            "levi_longest": _word(self.levi_longest),
            "coxeter_factor": _word(self.coxeter_factor),
            "alpha": self.alpha,
            "alpha_factor": _word(self.alpha_factor),
        }


@dataclass
class Classification:
    w: WeylElement
    levi: LeviSubset
    is_toric: bool
    is_spherical: bool
    is_horospherical: bool
    is_nearly_toric: bool
    is_doubly_spherical: bool
    is_simple_variety: bool
    is_wonderful: bool
    # True when the sufficient nonsingularity condition holds, else None
    is_nonsingular_horospherical: bool | None = None
    closed_orbit_count: int | None = None
    wonderful_rank: int | None = None
    witness: Witness | None = field(default=None)

    def check(self):
        problems = []
        if self.is_horospherical and not self.is_spherical:
            problems.append("horospherical but not spherical")
        if self.is_wonderful != self.is_simple_variety:
            problems.append("wonderful and simple disagree")
        if self.is_nearly_toric and not self.is_doubly_spherical:
            problems.append("nearly toric but not doubly spherical")
        if self.closed_orbit_count is not None and (self.closed_orbit_count == 1) != self.is_simple_variety:
            problems.append("unique closed orbit and simplicity disagree")
        if (self.is_spherical or self.is_nearly_toric) and self.witness is None:
            problems.append("missing witness")
        if problems:
            raise InternalInconsistency(f"w={list(self.w.word)}: " + "; ".join(problems))

    def to_json(self) -> dict:
        return {
            "type": self.w.rs.name,
            "w": list(self.w.word),
            "length": self.w.length,
            "levi": sorted(self.levi),
            "is_toric": self.is_toric,
            "is_spherical": self.is_spherical,
            "is_horospherical": self.is_horospherical,
            "is_nearly_toric": self.is_nearly_toric,
            "is_doubly_spherical": self.is_doubly_spherical,
            "is_simple_variety": self.is_simple_variety,
            "is_wonderful": self.is_wonderful,
            "is_nonsingular_horospherical": self.is_nonsingular_horospherical,
            "closed_orbit_count": self.closed_orbit_count,
            "wonderful_rank": self.wonderful_rank,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def classify_full(w: WeylElement, J: Iterable[int] | None = None,
                  cap: int = DEFAULT_INTERVAL_CAP) -> Classification:
    """Evaluate every criterion; J defaults to the full left descent set."""
    J = left_descents(w) if J is None else _checked_levi(w, J)
    sph = _spherical(w, J)
    horo = sph.holds and not (support(sph.coxeter_factor) & J)
    near = is_nearly_toric(w)
    simple = w == sph.levi_longest
    nonsingular = None
    if horo and is_nonsingular_horospherical(w, J):
        nonsingular = True
    witness = None
    if sph.holds or near.holds:
        witness = Witness()
        if sph.holds:
            witness.levi_longest = sph.levi_longest
            witness.coxeter_factor = sph.coxeter_factor
        if near.holds:
            witness.alpha = near.alpha
            witness.alpha_factor = near.coxeter_factor
    result = Classification(
        w=w,
        levi=J,
        is_toric=is_toric(w),
        is_spherical=sph.holds,
        is_horospherical=horo,
        is_nearly_toric=near.holds,
        is_doubly_spherical=is_doubly_spherical(w, cap=cap),
        is_simple_variety=simple,
        is_wonderful=simple,
        is_nonsingular_horospherical=nonsingular,
        closed_orbit_count=count_closed_orbits(w, J, cap=cap),
        wonderful_rank=0 if simple else None,
        witness=witness,
    )
    result.check()
    return result


def identity_classification(rs: RootSystem) -> Classification:
    return classify_full(identity(rs))
