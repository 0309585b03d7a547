"""ADE root systems in their standard coordinate models.

Models (all roots have squared norm 2 under the standard dot product):

* ``A`` of rank n-1: the 2(n choose 2) vectors e_i - e_j inside the
  sum-zero hyperplane of R^n.
* ``D`` of rank n: the vectors +-e_i +- e_j (i < j) in R^n.
* ``E`` of rank 8: the D_8 roots together with the 128 half-integer
  vectors (+-1/2, ..., +-1/2) having an even number of minus signs.
* ``E`` of rank 7 resp. 6: the E_8 roots orthogonal to the root
  s = (1/2, ..., 1/2), resp. orthogonal to both s and e_1 + e_8
  (s and e_1 + e_8 span an A_2 subsystem, so this is the A_1- resp.
  A_2-orthogonal-complement realization inside the E_8 coordinates).

Positivity convention, fixed once for the whole package: a root is
positive iff its first nonzero coordinate is positive.  For the E-types
this is the positivity induced by the generic linear functional
v -> sum_k 3^(d-1-k) v_k, whose value is never zero on a root.

Coordinates are exact: externally tuples of Fraction, internally doubled
to plain integers so the hot loops (inner products, membership) stay in
int arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from itertools import combinations
from typing import Iterable

Vector = tuple[Q, ...]


class UnsupportedRank(ValueError):
    """Raised for (kind, rank) pairs outside the supported table."""


class NotARoot(ValueError):
    """Raised when a vector expected to be a root is not one."""


def _halve(v2: tuple[int, ...]) -> Vector:
    return tuple(Q(c, 2) for c in v2)


def _double(v: Iterable) -> tuple[int, ...]:
    out = []
    for c in v:
        q = 2 * Q(c)
        if q.denominator != 1:
            raise NotARoot(f"coordinate {c} is not a half-integer")
        out.append(int(q))
    return tuple(out)


def _is_positive2(v2: tuple[int, ...]) -> bool:
    for c in v2:
        if c:
            return c > 0
    return False


def _roots2_A(rank: int) -> list[tuple[int, ...]]:
    n = rank + 1
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 2, -2
                roots.append(tuple(v))
    return roots


def _roots2_D(rank: int) -> list[tuple[int, ...]]:
    roots = []
    for i, j in combinations(range(rank), 2):
        for si in (2, -2):
            for sj in (2, -2):
                v = [0] * rank
                v[i], v[j] = si, sj
                roots.append(tuple(v))
    return roots


def _roots2_E8() -> list[tuple[int, ...]]:
    roots = _roots2_D(8)
    for signs in range(256):
        v = tuple(1 if signs & (1 << k) else -1 for k in range(8))
        if sum(1 for c in v if c < 0) % 2 == 0:
            roots.append(v)
    return roots


@dataclass(frozen=True)
class RootSystem:
    """An ADE root system with explicit coordinates and Coxeter data."""

    kind: str
    rank: int
    ambient_dim: int
    roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    _index2: dict = field(repr=False, hash=False, compare=False)
    _pos2: frozenset = field(repr=False, hash=False, compare=False)

    # -- queries ----------------------------------------------------------

    def is_root(self, v) -> bool:
        try:
            return _double(v) in self._index2
        except NotARoot:
            return False

    def inner(self, u, v) -> Q:
        return sum((Q(a) * Q(b) for a, b in zip(u, v)), Q(0))

    def coxeter_number(self) -> int:
        h, r = divmod(len(self.roots), self.rank)
        if r:
            raise ValueError("root count is not a multiple of the rank")
        return h

    def reflect(self, alpha, v) -> Vector:
        """r_alpha(v) = v - <alpha, v> alpha (alpha must be a root)."""
        if not self.is_root(alpha):
            raise NotARoot(f"{alpha} is not a root of {self.kind}{self.rank}")
        c = self.inner(alpha, v)
        return tuple(Q(x) - c * Q(a) for x, a in zip(v, alpha))

    def m_alpha(self, alpha) -> int:
        """Number of positive roots beta with <alpha, beta> = +-1."""
        a2 = _double(alpha)
        if a2 not in self._index2:
            raise NotARoot(f"{alpha} is not a root of {self.kind}{self.rank}")
        count = 0
        for b2 in self._pos2:
            # doubled coordinates scale the inner product by 4
            if abs(sum(x * y for x, y in zip(a2, b2))) == 4:
                count += 1
        return count

    def canonical_positive(self, v) -> Vector:
        """The positive member of {v, -v}; idempotent on positive roots."""
        v2 = _double(v)
        if v2 in self._pos2:
            return _halve(v2)
        neg = tuple(-c for c in v2)
        if neg in self._pos2:
            return _halve(neg)
        raise NotARoot(f"neither {v} nor its negative is a positive root")

    def simple_roots(self) -> tuple[Vector, ...]:
        """Indecomposable positive roots (a lattice basis, rank of them)."""
        pos = list(self._pos2)
        pos_set = self._pos2
        simple = []
        for a in sorted(pos):
            decomposable = False
            for b in pos:
                if b == a:
                    continue
                diff = tuple(x - y for x, y in zip(a, b))
                if diff in pos_set:
                    decomposable = True
                    break
            if not decomposable:
                simple.append(a)
        if len(simple) != self.rank:
            raise ValueError("simple root extraction did not match the rank")
        return tuple(_halve(a) for a in sorted(simple))


def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct the root system of the given kind and rank.

    Supported: (A, rank >= 1), (D, rank >= 4), (E, rank in {6, 7, 8}).
    """
    if kind == "A" and rank >= 1:
        roots2 = _roots2_A(rank)
        ambient = rank + 1
    elif kind == "D" and rank >= 4:
        roots2 = _roots2_D(rank)
        ambient = rank
    elif kind == "E" and rank in (6, 7, 8):
        roots2 = _roots2_E8()
        ambient = 8
        if rank <= 7:
            # orthogonal to the root (1/2, ..., 1/2): doubled sum vanishes
            roots2 = [v for v in roots2 if sum(v) == 0]
        if rank == 6:
            # also orthogonal to e_1 + e_8
            roots2 = [v for v in roots2 if v[0] + v[7] == 0]
    else:
        raise UnsupportedRank(f"unsupported root system {kind}{rank}")
    roots2.sort()
    pos2 = frozenset(v for v in roots2 if _is_positive2(v))
    index2 = {v: i for i, v in enumerate(roots2)}
    roots = tuple(_halve(v) for v in roots2)
    positive = tuple(_halve(v) for v in roots2 if v in pos2)
    return RootSystem(
        kind=kind,
        rank=rank,
        ambient_dim=ambient,
        roots=roots,
        positive_roots=positive,
        _index2=index2,
        _pos2=pos2,
    )
