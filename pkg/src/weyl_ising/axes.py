"""Closed-form Griess algebra on a finite axis set with 2B/3C incidence.

Axes are opaque hashable labels.  Each unordered pair of axes is either
SAME (the labels name one axis), TWO_B (orthogonal: zero product, zero
pairing), or THREE_C with a designated third axis closing the triple.
Products, the invariant bilinear form, conformal vectors and Miyamoto
permutations all follow from the three closed-form rules

    e . e = 2e        <e, e> = 1/4
    e . f = 0         <e, f> = 0          (TWO_B)
    e . f = (e + f - g)/32,  <e, f> = 1/256   (THREE_C with third g)

extended bilinearly over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable, Hashable, Mapping, Sequence

from .rootsys import RootSystem

Label = Hashable
Element = dict  # Label -> Fraction, zero coefficients dropped

SAME = "SAME"
TWO_B = "2B"


@dataclass(frozen=True)
class ThreeC:
    """Relation tag for a 3C pair, carrying the third axis of the triple."""

    third: Label


class NoConformalVector(ValueError):
    """The system w.x = 2x over the axis span has no solution."""


class NonUniqueConformalVector(ValueError):
    """The system w.x = 2x has an affine solution space of positive dimension."""

    def __init__(self, dimension: int):
        super().__init__(f"conformal vector not unique: solution space has "
                         f"dimension {dimension}")
        self.dimension = dimension


class NotATriple(ValueError):
    """The given axes do not form a closed 3C triple."""


@dataclass(frozen=True)
class VirasoroReport:
    """A candidate conformal vector with its verified numerology.

    ``is_conformal`` records the outcome of the report's own checks: for
    ``virasoro`` that w acts as multiplication by 2 on every axis, for
    ``sub_virasoro_3C`` that the four commutant identities hold.
    """

    vector: Mapping
    norm: Q
    central_charge: Q
    is_conformal: bool


class AxisAlgebra:
    """Finite-dimensional commutative algebra spanned by axes.

    ``relation(a, b)`` must be symmetric, return SAME on the diagonal,
    and close its THREE_C triples: relation(a, b) = ThreeC(c) forces
    relation(a, c) = ThreeC(b) and relation(b, c) = ThreeC(a).
    """

    def __init__(self, axes: Sequence[Label],
                 relation: Callable[[Label, Label], object]):
        self.axes = tuple(axes)
        if len(set(self.axes)) != len(self.axes):
            raise ValueError("axis labels must be distinct")
        index = {a: i for i, a in enumerate(self.axes)}
        table: dict[tuple[Label, Label], object] = {}
        for i, a in enumerate(self.axes):
            if relation(a, a) != SAME:
                raise ValueError(f"relation({a!r}, {a!r}) must be SAME")
            table[(a, a)] = SAME
            for b in self.axes[:i]:
                r = relation(a, b)
                if relation(b, a) != r:
                    raise ValueError(f"relation is not symmetric on ({a!r}, {b!r})")
                if isinstance(r, ThreeC):
                    g = r.third
                    if g not in index or g == a or g == b:
                        raise ValueError(f"third axis {g!r} of ({a!r}, {b!r}) "
                                         "is not another axis")
                    if relation(a, g) != ThreeC(b) or relation(b, g) != ThreeC(a):
                        raise ValueError(f"triple through ({a!r}, {b!r}) does "
                                         "not close")
                elif r not in (SAME, TWO_B):
                    raise ValueError(f"unknown relation value {r!r}")
                table[(a, b)] = table[(b, a)] = r
        self._index = index
        self._table = table

    def __len__(self) -> int:
        return len(self.axes)

    def relation(self, a: Label, b: Label):
        return self._table[(a, b)]

    def element(self, coeffs: Mapping) -> Element:
        out = {}
        for a, c in coeffs.items():
            if a not in self._index:
                raise KeyError(f"{a!r} is not an axis")
            c = Q(c)
            if c:
                out[a] = out.get(a, Q(0)) + c
        return {a: c for a, c in out.items() if c}

    def axis(self, a: Label) -> Element:
        return self.element({a: 1})

    def product(self, u: Mapping, v: Mapping) -> Element:
        out: dict = {}

        def add(a: Label, c: Q) -> None:
            if c:
                out[a] = out.get(a, Q(0)) + c

        for a, ca in u.items():
            for b, cb in v.items():
                c = Q(ca) * Q(cb)
                if not c:
                    continue
                r = self._table[(a, b)]
                if r == SAME:
                    add(a, c)
                    add(b, c)
                elif isinstance(r, ThreeC):
                    add(a, c / 32)
                    add(b, c / 32)
                    add(r.third, -c / 32)
        return {a: c for a, c in out.items() if c}

    def pairing(self, u: Mapping, v: Mapping) -> Q:
        total = Q(0)
        for a, ca in u.items():
            for b, cb in v.items():
                r = self._table[(a, b)]
                if r == SAME:
                    total += Q(ca) * Q(cb) / 4
                elif isinstance(r, ThreeC):
                    total += Q(ca) * Q(cb) / 256
        return total

    def gram(self) -> list[list[Q]]:
        unit = [self.axis(a) for a in self.axes]
        return [[self.pairing(ua, ub) for ub in unit] for ua in unit]


def from_root_system(R: RootSystem) -> AxisAlgebra:
    """One axis per positive root; pairs are THREE_C when the roots have
    product +-1 (third axis the canonical positive of their sum or
    difference) and TWO_B when orthogonal."""
    from .linalg import dot, vec_add, vec_sub

    def relation(a, b):
        if a == b:
            return SAME
        s = dot(a, b)
        if s == 0:
            return TWO_B
        if s == -1:
            return ThreeC(R.canonical_positive(vec_add(a, b)))
        if s == 1:
            return ThreeC(R.canonical_positive(vec_sub(a, b)))
        raise ValueError(f"unexpected root pair with product {s}")

    return AxisAlgebra(R.positive_roots, relation)


def virasoro(A: AxisAlgebra) -> VirasoroReport:
    """Solve w . x = 2x (all axes x) for w in the axis span.

    The equations split into many two-term differences and a few dense
    rows; the differences are contracted by union-find before the exact
    dense elimination, which keeps the solve small even with 120 axes.
    """
    axes = A.axes
    n = len(axes)
    idx = A._index

    # rows: (dict var-index -> Q, rhs)
    rows: list[tuple[dict[int, Q], Q]] = []
    for b in axes:
        # coefficient of axis g in sum_a c_a (e_a . e_b), for each g
        cols: dict[Label, dict[int, Q]] = {}

        def put(g: Label, a: Label, val: Q) -> None:
            cols.setdefault(g, {})[idx[a]] = \
                cols.setdefault(g, {}).get(idx[a], Q(0)) + val

        for a in axes:
            r = A.relation(a, b)
            if r == SAME:
                put(a, a, Q(1))
                put(b, a, Q(1))
            elif isinstance(r, ThreeC):
                put(a, a, Q(1, 32))
                put(b, a, Q(1, 32))
                put(r.third, a, Q(-1, 32))
        for g, row in cols.items():
            row = {j: v for j, v in row.items() if v}
            rhs = Q(2) if g == b else Q(0)
            if row or rhs:
                rows.append((row, rhs))

    # union-find over rows of the form q(c_x - c_y) = 0
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rest: list[tuple[dict[int, Q], Q]] = []
    for row, rhs in rows:
        if rhs == 0 and len(row) == 2:
            (x, qx), (y, qy) = row.items()
            if qx == -qy:
                parent[find(x)] = find(y)
                continue
        rest.append((row, rhs))

    classes = sorted({find(j) for j in range(n)})
    pos = {c: k for k, c in enumerate(classes)}
    m = len(classes)

    reduced: dict[tuple, tuple[tuple[Q, ...], Q]] = {}
    for row, rhs in rest:
        acc = [Q(0)] * m
        for j, v in row.items():
            acc[pos[find(j)]] += v
        key = (tuple(acc), rhs)
        reduced[key] = (tuple(acc), rhs)

    # exact Gaussian elimination on the reduced system
    mat = [list(r) + [rhs] for r, rhs in reduced.values()]
    rank = 0
    for col in range(m):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    for r in range(rank, len(mat)):
        if mat[r][m]:
            raise NoConformalVector("the defining linear system is inconsistent")
    if rank < m:
        raise NonUniqueConformalVector(m - rank)

    values = [Q(0)] * m
    for r in range(rank):
        col = next(c for c in range(m) if mat[r][c])
        values[col] = mat[r][m]

    w = A.element({a: values[pos[find(j)]] for j, a in enumerate(axes)})
    ok = all(A.product(w, A.axis(b)) == A.element({b: 2}) for b in axes)
    if not ok:
        raise NoConformalVector("solved vector fails the action check")
    norm = A.pairing(w, w)
    return VirasoroReport(vector=w, norm=norm, central_charge=2 * norm,
                          is_conformal=ok)


def sub_virasoro_3C(A: AxisAlgebra, e: Label, triple: Sequence[Label]) -> VirasoroReport:
    """Report on a := (32/33)(e + f + g) - e for a 3C triple {e, f, g}.

    Verifies a.a = 2a, <a,a> = 21/44, e.a = 0 and <e,a> = 0; the flag in
    the report is the conjunction of the four.
    """
    t = tuple(triple)
    if len(t) != 3 or e not in t or len(set(t)) != 3:
        raise NotATriple(f"{t!r} is not a triple through {e!r}")
    for i in range(3):
        for j in range(i):
            r = A.relation(t[i], t[j])
            third = ({0, 1, 2} - {i, j}).pop()
            if r != ThreeC(t[third]):
                raise NotATriple(f"axes {t[i]!r}, {t[j]!r} do not close onto "
                                 f"{t[third]!r}")
    w = A.element({a: Q(32, 33) for a in t})
    a_vec = A.element({**w, e: w[e] - 1})
    checks = [
        A.product(a_vec, a_vec) == A.element({k: 2 * c for k, c in a_vec.items()}),
        A.pairing(a_vec, a_vec) == Q(21, 44),
        A.product(A.axis(e), a_vec) == {},
        A.pairing(A.axis(e), a_vec) == 0,
    ]
    norm = A.pairing(a_vec, a_vec)
    return VirasoroReport(vector=a_vec, norm=norm, central_charge=2 * norm,
                          is_conformal=all(checks))


def miyamoto_permutation(A: AxisAlgebra, e: Label) -> tuple[int, ...]:
    """Index images of the axis involution attached to e: fixes e and its
    TWO_B partners, swaps f and g in every 3C triple through e."""
    images = []
    for b in A.axes:
        r = A.relation(e, b)
        images.append(A._index[r.third] if isinstance(r, ThreeC) else A._index[b])
    return tuple(images)


def gram_positive_definite(A: AxisAlgebra) -> bool:
    """Exact LDL^T: true iff every pivot is positive."""
    g = A.gram()
    n = len(g)
    a = [row[:] for row in g]
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True
