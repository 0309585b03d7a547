"""Brute-force weight-2 algebra of a rootless even lattice model.

Elements combine Heisenberg quadratics (a symmetric matrix S standing
for sum_ij S_ij b_i(-1)b_j(-1) over the ambient coordinate basis) with
symmetric exponentials e^x + e^(-x) labelled by norm-4 lattice vectors
in canonical sign.  The degree-1 product and the invariant pairing are
evaluated from first principles:

    quad x quad   ->  2(ST + TS)
    quad x exp    ->  (x^T S x) (e^x + e^(-x))
    exp  x exp    ->  eps(x, y) (e^(x+-y) + e^(-(x+-y)))  if <x,y> = -+2,
                      x(-1)^2 with unit sign factor        if <x,y> = +-4,
                      rejected (a norm-2 vector appears)    if <x,y> = +-3,
                      0                                     otherwise
    <quad, quad>  ->  2 tr(ST)
    <exp, exp>    ->  2 on equal labels, else 0

with all scalars carried in the 8th cyclotomic field so that any sign
convention mistake surfaces as a non-real coefficient instead of a
silent flip.  The ambient dimension must be a multiple of 8 so the
block residue table applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Sequence

from .cocycle import CocycleTable
from .cyclotomic import Cyc8
from .lattice import Lattice, shell
from .linalg import dot, matrix_inverse

Vector = tuple[Q, ...]


class WrongShellSize(ValueError):
    """The lattice does not carry the expected 240 norm-4 vectors."""


class NonRealCocycle(ValueError):
    """A surviving product term picked up a sign outside {+1, -1}."""


class RootCreated(ValueError):
    """A product produced a norm-2 lattice vector (the lattice is not
    rootless where it needs to be)."""


_TABLES: dict[int, CocycleTable] = {}


def _table_for(dim: int) -> CocycleTable:
    if dim % 8 != 0 or dim == 0:
        raise ValueError(f"ambient dimension {dim} is not a multiple of 8")
    n = dim // 8
    if n not in _TABLES:
        _TABLES[n] = CocycleTable(n)
    return _TABLES[n]


def canonical_label(x: Sequence) -> Vector:
    """The +-x representative whose first nonzero coordinate is positive."""
    vec = tuple(Q(c) for c in x)
    for c in vec:
        if c > 0:
            return vec
        if c < 0:
            return tuple(-d for d in vec)
    raise ValueError("zero vector cannot label an exponential")


def _real_unit(value: Cyc8, context: str) -> Q:
    exponent = value.unit_exponent()
    if exponent == 0:
        return Q(1)
    if exponent == 4:
        return Q(-1)
    raise NonRealCocycle(f"{context} produced the non-real unit {value!r}")


@dataclass
class Weight2Element:
    """Sparse weight-2 element over a fixed ambient basis."""

    dim: int
    quad: dict[tuple[int, int], Cyc8] = field(default_factory=dict)
    exps: dict[Vector, Cyc8] = field(default_factory=dict)

    def __post_init__(self):
        self.quad = {k: Cyc8.of(v) for k, v in self.quad.items() if Cyc8.of(v)}
        for (i, j), v in list(self.quad.items()):
            if (j, i) not in self.quad or self.quad[(j, i)] != v:
                raise ValueError("quadratic part must be symmetric")
        clean = {}
        for x, c in self.exps.items():
            c = Cyc8.of(c)
            if not c:
                continue
            label = canonical_label(x)
            if dot(label, label) != 4:
                raise ValueError(f"exponential label {x} does not have norm 4")
            if len(label) != self.dim:
                raise ValueError("label length does not match ambient dimension")
            clean[label] = clean.get(label, Cyc8.of(0)) + c
        self.exps = {x: c for x, c in clean.items() if c}

    @staticmethod
    def zero(dim: int) -> "Weight2Element":
        return Weight2Element(dim, {}, {})

    def __add__(self, other: "Weight2Element") -> "Weight2Element":
        if self.dim != other.dim:
            raise ValueError("ambient dimensions differ")
        quad = dict(self.quad)
        for k, v in other.quad.items():
            quad[k] = quad.get(k, Cyc8.of(0)) + v
        exps = dict(self.exps)
        for x, c in other.exps.items():
            exps[x] = exps.get(x, Cyc8.of(0)) + c
        return Weight2Element(self.dim, quad, exps)

    def __neg__(self) -> "Weight2Element":
        return self.scale(-1)

    def __sub__(self, other: "Weight2Element") -> "Weight2Element":
        return self + other.scale(-1)

    def scale(self, c) -> "Weight2Element":
        c = Cyc8.of(c)
        return Weight2Element(
            self.dim,
            {k: c * v for k, v in self.quad.items()},
            {x: c * v for x, v in self.exps.items()},
        )

    def __rmul__(self, c) -> "Weight2Element":
        return self.scale(c)

    def __bool__(self) -> bool:
        return bool(self.quad) or bool(self.exps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight2Element):
            return NotImplemented
        return (self.dim == other.dim and self.quad == other.quad
                and self.exps == other.exps)

    def is_real_rational(self) -> bool:
        return all(v.is_rational() for v in self.quad.values()) and all(
            v.is_rational() for v in self.exps.values())


def quad_from_matrix(dim: int, matrix: Sequence[Sequence]) -> Weight2Element:
    quad = {}
    for i in range(dim):
        for j in range(dim):
            v = Cyc8.of(matrix[i][j])
            if v:
                quad[(i, j)] = v
    return Weight2Element(dim, quad, {})


def _projection_matrix(M: Lattice) -> list[list[Q]]:
    ginv = matrix_inverse(M.gram)
    d = M.ambient_dim
    p = [[Q(0)] * d for _ in range(d)]
    for a in range(M.rank):
        for b in range(M.rank):
            g = ginv[a][b]
            if not g:
                continue
            va, vb = M.basis[a], M.basis[b]
            for i in range(d):
                if va[i]:
                    gi = g * va[i]
                    for j in range(d):
                        if vb[j]:
                            p[i][j] += gi * vb[j]
    return p


def virasoro_quadratic(M: Lattice) -> Weight2Element:
    """The quadratic (1/2) sum h_i(-1)^2 over an orthonormal frame of
    the rational span of M, written on the ambient basis (matrix P/2
    with P the orthogonal projection onto the span)."""
    p = _projection_matrix(M)
    half = [[x / 2 for x in row] for row in p]
    return quad_from_matrix(M.ambient_dim, half)


def ising_vector(M: Lattice) -> Weight2Element:
    """(1/16) of the span quadratic plus (1/32) of every norm-4
    symmetric exponential of M; requires the 240-vector shell."""
    sh = shell(M, 4)
    if len(sh) != 240:
        raise WrongShellSize(f"norm-4 shell has {len(sh)} vectors, expected 240")
    w = virasoro_quadratic(M).scale(Q(1, 16))
    labels = {canonical_label(x) for x in sh}
    exps = {x: Cyc8.of(Q(1, 32)) for x in labels}
    return w + Weight2Element(M.ambient_dim, {}, exps)


def _quad_rows(u: Weight2Element) -> dict[int, dict[int, Cyc8]]:
    rows: dict[int, dict[int, Cyc8]] = {}
    for (i, j), v in u.quad.items():
        rows.setdefault(i, {})[j] = v
    return rows


def oracle_product(u: Weight2Element, v: Weight2Element) -> Weight2Element:
    """Bilinear degree-1 product of two weight-2 elements."""
    if u.dim != v.dim:
        raise ValueError("ambient dimensions differ")
    dim = u.dim
    table = _table_for(dim)
    quad: dict[tuple[int, int], Cyc8] = {}
    exps: dict[Vector, Cyc8] = {}

    def add_quad(i: int, j: int, val: Cyc8) -> None:
        if val:
            quad[(i, j)] = quad.get((i, j), Cyc8.of(0)) + val

    def add_exp(x: Vector, val: Cyc8) -> None:
        if val:
            exps[x] = exps.get(x, Cyc8.of(0)) + val

    # quadratic x quadratic: 2(ST + TS)
    if u.quad and v.quad:
        su, sv = _quad_rows(u), _quad_rows(v)
        for i, row in su.items():
            for k, a in row.items():
                match = sv.get(k)
                if not match:
                    continue
                for j, b in match.items():
                    ab = 2 * (a * b)
                    add_quad(i, j, ab)
                    add_quad(j, i, ab)

    # quadratic x exponential, both orders
    for s_part, e_part in ((u, v), (v, u)):
        if not (s_part.quad and e_part.exps):
            continue
        for x, c in e_part.exps.items():
            acc = Cyc8.of(0)
            for (i, j), a in s_part.quad.items():
                if x[i] and x[j]:
                    acc = acc + (x[i] * x[j]) * a
            add_exp(x, acc * c)

    # exponential x exponential, all ordered pairs
    for x, cx in u.exps.items():
        for y, cy in v.exps.items():
            s = dot(x, y)
            if s in (4, -4):
                unit = _real_unit(table.eps(x, tuple(-c for c in x)),
                                  f"pair ({x}, -same)")
                c = (cx * cy) * unit
                for i in range(dim):
                    if not x[i]:
                        continue
                    for j in range(dim):
                        if x[j]:
                            add_quad(i, j, (x[i] * x[j]) * c)
            elif s in (2, -2):
                z = tuple(a - b for a, b in zip(x, y)) if s == 2 else \
                    tuple(a + b for a, b in zip(x, y))
                sign = _real_unit(table.eps(x, y), f"pair ({x}, {y})")
                add_exp(canonical_label(z), (sign * cx) * cy)
            elif s in (3, -3):
                raise RootCreated(
                    f"labels {x} and {y} with product {s} create a norm-2 vector")

    return Weight2Element(dim, quad, exps)


def oracle_pairing(u: Weight2Element, v: Weight2Element) -> Cyc8:
    """Invariant pairing: 2 tr(ST) on quadratics, 2 per shared
    exponential label, no cross terms."""
    if u.dim != v.dim:
        raise ValueError("ambient dimensions differ")
    total = Cyc8.of(0)
    sv = _quad_rows(v)
    for (i, j), a in u.quad.items():
        row = sv.get(j)
        if row:
            b = row.get(i)
            if b:
                total = total + 2 * (a * b)
    for x, c in u.exps.items():
        d = v.exps.get(x)
        if d:
            total = total + 2 * (c * d)
    return total
