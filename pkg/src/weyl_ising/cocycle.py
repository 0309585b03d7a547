"""Bilinear sign bookkeeping for half-lattice vectors.

A fixed ordered basis a_1..a_8 of the E8 coordinate model (its simple
system, in ascending coordinate order) is halved to the basis
x_i = a_i/2.  On basis pairs the residue reads

    4<x_i, x_j> mod 8   below the diagonal (i > j),
    2<x_i, x_i> = 1     on the diagonal,
    0                   above it,

and extends bilinearly, blocks summed coordinatewise on the n-block
ambient space.  Exponentiating the residue into the 8th roots of unity
gives the multiplier carried by the weight-2 products.  The residues
depend on the basis order; every downstream claim is order independent.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

from .cyclotomic import Cyc8
from .lattice import e8_model
from .linalg import dot, mat_vec, matrix_inverse
from .rootsys import RootSystem


class NotInHalfLattice(ValueError):
    """Vector has no integer coordinates over the halved basis."""


class CocycleTable:
    """Residue table on n blocks of halved E8 basis vectors.

    Immutable after construction; evaluation is pure.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one block")
        self.n = n
        simple = e8_model().simple_roots()
        self.x_basis = tuple(tuple(Q(c, 2) for c in a) for a in simple)
        cols = [[self.x_basis[k][j] for k in range(8)] for j in range(8)]
        self._xinv = matrix_inverse(cols)
        self._table = [[0] * 8 for _ in range(8)]
        for k in range(8):
            self._table[k][k] = 1
            for l in range(k):
                self._table[k][l] = int(4 * dot(self.x_basis[k],
                                                self.x_basis[l])) % 8
        self._coord_memo: dict[tuple, list[list[int]]] = {}

    def block_coordinates(self, v: Sequence) -> list[list[int]]:
        """Integer coordinates of v over the x-basis, one list per block."""
        key = tuple(v)
        hit = self._coord_memo.get(key)
        if hit is not None:
            return hit
        if len(v) != 8 * self.n:
            raise NotInHalfLattice(
                f"vector of length {len(v)} on {self.n} blocks")
        out = []
        for t in range(self.n):
            block = [Q(c) for c in v[8 * t: 8 * t + 8]]
            coords = mat_vec(self._xinv, block)
            if any(c.denominator != 1 for c in coords):
                raise NotInHalfLattice(f"block {t} of {v} is not half-integral")
            out.append([int(c) for c in coords])
        self._coord_memo[key] = out
        return out

    def eps0(self, a: Sequence, b: Sequence) -> int:
        """Residue mod 8 of the pair (a, b)."""
        ca = self.block_coordinates(a)
        cb = self.block_coordinates(b)
        total = 0
        for t in range(self.n):
            at, bt = ca[t], cb[t]
            for k in range(8):
                x = at[k]
                if not x:
                    continue
                row = self._table[k]
                for l in range(8):
                    y = bt[l]
                    if y:
                        total += x * y * row[l]
        return total % 8

    def eps(self, a: Sequence, b: Sequence) -> Cyc8:
        """The 8th root of unity attached to the pair (a, b)."""
        return Cyc8.zeta_pow(self.eps0(a, b))


def check_sign_lemma(R: RootSystem) -> bool:
    """True when eps(alpha (x) gamma, beta (x) gamma) == -1 for every
    ordered pair of roots of R with <alpha, beta> = +-1 and every root
    gamma of the E8 model; vacuously true when no pair qualifies.

    With a common gamma the bilinear residue factors exactly as
    <alpha, beta> * eps0(gamma, gamma), so the triple enumeration
    reduces to the 240 single-block residues (all must be 4 mod 8,
    and -4 = 4 mod 8 covers both signs) plus the pair qualification.
    """
    table = CocycleTable(1)
    gammas = e8_model().roots
    residues = {table.eps0(g, g) for g in gammas}
    qualifying = any(
        dot(a, b) in (1, -1) for a in R.roots for b in R.roots)
    if not qualifying:
        return True
    return residues == {4}
