"""Permutation groups with exact order via base and strong generating set.

Permutations are image tuples on {0..N-1}.  The group engine runs a
deterministic incremental Schreier-Sims: base points are chosen as the
smallest moved points, Schreier generators are processed in BFS orbit
order, and every non-trivial sift residue becomes a strong generator.
Orders in the 10^8..10^9 range on a few hundred points are routine.
"""

from __future__ import annotations

from collections import Counter
from math import gcd, prod
from typing import Iterable, Sequence

from .axes import AxisAlgebra, miyamoto_permutation
from .rootsys import RootSystem


def _compose(p: tuple, q: tuple) -> tuple:
    """Apply q first, then p."""
    return tuple(map(p.__getitem__, q))


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class Permutation:
    """Bijection of {0..degree-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        t = tuple(images)
        if sorted(t) != list(range(len(t))):
            raise ValueError("images are not a bijection of 0..n-1")
        self.images = t

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(p * q)(x) = p(q(x)): the right factor acts first."""
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse(self.images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            out.append(length)
        return out

    def order(self) -> int:
        result = 1
        for length in self.cycle_lengths():
            result = result * length // gcd(result, length)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


class PermGroup:
    """Group generated by permutations, with a verified BSGS."""

    def __init__(self, generators: Iterable, degree: int | None = None):
        gens = []
        for g in generators:
            t = g.images if isinstance(g, Permutation) else tuple(g)
            gens.append(Permutation(t).images)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generating set")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators act on different sets")
        self.degree = degree
        self.generators = tuple(Permutation(g) for g in gens)
        self._build([g for g in gens if any(v != i for i, v in enumerate(g))])

    # -- construction ------------------------------------------------------

    def _build(self, gens: list) -> None:
        n = self.degree
        ident = tuple(range(n))
        base: list[int] = []
        strong: list[tuple] = []
        strong_set: set[tuple] = set()
        # persistent per-level state; coset representatives are only ever
        # extended, never replaced, so a Schreier pair once verified stays
        # verified as the deeper stabilizer groups grow
        trans: list[dict[int, tuple]] = []
        inv: list[dict[int, tuple]] = []
        orbit: list[list[int]] = []
        checked: list[set[tuple[int, int]]] = []

        def add_base_point(b: int) -> None:
            base.append(b)
            trans.append({b: ident})
            inv.append({b: ident})
            orbit.append([b])
            checked.append(set())

        def level_gen_indices(i: int) -> list[int]:
            prefix = base[:i]
            return [k for k, g in enumerate(strong)
                    if all(g[p] == p for p in prefix)]

        def extend_level(i: int, gen_idx: list[int]) -> None:
            queue = list(orbit[i])
            while queue:
                p = queue.pop(0)
                rep = trans[i][p]
                for k in gen_idx:
                    s = strong[k]
                    img = s[p]
                    if img not in trans[i]:
                        new = _compose(s, rep)
                        trans[i][img] = new
                        inv[i][img] = _inverse(new)
                        orbit[i].append(img)
                        queue.append(img)

        def sift(g: tuple, start: int) -> tuple[tuple, int]:
            for i in range(start, len(base)):
                img = g[base[i]]
                if img not in trans[i]:
                    return g, i
                g = _compose(inv[i][img], g)
            return g, len(base)

        def add_strong(h: tuple, j: int) -> None:
            if j == len(base):
                add_base_point(next(x for x in range(n) if h[x] != x))
            if h not in strong_set:
                strong_set.add(h)
                strong.append(h)

        def close(start: int) -> None:
            i = start
            while i >= 0:
                gen_idx = level_gen_indices(i)
                extend_level(i, gen_idx)
                descend = None
                for p in orbit[i]:
                    rep_p = trans[i][p]
                    for k in gen_idx:
                        if (p, k) in checked[i]:
                            continue
                        checked[i].add((p, k))
                        s = strong[k]
                        sg = _compose(inv[i][s[p]], _compose(s, rep_p))
                        if sg == ident:
                            continue
                        h, j = sift(sg, i + 1)
                        if h != ident:
                            add_strong(h, j)
                            descend = j
                            break
                    if descend is not None:
                        break
                if descend is not None:
                    i = descend
                else:
                    i -= 1

        for g in gens:
            h, j = sift(g, 0)
            if h == ident:
                continue
            add_strong(h, j)
            close(j)

        self.base = tuple(base)
        self._levels = list(zip(base, trans, inv))
        self.strong_generators = tuple(Permutation(g) for g in strong)
        self.order = prod(len(t) for t in trans) if base else 1

    # -- queries -----------------------------------------------------------

    def _sift_final(self, g: tuple) -> tuple:
        for b, trans, inv in self._levels:
            img = g[b]
            if img not in trans:
                return g
            g = _compose(inv[img], g)
        return g

    def __contains__(self, perm) -> bool:
        t = perm.images if isinstance(perm, Permutation) else tuple(perm)
        if len(t) != self.degree:
            return False
        ident = tuple(range(self.degree))
        return self._sift_final(t) == ident

    def orbit_lengths(self) -> tuple[int, ...]:
        return tuple(len(t) for _, t, _ in self._levels)

    def __repr__(self) -> str:
        return (f"PermGroup(degree={self.degree}, order={self.order}, "
                f"base={list(self.base)})")


def schreier_sims(generators: Iterable, degree: int | None = None) -> PermGroup:
    """Deterministic BSGS construction for the given generators."""
    return PermGroup(generators, degree)


def enumerate_elements(generators: Iterable, cap: int = 10_000) -> set:
    """Brute-force closure of the generating set; raises past the cap.

    Independent oracle for PermGroup.order on small groups.
    """
    gens = [g.images if isinstance(g, Permutation) else tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    queue = [ident]
    while queue:
        current = queue.pop()
        for g in gens:
            nxt = _compose(g, current)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ValueError(f"closure exceeds cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return seen


_WEYL_CACHE: dict[tuple[str, int], PermGroup] = {}


def weyl_group(R: RootSystem) -> PermGroup:
    """The reflection group of R acting on its full root set."""
    key = (R.kind, R.rank)
    if key not in _WEYL_CACHE:
        index = {r: i for i, r in enumerate(R.roots)}
        gens = []
        for alpha in R.positive_roots:
            images = [index[R.reflect(alpha, r)] for r in R.roots]
            gens.append(tuple(images))
        _WEYL_CACHE[key] = PermGroup(gens, len(R.roots))
    return _WEYL_CACHE[key]


def contains_minus_one(R: RootSystem) -> bool:
    """Whether negation of all roots lies in the reflection group."""
    index = {r: i for i, r in enumerate(R.roots)}
    negation = tuple(index[tuple(-c for c in r)] for r in R.roots)
    return negation in weyl_group(R)


def miyamoto_group(A: AxisAlgebra) -> PermGroup:
    """Group generated by the axis involutions of every axis."""
    return PermGroup([miyamoto_permutation(A, e) for e in A.axes], len(A))


def transposition_profile(A: AxisAlgebra) -> Counter:
    """Orders of products of two distinct axis involutions."""
    perms = [Permutation(miyamoto_permutation(A, e)) for e in A.axes]
    profile: Counter = Counter()
    for i, p in enumerate(perms):
        for q in perms[:i]:
            profile[(p * q).order()] += 1
    return profile
