"""Command-line surface: run constructions and emit JSON reports.

Subcommands construct root systems, lattices, Griess algebras, Miyamoto
groups, and twisted axis systems, check them against their expected
exact values, and emit a machine-readable report.  Reports are JSON
with a versioned schema; every rational number appears both as an
exact string ("16/11") and as a decimal approximation.  Identical
inputs produce byte-identical output: check order is fixed and timing
goes to stderr, never into the JSON.

Exit status: 0 when every check passes, 1 when any check fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as Q

from . import __version__
from .axes import (
    TWO_B,
    from_root_system,
    gram_positive_definite,
    miyamoto_permutation,
    virasoro,
)
from .cocycle import CocycleTable, check_sign_lemma
from .lattice import (
    UnsupportedName,
    ade_realization,
    discriminant_group,
    e8_lattice,
    index_in,
    is_RSSD,
    is_SSD,
    malpha_lattice,
    matrix_order,
    shell,
    t_involution,
    tensor,
    verify_identification,
)
from .linalg import dot, ldl_is_positive_definite, mat_mul, smith_invariants
from .permgrp import (
    contains_minus_one,
    enumerate_elements,
    miyamoto_group,
    transposition_profile,
    weyl_group,
)
from .rootsys import RootSystem, UnsupportedRank, build_root_system
from .triality import (
    abstract_twisted_group,
    find_delta,
    twisted_axes,
    twisted_axis_algebra,
    twisted_group,
)
from .weight2 import ising_vector, oracle_pairing, oracle_product

_COXETER = {"A": lambda r: r + 1, "D": lambda r: 2 * r - 2,
            "E": lambda r: {6: 12, 7: 18, 8: 30}[r]}


class UsageError(Exception):
    """Bad command-line usage; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# Report plumbing.
# ---------------------------------------------------------------------------

def _render(value):
    """JSON form of a check value: exact string plus decimal for numbers."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Q)):
        q = Q(value)
        return {"exact": f"{q.numerator}/{q.denominator}" if q.denominator != 1
                else str(q.numerator),
                "approx": float(q)}
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return str(value)


def check(name: str, expected, actual, ok: bool | None = None) -> dict:
    if ok is None:
        ok = expected == actual
    return {"name": name, "status": "pass" if ok else "fail",
            "expected": _render(expected), "actual": _render(actual)}


def skipped(name: str, reason: str) -> dict:
    return {"name": name, "status": "skipped", "expected": reason,
            "actual": None}


def make_report(command: str, parameters: dict, checks: list[dict],
                extra: dict | None = None) -> dict:
    report = {
        "schema": 1,
        "tool": "weyl-ising",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "checks": checks,
        "status": "fail" if any(c["status"] == "fail" for c in checks)
                  else "pass",
    }
    if extra:
        report.update(extra)
    return report


def emit(report: dict, out_path: str | None) -> int:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["status"] == "pass" else 1


def _vec(v) -> str:
    return "(" + ", ".join(str(Q(c)) for c in v) + ")"


def _build(kind: str, rank: int) -> RootSystem:
    try:
        return build_root_system(kind, rank)
    except (UnsupportedName, UnsupportedRank, ValueError) as err:
        raise UsageError(str(err))


# ---------------------------------------------------------------------------
# Subcommand check builders.
# ---------------------------------------------------------------------------

def roots_checks(R: RootSystem) -> list[dict]:
    h = _COXETER[R.kind](R.rank)
    m_values = sorted({R.m_alpha(a) for a in R.roots})
    return [
        check("root_count", h * R.rank, len(R.roots)),
        check("positive_root_count", h * R.rank // 2, len(R.positive_roots)),
        check("coxeter_number", h, R.coxeter_number()),
        check("m_alpha_uniform", [2 * (h - 2)], m_values),
    ]


def lattice_checks(R: RootSystem) -> list[dict]:
    alpha = R.simple_roots()[0]
    m = malpha_lattice(R, alpha)
    script = ade_realization(R)
    out = [
        check("identification", True, verify_identification(R.kind, R.rank)),
        check("block_discriminant", [2] * 8, list(discriminant_group(m))),
        check("block_even", True, m.is_even()),
        check("block_ssd", True, is_SSD(m)),
        check("block_norm4_count", 240, len(shell(m, 4))),
        check("realization_even", True, script.is_even()),
    ]
    if script.rank <= 24:
        out.append(check("realization_no_norm2", 0, len(shell(script, 2))))
        out.append(check("block_rssd", True, is_RSSD(m, script)))
    else:
        out.append(skipped("realization_no_norm2",
                           "shell enumeration capped at rank 24"))
        out.append(skipped("block_rssd",
                           "annihilator shell work capped at rank 24"))

    simple = R.simple_roots()
    adjacent = orthogonal = None
    for i in range(len(simple)):
        for j in range(i):
            s = R.inner(simple[i], simple[j])
            if s == -1 and adjacent is None:
                adjacent = (simple[j], simple[i])
            if s == 0 and orthogonal is None:
                orthogonal = (simple[j], simple[i])
    if adjacent:
        t1 = t_involution(malpha_lattice(R, adjacent[0]), script)
        t2 = t_involution(malpha_lattice(R, adjacent[1]), script)
        out.append(check("t_product_order_adjacent", 3,
                         matrix_order(mat_mul(t1, t2))))
    if orthogonal:
        t1 = t_involution(malpha_lattice(R, orthogonal[0]), script)
        t2 = t_involution(malpha_lattice(R, orthogonal[1]), script)
        out.append(check("t_product_order_orthogonal", 2,
                         matrix_order(mat_mul(t1, t2))))
    else:
        out.append(skipped("t_product_order_orthogonal",
                           "no orthogonal simple pair at this rank"))
    return out


def _oracle_sweep(R: RootSystem) -> tuple[int, int]:
    """Compare oracle products and pairings with the closed forms over
    all unordered pairs of distinct positive roots; returns
    (agreements, pairs)."""
    A = from_root_system(R)
    vectors = {a: ising_vector(malpha_lattice(R, a))
               for a in R.positive_roots}
    agree = total = 0
    for i, a in enumerate(R.positive_roots):
        for b in R.positive_roots[:i]:
            total += 1
            rel = A.relation(a, b)
            prod = oracle_product(vectors[a], vectors[b])
            pair = oracle_pairing(vectors[a], vectors[b])
            if rel == TWO_B:
                if not prod and pair == 0:
                    agree += 1
            else:
                want = (vectors[a] + vectors[b]
                        - vectors[rel.third]).scale(Q(1, 32))
                if prod == want and pair == Q(1, 256):
                    agree += 1
    return agree, total


def griess_checks(R: RootSystem, oracle: bool) -> list[dict]:
    h = _COXETER[R.kind](R.rank)
    rank = R.rank
    A = from_root_system(R)
    rep = virasoro(A)
    out = [
        check("dimension", h * rank // 2, len(A)),
        check("gram_positive_definite", True, gram_positive_definite(A)),
        check("central_charge", Q(8 * h * rank, h + 30), rep.central_charge),
        check("conformal_norm", Q(4 * h * rank, h + 30), rep.norm),
        check("is_conformal", True, rep.is_conformal),
    ]
    if oracle:
        agree, total = _oracle_sweep(R)
        out.append(check("oracle_agreement", f"{total}/{total} pairs",
                         f"{agree}/{total} pairs"))
    else:
        out.append(skipped("oracle_agreement", "run with --oracle"))
    return out


def group_checks(R: RootSystem) -> tuple[list[dict], dict]:
    h = _COXETER[R.kind](R.rank)
    A = from_root_system(R)
    G = miyamoto_group(A)
    W = weyl_group(R)
    minus_one = contains_minus_one(R)
    quotient = W.order // (2 if minus_one else 1)
    profile = transposition_profile(A)
    checks = [
        check("miyamoto_equals_weyl_quotient", quotient, G.order),
        check("transposition_orders", "subset of {1, 2, 3}",
              "{" + ", ".join(str(k) for k in sorted(profile)) + "}",
              ok=set(profile) <= {1, 2, 3}),
        check("order3_pair_count", (h * R.rank // 2) * (h - 2),
              profile.get(3, 0)),
    ]
    extra = {"weyl_order": W.order, "minus_one_in_weyl": minus_one,
             "miyamoto_order": G.order}
    return checks, extra


def triality_checks(n: int) -> list[dict]:
    if n < 3:
        raise UsageError("triality needs at least 3 blocks")
    report = twisted_group(n)
    k = n - 2 if n % 3 == 0 else n - 1
    rep = virasoro(twisted_axis_algebra(n))
    delta, K = find_delta()
    return [
        check("axis_count", 3 * n * (n - 1) // 2, len(twisted_axes(n))),
        check("group_order", 3 ** k * math.factorial(n), report.group.order),
        check("kernel_order", 3 ** k, report.kernel_order),
        check("pair_action_order", math.factorial(n),
              report.pair_action_order),
        check("shape", f"3^{k}:S_{n}", report.shape),
        check("abstract_order_agrees", report.group.order,
              abstract_twisted_group(n).order),
        check("central_charge", Q(8 * n * (n - 1), n + 9),
              rep.central_charge),
        check("delta_kernel_roots", 72, len(shell(K, 2))),
        check("delta_kernel_det", 9, K.det()),
        check("delta_kernel_index", 3, index_in(K, e8_lattice())),
    ]


def audit_checks(path: str) -> tuple[list[dict], dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read gram file: {err}")
    if not isinstance(payload, dict) or "gram" not in payload:
        raise UsageError('gram file must be a JSON object {"gram": [[...]]}')
    try:
        gram = [[Q(str(x)) for x in row] for row in payload["gram"]]
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise UsageError(f"gram entries must be rational numbers: {err}")

    n = len(gram)
    square = all(len(row) == n for row in gram)
    symmetric = square and all(gram[i][j] == gram[j][i]
                               for i in range(n) for j in range(n))
    out = [check("square_symmetric", True, symmetric)]
    details: dict = {"rank": n}
    if symmetric:
        pd = ldl_is_positive_definite(gram)
        out.append(check("positive_definite", True, pd))
        integral = all(c.denominator == 1 for row in gram for c in row)
        details["integral"] = integral
        if integral:
            details["even"] = all(gram[i][i] % 2 == 0 for i in range(n))
            if pd:
                ints = [[int(c) for c in row] for row in gram]
                details["discriminant"] = smith_invariants(ints)
    else:
        out.append(skipped("positive_definite", "gram is not symmetric"))
    return out, {"details": details}


# ---------------------------------------------------------------------------
# Acceptance criteria: the fixed check suite behind the report command.
# ---------------------------------------------------------------------------

def _criterion_1() -> list[dict]:
    """Oracle products and pairings equal the closed forms on all 15
    pairs of positive roots in the rank-3 chain system."""
    R = build_root_system("A", 3)
    A = from_root_system(R)
    vectors = {a: ising_vector(malpha_lattice(R, a))
               for a in R.positive_roots}
    out = []
    for i, a in enumerate(R.positive_roots):
        for b in R.positive_roots[:i]:
            rel = A.relation(a, b)
            prod = oracle_product(vectors[a], vectors[b])
            pair = oracle_pairing(vectors[a], vectors[b])
            if rel == TWO_B:
                ok = not prod and pair == 0
                kind = "2B: zero product, zero pairing"
            else:
                want = (vectors[a] + vectors[b]
                        - vectors[rel.third]).scale(Q(1, 32))
                ok = prod == want and pair == Q(1, 256)
                kind = "3C: (e+f-g)/32 product, 1/256 pairing"
            out.append(check(f"oracle {_vec(a)} | {_vec(b)}", kind,
                             kind if ok else "oracle differs", ok=ok))
    return out


def _criterion_2() -> list[dict]:
    """Ising normalization of the oracle axis vector."""
    R = build_root_system("A", 2)
    e = ising_vector(malpha_lattice(R, R.simple_roots()[0]))
    square = oracle_product(e, e)
    norm = oracle_pairing(e, e)
    norm_ok = norm == Q(1, 4)
    charge = 2 * norm.as_fraction() if norm.is_rational() else None
    return [
        check("e_product_e_is_2e", True, square == e + e),
        check("e_norm", Q(1, 4), Q(1, 4) if norm_ok else str(norm),
              ok=norm_ok),
        check("central_charge_half", Q(1, 2), charge),
    ]


_CHARGE_SYSTEMS = [("A", 2), ("A", 4), ("D", 4), ("E", 6), ("E", 7), ("E", 8)]


def _criterion_3() -> list[dict]:
    """Central charges and conformal norms from the Virasoro solve."""
    out = []
    for kind, rank in _CHARGE_SYSTEMS:
        R = build_root_system(kind, rank)
        h = _COXETER[kind](rank)
        rep = virasoro(from_root_system(R))
        out.append(check(f"central_charge {kind}{rank}",
                         Q(8 * h * rank, h + 30), rep.central_charge))
        out.append(check(f"conformal_norm {kind}{rank}",
                         Q(4 * h * rank, h + 30), rep.norm))
    return out


def _criterion_4() -> list[dict]:
    """Complementary Virasoro vector inside a 3C triple."""
    A = twisted_axis_algebra(2)
    e, f, g = (A.axis(a) for a in A.axes)
    a = A.element({A.axes[0]: Q(-1, 33), A.axes[1]: Q(32, 33),
                   A.axes[2]: Q(32, 33)})
    double = {k: 2 * c for k, c in a.items()}
    return [
        check("a_product_a_is_2a", True, A.product(a, a) == double),
        check("a_norm", Q(21, 44), A.pairing(a, a)),
        check("e_product_a_is_zero", True, A.product(e, a) == {}),
        check("e_pairing_a_is_zero", Q(0), A.pairing(e, a)),
    ]


_GROUP_ORDERS = [("A", 3, 24), ("D", 4, 96), ("E", 6, 51840),
                 ("E", 7, 1451520), ("E", 8, 348364800)]


def _criterion_5() -> list[dict]:
    """Miyamoto group orders equal Weyl quotients, both sides computed
    independently."""
    out = []
    for kind, rank, expected in _GROUP_ORDERS:
        R = build_root_system(kind, rank)
        G = miyamoto_group(from_root_system(R))
        W = weyl_group(R)
        quotient = W.order // (2 if contains_minus_one(R) else 1)
        out.append(check(f"miyamoto_order {kind}{rank}", expected, G.order))
        out.append(check(f"weyl_quotient {kind}{rank}", expected, quotient))
    return out


_PROFILE_SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4),
                    ("D", 5), ("E", 6), ("E", 7), ("E", 8)]


def _criterion_6() -> list[dict]:
    """Transposition profiles and order-3 pair counts."""
    out = []
    for kind, rank in _PROFILE_SYSTEMS:
        R = build_root_system(kind, rank)
        h = _COXETER[kind](rank)
        profile = transposition_profile(from_root_system(R))
        out.append(check(f"orders_in_123 {kind}{rank}", True,
                         set(profile) <= {1, 2, 3}))
        out.append(check(f"order3_count {kind}{rank}",
                         (h * rank // 2) * (h - 2), profile.get(3, 0)))
    return out


def _criterion_7() -> list[dict]:
    """Lattice layer: discriminants, tensor unimodularity,
    identifications, involution orders, SSD/RSSD, empty norm-2 shell."""
    out = []
    a2 = build_root_system("A", 2)
    a3 = build_root_system("A", 3)
    m = malpha_lattice(a2, a2.simple_roots()[0])
    out.append(check("block_discriminant_2^8", [2] * 8,
                     list(discriminant_group(m))))
    e8 = e8_lattice()
    t = tensor(e8, e8)
    out.append(check("e8_tensor_e8_even", True, t.is_even()))
    out.append(check("e8_tensor_e8_unimodular", 1, t.det()))
    for kind, rank in [("A", 2), ("A", 3), ("D", 4),
                       ("E", 6), ("E", 7), ("E", 8)]:
        out.append(check(f"identification {kind}{rank}", True,
                         verify_identification(kind, rank)))
    script3 = ade_realization(a3)
    b = a3.simple_roots()
    pairs = [(b[0], b[1], 3), (b[0], b[2], 2)]
    for x, y, order in pairs:
        tx = t_involution(malpha_lattice(a3, x), script3)
        ty = t_involution(malpha_lattice(a3, y), script3)
        label = "adjacent" if order == 3 else "orthogonal"
        out.append(check(f"t_order_{label}", order,
                         matrix_order(mat_mul(tx, ty))))
    out.append(check("block_ssd", True, is_SSD(m)))
    script2 = ade_realization(a2)
    out.append(check("block_rssd_A2", True, is_RSSD(m, script2)))
    m3 = malpha_lattice(a3, b[0])
    out.append(check("block_rssd_A3", True, is_RSSD(m3, script3)))
    out.append(check("tensor_no_norm2", 0, len(shell(script2, 2))))
    return out


def _criterion_8() -> list[dict]:
    """Cocycle layer: sign lemma, vanishing on blocks, commutator."""
    out = []
    for kind, rank in [("A", 2), ("A", 3), ("D", 4), ("E", 8)]:
        out.append(check(f"sign_lemma {kind}{rank}", True,
                         check_sign_lemma(build_root_system(kind, rank))))
    for kind, rank in [("A", 2), ("D", 4)]:
        R = build_root_system(kind, rank)
        table = CocycleTable(R.ambient_dim)
        values = set()
        for alpha in R.simple_roots()[:2]:
            mb = malpha_lattice(R, alpha).basis
            values |= {table.eps0(u, v) for u in mb for v in mb}
        out.append(check(f"eps0_zero_on_blocks {kind}{rank}", [0],
                         sorted(values)))
    table = CocycleTable(1)
    rng = random.Random(17)
    simple = build_root_system("E", 8).simple_roots()

    def lattice_vector():
        coeffs = [rng.randrange(-2, 3) for _ in simple]
        return tuple(sum(c * s[j] for c, s in zip(coeffs, simple))
                     for j in range(8))

    holds = True
    for _ in range(100):
        a = lattice_vector()
        bvec = lattice_vector()
        if (table.eps0(a, bvec) - table.eps0(bvec, a)) % 8 \
                != (4 * dot(a, bvec)) % 8:
            holds = False
            break
    out.append(check("commutator_identity", True, holds))
    return out


def _criterion_9(max_n: int = 6) -> list[dict]:
    """Triality: kernel sublattice, twisted group orders and kernels,
    abstract agreement, twisted central charges."""
    out = []
    delta, K = find_delta()
    out.append(check("delta_kernel_roots", 72, len(shell(K, 2))))
    out.append(check("delta_kernel_det", 9, K.det()))
    out.append(check("delta_kernel_index", 3, index_in(K, e8_lattice())))
    for n in range(3, max_n + 1):
        k = n - 2 if n % 3 == 0 else n - 1
        report = twisted_group(n)
        out.append(check(f"twisted_order n={n}",
                         3 ** k * math.factorial(n), report.group.order))
        out.append(check(f"twisted_kernel n={n}", 3 ** k,
                         report.kernel_order))
        out.append(check(f"abstract_agrees n={n}", report.group.order,
                         abstract_twisted_group(n).order))
    for n in range(2, max(7, max_n) + 1):
        rep = virasoro(twisted_axis_algebra(n))
        out.append(check(f"twisted_charge n={n}",
                         Q(8 * n * (n - 1), n + 9), rep.central_charge))
    return out


def _criterion_10() -> list[dict]:
    """Property suites: form associativity, automorphism property,
    positive definiteness, brute-force group orders."""
    out = []
    for kind, rank in [("A", 2), ("A", 3), ("D", 4)]:
        A = from_root_system(build_root_system(kind, rank))
        units = [A.axis(a) for a in A.axes]
        ok = all(A.pairing(A.product(u, v), w) == A.pairing(u, A.product(v, w))
                 for u in units for v in units for w in units)
        out.append(check(f"associativity_exhaustive {kind}{rank}", True, ok))
    E = from_root_system(build_root_system("E", 8))
    rng = random.Random(5)
    units = [E.axis(a) for a in E.axes]
    ok = True
    for _ in range(1000):
        u, v, w = (rng.choice(units) for _ in range(3))
        if E.pairing(E.product(u, v), w) != E.pairing(u, E.product(v, w)):
            ok = False
            break
    out.append(check("associativity_random_E8 (1000 triples)", True, ok))

    for kind, rank in [("A", 3), ("D", 4)]:
        A = from_root_system(build_root_system(kind, rank))
        ok = True
        for e in A.axes:
            perm = miyamoto_permutation(A, e)
            image = {a: A.axes[perm[i]] for i, a in enumerate(A.axes)}
            for a in A.axes:
                for b in A.axes:
                    lhs = {image[k]: c
                           for k, c in A.product(A.axis(a), A.axis(b)).items()}
                    rhs = A.product(A.axis(image[a]), A.axis(image[b]))
                    if lhs != rhs:
                        ok = False
        out.append(check(f"miyamoto_automorphism {kind}{rank}", True, ok))

    for kind, rank in [("A", 2), ("A", 4), ("D", 4), ("E", 6), ("E", 8)]:
        A = from_root_system(build_root_system(kind, rank))
        out.append(check(f"gram_positive_definite {kind}{rank}", True,
                         gram_positive_definite(A)))

    brute_cases = []
    w_a3 = weyl_group(build_root_system("A", 3))
    brute_cases.append(("weyl A3", w_a3))
    m_d4 = miyamoto_group(from_root_system(build_root_system("D", 4)))
    brute_cases.append(("miyamoto D4", m_d4))
    t4 = twisted_group(4).group
    brute_cases.append(("twisted n=4", t4))
    t5 = twisted_group(5).group
    brute_cases.append(("twisted n=5", t5))
    for label, G in brute_cases:
        brute = len(enumerate_elements(G.generators))
        out.append(check(f"bsgs_vs_bruteforce {label}", brute, G.order))
    return out


ACCEPTANCE = [
    ("oracle equivalence", _criterion_1),
    ("ising normalization", _criterion_2),
    ("central charges", _criterion_3),
    ("3C sub-Virasoro", _criterion_4),
    ("group orders", _criterion_5),
    ("transposition profile", _criterion_6),
    ("lattice layer", _criterion_7),
    ("cocycle layer", _criterion_8),
    ("triality", _criterion_9),
    ("property suites", _criterion_10),
]


def _thread_count() -> int:
    raw = os.environ.get("WEYL_ISING_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise UsageError(f"WEYL_ISING_THREADS must be an integer, got {raw!r}")
    if count < 1:
        raise UsageError("WEYL_ISING_THREADS must be at least 1")
    return count


def report_checks(max_n: int) -> list[dict]:
    if max_n < 6:
        raise UsageError("--max-n below 6 would drop required checks")
    workers = _thread_count()
    jobs = []
    for index, (title, fn) in enumerate(ACCEPTANCE, start=1):
        if fn is _criterion_9:
            jobs.append((index, title, lambda: _criterion_9(max_n)))
        else:
            jobs.append((index, title, fn))
    out = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [(index, title, pool.submit(fn))
                   for index, title, fn in jobs]
        for index, title, future in futures:
            checks = future.result()
            for c in checks:
                c["name"] = f"{index:02d} {title}: {c['name']}"
            out.extend(checks)
            print(f"[weyl-ising] criterion {index} ({title}): "
                  f"{sum(1 for c in checks if c['status'] == 'pass')}"
                  f"/{len(checks)} pass", file=sys.stderr)
    return out


# ---------------------------------------------------------------------------
# Argument parsing and dispatch.
# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weyl-ising",
        description="Exact checks for root-indexed axis algebras, their "
                    "Miyamoto groups, and twisted variants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("-o", "--output", metavar="PATH",
                       help="write the JSON report to PATH instead of stdout")

    p = sub.add_parser("roots", help="root system counts and Coxeter data")
    p.add_argument("kind", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    add_out(p)

    p = sub.add_parser("lattice", help="block lattice and realization checks")
    p.add_argument("kind", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("--shell", type=int, metavar="NORM",
                   help="include the realization shell of this norm")
    add_out(p)

    p = sub.add_parser("griess", help="axis algebra and Virasoro checks")
    p.add_argument("kind", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check closed forms against the lattice "
                        "oracle (kind A, rank <= 4 only)")
    add_out(p)

    p = sub.add_parser("group", help="Miyamoto group versus Weyl quotient")
    p.add_argument("kind", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    add_out(p)

    p = sub.add_parser("triality", help="twisted axis groups and charges")
    p.add_argument("n", type=int)
    add_out(p)

    p = sub.add_parser("audit", help="audit a Gram matrix from a JSON file")
    p.add_argument("gram_file", metavar="GRAM_JSON")
    add_out(p)

    p = sub.add_parser("report", help="run the full acceptance suite")
    p.add_argument("--max-n", type=int, default=6, dest="max_n",
                   help="largest twisted block count (default 6)")
    add_out(p)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "roots":
            R = _build(args.kind, args.rank)
            report = make_report("roots", {"kind": args.kind,
                                           "rank": args.rank},
                                 roots_checks(R))
        elif args.command == "lattice":
            R = _build(args.kind, args.rank)
            extra = None
            if args.shell is not None:
                script = ade_realization(R)
                if script.rank > 24:
                    raise UsageError("shell enumeration is capped at rank 24")
                vectors = shell(script, args.shell)
                extra = {"shells": {str(args.shell): [_vec(v)
                                                      for v in vectors]}}
            report = make_report("lattice",
                                 {"kind": args.kind, "rank": args.rank,
                                  "shell": args.shell},
                                 lattice_checks(R), extra)
        elif args.command == "griess":
            if args.oracle and (args.kind != "A" or args.rank > 4):
                raise UsageError("--oracle is limited to kind A with "
                                 "rank at most 4")
            R = _build(args.kind, args.rank)
            report = make_report("griess",
                                 {"kind": args.kind, "rank": args.rank,
                                  "oracle": args.oracle},
                                 griess_checks(R, args.oracle))
        elif args.command == "group":
            R = _build(args.kind, args.rank)
            checks, extra = group_checks(R)
            report = make_report("group", {"kind": args.kind,
                                           "rank": args.rank},
                                 checks, extra)
        elif args.command == "triality":
            checks = triality_checks(args.n)
            delta, _ = find_delta()
            report = make_report("triality", {"n": args.n}, checks,
                                 {"delta": _vec(delta)})
        elif args.command == "audit":
            checks, extra = audit_checks(args.gram_file)
            report = make_report("audit", {"gram_file": args.gram_file},
                                 checks, extra)
        elif args.command == "report":
            checks = report_checks(args.max_n)
            report = make_report("report", {"max_n": args.max_n}, checks)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as err:
        print(f"weyl-ising: {err}", file=sys.stderr)
        return 2
    code = emit(report, args.output)
    elapsed = time.perf_counter() - start
    print(f"[weyl-ising] {args.command}: {elapsed:.1f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
