"""
Building ADE root systems
=========================

Every other capability in the package starts from a root system: the
classical series A_n and D_n plus the exceptional E6, E7, E8.  Roots are
stored as exact rational vectors, so counts and inner products below are
integer facts, not floating-point approximations.
"""

from weyl_ising import build_root_system

# A root system is requested by family letter and rank.
for kind, rank in [("A", 2), ("A", 3), ("D", 4), ("E", 6), ("E", 7), ("E", 8)]:
    R = build_root_system(kind, rank)
    h = R.coxeter_number()
    # Root count equals (Coxeter number) x (rank) in every ADE type.
    assert len(R.roots) == h * rank
    print(
        f"{kind}{rank}: {len(R.roots)} roots, {len(R.positive_roots)} positive, "
        f"Coxeter number {h}, ambient dimension {R.ambient_dim}"
    )

# The simple roots of A3 form a path: consecutive ones meet at inner
# product -1, non-consecutive ones are orthogonal.
R = build_root_system("A", 3)
simple = R.simple_roots()
for i in range(len(simple)):
    for j in range(i + 1, len(simple)):
        inner = R.inner(simple[i], simple[j])
        assert inner in (-1, 0)
print("A3 simple roots pair at inner product -1 or 0 (checked all pairs)")

# ADE systems are simply laced: every root has norm 2, and each root
# meets exactly m_alpha = 2(h - 2) positive roots at inner product +-1.
norms = {R.inner(alpha, alpha) for alpha in R.roots}
assert norms == {2}
h = R.coxeter_number()
for alpha in R.positive_roots:
    assert R.m_alpha(alpha) == 2 * (h - 2)
print(f"A3 is simply laced; every root has m_alpha = {2 * (h - 2)}")
