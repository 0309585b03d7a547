"""
Miyamoto involutions and the groups they generate
=================================================

Every Ising vector e defines a Miyamoto involution tau_e of the axis
set.  For a root system R these involutions generate a finite group
G(R) isomorphic to the Weyl group modulo its intersection with {+-1}.
The demo builds both sides of that isomorphism and compares orders,
then inspects the transposition profile (the orders of products
tau_e tau_f, always 1, 2, or 3).
"""

from weyl_ising import (
    PermGroup,
    build_root_system,
    contains_minus_one,
    from_root_system,
    miyamoto_group,
    miyamoto_permutation,
    transposition_profile,
    weyl_group,
)

for kind, rank in [("A", 3), ("D", 4), ("E", 6)]:
    R = build_root_system(kind, rank)
    A = from_root_system(R)

    # The Miyamoto group acts on positive roots by permutations.
    G = miyamoto_group(A)

    # Independent route: the Weyl group W(R) acting on all roots, then
    # divided by {+-1} whenever -1 is a Weyl element.
    W = weyl_group(R)
    quotient = W.order // 2 if contains_minus_one(R) else W.order
    print(f"{kind}{rank}: |G| = {G.order}, |W| = {W.order}, quotient = {quotient}")
    assert G.order == quotient

    # Products of two Miyamoto involutions have order 1, 2 or 3; the
    # order is 3 exactly when |<alpha, beta>| = 1.
    profile = transposition_profile(A)
    assert set(profile) <= {1, 2, 3}
    h = R.coxeter_number()
    order3 = profile[3]
    assert order3 == (h * rank // 2) * (h - 2)
    print(f"  order-3 pairs: {order3} (matches (h*l/2)(h-2) with h={h})")

# A single involution can also be inspected directly: it fixes the
# axes whose roots are orthogonal or equal to its own root.
R = build_root_system("A", 3)
A = from_root_system(R)
e = A.axes[0]
images = miyamoto_permutation(A, e)
fixed = sum(1 for i, j in enumerate(images) if i == j)
moved = len(images) - fixed
print(f"tau_e on A3: fixes {fixed} axes, moves {moved}")
assert PermGroup([images]).order in (1, 2)
