# %% [markdown]
# # Autocommutators and the Pr_g distribution
#
# For a finite group G and an automorphism alpha, the autocommutator is
# [x, alpha] = x^-1 alpha(x).  Pr_g is the fraction of pairs (x, alpha) whose
# autocommutator equals g.  Everything below is exact: values are Fractions.

# %%
from fractions import Fraction

from autocomm import analyze, build
from autocomm.autocommuting import (
    check_product_rule,
    pr_acentralizer_sum,
    pr_g_bruteforce,
    pr_g_orbit_formula,
)

# %% [markdown]
# Z4 has two automorphisms: the identity and y -> 3y.  Inversion sends x to
# -x, so [x, inv] = 2x and the only non-identity autocommutator is 2.

# %%
Z4 = build("cyclic:4")
rep = analyze(Z4)
print("Aut(Z4) images:", rep.aut.maps.tolist())
print("L(Z4) =", rep.absolute_center.members, " S =", rep.autocommutator_set)
for label, value in rep.labelled_distribution().items():
    print(f"  Pr_{label} = {value}")

# %% [markdown]
# Three independent routes to the same numbers: counting all pairs, summing
# 1/|orb(x)| over the x whose translate xg stays in the orbit of x, and (for
# g = 1) summing fixed-point subgroup sizes over Aut(G).

# %%
for spec in ("cyclic:3", "symmetric:3", "dicyclic:2", "dihedral:4"):
    G = build(spec)
    r = analyze(G)
    A = r.aut
    routes = (pr_g_bruteforce(G, A, 0), pr_g_orbit_formula(G, A, 0), pr_acentralizer_sum(G, A))
    assert len(set(routes)) == 1
    print(f"{G.name:4s} |Aut|={A.order:3d} orbits={r.orbit_count}  Pr = {routes[0]}")

# %% [markdown]
# The distribution sums to one and is symmetric under g -> g^-1.

# %%
Q8 = build("dicyclic:2")
d = analyze(Q8).distribution
assert sum(d.values()) == 1
assert all(d[g] == d[Q8.inv(g)] for g in d)
print({Q8.labels[g]: str(v) for g, v in d.items() if v})

# %% [markdown]
# For coprime orders every automorphism of G x H splits, so Pr factorizes.
# Aut(Z12) is enumerated from scratch, not assembled from the factors.

# %%
v = check_product_rule(build("cyclic:3"), build("cyclic:4"))
print("|Aut(Z12)|, |Aut(Z3)|, |Aut(Z4)| =", v.aut_orders)
print("all 12 pairs factor:", not v.mismatches)
assert v.pairs[(0, 0)][0] == Fraction(2, 3) * Fraction(3, 4)
