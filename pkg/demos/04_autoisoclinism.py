# %% [markdown]
# # Autoisoclinism
#
# An autoisoclinism is a triple of isomorphisms (psi on G/L(G), gamma on
# Aut(G), beta on K(G)) making the autocommutator map commute.  When one
# exists, Pr_g(G) = Pr_beta(g)(H) for every g in K(G).  The search fixes psi
# and gamma, then reads beta off the commuting square.

# %%
from autocomm.catalog import standard_corpus
from autocomm.isoclinism import autoisoclinic_pairs, find_autoisoclinism, verify_invariance
from autocomm import build

# %%
iso = find_autoisoclinism(build("cyclic:3"), build("cyclic:6"))
print("Z3 -> Z6 witness:", iso.to_dict())
v = verify_invariance(iso)
for g, (a, b) in v.values.items():
    print(f"  Pr_{g}(Z3) = {a}   Pr_beta(g)(Z6) = {b}")

# %% [markdown]
# Non-isomorphic autoisoclinic pairs in the corpus up to order 16.

# %%
for a, b, found in autoisoclinic_pairs(standard_corpus(16)):
    status = "budget exhausted" if found is None else f"invariance verified: {verify_invariance(found).ok}"
    print(f"{a:6s} ~ {b:6s} {status}")
