# %% [markdown]
# # When the upper bounds are attained
#
# If Pr equals (p+q-1)/pq then G/L(G) is cyclic of order q.  For non-abelian G,
# Pr = (q^2+p-1)/pq^2 forces G/L(G) to be Z_q x Z_q.  A third check covers
# groups whose non-central orbits all have size p.  Here we sweep the corpus
# and list every group where a hypothesis is met.

# %%
from autocomm.autocommuting import analyze
from autocomm.bounds import characterization_check
from autocomm.catalog import standard_corpus
from autocomm.group import quotient

# %%
for G in standard_corpus(24):
    rep = analyze(G)
    for v in characterization_check(G, report=rep):
        if v.hypothesis_met:
            Q, _ = quotient(G, rep.absolute_center)
            print(f"{G.name:8s} {v.check_id}: Pr={rep.pr}  |G/L|={Q.order}  conclusion holds: {v.conclusion_holds}")
