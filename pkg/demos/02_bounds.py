# %% [markdown]
# # Bound certificates
#
# `bound_report` evaluates each inequality on a concrete group and records the
# bound value, the actual value and whether equality is attained.  The
# quantities involved are p (smallest prime dividing |Aut(G)|), q (smallest
# prime dividing |G|), L(G), S(G,Aut(G)) and K(G).

# %%
from autocomm import build
from autocomm.bounds import bound_report
from autocomm.catalog import standard_corpus
from autocomm.report import fmt_rational

# %%
S3 = build("symmetric:3")
for e in bound_report(S3):
    if e.g in (None, 0) and e.applicable:
        print(f"{e.bound_id:10s} {e.side:5s} bound={fmt_rational(e.bound_value):>6s} "
              f"actual={fmt_rational(e.actual):>6s} holds={e.holds} equality={e.equality}")

# %% [markdown]
# Equality in the (p+q-1)/pq bound: Z3 and Z4 attain it.

# %%
for spec in ("cyclic:3", "cyclic:4", "cyclic:5"):
    e = bound_report(build(spec)).get("B6")
    print(spec, "B6", fmt_rational(e.bound_value), "actual", fmt_rational(e.actual), "equality", e.equality)

# %% [markdown]
# The final chain value |L|/|G| + p(|G|-|L|)/(|G||Aut|) is reported as its own
# entry.  It is not a lower bound for the K-based bound in general: on Z3 the
# K-bound is 5/9 while the chain value is 1, which even exceeds Pr(Z3) = 2/3.
# The entry records whether |Aut| >= p|K|, a condition under which the chain
# does go through.

# %%
e = bound_report(build("cyclic:3")).get("B10-chain")
print("Z3 chain:", fmt_rational(e.actual), ">=", fmt_rational(e.bound_value), "->", e.holds, e.witness)

tally: dict[str, int] = {}
groups = standard_corpus(24)
for G in groups:
    for e in bound_report(G).violations:
        tally[e.bound_id] = tally.get(e.bound_id, 0) + 1
print(f"violations over {len(groups)} groups of order <= 24:", tally)
