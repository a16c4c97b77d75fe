"""Autocommutators and the generalized autocommuting probability.

``Pr_g`` is the fraction of pairs ``(x, alpha)`` in ``G x Aut(G)`` whose
autocommutator ``x^-1 alpha(x)`` equals ``g``.  It is computed three ways:

* :func:`pr_g_bruteforce` counts pairs directly;
* :func:`pr_g_orbit_formula` sums ``1/|orb(x)|`` over the ``x`` with
  ``x g`` in the orbit of ``x``;
* :func:`pr_acentralizer_sum` (``g = 1`` only) sums fixed-point counts.

All results are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .automorphism import (
    AutomorphismGroup,
    OrbitPartition,
    enumerate_automorphisms,
    orbits,
    stabilizer_sizes,
)
from .errors import NotCoprime
from .group import FiniteGroup, Subgroup, direct_product, subgroup_generated_by

ORACLE_CAP = 24


def autocommutator(G: FiniteGroup, x: int, alpha) -> int:
    """``[x, alpha] = x^-1 alpha(x)``."""
    return int(G.table[G.inverses[x], alpha(x) if callable(alpha) else alpha[x]])


def autocommutator_table(G: FiniteGroup, A: AutomorphismGroup) -> np.ndarray:
    """``out[a, x] = [x, alpha_a]`` for every automorphism index and element."""
    return G.table[G.inverses[None, :], A.maps]


def absolute_center(G: FiniteGroup, A: AutomorphismGroup) -> Subgroup:
    fixed = (A.maps == np.arange(G.order)[None, :]).all(axis=0)
    return Subgroup(G, tuple(np.flatnonzero(fixed).tolist()))


def autocommutator_set(G: FiniteGroup, A: AutomorphismGroup) -> tuple[int, ...]:
    return tuple(np.unique(autocommutator_table(G, A)).tolist())


def autocommutator_subgroup(G: FiniteGroup, A: AutomorphismGroup) -> Subgroup:
    return subgroup_generated_by(G, autocommutator_set(G, A))


def transporter(G: FiniteGroup, A: AutomorphismGroup, x: int, g: int) -> tuple[int, ...]:
    """Indices of the automorphisms ``alpha`` with ``[x, alpha] = g``."""
    return tuple(np.flatnonzero(G.table[G.inverses[x], A.maps[:, x]] == g).tolist())


def pr_g_bruteforce(G: FiniteGroup, A: AutomorphismGroup, g: int) -> Fraction:
    count = int((autocommutator_table(G, A) == g).sum())
    return Fraction(count, G.order * A.order)


def pr_g_orbit_formula(
    G: FiniteGroup, A: AutomorphismGroup, g: int, orb: Optional[OrbitPartition] = None
) -> Fraction:
    orb = orbits(G, A) if orb is None else orb
    total = Fraction(0)
    for x in range(G.order):
        xg = int(G.table[x, g])
        if orb.orbit_id[xg] == orb.orbit_id[x]:
            total += Fraction(1, orb.size(x))
    return total / G.order


def pr_acentralizer_sum(G: FiniteGroup, A: AutomorphismGroup) -> Fraction:
    fixed_counts = (A.maps == np.arange(G.order)[None, :]).sum(axis=1)
    return Fraction(int(fixed_counts.sum()), G.order * A.order)


def pr_trivial_stabilizer_formula(G: FiniteGroup, A: AutomorphismGroup) -> Optional[Fraction]:
    """Closed form valid when only the identity automorphism fixes any x != 1.

    Returns None when that hypothesis fails.
    """
    stab = stabilizer_sizes(A)
    if (stab[1:] != 1).any():
        return None
    n, m = G.order, A.order
    return Fraction(1, n) + Fraction(1, m) - Fraction(1, n * m)


class FormulaMismatch(AssertionError):
    pass


def distribution(
    G: FiniteGroup,
    A: AutomorphismGroup,
    cross_check: Optional[bool] = None,
    oracle_cap: int = ORACLE_CAP,
) -> dict[int, Fraction]:
    """``Pr_g`` for every ``g``, from the orbit formula.

    With ``cross_check`` (default: when ``|G| <= oracle_cap``) every value is
    compared against the pair count and :class:`FormulaMismatch` is raised on
    any difference.
    """
    orb = orbits(G, A)
    dist = {g: pr_g_orbit_formula(G, A, g, orb) for g in range(G.order)}
    if cross_check is None:
        cross_check = G.order <= oracle_cap
    if cross_check:
        counts = np.bincount(autocommutator_table(G, A).ravel(), minlength=G.order)
        denom = G.order * A.order
        for g, value in dist.items():
            if value != Fraction(int(counts[g]), denom):
                raise FormulaMismatch(f"Pr_{g}({G.name}): orbit formula {value} != count {counts[g]}/{denom}")
    return dist


@dataclass
class AutocommutingReport:
    group: FiniteGroup
    aut: AutomorphismGroup = field(repr=False)
    absolute_center: Subgroup
    autocommutator_set: tuple[int, ...]
    autocommutator_subgroup: Subgroup
    orbit_partition: OrbitPartition = field(repr=False)
    distribution: dict[int, Fraction] = field(repr=False)

    @property
    def name(self) -> str:
        return self.group.name

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def aut_order(self) -> int:
        return self.aut.order

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_partition)

    @property
    def pr(self) -> Fraction:
        return self.distribution[0]

    def labelled_distribution(self) -> dict[str, Fraction]:
        return {self.group.labels[g]: v for g, v in self.distribution.items()}


def analyze(
    G: FiniteGroup, A: Optional[AutomorphismGroup] = None, cross_check: Optional[bool] = None
) -> AutocommutingReport:
    A = enumerate_automorphisms(G) if A is None else A
    S = autocommutator_set(G, A)
    return AutocommutingReport(
        group=G,
        aut=A,
        absolute_center=absolute_center(G, A),
        autocommutator_set=S,
        autocommutator_subgroup=subgroup_generated_by(G, S),
        orbit_partition=orbits(G, A),
        distribution=distribution(G, A, cross_check=cross_check),
    )


@dataclass
class ProductRuleVerdict:
    aut_orders: tuple[int, int, int]  # |Aut(GxH)|, |Aut(G)|, |Aut(H)|
    aut_order_multiplicative: bool
    automorphisms_split: bool
    pairs: dict[tuple[int, int], tuple[Fraction, Fraction]]  # (g, h) -> (lhs, rhs)

    @property
    def mismatches(self) -> list[tuple[int, int]]:
        return [k for k, (lhs, rhs) in self.pairs.items() if lhs != rhs]

    @property
    def ok(self) -> bool:
        return self.aut_order_multiplicative and self.automorphisms_split and not self.mismatches


def check_product_rule(G: FiniteGroup, H: FiniteGroup) -> ProductRuleVerdict:
    """Compare ``Pr_(g,h)`` on ``G x H`` with ``Pr_g * Pr_h`` for coprime orders.

    ``Aut(G x H)`` is enumerated from scratch, not assembled from the factors.
    """
    if gcd(G.order, H.order) != 1:
        raise NotCoprime(f"gcd(|{G.name}|, |{H.name}|) = {gcd(G.order, H.order)}")
    P = direct_product(G, H)
    AG, AH, AP = enumerate_automorphisms(G), enumerate_automorphisms(H), enumerate_automorphisms(P)
    m = H.order
    # alpha splits iff it maps G x 1 into G x 1 and 1 x H into 1 x H
    g_part = AP.maps[:, np.arange(G.order) * m]
    h_part = AP.maps[:, np.arange(m)]
    split = bool((g_part % m == 0).all() and (h_part < m).all())
    dG = distribution(G, AG, cross_check=False)
    dH = distribution(H, AH, cross_check=False)
    counts = np.bincount(autocommutator_table(P, AP).ravel(), minlength=P.order)
    denom = P.order * AP.order
    pairs = {
        (g, h): (Fraction(int(counts[g * m + h]), denom), dG[g] * dH[h])
        for g in range(G.order)
        for h in range(m)
    }
    return ProductRuleVerdict(
        aut_orders=(AP.order, AG.order, AH.order),
        aut_order_multiplicative=AP.order == AG.order * AH.order,
        automorphisms_split=split,
        pairs=pairs,
    )
