"""Autoisoclinisms between small groups.

An autoisoclinism ``G -> H`` is a triple of isomorphisms

* ``psi``:   G/L(G) -> H/L(H)
* ``gamma``: Aut(G) -> Aut(H)
* ``beta``:  K(G)   -> K(H)

with ``beta([x, alpha]) = [y, gamma(alpha)]`` whenever ``psi(x L(G)) = y L(H)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .autocommuting import (
    absolute_center,
    autocommutator_subgroup,
    autocommutator_table,
    distribution,
)
from .automorphism import AutomorphismGroup, enumerate_automorphisms
from .errors import IllDefined, SearchBudgetExceeded
from .group import FiniteGroup, GroupMap, Subgroup, iter_isomorphisms, quotient

DEFAULT_PAIR_BUDGET = 10**6
AUT_TABLE_CAP = 5000


@dataclass
class AutocommutatorMap:
    """``(x L(G), alpha) -> [x, alpha]`` as a table ``values[coset, alpha]``."""

    group: FiniteGroup
    aut: AutomorphismGroup
    center: Subgroup
    quotient: FiniteGroup
    projection: GroupMap
    values: np.ndarray

    def __call__(self, coset: int, alpha: int) -> int:
        return int(self.values[coset, alpha])


def autocommutator_map(G: FiniteGroup, A: AutomorphismGroup) -> AutocommutatorMap:
    L = absolute_center(G, A)
    Q, proj = quotient(G, L, name=f"{G.name}/L")
    comm = autocommutator_table(G, A)
    coset = np.array(proj.images)
    values = np.full((Q.order, A.order), -1, dtype=np.int64)
    for x in range(G.order):
        c = coset[x]
        if values[c, 0] < 0:
            values[c] = comm[:, x]
        elif not np.array_equal(values[c], comm[:, x]):
            raise IllDefined(f"[x, alpha] depends on the representative of coset {c} in {G.name}")
    values.setflags(write=False)
    return AutocommutatorMap(G, A, L, Q, proj, values)


@dataclass
class Autoisoclinism:
    source: AutocommutatorMap
    target: AutocommutatorMap
    psi: GroupMap
    gamma: GroupMap
    beta: GroupMap
    k_source: Subgroup = field(repr=False)
    k_target: Subgroup = field(repr=False)

    def beta_element(self, g: int) -> int:
        """``beta`` on elements of G (which must lie in K(G)), returning elements of H."""
        return self.k_target.members[self.beta(self.k_source.members.index(g))]

    def validate(self) -> bool:
        """All three maps are isomorphisms and the square commutes."""
        if not (self.psi.is_bijective() and self.gamma.is_bijective() and self.beta.is_bijective()):
            return False
        for m in (self.psi, self.gamma, self.beta):
            GroupMap(m.source, m.target, m.images)  # homomorphism law, raises on failure
        vG, vH = self.source.values, self.target.values
        expected = vH[np.array(self.psi.images)[:, None], np.array(self.gamma.images)[None, :]]
        kS, kT = np.array(self.k_source.members), np.array(self.k_target.members)
        lookup = np.full(self.source.group.order, -1, dtype=np.int64)
        lookup[kS] = kT[np.array(self.beta.images)]
        return bool((lookup[vG] == expected).all())

    def to_dict(self) -> dict:
        return {
            "source": self.source.group.name,
            "target": self.target.group.name,
            "psi": list(self.psi.images),
            "gamma": list(self.gamma.images),
            "beta": list(self.beta.images),
            "beta_elements": {
                str(g): self.beta_element(g) for g in self.k_source.members
            },
        }


def _invariants(amap: AutocommutatorMap, K: Subgroup):
    return (
        amap.quotient.order,
        amap.quotient.order_statistics,
        K.order,
        K.as_group().order_statistics,
        amap.aut.order,
        amap.aut.order_statistics,
    )


def _solve_beta(
    vG: np.ndarray, expected: np.ndarray, G: FiniteGroup, H: FiniteGroup, KG: Subgroup, KH: Subgroup
) -> Optional[dict[int, int]]:
    """Recover ``beta`` from the diagram, or None if no isomorphism fits."""
    pairs = np.unique(np.stack([vG.ravel(), expected.ravel()], axis=1), axis=0)
    if len(np.unique(pairs[:, 0])) != len(pairs):
        return None
    beta = {int(s): int(t) for s, t in pairs}
    if beta.get(0, 0) != 0:
        return None
    beta[0] = 0
    gens = list(beta)
    todo = list(beta)
    while todo:
        u = todo.pop()
        for s in gens:
            v = int(G.table[u, s])
            img = int(H.table[beta[u], beta[s]])
            if v in beta:
                if beta[v] != img:
                    return None
            else:
                beta[v] = img
                todo.append(v)
    if set(beta) != KG.member_set or set(beta.values()) != KH.member_set:
        return None
    dom = np.array(KG.members)
    img = np.array([beta[x] for x in KG.members])
    if not (img[np.searchsorted(dom, G.table[np.ix_(dom, dom)])] == H.table[img[:, None], img[None, :]]).all():
        return None
    return beta


def find_autoisoclinism(
    G: FiniteGroup,
    H: FiniteGroup,
    AG: Optional[AutomorphismGroup] = None,
    AH: Optional[AutomorphismGroup] = None,
    budget: Optional[int] = DEFAULT_PAIR_BUDGET,
    prescreen: bool = True,
) -> Optional[Autoisoclinism]:
    """Search for an autoisoclinism ``G -> H``.

    Returns None only when the search is exhaustive (or the invariant
    pre-screen rules the pair out).  ``budget`` counts ``(psi, gamma)``
    candidate pairs; running out raises :class:`SearchBudgetExceeded`.
    """
    AG = enumerate_automorphisms(G) if AG is None else AG
    AH = enumerate_automorphisms(H) if AH is None else AH
    mG, mH = autocommutator_map(G, AG), autocommutator_map(H, AH)
    KG, KH = autocommutator_subgroup(G, AG), autocommutator_subgroup(H, AH)
    if (mG.quotient.order, KG.order, AG.order) != (mH.quotient.order, KH.order, AH.order):
        return None
    if prescreen and _invariants(mG, KG) != _invariants(mH, KH):
        return None

    if AG.order > AUT_TABLE_CAP:
        raise SearchBudgetExceeded(f"|Aut| = {AG.order} exceeds the composition-table cap {AUT_TABLE_CAP}")
    autG, autH = AG.as_group(), AH.as_group()
    KGg, KHg = KG.as_group(), KH.as_group()
    checked = 0
    for psi in iter_isomorphisms(mG.quotient, mH.quotient, budget=None):
        psi_img = np.array(psi.images)[:, None]
        for gamma in iter_isomorphisms(autG, autH, budget=None):
            checked += 1
            if budget is not None and checked > budget:
                raise SearchBudgetExceeded(f"autoisoclinism search exceeded {budget} (psi, gamma) pairs")
            expected = mH.values[psi_img, np.array(gamma.images)[None, :]]
            beta = _solve_beta(mG.values, expected, G, H, KG, KH)
            if beta is None:
                continue
            beta_map = GroupMap(
                KGg, KHg, tuple(KH.members.index(beta[x]) for x in KG.members), check=False
            )
            return Autoisoclinism(mG, mH, psi, gamma, beta_map, KG, KH)
    return None


@dataclass
class InvarianceVerdict:
    diagram_commutes: bool
    values: dict[int, tuple[Fraction, Fraction]]  # g -> (Pr_g(G), Pr_beta(g)(H))
    bijection_ok: dict[int, bool]
    fibre_count_ok: dict[int, bool]

    @property
    def mismatches(self) -> list[int]:
        return [g for g, (a, b) in self.values.items() if a != b]

    @property
    def ok(self) -> bool:
        return (
            self.diagram_commutes
            and not self.mismatches
            and all(self.bijection_ok.values())
            and all(self.fibre_count_ok.values())
        )


def verify_invariance(iso: Autoisoclinism) -> InvarianceVerdict:
    """Check ``Pr_g(G) = Pr_beta(g)(H)`` for every g in K(G), and the bijection behind it.

    For each ``g`` the pairs ``(x L(G), alpha)`` sent to ``g`` are pushed through
    ``(psi, gamma)`` and must land exactly on the pairs sent to ``beta(g)``.
    """
    mG, mH = iso.source, iso.target
    G, H = mG.group, mH.group
    dG = distribution(G, mG.aut)
    dH = distribution(H, mH.aut)
    psi = np.array(iso.psi.images)
    gamma = np.array(iso.gamma.images)
    values, bij, fibres = {}, {}, {}
    for g in iso.k_source.members:
        bg = iso.beta_element(g)
        values[g] = (dG[g], dH[bg])
        cs, als = np.nonzero(mG.values == g)
        pushed = set(zip(psi[cs].tolist(), gamma[als].tolist()))
        ds, bs = np.nonzero(mH.values == bg)
        bij[g] = len(pushed) == len(cs) and pushed == set(zip(ds.tolist(), bs.tolist()))
        # each coset pair accounts for |L| element pairs
        count_G = int((autocommutator_table(G, mG.aut) == g).sum())
        fibres[g] = count_G == mG.center.order * len(cs)
    return InvarianceVerdict(iso.validate(), values, bij, fibres)


def autoisoclinic_pairs(
    groups: list[FiniteGroup], budget: Optional[int] = DEFAULT_PAIR_BUDGET
) -> list[tuple[str, str, Optional[Autoisoclinism]]]:
    """All pairs ``(G, H)`` of distinct groups in ``groups`` found autoisoclinic.

    Pairs whose search exhausts ``budget`` are reported with ``None``.
    """
    auts = [enumerate_automorphisms(G) for G in groups]
    found = []
    for i, G in enumerate(groups):
        for j in range(i + 1, len(groups)):
            H = groups[j]
            try:
                iso = find_autoisoclinism(G, H, auts[i], auts[j], budget=budget)
            except SearchBudgetExceeded:
                found.append((G.name, H.name, None))
                continue
            if iso is not None:
                found.append((G.name, H.name, iso))
    return found
