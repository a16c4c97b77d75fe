"""Inequalities for ``Pr_g`` and the characterizations attached to them.

Every entry is evaluated exactly.  Entries whose hypotheses fail (most
commonly ``G = L(G)``) are kept in the report with ``applicable=False``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .autocommuting import AutocommutingReport, analyze
from .automorphism import AutomorphismGroup, pointwise_stabilizer, stabilizer_sizes
from .catalog import cyclic, elementary_abelian
from .group import FiniteGroup, is_isomorphic, quotient

OUT_OF_HYPOTHESIS = "G = L(G): outside the standing hypothesis G != L(G)"


def smallest_prime_factor(n: int) -> Optional[int]:
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@dataclass
class BoundEntry:
    bound_id: str
    side: str  # "lower" or "upper"
    bound_value: Optional[Fraction]
    actual: Optional[Fraction]
    g: Optional[int] = None
    strict: bool = False
    applicable: bool = True
    note: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> Optional[bool]:
        if not self.applicable:
            return None
        if self.side == "lower":
            return self.actual > self.bound_value if self.strict else self.actual >= self.bound_value
        return self.actual < self.bound_value if self.strict else self.actual <= self.bound_value

    @property
    def equality(self) -> Optional[bool]:
        if not self.applicable:
            return None
        return self.actual == self.bound_value


@dataclass
class BoundReport:
    group: str
    entries: list[BoundEntry]

    def __iter__(self):
        return iter(self.entries)

    def by_id(self, bound_id: str) -> list[BoundEntry]:
        return [e for e in self.entries if e.bound_id == bound_id]

    def get(self, bound_id: str, g: Optional[int] = None) -> BoundEntry:
        """Entry for ``bound_id`` at ``g``; without ``g``, the id's only entry."""
        if g is None:
            found = self.by_id(bound_id)
            if len(found) == 1:
                return found[0]
        for e in self.entries:
            if e.bound_id == bound_id and e.g == g:
                return e
        raise KeyError((bound_id, g))

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.holds is False]


def _inapplicable(bound_id: str, side: str, note: str, g: Optional[int] = None) -> BoundEntry:
    return BoundEntry(bound_id, side, None, None, g=g, applicable=False, note=note)


@dataclass
class _Quantities:
    """Counts shared by the bound and characterization checks."""

    n: int
    m: int
    L: int
    S: int
    K: int
    X: int
    C: int  # pointwise stabilizer
    p: Optional[int]
    q: Optional[int]
    index: int  # |G : L(G)|
    stab: np.ndarray


def _quantities(rep: AutocommutingReport) -> _Quantities:
    G, A = rep.group, rep.aut
    stab = stabilizer_sizes(A)
    return _Quantities(
        n=G.order,
        m=A.order,
        L=rep.absolute_center.order,
        S=len(rep.autocommutator_set),
        K=rep.autocommutator_subgroup.order,
        X=int((stab == 1).sum()) if A.order > 1 else 0,
        C=len(pointwise_stabilizer(G, A)),
        p=smallest_prime_factor(A.order),
        q=smallest_prime_factor(G.order),
        index=G.order // rep.absolute_center.order,
        stab=stab,
    )


def _k_bound(k: int, index: int) -> Fraction:
    """``(1/k)(1 + (k-1)/|G:L|)``; decreasing in ``k`` once ``|G:L| > 1``."""
    return Fraction(1, k) * (1 + Fraction(k - 1, index))


def _orbit_conditions(rep: AutocommutingReport) -> tuple[bool, bool]:
    """Whether ``orb(x) = x S`` and whether ``orb(x) = S``, for all x outside L(G)."""
    G = rep.group
    S = np.array(rep.autocommutator_set)
    translated = untranslated = True
    for x in range(G.order):
        if x in rep.absolute_center:
            continue
        orb = set(rep.orbit_partition.orbit(x))
        translated &= orb == set(G.table[x, S].tolist())
        untranslated &= orb == set(S.tolist())
    return translated, untranslated


def bound_report(
    G: FiniteGroup,
    A: Optional[AutomorphismGroup] = None,
    report: Optional[AutocommutingReport] = None,
) -> BoundReport:
    rep = report if report is not None else analyze(G, A)
    G = rep.group
    Q = _quantities(rep)
    dist = rep.distribution
    pr = rep.pr

    ids = [("B1", "lower"), ("B2", "lower"), ("B3", "upper"), ("B4", "upper"), ("B4-strict", "upper"),
           ("B5-lower", "lower"), ("B5-upper", "upper"), ("B6", "upper"), ("B7", "upper"),
           ("B8", "lower"), ("B9", "lower"), ("B10", "lower"), ("B10-chain", "lower")]
    if Q.L == Q.n:
        return BoundReport(G.name, [_inapplicable(i, s, OUT_OF_HYPOTHESIS) for i, s in ids])

    n, m, L, p, q = Q.n, Q.m, Q.L, Q.p, Q.q
    entries: list[BoundEntry] = []

    b1_literal = Fraction(L, n) + Fraction(Q.C * (n - L), n * m)
    entries.append(BoundEntry(
        "B1", "lower", b1_literal, pr, g=0,
        witness={"pointwise_stabilizer_order": Q.C,
                 "reduced": Fraction(L, n) + Fraction(n - L, n * m)},
    ))

    S = set(rep.autocommutator_set)
    for g in range(1, n):
        if g not in S:
            entries.append(_inapplicable("B2", "lower", "g outside S(G,Aut(G))", g=g))
            continue
        entries.append(BoundEntry(
            "B2", "lower", Fraction(L * Q.C, n * m), dist[g], g=g,
            witness={"pointwise_stabilizer_order": Q.C, "reduced": Fraction(L, n * m)},
        ))

    for g in range(n):
        entries.append(BoundEntry("B3", "upper", pr, dist[g], g=g, witness={"equality_expected": g == 0}))

    for g in range(1, n):
        entries.append(BoundEntry("B4", "upper", Fraction(n - L, p * n), dist[g], g=g, witness={"p": p}))
        entries.append(BoundEntry("B4-strict", "upper", Fraction(1, p), dist[g], g=g, strict=True, witness={"p": p}))

    X = Q.X
    entries.append(BoundEntry(
        "B5-lower", "lower",
        Fraction(L, n) + Fraction(p * (n - X - L) + X, n * m), pr,
        witness={"X_G": X, "p": p},
    ))
    entries.append(BoundEntry(
        "B5-upper", "upper",
        Fraction((p - 1) * L + n, p * n) - Fraction(X * (m - p), p * n * m), pr,
        witness={"X_G": X, "p": p},
    ))

    w6: dict[str, Any] = {"p": p, "q": q}
    if p == q:
        w6["p_equals_q_form"] = Fraction(2 * p - 1, p * p)
        w6["at_most_3_4"] = w6["p_equals_q_form"] <= Fraction(3, 4)
    entries.append(BoundEntry("B6", "upper", Fraction(p + q - 1, p * q), pr, witness=w6))

    if G.is_abelian:
        entries.append(_inapplicable("B7", "upper", "G is abelian"))
    else:
        w7: dict[str, Any] = {"p": p, "q": q}
        if p == q:
            w7["p_equals_q_form"] = Fraction(p * p + p - 1, p**3)
            w7["at_most_5_8"] = w7["p_equals_q_form"] <= Fraction(5, 8)
        entries.append(BoundEntry("B7", "upper", Fraction(q * q + p - 1, p * q * q), pr, witness=w7))

    translated, untranslated = _orbit_conditions(rep)
    b8 = _k_bound(Q.S, Q.index)
    b9 = _k_bound(Q.K, Q.index)
    entries.append(BoundEntry(
        "B8", "lower", b8, pr,
        witness={"S_order": Q.S, "orb_equals_xS": translated, "orb_equals_S": untranslated},
    ))
    entries.append(BoundEntry(
        "B9", "lower", b9, pr,
        witness={"K_order": Q.K, "K_equals_S": Q.K == Q.S,
                 "orb_equals_xS": translated, "orb_equals_S": untranslated},
    ))
    chain = Fraction(L, n) + Fraction(p * (n - L), n * m)
    entries.append(BoundEntry("B10", "lower", b9, b8, note="S-bound >= K-bound"))
    entries.append(BoundEntry(
        "B10-chain", "lower", chain, b9,
        note="K-bound >= |L|/|G| + p(|G|-|L|)/(|G||Aut|)",
        witness={"Aut_order_at_least_pK": m >= p * Q.K},
    ))
    return BoundReport(G.name, entries)


@dataclass
class CharacterizationVerdict:
    check_id: str
    hypothesis_met: bool
    conclusion_holds: Optional[bool]
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.hypothesis_met or bool(self.conclusion_holds)


def _quotient_shape(rep: AutocommutingReport, q: int) -> dict[str, bool]:
    Qg, _ = quotient(rep.group, rep.absolute_center)
    shapes = {"cyclic_q": False, "q_by_q": False}
    if Qg.order == q:
        shapes["cyclic_q"] = is_isomorphic(Qg, cyclic(q)) is not None
    elif Qg.order == q * q:
        shapes["q_by_q"] = is_isomorphic(Qg, elementary_abelian(q, 2)) is not None
    return shapes


def characterization_check(
    G: FiniteGroup,
    A: Optional[AutomorphismGroup] = None,
    report: Optional[AutocommutingReport] = None,
) -> list[CharacterizationVerdict]:
    rep = report if report is not None else analyze(G, A)
    G = rep.group
    Q = _quantities(rep)
    if Q.L == Q.n:
        return [CharacterizationVerdict(c, False, None, {"note": OUT_OF_HYPOTHESIS}) for c in ("C1", "C2", "C3")]
    pr, p, q, n, m = rep.pr, Q.p, Q.q, Q.n, Q.m
    shapes = _quotient_shape(rep, q)
    base = {"pr": pr, "p": p, "q": q, "index": Q.index}
    out = []

    c1_value = Fraction(p + q - 1, p * q)
    c1_hyp = pr == c1_value
    c1_divides = (n * m) % (p * q) == 0
    out.append(CharacterizationVerdict(
        "C1", c1_hyp, (c1_divides and shapes["cyclic_q"]) if c1_hyp else None,
        {**base, "value": c1_value, "pq_divides": c1_divides, "quotient_cyclic_q": shapes["cyclic_q"]},
    ))

    c2_value = Fraction(q * q + p - 1, p * q * q)
    c2_hyp = (not G.is_abelian) and pr == c2_value
    c2_divides = (n * m) % (p * q) == 0
    out.append(CharacterizationVerdict(
        "C2", c2_hyp, (c2_divides and shapes["q_by_q"]) if c2_hyp else None,
        {**base, "value": c2_value, "pq_divides": c2_divides, "quotient_q_by_q": shapes["q_by_q"]},
    ))

    outside = [x for x in range(n) if x not in rep.absolute_center]
    c3_hyp = all(m // int(Q.stab[x]) == p for x in outside)
    details = {**base, "formula_value": Fraction(1, p) * (Fraction(p - 1, Q.index) + 1)}
    conclusion = None
    if c3_hyp:
        conclusion = pr == details["formula_value"]
        if shapes["cyclic_q"]:
            details["cyclic_q_value"] = c1_value
            conclusion &= pr == c1_value
        if shapes["q_by_q"]:
            details["q_by_q_value"] = c2_value
            conclusion &= pr == c2_value
    out.append(CharacterizationVerdict("C3", c3_hyp, conclusion, details))
    return out
