"""Finite groups given by multiplication tables.

Elements are integer indices ``0..n-1`` and the identity always sits at
index 0.  Everything else in the package is built on top of
:class:`FiniteGroup`, :class:`Subgroup` and :class:`GroupMap`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    GroupError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    SearchBudgetExceeded,
)

ASSOCIATIVITY_CAP = 512
DEFAULT_SEARCH_BUDGET = 10**6

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "GroupMap",
    "make_group",
    "subgroup_generated_by",
    "center",
    "derived_subgroup",
    "quotient",
    "direct_product",
    "minimal_generating_set",
    "iter_isomorphisms",
    "is_isomorphic",
]


class FiniteGroup:
    """A validated finite group.  Build instances with :func:`make_group`."""

    identity = 0

    def __init__(self, table: np.ndarray, labels: Sequence[str], name: str, inverses: np.ndarray):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        inverses = np.array(inverses, dtype=np.int64)
        inverses.setflags(write=False)
        self.table = table
        self.inverses = inverses
        self.labels = tuple(labels)
        self.name = name

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def label(self, x: int) -> str:
        return self.labels[x]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.ones(n, dtype=np.int64)
        power = np.arange(n)
        done = power == 0
        k = 1
        while not done.all():
            power = self.table[power, np.arange(n)]
            k += 1
            hit = (power == 0) & ~done
            orders[hit] = k
            done |= hit
        orders.setflags(write=False)
        return orders

    @cached_property
    def order_statistics(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(element order, count)`` pairs; an isomorphism invariant."""
        return tuple(sorted(Counter(self.element_orders.tolist()).items()))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, x: int) -> int:
        return int(self.element_orders[x])

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "table": self.table.tolist(),
            "labels": list(self.labels),
        }


def make_group(
    table,
    labels: Optional[Sequence[str]] = None,
    name: str = "G",
    *,
    trusted: bool = False,
    associativity_cap: int = ASSOCIATIVITY_CAP,
) -> FiniteGroup:
    """Validate a Cayley table and return a :class:`FiniteGroup`.

    The identity is moved to index 0 if it is found elsewhere (labels move
    with it).  Associativity is checked in full up to ``associativity_cap``
    elements; larger tables must be passed with ``trusted=True``.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        raise NotClosed("table entries must be integers")
    t = t.astype(np.int64)
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        i, j = bad[0]
        raise NotClosed(f"product of {i} and {j} is {t[i, j]}, outside 0..{n - 1}")
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = [str(s) for s in labels]
    if len(labels) != n:
        raise GroupError(f"expected {n} labels, got {len(labels)}")

    ar = np.arange(n)
    is_identity = (t == ar[None, :]).all(axis=1) & (t == ar[:, None]).all(axis=0)
    ids = np.flatnonzero(is_identity)
    if len(ids) == 0:
        raise NoIdentity("no element acts as a two-sided identity")
    e = int(ids[0])
    if e != 0:
        perm = np.array([e] + [k for k in range(n) if k != e])
        pos = np.empty(n, dtype=np.int64)
        pos[perm] = ar
        t = pos[t[np.ix_(perm, perm)]]
        labels = [labels[k] for k in perm]

    two_sided = (t == 0) & (t.T == 0)
    has_inv = two_sided.any(axis=1)
    if not has_inv.all():
        x = int(np.flatnonzero(~has_inv)[0])
        raise NoInverse(f"element {x} ({labels[x]}) has no two-sided inverse")
    inverses = two_sided.argmax(axis=1)

    latin = (np.sort(t, axis=1) == ar).all() and (np.sort(t, axis=0) == ar[:, None]).all()
    if n <= associativity_cap:
        _check_associative(t)
    elif not trusted:
        raise GroupError(
            f"order {n} exceeds the associativity cap {associativity_cap}; pass trusted=True"
        )
    if not latin:
        # identity + inverses + associativity force a Latin square
        raise NotAssociative("table is not a Latin square")
    return FiniteGroup(t, labels, name, inverses)


def _check_associative(t: np.ndarray) -> None:
    for i in range(t.shape[0]):
        left = t[t[i]]  # (i*j)*k indexed [j, k]
        right = t[i][t]  # i*(j*k)
        if not np.array_equal(left, right):
            j, k = np.argwhere(left != right)[0]
            raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted({int(m) for m in self.members}))
        object.__setattr__(self, "members", mem)
        if not mem or mem[0] != 0:
            raise NotClosed("subgroup must contain the identity")
        idx = np.array(mem)
        prods = self.parent.table[np.ix_(idx, idx)]
        if not np.isin(prods, idx).all():
            raise NotClosed("member set is not closed under multiplication")
        if not np.isin(self.parent.inverses[idx], idx).all():
            raise NotClosed("member set is not closed under inverses")
        if self.parent.order % len(mem):
            raise GroupError(f"subgroup order {len(mem)} does not divide {self.parent.order}")

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def conjugation_witness(self) -> Optional[tuple[int, int]]:
        """Return ``(g, h)`` with ``g h g^-1`` outside the subgroup, or None if normal."""
        G = self.parent
        idx = np.array(self.members)
        for g in range(G.order):
            conj = G.table[G.table[g, idx], G.inverses[g]]
            outside = ~np.isin(conj, idx)
            if outside.any():
                return g, int(idx[np.argmax(outside)])
        return None

    def is_normal(self) -> bool:
        return self.conjugation_witness() is None

    def index(self) -> int:
        return self.parent.order // self.order

    def as_group(self, name: Optional[str] = None) -> FiniteGroup:
        """The subgroup as a standalone group; element ``i`` is ``members[i]``."""
        idx = np.array(self.members)
        pos = {m: i for i, m in enumerate(self.members)}
        sub = self.parent.table[np.ix_(idx, idx)]
        table = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub)
        labels = [self.parent.labels[m] for m in self.members]
        return make_group(table, labels, name or f"sub({self.parent.name})", trusted=True)


@dataclass(frozen=True, eq=False)
class GroupMap:
    """A homomorphism ``source -> target`` stored as an image array."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if not self.check:
            return
        if len(self.images) != self.source.order:
            raise GroupError("image array length must equal the source order")
        img = np.array(self.images)
        if ((img < 0) | (img >= self.target.order)).any():
            raise GroupError("image index out of range")
        if not _is_hom(self.source, self.target, img):
            raise GroupError("map does not preserve multiplication")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def inverse(self) -> "GroupMap":
        if not self.is_bijective():
            raise GroupError("only bijections can be inverted")
        inv = [0] * len(self.images)
        for i, y in enumerate(self.images):
            inv[y] = i
        return GroupMap(self.target, self.source, tuple(inv), check=False)


def _is_hom(src: FiniteGroup, tgt: FiniteGroup, img: np.ndarray) -> bool:
    return bool((img[src.table] == tgt.table[img[:, None], img[None, :]]).all())


def _closure(G: FiniteGroup, gens: Iterable[int], start: Iterable[int] = (0,)) -> set[int]:
    gens = [int(g) for g in gens]
    seen = set(start)
    seen.add(0)
    todo = list(seen)
    t = G.table
    while todo:
        u = todo.pop()
        for g in gens:
            v = int(t[u, g])
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def subgroup_generated_by(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise GroupError(f"generator {g} is not an element of {G.name}")
    # right multiplication by generators suffices in a finite group
    return Subgroup(G, tuple(_closure(G, gens)))


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    return Subgroup(G, tuple(np.flatnonzero((t == t.T).all(axis=1)).tolist()))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    t, inv = G.table, G.inverses
    # x^-1 y^-1 x y for all x, y
    xy = t
    yx_inv = inv[t.T]
    comms = np.unique(t[yx_inv, xy])
    return subgroup_generated_by(G, comms.tolist())


def quotient(G: FiniteGroup, N: Subgroup, name: Optional[str] = None) -> tuple[FiniteGroup, GroupMap]:
    """Quotient group on cosets of a normal subgroup, plus the projection."""
    if N.parent is not G:
        raise GroupError("subgroup belongs to a different group")
    witness = N.conjugation_witness()
    if witness is not None:
        g, h = witness
        raise NotNormal(f"conjugating {h} ({G.labels[h]}) by {g} ({G.labels[g]}) leaves the subgroup")
    n = G.order
    coset_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    idx = np.array(N.members)
    for x in range(n):
        if coset_of[x] < 0:
            coset_of[G.table[x, idx]] = len(reps)
            reps.append(x)
    r = np.array(reps)
    qtable = coset_of[G.table[np.ix_(r, r)]]
    if N.order == 1:
        labels = [G.labels[x] for x in reps]
    else:
        labels = [f"[{G.labels[x]}]" for x in reps]
    Q = make_group(qtable, labels, name or f"{G.name}/N")
    return Q, GroupMap(G, Q, tuple(coset_of.tolist()), check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """Componentwise product; the pair ``(i, j)`` has index ``i*|H| + j``."""
    m = H.order
    big = G.table[:, None, :, None] * m + H.table[None, :, None, :]
    table = big.reshape(G.order * m, G.order * m)
    labels = [f"({a},{b})" for a in G.labels for b in H.labels]
    return make_group(table, labels, name or f"{G.name}x{H.name}", trusted=True)


def minimal_generating_set(G: FiniteGroup) -> tuple[int, ...]:
    """Greedy generating set: keep adding the element that enlarges the span most."""
    gens: list[int] = []
    span = {0}
    while len(span) < G.order:
        best, best_span = -1, span
        for x in range(G.order):
            if x in span:
                continue
            cand = _closure(G, gens + [x])
            if len(cand) > len(best_span):
                best, best_span = x, cand
                if len(cand) == G.order:
                    break
        gens.append(best)
        span = best_span
    return tuple(gens)


def _word_plan(G: FiniteGroup, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """BFS spanning tree: each entry ``(v, u, k)`` means ``v = u * gens[k]``."""
    plan = []
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for k, g in enumerate(gens):
                v = int(G.table[u, g])
                if v not in seen:
                    seen.add(v)
                    plan.append((v, u, k))
                    nxt.append(v)
        frontier = nxt
    return plan


def iter_isomorphisms(
    G: FiniteGroup,
    H: FiniteGroup,
    budget: Optional[int] = DEFAULT_SEARCH_BUDGET,
    prefer_identity: bool = True,
) -> Iterator[GroupMap]:
    """Yield every isomorphism ``G -> H``.

    Backtracks over images of a greedy generating set of ``G``.  Candidates
    must have the same element order, and each partial assignment must
    generate a subgroup of the same size as the corresponding prefix of
    generators.  ``budget`` caps the number of partial assignments tried.
    With ``prefer_identity`` each generator first tries its own index, so the
    identity map comes out first when ``G`` and ``H`` share a table.
    """
    if G.order != H.order or G.order_statistics != H.order_statistics:
        return
    gens = minimal_generating_set(G)
    plan = _word_plan(G, gens)
    prefix_sizes = [len(_closure(G, gens[: i + 1])) for i in range(len(gens))]
    h_orders = H.element_orders
    candidates = []
    for g in gens:
        cands = np.flatnonzero(h_orders == G.element_orders[g]).tolist()
        if prefer_identity and g in cands:
            cands.remove(g)
            cands.insert(0, g)
        candidates.append(cands)

    nodes = 0
    chosen: list[int] = []
    n = G.order
    ht = H.table

    def extend() -> Optional[np.ndarray]:
        img = np.zeros(n, dtype=np.int64)
        for v, u, k in plan:
            img[v] = ht[img[u], chosen[k]]
        if len(set(img.tolist())) != n or not _is_hom(G, H, img):
            return None
        return img

    def search(depth: int) -> Iterator[GroupMap]:
        nonlocal nodes
        if depth == len(gens):
            img = extend()
            if img is not None:
                yield GroupMap(G, H, tuple(img.tolist()), check=False)
            return
        for h in candidates[depth]:
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(
                    f"isomorphism search {G.name} -> {H.name} exceeded {budget} nodes"
                )
            chosen.append(h)
            if len(_closure(H, chosen)) == prefix_sizes[depth]:
                yield from search(depth + 1)
            chosen.pop()

    if n == 1:
        yield GroupMap(G, H, (0,), check=False)
        return
    yield from search(0)


def is_isomorphic(
    G: FiniteGroup, H: FiniteGroup, budget: Optional[int] = DEFAULT_SEARCH_BUDGET
) -> Optional[GroupMap]:
    """Return an isomorphism ``G -> H`` or None."""
    return next(iter_isomorphisms(G, H, budget=budget), None)
