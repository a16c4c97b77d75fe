"""Automorphism groups, orbits and stabilizers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import GroupError
from .group import (
    DEFAULT_SEARCH_BUDGET,
    FiniteGroup,
    Subgroup,
    iter_isomorphisms,
    make_group,
)

AUTOMORPHISM_ORDER_CAP = 64


@dataclass(frozen=True, eq=False)
class Automorphism:
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        """``(self @ other)(x) == self(other(x))``."""
        return Automorphism(tuple(self.images[i] for i in other.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))


class AutomorphismGroup:
    """All automorphisms of ``base``; ``maps[k]`` is the image array of the k-th.

    Position 0 is the identity.  The rest are in lexicographic order of their
    image arrays, so enumeration order does not leak into results.
    """

    def __init__(self, base: FiniteGroup, maps: np.ndarray):
        maps = np.array(maps, dtype=np.int64).reshape(-1, base.order)
        maps.setflags(write=False)
        self.base = base
        self.maps = maps
        self._index = {row.tobytes(): k for k, row in enumerate(maps)}
        if len(self._index) != len(maps):
            raise GroupError("duplicate automorphisms")

    @property
    def order(self) -> int:
        return len(self.maps)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"AutomorphismGroup(|Aut({self.base.name})| = {self.order})"

    def __getitem__(self, k: int) -> Automorphism:
        return Automorphism(tuple(self.maps[k].tolist()))

    @property
    def elements(self) -> list[Automorphism]:
        return [self[k] for k in range(self.order)]

    def index_of(self, images) -> int:
        """Position of an automorphism given as an image array; KeyError if absent."""
        return self._index[np.asarray(images, dtype=np.int64).tobytes()]

    def compose(self, s: int, a: int) -> int:
        """Index of ``maps[s] o maps[a]``: apply ``a`` first."""
        return self._index[self.maps[s][self.maps[a]].tobytes()]

    @cached_property
    def table(self) -> np.ndarray:
        """Composition table; ``table[s, a]`` is the index of sigma_s o alpha_a."""
        m = self.order
        out = np.empty((m, m), dtype=np.int64)
        for s in range(m):
            composed = self.maps[s][self.maps]
            for a in range(m):
                out[s, a] = self._index[composed[a].tobytes()]
        out.setflags(write=False)
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of each automorphism, without building the composition table."""
        ident = np.arange(self.base.order)
        power = self.maps.copy()
        orders = np.ones(self.order, dtype=np.int64)
        done = (power == ident).all(axis=1)
        k = 1
        while not done.all():
            power = np.take_along_axis(self.maps, power, axis=1)
            k += 1
            hit = (power == ident).all(axis=1) & ~done
            orders[hit] = k
            done |= hit
        return orders

    @cached_property
    def order_statistics(self) -> tuple[tuple[int, int], ...]:
        values, counts = np.unique(self.element_orders, return_counts=True)
        return tuple(zip(values.tolist(), counts.tolist()))

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    def is_closed(self) -> bool:
        """Closure fixpoint check: every composition lands back in the list."""
        try:
            self.table
        except KeyError:
            return False
        return bool((self.table == 0).any(axis=1).all())

    def as_group(self, name: Optional[str] = None) -> FiniteGroup:
        """Aut(G) as an abstract group on indices ``0..m-1``."""
        m = self.order
        return make_group(
            self.table,
            [f"aut{k}" for k in range(m)],
            name or f"Aut({self.base.name})",
            trusted=m > 512,
        )

    def is_valid(self) -> bool:
        """Every map is a bijection fixing 0 that preserves multiplication."""
        t = self.base.table
        for img in self.maps:
            if img[0] != 0 or len(set(img.tolist())) != len(img):
                return False
            if not (img[t] == t[img[:, None], img[None, :]]).all():
                return False
        return True


def enumerate_automorphisms(
    G: FiniteGroup,
    cap: int = AUTOMORPHISM_ORDER_CAP,
    budget: Optional[int] = DEFAULT_SEARCH_BUDGET,
) -> AutomorphismGroup:
    """Every automorphism of ``G``, by backtracking over generator images."""
    if G.order > cap:
        raise GroupError(f"order {G.order} exceeds the automorphism cap {cap}")
    maps = [iso.images for iso in iter_isomorphisms(G, G, budget=budget)]
    ident = tuple(range(G.order))
    maps.sort(key=lambda m: (m != ident, m))
    return AutomorphismGroup(G, np.array(maps, dtype=np.int64))


def inner_automorphisms(G: FiniteGroup, A: AutomorphismGroup) -> tuple[int, ...]:
    """Indices (into ``A``) of the conjugation maps x -> g x g^-1."""
    t, inv = G.table, G.inverses
    found = set()
    for g in range(G.order):
        images = t[t[g], inv[g]]
        found.add(A.index_of(images))
    return tuple(sorted(found))


@dataclass(frozen=True)
class OrbitPartition:
    orbit_id: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    def orbit(self, x: int) -> tuple[int, ...]:
        return self.orbits[self.orbit_id[x]]

    def size(self, x: int) -> int:
        return len(self.orbits[self.orbit_id[x]])

    def __len__(self) -> int:
        return len(self.orbits)


def orbits(G: FiniteGroup, A: AutomorphismGroup) -> OrbitPartition:
    orbit_id = [-1] * G.order
    found: list[tuple[int, ...]] = []
    for x in range(G.order):
        if orbit_id[x] >= 0:
            continue
        orb = tuple(sorted(set(A.maps[:, x].tolist())))
        for y in orb:
            orbit_id[y] = len(found)
        found.append(orb)
    return OrbitPartition(tuple(orbit_id), tuple(found))


def aut_stabilizer(G: FiniteGroup, A: AutomorphismGroup, x: int) -> tuple[int, ...]:
    """Indices of automorphisms fixing ``x``."""
    return tuple(np.flatnonzero(A.maps[:, x] == x).tolist())


def stabilizer_sizes(A: AutomorphismGroup) -> np.ndarray:
    """``|C_Aut(x)|`` for every element ``x`` at once."""
    fixed = A.maps == np.arange(A.base.order)[None, :]
    return fixed.sum(axis=0)


def acentralizer(G: FiniteGroup, alpha) -> Subgroup:
    """Fixed-point subgroup of one automorphism."""
    images = np.asarray(alpha.images if isinstance(alpha, Automorphism) else alpha)
    return Subgroup(G, tuple(np.flatnonzero(images == np.arange(G.order)).tolist()))


def pointwise_stabilizer(G: FiniteGroup, A: AutomorphismGroup) -> tuple[int, ...]:
    """Automorphisms fixing every element.  Always just the identity."""
    fixed = (A.maps == np.arange(G.order)[None, :]).all(axis=1)
    return tuple(np.flatnonzero(fixed).tolist())
