"""Built-in small groups, group-spec strings and group files."""
from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import ClosureCapExceeded, FileFormatError, GroupError, InvalidSpec
from .group import FiniteGroup, center, derived_subgroup, direct_product, is_isomorphic, make_group

DEFAULT_MAX_ORDER = 64
SYMMETRIC_DEGREE_CAP = 6
CLOSURE_CAP = 10_000

KINDS = ("cyclic", "dihedral", "dicyclic", "symmetric", "alternating", "elementary_abelian", "product", "file")


def max_order_cap() -> int:
    """Default order cap, overridable through ``AUTOCOMM_MAX_ORDER``."""
    raw = os.environ.get("AUTOCOMM_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise InvalidSpec(f"AUTOCOMM_MAX_ORDER must be an integer, got {raw!r}") from None


def _make(table, labels, name) -> FiniteGroup:
    return make_group(np.asarray(table), labels, name, trusted=True)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec("cyclic order must be >= 1")
    ar = np.arange(n)
    return _make((ar[:, None] + ar[None, :]) % n, [str(i) for i in range(n)], f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n.  Index ``i`` is r^i, ``n+i`` is s r^i."""
    if n < 2:
        raise InvalidSpec("dihedral parameter must be >= 2")
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a, i, b, j in itertools.product(range(2), range(n), range(2), range(n)):
        # (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
        k = ((-i if b else i) + j) % n
        table[a * n + i, b * n + j] = ((a + b) % 2) * n + k
    labels = [f"r^{i}" for i in range(n)] + [f"s r^{i}" for i in range(n)]
    return _make(table, labels, f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n = <a, b | a^2n = 1, b^2 = a^n, b a b^-1 = a^-1>, order 4n.

    Index ``i + 2n*j`` is a^i b^j.  ``dicyclic(2)`` is the quaternion group.
    """
    if n < 2:
        raise InvalidSpec("dicyclic parameter must be >= 2")
    m = 2 * n
    table = np.empty((2 * m, 2 * m), dtype=np.int64)
    for i, j, k, l in itertools.product(range(m), range(2), range(m), range(2)):
        if j == 0:
            e, f = i + k, l
        elif l == 0:
            e, f = i - k, 1
        else:
            e, f = i - k + n, 0
        table[i + m * j, k + m * l] = e % m + m * f
    labels = [f"a^{i}" for i in range(m)] + [f"a^{i} b" for i in range(m)]
    return _make(table, labels, "Q8" if n == 2 else f"Dic{n}")


def _perm_label(p: Sequence[int]) -> str:
    sep = "" if len(p) <= 10 else " "
    return sep.join(str(x) for x in p)


def permutation_group(perms: Sequence[tuple[int, ...]], name: str) -> FiniteGroup:
    """Group on an explicit list of permutations; product ``a*b`` is ``a`` after ``b``."""
    perms = [tuple(p) for p in perms]
    ident = tuple(range(len(perms[0])))
    perms.sort(key=lambda p: (p != ident, p))
    pos = {p: i for i, p in enumerate(perms)}
    arr = np.array(perms)
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j, row in enumerate(arr[i][arr]):
            try:
                table[i, j] = pos[tuple(row.tolist())]
            except KeyError:
                raise GroupError("permutation set is not closed under composition") from None
    return make_group(table, [_perm_label(p) for p in perms], name, trusted=n > 512)


def _parity(p: Sequence[int]) -> int:
    seen, parity = set(), 0
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def symmetric(d: int, cap: int = SYMMETRIC_DEGREE_CAP) -> FiniteGroup:
    if d < 1:
        raise InvalidSpec("symmetric degree must be >= 1")
    if d > cap:
        raise InvalidSpec(f"symmetric degree {d} exceeds cap {cap}")
    return permutation_group(list(itertools.permutations(range(d))), f"S{d}")


def alternating(d: int, cap: int = SYMMETRIC_DEGREE_CAP) -> FiniteGroup:
    if d < 1:
        raise InvalidSpec("alternating degree must be >= 1")
    if d > cap:
        raise InvalidSpec(f"alternating degree {d} exceeds cap {cap}")
    perms = [p for p in itertools.permutations(range(d)) if not _parity(p)]
    return permutation_group(perms, f"A{d}")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidSpec(f"{p} is not prime")
    if k < 1:
        raise InvalidSpec("rank must be >= 1")
    vecs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64)
    weights = p ** np.arange(k - 1, -1, -1)
    sums = (vecs[:, None, :] + vecs[None, :, :]) % p
    table = sums @ weights
    labels = ["".join(map(str, v)) for v in vecs]
    return _make(table, labels, f"Z{p}^{k}" if k > 1 else f"Z{p}")


def closure_of_permutations(gens: Sequence[Sequence[int]], degree: int, cap: int = CLOSURE_CAP):
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    todo = [ident]
    while todo:
        u = todo.pop()
        for g in gens:
            v = tuple(u[x] for x in g)
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise ClosureCapExceeded(f"closure exceeds {cap} elements")
                todo.append(v)
    return sorted(seen)


# --- group files -----------------------------------------------------------

def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise FileFormatError(f"{where}: missing field {key!r}")
    if not isinstance(doc[key], kind):
        raise FileFormatError(f"{where}: field {key!r} has wrong type {type(doc[key]).__name__}")
    return doc[key]


def group_from_dict(doc, where: str = "<dict>", closure_cap: int = CLOSURE_CAP) -> FiniteGroup:
    """Decode either the table format or the permutation-generator format."""
    if not isinstance(doc, dict):
        raise FileFormatError(f"{where}: top level must be a JSON object")
    name = doc.get("name", "G")
    if not isinstance(name, str):
        raise FileFormatError(f"{where}: field 'name' must be a string")
    if "table" in doc:
        order = _require(doc, "order", int, where)
        table = _require(doc, "table", list, where)
        if len(table) != order:
            raise FileFormatError(f"{where}: 'table' has {len(table)} rows, 'order' says {order}")
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != order:
                raise FileFormatError(f"{where}: table row {r} must be a list of {order} integers")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
                raise FileFormatError(f"{where}: table row {r} contains a non-integer")
        labels = doc.get("labels")
        if labels is not None and (not isinstance(labels, list) or len(labels) != order):
            raise FileFormatError(f"{where}: 'labels' must be a list of {order} strings")
        return make_group(np.array(table, dtype=np.int64), labels, name)
    if "generators" in doc:
        degree = _require(doc, "degree", int, where)
        gens = _require(doc, "generators", list, where)
        for k, g in enumerate(gens):
            if not isinstance(g, list) or sorted(g) != list(range(degree)):
                raise FileFormatError(f"{where}: generator {k} is not a permutation of 0..{degree - 1}")
        perms = closure_of_permutations(gens, degree, closure_cap)
        return permutation_group(perms, name)
    raise FileFormatError(f"{where}: expected a 'table' or 'generators' field")


def load_group_file(path, closure_cap: int = CLOSURE_CAP) -> FiniteGroup:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return group_from_dict(doc, str(path), closure_cap)


# --- specs -------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple[int, ...] = ()
    path: Optional[str] = None
    factors: tuple["GroupSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown group kind {self.kind!r}")
        arity = {"cyclic": 1, "dihedral": 1, "dicyclic": 1, "symmetric": 1, "alternating": 1, "elementary_abelian": 2}
        if self.kind in arity and len(self.params) != arity[self.kind]:
            raise InvalidSpec(f"{self.kind} takes {arity[self.kind]} integer parameter(s)")
        if self.kind == "file" and not self.path:
            raise InvalidSpec("file spec needs a path")
        if self.kind == "product" and len(self.factors) < 2:
            raise InvalidSpec("product needs at least two factors")


def parse_spec(text: str) -> GroupSpec:
    """Parse ``kind:params`` such as ``dihedral:4``, ``elementary_abelian:2,3``,
    ``product:cyclic:3,cyclic:4`` or ``file:path/to/g.json``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise InvalidSpec(f"group spec {text!r} must look like kind:params")
    if kind == "file":
        return GroupSpec("file", path=rest)
    if kind == "product":
        return GroupSpec("product", factors=tuple(parse_spec(part) for part in rest.split(",")))
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise InvalidSpec(f"bad integer parameters in {text!r}") from None
    return GroupSpec(kind, params)


def build(spec) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "cyclic":
        return cyclic(*p)
    if k == "dihedral":
        return dihedral(*p)
    if k == "dicyclic":
        return dicyclic(*p)
    if k == "symmetric":
        return symmetric(*p)
    if k == "alternating":
        return alternating(*p)
    if k == "elementary_abelian":
        return elementary_abelian(*p)
    if k == "file":
        return load_group_file(spec.path)
    G = build(spec.factors[0])
    for f in spec.factors[1:]:
        G = direct_product(G, build(f))
    return G


# --- corpus ------------------------------------------------------------------

def _abelian_invariant_factors(n: int):
    """All tuples d1 | d2 | ... | dk with product n and d1 > 1."""
    def rec(remaining, smallest):
        if remaining == 1:
            yield ()
            return
        for d in range(smallest, remaining + 1):
            if remaining % d == 0:
                for rest in rec(remaining // d, d):
                    if not rest or rest[0] % d == 0:
                        yield (d,) + rest
    return list(rec(n, 2))


def _candidates(max_order: int):
    N = max_order
    yield from (cyclic(n) for n in range(1, N + 1))
    for p in (2, 3, 5, 7):
        k = 2
        while p**k <= N:
            yield elementary_abelian(p, k)
            k += 1
    if N >= 6:
        yield symmetric(3)
    if N >= 12:
        yield alternating(4)
    if N >= 24:
        yield symmetric(4)
    if N >= 60:
        yield alternating(5)
    nonabelian = [G for G in (symmetric(3), alternating(4), symmetric(4)) if G.order <= N]
    for n in range(2, N // 4 + 1):
        G = dicyclic(n)
        nonabelian.append(G)
        yield G
    for n in range(3, N // 2 + 1):
        G = dihedral(n)
        nonabelian.append(G)
        yield G
    for n in range(4, N + 1):
        for factors in _abelian_invariant_factors(n):
            if len(factors) < 2:
                continue
            G = cyclic(factors[0])
            for d in factors[1:]:
                G = direct_product(G, cyclic(d))
            yield G
    for a, b in ((2, 3), (3, 4), (2, 5), (4, 5), (3, 5)):
        if a * b <= N:
            yield direct_product(cyclic(a), cyclic(b))
    for X in nonabelian:
        for m in range(2, N // X.order + 1):
            yield direct_product(cyclic(m), X)


def _signature(G: FiniteGroup):
    return (G.order, G.order_statistics, center(G).order, derived_subgroup(G).order)


@lru_cache(maxsize=None)
def _corpus(max_order: int) -> tuple[FiniteGroup, ...]:
    kept: dict = {}
    for G in _candidates(max_order):
        sig = _signature(G)
        bucket = kept.setdefault(sig, [])
        if any(is_isomorphic(G, H) is not None for H in bucket):
            continue
        bucket.append(G)
    groups = [G for bucket in kept.values() for G in bucket]
    groups.sort(key=lambda G: (G.order, G.name))
    return tuple(groups)


def standard_corpus(max_order: int = 16, cap: Optional[int] = None) -> list[FiniteGroup]:
    """Small groups up to ``max_order``, one per isomorphism type present.

    Contents: cyclic groups, elementary abelian groups, every abelian type,
    S3, A4, S4 (A5 from order 60), Q8 and the dicyclic groups, dihedral
    groups, and Z_m x X for the non-abelian groups X above.  Sorted by
    order, then name.
    """
    cap = max_order_cap() if cap is None else cap
    if max_order > cap:
        raise InvalidSpec(f"max_order {max_order} exceeds cap {cap}")
    if max_order < 1:
        return []
    return list(_corpus(max_order))


def corpus_by_name(max_order: int = 16) -> dict[str, FiniteGroup]:
    return {G.name: G for G in standard_corpus(max_order)}
