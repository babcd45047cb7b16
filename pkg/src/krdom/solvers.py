"""Exact solvers: minimum set sizes, domatic partitions, t0, decompositions.

Vertex sets are handled as integer bitmasks internally and exposed as
``frozenset[int]``.  Everything is exhaustive search with admissible
pruning; nothing here is heuristic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .graph import (
    Graph,
    PartitionSpec,
    SizeLimitError,
    check_size,
    complete_multipartite,
    mask_of,
    members,
)
from .predicates import Variant, satisfies

# 2**n subset tables are only built up to this order
TABLE_MAX_N = 22


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    value: int | None = None
    witness: frozenset[int] | None = None
    explored: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


@dataclass(frozen=True)
class DomaticResult:
    status: Status
    value: int = 0
    witness: tuple[frozenset[int], ...] = ()
    star: bool = False
    explored: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


@dataclass(frozen=True)
class Decomposition:
    """``core`` is a minimum kRDS; ``outer`` is the rest of the graph."""

    core: frozenset[int]
    outer: frozenset[int]

    @property
    def m(self) -> int:
        return len(self.core)


# --------------------------------------------------------------------------
# subset machinery


def _colex(free: list[int], r: int) -> Iterator[int]:
    """r-subsets of ``free`` as vertex bitmasks, colex order on positions."""
    f = len(free)
    if r < 0 or r > f:
        return
    if r == 0:
        yield 0
        return
    # per-byte lookup from position bits to vertex bits
    tables = []
    for base in range(0, f, 8):
        chunk = free[base:base + 8]
        t = [0] * (1 << len(chunk))
        for b in range(1, len(t)):
            low = b & -b
            t[b] = t[b ^ low] | 1 << chunk[low.bit_length() - 1]
        tables.append(t)
    x = (1 << r) - 1
    limit = 1 << f
    ntab = len(tables)
    while x < limit:
        if ntab == 1:
            yield tables[0][x]
        else:
            m = 0
            for i in range(ntab):
                m |= tables[i][(x >> (8 * i)) & 255]
            yield m
        c = x & -x
        y = x + c
        x = (((x ^ y) >> 2) // c) | y


def _popcount_array(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)


def valid_table(g: Graph, variant: Variant) -> np.ndarray:
    """Boolean array indexed by subset bitmask: does the subset qualify?"""
    n = g.n
    if n > TABLE_MAX_N:
        raise SizeLimitError(f"subset tables are limited to {TABLE_MAX_N} vertices")
    masks = np.arange(1 << n, dtype=np.uint32)
    full = np.uint32(g.full)
    outside = ~masks & full
    ok = np.ones(1 << n, dtype=bool)
    k = variant.k
    for v, a in enumerate(g.adj):
        av = np.uint32(a)
        cnt = _popcount_array(masks & av)
        if not variant.total:
            cnt = cnt + ((masks >> np.uint32(v)) & np.uint32(1)).astype(cnt.dtype)
        ok &= cnt >= k
        if variant.restrained:
            out_v = ((outside >> np.uint32(v)) & np.uint32(1)).astype(bool)
            ok &= ~out_v | (_popcount_array(outside & av) >= k)
    return ok


def _forced(g: Graph, variant: Variant) -> int:
    """Vertices of degree <= 2k-1, which lie in every restrained set."""
    if not variant.restrained:
        return 0
    return mask_of(v for v, a in enumerate(g.adj) if a.bit_count() <= 2 * variant.k - 1)


def _lower_bound(g: Graph, variant: Variant) -> int:
    k = variant.k
    lb = k + 1 if variant.total else k
    if variant.restrained:
        bound = Fraction(3 * k * g.n - 2 * g.m, 2 * k + 1)
        lb = max(lb, math.ceil(bound))
    return min(lb, g.n)


# --------------------------------------------------------------------------
# minimum sets


def gamma(g: Graph, variant: Variant, prune: bool = True) -> SolveResult:
    """Minimum cardinality of a set of the given type.

    Sizes are tried upward from a lower bound; subsets of each size are
    enumerated in colex order over the non-forced vertices, so the witness
    is the colex-first optimum.  ``prune=False`` drops the lower bound and
    the forced vertices (plain exhaustive search), for cross-checking.
    """
    check_size(g.n)
    if g.n == 0:
        return SolveResult(Status.OPTIMAL, 0, frozenset(), 0)
    if not satisfies(g, g.full, variant):
        return SolveResult(Status.INFEASIBLE, explored=1)
    forced = _forced(g, variant) if prune else 0
    lb = max(_lower_bound(g, variant), forced.bit_count()) if prune else 0
    free = [v for v in range(g.n) if not forced >> v & 1]
    nf = forced.bit_count()
    explored = 0
    for s in range(lb, g.n + 1):
        for sub in _colex(free, s - nf):
            explored += 1
            cand = sub | forced
            if satisfies(g, cand, variant):
                return SolveResult(Status.OPTIMAL, s, members(cand), explored)
    raise AssertionError("V(G) qualifies, so the search cannot run dry")


def all_min_sets(g: Graph, variant: Variant) -> list[frozenset[int]]:
    """Every minimum-cardinality set, sorted by their sorted vertex tuples."""
    res = gamma(g, variant)
    if not res.optimal:
        return []
    forced = _forced(g, variant)
    free = [v for v in range(g.n) if not forced >> v & 1]
    found = [
        members(sub | forced)
        for sub in _colex(free, res.value - forced.bit_count())
        if satisfies(g, sub | forced, variant)
    ]
    return sorted(found, key=sorted)


def _all_min_masks(g: Graph, variant: Variant) -> list[int]:
    return [mask_of(s) for s in all_min_sets(g, variant)]


# --------------------------------------------------------------------------
# domatic partitions


def _is_monotone(variant: Variant) -> bool:
    # supersets of kDS / kTDS sets keep qualifying; restrained sets do not
    return not variant.restrained


def _class_bound(g: Graph, variant: Variant, free: int) -> int:
    """Upper bound on disjoint qualifying sets drawn from ``free``."""
    k = variant.k
    best = free.bit_count()
    for v, a in enumerate(g.adj):
        nb = a if variant.total else a | 1 << v
        best = min(best, (nb & free).bit_count() // k)
    return best


@dataclass
class _PartitionSearch:
    g: Graph
    variant: Variant
    table: bytes
    explored: int = 0
    _memo: dict = field(default_factory=dict)
    _minimal: list[int] | None = None

    def best(self, region: int, cap: int | None = None) -> tuple[int, list[int]]:
        """Max classes in a partition of ``region`` into qualifying sets.

        Returns ``(-1, [])`` when no such partition exists.  ``cap`` stops
        the search as soon as that many classes are found.
        """
        if region == 0:
            return 0, []
        if _is_monotone(self.variant):
            return self._pack(region, cap)
        return self._exact(region)

    # restrained variants: exact partition, memoised over the remaining region

    def _exact(self, region: int) -> tuple[int, list[int]]:
        if region == 0:
            return 0, []
        hit = self._memo.get(region)
        if hit is not None:
            return hit
        low = region & -region
        rest = region ^ low
        best: tuple[int, list[int]] = (-1, [])
        sub = rest
        while True:
            cls = sub | low
            self.explored += 1
            if self.table[cls]:
                cnt, classes = self._exact(region ^ cls)
                if cnt >= 0 and cnt + 1 > best[0]:
                    best = (cnt + 1, [cls] + classes)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        self._memo[region] = best
        return best

    # monotone variants: pack disjoint minimal sets, leftovers join a class

    def _minimal_sets(self) -> list[int]:
        if self._minimal is None:
            valid = self.table
            mins = []
            for s in (i for i, ok in enumerate(valid) if ok):
                t = s
                minimal = True
                while t:
                    low = t & -t
                    if valid[s ^ low]:
                        minimal = False
                        break
                    t ^= low
                if minimal:
                    mins.append(s)
            mins.sort(key=lambda s: ((s & -s).bit_length(), s.bit_count(), s))
            self._minimal = mins
        return self._minimal

    def _pack(self, region: int, cap: int | None) -> tuple[int, list[int]]:
        sets = [s for s in self._minimal_sets() if s & ~region == 0]
        if not sets:
            return -1, []
        best: list[int] = []
        chosen: list[int] = []
        limit = cap if cap is not None else region.bit_count()

        def dfs(start: int, used: int) -> bool:
            nonlocal best
            self.explored += 1
            if len(chosen) > len(best):
                best = list(chosen)
                if len(best) >= limit:
                    return True
            free = region & ~used
            if len(chosen) + _class_bound(self.g, self.variant, free) <= len(best):
                return False
            for i in range(start, len(sets)):
                s = sets[i]
                if s & used:
                    continue
                chosen.append(s)
                if dfs(i + 1, used | s):
                    return True
                chosen.pop()
            return False

        dfs(0, 0)
        classes = list(best)
        leftover = region
        for c in classes:
            leftover &= ~c
        if leftover:
            # largest index class absorbs the leftover; superset still qualifies
            classes[-1] |= leftover
        return len(classes), classes


def _search(g: Graph, variant: Variant) -> _PartitionSearch:
    check_size(g.n)
    return _PartitionSearch(g, variant, valid_table(g, variant).tobytes())


def _canonical_classes(classes: list[int]) -> tuple[frozenset[int], ...]:
    return tuple(members(c) for c in sorted(classes, key=lambda c: (c & -c)))


def domatic(g: Graph, variant: Variant) -> DomaticResult:
    """Maximum number of classes of a partition into qualifying sets."""
    check_size(g.n)
    if g.n == 0:
        return DomaticResult(Status.OPTIMAL, 0, ())
    if not satisfies(g, g.full, variant):
        return DomaticResult(Status.INFEASIBLE, explored=1)
    search = _search(g, variant)
    cap = _class_bound(g, variant, g.full)
    cnt, classes = search.best(g.full, cap)
    assert cnt >= 1
    gmin = min((len(members(c)) for c in classes), default=0)
    star = gmin == gamma(g, variant).value
    return DomaticResult(Status.OPTIMAL, cnt, _canonical_classes(classes), star, search.explored)


def star_domatic(g: Graph, variant: Variant) -> DomaticResult:
    """Maximum classes among partitions having a minimum-cardinality class.

    When no partition contains a minimum set (only possible if the minimum
    is below n), the trivial one-class partition is returned with
    ``star=False``.
    """
    check_size(g.n)
    res = gamma(g, variant)
    if not res.optimal:
        return DomaticResult(Status.INFEASIBLE, explored=res.explored)
    if g.n == 0:
        return DomaticResult(Status.OPTIMAL, 0, (), True)
    search = _search(g, variant)
    cap = _class_bound(g, variant, g.full)
    best_cnt, best_classes = -1, []
    for w in _all_min_masks(g, variant):
        rest = g.full & ~w
        if rest == 0:
            cnt, classes = 0, []
        else:
            cnt, classes = search.best(rest, cap - 1)
            if cnt < 1:
                continue
        if cnt + 1 > best_cnt:
            best_cnt, best_classes = cnt + 1, [w] + classes
            if best_cnt >= cap:
                break
    if best_cnt < 0:
        return DomaticResult(Status.OPTIMAL, 1, (members(g.full),), False, search.explored)
    return DomaticResult(Status.OPTIMAL, best_cnt, _canonical_classes(best_classes), True, search.explored)


def all_qualifying_sets(g: Graph, variant: Variant) -> list[frozenset[int]]:
    """Every qualifying subset, by increasing bitmask."""
    table = valid_table(g, variant)
    return [members(int(s)) for s in np.flatnonzero(table)]


# --------------------------------------------------------------------------
# complete multipartite t0


def t_of(spec: PartitionSpec, s: frozenset[int]) -> int:
    """Number of parts not entirely contained in ``s``."""
    return sum(1 for block in spec.blocks() if not set(block) <= s)


def t0(spec: PartitionSpec, k: int) -> int | None:
    """Least number of incomplete parts over all kRDSs other than V(G).

    ``None`` when V(G) is the only kRDS.
    """
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    g = complete_multipartite(spec)
    variant = Variant(k, restrained=True)
    if not satisfies(g, g.full, variant):
        raise ValueError(f"no {variant.name} exists: min degree {g.min_degree} < {k - 1}")
    table = valid_table(g, variant)
    table[g.full] = False
    best = None
    block_masks = [mask_of(b) for b in spec.blocks()]
    for s in np.flatnonzero(table).tolist():
        t = sum(1 for b in block_masks if b & ~s)
        if best is None or t < best:
            best = t
    return best


# --------------------------------------------------------------------------
# structure


def decompose(g: Graph, k: int) -> Decomposition | None:
    """Split G into a minimum kRDS core and the graph F induced by the rest."""
    if k < 2:
        raise ValueError("decomposition is defined for k >= 2")
    res = gamma(g, Variant(k, restrained=True))
    if not res.optimal:
        return None
    core = res.witness
    return Decomposition(core, frozenset(range(g.n)) - core)


def decomposition_holds(g: Graph, k: int, d: Decomposition) -> bool:
    """Core min degree >= k-1, outer min degree >= k, outer vertices see k core vertices."""
    core, outer = mask_of(d.core), mask_of(d.outer)
    if core & outer or core | outer != g.full:
        return False
    for v in d.core:
        if (g.adj[v] & core).bit_count() < k - 1:
            return False
    for v in d.outer:
        if (g.adj[v] & outer).bit_count() < k or (g.adj[v] & core).bit_count() < k:
            return False
    return True


def prism_t_subset(g: Graph, k: int) -> frozenset[int] | None:
    """First k-subset T of the complement side meeting the prism equality condition.

    With the prism labelling (vertex ``i`` of the complement at ``i+n``), an
    outside complement vertex needs k-1 complement-neighbors in T and k
    outside T; a member of T needs k-2 complement-neighbors in T.
    Returned in prism labels, or ``None``.
    """
    n = g.n
    gbar_adj = [g.full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    for t in _colex(list(range(n)), k):
        ok = True
        for v in range(n):
            inside = (gbar_adj[v] & t).bit_count()
            if t >> v & 1:
                if inside < k - 2:
                    ok = False
                    break
            elif inside < k - 1 or (gbar_adj[v] & ~t).bit_count() < k:
                ok = False
                break
        if ok:
            return frozenset(v + n for v in members(t))
    return None
