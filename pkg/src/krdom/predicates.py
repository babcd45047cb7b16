"""Membership tests for the four k-tuple domination set types.

``kDS``   every vertex has >= k members of its closed neighborhood in S.
``kTDS``  every vertex has >= k members of its open neighborhood in S.
``kRDS``  a kDS where every vertex outside S has >= k neighbors outside S.
``kTRDS`` a kTDS with the same outside condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, mask_of

CLOSED = "closed-neighborhood"
OPEN = "open-neighborhood"
OUTSIDE = "outside-neighborhood"
INSIDE = "inside-neighborhood"
DOMINATED = "dominated-by-set"


@dataclass(frozen=True)
class Variant:
    k: int
    total: bool = False
    restrained: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def name(self) -> str:
        return f"{self.k}{'T' if self.total else ''}{'R' if self.restrained else ''}DS"

    @property
    def min_degree_required(self) -> int:
        """Minimum degree at which V(G) itself qualifies."""
        return self.k if self.total else self.k - 1

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PredicateVerdict:
    holds: bool
    violations: tuple[tuple[int, str], ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    @property
    def failing_vertices(self) -> list[int]:
        return sorted({v for v, _ in self.violations})


def as_mask(g: Graph, s: Iterable[int] | int) -> int:
    mask = s if isinstance(s, int) else mask_of(s)
    if mask < 0 or mask & ~g.full:
        raise GraphError(f"vertex set is not a subset of 0..{g.n - 1}")
    return mask


def satisfies(g: Graph, mask: int, variant: Variant) -> bool:
    """Fast boolean form of :func:`check` on a bitmask."""
    k = variant.k
    total = variant.total
    restrained = variant.restrained
    out = g.full & ~mask
    for v, a in enumerate(g.adj):
        c = (a & mask).bit_count()
        if not total and mask >> v & 1:
            c += 1
        if c < k:
            return False
        if restrained and out >> v & 1 and (a & out).bit_count() < k:
            return False
    return True


def check(g: Graph, s: Iterable[int] | int, variant: Variant) -> PredicateVerdict:
    mask = as_mask(g, s)
    k = variant.k
    out = g.full & ~mask
    violations = []
    for v, a in enumerate(g.adj):
        if variant.total:
            if (a & mask).bit_count() < k:
                violations.append((v, OPEN))
        elif (a & mask).bit_count() + (mask >> v & 1) < k:
            violations.append((v, CLOSED))
        if variant.restrained and out >> v & 1 and (a & out).bit_count() < k:
            violations.append((v, OUTSIDE))
    return PredicateVerdict(not violations, tuple(violations))


def is_kds(g: Graph, s: Iterable[int] | int, k: int) -> PredicateVerdict:
    return check(g, s, Variant(k))


def is_ktds(g: Graph, s: Iterable[int] | int, k: int) -> PredicateVerdict:
    return check(g, s, Variant(k, total=True))


def is_krds(g: Graph, s: Iterable[int] | int, k: int) -> PredicateVerdict:
    return check(g, s, Variant(k, restrained=True))


def is_ktrds(g: Graph, s: Iterable[int] | int, k: int) -> PredicateVerdict:
    return check(g, s, Variant(k, total=True, restrained=True))


def is_krds_per_vertex(g: Graph, s: Iterable[int] | int, k: int) -> PredicateVerdict:
    """kRDS test phrased per vertex.

    Outside vertices need k neighbors in S and k outside; inside vertices
    need k-1 neighbors in S.  Must agree with :func:`is_krds`.
    """
    mask = as_mask(g, s)
    out = g.full & ~mask
    violations = []
    for v, a in enumerate(g.adj):
        if mask >> v & 1:
            if (a & mask).bit_count() < k - 1:
                violations.append((v, INSIDE))
        else:
            if (a & mask).bit_count() < k:
                violations.append((v, DOMINATED))
            if (a & out).bit_count() < k:
                violations.append((v, OUTSIDE))
    return PredicateVerdict(not violations, tuple(violations))


def variants(k: int) -> list[Variant]:
    """kDS, kTDS, kRDS, kTRDS in that order."""
    return [
        Variant(k),
        Variant(k, total=True),
        Variant(k, restrained=True),
        Variant(k, total=True, restrained=True),
    ]
