"""Closed forms and bounds for k-tuple restrained domination, as checkable claims.

Each function raises :class:`InapplicableError` outside its stated range;
bounds are exact :class:`~fractions.Fraction` values, never floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .graph import Graph, mask_of


class InapplicableError(ValueError):
    """A formula was evaluated outside its precondition."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InapplicableError(message)


@dataclass(frozen=True)
class Interval:
    """Closed interval; ``None`` means unbounded on that side."""

    lower: Fraction | int | None = None
    upper: Fraction | int | None = None

    @classmethod
    def exact(cls, value: int) -> Interval:
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def __contains__(self, value: Fraction | int) -> bool:
        if self.lower is not None and value < self.lower:
            return False
        if self.upper is not None and value > self.upper:
            return False
        return True

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lower)
        lo = "-inf" if self.lower is None else str(self.lower)
        hi = "inf" if self.upper is None else str(self.upper)
        return f"[{lo}, {hi}]"


# ---------------------------------------------------------------- families


def krds_complete(n: int, k: int) -> int:
    _require(n > k >= 1, f"needs n > k >= 1, got n={n}, k={k}")
    return n if n <= 2 * k else k


def rds_cycle(n: int) -> int:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    c = -(-n // 3)
    return c + 1 if n % 3 == 2 else c


def krds_cycle(n: int, k: int) -> int:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    _require(k in (1, 2, 3), f"cycles have min degree 2, so k must be 1..3, got {k}")
    return rds_cycle(n) if k == 1 else n


def rds_cycle_complement(n: int) -> int:
    _require(n >= 4, f"needs n >= 4, got {n}")
    return {4: 4, 5: 3}.get(n, 2)


def krds_cycle_complement(n: int, k: int) -> int:
    _require(n >= 5 and 2 <= k <= n - 3, f"needs n >= 5 and 2 <= k <= n-3, got n={n}, k={k}")
    if n <= 2 * k + 2:
        return n
    if n <= 3 * k:
        return k + 2
    return k + 1


def bipartite_bounds(n: int, k: int) -> tuple[int, int]:
    _require(k >= 2, "needs min degree >= k-1 >= 1")
    return 2 * k - 2, n


def krds_bipartite(n: int, k: int, is_kk: bool) -> Interval:
    """Exact 2k-2 for K_{k-1,k-1}; otherwise strictly above 2k-2 and at most n."""
    lo, hi = bipartite_bounds(n, k)
    if is_kk:
        return Interval.exact(lo)
    return Interval(lo + 1, hi)


def krds_bipartite_non_kk(n: int, k: int) -> Interval:
    """The sharper [2k, n] window claimed for bipartite graphs other than K_{k-1,k-1}."""
    _, hi = bipartite_bounds(n, k)
    return Interval(2 * k, hi)


def krds_complete_bipartite(n: int, m: int, k: int) -> int:
    """Value on K_{n,m} with parts ordered so that n >= m."""
    _require(n >= m >= k - 1 >= 1, f"needs n >= m >= k-1 >= 1, got n={n}, m={m}, k={k}")
    if m >= 2 * k:
        return 2 * k
    if n >= 2 * k:
        return k + m
    return n + m


def multipartite_lower(p: int, k: int) -> int:
    _require(p >= 3, f"needs at least 3 parts, got {p}")
    _require(k >= 1, "k must be positive")
    return -(-(p * (k - 1)) // (p - 1))


def multipartite_upper(n: int, k: int, t0: int | None) -> int:
    _require(t0 is not None and t0 >= 2, f"needs t0 >= 2, got {t0}")
    return n - k - -(-k // (t0 - 1))


# ---------------------------------------------------------------- general bounds


def edge_lower_bound(n: int, m: int, k: int) -> Fraction:
    _require(k >= 1, "k must be positive")
    return Fraction(3 * k * n - 2 * m, 2 * k + 1)


def rds_edge_lower_bound(n: int, m: int) -> Fraction:
    return n - Fraction(2 * m, 3)


def edge_bound_structure(g: Graph, s: Iterable[int], k: int) -> bool:
    """Whether ``s`` induces the extremal shape for the edge bound.

    G[S] is (k-1)-regular, G[V-S] is k-regular, and every vertex outside S
    has exactly k neighbors in S.
    """
    inside = mask_of(s)
    outside = g.full & ~inside
    for v, a in enumerate(g.adj):
        if inside >> v & 1:
            if (a & inside).bit_count() != k - 1:
                return False
        elif (a & outside).bit_count() != k or (a & inside).bit_count() != k:
            return False
    return True


# ---------------------------------------------------------------- domatic


def domatic_complete(n: int, k: int) -> int:
    _require(n >= k >= 1, f"needs n >= k >= 1, got n={n}, k={k}")
    return n // k


def domatic_upper(n: int, k: int) -> Fraction:
    _require(n >= 1 and k >= 1, "needs n, k >= 1")
    return Fraction(n, k)


def domatic_product_upper(n: int) -> int:
    return n


def domatic_bipartite_upper(n: int, k: int, is_kk: bool) -> Fraction:
    """n/(2k-2) (exact) for K_{k-1,k-1}, else an upper bound n/(2k)."""
    _require(k >= 2, "needs min degree >= k-1 >= 1")
    return Fraction(n, 2 * k - 2) if is_kk else Fraction(n, 2 * k)


# ---------------------------------------------------------------- prisms


def prism_regular_bound(n: int, ell: int, k: int) -> Interval:
    """Value on the complementary prism of an ell-regular graph of order n."""
    _require(0 <= k - 2 <= ell <= 2 * k - 3, f"needs 0 <= k-2 <= ell <= 2k-3, got ell={ell}, k={k}")
    if n <= ell + 2 * k - 1:
        return Interval.exact(2 * n)
    return Interval(n + k, None)


def prism_regular_equality(n: int, ell: int, k: int, has_t_subset: bool) -> bool:
    """Predicted truth of ``value == n + k`` on the prism of an ell-regular graph."""
    _require(0 <= k - 2 <= ell <= 2 * k - 3, f"needs 0 <= k-2 <= ell <= 2k-3, got ell={ell}, k={k}")
    return n >= ell + 2 * k and has_t_subset


def prism_cycle(n: int, k: int) -> int:
    """Value on the complementary prism of C_n for k = 2 or 3."""
    if k == 2:
        _require(n >= 4, f"needs n >= 4, got {n}")
        return 2 * n if n in (4, 5) else n + 2
    if k == 3:
        _require(n >= 5, f"needs n >= 5, got {n}")
        return 2 * n if n in (5, 6, 7) else n + 3
    raise InapplicableError(f"closed form only for k in (2, 3), got {k}")


def prism_sandwich(
    g_km1: int | None,
    gbar_km1: int | None,
    g_k: int | None,
    gbar_k: int | None,
) -> Interval:
    """Bounds for the prism from the (k-1)- and k-values of G and its complement.

    Pass ``None`` for the (k-1)-values when k = 1; the lower side is then open.
    """
    _require(g_k is not None and gbar_k is not None, "the k-values of G and its complement are required")
    if (g_km1 is None) != (gbar_km1 is None):
        raise InapplicableError("give both (k-1)-values or neither")
    lower = None if g_km1 is None else g_km1 + gbar_km1
    return Interval(lower, g_k + gbar_k)


# ---------------------------------------------------------------- registry


class Kind(enum.Enum):
    EXACT = "exact"
    LOWER = "lower-bound"
    UPPER = "upper-bound"
    INTERVAL = "interval"
    EQUIVALENCE = "equivalence"


@dataclass(frozen=True)
class FormulaClaim:
    id: str
    kind: Kind
    params: tuple[str, ...]
    precondition: str
    applicable: Callable[[dict[str, Any]], bool]
    predict: Callable[[dict[str, Any]], Any]
    must_match: bool = True

    def evaluate(self, params: dict[str, Any]) -> Any:
        if not self.applicable(params):
            raise InapplicableError(f"{self.id}: precondition fails for {params}: {self.precondition}")
        return self.predict(params)


def _prism_defined(p: dict[str, Any]) -> bool:
    # prism of an ell-regular graph: degrees ell+1 and n-ell
    return min(p["ell"] + 1, p["n"] - p["ell"]) >= p["k"] - 1


def _claims() -> list[FormulaClaim]:
    C = FormulaClaim
    return [
        C("complete", Kind.EXACT, ("n", "k"), "n > k >= 1",
          lambda p: p["n"] > p["k"] >= 1,
          lambda p: krds_complete(p["n"], p["k"])),
        C("cycle", Kind.EXACT, ("n", "k"), "n >= 3, k in 1..3",
          lambda p: p["n"] >= 3 and p["k"] in (1, 2, 3),
          lambda p: krds_cycle(p["n"], p["k"])),
        C("cycle-complement", Kind.EXACT, ("n",), "n >= 4, k = 1",
          lambda p: p["n"] >= 4,
          lambda p: rds_cycle_complement(p["n"])),
        C("cycle-complement-k", Kind.EXACT, ("n", "k"), "n >= 5, 2 <= k <= n-3",
          lambda p: p["n"] >= 5 and 2 <= p["k"] <= p["n"] - 3,
          lambda p: krds_cycle_complement(p["n"], p["k"]),
          must_match=False),
        C("bipartite", Kind.INTERVAL, ("n", "k", "is_kk"),
          "bipartite, min degree >= k-1 >= 1; exact 2k-2 iff K_{k-1,k-1}",
          lambda p: p["k"] >= 2 and p["min_degree"] >= p["k"] - 1,
          lambda p: krds_bipartite(p["n"], p["k"], p["is_kk"])),
        C("bipartite-non-kk", Kind.INTERVAL, ("n", "k"),
          "bipartite, min degree >= k-1 >= 1, not K_{k-1,k-1}",
          lambda p: p["k"] >= 2 and p["min_degree"] >= p["k"] - 1 and not p["is_kk"],
          lambda p: krds_bipartite_non_kk(p["n"], p["k"]),
          must_match=False),
        C("complete-bipartite", Kind.EXACT, ("n", "m", "k"), "n >= m >= k-1 >= 1",
          lambda p: p["n"] >= p["m"] >= p["k"] - 1 >= 1,
          lambda p: krds_complete_bipartite(p["n"], p["m"], p["k"])),
        C("multipartite-lower", Kind.LOWER, ("parts", "k"), "p >= 3 parts, min degree >= k-1",
          lambda p: len(p["parts"]) >= 3 and p["min_degree"] >= p["k"] - 1,
          lambda p: Interval(multipartite_lower(len(p["parts"]), p["k"]), None)),
        C("multipartite-upper", Kind.UPPER, ("parts", "k", "t0"),
          "p >= 3 parts, min degree >= k-1, value < n, t0 >= 2",
          lambda p: (len(p["parts"]) >= 3 and p["min_degree"] >= p["k"] - 1
                     and p["value"] < p["n"] and p["t0"] is not None and p["t0"] >= 2),
          lambda p: Interval(None, multipartite_upper(p["n"], p["k"], p["t0"]))),
        C("edge-bound", Kind.LOWER, ("n", "m", "k"), "min degree >= k-1",
          lambda p: p["min_degree"] >= p["k"] - 1,
          lambda p: Interval(edge_lower_bound(p["n"], p["m"], p["k"]), None)),
        C("edge-bound-k1", Kind.LOWER, ("n", "m"), "any graph, k = 1",
          lambda p: True,
          lambda p: Interval(rds_edge_lower_bound(p["n"], p["m"]), None)),
        C("domatic-complete", Kind.EXACT, ("n", "k"), "n >= k >= 1",
          lambda p: p["n"] >= p["k"] >= 1,
          lambda p: domatic_complete(p["n"], p["k"])),
        C("domatic-product", Kind.UPPER, ("n", "k"), "min degree >= k-1",
          lambda p: p["min_degree"] >= p["k"] - 1,
          lambda p: Interval(None, domatic_product_upper(p["n"]))),
        C("domatic-upper", Kind.UPPER, ("n", "k"), "min degree >= k-1",
          lambda p: p["min_degree"] >= p["k"] - 1,
          lambda p: Interval(None, domatic_upper(p["n"], p["k"]))),
        C("domatic-bipartite", Kind.UPPER, ("n", "k", "is_kk"),
          "bipartite, min degree >= k-1 >= 1; exact for K_{k-1,k-1}",
          lambda p: p["k"] >= 2 and p["min_degree"] >= p["k"] - 1,
          lambda p: (Interval.exact(domatic_bipartite_upper(p["n"], p["k"], True)) if p["is_kk"]
                     else Interval(None, domatic_bipartite_upper(p["n"], p["k"], False))),
          must_match=False),
        C("prism-regular", Kind.LOWER, ("n", "ell", "k"),
          "G ell-regular, 0 <= k-2 <= ell <= 2k-3, prism min degree >= k-1; exact 2n when n <= ell+2k-1",
          lambda p: 0 <= p["k"] - 2 <= p["ell"] <= 2 * p["k"] - 3 and _prism_defined(p),
          lambda p: prism_regular_bound(p["n"], p["ell"], p["k"])),
        C("prism-regular-equality", Kind.EQUIVALENCE, ("n", "ell", "k", "has_t"),
          "G ell-regular, 0 <= k-2 <= ell <= 2k-3, prism min degree >= k-1; "
          "value = n+k iff n >= ell+2k and a T-subset exists",
          lambda p: 0 <= p["k"] - 2 <= p["ell"] <= 2 * p["k"] - 3 and _prism_defined(p),
          lambda p: prism_regular_equality(p["n"], p["ell"], p["k"], p["has_t"]),
          must_match=False),
        C("prism-cycle-k2", Kind.EXACT, ("n",), "n >= 4, k = 2",
          lambda p: p["n"] >= 4,
          lambda p: prism_cycle(p["n"], 2)),
        C("prism-cycle-k3", Kind.EXACT, ("n",), "n >= 5, k = 3",
          lambda p: p["n"] >= 5,
          lambda p: prism_cycle(p["n"], 3)),
        C("prism-sandwich", Kind.INTERVAL, ("n", "k"),
          "min(delta(G), delta(complement)) >= k-1; lower side needs k >= 2",
          lambda p: p["min_degree_both"] >= p["k"] - 1,
          lambda p: prism_sandwich(p.get("g_km1"), p.get("gbar_km1"), p["g_k"], p["gbar_k"])),
    ]


REGISTRY: dict[str, FormulaClaim] = {c.id: c for c in _claims()}


def get_claim(claim_id: str) -> FormulaClaim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}") from None


def registry_table() -> list[dict[str, str]]:
    """Machine-readable listing of every claim."""
    return [
        {
            "id": c.id,
            "kind": c.kind.value,
            "params": ",".join(c.params),
            "precondition": c.precondition,
            "must_match": "yes" if c.must_match else "no",
        }
        for c in REGISTRY.values()
    ]

