"""Cross-checks formula claims and implication theorems against exact solvers.

A sweep never asserts that a formula is right.  It records, per instance,
the formula's prediction, the solver's value, and a witness that is
re-checked with the predicates when the row is built.  Mismatches are data;
callers decide what must match.
"""

from __future__ import annotations

import csv
import enum
import functools
import io
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import formulas
from .formulas import Interval, get_claim
from .graph import (
    Graph,
    PartitionSpec,
    SizeLimitError,
    all_graphs,
    complement,
    complementary_prism,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    empty,
    is_isomorphic,
    mask_of,
    max_vertices,
    new_graph,
    perfect_matching,
)
from .predicates import Variant, check
from .solvers import (
    Decomposition,
    DomaticResult,
    all_qualifying_sets,
    decomposition_holds,
    domatic,
    gamma,
    prism_t_subset,
    star_domatic,
    t0,
)


class RowStatus(enum.Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Row:
    params: tuple[tuple[str, Any], ...]
    formula: str
    solver: str
    status: RowStatus
    witness: str = ""
    witness_ok: bool | None = None

    @property
    def param_text(self) -> str:
        return " ".join(f"{k}={_fmt(v)}" for k, v in self.params)


@dataclass
class Report:
    claim_id: str
    rows: list[Row] = field(default_factory=list)

    @property
    def tested(self) -> int:
        return len(self.rows)

    @property
    def matches(self) -> int:
        return sum(r.status is RowStatus.MATCH for r in self.rows)

    @property
    def mismatches(self) -> list[Row]:
        return [r for r in self.rows if r.status is RowStatus.MISMATCH]

    @property
    def skipped(self) -> int:
        return sum(r.status is RowStatus.SKIPPED for r in self.rows)

    @property
    def witnesses_ok(self) -> bool:
        """Every recorded witness passed its independent re-check."""
        return all(r.witness_ok is not False for r in self.rows)

    def extend(self, other: Report) -> None:
        self.rows.extend(other.rows)

    def summary(self) -> str:
        return (f"{self.claim_id}: tested={self.tested} matches={self.matches} "
                f"mismatches={len(self.mismatches)} skipped={self.skipped}")

    def to_text(self, show_matches: bool = False) -> str:
        lines = [self.summary()]
        for r in self.rows:
            if r.status is RowStatus.MISMATCH or (show_matches and r.status is RowStatus.MATCH):
                w = f" witness={r.witness}" if r.witness else ""
                ok = "" if r.witness_ok is None else f" witness_ok={'yes' if r.witness_ok else 'NO'}"
                lines.append(f"  {r.status.value.upper()} {r.param_text} formula={r.formula} "
                             f"solver={r.solver}{w}{ok}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "params", "formula", "solver", "status", "witness", "witness_ok"])
        for r in self.rows:
            ok = "" if r.witness_ok is None else ("yes" if r.witness_ok else "no")
            w.writerow([self.claim_id, r.param_text, r.formula, r.solver, r.status.value, r.witness, ok])
        return buf.getvalue()

    def to_table(self, row_key: str, col_key: str) -> str:
        """Grid of ``solver/formula`` cells over two parameters."""
        cells: dict[tuple[Any, Any], str] = {}
        for r in self.rows:
            p = dict(r.params)
            if row_key not in p or col_key not in p or r.status is RowStatus.SKIPPED:
                continue
            mark = "" if r.status is RowStatus.MATCH else "*"
            cells[p[row_key], p[col_key]] = f"{r.solver}{mark}"
        rows = sorted({a for a, _ in cells})
        cols = sorted({b for _, b in cells})
        width = max([len(c) for c in cells.values()] + [len(str(c)) for c in cols] + [3]) + 1
        out = [f"{row_key}\\{col_key}".ljust(8) + "".join(str(c).rjust(width) for c in cols)]
        for a in rows:
            out.append(str(a).ljust(8) + "".join(cells.get((a, b), ".").rjust(width) for b in cols))
        out.append("(* = differs from formula)")
        return "\n".join(out) + "\n"


def _fmt(v: Any) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _set_text(s: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _partition_text(classes: Sequence[Iterable[int]]) -> str:
    return "|".join(_set_text(c) for c in classes)


# ------------------------------------------------------------------ graph sources


def random_graph(n: int, p: float, seed: int | random.Random) -> Graph:
    """G(n, p): each pair ``u < v`` in lexicographic order kept independently."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n > max_vertices():
        raise SizeLimitError(f"graph order {n} exceeds the configured limit {max_vertices()}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return new_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_bipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    """Random subgraph of K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    return new_graph(a + b, [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p])


def enumerate_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n)


def _is_complete_bipartite(g: Graph, a: int, b: int) -> bool:
    return g.n == a + b and g.m == a * b and is_isomorphic(g, complete_bipartite(a, b))


# ------------------------------------------------------------------ solver adapters


def _restrained(k: int) -> Variant:
    return Variant(k, restrained=True)


def _gamma_outcome(g: Graph, variant: Variant, prune: bool = True) -> tuple[int | None, str, bool | None]:
    res = gamma(g, variant, prune=prune)
    if not res.optimal:
        return None, "", None
    return res.value, _set_text(res.witness), check(g, res.witness, variant).holds


def _partition_ok(g: Graph, variant: Variant, res: DomaticResult) -> bool:
    seen = 0
    for c in res.witness:
        m = mask_of(c)
        if m & seen or not check(g, c, variant).holds:
            return False
        seen |= m
    return seen == g.full


def _domatic_outcome(g: Graph, variant: Variant) -> tuple[int | None, str, bool | None]:
    res = domatic(g, variant)
    if not res.optimal:
        return None, "", None
    return res.value, _partition_text(res.witness), _partition_ok(g, variant, res)


def _in(value: Any, predicted: Any) -> bool:
    if isinstance(predicted, Interval):
        return value in predicted
    return value == predicted


# ------------------------------------------------------------------ sweeps


@dataclass(frozen=True)
class SweepSpec:
    claim_id: str
    grid: dict[str, tuple] = field(default_factory=dict)
    cap: int | None = None
    seed: int = 0
    max_n: int | None = None

    def values(self, name: str, default: Iterable) -> tuple:
        return tuple(self.grid.get(name, tuple(default)))


@dataclass
class _Case:
    params: dict[str, Any]
    order: int
    solve: Callable[[], tuple[Any, str, bool | None]] | None = None
    # some preconditions need solver output; filled in lazily
    prepare: Callable[[dict[str, Any]], None] | None = None


def _row(claim_id: str, case: _Case) -> Row:
    claim = get_claim(claim_id)
    params = case.params
    if case.prepare is not None:
        case.prepare(params)
    shown = tuple((k, params[k]) for k in _display_keys(claim, params))
    if not claim.applicable(params):
        return Row(shown, "n/a", "", RowStatus.SKIPPED)
    predicted = claim.evaluate(params)
    value, witness, ok = case.solve()
    if value is None:
        return Row(shown, str(predicted), "infeasible", RowStatus.MISMATCH)
    status = RowStatus.MATCH if _in(value, predicted) else RowStatus.MISMATCH
    return Row(shown, _fmt(predicted), _fmt(value), status, witness, ok)


def _display_keys(claim: formulas.FormulaClaim, params: dict[str, Any]) -> list[str]:
    keys = [k for k in ("family", "n", "m", "parts", "ell", "k") if k in params]
    keys += [k for k in claim.params if k not in keys and k in params]
    if "edges" in params:
        keys.append("edges")
    return keys


def _cases_complete(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for n, k in itertools.product(spec.values("n", range(2, 11)), spec.values("k", range(1, 10))):
        g = complete(n)
        yield _Case({"n": n, "k": k}, n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def _cases_cycle(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for n, k in itertools.product(spec.values("n", range(3, 13)), spec.values("k", range(1, 4))):
        g = cycle(n)
        yield _Case({"n": n, "k": k}, n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def _cases_cycle_complement(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for n in spec.values("n", range(4, 13)):
        g = complement(cycle(n))
        yield _Case({"n": n}, n, lambda g=g: _gamma_outcome(g, _restrained(1)))


def _cases_cycle_complement_k(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for n, k in itertools.product(spec.values("n", range(5, 13)), spec.values("k", range(2, 10))):
        g = complement(cycle(n))
        yield _Case({"n": n, "k": k}, n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def _bipartite_params(g: Graph, a: int, b: int, k: int) -> dict[str, Any]:
    kk = k - 1
    return {"n": g.n, "parts": (a, b), "k": k, "min_degree": g.min_degree,
            "is_kk": _is_complete_bipartite(g, kk, kk)}


def _random_bipartite_cases(spec: SweepSpec, rng: random.Random) -> Iterator[tuple[Graph, int, int, int]]:
    orders = spec.values("n", range(2, 11))
    ks = spec.values("k", (2, 3))
    while True:
        n = rng.choice(orders)
        a = rng.randint(1, max(1, n // 2))
        b = n - a
        if b < 1:
            continue
        g = random_bipartite(a, b, rng.choice((0.4, 0.6, 0.8, 1.0)), rng)
        yield g, a, b, rng.choice(ks)


def _cases_bipartite(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for g, a, b, k in _random_bipartite_cases(spec, rng):
        yield _Case(_bipartite_params(g, a, b, k), g.n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def _cases_domatic_bipartite(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for g, a, b, k in _random_bipartite_cases(spec, rng):
        yield _Case(_bipartite_params(g, a, b, k), g.n, lambda g=g, k=k: _domatic_outcome(g, _restrained(k)))


def _cases_complete_bipartite(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    total = max(spec.values("total", (12,)))
    for n, m, k in itertools.product(spec.values("n", range(1, 12)), spec.values("m", range(1, 12)),
                                     spec.values("k", (2, 3))):
        if m > n or n + m > total:
            continue
        g = complete_bipartite(n, m)
        yield _Case({"n": n, "m": m, "k": k}, n + m, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of positive integers with the given sum and length."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _multipartite_cases(spec: SweepSpec) -> Iterator[tuple[tuple[int, ...], int, Graph]]:
    for total in spec.values("n", range(3, 11)):
        for p in spec.values("p", (3, 4)):
            for parts in partitions(total, p):
                for k in spec.values("k", (1, 2, 3)):
                    yield parts, k, complete_multipartite(parts)


def _cases_multipartite_lower(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for parts, k, g in _multipartite_cases(spec):
        params = {"n": g.n, "parts": parts, "k": k, "min_degree": g.min_degree}
        yield _Case(params, g.n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)))


def _cases_multipartite_upper(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for parts, k, g in _multipartite_cases(spec):
        params = {"n": g.n, "parts": parts, "k": k, "min_degree": g.min_degree}

        def prepare(p: dict[str, Any], g: Graph = g, parts: tuple = parts, k: int = k) -> None:
            res = gamma(g, _restrained(k))
            p["value"] = res.value if res.optimal else g.n
            p["t0"] = t0(PartitionSpec(parts), k) if res.optimal else None

        yield _Case(params, g.n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k)), prepare)


def _random_cases(spec: SweepSpec, rng: random.Random) -> Iterator[tuple[Graph, int]]:
    orders = spec.values("n", range(1, 11))
    ks = spec.values("k", (1, 2))
    while True:
        n = rng.choice(orders)
        g = random_graph(n, rng.random(), rng)
        yield g, rng.choice(ks)


def _cases_edge_bound(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for g, k in _random_cases(spec, rng):
        params = {"n": g.n, "m": g.m, "k": k, "min_degree": g.min_degree}
        # the pruned search starts at this very bound, so check unpruned
        yield _Case(params, g.n, lambda g=g, k=k: _gamma_outcome(g, _restrained(k), prune=False))


def _cases_edge_bound_k1(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for g, _ in _random_cases(spec, rng):
        yield _Case({"n": g.n, "m": g.m}, g.n, lambda g=g: _gamma_outcome(g, _restrained(1), prune=False))


def _cases_domatic_complete(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for n, k in itertools.product(spec.values("n", range(1, 10)), spec.values("k", (1, 2, 3))):
        g = complete(n)
        yield _Case({"n": n, "k": k}, n, lambda g=g, k=k: _domatic_outcome(g, _restrained(k)))


def _graph_source(spec: SweepSpec, rng: random.Random, default_max: int = 6) -> Iterator[Graph]:
    source = spec.grid.get("source", ("exhaustive",))[0]
    orders = spec.values("n", range(1, default_max + 1))
    if source == "exhaustive":
        for n in orders:
            yield from all_graphs(n)
    elif source == "random":
        while True:
            yield random_graph(rng.choice(orders), rng.random(), rng)
    else:
        raise ValueError(f"unknown graph source {source!r}")


def _cases_domatic_product(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    ks = spec.values("k", (1, 2))
    for g in _graph_source(spec, rng):
        for k in ks:
            def solve(g: Graph = g, k: int = k) -> tuple[Any, str, bool | None]:
                prof = invariant_profile(g, k)
                if prof.gamma_r is None:
                    return None, "", None
                return (prof.gamma_r * prof.d_r, f"gamma={prof.gamma_r} d={prof.d_r} "
                        f"classes={_partition_text(prof.d_r_classes)}", prof.witnesses_ok)
            yield _Case({"n": g.n, "m": g.m, "k": k, "min_degree": g.min_degree,
                         "edges": tuple(g.edges())}, g.n, solve)


def _cases_domatic_upper(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    ks = spec.values("k", (1, 2))
    for g in _graph_source(spec, rng):
        for k in ks:
            def solve(g: Graph = g, k: int = k) -> tuple[Any, str, bool | None]:
                prof = invariant_profile(g, k)
                if prof.d_r is None:
                    return None, "", None
                return prof.d_r, _partition_text(prof.d_r_classes), prof.witnesses_ok
            yield _Case({"n": g.n, "m": g.m, "k": k, "min_degree": g.min_degree,
                         "edges": tuple(g.edges())}, g.n, solve)


REGULAR_FAMILIES: dict[str, Callable[[int], Graph]] = {
    "cycle": cycle,
    "complete": complete,
    "edgeless": empty,
    "matching": perfect_matching,
    "cycle-complement": lambda n: complement(cycle(n)),
}


def _family_graph(family: str, n: int) -> Graph | None:
    try:
        builder = REGULAR_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(REGULAR_FAMILIES)}") from None
    try:
        return builder(n)
    except ValueError:
        return None


def _regular_prism_cases(spec: SweepSpec) -> Iterator[tuple[str, int, int, Graph]]:
    families = spec.values("family", REGULAR_FAMILIES)
    for family in families:
        for n in spec.values("n", range(1, 11)):
            g = _family_graph(family, n)
            if g is None or (family == "cycle-complement" and n < 5):
                continue
            for k in spec.values("k", range(2, 6)):
                yield family, n, k, g


def _cases_prism_regular(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for family, n, k, g in _regular_prism_cases(spec):
        params = {"family": family, "n": n, "ell": g.max_degree, "k": k}
        yield _Case(params, 2 * n, lambda g=g, k=k: _gamma_outcome(complementary_prism(g), _restrained(k)))


def _cases_prism_regular_equality(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    for family, n, k, g in _regular_prism_cases(spec):
        params = {"family": family, "n": n, "ell": g.max_degree, "k": k}

        def prepare(p: dict[str, Any], g: Graph = g, k: int = k) -> None:
            p["has_t"] = prism_t_subset(g, k) is not None

        def solve(g: Graph = g, k: int = k) -> tuple[Any, str, bool | None]:
            value, witness, ok = _gamma_outcome(complementary_prism(g), _restrained(k))
            if value is None:
                return None, "", None
            return value == g.n + k, f"value={value} {witness}", ok

        yield _Case(params, 2 * n, solve, prepare)


def _cases_prism_cycle(k: int, default: range) -> Callable[[SweepSpec, random.Random], Iterator[_Case]]:
    def cases(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
        for n in spec.values("n", default):
            p = complementary_prism(cycle(n))
            yield _Case({"n": n, "k": k}, 2 * n, lambda p=p: _gamma_outcome(p, _restrained(k)))
    return cases


def _cases_prism_sandwich(spec: SweepSpec, rng: random.Random) -> Iterator[_Case]:
    families = spec.values("family", ("cycle",))
    for family in families:
        for n in spec.values("n", range(5, 9)):
            if family == "random":
                g = random_graph(n, rng.random(), rng)
            else:
                g = _family_graph(family, n)
                if g is None:
                    continue
            gbar = complement(g)
            for k in spec.values("k", (2, 3)):
                params = {"family": family, "n": n, "k": k,
                          "min_degree_both": min(g.min_degree, gbar.min_degree)}

                def prepare(p: dict[str, Any], g: Graph = g, gbar: Graph = gbar, k: int = k) -> None:
                    if p["min_degree_both"] < k - 1:
                        return
                    p["g_k"] = gamma(g, _restrained(k)).value
                    p["gbar_k"] = gamma(gbar, _restrained(k)).value
                    if k >= 2:
                        p["g_km1"] = gamma(g, _restrained(k - 1)).value
                        p["gbar_km1"] = gamma(gbar, _restrained(k - 1)).value

                yield _Case(params, 2 * n,
                            lambda g=g, k=k: _gamma_outcome(complementary_prism(g), _restrained(k)),
                            prepare)


_CASES: dict[str, tuple[Callable[[SweepSpec, random.Random], Iterator[_Case]], int | None]] = {
    # claim id -> (instance generator, default applicable-instance cap for random sources)
    "complete": (_cases_complete, None),
    "cycle": (_cases_cycle, None),
    "cycle-complement": (_cases_cycle_complement, None),
    "cycle-complement-k": (_cases_cycle_complement_k, None),
    "bipartite": (_cases_bipartite, 200),
    "bipartite-non-kk": (_cases_bipartite, 200),
    "complete-bipartite": (_cases_complete_bipartite, None),
    "multipartite-lower": (_cases_multipartite_lower, None),
    "multipartite-upper": (_cases_multipartite_upper, None),
    "edge-bound": (_cases_edge_bound, 200),
    "edge-bound-k1": (_cases_edge_bound_k1, 200),
    "domatic-complete": (_cases_domatic_complete, None),
    "domatic-product": (_cases_domatic_product, None),
    "domatic-upper": (_cases_domatic_upper, None),
    "domatic-bipartite": (_cases_domatic_bipartite, 200),
    "prism-regular": (_cases_prism_regular, None),
    "prism-regular-equality": (_cases_prism_regular_equality, None),
    "prism-cycle-k2": (_cases_prism_cycle(2, range(4, 11)), None),
    "prism-cycle-k3": (_cases_prism_cycle(3, range(5, 11)), None),
    "prism-sandwich": (_cases_prism_sandwich, None),
}

_RANDOM_SOURCES = {"bipartite", "bipartite-non-kk", "edge-bound", "edge-bound-k1", "domatic-bipartite"}


def sweep(spec: SweepSpec) -> Report:
    """Evaluate one claim over its instance grid.

    Grid-driven claims run every grid point (inapplicable points are counted
    as skipped).  Random-source claims draw until ``cap`` applicable
    instances have been checked; rejected draws count as skipped.
    """
    claim = get_claim(spec.claim_id)
    gen, default_cap = _CASES[claim.id]
    limit = spec.max_n if spec.max_n is not None else max_vertices()
    if limit > max_vertices():
        raise SizeLimitError(f"max_n={limit} exceeds the configured limit {max_vertices()}")
    rng = random.Random(spec.seed)
    report = Report(claim.id)
    is_random = claim.id in _RANDOM_SOURCES or spec.grid.get("source", ("",))[0] == "random"
    cap = spec.cap if spec.cap is not None else (default_cap if is_random else None)
    if is_random and cap is None:
        cap = 200
    applicable = 0
    draws = 0
    for case in gen(spec, rng):
        if case.order > limit:
            continue
        row = _row(claim.id, case)
        report.rows.append(row)
        draws += 1
        if row.status is not RowStatus.SKIPPED:
            applicable += 1
        if cap is not None and applicable >= cap:
            break
        if is_random and draws >= 100 * cap:
            break
    return report


def claim_ids() -> list[str]:
    return list(_CASES)


# ------------------------------------------------------------------ invariant profiles


@dataclass(frozen=True)
class Profile:
    """Every invariant the observation and implication checks need, for one (G, k).

    Domatic numbers of infeasible types are reported as 0.
    """

    n: int
    k: int
    delta: int
    max_deg: int
    d: int
    d_t: int
    d_r: int
    d_tr: int
    d_star: int
    gamma: int | None
    gamma_r: int | None
    gamma_r_witness: frozenset[int] | None
    d_r_classes: tuple[frozenset[int], ...]
    witnesses_ok: bool


@functools.lru_cache(maxsize=1 << 17)
def invariant_profile(g: Graph, k: int) -> Profile:
    plain, total = Variant(k), Variant(k, total=True)
    restr, total_r = Variant(k, restrained=True), Variant(k, total=True, restrained=True)
    results = {v: domatic(g, v) for v in (plain, total, restr, total_r)}
    ok = all(_partition_ok(g, v, r) for v, r in results.items() if r.optimal)
    star = star_domatic(g, plain)
    if star.optimal:
        ok = ok and _partition_ok(g, plain, star)
    gp = gamma(g, plain)
    gr = gamma(g, restr)
    if gp.optimal:
        ok = ok and check(g, gp.witness, plain).holds
    if gr.optimal:
        ok = ok and check(g, gr.witness, restr).holds
    return Profile(
        n=g.n, k=k, delta=g.min_degree, max_deg=g.max_degree,
        d=results[plain].value, d_t=results[total].value,
        d_r=results[restr].value if results[restr].optimal else None,
        d_tr=results[total_r].value,
        d_star=star.value if star.optimal else 0,
        gamma=gp.value, gamma_r=gr.value, gamma_r_witness=gr.witness,
        d_r_classes=results[restr].witness,
        witnesses_ok=ok,
    )


def _value(x: int | None) -> int:
    return 0 if x is None else x


def check_observation_chain(g: Graph, k: int) -> Report:
    """Evaluate the five basic observations on one graph.

    Chains (i) and (ii) compare domatic numbers, counting infeasible types
    as 0; (iii)-(v) are skipped when their hypothesis is vacuous.
    """
    prof = invariant_profile(g, k)
    report = Report("observation-chain")
    base = (("n", g.n), ("m", g.m), ("k", k), ("edges", tuple(g.edges())))
    d_r = _value(prof.d_r)

    def add(clause: str, hypothesis: bool, holds: bool, formula: str, solver: str,
            witness: str = "", witness_ok: bool | None = None) -> None:
        status = RowStatus.SKIPPED if not hypothesis else (RowStatus.MATCH if holds else RowStatus.MISMATCH)
        report.rows.append(Row(base + (("clause", clause),), formula, solver, status, witness, witness_ok))

    add("i", True, prof.d_tr <= d_r <= prof.d, "d_tr<=d_r<=d", f"{prof.d_tr}<={d_r}<={prof.d}")
    add("ii", True, prof.d_tr <= prof.d_t <= prof.d, "d_tr<=d_t<=d", f"{prof.d_tr}<={prof.d_t}<={prof.d}")
    feasible = g.n > 0 and prof.delta >= k - 1
    add("iii", feasible and prof.delta <= 2 * k - 1, d_r == 1, "d_r=1", str(d_r))
    # unpruned search: the pruned one relies on this very observation
    unpruned = gamma(g, _restrained(k), prune=False)
    hyp_iv = unpruned.optimal and unpruned.value < g.n
    holds_iv = hyp_iv and (prof.max_deg >= 2 * k and unpruned.value <= g.n - k - 1 and g.n >= 2 * k + 1)
    add("iv", hyp_iv, holds_iv, f"Delta>={2 * k},gamma_r<={g.n - k - 1},n>={2 * k + 1}",
        f"Delta={prof.max_deg},gamma_r={unpruned.value}",
        _set_text(unpruned.witness) if unpruned.optimal else "",
        check(g, unpruned.witness, _restrained(k)).holds if unpruned.optimal else None)
    low = [v for v in range(g.n) if g.degree(v) <= 2 * k - 1]
    holds_v, bad = True, ""
    if feasible and low:
        for s in all_qualifying_sets(g, _restrained(k)):
            for v in low:
                if v not in s or len(g.neighbors(v) & s) < k - 1:
                    holds_v, bad = False, _set_text(s)
                    break
            if not holds_v:
                break
    add("v", feasible and bool(low), holds_v, "low-degree vertices forced", "ok" if holds_v else "violated", bad)
    return report


def domatic_equality_shape(g: Graph, k: int) -> bool | None:
    """When the domatic number reaches n/k, is G = K_k or F joined to a K_k core?

    ``None`` when the bound is not attained.  Only this direction is tested:
    K_{2k+1} has the joined shape yet its domatic number is 1.
    """
    prof = invariant_profile(g, k)
    if prof.d_r is None or prof.d_r * k != g.n:
        return None
    if g.n == k and g.m == k * (k - 1) // 2:
        return True
    if prof.gamma_r != k:
        return False
    core = prof.gamma_r_witness
    if any(len(g.neighbors(v) & core) != k - 1 for v in core):
        return False
    return decomposition_holds(g, k, Decomposition(core, frozenset(range(g.n)) - core))


def has_join_shape(g: Graph, k: int) -> bool:
    """Is G = K_k, or F with min degree >= k and every F-vertex joined to all of a K_k core?"""
    if g.n == k and g.m == k * (k - 1) // 2:
        return True
    if g.n <= k:
        return False
    for core in itertools.combinations(range(g.n), k):
        cmask = mask_of(core)
        # closed neighbourhoods containing the core: core is a clique and everyone sees all of it
        if not all((g.adj[v] | 1 << v) & cmask == cmask for v in range(g.n)):
            continue
        rest = g.full & ~cmask
        if all((g.adj[v] & rest).bit_count() >= k for v in range(g.n) if rest >> v & 1):
            return True
    return False


IMPLICATIONS = (
    "restrained-domatic-equality",
    "restrained-domatic-equality-k1",
    "star-domatic-gamma-equality",
    "total-restrained-domatic-equality",
)


def _implication_rows(g: Graph, k: int) -> list[tuple[str, bool, bool, str, str]]:
    prof = invariant_profile(g, k)
    feasible = g.n > 0 and prof.delta >= k - 1
    out = []
    # (d_k, d_k,t) != (2, 1)  =>  d_k^r = d_k
    hyp = feasible and (prof.d, prof.d_t) != (2, 1)
    out.append(("restrained-domatic-equality", hyp, _value(prof.d_r) == prof.d,
                "d_r=d", f"d={prof.d} d_t={prof.d_t} d_r={_value(prof.d_r)}"))
    if k == 1:
        out.append(("restrained-domatic-equality-k1", hyp, _value(prof.d_r) == prof.d,
                    "d_r=d", f"d={prof.d} d_t={prof.d_t} d_r={_value(prof.d_r)}"))
    # k >= 2, star k-tuple domatic >= 3  =>  gamma_k^r = gamma_k
    hyp = feasible and k >= 2 and prof.d_star >= 3
    out.append(("star-domatic-gamma-equality", hyp, prof.gamma_r == prof.gamma,
                "gamma_r=gamma", f"d_star={prof.d_star} gamma={prof.gamma} gamma_r={prof.gamma_r}"))
    # delta >= k  =>  d_k,t^r = d_k,t
    hyp = g.n > 0 and prof.delta >= k
    out.append(("total-restrained-domatic-equality", hyp, prof.d_tr == prof.d_t,
                "d_tr=d_t", f"d_t={prof.d_t} d_tr={prof.d_tr}"))
    return out


def check_implications(
    source: str = "enumeration",
    k_range: Iterable[int] = (1, 2),
    max_n: int = 6,
    count: int = 200,
    seed: int = 0,
    graphs: Iterable[Graph] | None = None,
) -> dict[str, Report]:
    """Hypothesis/conclusion check of the domatic implication theorems.

    Vacuous hypotheses are recorded as skipped rows; a violated conclusion
    is a mismatch row.
    """
    if graphs is None:
        if source == "enumeration":
            graphs = enumerate_graphs(max_n)
        elif source == "random":
            rng = random.Random(seed)
            graphs = (random_graph(rng.randint(1, max_n), rng.random(), rng) for _ in range(count))
        else:
            raise ValueError(f"unknown graph source {source!r}")
    reports = {name: Report(name) for name in IMPLICATIONS}
    ks = tuple(k_range)
    for g in graphs:
        edges = tuple(g.edges())
        for k in ks:
            for name, hyp, concl, formula, solver in _implication_rows(g, k):
                status = RowStatus.SKIPPED if not hyp else (RowStatus.MATCH if concl else RowStatus.MISMATCH)
                reports[name].rows.append(
                    Row((("n", g.n), ("k", k), ("edges", edges)), formula, solver, status))
    return reports


def example48_report() -> Report:
    """Checks on the bundled 16-vertex instance (labels shifted to 0-based)."""
    from .graph import example48, example48_domatic_classes
    from .solvers import all_min_sets

    g = example48()
    rep = Report("example48")
    plain, restr = Variant(1), Variant(1, restrained=True)
    mins = all_min_sets(g, plain)
    gp = gamma(g, plain)
    rep.rows.append(Row((("quantity", "gamma"),), "3", str(gp.value),
                        RowStatus.MATCH if gp.value == 3 else RowStatus.MISMATCH,
                        _set_text(gp.witness), check(g, gp.witness, plain).holds))
    unique = mins == [frozenset({1, 2, 3})]
    rep.rows.append(Row((("quantity", "unique-min-dominating-set"),), "{1,2,3}",
                        "|".join(_set_text(s) for s in mins),
                        RowStatus.MATCH if unique else RowStatus.MISMATCH))
    gr = gamma(g, restr)
    rep.rows.append(Row((("quantity", "gamma_r"),), "4", str(gr.value),
                        RowStatus.MATCH if gr.value == 4 else RowStatus.MISMATCH,
                        _set_text(gr.witness), check(g, gr.witness, restr).holds))
    published = frozenset({2, 3, 4, 5})
    verdict = check(g, published, restr)
    rmins = all_min_sets(g, restr)
    rep.rows.append(Row((("quantity", "published-rds-is-minimum"),), _set_text(published),
                        "among minimum sets" if published in rmins else
                        f"fails at vertices {_set_text(verdict.failing_vertices)}",
                        RowStatus.MATCH if published in rmins else RowStatus.MISMATCH))
    classes = example48_domatic_classes()
    disjoint = sum(len(c) for c in classes) == len(frozenset().union(*classes))
    each = all(check(g, c, plain).holds for c in classes)
    rep.rows.append(Row((("quantity", "three-disjoint-dominating-sets"),), "yes",
                        "yes" if disjoint and each else "no",
                        RowStatus.MATCH if disjoint and each else RowStatus.MISMATCH,
                        _partition_text(classes), each))
    d = domatic(g, plain)
    rep.rows.append(Row((("quantity", "domatic"),), ">=3", str(d.value),
                        RowStatus.MATCH if d.value >= 3 else RowStatus.MISMATCH,
                        _partition_text(d.witness), _partition_ok(g, plain, d)))
    return rep
