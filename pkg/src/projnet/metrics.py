"""Distance and link-load analysis under uniform traffic with ideal minimal routing.

Every ordered pair (s, t) of scoped vertices sends one unit, split evenly over
all shortest s->t paths.  Loads are accumulated one source at a time with the
usual forward (path counts) / backward (dependency) sweep.  Targets are
grouped by their path count c, which keeps the sweep in integers:

    P_c(v) = [v is a target with sigma(v) = c] + sum over DAG children x of P_c(x)
    load(u -> v) = sigma(u) * sum_c P_c(v) / c

Per-class numerators are summed over sources and only divided out at the end.

All of it is integer arithmetic, so results do not depend on worker count or
summation order.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .topology import Topology

INT64_SAFE = 2**62


class MetricsError(ValueError):
    pass


# -- scope -------------------------------------------------------------------------

@dataclass(frozen=True)
class TrafficScope:
    mode: str = "all-pairs"  # or "leaf-to-leaf"

    def __post_init__(self):
        if self.mode not in ("all-pairs", "leaf-to-leaf"):
            raise MetricsError(f"unknown traffic scope {self.mode!r}")

    def terminals(self, G: Topology) -> list[int]:
        if self.mode == "all-pairs":
            return list(range(G.N))
        if not G.has_spines:
            raise MetricsError("leaf-to-leaf scope needs a topology with spine routers")
        return G.leaves


ALL_PAIRS = TrafficScope("all-pairs")
LEAF_TO_LEAF = TrafficScope("leaf-to-leaf")


def scope_from_name(name: str) -> TrafficScope:
    return {"all": ALL_PAIRS, "all-pairs": ALL_PAIRS, "leaf": LEAF_TO_LEAF,
            "leaf-to-leaf": LEAF_TO_LEAF}[name]


# -- CSR view ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class _CSR:
    indptr: np.ndarray
    arc_src: np.ndarray
    arc_dst: np.ndarray

    @classmethod
    def of(cls, G: Topology) -> "_CSR":
        deg = np.array([len(a) for a in G.adjacency], dtype=np.int64)
        indptr = np.zeros(G.N + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        dst = np.fromiter((v for nb in G.adjacency for v in nb), dtype=np.int64, count=int(indptr[-1]))
        src = np.repeat(np.arange(G.N, dtype=np.int64), deg)
        return cls(indptr, src, dst)


def _segment_sum(values: np.ndarray, indptr: np.ndarray) -> np.ndarray:
    """Sum ``values`` (one per arc, grouped by source vertex) per vertex."""
    out = np.zeros((len(indptr) - 1,) + values.shape[1:], dtype=values.dtype)
    nz = indptr[1:] > indptr[:-1]
    out[nz] = np.add.reduceat(values, indptr[:-1][nz])
    return out


@dataclass
class _SourceResult:
    dist: np.ndarray
    sigma: np.ndarray
    classes: np.ndarray  # distinct target path counts c
    arcs: np.ndarray  # indices of the shortest-path DAG arcs
    arc_num: np.ndarray  # (len(arcs), classes): arc load is sum_c arc_num[:, c] / c
    bound: int = 0  # upper bound on arc_num entries


def _single_source(csr: _CSR, s: int, target_mask: np.ndarray, want_loads: bool = True) -> _SourceResult:
    """BFS from ``s`` plus exact backward accumulation of arc loads.

    Targets are grouped by their shortest-path count c.  For each group,
    P_c(v) counts the v->t shortest paths over targets t in the group; the
    load of a DAG arc u->v is then sigma(u) * sum_c P_c(v) / c, so everything
    stays in integers without a per-source common denominator.
    """
    n = len(csr.indptr) - 1
    src, dst = csr.arc_src, csr.arc_dst
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.int64)
    dist[s] = 0
    sigma[s] = 1
    d = 0
    while True:
        sel = dist[src] == d
        cand = dst[sel]
        fresh = dist[cand] < 0
        if not fresh.any():
            break
        nxt = np.unique(cand[fresh])
        dist[nxt] = d + 1
        tree = sel & (dist[dst] == d + 1)
        # path counts are small integers; float accumulation is exact below 2**53
        sig = np.bincount(dst[tree], weights=sigma[src[tree]].astype(np.float64), minlength=n)
        if sig.max() >= 2**53:
            raise MetricsError("shortest-path counts exceed exact float range")
        sigma[nxt] = sig[nxt].astype(np.int64)
        d += 1
    if not want_loads:
        empty = np.zeros(0, dtype=np.int64)
        return _SourceResult(dist, sigma, empty, empty, np.zeros((0, 0), dtype=np.int64))

    tmask = target_mask.copy()
    tmask[s] = False
    if (dist[tmask] < 0).any():
        raise MetricsError("scope is disconnected")
    targets = np.flatnonzero(tmask)
    classes, which = np.unique(sigma[targets], return_inverse=True)
    # P_c(v) <= paths from v to all targets <= n * max sigma
    dtype = object if n * int(sigma.max()) ** 2 >= INT64_SAFE else np.int64
    P = np.zeros((n, len(classes)), dtype=dtype)
    P[targets, which] = 1
    dag = np.flatnonzero(dist[dst] == dist[src] + 1)  # sorted by source vertex
    level_of = dist[src[dag]]
    for level in range(d - 1, -1, -1):
        # children of vertices at ``level`` live at level+1 and are final
        idx = dag[level_of == level]
        if not len(idx):
            continue
        heads = src[idx]
        starts = np.flatnonzero(np.r_[True, heads[1:] != heads[:-1]])
        P[heads[starts]] += np.add.reduceat(P[dst[idx]], starts, axis=0)
    arc_num = sigma[src[dag]].astype(dtype)[:, None] * P[dst[dag]]
    bound = int(sigma.max()) * n * int(sigma.max())
    return _SourceResult(dist, sigma, classes, dag, arc_num, bound)


# -- the report ---------------------------------------------------------------------

def _frac_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "value": round(float(x), 4)}


@dataclass
class MetricsReport:
    """Exact distance/load summary of one topology under one traffic scope."""

    family: str
    params: dict
    scope: str
    W: dict[int, int]                 # distance -> ordered pair count
    k: int
    kbar: Fraction
    arc_loads: dict[tuple[int, int], Fraction] | None = field(default=None, repr=False)
    u: Fraction | None = None
    Delta: int = 0
    load_by_class: dict[str, Fraction] | None = None
    per_source_W: dict[tuple[int, ...], int] | None = field(default=None, repr=False)

    @property
    def a(self) -> Fraction | None:
        """Accepted load per router at saturation, Delta * u / kbar."""
        if self.u is None:
            return None
        return self.Delta * self.u / self.kbar

    @property
    def kbar_over_u(self) -> Fraction | None:
        return None if self.u is None else self.kbar / self.u

    def to_dict(self) -> dict:
        d = {
            "schema": 1,
            "family": self.family,
            "params": self.params,
            "scope": self.scope,
            "W": {str(t): c for t, c in sorted(self.W.items())},
            "k": self.k,
            "kbar": _frac_json(self.kbar),
            "Delta": self.Delta,
        }
        if self.u is not None:
            d["u"] = _frac_json(self.u)
            d["a"] = _frac_json(self.a)
            d["kbar_over_u"] = _frac_json(self.kbar_over_u)
            loads = list(self.arc_loads.values())
            d["arc_load_max"] = _frac_json(max(loads))
            d["arc_load_min"] = _frac_json(min(loads))
        if self.load_by_class:
            d["load_by_class"] = {c: _frac_json(v) for c, v in sorted(self.load_by_class.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def w_csv(self) -> str:
        return "t,W\n" + "".join(f"{t},{c}\n" for t, c in sorted(self.W.items()))

    def load_histogram_csv(self) -> str:
        hist = defaultdict(int)
        for v in self.arc_loads.values():
            hist[v] += 1
        rows = "".join(f"{x.numerator}/{x.denominator},{float(x):.4f},{c}\n" for x, c in sorted(hist.items()))
        return "load,load_float,arcs\n" + rows


def analyze(G: Topology, scope: TrafficScope = ALL_PAIRS, loads: bool = True,
            threads: int = 1, per_source: bool = False) -> MetricsReport:
    """Exact W(t), diameter, average distance and (optionally) arc loads and u."""
    terminals = scope.terminals(G)
    if len(terminals) < 2:
        raise MetricsError("need at least two terminals")
    csr = _CSR.of(G)
    mask = np.zeros(G.N, dtype=bool)
    mask[terminals] = True
    m = len(csr.arc_src)

    def run(chunk):
        W = defaultdict(int)
        per_src = defaultdict(int)
        buckets: dict[int, np.ndarray] = {}
        bounds: dict[int, int] = defaultdict(int)
        for s in chunk:
            res = _single_source(csr, s, mask, want_loads=loads)
            dt = res.dist[mask]
            if (dt < 0).any():
                raise MetricsError("scope is disconnected")
            counts = np.bincount(dt)
            counts[0] -= 1  # the source itself
            for t, c in enumerate(counts):
                if c:
                    W[t] += int(c)
            if per_source:
                per_src[tuple(int(c) for c in counts)] += 1
            if loads:
                for j, c in enumerate(res.classes.tolist()):
                    acc = buckets.get(c)
                    if acc is None:
                        acc = buckets[c] = np.zeros(m, dtype=np.int64)
                    bounds[c] += res.bound
                    if acc.dtype != object and (bounds[c] >= INT64_SAFE or res.arc_num.dtype == object):
                        acc = buckets[c] = acc.astype(object)
                    acc[res.arcs] += res.arc_num[:, j]
        return W, per_src, buckets

    if threads > 1:
        chunks = [terminals[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(run, chunks))
    else:
        parts = [run(terminals)]

    W = defaultdict(int)
    per_src = defaultdict(int)
    buckets = defaultdict(list)
    for w, ps, b in parts:
        for t, c in w.items():
            W[t] += c
        for key, c in ps.items():
            per_src[key] += c
        for L, arr in b.items():
            buckets[L].append(arr)
    W.pop(0, None)
    W = dict(sorted(W.items()))
    n = len(terminals)
    total = sum(t * c for t, c in W.items())
    kbar = Fraction(total, n * (n - 1))
    k = max(W)
    report = MetricsReport(family=G.family, params=dict(G.params), scope=scope.mode, W=W, k=k,
                           kbar=kbar, Delta=G.max_degree,
                           per_source_W=dict(per_src) if per_source else None)
    if not loads:
        return report

    den = 1
    for L in buckets:
        den = math.lcm(den, L)
    num = np.zeros(m, dtype=object)
    for L, arrs in sorted(buckets.items()):
        acc = arrs[0].astype(object)
        for arr in arrs[1:]:
            acc = acc + arr.astype(object)
        num = num + acc * (den // L)
    src, dst = csr.arc_src.tolist(), csr.arc_dst.tolist()
    nums = num.tolist()
    report.arc_loads = {(a, b): Fraction(x, den) for a, b, x in zip(src, dst, nums)}
    mx = max(nums)
    report.u = Fraction(sum(nums), m * mx)
    if G.edge_class:
        by_class = defaultdict(int)
        for a, b, x in zip(src, dst, nums):
            by_class[G.edge_class[(min(a, b), max(a, b))]] += x
        report.load_by_class = {c: Fraction(v, den) for c, v in by_class.items()}
    return report


def distance_metrics(G: Topology, scope: TrafficScope = ALL_PAIRS):
    rep = analyze(G, scope, loads=False)
    return rep.W, rep.k, rep.kbar


def arc_loads(G: Topology, scope: TrafficScope = ALL_PAIRS, threads: int = 1):
    return analyze(G, scope, threads=threads).arc_loads


def utilization(G: Topology, scope: TrafficScope = ALL_PAIRS, threads: int = 1) -> Fraction:
    return analyze(G, scope, threads=threads).u


# -- brute force oracle -------------------------------------------------------------

def brute_force_arc_loads(G: Topology, scope: TrafficScope = ALL_PAIRS) -> dict[tuple[int, int], Fraction]:
    """Enumerate every shortest path explicitly (small graphs only)."""
    terminals = scope.terminals(G)
    adj = G.adjacency
    loads = {(u, v): Fraction(0) for u in range(G.N) for v in adj[u]}
    for s in terminals:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        for t in terminals:
            if t == s:
                continue
            if t not in dist:
                raise MetricsError("scope is disconnected")
            paths = []
            stack = [(s, [s])]
            while stack:
                u, path = stack.pop()
                if u == t:
                    paths.append(path)
                    continue
                for v in adj[u]:
                    if dist.get(v) == dist[u] + 1 and dist[v] <= dist[t]:
                        stack.append((v, path + [v]))
            share = Fraction(1, len(paths))
            for path in paths:
                for a, b in zip(path, path[1:]):
                    loads[(a, b)] += share
    return loads


# -- Moore bounds and friends ----------------------------------------------------------

def moore_bound(Delta: int, k: int) -> int:
    if Delta <= 2:
        raise MetricsError("Moore bound formula requires Delta >= 3")
    if k < 1:
        raise MetricsError("diameter must be >= 1")
    return (Delta * (Delta - 1) ** k - 2) // (Delta - 2)


def generalized_moore_distribution(Delta: int, k: int, N: int) -> list[int]:
    """W(0..k) of a generalized Moore graph: full layers up to k-1, rest at k."""
    W = [1] + [Delta * (Delta - 1) ** (t - 1) for t in range(1, k)]
    W.append(N - sum(W))
    return W


def generalized_moore_check(G: Topology) -> bool:
    degs = G.degree_counts()
    if len(degs) != 1:
        raise MetricsError("generalized Moore check needs a regular graph")
    Delta = next(iter(degs))
    rep = analyze(G, ALL_PAIRS, loads=False, per_source=True)
    k = rep.k
    target = generalized_moore_distribution(Delta, k, G.N)
    if target[-1] <= 0:
        return False
    target[0] = 0  # per-source counts exclude the source
    return all(list(w) == target for w in rep.per_source_W)


def gm_avg_distance_approx(Delta: int, k: int, N: int) -> float:
    if N <= Delta ** (k - 1) or k < 1:
        raise MetricsError("approximation needs N > Delta^(k-1)")
    return k - Delta ** (k - 1) / N


def terminal_bound(R: float, k: int, kbar: float) -> float:
    if kbar >= k:
        raise MetricsError("terminal bound needs kbar < k")
    return R**k * kbar ** (k - 1) / ((k - kbar) * (kbar + 1) ** k)


def indirect_leaf_bound(Delta: int, delta: int, R: int) -> int:
    if not 0 <= delta <= Delta <= R:
        raise MetricsError("indirect leaf bound needs 0 <= delta <= Delta <= R")
    return 1 + delta * delta + (Delta - delta) * (R - 1)


def check_report(rep: MetricsReport, n_terminals: int) -> None:
    """Internal invariants; raises ``AssertionError`` (CLI exit code 3)."""
    assert sum(rep.W.values()) == n_terminals * (n_terminals - 1), "W does not sum to pair count"
    if rep.arc_loads is not None:
        total = sum(rep.arc_loads.values())
        assert total == sum(t * c for t, c in rep.W.items()), "flow conservation violated"
        assert 0 < rep.u <= 1



def dragonfly_hierarchical(G: Topology) -> MetricsReport:
    """Dragonfly under local-global-local minimal routing.

    Traffic between groups uses the unique global link joining them, with one
    local hop at either end when the endpoint is not the link's router.
    """
    if G.family != "dragonfly" or not G.edge_class:
        raise MetricsError("hierarchical routing is defined for dragonfly topologies")
    a = 2 * G.params["h"]
    n_groups = G.N // a
    gateway = {}
    for (u, v), c in G.edge_class.items():
        if c == "global":
            gateway[(u // a, v // a)] = (u, v)
            gateway[(v // a, u // a)] = (v, u)
    loads = {(u, v): 0 for u in range(G.N) for v in G.adjacency[u]}
    W = defaultdict(int)
    for (u, v), c in G.edge_class.items():
        if c == "local":
            loads[(u, v)] += 1
            loads[(v, u)] += 1
    W[1] += n_groups * a * (a - 1)
    for (ga, gb), (x, y) in gateway.items():
        loads[(x, y)] += a * a
        for s in range(ga * a, ga * a + a):
            if s != x:
                loads[(s, x)] += a
        for d in range(gb * a, gb * a + a):
            if d != y:
                loads[(y, d)] += a
        # (s == x) + (d == y) combinations: lengths 1, 2, 2, 3
        W[1] += 1
        W[2] += 2 * (a - 1)
        W[3] += (a - 1) ** 2
    W = dict(sorted(W.items()))
    n = G.N
    kbar = Fraction(sum(t * c for t, c in W.items()), n * (n - 1))
    arc = {key: Fraction(v) for key, v in loads.items()}
    vals = list(loads.values())
    u = Fraction(sum(vals), len(vals) * max(vals))
    by_class = defaultdict(int)
    for (x, y), v in loads.items():
        by_class[G.edge_class[(min(x, y), max(x, y))]] += v
    return MetricsReport(family=G.family, params=dict(G.params), scope="all-pairs", W=W, k=max(W),
                         kbar=kbar, arc_loads=arc, u=u, Delta=G.max_degree,
                         load_by_class={c: Fraction(v) for c, v in by_class.items()})
