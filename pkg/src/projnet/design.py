"""Dimensioning, cable layout and pricing of a network design."""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from .geometry import plane_points, point_index, subplane_lines, subplane_partition
from .field import field_of_order, prime_power
from .metrics import (ALL_PAIRS, LEAF_TO_LEAF, MetricsReport, analyze, dragonfly_hierarchical,
                      terminal_bound)
from .topology import SPINE, Topology, build, expected_params, mms_epsilon

SUBSCRIPTION_LIMIT = Fraction(1005, 1000)


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class CostConfig:
    link_rate: float = 40.0              # Gbps
    electrical_cost: float = 0.985       # $/Gbps
    optical_cost: float = 7.7432         # $/Gbps
    router_cost_slope: float = 350.4     # $/port
    router_cost_intercept: float = -892.3
    port_power: float = 2.8              # W/port
    target_group_size: int = 500         # compute nodes per electrical group

    def __post_init__(self):
        for name in ("link_rate", "electrical_cost", "optical_cost", "router_cost_slope",
                     "port_power", "target_group_size"):
            if not getattr(self, name) > 0:
                raise DesignError(f"{name} must be positive")

    def router_cost(self, R: int) -> float:
        return self.router_cost_slope * R + self.router_cost_intercept

    @classmethod
    def preset(cls, name: str) -> "CostConfig":
        try:
            return PRESETS[name]
        except KeyError:
            raise DesignError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None

    @classmethod
    def from_file(cls, path) -> "CostConfig":
        """Plain ``key = value`` lines; ``preset = ref-25k`` selects a base."""
        base = cls()
        values = {}
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DesignError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key == "preset":
                base = cls.preset(val)
                continue
            if key not in cls.__dataclass_fields__:
                raise DesignError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = int(val) if key == "target_group_size" else float(val)
        return replace(base, **values)


PRESETS = {
    "ref-10k": CostConfig(),
    "ref-25k": CostConfig(optical_cost=7.9178),
}


# -- dimensioning --------------------------------------------------------------------

def transit_capacity(G: Topology) -> int:
    """Ports per terminal-bearing router available to transit traffic.

    Direct networks: the degree.  Indirect networks: 2*Delta - delta, with
    Delta the leaf degree and delta its leaf-to-leaf links.
    """
    if not G.has_spines:
        return G.max_degree
    leaves = G.leaves
    is_leaf = set(leaves)
    Delta = max(G.degree(v) for v in leaves)
    delta = max(sum(1 for w in G.adjacency[v] if w in is_leaf) for v in leaves)
    return 2 * Delta - delta


def subscription(Delta0: int, kbar, u, capacity: int) -> Fraction:
    return Fraction(Delta0) * Fraction(kbar) / (capacity * Fraction(u))


def dimension(kbar, u, capacity: int, policy=None,
              limit: Fraction = SUBSCRIPTION_LIMIT) -> tuple[int, Fraction]:
    """Terminals per router and resulting subscription factor.

    Default policy: the largest Delta0 whose subscription stays <= ``limit``.
    An integer ``policy`` fixes Delta0 (structural conventions such as the
    dragonfly's Delta0 = h).
    """
    if policy is None:
        ideal = capacity * Fraction(u) / Fraction(kbar)
        d0 = math.floor(ideal * limit)
        while d0 >= 1 and subscription(d0, kbar, u, capacity) > limit:
            d0 -= 1
        if d0 < 1:
            raise DesignError(f"no Delta0 >= 1 satisfies the subscription limit (ideal {float(ideal):.3f})")
    else:
        d0 = int(policy)
        if d0 < 1:
            raise DesignError("Delta0 must be >= 1")
    return d0, subscription(d0, kbar, u, capacity)


def abstract_cost_per_node(kbar, u, R, c_i, c_t, c_r) -> float:
    """Ports-and-routers cost per compute node when every port is used at full subscription."""
    if u <= 0:
        raise DesignError("utilization must be positive")
    m = kbar / u
    return c_i + c_t * m + c_r * (1 + m) / R


def cost_figure_of_merit(kbar, u):
    return kbar / u


# -- layout --------------------------------------------------------------------------

@dataclass
class Layout:
    strategy: str
    groups: list[list[int]]
    electrical: int
    optical: int

    def group_sizes(self, Delta0: int, terminal_mask=None) -> list[int]:
        if terminal_mask is None:
            return [len(g) * Delta0 for g in self.groups]
        return [sum(1 for v in g if terminal_mask[v]) * Delta0 for g in self.groups]


def _count_cables(G: Topology, groups) -> tuple[int, int]:
    gid = [-1] * G.N
    for i, g in enumerate(groups):
        for v in g:
            gid[v] = i
    if min(gid) < 0:
        raise DesignError("layout does not cover every router")
    elec = sum(1 for u, v in G.edges() if gid[u] == gid[v])
    return elec, G.n_edges - elec


def _chunks(seq, k):
    """Split ``seq`` into k contiguous near-equal parts (larger parts first)."""
    n = len(seq)
    out, start = [], 0
    for i in range(k):
        size = n // k + (1 if i < n % k else 0)
        out.append(list(seq[start:start + size]))
        start += size
    return out


def natural_groups(G: Topology, Delta0: int, target: int) -> list[list[int]]:
    fam = G.family
    if fam in ("oft", "mlfm"):
        return [[v] for v in range(G.N)]
    if fam == "hamming":
        n = G.params["n"]
        k = max(1, round(n * Delta0 / target))
        groups = []
        for start in range(0, G.N, n):
            groups += _chunks(list(range(start, start + n)), k)
        return groups
    if fam == "dragonfly":
        a = 2 * G.params["h"]
        per = max(1, round(target / (a * Delta0)))
        n_df = G.N // a
        return [list(range(g * a, min(g + per, n_df) * a)) for g in range(0, n_df, per)]
    if fam == "mms":
        q = G.params["q"]
        per = max(1, round(target / (q * Delta0)))
        cols = [(s, x) for x in range(q) for s in (0, 1)]
        groups = []
        for i in range(0, len(cols), per):
            groups.append([(s * q + x) * q + y for s, x in cols[i:i + per] for y in range(q)])
        return groups
    if fam == "pn":
        q = G.params["q"]
        pm = prime_power(q)
        if pm[1] % 2:
            raise DesignError(f"PN({q}) has no subplane layout: q is not a square")
        F = field_of_order(q)
        idx = point_index(F)
        n = len(plane_points(F))
        groups = []
        for sub in subplane_partition(F):
            pts = sorted(idx[P] for P in sub)
            lines = sorted(n + idx[L] for L in subplane_lines(F, sub))
            groups.append(pts + lines)
        return groups
    raise DesignError(f"no natural layout for family {fam!r}")


def greedy_groups(G: Topology, group_routers: int, seed: int = 0, passes: int = 0) -> list[list[int]]:
    """Grow groups one at a time, each time adding the unassigned router with most
    neighbours already in the group (random tie-break), then optionally improve with
    ``passes`` sweeps of gain-positive swaps between groups."""
    rng = random.Random(seed)
    N = G.N
    adj = G.adjacency
    n_groups = math.ceil(N / group_routers)
    sizes = [group_routers] * (N // group_routers)
    if N % group_routers:
        sizes.append(N % group_routers)
    assert len(sizes) == n_groups
    unassigned = set(range(N))
    order = list(range(N))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    groups = []
    for size in sizes:
        gain = {}
        seed_v = min(unassigned, key=lambda v: (-sum(1 for w in adj[v] if w in unassigned), rank[v]))
        group = [seed_v]
        unassigned.discard(seed_v)
        for w in adj[seed_v]:
            if w in unassigned:
                gain[w] = gain.get(w, 0) + 1
        while len(group) < size:
            if gain:
                v = max(gain, key=lambda x: (gain[x], -rank[x]))
            else:
                v = min(unassigned, key=rank.__getitem__)
            group.append(v)
            unassigned.discard(v)
            gain.pop(v, None)
            for w in adj[v]:
                if w in unassigned:
                    gain[w] = gain.get(w, 0) + 1
        groups.append(sorted(group))
    if passes:
        groups = _refine(G, groups, passes, rng)
    return groups


def _refine(G, groups, passes, rng):
    gid = {v: i for i, g in enumerate(groups) for v in g}
    adj = G.adjacency

    def links(v, g):
        return sum(1 for w in adj[v] if gid[w] == g)

    verts = sorted(gid)
    for _ in range(passes):
        rng.shuffle(verts)
        improved = False
        for v in verts:
            gv = gid[v]
            base_v = links(v, gv)
            best = None
            for w in verts:
                gw = gid[w]
                if gw == gv:
                    continue
                adj_vw = 1 if w in adj[v] else 0
                delta = (links(v, gw) - base_v) + (links(w, gv) - links(w, gw)) - 2 * adj_vw
                if delta > 0 and (best is None or delta > best[0]):
                    best = (delta, w)
            if best:
                w = best[1]
                gid[v], gid[w] = gid[w], gv
                improved = True
        if not improved:
            break
    out = [[] for _ in groups]
    for v, g in gid.items():
        out[g].append(v)
    return [sorted(g) for g in out]


def layout(G: Topology, Delta0: int, config: CostConfig = CostConfig(), strategy: str = "natural",
           group_routers: int | None = None, seed: int = 0, passes: int = 0) -> Layout:
    target = config.target_group_size
    if target < Delta0:
        raise DesignError(f"target group size {target} is smaller than one router's {Delta0} terminals")
    if strategy == "natural":
        groups = natural_groups(G, Delta0, target)
    elif strategy == "greedy":
        if group_routers is None:
            group_routers = max(1, round(target / Delta0))
        groups = greedy_groups(G, group_routers, seed=seed, passes=passes)
    else:
        raise DesignError(f"unknown layout strategy {strategy!r}")
    elec, opt = _count_cables(G, groups)
    return Layout(strategy, groups, elec, opt)


# -- pricing -------------------------------------------------------------------------

def price(N: int, R: int, T: int, electrical: int, optical: int, config: CostConfig) -> tuple[float, float]:
    """(cost $, power W) per compute node.  Terminal links carry no cable cost."""
    if electrical is None or optical is None:
        raise DesignError("pricing needs a cable classification")
    cables = (electrical * config.electrical_cost + optical * config.optical_cost) * config.link_rate
    routers = N * config.router_cost(R)
    return (cables + routers) / T, config.port_power * N * R / T


@dataclass
class DesignReport:
    family: str
    params: dict
    T: int
    R: int
    N: int
    Delta: int
    Delta0: int
    subscription: Fraction
    oversubscribed: bool
    kbar: Fraction
    u: Fraction
    group_sizes: list[int] = field(default_factory=list)
    electrical_cables: int | None = None
    optical_cables: int | None = None
    cost_per_node: float | None = None
    power_per_node: float | None = None
    layout_strategy: str | None = None

    @property
    def n_groups(self) -> int:
        return len(self.group_sizes)

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("subscription", "kbar", "u"):
            x = d[key]
            d[key] = {"num": x.numerator, "den": x.denominator, "value": round(float(x), 4)}
        d["schema"] = 1
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def design(G: Topology, metrics: MetricsReport, config: CostConfig = CostConfig(), policy=None,
           strategy: str | None = "natural", cables: tuple[int, int] | None = None,
           group_routers: int | None = None, seed: int = 0, passes: int = 0,
           u_override=None) -> DesignReport:
    """Dimension, lay out and price ``G``.

    ``cables`` injects an (electrical, optical) split instead of computing a layout.
    ``u_override`` replaces the measured utilization in the subscription only.
    """
    cap = transit_capacity(G)
    u_dim = metrics.u if u_override is None else Fraction(u_override)
    d0, sub = dimension(metrics.kbar, u_dim, cap, policy)
    L = len(G.leaves)
    T = L * d0
    Delta = cap if not G.has_spines else max(G.degree(v) for v in G.leaves)
    R = Delta + d0
    if G.has_spines and any(G.degree(v) != R for v in range(G.N) if G.roles[v] == SPINE):
        raise DesignError("spine radix differs from leaf radix")
    rep = DesignReport(family=G.family, params=dict(G.params), T=T, R=R, N=G.N, Delta=Delta, Delta0=d0,
                       subscription=sub, oversubscribed=sub > SUBSCRIPTION_LIMIT,
                       kbar=metrics.kbar, u=metrics.u)
    if cables is not None:
        rep.electrical_cables, rep.optical_cables = cables
        rep.layout_strategy = "injected"
    elif strategy is not None:
        lay = layout(G, d0, config, strategy, group_routers=group_routers, seed=seed, passes=passes)
        mask = [r != SPINE for r in G.roles]
        rep.group_sizes = lay.group_sizes(d0, mask)
        rep.electrical_cables, rep.optical_cables = lay.electrical, lay.optical
        rep.layout_strategy = lay.strategy
    if rep.electrical_cables is not None:
        rep.cost_per_node, rep.power_per_node = price(G.N, R, T, rep.electrical_cables,
                                                      rep.optical_cables, config)
    return rep


# -- table reproduction --------------------------------------------------------------

DELTA0_CONVENTIONS = {
    "dragonfly": lambda p: p["h"],
    "hamming": lambda p: p["n"],
    "mlfm": lambda p: p["n"] - 1,
}


def load_reference_tables() -> dict:
    """The bundled transcription of the published design tables."""
    path = Path(__file__).with_name("data") / "reference_tables.json"
    return json.loads(path.read_text())["tables"]


def design_metrics(G: Topology, threads: int = 1) -> tuple[MetricsReport, Fraction | None]:
    """Metrics used for dimensioning, plus a utilization override if any.

    Dragonflies are dimensioned under hierarchical local-global-local routing at
    its balanced limit u = 1; every other family uses exact minimal routing.
    """
    if G.family == "dragonfly":
        return dragonfly_hierarchical(G), Fraction(1)
    scope = LEAF_TO_LEAF if G.has_spines else ALL_PAIRS
    return analyze(G, scope, threads=threads), None


def reproduce_row(row: dict, config: CostConfig, mode: str = "injected", seed: int = 0,
                  passes: int = 0, threads: int = 1) -> DesignReport:
    G = build(row["family"], **row["params"])
    metrics, u_override = design_metrics(G, threads)
    conv = DELTA0_CONVENTIONS.get(G.family)
    policy = conv(G.params) if conv else None
    if mode == "injected":
        return design(G, metrics, config, policy, cables=(row["electrical"], row["optical"]),
                      u_override=u_override)
    if mode != "heuristic":
        raise DesignError(f"unknown table mode {mode!r}")
    if G.family in ("demi_pn",) or (G.family == "pn" and prime_power(G.params["q"])[1] % 2):
        group_routers = round(row["group_size"] / row["Delta0"])
        return design(G, metrics, config, policy, strategy="greedy", group_routers=group_routers,
                      seed=seed, passes=passes, u_override=u_override)
    return design(G, metrics, config, policy, strategy="natural", u_override=u_override)


TABLE_COLUMNS = ("label", "T", "R", "N", "Delta0", "subscription", "group_size", "groups",
                 "electrical", "optical", "cost", "power")


def reproduce_table(table_id: str, mode: str = "injected", seed: int = 0, passes: int = 0,
                    threads: int = 1, config: CostConfig | None = None) -> list[tuple[dict, DesignReport]]:
    """Rebuild every row of a bundled table.  ``config`` replaces the per-row presets."""
    tables = load_reference_tables()
    if table_id not in tables:
        raise DesignError(f"unknown table {table_id!r}; choose from {sorted(tables)}")
    tab = tables[table_id]
    out = []
    for row in tab["rows"]:
        cfg = config or CostConfig.preset(row.get("preset", tab.get("preset")))
        out.append((row, reproduce_row(row, cfg, mode, seed, passes, threads)))
    return out


def table_csv(rows: list[tuple[dict, DesignReport]]) -> str:
    lines = [",".join(TABLE_COLUMNS)]
    for row, rep in rows:
        sizes = rep.group_sizes
        size = f"{sum(sizes) / len(sizes):.0f}" if sizes else ""
        vals = [row["label"], rep.T, rep.R, rep.N, rep.Delta0, f"{float(rep.subscription):.3f}",
                size, rep.n_groups or "", rep.electrical_cables, rep.optical_cables,
                f"{rep.cost_per_node:.2f}", f"{rep.power_per_node:.2f}"]
        lines.append(",".join(f'"{v}"' if isinstance(v, str) and "," in v else str(v) for v in vals))
    return "\n".join(lines) + "\n"


# -- scalability sweep ---------------------------------------------------------------

SWEEP_FAMILIES = ("complete", "hamming", "pn", "demi_pn", "mms", "dragonfly", "oft", "mlfm",
                  "delorme_quadrangle", "gq_incidence", "delorme_hexagon", "gh_incidence")

SYMBOLIC_SWEEP = ("delorme_quadrangle", "gq_incidence", "delorme_hexagon", "gh_incidence")

SWEEP_COLUMNS = ("family", "param", "R", "N", "T", "kbar", "u", "kbar_over_u", "cost", "power")


def _closed_form_metrics(family: str, x: int):
    """Exact (kbar, u) for families whose balance is known, else None."""
    F = Fraction
    if family == "complete":
        return F(1), F(1)
    if family == "hamming":
        return F(2 * x, x + 1), F(1)
    if family == "pn":
        q = x
        return F(5 * q * q + 3 * q + 1, 2 * q * q + 2 * q + 1), F(1)
    if family == "demi_pn":
        q = x
        return 2 - F(q + 1, q * q + q + 1), F(2 * q * q + q + 1, 2 * q * (q + 1))
    if family in ("oft", "mlfm"):
        return F(2), F(1)
    if family == "dragonfly":
        # local-global-local routing, balanced limit u = 1
        a, g = 2 * x, 2 * x * x + 1
        return F((g - 1) * (3 * a - 2) + a - 1, g * a - 1), F(1)
    return None


def _family_params(family: str, R_max: int):
    """Parameters of ``family`` whose router radix stays within R_max."""
    needs_field = family not in ("complete", "hamming", "mlfm", "dragonfly")
    # radix grows with the parameter in every family
    for x in range(2, R_max + 1):
        if needs_field and prime_power(x) is None:
            continue
        if family == "mms" and mms_epsilon(x) is None:
            continue
        if _radix(family, x) > R_max:
            return
        yield x


def _param_key(family: str) -> str:
    return {"complete": "n", "hamming": "n", "mlfm": "n", "dragonfly": "h"}.get(family, "q")


def _radix(family: str, x: int):
    sp = expected_params(family, **{_param_key(family): x})
    return math.ceil(sp.R)


def sweep_point(family: str, x: int, exact_cap: int = 2000, small_cap: int = 400,
                config: CostConfig = CostConfig()) -> dict:
    """One (R, T, k̄/u) sample.

    Graphs with at most ``small_cap`` routers are always built and measured.
    Larger ones use exact closed forms when known, are measured up to
    ``exact_cap`` routers otherwise, and beyond that fall back to the
    structural limit values.
    """
    key = _param_key(family)
    sp = expected_params(family, **{key: x})
    row = {"family": family, "param": x, "R": None, "N": sp.N, "T": None, "kbar": None, "u": None,
           "kbar_over_u": None, "cost": None, "power": None, "source": "closed-form"}
    if family in SYMBOLIC_SWEEP:
        row.update(R=float(sp.R), T=float(sp.T), kbar_over_u=float(sp.Delta / sp.Delta0),
                   source="table")
        return row
    metrics = _closed_form_metrics(family, x)
    if sp.N <= small_cap or (metrics is None and sp.N <= exact_cap):
        G = build(family, **{key: x})
        rep, u_override = design_metrics(G)
        metrics = (rep.kbar, u_override or rep.u)
        row["source"] = "exact"
    elif metrics is None:
        row.update(R=float(sp.R), T=float(sp.T), kbar_over_u=float(sp.Delta / sp.Delta0),
                   source="table")
        return row
    kbar, u = metrics
    if family == "complete":
        d0, Delta = x, x - 1
    elif family in ("oft", "mlfm"):
        d0, Delta = int(sp.Delta0), int(sp.Delta)
    else:
        Delta = int(sp.Delta)
        conv = DELTA0_CONVENTIONS.get(family)
        d0 = conv({key: x}) if conv else dimension(kbar, u, Delta)[0]
    L = sp.L if sp.L is not None else sp.N
    R, T = Delta + d0, L * d0
    cost, power = price(sp.N, R, T, 0, _n_links(sp), config)
    row.update(R=R, T=T, kbar=float(kbar), u=float(u), kbar_over_u=float(kbar / u), cost=cost,
               power=power)
    return row


def _n_links(sp) -> int:
    return sum(d * c for d, c in sp.degrees.items()) // 2


def bound_rows(R_max: int, kbars=(1.5, 2.0, 2.5), k: int = 3) -> list[dict]:
    rows = []
    for kbar in kbars:
        for R in range(5, R_max + 1):
            rows.append({"family": f"bound_k{k}_kbar{kbar}", "param": kbar, "R": R, "N": None,
                         "T": terminal_bound(R, k, kbar), "kbar": kbar, "u": 1.0,
                         "kbar_over_u": kbar, "cost": None, "power": None, "source": "bound"})
    return rows


def scalability_sweep(R_max: int, families=SWEEP_FAMILIES, exact_cap: int = 2000, threads: int = 1,
                      config: CostConfig = CostConfig(), with_bound: bool = True) -> list[dict]:
    """Sample points for every family and parameter with radix <= R_max, in
    (family, parameter) order regardless of ``threads``."""
    if R_max < 5:
        raise DesignError("R_max must be at least 5")
    jobs = [(fam, x) for fam in families for x in _family_params(fam, R_max)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        rows = list(ex.map(lambda j: sweep_point(j[0], j[1], exact_cap, config=config), jobs))
    return rows + bound_rows(R_max) if with_bound else rows


def sweep_csv(rows: list[dict]) -> str:
    cols = SWEEP_COLUMNS + ("source",)
    out = [",".join(cols)]
    for r in rows:
        out.append(",".join("" if r[c] is None else (f"{r[c]:.6g}" if isinstance(r[c], float) else str(r[c]))
                            for c in cols))
    return "\n".join(out) + "\n"
