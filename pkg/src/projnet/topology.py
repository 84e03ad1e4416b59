"""Topology generators.

Every generator returns an immutable :class:`Topology` whose vertex ids follow
a fixed lexicographic order over the construction coordinates, so exported
edge lists are byte-identical across runs.  ``predicted`` carries the closed
form structural parameters of the family (see :func:`expected_params`).
"""

from __future__ import annotations

import json
import math
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .field import FieldError, FieldSpec, field_of_order, nonzero_squares, prime_power, primitive_element
from .geometry import orthogonal_lists, plane_points

LEAF, SPINE = "leaf", "spine"

DIRECT_FAMILIES = ("complete", "complete_bipartite", "turan", "paley", "hamming", "hypercube",
                   "dragonfly", "random_regular", "pn", "demi_pn", "mms")
INDIRECT_FAMILIES = ("oft", "mlfm")
# closed forms only; no generator
SYMBOLIC_FAMILIES = ("gq_incidence", "gh_incidence", "delorme_quadrangle", "delorme_hexagon")


class TopologyError(ValueError):
    """A generator precondition was violated."""


@dataclass(frozen=True)
class StructuralParams:
    """Closed-form network parameters.  Values are exact ``Fraction``s where the
    formula is rational (floats for the random-graph estimates)."""

    T: Fraction | float
    R: Fraction | float
    N: int
    Delta: Fraction | float
    Delta0: Fraction | float
    delta: int | None = None
    L: int | None = None
    degrees: dict[int, int] | None = None  # degree -> vertex count, when known

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v) if v.denominator != 1 else v.numerator
            return v
        d = {k: enc(getattr(self, k)) for k in ("T", "R", "N", "Delta", "Delta0", "delta", "L")}
        if self.degrees is not None:
            d["degrees"] = {str(k): v for k, v in sorted(self.degrees.items())}
        return d


@dataclass(frozen=True, eq=False)
class Topology:
    family: str
    params: dict
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    roles: tuple[str, ...]
    predicted: StructuralParams | None
    edge_class: dict[tuple[int, int], str] | None = field(default=None, repr=False)

    @property
    def N(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def leaves(self) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r == LEAF]

    @property
    def has_spines(self) -> bool:
        return SPINE in self.roles

    def degree_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(len(a) for a in self.adjacency).items()))

    # -- export ------------------------------------------------------------
    def edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def to_dot(self) -> str:
        colors = {LEAF: "lightblue", SPINE: "orange"}
        lines = [f'graph "{self.family}" {{', "  node [style=filled];"]
        for v, (lab, role) in enumerate(zip(self.labels, self.roles)):
            lines.append(f'  {v} [label="{lab}", fillcolor={colors[role]}];')
        for u, v in self.edges():
            style = ""
            if self.edge_class and self.edge_class.get((u, v)) == "global":
                style = " [style=dashed]"
            lines.append(f"  {u} -- {v}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def descriptor(self) -> dict:
        d = {
            "schema": 1,
            "family": self.family,
            "params": self.params,
            "counts": {"vertices": self.N, "edges": self.n_edges,
                       "leaves": len(self.leaves), "spines": self.N - len(self.leaves),
                       "degrees": {str(k): v for k, v in self.degree_counts().items()}},
        }
        if self.predicted is not None:
            d["predicted"] = self.predicted.as_dict()
        if self.edge_class:
            d["counts"]["edge_classes"] = dict(sorted(Counter(self.edge_class.values()).items()))
        return d

    def to_json(self) -> str:
        d = self.descriptor()
        d["labels"] = list(self.labels)
        d["roles"] = list(self.roles)
        d["edges"] = [list(e) for e in self.edges()]
        return json.dumps(d, sort_keys=True) + "\n"

    # -- checks ------------------------------------------------------------
    def is_connected(self, among=None) -> bool:
        if self.N == 0:
            return False
        seen = [False] * self.N
        seen[0] = True
        dq = deque([0])
        while dq:
            u = dq.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    dq.append(v)
        return all(seen) if among is None else all(seen[v] for v in among)

    def validate(self, connected: bool = True) -> None:
        """Raise ``TopologyError`` unless simple, symmetric, connected and as predicted."""
        for u, nb in enumerate(self.adjacency):
            if list(nb) != sorted(set(nb)):
                raise TopologyError(f"vertex {u}: neighbour list not sorted/unique")
            if u in nb:
                raise TopologyError(f"self-loop at {u}")
            for v in nb:
                if u not in self.adjacency[v]:
                    raise TopologyError(f"asymmetric adjacency {u}-{v}")
        if connected and not self.is_connected():
            raise TopologyError("graph is disconnected")
        P = self.predicted
        if P is not None:
            if P.N != self.N:
                raise TopologyError(f"{self.N} vertices, predicted {P.N}")
            if P.degrees is not None and P.degrees != self.degree_counts():
                raise TopologyError(f"degrees {self.degree_counts()}, predicted {P.degrees}")


def _assemble(family, params, labels, edges, roles=None, predicted=None, edge_class=None,
              check=True) -> Topology:
    n = len(labels)
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise TopologyError(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    topo = Topology(
        family=family,
        params=dict(params),
        labels=tuple(labels),
        adjacency=tuple(tuple(sorted(s)) for s in nbrs),
        roles=tuple(roles) if roles is not None else (LEAF,) * n,
        predicted=predicted,
        edge_class=edge_class,
    )
    if check:
        topo.validate()
    return topo


def _field(q) -> FieldSpec:
    try:
        return field_of_order(q)
    except FieldError:
        raise TopologyError(f"q must be a prime power, got {q}") from None


def _pt_label(F: FieldSpec, P) -> str:
    return "(" + ",".join(F.label(c) for c in P) + ")"


# -- projective families -------------------------------------------------------

def build_pn(q: int) -> Topology:
    """Incidence graph of P2(F_q): points (0,P) and lines (1,L), edge iff P.L = 0."""
    F = _field(q)
    pts = plane_points(F)
    n = len(pts)
    orth = orthogonal_lists(F)
    edges = [(i, n + j) for i in range(n) for j in orth[i]]
    labels = [f"0:{_pt_label(F, P)}" for P in pts] + [f"1:{_pt_label(F, P)}" for P in pts]
    return _assemble("pn", {"q": q}, labels, edges, predicted=expected_params("pn", q=q))


def build_demi_pn(q: int) -> Topology:
    """Points and lines identified: P ~ L iff P.L = 0 and P != L."""
    F = _field(q)
    pts = plane_points(F)
    orth = orthogonal_lists(F)
    edges = [(i, j) for i in range(len(pts)) for j in orth[i] if i < j]
    labels = [_pt_label(F, P) for P in pts]
    return _assemble("demi_pn", {"q": q}, labels, edges, predicted=expected_params("demi_pn", q=q))


def build_oft(q: int) -> Topology:
    """Two-level orthogonal fat tree: leaf columns 0 and 2, spine column 1."""
    F = _field(q)
    pts = plane_points(F)
    n = len(pts)
    orth = orthogonal_lists(F)
    edges = []
    for i in range(n):
        for j in orth[i]:
            edges.append((i, n + j))          # (0,P) - (1,L)
            edges.append((n + i, 2 * n + j))  # (1,P) - (2,L)
    labels = [f"{s}:{_pt_label(F, P)}" for s in range(3) for P in pts]
    roles = [LEAF] * n + [SPINE] * n + [LEAF] * n
    return _assemble("oft", {"q": q}, labels, edges, roles, predicted=expected_params("oft", q=q))


def mms_epsilon(q: int) -> int:
    r = q % 4
    return {1: 1, 3: -1, 0: 0}[r] if r != 2 else None


def mms_local_sets(F: FieldSpec) -> tuple[frozenset[int], frozenset[int]]:
    """The generator sets X_0 and X_1 = xi * X_0 of the Slim Fly construction."""
    q = F.q
    eps = mms_epsilon(q)
    xi = primitive_element(F).value
    if eps == 1:
        exps = range(0, q - 2, 2)
    elif eps == -1:
        half = (q - 1) // 2
        exps = [e for e in range(0, half, 2)] + [e for e in range(half, q - 1, 2)]
    else:
        exps = range(0, q - 1, 2)
    X0 = frozenset(F.pow(xi, e) for e in exps)
    X1 = frozenset(F.mul(xi, x) for x in X0)
    return X0, X1


def build_mms(q: int) -> Topology:
    """McKay-Miller-Siran graph (Slim Fly) on vertices (s, x, y)."""
    if not isinstance(q, int) or prime_power(q) is None:
        raise TopologyError(f"q must be a prime power, got {q}")
    if q == 2:
        raise TopologyError("MMS requires q != 2")
    F = _field(q)
    X = mms_local_sets(F)
    vid = lambda s, x, y: (s * q + x) * q + y  # noqa: E731
    edges, cls = [], {}
    for s in (0, 1):
        for x in range(q):
            for y1 in range(q):
                for y2 in range(y1 + 1, q):
                    if F.sub(y1, y2) in X[s]:
                        e = (vid(s, x, y1), vid(s, x, y2))
                        edges.append(e)
                        cls[e] = "local"
    for x1, x2, y2 in product(range(q), repeat=3):
        y1 = F.add(y2, F.mul(x2, x1))
        e = (vid(0, x1, y1), vid(1, x2, y2))
        edges.append(e)
        cls[e] = "global"
    labels = [f"({s},{F.label(x)},{F.label(y)})" for s in (0, 1) for x in range(q) for y in range(q)]
    return _assemble("mms", {"q": q}, labels, edges, predicted=expected_params("mms", q=q),
                     edge_class=cls)


def build_mlfm(n: int) -> Topology:
    """Multi-layer full mesh from the incidence graph of K_n with replicated leaves."""
    if not isinstance(n, int) or n < 2:
        raise TopologyError(f"MLFM requires n >= 2, got {n}")
    pairs = list(combinations(range(n), 2))
    n_leaf = n * (n - 1)
    leaf_id = lambda a, r: a * (n - 1) + r  # noqa: E731
    spine_id = {pr: n_leaf + i for i, pr in enumerate(pairs)}
    edges = []
    for (a, b), sid in spine_id.items():
        for r in range(n - 1):
            edges.append((leaf_id(a, r), sid))
            edges.append((leaf_id(b, r), sid))
    labels = [f"leaf:{a}.{r}" for a in range(n) for r in range(n - 1)]
    labels += [f"spine:{a}-{b}" for a, b in pairs]
    roles = [LEAF] * n_leaf + [SPINE] * len(pairs)
    return _assemble("mlfm", {"n": n}, labels, edges, roles, predicted=expected_params("mlfm", n=n))


# -- classic families ------------------------------------------------------------

def build_complete(n: int) -> Topology:
    if n < 2:
        raise TopologyError(f"complete graph requires n >= 2, got {n}")
    return _assemble("complete", {"n": n}, [str(i) for i in range(n)],
                     combinations(range(n), 2), predicted=expected_params("complete", n=n))


def build_turan(n: int, r: int) -> Topology:
    """Complete r-partite graph with part sizes floor(n/r) or ceil(n/r); vertex i is in part i % r."""
    if r < 2 or n < r:
        raise TopologyError(f"Turan graph requires 2 <= r <= n, got n={n}, r={r}")
    edges = [(i, j) for i, j in combinations(range(n), 2) if i % r != j % r]
    return _assemble("turan", {"n": n, "r": r}, [f"{i}@{i % r}" for i in range(n)], edges,
                     predicted=expected_params("turan", n=n, r=r))


def build_complete_bipartite(n: int) -> Topology:
    if n < 1:
        raise TopologyError(f"K_n,n requires n >= 1, got {n}")
    edges = [(i, n + j) for i in range(n) for j in range(n)]
    labels = [f"a{i}" for i in range(n)] + [f"b{j}" for j in range(n)]
    return _assemble("complete_bipartite", {"n": n}, labels, edges,
                     predicted=expected_params("complete_bipartite", n=n))


def build_paley(q: int) -> Topology:
    if not isinstance(q, int) or prime_power(q) is None or q % 4 != 1:
        raise TopologyError(f"Paley graph requires a prime power q = 1 mod 4, got {q}")
    F = _field(q)
    sq = nonzero_squares(F)
    edges = [(a, b) for a, b in combinations(range(q), 2) if F.sub(a, b) in sq]
    return _assemble("paley", {"q": q}, [F.label(a) for a in range(q)], edges,
                     predicted=expected_params("paley", q=q))


def build_hamming(n: int, dim: int = 2) -> Topology:
    """K_n^dim: words of length dim over n symbols, adjacent at Hamming distance 1."""
    if n < 2 or dim < 1:
        raise TopologyError(f"Hamming graph requires n >= 2 and dim >= 1, got n={n}, dim={dim}")
    words = list(product(range(n), repeat=dim))
    w = [n ** (dim - 1 - i) for i in range(dim)]
    edges = []
    for vid, word in enumerate(words):
        for i in range(dim):
            for s in range(word[i] + 1, n):
                edges.append((vid, vid + (s - word[i]) * w[i]))
    labels = ["".join(f"{c}." for c in word)[:-1] for word in words]
    return _assemble("hamming", {"n": n, "dim": dim}, labels, edges,
                     predicted=expected_params("hamming", n=n, dim=dim))


def build_hypercube(n: int) -> Topology:
    if n < 1:
        raise TopologyError(f"hypercube requires n >= 1, got {n}")
    t = build_hamming(2, n)
    return Topology("hypercube", {"n": n}, t.labels, t.adjacency, t.roles,
                    expected_params("hypercube", n=n))


def build_dragonfly(h: int) -> Topology:
    """Balanced dragonfly: 2h^2+1 groups of 2h fully connected routers, h global ports each.

    Global wiring is the consecutive ("palmtree") arrangement: global port p of
    group g (ports numbered router-major) reaches group (g + p + 1) mod G.
    """
    if not isinstance(h, int) or h < 1:
        raise TopologyError(f"dragonfly requires h >= 1, got {h}")
    a, G = 2 * h, 2 * h * h + 1
    edges, cls = [], {}
    for g in range(G):
        base = g * a
        for i, j in combinations(range(a), 2):
            e = (base + i, base + j)
            edges.append(e)
            cls[e] = "local"
        for port in range(a * h):
            g2 = (g + port + 1) % G
            if g2 < g:
                continue
            port2 = G - 2 - port
            e = (base + port // h, g2 * a + port2 // h)
            edges.append(e)
            cls[e] = "global"
    labels = [f"g{g}.r{r}" for g in range(G) for r in range(a)]
    return _assemble("dragonfly", {"h": h}, labels, edges, predicted=expected_params("dragonfly", h=h),
                     edge_class=cls)


def _random_regular_edges(n: int, d: int, rng: random.Random):
    """One attempt of the Steger-Wormald incremental pairing; ``None`` on a dead end."""
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        leftover = Counter()
        rng.shuffle(stubs)
        it = iter(stubs)
        for a, b in zip(it, it):
            if a > b:
                a, b = b, a
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                leftover[a] += 1
                leftover[b] += 1
        if leftover:
            # dead end when no remaining stub pair can be joined
            open_v = sorted(leftover)
            if not any(u != v and (min(u, v), max(u, v)) not in edges
                       for u, v in combinations(open_v, 2)):
                return None
        stubs = [v for v, c in sorted(leftover.items()) for _ in range(c)]
    return edges


def build_random_regular(n: int, degree: int, seed: int) -> Topology:
    """Seeded random Delta-regular graph, resampled until simple and connected."""
    if seed is None:
        raise TopologyError("random_regular requires a seed")
    if n * degree % 2 or not 0 < degree < n:
        raise TopologyError(f"random_regular requires 0 < degree < n and n*degree even, got n={n}, degree={degree}")
    rng = random.Random(seed)
    pred = expected_params("random_regular", n=n, degree=degree)
    for _ in range(1000):
        edges = _random_regular_edges(n, degree, rng)
        if edges is None:
            continue
        topo = _assemble("random_regular", {"n": n, "degree": degree, "seed": seed},
                         [str(i) for i in range(n)], sorted(edges), predicted=pred, check=False)
        if topo.is_connected():
            topo.validate()
            return topo
    raise TopologyError(f"could not sample a connected {degree}-regular graph on {n} vertices")


def build_classic(family: str, **params) -> Topology:
    builders = {
        "complete": lambda: build_complete(params["n"]),
        "complete_bipartite": lambda: build_complete_bipartite(params["n"]),
        "turan": lambda: build_turan(params["n"], params["r"]),
        "paley": lambda: build_paley(params["q"]),
        "hamming": lambda: build_hamming(params["n"], params.get("dim", 2)),
        "hypercube": lambda: build_hypercube(params["n"]),
        "dragonfly": lambda: build_dragonfly(params["h"]),
        "random_regular": lambda: build_random_regular(params["n"], params["degree"], params.get("seed")),
    }
    if family not in builders:
        raise TopologyError(f"unknown classic family {family!r}")
    try:
        return builders[family]()
    except KeyError as exc:
        raise TopologyError(f"{family} needs parameter {exc.args[0]!r}") from None


def build(family: str, **params) -> Topology:
    """Dispatch on a family tag; accepts ``demi-pn`` as well as ``demi_pn``."""
    family = family.replace("-", "_")
    try:
        if family == "pn":
            return build_pn(params["q"])
        if family == "demi_pn":
            return build_demi_pn(params["q"])
        if family == "mms":
            return build_mms(params["q"])
        if family == "oft":
            return build_oft(params["q"])
        if family == "mlfm":
            return build_mlfm(params["n"])
    except KeyError as exc:
        raise TopologyError(f"{family} needs parameter {exc.args[0]!r}") from None
    return build_classic(family, **params)


def from_edge_list(text: str, family: str = "edgelist") -> Topology:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise TopologyError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise TopologyError("empty edge list")
    n = max(max(e) for e in edges) + 1
    topo = _assemble(family, {}, [str(i) for i in range(n)], edges, check=False)
    topo.validate(connected=False)
    return topo


# -- closed forms -----------------------------------------------------------------

def _sp(T, R, N, Delta, Delta0, degrees=None, delta=None, L=None):
    L = N if L is None else L
    delta = Delta if delta is None else delta
    return StructuralParams(T=T, R=R, N=N, Delta=Delta, Delta0=Delta0, delta=delta, L=L,
                            degrees=degrees)


def expected_params(family: str, **p) -> StructuralParams:
    """Exact closed-form structural parameters of a family (Fraction arithmetic)."""
    family = family.replace("-", "_")
    Fr = Fraction
    if family == "complete":
        n = p["n"]
        return _sp(Fr(n * n), Fr(2 * n - 1), n, Fr(n - 1), Fr(n), {n - 1: n})
    if family == "turan":
        n, r = p["n"], p["r"]
        sizes = Counter(len(range(i, n, r)) for i in range(r))
        degrees = Counter()
        for s, cnt in sizes.items():
            degrees[n - s] += s * cnt
        return _sp(Fr(n * n * (r - 1), r + 1), Fr(n * (r - 1) * (2 * r + 1), r * (r + 1)), n,
                   Fr(n * (r - 1), r), Fr(n * (r - 1), r + 1), dict(sorted(degrees.items())))
    if family == "complete_bipartite":
        n = p["n"]
        return _sp(Fr(4 * n * n, 3), Fr(5 * n, 3), 2 * n, Fr(n), Fr(2 * n, 3), {n: 2 * n})
    if family == "paley":
        q = p["q"]
        # same limiting behaviour as K_{n,n}: Delta0 = Delta / kbar with kbar -> 3/2
        d = (q - 1) // 2
        return _sp(Fr(q * d * 2, 3), Fr(d * 5, 3), q, Fr(d), Fr(2 * d, 3), {d: q})
    if family in ("hamming", "hypercube"):
        n, dim = (p["n"], p.get("dim", 2)) if family == "hamming" else (2, p["n"])
        N = n**dim
        Delta = dim * (n - 1)
        return _sp(Fr(n ** (dim + 1)), Fr(Delta + n), N, Fr(Delta), Fr(n), {Delta: N})
    if family == "demi_pn":
        q = p["q"]
        N = q * q + q + 1
        return _sp(Fr(q**3, 2) + q * q + q + Fr(1, 2), Fr(3 * (q + 1), 2), N, Fr(q + 1),
                   Fr(q + 1, 2), {q: q + 1, q + 1: N - q - 1})
    if family == "pn":
        q = p["q"]
        return _sp(Fr(4, 5) * (q**3 + 2 * q * q + 2 * q + 1), Fr(7 * (q + 1), 5),
                   2 * (q * q + q + 1), Fr(q + 1), Fr(2 * (q + 1), 5), {q + 1: 2 * (q * q + q + 1)})
    if family == "mms":
        q = p["q"]
        eps = mms_epsilon(q)
        if eps is None:
            raise TopologyError(f"MMS undefined for q = {q}")
        s = 3 * q - eps
        return _sp(Fr(4, 9) * q * q * s, Fr(13, 18) * s, 2 * q * q, Fr(s, 2), Fr(2, 9) * s,
                   {s // 2: 2 * q * q})
    if family == "dragonfly":
        h = p["h"]
        N = 4 * h**3 + 2 * h
        return _sp(Fr(4 * h**4 + 2 * h * h), Fr(4 * h - 1), N, Fr(3 * h - 1), Fr(h), {3 * h - 1: N})
    if family == "oft":
        q = p["q"]
        n = q * q + q + 1
        L = 2 * n
        return _sp(Fr(2 * (q + 1) * n), Fr(2 * (q + 1)), 3 * n, Fr(q + 1), Fr(q + 1),
                   {q + 1: 2 * n, 2 * (q + 1): n}, delta=0, L=L)
    if family == "mlfm":
        n = p["n"]
        L = n * (n - 1)
        S = n * (n - 1) // 2
        degrees = {n - 1: L, 2 * (n - 1): S}
        return _sp(Fr(L * (n - 1)), Fr(2 * (n - 1)), L + S, Fr(n - 1), Fr(n - 1), degrees,
                   delta=0, L=L)
    if family == "random_regular":
        n, d = p["n"], p["degree"]
        d0 = d * math.log(d) / math.log(n) if d > 1 else 0.0
        return _sp(d0 * n, d + d0, n, Fr(d), d0, {d: n})
    if family == "delorme_quadrangle":
        q = p["q"]
        N = q**3 + q * q + q + 1
        return _sp(Fr((q + 1) ** 2 * (q * q + 1), 3), Fr(4 * (q + 1), 3), N, Fr(q + 1), Fr(q + 1, 3))
    if family == "gq_incidence":
        q = p["q"]
        N = 2 * (q**3 + q * q + q + 1)
        return _sp(Fr(4 * (q + 1) ** 2 * (q * q + 1), 7), Fr(9 * (q + 1), 7), N, Fr(q + 1),
                   Fr(2 * (q + 1), 7))
    if family == "delorme_hexagon":
        q = p["q"]
        N = sum(q**i for i in range(6))
        return _sp(Fr((q**4 + q * q + 1) * (q + 1) ** 2, 5), Fr(6 * (q + 1), 5), N, Fr(q + 1),
                   Fr(q + 1, 5))
    if family == "gh_incidence":
        q = p["q"]
        N = 2 * sum(q**i for i in range(6))
        return _sp(Fr(4 * (q**4 + q * q + 1) * (q + 1) ** 2, 11), Fr(13 * (q + 1), 11), N,
                   Fr(q + 1), Fr(2 * (q + 1), 11))
    raise TopologyError(f"unknown family {family!r}")
