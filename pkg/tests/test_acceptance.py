"""Acceptance criteria 1-11.

Each criterion is a function returning ``(ok, detail)``.  Under pytest every
criterion is one test and its verdict line is repeated in the terminal
summary; ``python tests/test_acceptance.py`` prints the same lines directly.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from projnet.design import CostConfig, design, layout, load_reference_tables, reproduce_table
from projnet.metrics import (ALL_PAIRS, LEAF_TO_LEAF, analyze, brute_force_arc_loads,
                             generalized_moore_check, indirect_leaf_bound, moore_bound)
from projnet.topology import build, build_random_regular

RESULTS: dict[int, tuple[bool, str]] = {}

PRIME_POWERS_16 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def _rounded_match(value, printed, tol=0.001):
    return abs(round(float(value), 3) - printed) <= tol + 1e-9


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for q in PRIME_POWERS_16:
        u = analyze(build("demi_pn", q=q)).u
        if u != Fraction(2 * q * q + q + 1, 2 * q * (q + 1)):
            bad.append(q)
    dt = time.perf_counter() - t0
    return not bad and dt < 30, f"mismatches {bad}, {dt:.1f} s"


def criterion_2():
    uneven = []
    for q in PRIME_POWERS_16:
        loads = set(analyze(build("pn", q=q)).arc_loads.values())
        if len(loads) != 1:
            uneven.append(q)
    rep = analyze(build("pn", q=2), per_source=True)
    heawood = set(rep.per_source_W) == {(0, 3, 6, 4)} and rep.kbar == Fraction(27, 13)
    return not uneven and heawood, f"uneven loads for q in {uneven}, Heawood W/kbar ok: {heawood}"


def criterion_3():
    G = build("mms", q=5)
    rep = analyze(G)
    ok = G.N == 50 and G.degree_counts() == {7: 50} and rep.k == 2 and rep.u == 1
    return ok, f"N={G.N} degrees={G.degree_counts()} k={rep.k} u={rep.u}"


def criterion_4():
    t0 = time.perf_counter()
    us = {}
    for q in (13, 17, 19, 25):
        us[q] = analyze(build("mms", q=q)).u
    near = all(abs(float(u) - 8 / 9) <= 0.01 for u in us.values())
    kbar = analyze(build("mms", q=19), loads=False).kbar
    sub = Fraction(13) * kbar / (29 * us[19])
    dt = time.perf_counter() - t0
    ok = near and _rounded_match(sub, 0.991) and dt < 300
    detail = " ".join(f"u({q})={float(u):.5f}" for q, u in us.items())
    return ok, f"{detail}; MMS(19) subscription {float(sub):.5f}; {dt:.1f} s"


def _table_rows(tid, mode="injected"):
    return reproduce_table(tid, mode)


def criterion_5():
    wrong = []
    for tid in ("IV", "V"):
        for row, rep in _table_rows(tid):
            exact = (rep.T, rep.R, rep.N, rep.Delta0) == (row["T"], row["R"], row["N"], row["Delta0"])
            if not (exact and _rounded_match(rep.subscription, row["subscription"])):
                wrong.append(f"{row['label']} ({rep.T},{rep.R},{rep.N},{rep.Delta0},"
                             f"{float(rep.subscription):.3f})")
    return not wrong, f"wrong rows: {wrong}" if wrong else "10/10 rows exact"


def criterion_6():
    worst_cost = worst_power = 0.0
    n = 0
    for tid in ("IV", "V", "VI"):
        for row, rep in _table_rows(tid):
            worst_cost = max(worst_cost, abs(rep.cost_per_node - row["cost"]))
            worst_power = max(worst_power, abs(rep.power_per_node - row["power"]))
            n += 1
    ok = n == 14 and worst_cost <= 0.05 and worst_power <= 0.01 + 1e-9
    return ok, f"{n} rows, max |cost err| ${worst_cost:.3f}, max |power err| {worst_power:.4f} W"


def criterion_7():
    cfg10 = CostConfig.preset("ref-10k")
    ham = layout(build("hamming", n=22), 22, cfg10, "natural")
    ham_ok = (ham.electrical, ham.optical) == (5082, 5082)
    indirect_ok = True
    for row in load_reference_tables()["VI"]["rows"]:
        G = build(row["family"], **row["params"])
        lay = layout(G, row["Delta0"], cfg10, "natural")
        indirect_ok &= (lay.electrical, lay.optical) == (0, row["optical"])
    row = next(r for r in load_reference_tables()["IV"]["rows"] if r["family"] == "demi_pn")
    G = build("demi_pn", q=27)
    rep = design(G, analyze(G), cfg10, strategy="greedy", group_routers=round(504 / 14), seed=0)
    split_ok = (abs(rep.electrical_cables - 556) <= 55.6 and abs(rep.optical_cables - 10028) <= 1002.8)
    cost_ok = abs(rep.cost_per_node / row["cost"] - 1) <= 0.015
    ok = ham_ok and indirect_ok and split_ok and cost_ok
    detail = (f"Hamming {ham.electrical}/{ham.optical}, indirect all-optical {indirect_ok}, "
              f"greedy demi-PN(27) {rep.n_groups} groups {rep.electrical_cables}/{rep.optical_cables} "
              f"${rep.cost_per_node:.2f} ({100 * (rep.cost_per_node / row['cost'] - 1):+.2f}%)")
    return ok, detail


def criterion_8():
    moore = (moore_bound(3, 2), moore_bound(7, 2), moore_bound(57, 2)) == (10, 50, 3250)
    leaf = all(indirect_leaf_bound(Delta=q + 1, delta=0, R=2 * (q + 1)) >= 2 * (q * q + q + 1)
               for q in (2, 4, 8, 16))
    gm_true = [generalized_moore_check(build("pn", q=2)), generalized_moore_check(build("paley", q=13))]
    gm_true += [generalized_moore_check(build("hamming", n=n)) for n in range(2, 9)]
    gm_false = not generalized_moore_check(build("dragonfly", h=7))
    ok = moore and leaf and all(gm_true) and gm_false
    return ok, f"moore {moore}, leaf bound {leaf}, GM true cases {sum(gm_true)}/{len(gm_true)}, dragonfly false {gm_false}"


def criterion_9():
    bad = []
    for family, key, vals in (("oft", "q", (2, 4, 16)), ("mlfm", "n", (4, 22))):
        for x in vals:
            G = build(family, **{key: x})
            m = analyze(G, LEAF_TO_LEAF)
            rep = design(G, m, strategy=None)
            lhs = Fraction(rep.N * rep.R, len(G.leaves) * rep.Delta0)
            if not (m.kbar == 2 and m.u == 1 and lhs == 1 + m.kbar / m.u):
                bad.append(f"{family}({x})")
    return not bad, f"failures {bad}" if bad else "5/5 identities exact"


def small_bundled_graphs():
    """Every buildable instance with at most 64 routers."""
    specs = [("pn", {"q": q}) for q in (2, 3, 4)]
    specs += [("demi_pn", {"q": q}) for q in (2, 3, 4, 5, 7)]
    specs += [("mms", {"q": q}) for q in (3, 4, 5)]
    specs += [("oft", {"q": q}) for q in (2, 3)]
    specs += [("mlfm", {"n": n}) for n in range(2, 8)]
    specs += [("complete", {"n": n}) for n in (3, 8, 16)]
    specs += [("complete_bipartite", {"n": n}) for n in (2, 5, 16)]
    specs += [("turan", {"n": 16, "r": 4}), ("turan", {"n": 13, "r": 3})]
    specs += [("paley", {"q": q}) for q in (5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61)]
    specs += [("hamming", {"n": n}) for n in range(2, 9)] + [("hamming", {"n": 3, "dim": 3})]
    specs += [("hypercube", {"n": n}) for n in range(1, 7)]
    specs += [("dragonfly", {"h": h}) for h in (1, 2)]
    specs += [("random_regular", {"n": 40, "degree": 5, "seed": s}) for s in range(3)]
    return specs


def criterion_10():
    bad, checked = [], 0
    for family, params in small_bundled_graphs():
        G = build(family, **params)
        assert G.N <= 64
        scopes = (ALL_PAIRS, LEAF_TO_LEAF) if G.has_spines else (ALL_PAIRS,)
        for scope in scopes:
            checked += 1
            if analyze(G, scope).arc_loads != brute_force_arc_loads(G, scope):
                bad.append(f"{family}{params}/{scope.mode}")
    return not bad, f"{checked} graph/scope cases, mismatches {bad}"


def criterion_11():
    us = [analyze(build_random_regular(722, 29, seed=s)).u for s in range(5)]
    mean = sum(float(u) for u in us) / len(us)
    return 0.70 <= mean <= 0.90, f"u = {[round(float(u), 4) for u in us]}, mean {mean:.4f}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    RESULTS[number] = (ok, detail)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def main() -> int:
    failed = 0
    for number, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
