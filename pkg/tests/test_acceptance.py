"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or directly:

    python tests/test_acceptance.py

Every threshold below is exact unless stated; random samples use fixed seeds.
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from oracles import (  # noqa: E402
    atlas,
    brute_chromatic,
    brute_matching,
    naive_has_kt_minor,
    naive_hd,
    reference_alpha2,
)

from domhad.canon import canonical_key  # noqa: E402
from domhad.catalog import ALPHA2_FIVE, ALPHA2_FOUR, catalog  # noqa: E402
from domhad.construct import (  # noqa: E402
    build_mindeg_certificate,
    build_omega_certificate,
    ceil_half,
    find_dominating_edge,
    find_induced_c5_through,
    omega_hypothesis,
)
from domhad.graph import Graph, complement, join, subdivide_once  # noqa: E402
from domhad.hunt import enumerate_alpha2, strip_run  # noqa: E402
from domhad.invariants import chromatic_number, matching_number, max_clique  # noqa: E402
from domhad.minors import DominatingSearch, has_dominating_kt, has_kt_minor, hd, verify_dominating  # noqa: E402
from domhad.seagull import feasibility, is_w5, max_disjoint_seagulls  # noqa: E402
from domhad.theorems import check_theorem  # noqa: E402

# pinned scales and tolerances
ORACLE_MAX_N = 6
SMALL_N_SWEEP = range(4, 10)
RANDOM_SPOT = {10: 500, 11: 500}
RANDOM_SEED = 20240611
SEAGULL_MAX_N = 9
SEAGULL_ELLS = (1, 2, 3)
OMEGA_MAX_N = 10
OMEGA_CONSTRUCTIVE_MAX_N = 9
OMEGA_MIN_CONSTRUCTIVE_RATE = 0.95
MINDEG_MAX_N = 9
C5_MAX_N = 10
CENSUS = {4: 7, 5: 14, 6: 38, 7: 107, 8: 410, 9: 1897, 10: 12172}
MATCHING_MAX_N = 7
CHI_MAX_N = 8
JOIN_PAIR_MAX_N = 4
HUNT_MAX_N = 7


def _line(tag: str, ok: bool, title: str, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] {tag} {title}: {detail}"


def _oracle_set() -> list[Graph]:
    """All graphs on at most six vertices plus the alpha <= 2 graphs on seven."""
    gs = [Graph.empty(0)]
    for n in range(1, ORACLE_MAX_N + 1):
        gs.extend(atlas(n))
    gs.extend(reference_alpha2(7))
    return gs


_HD: dict[tuple, int] = {}


def _hd(g: Graph) -> int:
    key = canonical_key(g)
    if key not in _HD:
        _HD[key] = hd(g).value
    return _HD[key]


def random_alpha2(n: int, rng: random.Random) -> Graph:
    """Complement of a random triangle-free graph (random edge order, random density)."""
    p = rng.uniform(0.15, 0.6)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    for u, v in pairs:
        if rng.random() < p and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return complement(Graph(n, tuple(adj)))


def path_cycle_complements(max_n: int):
    """Graphs whose complement is a disjoint union of paths and cycles, one per multiset of parts."""

    def parts(n, least):
        if n == 0:
            yield []
            return
        for k in range(least, n + 1):
            for rest in parts(n - k, k):
                yield [k] + rest

    for n in range(1, max_n + 1):
        seen = set()
        for p in parts(n, 1):
            choices = [[("P", k)] + ([("C", k)] if k >= 3 else []) for k in p]
            stack = [[]]
            for opts in choices:
                stack = [s + [o] for s in stack for o in opts]
            for combo in stack:
                key = tuple(sorted(combo))
                if key in seen:
                    continue
                seen.add(key)
                edges, base = [], 0
                for kind, k in key:
                    edges += [(base + i, base + i + 1) for i in range(k - 1)]
                    if kind == "C":
                        edges.append((base, base + k - 1))
                    base += k
                yield complement(Graph.from_edges(n, edges))


# --- criteria ------------------------------------------------------------------------


def criterion_01():
    gs = _oracle_set()
    bad = [g for g in gs if _hd(g) != naive_hd(g)]
    small = sum(1 for g in gs if g.n <= ORACLE_MAX_N)
    return not bad, f"{len(gs) - len(bad)}/{len(gs)} agree ({small} graphs with n<=6, {len(gs) - small} alpha<=2 at n=7)"


def criterion_02():
    checks = {"h_d(subdivided K_4)=3": hd(subdivide_once(catalog("K_4"))).value == 3,
              "h_d(C_5)=3": hd(catalog("C_5")).value == 3}
    for n in range(1, 11):
        checks[f"h_d(K_{n})={n}"] = hd(catalog(f"K_{n}")).value == n
    wrong = [k for k, v in checks.items() if not v]
    return not wrong, f"{len(checks) - len(wrong)}/{len(checks)} exact" + (f"; wrong: {wrong}" if wrong else "")


def criterion_03():
    fails, total = [], 0
    for n in SMALL_N_SWEEP:
        for g in enumerate_alpha2(n):
            total += 1
            if DominatingSearch(g).search(g.vertices, ceil_half(n)) is None:
                fails.append(g)
    expected = sum(CENSUS[n] for n in SMALL_N_SWEEP)
    rng = random.Random(RANDOM_SEED)
    spot = 0
    for n, count in RANDOM_SPOT.items():
        for _ in range(count):
            g = random_alpha2(n, rng)
            spot += 1
            if DominatingSearch(g).search(g.vertices, ceil_half(n)) is None:
                fails.append(g)
    ok = not fails and total == expected
    return ok, f"{total} exhaustive (n=4..9) + {spot} random (n=10,11): {len(fails)} below ceil(n/2)"


def criterion_04():
    discrepancies = []
    tight = 0
    graphs = 0
    for n in range(1, SEAGULL_MAX_N + 1):
        for g in enumerate_alpha2(n):
            graphs += 1
            best = len(max_disjoint_seagulls(g))
            for ell in SEAGULL_ELLS:
                holds = feasibility(g, ell).all_hold
                if holds != (best >= ell):
                    discrepancies.append((g, ell, holds, best))
                tight += holds and best == ell
    only_w5 = (
        len(discrepancies) == 1
        and is_w5(discrepancies[0][0])
        and discrepancies[0][1] == 2
        and discrepancies[0][2]
        and discrepancies[0][3] == 1
    )
    return only_w5, f"{graphs} graphs x ell in {{1,2,3}}: {len(discrepancies)} discrepancy ({'W_5, ell=2, packing 1' if only_w5 else discrepancies[:3]})"


def criterion_05():
    fails, n_graphs = [], 0
    both = {True: 0, False: 0}
    for n in range(1, 10):
        for g in enumerate_alpha2(n):
            n_graphs += 1
            v = check_theorem(g, "equiv")
            if v.status != "pass":
                fails.append((g, v.status))
            else:
                both[v.detail["hd"] >= v.detail["chi"]] += 1
    return not fails, f"{n_graphs} graphs, {len(fails)} failures (h_d>=chi on {both[True]}, both sides false on {both[False]})"


def criterion_06():
    bad, total, constructive_small, total_small = [], 0, 0, 0
    for n in range(1, OMEGA_MAX_N + 1):
        for g in enumerate_alpha2(n):
            if not omega_hypothesis(g):
                continue
            total += 1
            cert = build_omega_certificate(g)
            if cert.order < ceil_half(n) or not verify_dominating(g, cert):
                bad.append(g)
            if n <= OMEGA_CONSTRUCTIVE_MAX_N:
                total_small += 1
                constructive_small += not cert.provenance.endswith("exact-fallback")
    rate = constructive_small / total_small
    ok = not bad and rate >= OMEGA_MIN_CONSTRUCTIVE_RATE
    return ok, f"{total} graphs, {len(bad)} failures; constructive at n<=9: {constructive_small}/{total_small} = {rate:.2%} (need >= 95%)"


def criterion_07():
    bad, total = [], 0
    for g in path_cycle_complements(MINDEG_MAX_N):
        total += 1
        cert = build_mindeg_certificate(g)
        if not verify_dominating(g, cert) or cert.order < chromatic_number(g):
            bad.append(g)
    return not bad, f"{total} graphs, {len(bad)} below chi"


def criterion_08():
    misses, qualifying = [], 0
    for n in range(1, C5_MAX_N + 1):
        for g in enumerate_alpha2(n):
            if max_clique(g).bit_count() >= ceil_half(n) or find_dominating_edge(g) is not None:
                continue
            for x in range(n):
                if g.degree(x) < n - 1:
                    qualifying += 1
                    if find_induced_c5_through(g, x) is None:
                        misses.append((g, x))
    ok = not misses and qualifying > 0
    return ok, f"{qualifying} qualifying (graph, vertex) pairs, {len(misses)} misses"


def criterion_09():
    counts = {n: 0 for n in CENSUS}
    keys = {4: set(), 5: set()}
    for n in CENSUS:
        for g in enumerate_alpha2(n):
            counts[n] += 1
            if n in keys:
                keys[n].add(canonical_key(g))
    named4 = {canonical_key(catalog(x)) for x in ALPHA2_FOUR}
    named5 = {canonical_key(catalog(x)) for x in ALPHA2_FIVE}
    ok = counts == CENSUS and keys[4] == named4 and keys[5] == named5
    return ok, f"counts {[counts[n] for n in CENSUS]}; named lists match: n=4 {keys[4] == named4}, n=5 {keys[5] == named5}"


def criterion_10():
    mbad, mtotal = 0, 0
    for n in range(1, MATCHING_MAX_N + 1):
        for g in atlas(n):
            mtotal += 1
            mbad += matching_number(g) != brute_matching(g)
    cbad, ctotal = 0, 0
    for n in range(1, CHI_MAX_N + 1):
        for g in reference_alpha2(n):
            ctotal += 1
            cbad += g.n - matching_number(complement(g)) != brute_chromatic(g)
    return mbad == cbad == 0, f"matching {mtotal - mbad}/{mtotal}, chi formula {ctotal - cbad}/{ctotal}"


def criterion_11():
    gs = _oracle_set()
    v = {"h_d>=omega": 0, "deletion": 0, "join": 0, "t<=3": 0}
    checked = {k: 0 for k in v}
    for g in gs:
        h = _hd(g)
        checked["h_d>=omega"] += 1
        v["h_d>=omega"] += h < max_clique(g).bit_count()
        for x in range(g.n):
            checked["deletion"] += 1
            v["deletion"] += h < _hd(g.delete(x))
        for t in (1, 2, 3):
            checked["t<=3"] += 1
            dom = has_dominating_kt(g, t) is not None
            v["t<=3"] += not (dom == has_kt_minor(g, t) == naive_has_kt_minor(g, t))
    small = [g for n in range(1, JOIN_PAIR_MAX_N + 1) for g in atlas(n)]
    for i, a in enumerate(small):
        for b in small[i:]:
            checked["join"] += 1
            v["join"] += _hd(join(a, b)) < _hd(a) + _hd(b)
    ok = not any(v.values())
    return ok, ", ".join(f"{k}: {v[k]} violations/{checked[k]}" for k in v)


def criterion_12():
    with tempfile.TemporaryDirectory() as d:
        d = Path(d)
        env = {k: val for k, val in os.environ.items() if k != "DOMHAD_WORKERS"}

        def hunt(tag: str, *extra: str) -> subprocess.CompletedProcess:
            cfg = d / f"{tag}.cfg.json"
            cfg.write_text(json.dumps({
                "n_min": 1, "n_max": HUNT_MAX_N, "predicate": "small-n", "checkpoint_every": 25,
                "checkpoint": str(d / f"{tag}.ck.json"), "output": str(d / f"{tag}.report.json"),
            }))
            return subprocess.run([sys.executable, "-m", "domhad", "hunt", "--config", str(cfg), *extra],
                                  capture_output=True, text=True, env=env)

        r1 = hunt("w1", "--workers", "1")
        r8 = hunt("w8", "--workers", "8")
        killed = hunt("kill", "--workers", "1", "--halt-after", "60")
        died = killed.returncode != 0 and not (d / "kill.report.json").exists() and (d / "kill.ck.json").exists()
        resumed = hunt("kill", "--workers", "1", "--resume")
        codes = [r1.returncode, r8.returncode, resumed.returncode]
        texts = [strip_run((d / f"{t}.report.json").read_text()) for t in ("w1", "w8", "kill")
                 if (d / f"{t}.report.json").exists()]
        same = len(texts) == 3 and texts[0] == texts[1] == texts[2]
        fails = json.loads(texts[0])["counts"] if texts else {}
        total_fail = sum(c["fail"] for c in fails.values())
        ok = same and died and codes == [0, 0, 0] and total_fail == 0
        return ok, f"1 worker / 8 workers / killed+resumed reports identical: {same}; interrupted run left only a checkpoint: {died}; fails={total_fail}"


CRITERIA = [
    ("C01", "oracle equivalence of h_d", criterion_01),
    ("C02", "known values", criterion_02),
    ("C03", "h_d >= ceil(n/2) sweep", criterion_03),
    ("C04", "seagull packing biconditional", criterion_04),
    ("C05", "chi/half biconditional", criterion_05),
    ("C06", "constructive omega bound", criterion_06),
    ("C07", "constructive min-degree bound", criterion_07),
    ("C08", "induced C_5 guarantee", criterion_08),
    ("C09", "alpha<=2 census", criterion_09),
    ("C10", "matching and chi formula", criterion_10),
    ("C11", "property suite", criterion_11),
    ("C12", "hunt determinism", criterion_12),
]


def _run(tag, title, fn) -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = fn()
    return ok, _line(tag, ok, title, detail) + f" ({time.perf_counter() - start:.1f}s)"


@pytest.mark.parametrize("tag, title, fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(tag, title, fn, capsys):
    ok, line = _run(tag, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    passed = True
    for c in CRITERIA:
        ok, line = _run(*c)
        print(line, flush=True)
        passed &= ok
    sys.exit(0 if passed else 1)
