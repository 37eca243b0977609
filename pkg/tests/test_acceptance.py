"""Acceptance criteria, one test per criterion.

Run under pytest (the conftest prints a PASS/FAIL line per criterion) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import sys
import time
from functools import lru_cache
from itertools import product
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import extendable, gp_edges, is_star_brute, seq_is_star, t_of  # noqa: E402

from gpstar import GPGraph, Method, SearchConfig, dispatch, star_chromatic_index, verify_star  # noqa: E402
from gpstar.cli import main as cli_main  # noqa: E402
from gpstar.io import from_dot, load_coloring, to_dot  # noqa: E402
from gpstar.coloring import PartialColoring  # noqa: E402
from gpstar.segments import (  # noqa: E402
    ExtensionInfeasible,
    cycle_five_constraints_seq,
    cycle_three_edges_seq,
    cycle_two_paths_seq,
    gap_feasible,
    path_gap_seq,
    two_path_windows,
)

CRITERIA = {
    1: "main sweep: d >= 3, 6 <= n <= 120, clean with <= 5 colors in under 2 minutes",
    2: "outer cycle: MainD3 runs leave at most one outer edge colored 3 or 4",
    3: "d = 2 covered residues up to n = 120 are clean with <= 5 colors",
    4: "exact anchors: GP(3,1) = 6, GP(4,1) = 4, index 4 iff n = 0 mod 4 and k odd",
    5: "path gap feasibility agrees with brute force for lengths 5..10",
    6: "cycle extension routines: total, agree with precoloring, star, n in 6..30",
    7: "construction never beats the exact index and stays within 5 (6 for GP(3,1))",
    8: "color output is deterministic and exports round-trip",
}

PALETTE = (0, 1, 2)
SAMPLES = 600


def _instances(n_max: int, want):
    for n in range(6, n_max + 1):
        for k in range(1, n // 2 + 1):
            if want(n, k):
                yield n, k


def _d2_covered(n: int, k: int) -> bool:
    if gcd(n, k) != 2:
        return False
    t = t_of(n, k)
    return n % 6 == 0 or (n % 6 == 2 and t % 3 == 2) or (n % 6 == 4 and t % 3 == 1)


@lru_cache(maxsize=None)
def _sweep(kind: str) -> tuple[float, tuple]:
    want = (lambda n, k: gcd(n, k) >= 3) if kind == "d3" else _d2_covered
    start = time.perf_counter()
    rows = []
    for n, k in _instances(120, want):
        g = GPGraph(n, k)
        try:
            rep = dispatch(g)
        except Exception as exc:  # any crash counts as a failure
            rows.append((n, k, None, repr(exc)))
            continue
        rows.append((n, k, rep, verify_star(g, rep.coloring, require_total=True)))
    return time.perf_counter() - start, tuple(rows)


def check_c1() -> str:
    elapsed, rows = _sweep("d3")
    bad = [(n, k) for n, k, rep, viol in rows if rep is None or viol or rep.colors_used > 5]
    assert not bad, f"{len(bad)} failures, first {bad[:5]}"
    assert elapsed < 120, f"sweep took {elapsed:.1f}s"
    return f"{len(rows)} instances in {elapsed:.1f}s"


def check_c2() -> str:
    _, rows = _sweep("d3")
    main = [(n, k, rep) for n, k, rep, _ in rows if rep is not None and rep.method is Method.MAIN_D3]
    bad = []
    for n, k, rep in main:
        g = rep.graph
        off = [e for e in g.outer_cycle if rep.coloring.get(e) in (3, 4)]
        if len(off) > 1:
            bad.append((n, k, len(off)))
    assert main, "no MainD3 instances in the sweep"
    assert not bad, f"{len(bad)} runs with several off-palette outer edges: {bad[:5]}"
    return f"{len(main)} MainD3 runs"


def check_c3() -> str:
    _, rows = _sweep("d2")
    bad = [(n, k) for n, k, rep, viol in rows if rep is None or viol or rep.colors_used > 5]
    assert rows
    assert not bad, f"{len(bad)} failures, first {bad[:5]}"
    return f"{len(rows)} instances"


def check_c4() -> str:
    slow = []

    def index(n, k):
        g = GPGraph(n, k)
        start = time.perf_counter()
        val = star_chromatic_index(g, SearchConfig(max_colors=7, node_budget=50_000_000))
        if time.perf_counter() - start >= 60:
            slow.append((n, k))
        return val

    assert index(3, 1) == 6
    assert index(4, 1) == 4
    wrong = []
    count = 0
    # the characterization is stated for cubic graphs, so n > 2k
    for n in range(3, 13):
        for k in range(1, (n - 1) // 2 + 1):
            count += 1
            expect = n % 4 == 0 and k % 2 == 1
            if (index(n, k) == 4) != expect:
                wrong.append((n, k))
    assert not wrong, f"iff fails at {wrong}"
    assert not slow, f"over 60s: {slow}"
    return f"{count} cubic instances with n <= 12"


def check_c5() -> str:
    count = 0
    for n in range(5, 11):
        for left in product(PALETTE, repeat=2):
            if left[0] == left[1]:
                continue
            for right in product(PALETTE, repeat=n - 4):
                if not seq_is_star(right, False):
                    continue
                count += 1
                brute = extendable(list(left) + [None, None] + list(right), False)
                assert gap_feasible(n, left, right) == brute, (n, left, right)
                try:
                    seq = path_gap_seq(n, left, right, PALETTE)
                except ExtensionInfeasible:
                    assert not brute, (n, left, right)
                else:
                    assert brute and seq_is_star(seq, False), (n, left, right)
                    assert list(seq[:2]) == list(left) and list(seq[4:]) == list(right)
    return f"{count} precolorings"


def _two_paths() -> int:
    count = 0
    for n in range(6, 31):
        for i in range(n):
            try:
                pre = two_path_windows(n, i, PALETTE)
            except ValueError:
                continue  # the two windows disagree where they overlap
            seq = cycle_two_paths_seq(n, i, PALETTE)
            assert len(seq) == n and None not in seq
            assert all(seq[x] == c for x, c in pre.items()), (n, i)
            assert seq_is_star(seq, True), (n, i)
            count += 1
    return count


def _three_edges(rng: random.Random) -> int:
    count = 0
    while count < SAMPLES:
        n = rng.randint(6, 30)
        x = rng.randrange(n)
        a = rng.choice(PALETTE)
        b = rng.choice([c for c in PALETTE if c != a])
        y = rng.choice([z for z in range(n) if z not in (x, (x + 1) % n)])
        pre = {x: a, (x + 1) % n: b, y: rng.choice(PALETTE)}
        seq = [pre.get(z) for z in range(n)]
        if any(seq[z] is not None and seq[z] == seq[(z + 1) % n] for z in range(n)):
            continue  # not a proper precoloring
        count += 1
        assert extendable(seq, True), (n, pre)
        out, _ = cycle_three_edges_seq(n, pre, PALETTE)
        assert len(out) == n and None not in out
        assert all(out[z] == c for z, c in pre.items()), (n, pre)
        assert seq_is_star(out, True), (n, pre)
    return count


def _five_constraints(rng: random.Random) -> tuple[int, int]:
    params = [
        (n, i, j, f)
        for n in range(6, 31)
        for i in range(2, n - 1)
        for j in range(i + 2, n - 1, 2)
        for f in PALETTE
    ]
    cases = rng.sample(params, SAMPLES)
    a, b, c = PALETTE
    empty = 0
    for n, i, j, f in cases:
        seq = [f] + [None] * (n - 1)
        possible = extendable(seq, True, pairs={i: {a, b}, j: {b, c}})
        try:
            out, _ = cycle_five_constraints_seq(n, i, j, f, PALETTE)
        except ExtensionInfeasible:
            # only parameter sets with no coloring at all may be refused
            assert not possible, (n, i, j, f)
            empty += 1
            continue
        assert possible
        assert len(out) == n and out[0] == f and seq_is_star(out, True), (n, i, j, f)
        assert {out[i - 1], out[i]} == {a, b} and {out[j - 1], out[j]} == {b, c}, (n, i, j, f)
    return len(cases), empty


def check_c6() -> str:
    rng = random.Random(20240601)
    n21 = _two_paths()
    n23 = _three_edges(rng)
    n24, empty = _five_constraints(rng)
    return f"two paths {n21} exhaustive, three edges {n23} sampled, five constraints {n24} sampled ({empty} without any coloring)"


def _small_instances():
    for n in range(3, 15):
        for k in range(1, n // 2 + 1):
            if len(GPGraph(n, k).edges) <= 36:
                yield n, k


def check_c7() -> str:
    bad = []
    count = 0
    for n, k in _small_instances():
        g = GPGraph(n, k)
        rep = dispatch(g)
        assert not verify_star(g, rep.coloring, require_total=True), (n, k)
        pairs = gp_edges(n, k)
        ids = [g.eid(u, v) for u, v in pairs]
        assert is_star_brute(pairs, [rep.coloring[e] for e in ids]), (n, k)
        exact = star_chromatic_index(g, SearchConfig(max_colors=7, node_budget=50_000_000))
        limit = 6 if (n, k) == (3, 1) else 5
        if rep.colors_used < exact or rep.colors_used > limit:
            bad.append((n, k, rep.colors_used, exact))
        count += 1
    assert not bad, f"(n, k, used, exact): {bad}"
    return f"{count} instances"


def _capture(argv: list[str]) -> tuple[int, str]:
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def check_c8(tmp: Path | None = None) -> str:
    import tempfile

    tmp = Path(tmp or tempfile.mkdtemp())
    checked = 0
    for n, k in [(3, 1), (9, 3), (10, 2), (12, 4), (15, 5), (20, 4), (30, 10)]:
        code1, out1 = _capture(["color", str(n), str(k), "--allow-six"])
        code2, out2 = _capture(["color", str(n), str(k), "--allow-six"])
        assert code1 == code2 == 0, (n, k, code1, code2)
        assert out1 == out2, f"GP({n},{k}) output differs between runs"
        data = json.loads(out1)
        col = PartialColoring.from_dict(data)
        assert col.to_dict()["edges"] == data["edges"]
        assert from_dot(to_dot(col)).as_dict() == col.as_dict()
        path = tmp / f"gp_{n}_{k}.dot"
        assert _capture(["export", str(n), str(k), "--format", "dot", "-o", str(path)])[0] == 0
        assert load_coloring(path).as_dict() == col.as_dict()
        jpath = tmp / f"gp_{n}_{k}.json"
        assert _capture(["export", "--input", str(path), "--format", "json", "-o", str(jpath)])[0] == 0
        assert load_coloring(jpath).as_dict() == col.as_dict()
        checked += 1
    return f"{checked} instances"


CHECKS = {1: check_c1, 2: check_c2, 3: check_c3, 4: check_c4, 5: check_c5, 6: check_c6, 7: check_c7, 8: check_c8}


def test_c1_main_sweep():
    check_c1()


def test_c2_outer_offpalette_invariant():
    check_c2()


def test_c3_d2_coverage():
    check_c3()


def test_c4_exact_anchors():
    check_c4()


def test_c5_path_gap_iff():
    check_c5()


def test_c6_cycle_extensions():
    check_c6()


def test_c7_construction_vs_exact():
    check_c7()


def test_c8_determinism_round_trip(tmp_path):
    check_c8(tmp_path)


if __name__ == "__main__":
    failed = 0
    for num, fn in CHECKS.items():
        try:
            detail = fn()
        except AssertionError as exc:
            failed += 1
            print(f"FAIL criterion {num}: {CRITERIA[num]} ({exc})")
        else:
            print(f"PASS criterion {num}: {CRITERIA[num]} ({detail})")
    sys.exit(1 if failed else 0)
