"""Exit criteria. Each test logs one PASS/FAIL line, shown in the pytest summary.

Runtimes for the sub-10 ms criteria are the best of five repeats.
"""

import itertools
import time

from antlab.behavior import RECURRENT, detect_highway, sweep
from antlab.cli import main
from antlab.engine import home_return_times, new_universe, universe_from_states
from antlab.rules import from_code, run_structure
from antlab.symmetry import detect_symmetries
from antlab.truchet import (
    all_contours,
    ant_path,
    diagonals_graph,
    principal_contour,
    split_check,
    tour,
    twice_visited_cells,
)

RECURRENT_ANTS = [9, 12, 33, 39, 48, 51, 57, 60]


def best_of(fn, repeats=5):
    best, result = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def record(log, number, ok, detail):
    log.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    print(log[-1])
    assert ok, detail


def test_c01_ant12_home_returns(acceptance_log):
    def check():
        u = new_universe("LLRR")
        times, mirrors = [], []
        for _ in range(4):
            u.run_to_next_home(40 - u.time)
            times.append(u.time)
            mirrors.append(detect_symmetries(u).mirror)
        return times, mirrors, home_return_times(new_universe("LLRR"), 40)

    (times, mirrors, listed), secs = best_of(check)
    ok = times == [4, 8, 28, 32] and listed[:4] == times and all(mirrors) and secs < 1e-3
    record(acceptance_log, 1, ok, f"returns {listed} mirror {mirrors} in {secs * 1e3:.3f} ms (< 1 ms)")


def test_c02_ant2_transient_central_symmetry(acceptance_log):
    def check():
        u = new_universe("LR")
        out = {}
        for t in (184, 368, 472):
            u.run_until(t)
            out[t] = detect_symmetries(u).central
        return out

    found, secs = best_of(check)
    ok = all(found.values()) and secs < 10e-3
    record(acceptance_log, 2, ok, f"central symmetry {found} in {secs * 1e3:.2f} ms (< 10 ms)")


def test_c03_ant2_highway(acceptance_log):
    hw, secs = timed(lambda: detect_highway("LR", 15_000))
    onset_ok = hw.detected and 8_000 <= hw.onset_time <= 11_000
    southwest = hw.displacement[0] < 0 and hw.displacement[1] < 0
    ok = onset_ok and southwest and secs < 1.0
    record(
        acceptance_log,
        3,
        ok,
        f"detected={hw.detected} onset {hw.onset_time} period {hw.period} "
        f"displacement {hw.displacement} (southwest required: {southwest}) in {secs:.3f} s (< 1 s)",
    )


def test_c04_figure_times_bilateral(acceptance_log):
    details, ok = [], True
    for rule, t, alt in (("LLRR", 16_464, None), ("LRRL", 38_836, 36_836)):
        def check(rule=rule, t=t):
            u = new_universe(rule).run_until(t)
            return u.at_home, detect_symmetries(u).mirror

        (home, mirror), secs = timed(check)
        passed = home and mirror and secs < 1.0
        ok &= passed
        details.append(f"{rule}@{t} home={home} mirror={mirror} {secs:.3f}s")
        if alt is not None:
            u = new_universe(rule).run_until(alt)
            details.append(f"{rule}@{alt} home={u.at_home} mirror={detect_symmetries(u).mirror}")
    record(acceptance_log, 4, ok, "; ".join(details))


def test_c05_ant48_six_components(acceptance_log):
    def check():
        return len(diagonals_graph(new_universe("LLRRRR").run_until(7016)).components())

    k, secs = timed(check)
    record(acceptance_log, 5, k == 6 and secs < 1.0, f"{k} components in {secs:.3f} s (< 1 s)")


def test_c06_invariant_suite(acceptance_log):
    def check():
        violations = []
        for code in RECURRENT_ANTS:
            u = new_universe(from_code(code))
            for i in range(50):
                r = tour(u)
                if not (r.even_before and r.lemma1 and r.lemma2 and r.even_after and r.property1):
                    violations.append((code, i, r))
        return violations

    violations, secs = timed(check)
    ok = not violations and secs < 30
    record(acceptance_log, 6, ok, f"{len(violations)} violations over 8 ants x 50 tours in {secs:.2f} s (< 30 s)")


def test_c07_sweep_reproduction(acceptance_log):
    def check():
        four = {r.code for r in sweep(4, 50_000) if r.classification == RECURRENT}
        six = {r.code for r in sweep(6, 50_000) if r.classification == RECURRENT}
        bad_div = [
            code
            for n in range(1, 17)
            for code in range(1 << (n - 1), 1 << n)
            if run_structure(from_code(code)).even_run_length and code % 3
        ]
        return four, six, bad_div

    (four, six, bad_div), secs = timed(check)
    ok = (
        four == {9, 12}
        and six >= {33, 39, 48, 51, 57, 60}
        and all(c % 3 == 0 for c in six)
        and not bad_div
        and secs < 120
    )
    record(
        acceptance_log,
        7,
        ok,
        f"n=4 {sorted(four)}; n=6 {sorted(six)}; divisibility violations {len(bad_div)} in {secs:.1f} s (< 120 s)",
    )


def test_c08_geometry_pinning(acceptance_log):
    window = [(x, y) for x in range(-2, 4) for y in range(-3, 3)]

    def check():
        circles = all(len(c) == 4 and len(c.cells) == 4 for c in all_contours(new_universe("LLRR"), window))
        u = new_universe("LLRR")
        static = principal_contour(u).arcs
        return circles, tuple(ant_path(u, 100)) == static

    (circles, same), secs = best_of(check)
    ok = circles and same and secs < 1e-3
    record(acceptance_log, 8, ok, f"circles={circles} static==path={same} in {secs * 1e3:.3f} ms (< 1 ms)")


def test_c09_split_and_handshake_oracles(acceptance_log):
    def check():
        splits = violations = graphs = odd = 0
        for xs, ys in ((range(-1, 2), range(-1, 2)), (range(-1, 3), range(-2, 2))):
            cells = [(x, y) for y in ys for x in xs]
            for bits in itertools.product((2, 4), repeat=len(cells)):
                u = universe_from_states("LLRR", dict(zip(cells, bits)))
                g = diagonals_graph(u)
                graphs += 1
                odd += sum(k % 2 for k in g.odd_vertex_counts())
                c = principal_contour(u)
                for t in twice_visited_cells(c):
                    res = split_check(u, c, t, g)
                    splits += 1
                    violations += not (res.split and res.disjoint_components)
        return splits, violations, graphs, odd

    (splits, violations, graphs, odd), secs = timed(check)
    ok = splits > 0 and violations == 0 and odd == 0 and secs < 60
    record(
        acceptance_log,
        9,
        ok,
        f"{splits} splits, {violations} violations; {graphs} graphs, {odd} handshake failures in {secs:.1f} s (< 60 s)",
    )


def test_c10_determinism(acceptance_log, tmp_path, capsys):
    def produce(d):
        d.mkdir()
        main(["run", "--rule", "LLRRRR", "--steps", "3000", "--snapshot", str(d / "a")])
        main(["run", "--from", str(d / "a"), "--steps", "4016", "--snapshot", str(d / "b")])
        main(["run", "--code", "48", "--steps", "7016", "--snapshot", str(d / "direct")])
        for style in ("states", "truchet", "diagonals"):
            main(["render", "--snapshot", str(d / "b"), "--style", style, "--out", str(d / style)])
        return {p.name: p.read_bytes() for p in d.iterdir()}

    first, second = produce(tmp_path / "one"), produce(tmp_path / "two")
    capsys.readouterr()
    resumed_same = first["b"] == first["direct"]
    ok = resumed_same and first == second
    record(acceptance_log, 10, ok, f"resume==direct {resumed_same}; {len(first)} files byte-identical across runs {first == second}")
