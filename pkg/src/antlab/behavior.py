"""Long-run behaviour: highways, escape from balls, and sweeps over rule-strings."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS
from .engine import DX, DY, AntPose, Universe, new_universe
from .rules import RuleString, codes_of_length, from_code, parse_rule
from .symmetry import detect_symmetries

HIGHWAY = "highway"
RECURRENT = "recurrentSymmetry"
UNDETERMINED = "undetermined"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class HighwayReport:
    detected: bool
    onset_time: int = 0
    period: int = 0
    displacement: tuple[int, int] = (0, 0)


def _as_rule(rule: RuleString | str) -> RuleString:
    return parse_rule(rule) if isinstance(rule, str) else rule


def record_trajectory(u: Universe, steps: int) -> np.ndarray:
    """Step ``u`` in place, returning rows (x, y, heading, state read) per time.

    Row t describes the pose at time u.time + t and the state of the cell
    about to be entered; there are ``steps + 1`` rows.
    """
    rule = u.rule
    turn = [0] + [3 if ch == "L" else 1 for ch in rule.letters]
    nxt = [0] + list(range(2, rule.n + 1)) + [1]
    cells, add = u.cells, u.visited.add
    (x, y), h = u.pose.target, u.pose.heading
    out = np.empty((steps + 1, 4), dtype=np.int64)
    for i in range(steps):
        p = (x, y)
        s = cells.get(p, 1)
        out[i] = x, y, h, s
        h = (h + turn[s]) & 3
        cells[p] = nxt[s]
        add(p)
        x += DX[h]
        y += DY[h]
    out[steps] = x, y, h, cells.get((x, y), 1)
    u.pose = AntPose((x, y), h)
    u.time += steps
    return out


def window(u: Universe, radius: int) -> tuple[int, ...]:
    """States in the square of ``radius`` around the ant's target cell, plus its heading."""
    (x, y), h = u.pose.target, u.pose.heading
    get = u.cells.get
    return (h,) + tuple(
        get((x + dx, y + dy), 1) for dy in range(-radius, radius + 1) for dx in range(-radius, radius + 1)
    )


def _fingerprint_onset(traj: np.ndarray, period: int, min_periods: int) -> int | None:
    """Earliest t such that from t to the end the trajectory repeats with this period."""
    span = (min_periods + 1) * period
    if len(traj) - 1 < span:
        return None
    tail = traj[-span - 1 :]
    if not _repeats(tail, period):
        return None
    a, b = traj[:-period], traj[period:]
    d = b[:, :2] - a[:, :2]
    same = (a[:, 2] == b[:, 2]) & (a[:, 3] == b[:, 3]) & (d[:, 0] == d[-1, 0]) & (d[:, 1] == d[-1, 1])
    if not same[-1] or not d[-1].any():
        return None
    bad = np.flatnonzero(~same)
    onset = int(bad[-1]) + 1 if bad.size else 0
    if len(traj) - 1 - onset < (min_periods + 1) * period:
        return None
    return onset


def _repeats(traj: np.ndarray, period: int) -> bool:
    a, b = traj[:-period], traj[period:]
    d = b[:, :2] - a[:, :2]
    return bool(
        d[-1].any()
        and (a[:, 2:] == b[:, 2:]).all()
        and (d == d[-1]).all()
    )


def detect_highway(
    rule: RuleString | str,
    horizon: int,
    window_radius: int | None = None,
    period_cap: int | None = None,
    min_periods: int | None = None,
) -> HighwayReport:
    """Find the least period and earliest onset of a translating, repeating pattern.

    A candidate is fingerprinted on poses and states read; it is accepted only
    if the states within ``window_radius`` of the ant also repeat, translated,
    over ``min_periods`` consecutive periods.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    radius = DEFAULTS.highway_window if window_radius is None else window_radius
    if radius < 1:
        raise ValueError("window radius must be >= 1")
    cap = DEFAULTS.highway_period_cap if period_cap is None else period_cap
    periods = DEFAULTS.highway_periods if min_periods is None else min_periods
    rule = _as_rule(rule)
    traj = record_trajectory(new_universe(rule), horizon)
    for period in range(1, min(cap, horizon // (periods + 1)) + 1):
        onset = _fingerprint_onset(traj, period, periods)
        if onset is None:
            continue
        onset = _confirm_window(rule, traj, onset, period, radius, periods)
        if onset is not None:
            dx, dy = (traj[onset + period, :2] - traj[onset, :2]).tolist()
            return HighwayReport(True, onset, period, (dx, dy))
    return HighwayReport(False)


def _confirm_window(
    rule: RuleString, traj: np.ndarray, onset: int, period: int, radius: int, periods: int
) -> int | None:
    last = len(traj) - 1
    u = new_universe(rule).run_until(onset)
    while onset + periods * period <= last:
        probe = u.copy()
        base = window(probe, radius)
        ok = True
        for _ in range(periods):
            probe.step(period)
            if window(probe, radius) != base:
                ok = False
                break
        if ok:
            return onset
        u.step()
        onset += 1
    return None


def unboundedness_probe(
    rule: RuleString | str, radii: list[int], horizon: int
) -> list[tuple[int, int | None]]:
    """For each radius r, the first time the track's bounding box leaves the open r-ball.

    The ball is Euclidean about the home cell; the box has left it once its
    farthest corner is at distance >= r. ``None`` means it had not by ``horizon``.
    """
    if list(radii) != sorted(radii):
        raise ValueError("radii must be ascending")
    u = new_universe(_as_rule(rule))
    out: list[tuple[int, int | None]] = []
    pending = list(radii)
    far_x2 = far_y2 = 0
    while pending and u.time < horizon:
        x, y = u.pose.target
        u.step()
        far_x2, far_y2 = max(far_x2, x * x), max(far_y2, y * y)
        while pending and far_x2 + far_y2 >= pending[0] ** 2:
            out.append((pending.pop(0), u.time))
    out.extend((r, None) for r in pending)
    return out


# --- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    code: int
    letters: str
    even_run_length: bool
    classification: str
    home_returns: int
    symmetric_returns: int
    late_symmetric_returns: int
    highway: HighwayReport

    @property
    def evidence(self) -> str:
        hw = self.highway
        parts = [
            f"returns={self.home_returns}",
            f"symmetric={self.symmetric_returns}",
            f"lateSymmetric={self.late_symmetric_returns}",
        ]
        if hw.detected:
            dx, dy = hw.displacement
            parts.append(f"highway=onset:{hw.onset_time},period:{hw.period},d:{dx}:{dy}")
        return ";".join(parts)

    def line(self) -> str:
        flag = str(self.even_run_length).lower()
        return f"{self.code}\t{self.letters}\t{flag}\t{self.classification}\t{self.evidence}"


def classify(rule: RuleString, horizon: int, k: int) -> SweepRow:
    """Run one rule to ``horizon`` and bucket it.

    Every ant is mirror-symmetric at its first few home returns, so only
    returns in the second half of the horizon count towards recurrence:
    recurrentSymmetry needs at least ``k`` of them. Otherwise a detected
    highway wins, otherwise undetermined. All-L rules never turn right and
    are flagged degenerate.
    """
    u = new_universe(rule)
    returns = symmetric = late = 0
    while u.run_to_next_home(horizon - u.time) is not None:
        returns += 1
        if detect_symmetries(u).mirror:
            symmetric += 1
            if 2 * u.time > horizon:
                late += 1
    hw = HighwayReport(False) if rule.is_degenerate else detect_highway(rule, horizon)
    if rule.is_degenerate:
        label = DEGENERATE
    elif late >= k:
        label = RECURRENT
    elif hw.detected:
        label = HIGHWAY
    else:
        label = UNDETERMINED
    return SweepRow(rule.code, rule.letters, rule.runs.even_run_length, label, returns, symmetric, late, hw)


def _classify_code(args: tuple[int, int, int]) -> SweepRow:
    code, horizon, k = args
    return classify(from_code(code), horizon, k)


def sweep(n: int, horizon: int | None = None, k: int | None = None, workers: int = 1) -> list[SweepRow]:
    if not 1 <= n <= 12:
        raise ValueError("sweep length must be in 1..12")
    horizon = DEFAULTS.sweep_horizon if horizon is None else horizon
    k = DEFAULTS.symmetric_returns_k if k is None else k
    jobs = [(code, horizon, k) for code in codes_of_length(n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_classify_code, jobs))
    return [_classify_code(j) for j in jobs]
