"""Default knobs shared by the library and the command line.

Every report header echoes these, so a run can be reproduced from its output.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Defaults:
    trace_cap: int = 10_000_000
    tour_cap: int = 10_000_000
    highway_period_cap: int = 1_000
    highway_window: int = 2
    highway_periods: int = 3
    symmetric_returns_k: int = 5
    sweep_horizon: int = 50_000
    cell_pixels: int = 4

    def header(self) -> str:
        return "# defaults " + " ".join(f"{k}={v}" for k, v in asdict(self).items())


DEFAULTS = Defaults()
