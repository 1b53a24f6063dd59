"""Write the reference pictures (state rasters and tile drawings) into a directory."""

import argparse
from pathlib import Path

from antlab.engine import new_universe
from antlab.render import render_states, render_truchet

FIGURES = [
    ("ant2_t472_states.ppm", "LR", 472, "states"),
    ("ant12_t32_truchet.svg", "LLRR", 32, "truchet"),
    ("ant12_t16464_states.ppm", "LLRR", 16_464, "states"),
    ("ant9_t38836_principal.svg", "LRRL", 38_836, "principal"),
    ("ant48_t7016_diagonals.svg", "LLRRRR", 7_016, "diagonals"),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="figures")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, rule, t, style in FIGURES:
        u = new_universe(rule).run_until(t)
        if style == "states":
            text = render_states(u)
        else:
            text = render_truchet(u, diagonals=style == "diagonals", highlight_principal=style == "principal")
        (out / name).write_text(text)
        print(f"{out / name}  rule {rule} t={t} home={u.at_home}")


if __name__ == "__main__":
    main()
