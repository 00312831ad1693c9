"""Sweep the neutral weight and report how each bundled dossier's stance moves.

Hostile and friendly weights share the remainder equally.
"""

import argparse
from importlib import resources

import numpy as np

from relcalc import formats
from relcalc.algebra import WeightConfig
from relcalc.catalog import default_catalog, evaluate_dossier

FIXTURES = resources.files("relcalc") / "fixtures"
DOSSIERS = ("usa-gbr", "usa-irn", "usa-ind")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=9)
    ap.add_argument("--max-neutral", type=float, default=0.8)
    args = ap.parse_args()

    catalog = default_catalog()
    dossiers = {n: formats.parse_dossier(FIXTURES / f"{n}.json") for n in DOSSIERS}
    print(f"{'w_n':>6}  " + "  ".join(f"{n:>20}" for n in DOSSIERS))
    for wn in np.linspace(0.0, args.max_neutral, args.steps):
        side = (1.0 - wn) / 2
        w = WeightConfig(side, float(wn), 1.0 - wn - side)
        cells = []
        for d in dossiers.values():
            p = evaluate_dossier(d, catalog, w)
            cells.append(f"{p.t_mass:+.3f} {p.stance_label:<8}{'*' if p.fragile else ' '}")
        print(f"{wn:>6.3f}  " + "  ".join(f"{c:>20}" for c in cells))
    print("\n* fragile: hostile mass could shift the stance across the neutral band")


if __name__ == "__main__":
    main()
