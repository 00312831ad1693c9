"""Print trust values for the bundled dossiers and the belief-table example."""

import argparse
from importlib import resources

from relcalc import formats
from relcalc.catalog import default_catalog, evaluate_dossier
from relcalc.evidence import ds_table

FIXTURES = resources.files("relcalc") / "fixtures"

RUNS = [
    ("mixed", "mixed-catalog.json", "mixed-config.json"),
    ("usa-gbr", None, "default-config.json"),
    ("usa-irn", None, "default-config.json"),
    ("usa-ind", None, "default-config.json"),
]


def main() -> None:
    argparse.ArgumentParser(description=__doc__).parse_args()
    print(f"{'dossier':<10}{'h':>8}{'n':>8}{'f':>8}{'t':>10}{'strength':>10}  stance     septuple")
    for name, catalog, config in RUNS:
        c = formats.parse_catalog(FIXTURES / catalog) if catalog else default_catalog()
        cfg = formats.parse_config(FIXTURES / config)
        p = evaluate_dossier(formats.parse_dossier(FIXTURES / f"{name}.json"), c, cfg.weights, cfg.signs,
                             cfg.septuple, cfg.epsilon)
        m = p.masses
        flag = " (fragile)" if p.fragile else ""
        print(f"{name:<10}{m.hostile:>8.3f}{m.neutral:>8.3f}{m.friendly:>8.3f}"
              f"{p.t_mass:>10.4f}{p.strength:>10.4f}  {p.stance_label:<10} {p.septuple_label}{flag}")

    print()
    m = formats.parse_mass(FIXTURES / "survey-mass.json")
    print(formats.render_ds_text(ds_table(m), m), end="")


if __name__ == "__main__":
    main()
