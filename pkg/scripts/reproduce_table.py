"""Recompute the kappa table from a_0..a_3, solving the remaining a-values on the way."""

import argparse
from dataclasses import dataclass

from kappacalc.k3family import KNOWN_A_VALUES, REFERENCE_KAPPA_TABLE, FamilyModel, KappaResult, solve_a_values


@dataclass
class Config:
    i_max: int = 8
    symbol: str = "l"


def run(cfg: Config) -> bool:
    sol = solve_a_values(KNOWN_A_VALUES, require_integer=False)
    for j, v in sol.solved.items():
        note = "" if v.denominator == 1 else "   <- not an integer"
        print(f"a{j} = {v}{note}")
    ok = True
    model = FamilyModel(sol.a_values)
    print(f"\n{'i':>2}  {'computed':<28} matches")
    for i, r in enumerate(model.kappa_table(cfg.i_max), 1):
        match = r == KappaResult(REFERENCE_KAPPA_TABLE[i], 2 * i)
        ok &= match
        print(f"{i:>2}  {r.to_text(cfg.symbol):<28} {match}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8, dest="i_max")
    ap.add_argument("--symbol", default="l")
    raise SystemExit(0 if run(Config(**vars(ap.parse_args()))) else 1)
