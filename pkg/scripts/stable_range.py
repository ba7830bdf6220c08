"""Graded dimensions of the Sp dual rings and the weight range in which they
agree with the free algebra on generators of weight 1, 3, 5, ..."""

import argparse
import time
from dataclasses import dataclass

from kappacalc.dualcoh import gorenstein_check, kernel_orthogonality_check, sp_dual_ring, stable_range


@dataclass
class Config:
    g_max: int = 6
    checks: bool = True


def run(cfg: Config):
    for g in range(1, cfg.g_max + 1):
        start = time.perf_counter()
        R = sp_dual_ring(g)
        line = f"g={g}  total={R.total_dim:<4} stable up to weight {stable_range(g)}  dims={R.graded_dims()}"
        if cfg.checks:
            line += f"  gorenstein={gorenstein_check(R)} orthogonal={kernel_orthogonality_check(R)}"
        print(f"{line}  ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-max", type=int, default=6)
    ap.add_argument("--no-checks", dest="checks", action="store_false")
    run(Config(**vars(ap.parse_args())))
