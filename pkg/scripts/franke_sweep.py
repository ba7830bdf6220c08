"""Sweep all maximal parabolics of small SO(p,q), Sp(2n), SL(n) and compare
the closed-form radical dimensions, the nullspace oracle and the k = 1 value."""

import argparse
from dataclasses import dataclass

from kappacalc.arithgrp import GroupSpec, franke_bound, oracle_unipotent_dim, unipotent_dim


@dataclass
class Config:
    so_max: int = 8  # p + q <= so_max
    sp_max: int = 4
    sl_max: int = 6


def specs(cfg: Config):
    for q in range(1, cfg.so_max):
        for p in range(1, q + 1):
            if p + q <= cfg.so_max:
                yield GroupSpec.so(p, q)
    for n in range(1, cfg.sp_max + 1):
        yield GroupSpec.sp(n)
    for n in range(2, cfg.sl_max + 1):
        yield GroupSpec.sl(n)


def run(cfg: Config):
    print(f"{'group':<10} {'dims by k':<28} {'bound':>5} {'argmin':>6} {'k=1':>4}  oracle")
    for spec in specs(cfg):
        dims = [unipotent_dim(spec, k) for k in spec.k_range()]
        agree = all(oracle_unipotent_dim(spec, k) == d for k, d in zip(spec.k_range(), dims))
        b = franke_bound(spec)
        flag = "" if b.argmin_k == 1 else "   <- minimum not at k = 1"
        print(f"{str(spec):<10} {str(dims):<28} {b.bound:>5} {b.argmin_k:>6} {dims[0]:>4}  {agree}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--so-max", type=int, default=8)
    ap.add_argument("--sp-max", type=int, default=4)
    ap.add_argument("--sl-max", type=int, default=6)
    run(Config(**vars(ap.parse_args())))
