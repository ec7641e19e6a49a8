#!/usr/bin/env python3
"""Run the full default battery and write one JSON line per report.

    python3 scripts/sweep_identities.py --seed 1 --out sweep.jsonl

A per-identity timing table goes to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import defaultdict
from dataclasses import dataclass

from bernident.cli import IDENTITIES, RunConfig, plan


@dataclass
class SweepConfig:
    seed: int = 0
    precision_bits: int = 256
    only: tuple[str, ...] = tuple(i for i in IDENTITIES if i != "all")


def sweep(cfg: SweepConfig, out) -> int:
    timings: dict[str, float] = defaultdict(float)
    counts: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    for ident in cfg.only:
        run_cfg = RunConfig(identity=ident, seed=cfg.seed, precision_bits=cfg.precision_bits)
        for job in plan(run_cfg):
            t0 = time.perf_counter()
            rep = job()
            timings[ident] += time.perf_counter() - t0
            counts[ident][0] += rep.passed
            counts[ident][1] += 1
            rep.parameters.setdefault("seed", str(cfg.seed))
            out.write(json.dumps(rep.to_dict()) + "\n")
    failed = 0
    for ident in cfg.only:
        ok, total = counts[ident]
        failed += total - ok
        print(f"{ident:14s} {ok:5d}/{total:<5d} {timings[ident]:8.3f} s", file=sys.stderr)
    return 1 if failed else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--precision-bits", type=int, default=256)
    ap.add_argument("--only", nargs="*", choices=[i for i in IDENTITIES if i != "all"])
    ap.add_argument("--out", help="output file (default stdout)")
    args = ap.parse_args()
    cfg = SweepConfig(args.seed, args.precision_bits)
    if args.only:
        cfg.only = tuple(args.only)
    if args.out:
        with open(args.out, "w") as fh:
            return sweep(cfg, fh)
    return sweep(cfg, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
