"""Command-line driver: ``bernident verify <identity> [options]``.

Exit status is 0 when every report passes, 1 when some verification fails and
2 on usage or parameter errors.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bigfloat import GammaPole
from .exact import parse_rat
from .identities import (
    GammaParams,
    PreconditionError,
    Theorem1Params,
    random_rat,
    verify_gamma_miki,
    verify_lemma1,
    verify_matiyasevich,
    verify_miki,
    verify_pan_sun_poly,
    verify_sun_pan,
    verify_theorem1,
    verify_theorem2,
    verify_woodcock,
)
from .poly import MultiPoly
from .report import IdentityReport
from .series import verify_carlitz_gf

IDENTITIES = (
    "miki",
    "matiyasevich",
    "pan-sun-3",
    "pan-sun-4",
    "woodcock",
    "sun-pan",
    "theorem1",
    "lemma1",
    "theorem2",
    "gamma-miki",
    "carlitz-gf",
    "all",
)
MODES = ("exact", "symbolic", "bigfloat", "auto")
FORMATS = ("text", "json", "tsv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    identity: str
    mode: str = "auto"
    n: str | None = None
    m: str | None = None
    r: str | None = None
    s: str | None = None
    x: str | None = None
    y: str | None = None
    p: str | None = None
    trials: int | None = None
    seed: int = 0
    precision_bits: int = 256
    fmt: str = "text"
    caps: tuple[int, int] = (3, 6)
    literal: bool = False
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise UsageError(f"unknown identity {self.identity!r}")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.mode == "bigfloat" and self.identity not in ("gamma-miki", "all"):
            raise UsageError("--mode bigfloat is only valid for gamma-miki")
        if self.mode == "symbolic" and self.identity == "gamma-miki":
            raise UsageError("gamma-miki has no symbolic mode")
        if self.precision_bits < 128:
            raise UsageError("--precision-bits must be at least 128")
        self.rng = random.Random(self.seed)


# --- argument helpers --------------------------------------------------------


def parse_int_spec(text: str) -> list[int]:
    """``5``, ``4..40`` (inclusive) or ``1,2,3``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def parse_rat_list(text: str) -> list[Fraction]:
    try:
        return [parse_rat(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_caps(text: str) -> tuple[int, int]:
    try:
        m, n = text.split(":")
        return int(m), int(n)
    except ValueError as exc:
        raise UsageError(f"--caps expects m:n, got {text!r}") from exc


def _single_rat(text: str | None, flag: str) -> Fraction | None:
    if text is None:
        return None
    vals = parse_rat_list(text)
    if len(vals) != 1:
        raise UsageError(f"{flag} expects a single rational")
    return vals[0]


# --- job planning ------------------------------------------------------------

Job = Callable[[], IdentityReport]


def _ints(cfg: RunConfig, attr: str, default: str) -> list[int]:
    return parse_int_spec(getattr(cfg, attr) or default)


def _no_symbolic(cfg: RunConfig, name: str):
    if cfg.mode == "symbolic":
        raise UsageError(f"{name} has no indeterminate parameters; use --mode exact")


def plan_miki(cfg):
    _no_symbolic(cfg, "miki")
    return [lambda n=n: verify_miki(n) for n in _ints(cfg, "n", "4..40")]


def plan_matiyasevich(cfg):
    _no_symbolic(cfg, "matiyasevich")
    return [lambda n=n: verify_matiyasevich(n) for n in _ints(cfg, "n", "4..40")]


def _plan_pan_sun(cfg, which, default_n):
    ns = _ints(cfg, "n", default_n)
    x, y = _single_rat(cfg.x, "--x"), _single_rat(cfg.y, "--y")
    if cfg.mode == "exact" or (cfg.mode == "auto" and x is not None and y is not None):
        if x is None or y is None:
            raise UsageError("exact Pan-Sun evaluation needs --x and --y")
        if x == y:
            raise UsageError("x = y is degenerate: the identity has (x - y) denominators")
        return [lambda n=n: verify_pan_sun_poly(which, n, x, y, cfg.literal) for n in ns]
    return [lambda n=n: verify_pan_sun_poly(which, n, literal=cfg.literal) for n in ns]


def plan_pan_sun_3(cfg):
    return _plan_pan_sun(cfg, "miki-type", "2..12")


def plan_pan_sun_4(cfg):
    return _plan_pan_sun(cfg, "matiyasevich-type", "1..12")


def plan_woodcock(cfg):
    ms, ns = _ints(cfg, "m", "1..8"), _ints(cfg, "n", "2..8")
    return [lambda m=m, n=n: verify_woodcock(m, n, cfg.literal) for m in ms for n in ns]


def plan_sun_pan(cfg):
    ns = _ints(cfg, "n", "0..6")
    given = [_single_rat(getattr(cfg, k), f"--{k}") for k in "rsxy"]
    jobs: list[Job] = []
    if all(v is not None for v in given):
        return [lambda n=n: verify_sun_pan(n, *given) for n in ns]
    if cfg.trials is None or cfg.mode == "symbolic":
        if cfg.mode == "exact":
            raise UsageError("exact sun-pan needs --r --s --x --y or --trials")
        jobs += [lambda n=n: verify_sun_pan(n, *given) for n in ns]
    if cfg.trials and cfg.mode != "symbolic":
        for _ in range(cfg.trials):
            n = cfg.rng.choice(ns)
            vals = [v if v is not None else random_rat(cfg.rng) for v in given]
            jobs.append(lambda n=n, vals=vals: verify_sun_pan(n, *vals))
    return jobs


def _symbolic_ok(cfg, m: int, n: int) -> bool:
    if cfg.mode == "symbolic":
        return True
    if cfg.mode == "exact":
        return False
    return cfg.trials is None and m <= cfg.caps[0] and n <= cfg.caps[1]


def plan_theorem1(cfg):
    if cfg.r is not None or cfg.x is not None:
        if cfg.r is None or cfg.x is None:
            raise UsageError("theorem1 needs both --r and --x (or neither)")
        r, x = parse_rat_list(cfg.r), parse_rat_list(cfg.x)
        if len(r) != len(x):
            raise UsageError("--r and --x must have the same length")
        return [lambda n=n: verify_theorem1(Theorem1Params(len(r), n, tuple(r), tuple(x))) for n in _ints(cfg, "n", "1..6")]
    jobs: list[Job] = []
    for m in _ints(cfg, "m", "1..3"):
        for n in _ints(cfg, "n", "1..4"):
            if _symbolic_ok(cfg, m, n):
                jobs.append(lambda m=m, n=n: verify_theorem1(Theorem1Params.symbolic(m, n)))
            else:
                for _ in range(cfg.trials or 100):
                    params = Theorem1Params.random(m, n, cfg.rng)
                    jobs.append(lambda params=params: verify_theorem1(params, seed=cfg.seed))
    return jobs


def plan_lemma1(cfg):
    if cfg.n is not None:
        n_lists = [parse_int_spec(cfg.n)]
    else:
        n_lists = [
            ns for m in range(1, 4) for ns in itertools.product(range(1, 7), repeat=m) if sum(ns) <= 6
        ]
    if any(v < 1 for ns in n_lists for v in ns):
        raise UsageError("lemma1 exponents must be positive")
    jobs: list[Job] = []
    for ns in n_lists:
        m = len(ns)
        if cfg.x is not None:
            x = parse_rat_list(cfg.x)
            if len(x) != m:
                raise UsageError("--x must have as many entries as --n")
            jobs.append(lambda ns=ns, x=x: verify_lemma1(ns, x))
        elif _symbolic_ok(cfg, m, sum(ns)):
            gens = MultiPoly.variables([f"x{j + 1}" for j in range(m)])
            jobs.append(lambda ns=ns, gens=gens: verify_lemma1(ns, gens))
        else:
            for _ in range(cfg.trials or 20):
                x = [random_rat(cfg.rng) for _ in range(m)]
                jobs.append(lambda ns=ns, x=x: verify_lemma1(ns, x, seed=cfg.seed))
    return jobs


def plan_theorem2(cfg):
    _no_symbolic(cfg, "theorem2")
    if cfg.p is not None:
        p = parse_rat_list(cfg.p)
        jobs = []
        for n in _ints(cfg, "n", "1..8"):
            try:
                params = GammaParams(len(p), n, tuple(p))
            except PreconditionError as exc:
                raise UsageError(str(exc)) from exc
            x = parse_rat_list(cfg.x) if cfg.x else [random_rat(cfg.rng) for _ in p]
            if len(x) != len(p):
                raise UsageError("--x must have as many entries as --p")
            jobs.append(lambda params=params, x=x: verify_theorem2(params, x, seed=cfg.seed))
        return jobs
    ms, ns = _ints(cfg, "m", "1..3"), _ints(cfg, "n", "1..8")
    jobs = []
    for _ in range(cfg.trials or 50):
        m, n = cfg.rng.choice(ms), cfg.rng.choice(ns)
        params = GammaParams.random(m, n, cfg.rng)
        x = [random_rat(cfg.rng) for _ in range(m)]
        jobs.append(lambda params=params, x=x: verify_theorem2(params, x, seed=cfg.seed))
    return jobs


def plan_gamma_miki(cfg):
    ps = parse_rat_list(cfg.p or "1/2,1/3,5/2")
    ns = _ints(cfg, "n", "2..8")
    for p in ps:
        if p.denominator == 1:
            raise UsageError(f"p = {p} is integral (Gamma poles)")
    return [lambda p=p, n=n: verify_gamma_miki(p, n, cfg.precision_bits, cfg.literal) for p in ps for n in ns]


def plan_carlitz_gf(cfg):
    ms, Ns = _ints(cfg, "m", "2"), _ints(cfg, "n", "8")
    jobs: list[Job] = []
    for m in ms:
        for N in Ns:
            if cfg.x is not None:
                x = parse_rat_list(cfg.x)
                if len(x) != m:
                    raise UsageError("--x must have m entries")
                jobs.append(lambda m=m, N=N, x=x: verify_carlitz_gf(m, N, x))
            elif cfg.mode == "symbolic" or (cfg.mode == "auto" and cfg.trials is None and m <= 2):
                gens = MultiPoly.variables([f"x{j + 1}" for j in range(m)])
                jobs.append(lambda m=m, N=N, gens=gens: verify_carlitz_gf(m, N, gens))
            else:
                for _ in range(cfg.trials or 1):
                    x = [random_rat(cfg.rng) for _ in range(m)]
                    jobs.append(lambda m=m, N=N, x=x: verify_carlitz_gf(m, N, x))
    return jobs


PLANS = {
    "miki": plan_miki,
    "matiyasevich": plan_matiyasevich,
    "pan-sun-3": plan_pan_sun_3,
    "pan-sun-4": plan_pan_sun_4,
    "woodcock": plan_woodcock,
    "sun-pan": plan_sun_pan,
    "theorem1": plan_theorem1,
    "lemma1": plan_lemma1,
    "theorem2": plan_theorem2,
    "gamma-miki": plan_gamma_miki,
    "carlitz-gf": plan_carlitz_gf,
}


def plan(cfg: RunConfig) -> list[Job]:
    if cfg.identity != "all":
        return PLANS[cfg.identity](cfg)
    # every identity at its default sweep; bound parameters would be ambiguous here
    if any(getattr(cfg, k) is not None for k in ("n", "m", "r", "s", "x", "y", "p")):
        raise UsageError("'verify all' runs default sweeps and takes no parameter bindings")
    jobs: list[Job] = []
    for name, planner in PLANS.items():
        sub = RunConfig(
            identity=name,
            mode="bigfloat" if name == "gamma-miki" else "auto",
            trials=cfg.trials,
            seed=cfg.seed,
            precision_bits=cfg.precision_bits,
            fmt=cfg.fmt,
            caps=cfg.caps,
        )
        jobs += planner(sub)
    return jobs


# --- output ------------------------------------------------------------------

TSV_FIELDS = ("identity_id", "mode", "parameters", "lhs", "rhs", "difference", "pass", "elapsed")


def _clip(text: str, width: int = 72) -> str:
    return text if len(text) <= width else f"{text[:width]}... ({len(text)} chars)"


def format_report(rep: IdentityReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_dict(), ensure_ascii=False)
    params = ";".join(f"{k}={v}" for k, v in rep.parameters.items())
    if fmt == "tsv":
        d = rep.to_dict()
        d["parameters"] = params
        d["pass"] = "true" if rep.passed else "false"
        return "\t".join(str(d[k]).replace("\t", " ") for k in TSV_FIELDS)
    status = "PASS" if rep.passed else "FAIL"
    return (
        f"{status} {rep.identity_id} [{rep.mode}] {params} "
        f"lhs={_clip(rep.lhs)} rhs={_clip(rep.rhs)} diff={_clip(rep.difference)} ({rep.elapsed:.3f}s)"
    )


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    jobs = plan(cfg)
    if cfg.fmt == "tsv":
        print("\t".join(TSV_FIELDS), file=out)
    failures = 0
    for job in jobs:
        rep = job()
        rep.parameters.setdefault("seed", str(cfg.seed))
        failures += not rep.passed
        print(format_report(rep, cfg.fmt), file=out, flush=True)
    if cfg.fmt == "text":
        print(f"{len(jobs) - failures}/{len(jobs)} passed", file=out)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bernident", description="Exact verification of Bernoulli-polynomial identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="verify one identity or all of them")
    v.add_argument("identity", choices=IDENTITIES)
    v.add_argument("--n", help="integer, a..b range or comma list (lemma1: the exponent list n_1,..,n_m)")
    v.add_argument("--m", help="integer or a..b range")
    v.add_argument("--r", help="rational(s) p/q; comma-separated for theorem1")
    v.add_argument("--s", help="rational s (sun-pan)")
    v.add_argument("--x", help="rational(s) p/q, comma-separated")
    v.add_argument("--y", help="rational y (pan-sun, sun-pan)")
    v.add_argument("--p", help="comma-separated non-integral rationals (theorem2, gamma-miki)")
    v.add_argument("--trials", type=int, help="number of random exact-numeric trials")
    v.add_argument("--seed", type=int, default=0, help="64-bit seed for random trials")
    v.add_argument("--mode", choices=MODES, default="auto")
    v.add_argument("--precision-bits", type=int, default=256)
    v.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    v.add_argument("--caps", default="3:6", help="symbolic size caps m:n used by --mode auto")
    v.add_argument("--literal", action="store_true", help="check the typeset form where it differs from the valid identity")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            identity=args.identity,
            mode=args.mode,
            n=args.n,
            m=args.m,
            r=args.r,
            s=args.s,
            x=args.x,
            y=args.y,
            p=args.p,
            trials=args.trials,
            seed=args.seed,
            precision_bits=args.precision_bits,
            fmt=args.fmt,
            caps=parse_caps(args.caps),
            literal=args.literal,
        )
        return run(cfg)
    except (UsageError, PreconditionError, GammaPole) as exc:
        print(f"bernident: error: {exc}", file=sys.stderr)
        return 2


def run_cli(argv: list[str]) -> int:
    """Entry used by tests: argparse usage errors become exit code 2 instead of SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
