from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

__all__ = ["IdentityReport", "MODES", "stopwatch"]

MODES = ("exact-numeric", "symbolic", "bigfloat")

FIELDS = ("identity_id", "mode", "parameters", "lhs", "rhs", "difference", "pass", "elapsed")


@dataclass
class IdentityReport:
    """Outcome of one verification run.

    ``passed`` is true exactly when ``difference`` is the zero of its domain
    (bigfloat runs: relative difference under the stated tolerance).
    """

    identity_id: str
    mode: str
    parameters: dict[str, str]
    lhs: str
    rhs: str
    difference: str
    passed: bool
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "mode": self.mode,
            "parameters": dict(self.parameters),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "difference": self.difference,
            "pass": self.passed,
            "elapsed": round(self.elapsed, 6),
        }


@contextmanager
def stopwatch():
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - t0
