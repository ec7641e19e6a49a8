"""Exact verification engine for symmetric identities on Bernoulli polynomials."""
from .bernoulli import bernoulli_eval, bernoulli_number, bernoulli_poly
from .exact import Rat, binom_general, harmonic, pochhammer
from .poly import MultiPoly, UniPoly
from .report import IdentityReport

__all__ = [
    "Rat",
    "binom_general",
    "pochhammer",
    "harmonic",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_eval",
    "UniPoly",
    "MultiPoly",
    "IdentityReport",
]
