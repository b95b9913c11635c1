"""Niceness checkers for monomial expansions and graphs.

nice: positive monomial coefficients are downward closed under dominance.
strongly nice: monomial coefficients weakly decrease going up in dominance.

Both checkers quantify over dominance covering pairs only; every comparable
pair is connected by a chain of covers, so implication (for nice) and the
weak inequality (for strongly nice) propagate along chains and the reduction
is exact. The test suite keeps all-comparable-pairs brute force as an oracle
for that reduction. Witnesses are therefore always covering pairs, the
minimal possible counterexamples.

nice rejects negative inputs (its "> 0" quantifier is only meaningful for
counts, and chromatic monomial coefficients are counts); strongly nice is a
pure inequality and accepts any integer expansion.
"""

from typing import NamedTuple, Optional

from .errors import NegativeCoefficient
from .graphs import Graph
from .partitions import covering_pairs, format_partition
from .symfunc import Expansion, csf_m, s_to_m


class NicenessWitness(NamedTuple):
    lam: tuple
    mu: tuple
    coeff_lam: int
    coeff_mu: int


def is_nice(e: Expansion):
    """(holds, witness): fails on the first covering pair lam > mu with a
    positive coefficient at lam but none at mu."""
    if e.basis != "m":
        raise ValueError("is_nice expects a monomial-basis expansion")
    for lam, c in e.coeffs.items():
        if c < 0:
            raise NegativeCoefficient(
                f"m[{format_partition(lam)}] = {c}; nice is defined for counts"
            )
    for cp in covering_pairs(e.degree):
        c_lam = e.coeff(cp.lam)
        if c_lam > 0:
            c_mu = e.coeff(cp.mu)
            if c_mu <= 0:
                return False, NicenessWitness(cp.lam, cp.mu, c_lam, c_mu)
    return True, None


def is_strongly_nice(e: Expansion):
    """(holds, witness): fails on the first covering pair lam > mu with
    coeff(mu) < coeff(lam)."""
    if e.basis != "m":
        raise ValueError("is_strongly_nice expects a monomial-basis expansion")
    for cp in covering_pairs(e.degree):
        c_lam = e.coeff(cp.lam)
        c_mu = e.coeff(cp.mu)
        if c_mu < c_lam:
            return False, NicenessWitness(cp.lam, cp.mu, c_lam, c_mu)
    return True, None


def graph_is_nice(g: Graph):
    return is_nice(csf_m(g))


def graph_is_strongly_nice(g: Graph):
    return is_strongly_nice(csf_m(g))


def implication_chain_check(e: Expansion) -> bool:
    """For a nonnegative Schur expansion: its monomial expansion must be
    strongly nice, and, all monomial coefficients being nonnegative counts
    of nothing in particular, nice as well. Returns True iff both hold
    (expected always, by Kostka monotonicity)."""
    if e.basis != "s":
        raise ValueError("implication_chain_check expects a Schur-basis expansion")
    for lam, c in e.coeffs.items():
        if c < 0:
            raise NegativeCoefficient(
                f"s[{format_partition(lam)}] = {c}; expected a nonnegative expansion"
            )
    em = s_to_m(e)
    strongly, _ = is_strongly_nice(em)
    nice, _ = is_nice(em)
    return strongly and nice


def witness_json(property_name: str, holds: bool, witness: Optional[NicenessWitness]) -> dict:
    out = {"property": property_name, "holds": holds, "witness": None}
    if witness is not None:
        out["witness"] = {
            "lambda": list(witness.lam),
            "mu": list(witness.mu),
            "coeff_lambda": witness.coeff_lam,
            "coeff_mu": witness.coeff_mu,
        }
    return out
