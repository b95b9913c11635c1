"""Integer partitions, dominance order, and its covering relation.

Partitions are plain tuples of weakly decreasing positive ints; the empty
tuple is the unique partition of 0. ``partitions_of(n)`` lists partitions in
reverse-lexicographic order, a linear extension of dominance: whenever
``lam >= mu`` in dominance, ``lam`` appears no later than ``mu``. The
triangular monomial/Schur solve relies on that property, and the test suite
checks it exhaustively at small weights.

Covering is decided by interval emptiness over the full partition list (the
ground-truth definition), not by a closed-form characterization; the unit-move
indices (i, j) are extracted from a confirmed pair afterwards and asserted
unique. Indices are 1-based to keep the ``lam[i] = 0 for i > len(lam)``
convention natural: j may point one past the end of ``lam``.
"""

from functools import lru_cache
from math import factorial, prod
from collections import Counter
from typing import NamedTuple

from .errors import WeightMismatch


class CoveringPair(NamedTuple):
    """A dominance cover lam > mu together with the unit move between them.

    mu equals lam with part i lowered by one and part j raised by one
    (1-based; part j of lam may be 0, i.e. j == len(lam) + 1).
    """

    lam: tuple
    mu: tuple
    i: int
    j: int


def as_partition(parts) -> tuple:
    """Validate and normalize an iterable of parts into a partition tuple."""
    out = tuple(int(p) for p in parts)
    for k, p in enumerate(out):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {p} in {out}")
        if k and out[k - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {out}")
    return out


def part(lam, i: int) -> int:
    """The i-th part, 1-based; 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def dominance_leq(mu, lam) -> bool:
    """True iff mu <= lam in dominance order: every prefix sum of lam is at
    least the matching prefix sum of mu. Requires equal weights."""
    if sum(mu) != sum(lam):
        raise WeightMismatch(f"weights differ: {sum(mu)} vs {sum(lam)}")
    acc_mu = acc_lam = 0
    for k in range(max(len(mu), len(lam))):
        acc_mu += mu[k] if k < len(mu) else 0
        acc_lam += lam[k] if k < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def dominance_lt(mu, lam) -> bool:
    """Strict dominance: mu <= lam and mu != lam."""
    return tuple(mu) != tuple(lam) and dominance_leq(mu, lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in reverse-lexicographic order, largest first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def emit(remaining, bound, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(min(bound, remaining), 0, -1):
            prefix.append(first)
            emit(remaining - first, first, prefix)
            prefix.pop()

    emit(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _revlex_index(n: int) -> dict:
    return {lam: k for k, lam in enumerate(partitions_of(n))}


def covers(lam, mu) -> bool:
    """True iff lam covers mu in dominance: mu < lam with nothing strictly
    between. Decided by scanning the partitions that sit between the two in
    reverse-lexicographic position (a superset of the dominance interval)."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"weights differ: {sum(lam)} vs {sum(mu)}")
    if mu == lam or not dominance_leq(mu, lam):
        return False
    n = sum(lam)
    order = partitions_of(n)
    pos = _revlex_index(n)
    for nu in order[pos[lam] + 1 : pos[mu]]:
        if dominance_lt(nu, lam) and dominance_lt(mu, nu):
            return False
    return True


def _unit_moves(lam):
    """Candidate partitions reachable from lam by moving one unit from an
    earlier part to a later one (the only way to go down by a cover)."""
    seen = set()
    for i0 in range(len(lam)):
        for j0 in range(i0 + 1, len(lam) + 1):
            vec = list(lam)
            vec[i0] -= 1
            if j0 == len(lam):
                vec.append(1)
            else:
                vec[j0] += 1
            cand = tuple(v for v in vec if v > 0)
            if cand in seen or cand == lam:
                continue
            if any(cand[k] < cand[k + 1] for k in range(len(cand) - 1)):
                continue
            seen.add(cand)
            yield cand


def _move_indices(lam, mu):
    """The unique 1-based (i, j) with mu_i = lam_i - 1 and mu_j = lam_j + 1."""
    length = max(len(lam), len(mu))
    downs = []
    ups = []
    for k in range(1, length + 1):
        d = part(mu, k) - part(lam, k)
        if d == -1:
            downs.append(k)
        elif d == 1:
            ups.append(k)
        elif d != 0:
            raise AssertionError(f"not a unit move: {lam} -> {mu}")
    if len(downs) != 1 or len(ups) != 1 or downs[0] >= ups[0]:
        raise AssertionError(f"move indices not unique for {lam} -> {mu}")
    return downs[0], ups[0]


@lru_cache(maxsize=None)
def covering_pairs(n: int) -> tuple:
    """All covering pairs of weight n as CoveringPair records, ordered by
    (lam, mu) reverse-lexicographically. Niceness witnesses inherit this
    order, so the first reported violation is deterministic."""
    pos = _revlex_index(n)
    result = []
    for lam in partitions_of(n):
        found = [mu for mu in _unit_moves(lam) if covers(lam, mu)]
        found.sort(key=lambda mu: pos[mu])
        for mu in found:
            i, j = _move_indices(lam, mu)
            result.append(CoveringPair(lam, mu, i, j))
    return tuple(result)


def covering_pair_for(lam, mu) -> CoveringPair:
    """The CoveringPair record for a pair known to be a cover."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if not covers(lam, mu):
        raise ValueError(f"{format_partition(lam)} does not cover {format_partition(mu)}")
    i, j = _move_indices(lam, mu)
    return CoveringPair(lam, mu, i, j)


def multiplicity_factorial(lam) -> int:
    """Product of m_k! over part multiplicities: the number of orderings of
    equal-size blocks, i.e. the semi-ordered/unordered count ratio."""
    return prod(factorial(c) for c in Counter(lam).values())


def format_partition(lam) -> str:
    """Render as comma-separated parts in parentheses, e.g. ``(3,1)``."""
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(text: str) -> tuple:
    """Parse the ``(3, 1)`` form, tolerating arbitrary whitespace."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected a parenthesized partition, got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    return as_partition(int(tok) for tok in inner.split(","))
