"""Homogeneous symmetric-function expansions in the monomial and Schur
bases, Kostka numbers, the chromatic symmetric function, and a brute-force
proper-coloring oracle.

The Schur-to-monomial direction is the classical K-weighted sum; the inverse
uses unitriangularity of the Kostka matrix (K[lam][lam] == 1, K[lam][mu] == 0
unless mu <= lam in dominance). Processing partitions in reverse-lexicographic
order, which extends dominance, lets each Schur coefficient be read off in one
pass with exact integer arithmetic.
"""

from .errors import CountOverflow, OracleTooLarge, WeightMismatch
from .graphs import Graph
from .kernels import I64_MAX
from .partitions import as_partition, format_partition, partitions_of
from .stable import semi_ordered_counts

ORACLE_GUARD = 100_000_000  # refuse when colors ** vertices exceeds this


class Expansion:
    """Integer-coefficient homogeneous expansion in the 'm' or 's' basis.

    Zero coefficients are dropped on construction; equality is structural.
    Coefficients are checked against the signed 64-bit range (the Schur
    solve legitimately produces intermediate negatives, so the range is
    symmetric).
    """

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs=None):
        if basis not in ("m", "s"):
            raise ValueError(f"basis must be 'm' or 's', got {basis!r}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = as_partition(lam)
            if sum(lam) != degree:
                raise WeightMismatch(
                    f"term {format_partition(lam)} has weight {sum(lam)}, expected {degree}"
                )
            c = int(c)
            if c == 0:
                continue
            if abs(c) > I64_MAX:
                raise CountOverflow(f"coefficient at {format_partition(lam)} exceeds 64 bits")
            clean[lam] = c
        self.coeffs = clean

    def coeff(self, lam) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def terms(self) -> list:
        """(partition, coefficient) pairs in reverse-lexicographic order."""
        return sorted(self.coeffs.items(), key=lambda t: t[0], reverse=True)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": c} for lam, c in self.terms()
            ],
        }

    def __eq__(self, other):
        return (
            isinstance(other, Expansion)
            and self.degree == other.degree
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*{self.basis}[{format_partition(lam)}]" for lam, c in self.terms()
        )


def csf_m(g: Graph) -> Expansion:
    """Chromatic symmetric function in the monomial basis: the coefficient
    of m_lam is the number of semi-ordered stable partitions of type lam."""
    return Expansion(g.n, "m", semi_ordered_counts(g))


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------

_kostka_memo = {}


def kostka(lam, mu) -> int:
    """Number of semistandard Young tableaux of shape lam and content mu
    (mu_i entries equal to i; rows weakly increase, columns strictly
    increase). Computed by peeling the largest entry, whose cells must form
    a horizontal strip; memoized on (shape, remaining content)."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"weights differ: {sum(lam)} vs {sum(mu)}")
    return _kostka(lam, mu)


def _kostka(lam, mu):
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    hit = _kostka_memo.get(key)
    if hit is not None:
        return hit
    strip = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _strip_removals(lam, strip):
        total += _kostka(nu, rest)
    _kostka_memo[key] = total
    return total


def _strip_removals(lam, strip):
    """Subshapes nu of lam with lam/nu a horizontal strip of the given size:
    lam[i+1] <= nu[i] <= lam[i] rowwise, shedding exactly ``strip`` cells."""
    length = len(lam)
    nu = [0] * length
    out = []

    def fill(i, left):
        if i == length:
            if left == 0:
                out.append(tuple(p for p in nu if p))
            return
        low = lam[i + 1] if i + 1 < length else 0
        for val in range(max(low, lam[i] - left), lam[i] + 1):
            nu[i] = val
            fill(i + 1, left - (lam[i] - val))
        nu[i] = 0

    fill(0, strip)
    return out


# ---------------------------------------------------------------------------
# basis changes
# ---------------------------------------------------------------------------

def s_to_m(e: Expansion) -> Expansion:
    """Expand a Schur-basis expansion into the monomial basis."""
    if e.basis != "s":
        raise ValueError("s_to_m expects a Schur-basis expansion")
    out = {}
    for mu in partitions_of(e.degree):
        acc = 0
        for lam, c in e.coeffs.items():
            acc += c * kostka(lam, mu)
        if acc:
            out[mu] = acc
    return Expansion(e.degree, "m", out)


def m_to_s(e: Expansion) -> Expansion:
    """Invert the Kostka relation: the unique Schur expansion mapping back to
    e under s_to_m. One pass over partitions in reverse-lexicographic order
    suffices because that order extends dominance."""
    if e.basis != "m":
        raise ValueError("m_to_s expects a monomial-basis expansion")
    solved = {}
    for lam in partitions_of(e.degree):
        acc = e.coeff(lam)
        for nu, c in solved.items():
            acc -= c * kostka(nu, lam)
        if acc:
            solved[lam] = acc
    return Expansion(e.degree, "s", solved)


def is_schur_positive(e: Expansion):
    """(holds, witness): witness is the reverse-lex-first partition carrying
    a negative Schur coefficient, or None."""
    s = m_to_s(e) if e.basis == "m" else e
    for lam, c in s.terms():
        if c < 0:
            return False, lam
    return True, None


# ---------------------------------------------------------------------------
# coloring oracle
# ---------------------------------------------------------------------------

def coloring_distribution_oracle(g: Graph, alpha) -> int:
    """Number of proper colorings using color i exactly alpha[i] times.

    Independent of the stable-partition machinery: a direct backtracking
    count over vertex-by-vertex color assignments with capacity pruning.
    Refuses when len(alpha) ** |V| exceeds the size guard. The result equals
    the monomial coefficient of the sorted composition in the chromatic
    symmetric function.
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha):
        raise ValueError("composition parts must be positive")
    if sum(alpha) != g.n:
        raise WeightMismatch(f"composition weight {sum(alpha)} != vertex count {g.n}")
    k = len(alpha)
    if k**g.n > ORACLE_GUARD:
        raise OracleTooLarge(
            f"{k}^{g.n} colorings exceed the oracle guard of {ORACLE_GUARD}"
        )
    remaining = list(alpha)
    color_mask = [0] * k
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    n = g.n

    def assign(v):
        if v == n:
            return 1
        row = rows[v]
        total = 0
        for c in range(k):
            if remaining[c] and not (color_mask[c] & row):
                remaining[c] -= 1
                color_mask[c] |= 1 << v
                total += assign(v + 1)
                color_mask[c] &= ~(1 << v)
                remaining[c] += 1
        return total

    return assign(0)
