"""Stable (independent-set) partitions of a graph: enumeration, per-type
counting, and the semi-ordered variants whose counts are exactly the monomial
coefficients of the chromatic symmetric function.

Conventions. An unordered stable partition is a tuple of blocks in canonical
order (decreasing size, ties broken by smallest member); each block is an
increasing tuple of vertex labels. A semi-ordered stable partition is a tuple
of blocks whose sizes are weakly decreasing positionally; blocks of equal
size carry meaning through their list positions, so (A, B) and (B, A) are
distinct partitions when |A| == |B|.

Enumeration anchors every new block at the smallest uncovered vertex and
extends it only with larger non-adjacent vertices, which yields each
unordered partition exactly once. The counting entry points route through
the kernel backends; the Python generator here is the materializing twin and
doubles as an independent cross-check in the tests.
"""

from itertools import chain, groupby, permutations, product

from .errors import CountOverflow, InvalidSize, VertexOutOfRange, WeightMismatch
from .graphs import Graph
from .kernels import I64_MAX, count_all_types, count_fixed_type
from .partitions import as_partition, multiplicity_factorial, partitions_of

FULL_CENSUS_MAX_VERTICES = 50  # rank-indexed count array stays allocatable


def is_stable_set(g: Graph, vertices) -> bool:
    """True iff no edge of g joins two members of the set."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
        if g.neighbors_mask(v) & mask:
            return False
        mask |= 1 << v
    return True


def type_of(blocks) -> tuple:
    """Block sizes in weakly decreasing order."""
    return tuple(sorted((len(b) for b in blocks), reverse=True))


def canonical_blocks(blocks) -> tuple:
    """Sort blocks by decreasing size, ties by smallest member."""
    prepared = [tuple(sorted(b)) for b in blocks]
    prepared.sort(key=lambda b: (-len(b), b[0]))
    return tuple(prepared)


def is_semi_ordered_stable_partition(g: Graph, blocks) -> bool:
    """Disjoint stable blocks covering V(g) with weakly decreasing sizes."""
    seen = 0
    prev = None
    for b in blocks:
        if not b:
            return False
        m = 0
        for v in b:
            if not 0 <= v < g.n:
                return False
            m |= 1 << v
        if m & seen or not is_stable_set(g, b):
            return False
        seen |= m
        if prev is not None and len(b) > prev:
            return False
        prev = len(b)
    return seen == (1 << g.n) - 1


def enumerate_stable_partitions(g: Graph):
    """Yield every unordered stable partition exactly once, canonically."""
    n = g.n
    if n == 0:
        yield ()
        return
    rows = g.rows()
    full = (1 << n) - 1
    blocks = []

    def next_block(uncovered):
        if uncovered == 0:
            yield canonical_blocks(blocks)
            return
        v = (uncovered & -uncovered).bit_length() - 1
        rest = uncovered & ~(1 << v)
        blocks.append([v])
        yield from grow(rest & ~rows[v] & ~((1 << (v + 1)) - 1), rest)
        blocks.pop()

    def grow(allowed, uncovered):
        yield from next_block(uncovered)
        m = allowed
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            blocks[-1].append(u)
            yield from grow(
                allowed & ~rows[u] & ~((1 << (u + 1)) - 1), uncovered & ~(1 << u)
            )
            blocks[-1].pop()

    yield from next_block(full)


def stable_partitions_of_type(g: Graph, lam):
    """Yield the unordered stable partitions of one type, pruned by the
    multiset of block sizes still needed (the materializing counterpart of
    the fixed-type counting kernel)."""
    lam = as_partition(lam)
    if sum(lam) != g.n:
        raise WeightMismatch(f"type weight {sum(lam)} != vertex count {g.n}")
    n = g.n
    if n == 0:
        yield ()
        return
    rows = g.rows()
    needed = [0] * (n + 1)
    for p in lam:
        needed[p] += 1
    blocks = []

    def next_block(uncovered):
        if uncovered == 0:
            yield canonical_blocks(blocks)
            return
        v = (uncovered & -uncovered).bit_length() - 1
        rest = uncovered & ~(1 << v)
        blocks.append([v])
        yield from grow(rest & ~rows[v] & ~((1 << (v + 1)) - 1), rest)
        blocks.pop()

    def grow(allowed, uncovered):
        size = len(blocks[-1])
        if needed[size]:
            needed[size] -= 1
            yield from next_block(uncovered)
            needed[size] += 1
        if not any(needed[size + 1 :]):
            return
        m = allowed
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            blocks[-1].append(u)
            yield from grow(
                allowed & ~rows[u] & ~((1 << (u + 1)) - 1), uncovered & ~(1 << u)
            )
            blocks[-1].pop()

    yield from next_block((1 << n) - 1)


def semi_ordered_arrangements(blocks):
    """All orderings of a canonical partition that keep sizes weakly
    decreasing: equal-size runs are permuted independently."""
    runs = [tuple(run) for _, run in groupby(blocks, key=len)]
    for combo in product(*(permutations(run) for run in runs)):
        yield tuple(chain.from_iterable(combo))


def semi_ordered_partitions_of_type(g: Graph, lam):
    """Yield every semi-ordered stable partition of the given type."""
    for blocks in stable_partitions_of_type(g, lam):
        yield from semi_ordered_arrangements(blocks)


def count_types(g: Graph) -> dict:
    """Unordered stable-partition counts by type (absent type means 0)."""
    if g.n == 0:
        return {(): 1}
    if g.n > FULL_CENSUS_MAX_VERTICES:
        raise InvalidSize(
            f"full type census supported up to {FULL_CENSUS_MAX_VERTICES} vertices"
        )
    counts = count_all_types(g.adjacency_uint64(), g.n)
    return {
        lam: int(c) for lam, c in zip(partitions_of(g.n), counts.tolist()) if c
    }


def _checked_semi_ordered(a: int, lam) -> int:
    value = a * multiplicity_factorial(lam)
    if value > I64_MAX:
        raise CountOverflow(
            f"semi-ordered count for type {lam} exceeds the 64-bit counter"
        )
    return value


def semi_ordered_counts(g: Graph) -> dict:
    """Semi-ordered stable-partition counts by type: the unordered count
    times the number of orderings of equal-size blocks. These are the
    monomial coefficients of the chromatic symmetric function."""
    return {
        lam: _checked_semi_ordered(a, lam) for lam, a in count_types(g).items()
    }


def count_of_type(g: Graph, lam) -> int:
    """Semi-ordered count for a single type, via pruned enumeration."""
    lam = as_partition(lam)
    if sum(lam) != g.n:
        raise WeightMismatch(f"type weight {sum(lam)} != vertex count {g.n}")
    a = count_fixed_type(g.adjacency_uint64(), g.n, lam)
    return _checked_semi_ordered(a, lam)


def has_type(g: Graph, lam) -> bool:
    """True iff some stable partition of the given type exists (first-witness
    early exit)."""
    lam = as_partition(lam)
    if sum(lam) != g.n:
        raise WeightMismatch(f"type weight {sum(lam)} != vertex count {g.n}")
    if g.n == 0:
        return True
    return count_fixed_type(g.adjacency_uint64(), g.n, lam, limit=1) == 1


def render_stable_partition(blocks) -> str:
    """Text form like ``{0,2,4}|{1,3}|{5}``."""
    return "|".join("{" + ",".join(str(v) for v in b) + "}" for b in blocks)


def blocks_to_json(blocks) -> list:
    return [list(b) for b in blocks]
