"""Independent oracles for the test suite.

Everything here is deliberately written from first principles, avoiding the
package's own enumeration and counting paths, so that agreement between the
two sides is evidence rather than tautology.
"""

from itertools import combinations, permutations


def all_set_partitions(items):
    """All set partitions of a list, by direct recursion on the last item."""
    items = list(items)
    if not items:
        yield []
        return
    rest, last = items[:-1], items[-1]
    for smaller in all_set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [smaller[k] + [last]] + smaller[k + 1 :]
        yield smaller + [[last]]


def brute_stable_type_counts(g):
    """Unordered stable-partition counts by type using only g.has_edge."""
    counts = {}
    for parts in all_set_partitions(range(g.n)):
        if all(
            not g.has_edge(u, v)
            for block in parts
            for u, v in combinations(block, 2)
        ):
            t = tuple(sorted((len(b) for b in parts), reverse=True))
            counts[t] = counts.get(t, 0) + 1
    return counts


def bell_numbers(limit):
    """Bell numbers B_0..B_limit via the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(limit):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        out.append(nxt[0])
        row = nxt
    return out


def partition_count_pentagonal(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k = 1
        total = 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def ascending_partitions(n):
    """All partitions of n generated as ascending compositions (independent
    of the package's descending-first generator); returned sorted-desc."""
    out = []

    def rec(remaining, minimum, prefix):
        if remaining == 0:
            out.append(tuple(sorted(prefix, reverse=True)))
            return
        for v in range(minimum, remaining + 1):
            prefix.append(v)
            rec(remaining - v, v, prefix)
            prefix.pop()

    rec(n, 1, [])
    return out


def brute_dominance_leq(mu, lam):
    acc_m = acc_l = 0
    for k in range(max(len(mu), len(lam))):
        acc_m += mu[k] if k < len(mu) else 0
        acc_l += lam[k] if k < len(lam) else 0
        if acc_m > acc_l:
            return False
    return True


def brute_covers(lam, mu, universe):
    """Cover relation straight from the definition over a full list of
    partitions of the common weight."""
    if lam == mu or not brute_dominance_leq(mu, lam):
        return False
    for nu in universe:
        if nu in (lam, mu):
            continue
        if brute_dominance_leq(mu, nu) and brute_dominance_leq(nu, lam):
            return False
    return True


def brute_ssyt_count(shape, content):
    """Count semistandard tableaux by filling cells left-to-right,
    top-to-bottom, trying every value 1..len(content)."""
    cells = [(r, c) for r, ls in enumerate(shape) for c in range(ls)]
    remaining = list(content)
    grid = {}

    def fill(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        for val in range(1, len(content) + 1):
            if remaining[val - 1] == 0:
                continue
            if c > 0 and grid[(r, c - 1)] > val:
                continue
            if r > 0 and grid[(r - 1, c)] >= val:
                continue
            remaining[val - 1] -= 1
            grid[(r, c)] = val
            total += fill(k + 1)
            del grid[(r, c)]
            remaining[val - 1] += 1
        return total

    return fill(0)


def nice_all_pairs(e):
    """All-comparable-pairs niceness, the oracle for the covering-pair
    reduction."""
    from chromsym.partitions import dominance_leq, partitions_of

    parts = partitions_of(e.degree)
    for lam in parts:
        if e.coeff(lam) <= 0:
            continue
        for mu in parts:
            if mu != lam and dominance_leq(mu, lam) and e.coeff(mu) <= 0:
                return False, (lam, mu)
    return True, None


def strongly_nice_all_pairs(e):
    from chromsym.partitions import dominance_leq, partitions_of

    parts = partitions_of(e.degree)
    for lam in parts:
        for mu in parts:
            if mu != lam and dominance_leq(mu, lam) and e.coeff(mu) < e.coeff(lam):
                return False, (lam, mu)
    return True, None


def brute_find_claw(g):
    """Induced-claw search over all 4-subsets."""
    for quad in combinations(range(g.n), 4):
        edges = [
            (u, v) for u, v in combinations(quad, 2) if g.has_edge(u, v)
        ]
        if len(edges) != 3:
            continue
        for center in quad:
            if all(center in e for e in edges):
                return True
    return False


def proper_coloring_count_by_perm(g, alpha):
    """Count colorings with the given color distribution by enumerating all
    distinct arrangements of the color word over the vertices."""
    word = []
    for color, count in enumerate(alpha):
        word.extend([color] * count)
    total = 0
    for arrangement in set(permutations(word)):
        if all(
            arrangement[u] != arrangement[v]
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if g.has_edge(u, v)
        ):
            total += 1
    return total
