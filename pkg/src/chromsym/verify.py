"""Reproduction suites: one-command checks for every desk-scale claim the
package implements, shared by the CLI ``verify`` subcommand and the
acceptance tests.

Every suite is deterministic given its seed; reports carry no timing or
machine information, so their rendered output is byte-stable across runs.
"""

import random
from math import comb

from .graphs import (
    Graph,
    claw_graph,
    is_claw_free,
    random_graph,
    separating_example_graph,
    squid_graph,
)
from .injection import (
    decompose_block_pair,
    swap_down,
    swap_up,
    verify_injection,
    word_of,
)
from .niceness import (
    graph_is_nice,
    graph_is_strongly_nice,
    implication_chain_check,
    is_strongly_nice,
)
from .partitions import (
    covering_pair_for,
    covering_pairs,
    dominance_lt,
    format_partition,
    partitions_of,
)
from .stable import count_of_type, has_type
from .symfunc import Expansion, csf_m, is_schur_positive, kostka, m_to_s

SUITE_NAMES = (
    "claw-expansion",
    "figure2",
    "thm31",
    "thm41",
    "thm42",
    "white",
    "lemma22",
)

# Expansions of the six-vertex separating example, fixed by direct counting
# and kept as exact fixtures.
SEPARATING_M = {
    (1, 1, 1, 1, 1, 1): 720,
    (2, 1, 1, 1, 1): 168,
    (2, 2, 1, 1): 44,
    (2, 2, 2): 6,
    (3, 1, 1, 1): 12,
    (3, 2, 1): 6,
    (3, 3): 2,
}
SEPARATING_S = {
    (1, 1, 1, 1, 1, 1): 152,
    (2, 1, 1, 1, 1): 52,
    (2, 2, 1, 1): 26,
    (2, 2, 2): -4,
    (3, 1, 1, 1): 2,
    (3, 2, 1): 4,
    (3, 3): 2,
}

CLAW_M = {(1, 1, 1, 1): 24, (2, 1, 1): 6, (3, 1): 1}


def _item(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


def _report(suite, items, **params):
    return {
        "suite": suite,
        "params": params,
        "items": items,
        "ok": all(it["ok"] for it in items),
    }


# ---------------------------------------------------------------------------
# fixtures and generators
# ---------------------------------------------------------------------------

def word_fixture():
    """Twelve-vertex two-block configuration whose odd-path word is 1211 and
    whose down-swap moves vertex 9 across, giving word 1212.

    Returns (graph, blocks, covering pair (7,5) > (6,6)).
    """
    edges = [(4, 2), (4, 5), (6, 2), (6, 5), (0, 10), (10, 1), (8, 11)]
    g = Graph(12, edges)
    block_i = (0, 1, 4, 6, 7, 8, 9)
    block_j = (2, 3, 5, 10, 11)
    pair = covering_pair_for((7, 5), (6, 6))
    return g, (block_i, block_j), pair


def labeled_graphs(max_n: int):
    """Every labeled graph on 1..max_n vertices, by edge-set bitmask."""
    for d in range(1, max_n + 1):
        pairs = [(u, v) for u in range(d) for v in range(u + 1, d)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
            yield Graph(d, edges)


def random_claw_free_graph(rng: random.Random, n: int) -> Graph:
    """Rejection-sample a claw-free labeled graph on n vertices."""
    while True:
        p = rng.choice((0.55, 0.7, 0.85))
        g = random_graph(rng, n, p)
        if is_claw_free(g):
            return g


def seeded_claw_free_graphs(seed: int, count: int, sizes) -> list:
    rng = random.Random(seed)
    sizes = tuple(sizes)
    return [
        random_claw_free_graph(rng, sizes[k % len(sizes)]) for k in range(count)
    ]


def random_nonnegative_schur_expansion(rng: random.Random, max_degree: int = 8) -> Expansion:
    """Sparse random Schur expansion with coefficients in 0..10."""
    n = rng.randint(1, max_degree)
    coeffs = {}
    for lam in partitions_of(n):
        if rng.random() < 0.5:
            coeffs[lam] = rng.randint(0, 10)
    return Expansion(n, "s", coeffs)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_claw_expansion(**_):
    e = csf_m(claw_graph())
    expected = Expansion(4, "m", CLAW_M)
    items = [
        _item(
            "claw m-expansion",
            e == expected,
            f"got {e!r}",
        )
    ]
    return _report("claw-expansion", items)


def suite_figure2(**_):
    g = separating_example_graph()
    em = csf_m(g)
    es = m_to_s(em)
    items = [
        _item("m-expansion", em == Expansion(6, "m", SEPARATING_M), f"got {em!r}"),
        _item("s-expansion", es == Expansion(6, "s", SEPARATING_S), f"got {es!r}"),
    ]
    strongly, witness = is_strongly_nice(em)
    items.append(_item("strongly nice", strongly, f"witness={witness}"))
    spos, neg = is_schur_positive(em)
    items.append(
        _item(
            "not Schur positive, witness (2,2,2)",
            (not spos) and neg == (2, 2, 2),
            f"positive={spos}, witness={neg and format_partition(neg)}",
        )
    )
    return _report("figure2", items)


def strongly_nice_sweep(max_n: int):
    """Check every claw-free labeled graph on <= max_n vertices for strong
    niceness. Returns (graphs seen, claw-free count, failures)."""
    seen = 0
    claw_free = 0
    failures = []
    for g in labeled_graphs(max_n):
        seen += 1
        if not is_claw_free(g):
            continue
        claw_free += 1
        ok, witness = graph_is_strongly_nice(g)
        if not ok:
            failures.append((g, witness))
    return seen, claw_free, failures


def injection_sweep(graphs):
    """Run verify_injection on every covering pair of every claw-free graph.
    Returns (graphs checked, pair reports run, failures)."""
    checked = 0
    runs = 0
    failures = []
    for g in graphs:
        if not is_claw_free(g):
            continue
        checked += 1
        for cp in covering_pairs(g.n):
            report = verify_injection(g, cp.lam, cp.mu)
            runs += 1
            if not report.ok:
                failures.append((g, report))
    return checked, runs, failures


def suite_thm31(max_n: int = 6, seed: int = 0, rand_snice: int = 200,
                rand_inj: int = 100, inj_max_n=None, **_):
    if inj_max_n is None:
        inj_max_n = max_n
    items = []

    e = csf_m(claw_graph())
    strongly, witness = is_strongly_nice(e)
    items.append(
        _item(
            "claw is not strongly nice, witness ((3,1),(2,2))",
            (not strongly)
            and witness is not None
            and (witness.lam, witness.mu) == ((3, 1), (2, 2)),
            f"witness={witness}",
        )
    )

    g, blocks, pair = word_fixture()
    dec = decompose_block_pair(g, blocks, pair.i, pair.j)
    w0 = word_of(dec)
    items.append(_item("fixture word is 1211", w0 == "1211", f"got {w0!r}"))
    image = swap_down(g, blocks, pair)
    dec2 = decompose_block_pair(g, image, pair.i, pair.j)
    w1 = word_of(dec2)
    expected_image = ((0, 1, 4, 6, 7, 8), (2, 3, 5, 9, 10, 11))
    items.append(
        _item(
            "down-swap moves vertex 9, word becomes 1212",
            image == expected_image and w1 == "1212",
            f"image={image}, word={w1!r}",
        )
    )
    restored = swap_up(g, image, pair)
    items.append(_item("up-swap restores the fixture", restored == blocks, f"got {restored}"))

    seen, cf, failures = strongly_nice_sweep(max_n)
    items.append(
        _item(
            f"all claw-free labeled graphs on <= {max_n} vertices strongly nice",
            not failures,
            f"{cf} claw-free of {seen} labeled graphs, {len(failures)} violations",
        )
    )

    rand_graphs = seeded_claw_free_graphs(seed, rand_snice, (7, 8, 9))
    bad = [
        g for g in rand_graphs if not graph_is_strongly_nice(g)[0]
    ]
    items.append(
        _item(
            f"{rand_snice} random claw-free graphs on 7-9 vertices strongly nice",
            not bad,
            f"{len(bad)} violations",
        )
    )

    checked, runs, inj_failures = injection_sweep(labeled_graphs(inj_max_n))
    items.append(
        _item(
            f"injection verified on claw-free labeled graphs <= {inj_max_n} vertices",
            not inj_failures,
            f"{checked} graphs, {runs} covering-pair runs, {len(inj_failures)} failures",
        )
    )

    rand_inj_graphs = seeded_claw_free_graphs(seed + 1, rand_inj, (7, 8))
    checked2, runs2, inj_failures2 = injection_sweep(rand_inj_graphs)
    items.append(
        _item(
            f"injection verified on {rand_inj} random claw-free graphs on 7-8 vertices",
            not inj_failures2,
            f"{checked2} graphs, {runs2} covering-pair runs, {len(inj_failures2)} failures",
        )
    )

    return _report("thm31", items, max_n=max_n, seed=seed)


def squid_coefficient_expectations(n: int) -> tuple:
    """Closed forms for the two squid coefficients at odd cycle 2n-1."""
    low = 2 * (n - 1) * comb(2 * n - 2, n - 1)  # type (n, n, n-1)
    high = 4 * (n - 1) * comb(2 * n - 2, n)  # type (n+1, n-1, n-1)
    return low, high


def suite_thm41(max_n: int = 4, allow_slow: bool = False, **_):
    items = []
    top = max(max_n, 3)
    if allow_slow:
        top = max(top, 5)
    for n in range(3, top + 1):
        g = squid_graph(n)
        low_ex, high_ex = squid_coefficient_expectations(n)
        low = count_of_type(g, (n, n, n - 1))
        high = count_of_type(g, (n + 1, n - 1, n - 1))
        items.append(
            _item(
                f"squid n={n} coefficient at {format_partition((n, n, n - 1))}",
                low == low_ex,
                f"counted {low}, closed form {low_ex}",
            )
        )
        items.append(
            _item(
                f"squid n={n} coefficient at {format_partition((n + 1, n - 1, n - 1))}",
                high == high_ex,
                f"counted {high}, closed form {high_ex}",
            )
        )
        items.append(
            _item(
                f"squid n={n} strict gap refutes strong niceness",
                low < high,
                f"{low} < {high}",
            )
        )
        strongly, witness = graph_is_strongly_nice(g) if n <= 4 else (None, None)
        if strongly is not None:
            items.append(
                _item(
                    f"squid n={n} strongly-nice checker agrees",
                    not strongly,
                    f"witness={witness}",
                )
            )
    return _report("thm41", items, max_n=top, allow_slow=allow_slow)


def suite_thm42(max_n: int = 4, **_):
    items = []
    for n in range(3, max(max_n, 3) + 1):
        g = squid_graph(n)
        nice, witness = graph_is_nice(g)
        items.append(
            _item(f"squid n={n} is nice (full enumeration)", nice, f"witness={witness}")
        )
    for n in range(3, 7):
        g = squid_graph(n)
        lam = (2 * n - 1, n - 1, 1)
        items.append(
            _item(
                f"squid n={n} has a stable partition of type {format_partition(lam)}",
                has_type(g, lam),
            )
        )
    return _report("thm42", items, max_n=max_n)


def suite_white(max_weight: int = 8, **_):
    items = []
    monotone_checked = 0
    monotone_bad = []
    for n in range(1, max_weight + 1):
        parts = partitions_of(n)
        for cp in covering_pairs(n):
            for nu in parts:
                monotone_checked += 1
                if kostka(nu, cp.mu) < kostka(nu, cp.lam):
                    monotone_bad.append((nu, cp))
    items.append(
        _item(
            f"Kostka monotonicity along covers up to weight {max_weight}",
            not monotone_bad,
            f"{monotone_checked} comparisons, {len(monotone_bad)} violations",
        )
    )
    tri_bad = []
    diag_bad = []
    for n in range(1, max_weight + 1):
        for lam in partitions_of(n):
            if kostka(lam, lam) != 1:
                diag_bad.append(lam)
            for mu in partitions_of(n):
                if kostka(lam, mu) > 0 and not dominance_lt(mu, lam) and mu != lam:
                    tri_bad.append((lam, mu))
    items.append(
        _item("Kostka unitriangularity (diagonal ones)", not diag_bad, f"{len(diag_bad)} bad")
    )
    items.append(
        _item(
            "Kostka support inside dominance lower order",
            not tri_bad,
            f"{len(tri_bad)} bad",
        )
    )
    return _report("white", items, max_weight=max_weight)


def suite_lemma22(seed: int = 0, samples: int = 1000, **_):
    rng = random.Random(seed)
    bad = 0
    for _k in range(samples):
        e = random_nonnegative_schur_expansion(rng)
        if not implication_chain_check(e):
            bad += 1
    items = [
        _item(
            f"{samples} random nonnegative Schur expansions are strongly nice and nice",
            bad == 0,
            f"{bad} violations",
        )
    ]
    return _report("lemma22", items, seed=seed, samples=samples)


_SUITES = {
    "claw-expansion": suite_claw_expansion,
    "figure2": suite_figure2,
    "thm31": suite_thm31,
    "thm41": suite_thm41,
    "thm42": suite_thm42,
    "white": suite_white,
    "lemma22": suite_lemma22,
}


def run_suite(name: str, max_n=None, seed: int = 0, allow_slow: bool = False) -> list:
    """Run one suite (or 'all'); returns a list of report dicts."""
    if name == "all":
        names = SUITE_NAMES
    elif name in _SUITES:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    reports = []
    for nm in names:
        kwargs = {"seed": seed, "allow_slow": allow_slow}
        if max_n is not None:
            kwargs["max_n"] = max_n
        reports.append(_SUITES[nm](**kwargs))
    return reports
