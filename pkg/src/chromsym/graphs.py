"""Simple graphs on at most 64 vertices with bit-row adjacency, the posets
whose incomparability graphs we study, and generators for every graph family
the verification suites need.

Vertices are dense ints 0..d-1. Each vertex stores one Python-int bit row;
``adjacency_uint64()`` converts the rows to a numpy vector for the counting
kernels. The 64-vertex cap keeps every enumeration inside single machine
words; it is enforced loudly rather than silently degraded.
"""

from itertools import combinations

import numpy as np

from .errors import (
    GraphTooLarge,
    InvalidPoset,
    InvalidSize,
    VertexOutOfRange,
)

MAX_VERTICES = 64


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple graph with symmetric, irreflexive bit-row adjacency."""

    __slots__ = ("n", "_rows", "names", "_adj64")

    def __init__(self, vertex_count: int, edges=(), names=None):
        if vertex_count < 0:
            raise InvalidSize("vertex count must be nonnegative")
        if vertex_count > MAX_VERTICES:
            raise GraphTooLarge(
                f"bit-row representation caps at {MAX_VERTICES} vertices, got {vertex_count}"
            )
        self.n = vertex_count
        rows = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._rows = rows
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != vertex_count:
                raise ValueError("names must cover every vertex")
        self.names = names
        self._adj64 = None

    @property
    def vertex_count(self) -> int:
        return self.n

    def neighbors_mask(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return self._rows[v]

    def rows(self) -> tuple:
        return tuple(self._rows)

    def has_edge(self, u: int, v: int) -> bool:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return bool((self.neighbors_mask(u) >> v) & 1)

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def edge_list(self) -> list:
        return [(u, v) for u in range(self.n) for v in _bits(self._rows[u]) if u < v]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def vertex_name(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def adjacency_uint64(self) -> np.ndarray:
        if self._adj64 is None:
            self._adj64 = np.array(self._rows, dtype=np.uint64)
        return self._adj64

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, tuple(self._rows)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def induced_subgraph(g: Graph, vertices) -> tuple:
    """Subgraph induced by a vertex set, renumbered by increasing old label.
    Returns (subgraph, old-to-new label map)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    remap = {old: new for new, old in enumerate(vs)}
    edges = [
        (remap[u], remap[v]) for u, v in combinations(vs, 2) if g.has_edge(u, v)
    ]
    names = [g.vertex_name(v) for v in vs] if g.names else None
    return Graph(len(vs), edges, names), remap


def find_claw(g: Graph):
    """Locate an induced claw: (center, (leaf, leaf, leaf)) or None."""
    for v in range(g.n):
        row = g._rows[v]
        if row.bit_count() < 3:
            continue
        nbrs = list(_bits(row))
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return v, (a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def claw_graph() -> Graph:
    """The star on one center and three leaves."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSize("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSize("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSize("empty graph needs at least 1 vertex")
    return Graph(n)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidSize("both sides need at least 1 vertex")
    return Graph(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def squid_graph(n: int) -> Graph:
    """Odd cycle on 2n-1 vertices with n extra leaves on one cycle vertex.

    Deterministic labels: hub u = 0, cycle u_k = k for 1 <= k <= 2n-2,
    leaves v_k = 2n-2+k for 1 <= k <= n.
    """
    if n < 2:
        raise InvalidSize("squid needs n >= 2")
    edges = [(0, 1)]
    edges += [(k, k + 1) for k in range(1, 2 * n - 2)]
    edges.append((2 * n - 2, 0))
    edges += [(0, 2 * n - 2 + k) for k in range(1, n + 1)]
    names = ["u"]
    names += [f"u_{k}" for k in range(1, 2 * n - 1)]
    names += [f"v_{k}" for k in range(1, n + 1)]
    return Graph(3 * n - 1, edges, names)


def separating_example_graph() -> Graph:
    """Six-vertex, eight-edge graph whose expansion is strongly nice but not
    Schur positive; the smallest separating example used by the suites."""
    return Graph(6, [(0, 1), (0, 2), (0, 4), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)])


def random_graph(rng, n: int, edge_prob: float) -> Graph:
    """Erdos-Renyi style labeled graph drawn from a seeded ``random.Random``."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# posets
# ---------------------------------------------------------------------------

class Poset:
    """Finite poset with bit-row order relation; axioms checked eagerly.

    leq_rows[a] has bit b set iff a <= b. Silent invalid posets would corrupt
    every incomparability graph downstream, so construction fails loudly.
    """

    __slots__ = ("n", "_leq", "names")

    def __init__(self, element_count: int, leq_rows, names=None):
        if element_count < 0:
            raise InvalidSize("element count must be nonnegative")
        rows = [int(r) for r in leq_rows]
        if len(rows) != element_count:
            raise ValueError("one relation row per element required")
        full = (1 << element_count) - 1
        for a, row in enumerate(rows):
            if row & ~full:
                raise InvalidPoset(f"row {a} relates to elements outside the ground set")
            if not (row >> a) & 1:
                raise InvalidPoset(f"not reflexive at element {a}")
        for a in range(element_count):
            for b in _bits(rows[a]):
                if b != a and (rows[b] >> a) & 1:
                    raise InvalidPoset(f"antisymmetry fails on {a}, {b}")
                if rows[a] | rows[b] != rows[a]:
                    raise InvalidPoset(f"transitivity fails above {a} through {b}")
        self.n = element_count
        self._leq = rows
        self.names = tuple(str(x) for x in names) if names is not None else None

    @property
    def element_count(self) -> int:
        return self.n

    def leq(self, a: int, b: int) -> bool:
        return bool((self._leq[a] >> b) & 1)

    def element_name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def __repr__(self):
        return f"Poset(n={self.n})"


def chain_poset(k: int) -> Poset:
    """Total order on k elements."""
    full = (1 << k) - 1
    return Poset(k, [full & ~((1 << a) - 1) for a in range(k)])


def antichain_poset(k: int) -> Poset:
    return Poset(k, [1 << a for a in range(k)])


def boolean_lattice(n: int) -> Poset:
    """Subsets of an n-set, encoded as bit masks, ordered by inclusion."""
    if not 0 <= n <= 16:
        raise InvalidSize("boolean lattice supported for 0 <= n <= 16")
    size = 1 << n
    rows = []
    for a in range(size):
        row = 0
        free = (size - 1) ^ a
        s = free
        while True:
            row |= 1 << (a | s)
            if s == 0:
                break
            s = (s - 1) & free
        rows.append(row)
    names = [format(a, "b").zfill(max(n, 1)) for a in range(size)] if n else None
    return Poset(size, rows, names)


def incomparability_graph(p: Poset) -> Graph:
    """Graph on the poset's elements joining each incomparable pair."""
    edges = [
        (a, b)
        for a, b in combinations(range(p.n), 2)
        if not (p.leq(a, b) or p.leq(b, a))
    ]
    return Graph(p.n, edges, p.names)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    """First line ``d m``, then one ``i j`` line per edge with i < j."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise ValueError("empty edge list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'd m' header, got {rows[0]!r}")
    d, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        pair = ln.split()
        if len(pair) != 2:
            raise ValueError(f"expected 'i j' edge line, got {ln!r}")
        u, v = int(pair[0]), int(pair[1])
        if not 0 <= u < v < d:
            raise ValueError(f"edge ({u},{v}) violates 0 <= i < j < {d}")
        edges.append((u, v))
    return Graph(d, edges)


def format_graph6(g: Graph) -> str:
    """Standard printable-ASCII graph6 encoding for graphs up to 62 vertices."""
    if g.n > 62:
        raise GraphTooLarge("graph6 output supported up to 62 vertices")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ValueError("graph6 input contains bytes outside 63..126")
    if data[0] == 63:
        raise ValueError("graph6 long-form sizes (>62 vertices) not supported")
    n = data[0]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise ValueError(f"graph6 body length {len(data) - 1}, expected {need}")
    bits = []
    for val in data[1:]:
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def format_graph_json(g: Graph) -> dict:
    out = {"vertex_count": g.n, "edges": [list(e) for e in g.edge_list()]}
    if g.names:
        out["names"] = list(g.names)
    return out


def parse_graph_json(obj: dict) -> Graph:
    try:
        return Graph(int(obj["vertex_count"]), [tuple(e) for e in obj.get("edges", [])],
                     obj.get("names"))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc


def read_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse edge-list, graph6, or JSON input; sniff the format by default."""
    stripped = text.strip()
    if fmt == "auto":
        if stripped.startswith("{"):
            fmt = "json"
        else:
            head = stripped.splitlines()[0].split() if stripped else []
            fmt = "edgelist" if len(head) == 2 and all(t.isdigit() for t in head) else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "json":
        import json

        return parse_graph_json(json.loads(text))
    raise ValueError(f"unknown graph format {fmt!r}")
