"""Two-block decompositions and the vertex-swap maps between stable
partitions of dominance-adjacent types.

For a covering pair (lam, mu) differing by a unit move at positions i < j,
look at the union H of blocks i and j of a semi-ordered stable partition.
In a claw-free host every vertex of H has at most two H-neighbors (a third
would complete a claw with two same-block non-neighbors), so H splits into
paths and even cycles that alternate between the two stable blocks. The
odd-order paths, sorted by smallest vertex label, spell a word over {1, 2}
recording which block holds each path's one-vertex majority.

swap_down exchanges the two blocks' vertices along the odd path at the
*first* maximal prefix of the word, turning a type-lam partition into a
type-mu one; swap_up exchanges along the path *after the last* maximal
prefix, and returns swap_down's argument whenever it is fed swap_down's
output. Prefix sums drop by exactly two from the swap position onward, and
nowhere else, which is what makes the two selections inverse.

Blocks keep their list positions through either swap: positions i and j are
rewritten in place, a block is appended at position j = len(lam) + 1 when
lam has no j-th part, and position j is dropped when it empties. Since the
unit move lowers the last part of its value run and raises the first of its
run, positional rewriting keeps the size sequence equal to the target type,
and swap_up(swap_down(b)) is literally b.

verify_injection materializes every semi-ordered source of type lam,
applies swap_down, and certifies: images have type mu, images are pairwise
distinct, swap_up restores every source, each swap preserves the union of
the two blocks, and consequently the type-mu count is at least the type-lam
count.
"""

from dataclasses import dataclass
from itertools import chain, groupby, permutations, product
from typing import Optional

from .errors import EmptyWord, NotClawFree, TypeMismatch, WeightMismatch
from .graphs import Graph, find_claw, _bits
from .partitions import CoveringPair, as_partition, covering_pair_for, format_partition
from .stable import count_of_type, is_stable_set, stable_partitions_of_type


@dataclass(frozen=True)
class PathOrCycle:
    kind: str  # "path" | "cycle"
    vertices: tuple  # walk order; paths start at their smaller endpoint


@dataclass(frozen=True)
class TwoBlockDecomposition:
    block_i: tuple
    block_j: tuple
    components: tuple  # all paths and cycles, discovery order
    odd_paths: tuple  # odd-order paths sorted by smallest vertex


def _h_components(rows, hmask):
    """Split the subgraph induced on hmask into paths and cycles.

    Deterministic: paths are walked from their smallest endpoint in
    ascending endpoint order, cycles from their smallest member toward its
    smaller neighbor. Raises NotClawFree if any vertex has three or more
    neighbors inside hmask.
    """
    degree = {}
    for v in _bits(hmask):
        d = (rows[v] & hmask).bit_count()
        if d > 2:
            raise NotClawFree(
                f"vertex {v} has {d} neighbors inside the two-block union", vertex=v
            )
        degree[v] = d
    comps = []
    visited = 0
    for v in degree:
        if (visited >> v) & 1 or degree[v] > 1:
            continue
        walk = [v]
        visited |= 1 << v
        prev, cur = -1, v
        while True:
            step = rows[cur] & hmask
            if prev >= 0:
                step &= ~(1 << prev)
            if step == 0:
                break
            nxt = (step & -step).bit_length() - 1
            walk.append(nxt)
            visited |= 1 << nxt
            prev, cur = cur, nxt
        comps.append(PathOrCycle("path", tuple(walk)))
    for v in degree:
        if (visited >> v) & 1:
            continue
        walk = [v]
        visited |= 1 << v
        first = rows[v] & hmask
        prev, cur = v, (first & -first).bit_length() - 1
        while cur != v:
            walk.append(cur)
            visited |= 1 << cur
            step = rows[cur] & hmask & ~(1 << prev)
            prev, cur = cur, (step & -step).bit_length() - 1
        comps.append(PathOrCycle("cycle", tuple(walk)))
    return comps


def decompose_block_pair(g: Graph, blocks, i: int, j: int) -> TwoBlockDecomposition:
    """Decompose the union of blocks i and j (1-based positions into the
    semi-ordered block list; j == len(blocks) + 1 addresses the empty
    block)."""
    if not 1 <= i < j <= len(blocks) + 1:
        raise ValueError(f"need 1 <= i < j <= {len(blocks) + 1}, got ({i}, {j})")
    block_i = tuple(sorted(blocks[i - 1]))
    block_j = tuple(sorted(blocks[j - 1])) if j <= len(blocks) else ()
    for b in (block_i, block_j):
        if b and not is_stable_set(g, b):
            raise ValueError(f"block {b} is not a stable set")
    bi_mask = _mask(block_i)
    bj_mask = _mask(block_j)
    if bi_mask & bj_mask:
        raise ValueError("blocks i and j intersect")
    comps = _h_components(g.rows(), bi_mask | bj_mask)
    odd = sorted(
        (c for c in comps if c.kind == "path" and len(c.vertices) % 2 == 1),
        key=lambda c: min(c.vertices),
    )
    return TwoBlockDecomposition(block_i, block_j, tuple(comps), tuple(odd))


def word_of(dec: TwoBlockDecomposition) -> str:
    """One letter per odd path: '1' when block i holds the majority of its
    vertices, '2' when block j does."""
    bi_mask = _mask(dec.block_i)
    letters = []
    for p in dec.odd_paths:
        ci = sum(1 for v in p.vertices if (bi_mask >> v) & 1)
        cj = len(p.vertices) - ci
        letters.append("1" if ci > cj else "2")
    return "".join(letters)


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _mask_to_block(mask) -> tuple:
    return tuple(_bits(mask))


def _prefix_diffs(word):
    out = []
    d = 0
    for ch in word:
        d += 1 if ch == "1" else -1
        out.append(d)
    return out


def _swap_info(rows, bi_mask, bj_mask):
    """(odd path masks sorted by smallest vertex, word, prefix diffs)."""
    comps = _h_components(rows, bi_mask | bj_mask)
    odd = []
    for c in comps:
        if c.kind != "path" or len(c.vertices) % 2 == 0:
            continue
        pmask = _mask(c.vertices)
        ci = (pmask & bi_mask).bit_count()
        odd.append((min(c.vertices), pmask, "1" if 2 * ci > len(c.vertices) else "2"))
    odd.sort()
    word = "".join(letter for _, _, letter in odd)
    return [pmask for _, pmask, _ in odd], word, _prefix_diffs(word)


def _apply_swap(mask_blocks, i, j, bi_mask, bj_mask, path_mask):
    new_i = (bi_mask & ~path_mask) | (bj_mask & path_mask)
    new_j = (bj_mask & ~path_mask) | (bi_mask & path_mask)
    out = list(mask_blocks)
    out[i - 1] = new_i
    if j <= len(mask_blocks):
        if new_j:
            out[j - 1] = new_j
        else:
            if j != len(mask_blocks):
                raise AssertionError("emptied block must sit at the tail position")
            out.pop()
    else:
        out.append(new_j)
    return tuple(out)


def _swap_down_masks(rows, mask_blocks, pair: CoveringPair, cache=None):
    bi_mask = mask_blocks[pair.i - 1]
    bj_mask = mask_blocks[pair.j - 1] if pair.j <= len(mask_blocks) else 0
    key = (bi_mask, bj_mask)
    info = cache.get(key) if cache is not None else None
    if info is None:
        info = _swap_info(rows, bi_mask, bj_mask)
        if cache is not None:
            cache[key] = info
    odd_masks, word, diffs = info
    peak = max(diffs)
    if peak < 2:
        raise AssertionError("covering-pair size gap guarantees prefix peak >= 2")
    p = diffs.index(peak) + 1
    if word[p - 1] != "1":
        raise AssertionError("first-peak letter must be '1'")
    return _apply_swap(mask_blocks, pair.i, pair.j, bi_mask, bj_mask, odd_masks[p - 1])


def _swap_up_masks(rows, mask_blocks, pair: CoveringPair, cache=None):
    bi_mask = mask_blocks[pair.i - 1]
    bj_mask = mask_blocks[pair.j - 1]
    key = (bi_mask, bj_mask)
    info = cache.get(key) if cache is not None else None
    if info is None:
        info = _swap_info(rows, bi_mask, bj_mask)
        if cache is not None:
            cache[key] = info
    odd_masks, word, diffs = info
    if not word:
        raise EmptyWord("no odd paths, so no swap position exists")
    peak = max(diffs)
    q = len(diffs) - diffs[::-1].index(peak)  # 1-based last peak position
    if q == len(word):
        raise ValueError(
            "prefix maximum sits at the word's end; input is outside the swap image"
        )
    return _apply_swap(mask_blocks, pair.i, pair.j, bi_mask, bj_mask, odd_masks[q])


def _check_sizes(blocks, target, label):
    sizes = tuple(len(b) for b in blocks)
    if sizes != tuple(target):
        raise TypeMismatch(
            f"blocks have sizes {sizes}, expected {label} = {format_partition(target)}"
        )


def swap_down(g: Graph, blocks, pair: CoveringPair) -> tuple:
    """Map a semi-ordered stable partition of type pair.lam to one of type
    pair.mu by the exchange along the first-maximal-prefix odd path."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    _check_sizes(blocks, pair.lam, "lam")
    masks = tuple(_mask(b) for b in blocks)
    out = _swap_down_masks(g.rows(), masks, pair)
    return tuple(_mask_to_block(m) for m in out)


def swap_up(g: Graph, blocks, pair: CoveringPair) -> tuple:
    """Inverse exchange along the odd path after the last maximal prefix;
    restores swap_down's argument when given swap_down's output. On other
    type-mu partitions it executes the same mechanical rule with no inverse
    guarantee."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    _check_sizes(blocks, pair.mu, "mu")
    masks = tuple(_mask(b) for b in blocks)
    out = _swap_up_masks(g.rows(), masks, pair)
    return tuple(_mask_to_block(m) for m in out)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

CHECK_NAMES = (
    "images_have_target_type",
    "images_distinct",
    "round_trip_identity",
    "union_preserved",
    "count_monotone",
)


@dataclass
class InjectionReport:
    lam: tuple
    mu: tuple
    i: int
    j: int
    source_count: int
    image_count: int
    checks: dict
    counterexample: Optional[dict]
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "i": self.i,
            "j": self.j,
            "sources": self.source_count,
            "images": self.image_count,
            "checks": dict(self.checks),
            "counterexample": self.counterexample,
            "ok": self.ok,
        }


def _stable_mask(rows, mask) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if rows[v] & mask:
            return False
        m ^= low
    return True


def _mask_arrangements(mask_blocks):
    """Orderings of a size-sorted tuple of block masks that keep sizes weakly
    decreasing: permute within equal-popcount runs."""
    runs = [tuple(run) for _, run in groupby(mask_blocks, key=lambda m: m.bit_count())]
    for combo in product(*(permutations(run) for run in runs)):
        yield tuple(chain.from_iterable(combo))


def verify_injection(g: Graph, lam, mu) -> InjectionReport:
    """Materialize every semi-ordered stable partition of type lam, push each
    through swap_down, and check the five certification points. Raises
    NotClawFree when the host graph contains an induced claw."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != g.n or sum(mu) != g.n:
        raise WeightMismatch("both types must have weight equal to the vertex count")
    pair = covering_pair_for(lam, mu)
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(
            f"vertex {claw[0]} centers a claw with leaves {claw[1]}", vertex=claw[0]
        )
    rows = g.rows()
    full = (1 << g.n) - 1
    cache_down = {}
    cache_up = {}
    checks = {name: True for name in CHECK_NAMES}
    counterexample = None

    def fail(name, source_masks, image_masks, note):
        nonlocal counterexample
        checks[name] = False
        if counterexample is None:
            counterexample = {
                "check": name,
                "source": [list(_mask_to_block(m)) for m in source_masks],
                "image": [list(_mask_to_block(m)) for m in image_masks],
                "note": note,
            }

    source_count = 0
    images = set()
    for unordered in stable_partitions_of_type(g, lam):
        mask_blocks = tuple(_mask(b) for b in unordered)
        for src in _mask_arrangements(mask_blocks):
            source_count += 1
            img = _swap_down_masks(rows, src, pair, cache_down)
            images.add(img)

            sizes_ok = tuple(m.bit_count() for m in img) == mu
            cover = 0
            clean = True
            for m in img:
                if m & cover or not _stable_mask(rows, m):
                    clean = False
                    break
                cover |= m
            if not (sizes_ok and clean and cover == full):
                fail("images_have_target_type", src, img, "image is not a valid type-mu partition")

            src_union = src[pair.i - 1] | (src[pair.j - 1] if pair.j <= len(src) else 0)
            img_union = img[pair.i - 1] | (img[pair.j - 1] if pair.j <= len(img) else 0)
            if src_union != img_union:
                fail("union_preserved", src, img, "two-block union changed")

            back = _swap_up_masks(rows, img, pair, cache_up)
            if back != src:
                fail("round_trip_identity", src, img, "swap_up did not restore the source")

    if len(images) != source_count:
        fail("images_distinct", (), (), f"{source_count} sources, {len(images)} images")

    count_lam = count_of_type(g, lam)
    count_mu = count_of_type(g, mu)
    if count_lam != source_count:
        raise AssertionError(
            f"materialized {source_count} sources but counted {count_lam}"
        )
    if count_mu < count_lam:
        fail("count_monotone", (), (), f"count {count_mu} < {count_lam}")

    ok = all(checks.values())
    return InjectionReport(
        lam=lam,
        mu=mu,
        i=pair.i,
        j=pair.j,
        source_count=source_count,
        image_count=len(images),
        checks=checks,
        counterexample=counterexample,
        ok=ok,
    )
