"""Stable-partition counting kernels over uint64 bit-row adjacency.

Written in a numba-compatible subset of Python: explicit stacks instead of
recursion, preallocated numpy scratch arrays, uint64 masks only. The exact
same source runs uncompiled as the pure-python fallback backend, so both
backends cannot drift apart.

Enumeration is canonical: each block is anchored at the smallest vertex not
yet covered and extended only by larger vertices, so every unordered stable
partition is generated exactly once, with no hashing or deduplication. A
stack frame either closes the block under construction (recording its size
and anchoring the next block) or extends it by one candidate vertex; at most
one frame is live per vertex plus one per block, so 2n + 2 frames suffice.

Counters are int64. A count that large would require visiting more than
2^63 partitions, which no reachable input can do, so increments cannot wrap;
the overflow-checked arithmetic lives in the Python callers that multiply
counts by ordering factors.
"""

import numpy as np

U0 = np.uint64(0)
U1 = np.uint64(1)


def count_partitions_by_type(adj, n, pcount, counts):
    """Tally every stable partition by type.

    counts is indexed by the reverse-lexicographic rank of the type among
    partitions of n; pcount[m, k] must hold the number of integer partitions
    of m with all parts <= k, from which the rank of a sorted size vector is
    computed by counting its reverse-lexicographic predecessors. Returns the
    total number of stable partitions.
    """
    if n == 0:
        counts[0] += 1
        return 1
    if n >= 64:
        full = ~U0
    else:
        full = (U1 << np.uint64(n)) - U1

    maxdepth = 2 * n + 2
    st_unc = np.zeros(maxdepth, dtype=np.uint64)
    st_allowed = np.zeros(maxdepth, dtype=np.uint64)
    st_cursor = np.zeros(maxdepth, dtype=np.int64)
    st_size = np.zeros(maxdepth, dtype=np.int64)
    st_popblock = np.zeros(maxdepth, dtype=np.int64)
    sizes = np.zeros(n + 2, dtype=np.int64)
    tmp = np.zeros(n + 2, dtype=np.int64)
    ncomp = 0
    total = 0

    unc0 = full & ~U1
    st_unc[0] = unc0
    st_allowed[0] = unc0 & ~adj[0]
    st_cursor[0] = -1
    st_size[0] = 1
    st_popblock[0] = 0
    sp = 1

    while sp > 0:
        f = sp - 1
        if st_cursor[f] == -1:
            # close the block under construction
            st_cursor[f] = 0
            unc = st_unc[f]
            if unc == U0:
                m = ncomp + 1
                for k in range(ncomp):
                    tmp[k] = sizes[k]
                tmp[ncomp] = st_size[f]
                for a in range(1, m):
                    key = tmp[a]
                    b = a - 1
                    while b >= 0 and tmp[b] < key:
                        tmp[b + 1] = tmp[b]
                        b -= 1
                    tmp[b + 1] = key
                rank = 0
                rem = n
                prev = n
                for idx in range(m):
                    p = tmp[idx]
                    hi = prev
                    if rem < hi:
                        hi = rem
                    for v2 in range(p + 1, hi + 1):
                        rank += pcount[rem - v2, v2]
                    rem -= p
                    prev = p
                counts[rank] += 1
                total += 1
            else:
                sizes[ncomp] = st_size[f]
                ncomp += 1
                v = 0
                while (unc >> np.uint64(v)) & U1 == U0:
                    v += 1
                bit = U1 << np.uint64(v)
                unc2 = unc & ~bit
                st_unc[sp] = unc2
                st_allowed[sp] = unc2 & ~adj[v] & ~(bit | (bit - U1))
                st_cursor[sp] = -1
                st_size[sp] = 1
                st_popblock[sp] = 1
                sp += 1
            continue
        allowed = st_allowed[f]
        v = st_cursor[f]
        found = -1
        while v < n:
            if (allowed >> np.uint64(v)) & U1 == U1:
                found = v
                break
            v += 1
        if found == -1:
            sp -= 1
            if st_popblock[f] == 1:
                ncomp -= 1
            continue
        st_cursor[f] = found + 1
        bit = U1 << np.uint64(found)
        st_unc[sp] = st_unc[f] & ~bit
        st_allowed[sp] = allowed & ~adj[found] & ~(bit | (bit - U1))
        st_cursor[sp] = -1
        st_size[sp] = st_size[f] + 1
        st_popblock[sp] = 0
        sp += 1
    return total


def count_partitions_fixed_type(adj, n, needed, limit):
    """Count stable partitions whose sorted block sizes equal a target type.

    needed[s] gives the multiplicity of part s in the target and is consumed
    in place (pass a fresh array). Stops as soon as ``limit`` partitions are
    found, so limit=1 is an existence test. Branches die once a finished
    block's size has no unused target part, and a block never grows past the
    largest part still unused.
    """
    if n == 0:
        if limit > 0:
            return 1
        return 0
    if n >= 64:
        full = ~U0
    else:
        full = (U1 << np.uint64(n)) - U1

    maxdepth = 2 * n + 2
    st_unc = np.zeros(maxdepth, dtype=np.uint64)
    st_allowed = np.zeros(maxdepth, dtype=np.uint64)
    st_cursor = np.zeros(maxdepth, dtype=np.int64)
    st_size = np.zeros(maxdepth, dtype=np.int64)
    st_restore = np.zeros(maxdepth, dtype=np.int64)
    found_count = 0

    unc0 = full & ~U1
    st_unc[0] = unc0
    st_allowed[0] = unc0 & ~adj[0]
    st_cursor[0] = -1
    st_size[0] = 1
    st_restore[0] = 0
    sp = 1

    while sp > 0:
        f = sp - 1
        if st_cursor[f] == -1:
            st_cursor[f] = 0
            s = st_size[f]
            if s <= n and needed[s] > 0:
                unc = st_unc[f]
                if unc == U0:
                    found_count += 1
                    if found_count >= limit:
                        return found_count
                else:
                    needed[s] -= 1
                    v = 0
                    while (unc >> np.uint64(v)) & U1 == U0:
                        v += 1
                    bit = U1 << np.uint64(v)
                    unc2 = unc & ~bit
                    st_unc[sp] = unc2
                    st_allowed[sp] = unc2 & ~adj[v] & ~(bit | (bit - U1))
                    st_cursor[sp] = -1
                    st_size[sp] = 1
                    st_restore[sp] = s
                    sp += 1
            continue
        size = st_size[f]
        can_grow = False
        for s2 in range(size + 1, n + 1):
            if needed[s2] > 0:
                can_grow = True
                break
        if not can_grow:
            sp -= 1
            if st_restore[f] > 0:
                needed[st_restore[f]] += 1
            continue
        allowed = st_allowed[f]
        v = st_cursor[f]
        found = -1
        while v < n:
            if (allowed >> np.uint64(v)) & U1 == U1:
                found = v
                break
            v += 1
        if found == -1:
            sp -= 1
            if st_restore[f] > 0:
                needed[st_restore[f]] += 1
            continue
        st_cursor[f] = found + 1
        bit = U1 << np.uint64(found)
        st_unc[sp] = st_unc[f] & ~bit
        st_allowed[sp] = allowed & ~adj[found] & ~(bit | (bit - U1))
        st_cursor[sp] = -1
        st_size[sp] = st_size[f] + 1
        st_restore[sp] = 0
        sp += 1
    return found_count
