"""Array kernels: suffix array, LCP, and suffix tree assembly.

All arrays are int32 unless noted. The text handed in is ``x$`` with the
sentinel already appended as the largest rank.
"""

import numpy as np
from numba import njit
from pydivsufsort import divsufsort


def suffix_array(s, upper=None):
    """Suffix array of an integer array with values in ``0..upper``, as int32."""
    s = np.ascontiguousarray(s)
    if s.size == 0:
        return np.empty(0, dtype=np.int32)
    if upper is None:
        upper = int(s.max())
    s = s.astype(np.uint8 if upper < 256 else np.int32, copy=False)
    return divsufsort(s).astype(np.int32, copy=False)


def _empty(n, dtype=np.int32):
    # numpy backs large arrays with huge pages where the kernel allows it,
    # which numba's own allocator does not; the random-access passes below
    # are bound by TLB misses once the arrays outgrow the cache
    return np.empty(n, dtype=dtype)


@njit(cache=True, nogil=True)
def _inverse(sa, isa):
    for k in range(sa.size):
        isa[sa[k]] = k


def inverse(sa):
    isa = _empty(sa.size)
    _inverse(sa, isa)
    return isa


@njit(cache=True, nogil=True)
def _lcp(s, sa, phi, lcp):
    n = s.size
    phi[sa[0]] = -1
    for k in range(1, n):
        phi[sa[k]] = sa[k - 1]
    h = 0
    for i in range(n):
        j = phi[i]
        if j == -1:
            h = 0
            phi[i] = 0
            continue
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        phi[i] = h
        if h > 0:
            h -= 1
    for k in range(n):
        lcp[k] = phi[sa[k]]


def lcp_array(s, sa):
    """``lcp[k]`` = longest common prefix of suffixes ``sa[k-1]`` and ``sa[k]``; ``lcp[0] = 0``.

    Uses the permuted LCP in text order, so the comparisons walk the text
    sequentially and only the two scatter passes touch memory at random.
    """
    lcp = _empty(s.size)
    if s.size:
        _lcp(s, sa, _empty(s.size), lcp)
    return lcp


# -- suffix tree from SA + LCP ----------------------------------------------


@njit(cache=True, nogil=True)
def _topology(sa, lcp, parent, depth, lb, rb, order, st_lcp, st_lb, st_id):
    N = sa.size
    for k in range(N):
        parent[k] = -1
        depth[k] = N - sa[k]
        lb[k] = k
        rb[k] = k

    no = 0
    root = N
    nxt = N + 1
    top = 0
    st_lcp[0] = 0
    st_lb[0] = 0
    st_id[0] = root
    parent[root] = root
    depth[root] = 0

    for k in range(1, N + 1):
        ell = lcp[k] if k < N else 0
        leaf = k - 1
        pending = -1
        if ell <= st_lcp[top]:
            parent[leaf] = st_id[top]
            order[no] = leaf
            no += 1
        else:
            pending = leaf
        start = k - 1
        last = -1
        while ell < st_lcp[top]:
            node = st_id[top]
            start = st_lb[top]
            rb[node] = k - 1
            top -= 1
            if ell <= st_lcp[top]:
                parent[node] = st_id[top]
                order[no] = node
                no += 1
            else:
                last = node
        if ell > st_lcp[top]:
            node = nxt
            nxt += 1
            depth[node] = ell
            lb[node] = start
            top += 1
            st_lcp[top] = ell
            st_lb[top] = start
            st_id[top] = node
            if pending != -1:
                parent[pending] = node
                order[no] = pending
                no += 1
            if last != -1:
                parent[last] = node
                order[no] = last
                no += 1
    rb[root] = N - 1
    lb[root] = 0
    return nxt, no


def build_topology(sa, lcp):
    """Bottom-up lcp-interval traversal.

    Leaves get ids ``0..N-1`` (leaf ``k`` is the suffix of rank ``k``);
    internal nodes follow, the root being id ``N``. Returns per-node
    parent, depth, lb, rb and the non-root nodes in the order their
    parent was assigned. A node gets its parent in the step that closes
    its interval, so siblings appear in that order left to right.
    """
    N = sa.size
    cap = 2 * N
    parent, depth, lb, rb, order = (_empty(cap) for _ in range(5))
    m, no = _topology(sa, lcp, parent, depth, lb, rb, order,
                      _empty(N + 1), _empty(N + 1), _empty(N + 1))
    return parent[:m], depth[:m], lb[:m], rb[:m], order[:no]


@njit(cache=True, nogil=True)
def _csr(parent, order, offsets, kids):
    m = parent.size
    for v in order:
        offsets[parent[v] + 1] += 1
    for i in range(m):
        offsets[i + 1] += offsets[i]
    # fill from the back so offsets end up untouched
    for j in range(order.size - 1, -1, -1):
        v = order[j]
        p = parent[v]
        offsets[p + 1] -= 1
        kids[offsets[p + 1]] = v
    # offsets[p + 1] now holds the start of p's block; shift back
    for i in range(m):
        offsets[i] = offsets[i + 1]
    offsets[m] = order.size


def children_csr(parent, order):
    """Child lists in letter order: one stable counting sort of ``order`` by parent."""
    m = parent.size
    offsets = np.zeros(m + 1, dtype=np.int32)
    kids = _empty(order.size)
    _csr(parent, order, offsets, kids)
    return offsets, kids


@njit(cache=True, nogil=True)
def _suffix_links(sa, isa, depth, lb, root, slink, qleaf, ecount, qcount, enter, queries,
                  at_depth):
    m = depth.size
    N = root
    for k in range(N):
        i = sa[k] + 1
        slink[k] = isa[i] if i < N else root
    slink[root] = root

    # internal nodes bucketed by first leaf; within a bucket, reverse
    # creation order is increasing depth
    first = N + 1
    for v in range(first, m):
        q = slink[lb[v]]
        qleaf[v - first] = q
        ecount[lb[v] + 1] += 1
        qcount[q + 1] += 1
    for i in range(N):
        ecount[i + 1] += ecount[i]
        qcount[i + 1] += qcount[i]
    for v in range(m - 1, N, -1):
        e = ecount[lb[v]]
        enter[e] = v
        ecount[lb[v]] = e + 1
        q = qleaf[v - first]
        queries[qcount[q]] = v
        qcount[q] += 1

    # the fill pass left each bucket start at the next bucket's start
    at_depth[0] = root
    e0 = 0
    q0 = 0
    for k in range(N):
        for e in range(e0, ecount[k]):
            w = enter[e]
            at_depth[depth[w]] = w
        e0 = ecount[k]
        for q in range(q0, qcount[k]):
            w = queries[q]
            slink[w] = at_depth[depth[w] - 1]
        q0 = qcount[k]


def suffix_links(sa, isa, depth, lb, root):
    """Suffix link of every node.

    Leaves link through the inverse suffix array (the "$" leaf to the
    root). For internal ``v`` labelled ``a.y`` the target is the ancestor
    at depth ``|y|`` of the leaf for suffix ``sa[lb[v]] + 1``. Sweeping
    leaves in rank order while registering each internal node at its
    first leaf keeps ``at_depth[d]`` on the current root path, so every
    query costs O(1).
    """
    m = depth.size
    N = root
    inner = m - N - 1
    slink = _empty(m)
    _suffix_links(sa, isa, depth, lb, root, slink, _empty(inner),
                  np.zeros(N + 1, dtype=np.int32), np.zeros(N + 1, dtype=np.int32),
                  _empty(inner), _empty(inner), _empty(N + 1))
    return slink


@njit(cache=True, nogil=True)
def _node_table(sa, parent, depth, lb, rb, slink, packed, starts):
    for v in range(parent.size):
        starts[v] = sa[lb[v]]
        packed[v, 0] = parent[v]
        packed[v, 1] = depth[v]
        packed[v, 2] = rb[v] - lb[v] + 1
        packed[v, 3] = slink[v]


def node_table(sa, parent, depth, lb, rb, slink):
    """Per-node rows (parent, depth, count, suffix link) and label start positions."""
    m = parent.size
    packed = _empty((m, 4))
    starts = _empty(m)
    _node_table(sa, parent, depth, lb, rb, slink, packed, starts)
    return packed, starts


@njit(cache=True, nogil=True)
def edge_letters(text, starts, parent, depth, kids):
    letters = np.empty(kids.size, dtype=np.int32)
    for j in range(kids.size):
        c = kids[j]
        letters[j] = text[starts[c] + depth[parent[c]]]
    return letters
