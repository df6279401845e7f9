"""Compiled core of the overabundant-word enumeration."""

import math

import numpy as np
from numba import njit

PASS_EXPLICIT = 0
PASS_IMPLICIT = 1


@njit(cache=True, nogil=True)
def _push(ints, reals, size, start, length, f_w, f_p, f_s, f_i, e, dev, which):
    if size == ints.shape[0]:
        grown = np.empty((2 * size, ints.shape[1]), dtype=ints.dtype)
        grown[:size] = ints
        ints = grown
        grown_r = np.empty((2 * size, 2), dtype=reals.dtype)
        grown_r[:size] = reals
        reals = grown_r
    ints[size, 0] = start
    ints[size, 1] = length
    ints[size, 2] = f_w
    ints[size, 3] = f_p
    ints[size, 4] = f_s
    ints[size, 5] = f_i
    ints[size, 6] = which
    reals[size, 0] = e
    reals[size, 1] = dev
    return ints, reals


@njit(cache=True, nogil=True)
def _dev(f_w, f_p, f_s, f_i):
    e = (np.int64(f_p) * np.int64(f_s)) / f_i
    return e, (f_w - e) / max(math.sqrt(e), 1.0)


@njit(cache=True, nogil=True)
def scan(node, start, offsets, kids, root, rho):
    """Report every word ``a.y.b`` with deviation >= rho, ``y`` an explicit node label.

    ``node`` packs (parent, depth, count, suffix link) per node so that a
    random visit touches a single cache line; ``start`` gives a text
    position where each node's path label occurs.

    For every edge ``(v, c)`` let ``u`` be the suffix link of ``v`` and
    ``z`` the suffix-link image of ``c``. Walking up from ``z`` to the
    child of ``u`` visits each explicit node that is the longest infix of
    a word whose longest proper prefix ends inside the edge; the node
    where the walk stops is Child(u, b), which scores ``L(v).b`` when
    ``L(v)`` itself is the prefix. The loops are split so that random
    node reads in one loop are independent of each other. Edges whose
    child occurs fewer than ``rho`` times are skipped outright, since
    ``dev <= f_w`` for every word.

    Returns ``(ints, reals, walk_steps)``: one row per reported word with
    columns (start, length, f_w, f_p, f_s, f_i, pass) and (expected, dev),
    plus the number of walk iterations taken.
    """
    N = root  # leaves are 0..N-1, root is N
    m = node.shape[0]
    parent = node[:, 0]
    depth = node[:, 1]
    count = node[:, 2]
    slink = node[:, 3]

    nc = offsets[m] - offsets[N]
    c_v = np.empty(nc, dtype=np.int32)
    c_y = np.empty(nc, dtype=np.int32)
    c_z = np.empty(nc, dtype=np.int32)
    nc = 0
    for v in range(N, m):
        dv = depth[v]
        for j in range(offsets[v], offsets[v + 1]):
            y = kids[j]
            # a leaf one letter below v hangs off the bare "$" edge
            if y < N and depth[y] == dv + 1:
                continue
            # every word scored from this edge occurs count[y] times, and
            # dev never exceeds the occurrence count
            if count[y] < rho:
                continue
            c_v[nc] = v
            c_y[nc] = y
            # for a leaf this is the leaf of the next suffix
            c_z[nc] = slink[y]
            nc += 1
    for k in range(nc):
        y = c_y[k]
        if y < N:
            z = c_z[k]
            pz = parent[z]
            # z's edge is the bare "$": its parent is the real locus
            if depth[z] == depth[pz] + 1:
                c_z[k] = pz

    ints = np.empty((64, 7), dtype=np.int64)
    reals = np.empty((64, 2), dtype=np.float64)
    size = 0
    steps = 0
    for k in range(nc):
        v = c_v[k]
        y = c_y[k]
        z = c_z[k]
        u = slink[v]
        f_w = count[y]
        # longest proper prefix implicit: it and w occur exactly as often as L(y)
        f_p = f_w
        f_s = count[z]
        pz = parent[z]
        while pz != u and z != root:
            steps += 1
            f_i = count[pz]
            e, dev = _dev(f_w, f_p, f_s, f_i)
            if dev >= rho:
                ints, reals = _push(ints, reals, size, start[y], depth[pz] + 2,
                                    f_w, f_p, f_s, f_i, e, dev, PASS_IMPLICIT)
                size += 1
            z = pz
            f_s = f_i
            pz = parent[z]
        # longest proper prefix explicit: w = L(v).b, z is now Child(u, b)
        if depth[v] > 1 and u != root:
            f_p = count[v]
            f_i = count[u]
            # f_i == f_p forces dev == 0
            if f_i > f_p:
                e, dev = _dev(f_w, f_p, f_s, f_i)
                if dev >= rho:
                    ints, reals = _push(ints, reals, size, start[y], depth[v] + 1,
                                        f_w, f_p, f_s, f_i, e, dev, PASS_EXPLICIT)
                    size += 1
    return ints[:size], reals[:size], steps
