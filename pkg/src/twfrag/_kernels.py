"""Hot distance kernels over CSR arrays.

Every kernel exists twice: a loop version compiled with numba's ``@njit``
and a vectorized pure-numpy version.  The public names point at the numba
build unless the environment variable ``TWFRAG_NO_NUMBA=1`` is set (or
numba is missing), in which case the numpy path is used.  Both builds are
importable side by side so ``benchmarks/kernel_bench.py`` can compare them.

Distance encoding inside this module: reachable values are ``0..cap`` and
``cap + 1`` means "further than cap".  API layers translate ``cap + 1``
into the public ``OVER`` sentinel.
"""

import os

import numpy as np

_want_numba = os.environ.get("TWFRAG_NO_NUMBA", "0") != "1"
HAVE_NUMBA = False
if _want_numba:
    try:
        from numba import njit as _njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        HAVE_NUMBA = False

USING_NUMBA = _want_numba and HAVE_NUMBA


# ---------------------------------------------------------------------------
# numba loop implementations (plain python functions until wrapped below)
# ---------------------------------------------------------------------------

def _bfs_from_loop(indptr, indices, src, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, cap + 1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du >= cap:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] > du + 1:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
    return dist


def _bfs_multi_loop(indptr, indices, sources, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, cap + 1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for i in range(sources.shape[0]):
        s = sources[i]
        if dist[s] != 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du >= cap:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] > du + 1:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
    return dist


def _bfs_all_pairs_loop(indptr, indices, cap):
    n = indptr.shape[0] - 1
    out = np.full((n, n), cap + 1, dtype=np.int16)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        row = out[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u]
            if du >= cap:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if row[v] > du + 1:
                    row[v] = du + 1
                    queue[tail] = v
                    tail += 1
    return out


def _meet_all_pairs_loop(indptr, indices, cap):
    # indptr/indices describe directed out-edges.  Result[u, v] is the
    # smallest du + dv over apexes x with out-walks u->..->x, v->..->x,
    # capped at cap; cap + 1 when no meeting exists within the budget.
    n = indptr.shape[0] - 1
    outd = np.full((n, n), cap + 1, dtype=np.int16)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        row = outd[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u]
            if du >= cap:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if row[v] > du + 1:
                    row[v] = du + 1
                    queue[tail] = v
                    tail += 1
    res = np.full((n, n), cap + 1, dtype=np.int16)
    members = np.empty(n, dtype=np.int64)
    for x in range(n):
        cnt = 0
        for u in range(n):
            if outd[u, x] <= cap:
                members[cnt] = u
                cnt += 1
        for a in range(cnt):
            u = members[a]
            du = outd[u, x]
            for b in range(a, cnt):
                v = members[b]
                s = du + outd[v, x]
                if s <= cap:
                    if s < res[u, v]:
                        res[u, v] = s
                        res[v, u] = s
    return res


def _meet_pairs_loop(indptr, indices, us, vs, cap):
    n = indptr.shape[0] - 1
    k = us.shape[0]
    res = np.full(k, cap + 1, dtype=np.int32)
    dist_u = np.empty(n, dtype=np.int32)
    dist_v = np.empty(n, dtype=np.int32)
    stamp_u = np.full(n, -1, dtype=np.int64)
    stamp_v = np.full(n, -1, dtype=np.int64)
    ball_u = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for p in range(k):
        u = us[p]
        v = vs[p]
        # out-ball of u
        cnt_u = 0
        stamp_u[u] = p
        dist_u[u] = 0
        queue[0] = u
        ball_u[cnt_u] = u
        cnt_u += 1
        head = 0
        tail = 1
        while head < tail:
            a = queue[head]
            head += 1
            da = dist_u[a]
            if da >= cap:
                continue
            for j in range(indptr[a], indptr[a + 1]):
                b = indices[j]
                if stamp_u[b] != p:
                    stamp_u[b] = p
                    dist_u[b] = da + 1
                    queue[tail] = b
                    tail += 1
                    ball_u[cnt_u] = b
                    cnt_u += 1
        # out-ball of v
        stamp_v[v] = p
        dist_v[v] = 0
        queue[0] = v
        head = 0
        tail = 1
        best = cap + 1
        if stamp_u[v] == p:
            best = dist_u[v]
        while head < tail:
            a = queue[head]
            head += 1
            da = dist_v[a]
            if da >= cap:
                continue
            for j in range(indptr[a], indptr[a + 1]):
                b = indices[j]
                if stamp_v[b] != p:
                    stamp_v[b] = p
                    dist_v[b] = da + 1
                    queue[tail] = b
                    tail += 1
                    if stamp_u[b] == p:
                        s = dist_u[b] + da + 1
                        if s < best:
                            best = s
        res[p] = best if best <= cap else cap + 1
    return res


# ---------------------------------------------------------------------------
# pure numpy implementations
# ---------------------------------------------------------------------------

def _gather_neighbors(indptr, indices, frontier):
    """Concatenate the CSR rows of all frontier vertices."""
    starts = indptr[frontier]
    counts = indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    offsets = np.repeat(starts - np.concatenate(([0], np.cumsum(counts)[:-1])), counts)
    return indices[np.arange(total, dtype=np.int64) + offsets]


def _bfs_from_numpy(indptr, indices, src, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, cap + 1, dtype=np.int32)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    for level in range(1, cap + 1):
        nbrs = _gather_neighbors(indptr, indices, frontier)
        if nbrs.size == 0:
            break
        nbrs = np.unique(nbrs)
        fresh = nbrs[dist[nbrs] > level]
        if fresh.size == 0:
            break
        dist[fresh] = level
        frontier = fresh.astype(np.int64)
    return dist


def _bfs_multi_numpy(indptr, indices, sources, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, cap + 1, dtype=np.int32)
    if sources.size == 0:
        return dist
    frontier = np.unique(sources).astype(np.int64)
    dist[frontier] = 0
    for level in range(1, cap + 1):
        nbrs = _gather_neighbors(indptr, indices, frontier)
        if nbrs.size == 0:
            break
        nbrs = np.unique(nbrs)
        fresh = nbrs[dist[nbrs] > level]
        if fresh.size == 0:
            break
        dist[fresh] = level
        frontier = fresh.astype(np.int64)
    return dist


def _dense_adj(indptr, indices):
    # float32 so the reachability products below go through BLAS
    n = indptr.shape[0] - 1
    adj = np.zeros((n, n), dtype=np.float32)
    if indices.size:
        rows = np.repeat(np.arange(n), np.diff(indptr))
        adj[rows, indices] = 1.0
    return adj


def _bfs_all_pairs_numpy(indptr, indices, cap):
    n = indptr.shape[0] - 1
    dist = np.full((n, n), cap + 1, dtype=np.int16)
    if n == 0:
        return dist
    adj = _dense_adj(indptr, indices)
    reach = np.eye(n, dtype=np.float32)
    np.fill_diagonal(dist, 0)
    for level in range(1, cap + 1):
        reach = (reach @ adj + reach > 0).astype(np.float32)
        fresh = (reach > 0) & (dist > level)
        dist[fresh] = level
    return dist


def _meet_all_pairs_numpy(indptr, indices, cap):
    n = indptr.shape[0] - 1
    outd = _bfs_all_pairs_numpy(indptr, indices, cap)
    res = np.full((n, n), cap + 1, dtype=np.int16)
    for x in range(n):
        col = outd[:, x]
        members = np.nonzero(col <= cap)[0]
        if members.size == 0:
            continue
        d = col[members].astype(np.int16)
        sums = d[:, None] + d[None, :]
        np.minimum(sums, cap + 1, out=sums)
        block = res[np.ix_(members, members)]
        np.minimum(block, sums, out=block)
        res[np.ix_(members, members)] = block
    return res


def _out_dist_single(indptr, indices, src, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, cap + 1, dtype=np.int32)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    touched = [frontier]
    for level in range(1, cap + 1):
        nbrs = _gather_neighbors(indptr, indices, frontier)
        if nbrs.size == 0:
            break
        nbrs = np.unique(nbrs)
        fresh = nbrs[dist[nbrs] > level]
        if fresh.size == 0:
            break
        dist[fresh] = level
        frontier = fresh.astype(np.int64)
        touched.append(frontier)
    return dist, np.concatenate(touched)


def _meet_pairs_numpy(indptr, indices, us, vs, cap):
    k = us.shape[0]
    res = np.full(k, cap + 1, dtype=np.int32)
    for p in range(k):
        du, ball_u = _out_dist_single(indptr, indices, int(us[p]), cap)
        dv, _ = _out_dist_single(indptr, indices, int(vs[p]), cap)
        sums = du[ball_u] + dv[ball_u]
        best = int(sums.min()) if sums.size else cap + 1
        res[p] = best if best <= cap else cap + 1
    return res


# ---------------------------------------------------------------------------
# compile and select
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    _bfs_from_nb = _njit(cache=True)(_bfs_from_loop)
    _bfs_multi_nb = _njit(cache=True)(_bfs_multi_loop)
    _bfs_all_pairs_nb = _njit(cache=True)(_bfs_all_pairs_loop)
    _meet_all_pairs_nb = _njit(cache=True)(_meet_all_pairs_loop)
    _meet_pairs_nb = _njit(cache=True)(_meet_pairs_loop)
else:
    _bfs_from_nb = _bfs_from_loop
    _bfs_multi_nb = _bfs_multi_loop
    _bfs_all_pairs_nb = _bfs_all_pairs_loop
    _meet_all_pairs_nb = _meet_all_pairs_loop
    _meet_pairs_nb = _meet_pairs_loop

NUMBA_KERNELS = {
    "bfs_from": _bfs_from_nb,
    "bfs_multi": _bfs_multi_nb,
    "bfs_all_pairs": _bfs_all_pairs_nb,
    "meet_all_pairs": _meet_all_pairs_nb,
    "meet_pairs": _meet_pairs_nb,
}

NUMPY_KERNELS = {
    "bfs_from": _bfs_from_numpy,
    "bfs_multi": _bfs_multi_numpy,
    "bfs_all_pairs": _bfs_all_pairs_numpy,
    "meet_all_pairs": _meet_all_pairs_numpy,
    "meet_pairs": _meet_pairs_numpy,
}

_active = NUMBA_KERNELS if USING_NUMBA else NUMPY_KERNELS

bfs_from = _active["bfs_from"]
bfs_multi = _active["bfs_multi"]
bfs_all_pairs = _active["bfs_all_pairs"]
meet_all_pairs = _active["meet_all_pairs"]
meet_pairs = _active["meet_pairs"]
