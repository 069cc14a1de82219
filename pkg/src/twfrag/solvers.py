"""Problem definitions and exact solvers over tree decompositions.

Three dynamic programs (independent set, scattered set, induced forest)
share one nice-decomposition skeleton; the fixed-pattern matching problem
gets a small exact packing search instead, which is enough to exercise the
near-monotone path of the scheme at desk scale.

Every solver supports restriction to an allowed vertex set: the output is
a maximum-weight admissible subset of ``allowed``, while disallowed
vertices still shape distances and cycles.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from .decompose import TreeDecomposition, validate_decomposition
from .errors import InputError, ResourceRefusal
from .graph import OVER, Graph, VertexSet, all_pairs_truncated, truncated_bfs
from .niceform import NiceNode, nice_nodes


@dataclass
class SolveResult:
    chosen: VertexSet
    weight: int
    table_stats: dict = field(default_factory=dict)


def _better(w1: int, c1: frozenset, w2: int, c2: frozenset) -> bool:
    if w1 != w2:
        return w1 > w2
    return tuple(sorted(c1)) < tuple(sorted(c2))


def _put(states: dict, key, weight: int, chosen: frozenset):
    cur = states.get(key)
    if cur is None or _better(weight, chosen, cur[0], cur[1]):
        states[key] = (weight, chosen)


def _check_td(g: Graph, td: TreeDecomposition):
    rep = validate_decomposition(g, td)
    if not rep.ok:
        raise InputError("invalid tree decomposition: " + "; ".join(rep.violations[:3]))


def _run_dp(nodes: List[NiceNode], handler) -> Tuple[int, frozenset, int]:
    table: List[Optional[dict]] = [None] * len(nodes)
    max_states = 0
    for idx, node in enumerate(nodes):
        if node.kind == "leaf":
            st = handler.leaf()
        elif node.kind == "intro":
            st = handler.intro(node, table[node.left])
            table[node.left] = None
        elif node.kind == "forget":
            st = handler.forget(node, table[node.left])
            table[node.left] = None
        else:
            st = handler.join(node, table[node.left], table[node.right])
            table[node.left] = None
            table[node.right] = None
        table[idx] = st
        if len(st) > max_states:
            max_states = len(st)
    root = table[-1]
    if not root:
        return 0, frozenset(), max_states
    best = None
    for key, (w, chosen) in root.items():
        if best is None or _better(w, chosen, best[0], best[1]):
            best = (w, chosen)
    return best[0], best[1], max_states


# ---------------------------------------------------------------------------
# maximum-weight independent set
# ---------------------------------------------------------------------------

class _MisHandler:
    def __init__(self, g: Graph, weights, allowed_mask):
        self.g = g
        self.w = weights
        self.allowed = allowed_mask

    def leaf(self):
        return {frozenset(): (0, frozenset())}

    def intro(self, node, states):
        v = node.v
        nbrs = set(int(u) for u in self.g.neighbors(v))
        out: dict = {}
        can_take = bool(self.allowed[v])
        wv = int(self.w[v])
        for sel, (wt, chosen) in states.items():
            _put(out, sel, wt, chosen)
            if can_take and not (sel & nbrs):
                _put(out, sel | {v}, wt + wv, chosen | {v})
        return out

    def forget(self, node, states):
        v = node.v
        out: dict = {}
        for sel, (wt, chosen) in states.items():
            _put(out, sel - {v}, wt, chosen)
        return out

    def join(self, node, left, right):
        sel_weight = {}
        out: dict = {}
        for sel, (wl, cl) in left.items():
            other = right.get(sel)
            if other is None:
                continue
            wr, cr = other
            if sel not in sel_weight:
                sel_weight[sel] = sum(int(self.w[v]) for v in sel)
            _put(out, sel, wl + wr - sel_weight[sel], cl | cr)
        return out


def solve_mis(g: Graph, td: TreeDecomposition, weights=None, allowed: VertexSet = None) -> SolveResult:
    """Maximum-weight independent subset of ``allowed``."""
    _check_td(g, td)
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    mask = allowed.to_mask() if allowed is not None else np.ones(g.n, dtype=bool)
    nodes = nice_nodes(td)
    weight, chosen, max_states = _run_dp(nodes, _MisHandler(g, w, mask))
    return SolveResult(VertexSet(g.n, chosen), weight,
                       {"bags": td.bag_count, "nice_nodes": len(nodes), "max_states": max_states})


# ---------------------------------------------------------------------------
# maximum-weight scattered set (pairwise distance >= r)
# ---------------------------------------------------------------------------

class _ScatteredHandler:
    """States carry exact processed-graph information: which bag vertices
    are chosen, capped pairwise distances between bag vertices through the
    processed part, and for every still-relevant chosen-but-forgotten vertex
    its capped distance vector to the bag.  All admissibility checks compare
    exact path lengths, so the DP is neither optimistic nor conservative."""

    def __init__(self, g: Graph, weights, allowed_mask, r: int):
        self.g = g
        self.w = weights
        self.allowed = allowed_mask
        self.r = r

    def leaf(self):
        key = (frozenset(), (), ())
        return {key: (0, frozenset())}

    # -- helpers ----------------------------------------------------------

    def _ok(self, bag, sel, mat, actives) -> bool:
        r = self.r
        pos = {u: i for i, u in enumerate(bag)}
        sl = sorted(sel)
        for i in range(len(sl)):
            for j in range(i + 1, len(sl)):
                if mat[pos[sl[i]]][pos[sl[j]]] < r:
                    return False
        for vec, _cnt in actives:
            for s in sl:
                if vec[pos[s]] < r:
                    return False
        for i in range(len(actives)):
            v1, c1 = actives[i]
            if c1 >= 2 and v1 and min(2 * x for x in v1) < r:
                return False
            for j in range(i + 1, len(actives)):
                v2 = actives[j][0]
                if v1 and min(a + b for a, b in zip(v1, v2)) < r:
                    return False
        return True

    def _canon(self, bag, sel, mat, vec_counts: dict):
        r = self.r
        live = {}
        for vec, cnt in vec_counts.items():
            if vec and min(vec) < r:
                live[vec] = min(2, live.get(vec, 0) + cnt)
        actives = tuple(sorted(live.items()))
        k = len(bag)
        flat = tuple(mat[i][j] for i in range(k) for j in range(i + 1, k))
        return (frozenset(sel), flat, actives)

    @staticmethod
    def _unflat(bag, flat):
        k = len(bag)
        mat = [[0] * k for _ in range(k)]
        it = iter(flat)
        for i in range(k):
            for j in range(i + 1, k):
                d = next(it)
                mat[i][j] = d
                mat[j][i] = d
        return mat

    # -- transitions ------------------------------------------------------

    def intro(self, node, states):
        v = node.v
        r = self.r
        bag = node.bag
        old_bag = tuple(u for u in bag if u != v)
        vpos = bag.index(v)
        nbrs = set(int(u) for u in self.g.neighbors(v))
        can_take = bool(self.allowed[v])
        wv = int(self.w[v])
        out: dict = {}
        k_old = len(old_bag)
        for (sel, flat, actives), (wt, chosen) in states.items():
            m_old = self._unflat(old_bag, flat)
            # distances from v through the processed graph: first step must
            # use one of v's edges into the old bag
            rowv = [r] * k_old
            for i, u in enumerate(old_bag):
                best = 1 if u in nbrs else r
                for jj, x in enumerate(old_bag):
                    if x in nbrs:
                        cand = 1 + (0 if jj == i else m_old[jj][i])
                        if cand < best:
                            best = cand
                rowv[i] = min(best, r)
            # close old pairs through v
            for i in range(k_old):
                for j in range(i + 1, k_old):
                    cand = rowv[i] + rowv[j]
                    if cand < m_old[i][j]:
                        m_old[i][j] = cand
                        m_old[j][i] = cand
            # embed into new-bag matrix
            k_new = len(bag)
            mat = [[0] * k_new for _ in range(k_new)]
            old_pos = [i for i, u in enumerate(bag) if u != v]
            for a in range(k_old):
                for b in range(k_old):
                    mat[old_pos[a]][old_pos[b]] = m_old[a][b]
            for a in range(k_old):
                mat[old_pos[a]][vpos] = rowv[a]
                mat[vpos][old_pos[a]] = rowv[a]
            # update active vectors
            new_counts: dict = {}
            for vec, cnt in actives:
                dv = r
                for i, u in enumerate(old_bag):
                    if u in nbrs:
                        cand = vec[i] + 1
                        if cand < dv:
                            dv = cand
                nv = [0] * k_new
                for a in range(k_old):
                    nv[old_pos[a]] = min(vec[a], dv + rowv[a], r)
                nv[vpos] = dv
                tv = tuple(nv)
                new_counts[tv] = min(2, new_counts.get(tv, 0) + cnt)
            merged = tuple(sorted(new_counts.items()))

            for take in (False, True):
                if take and not can_take:
                    continue
                nsel = set(sel)
                if take:
                    nsel.add(v)
                if not self._ok(bag, nsel, mat, merged):
                    continue
                key = self._canon(bag, nsel, mat, dict(merged))
                if take:
                    _put(out, key, wt + wv, chosen | {v})
                else:
                    _put(out, key, wt, chosen)
        return out

    def forget(self, node, states):
        v = node.v
        r = self.r
        bag = node.bag
        old_bag = tuple(sorted(set(bag) | {v}))
        vpos = old_bag.index(v)
        keep = [i for i, u in enumerate(old_bag) if u != v]
        out: dict = {}
        for (sel, flat, actives), (wt, chosen) in states.items():
            m_old = self._unflat(old_bag, flat)
            mat = [[m_old[a][b] for b in keep] for a in keep]
            counts: dict = {}
            for vec, cnt in actives:
                nv = tuple(vec[i] for i in keep)
                counts[nv] = min(2, counts.get(nv, 0) + cnt)
            if v in sel:
                nv = tuple(min(m_old[vpos][i], r) for i in keep)
                counts[nv] = min(2, counts.get(nv, 0) + 1)
            key = self._canon(bag, sel - {v}, mat, counts)
            _put(out, key, wt, chosen)
        return out

    def join(self, node, left, right):
        r = self.r
        bag = node.bag
        k = len(bag)
        sel_weight = {}
        by_sel: dict = {}
        for key, val in right.items():
            by_sel.setdefault(key[0], []).append((key, val))
        out: dict = {}
        for (sel, flat_l, act_l), (wl, cl) in left.items():
            if sel not in by_sel:
                continue
            if sel not in sel_weight:
                sel_weight[sel] = sum(int(self.w[v]) for v in sel)
            for (key_r, (wr, cr)) in by_sel[sel]:
                _sel, flat_r, act_r = key_r
                ml = self._unflat(bag, flat_l)
                mr = self._unflat(bag, flat_r)
                mat = [[min(ml[a][b], mr[a][b]) for b in range(k)] for a in range(k)]
                for mid in range(k):
                    rowm = mat[mid]
                    for a in range(k):
                        da = mat[a][mid]
                        if da >= r:
                            continue
                        rowa = mat[a]
                        for b in range(a + 1, k):
                            cand = da + rowm[b]
                            if cand < rowa[b]:
                                rowa[b] = cand
                                mat[b][a] = cand
                counts: dict = {}
                for vec, cnt in list(act_l) + list(act_r):
                    nv = list(vec)
                    for a in range(k):
                        base = nv[a]
                        for b in range(k):
                            cand = nv[b] + mat[b][a]
                            if cand < base:
                                base = cand
                        nv[a] = min(base, r)
                    tv = tuple(nv)
                    counts[tv] = min(2, counts.get(tv, 0) + cnt)
                merged = tuple(sorted(counts.items()))
                if not self._ok(bag, sel, mat, merged):
                    continue
                key = self._canon(bag, sel, mat, dict(merged))
                _put(out, key, wl + wr - sel_weight[sel], cl | cr)
        return out


def solve_scattered(g: Graph, td: TreeDecomposition, weights=None,
                    allowed: VertexSet = None, r: int = 2) -> SolveResult:
    """Maximum-weight subset of ``allowed`` with pairwise distance >= r in g."""
    if r < 1:
        raise InputError("r must be positive")
    _check_td(g, td)
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    mask = allowed.to_mask() if allowed is not None else np.ones(g.n, dtype=bool)
    if r == 1:
        chosen = frozenset(np.nonzero(mask)[0].tolist())
        weight = int(sum(int(w[v]) for v in chosen))
        return SolveResult(VertexSet(g.n, chosen), weight,
                           {"bags": td.bag_count, "nice_nodes": 0, "max_states": 1})
    nodes = nice_nodes(td)
    weight, chosen, max_states = _run_dp(nodes, _ScatteredHandler(g, w, mask, r))
    return SolveResult(VertexSet(g.n, chosen), weight,
                       {"bags": td.bag_count, "nice_nodes": len(nodes), "max_states": max_states})


# ---------------------------------------------------------------------------
# maximum-weight induced forest
# ---------------------------------------------------------------------------

class _ForestHandler:
    """Partition states track connectivity of the chosen set through edges
    accounted at the forget of their first-forgotten endpoint, so joins can
    merge the two sides' connectivity with plain cycle detection."""

    def __init__(self, g: Graph, weights, allowed_mask):
        self.g = g
        self.w = weights
        self.allowed = allowed_mask

    @staticmethod
    def _canon(blocks) -> tuple:
        return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda t: t[0]))

    def leaf(self):
        return {(frozenset(), ()): (0, frozenset())}

    def intro(self, node, states):
        v = node.v
        can_take = bool(self.allowed[v])
        wv = int(self.w[v])
        out: dict = {}
        for (sel, part), (wt, chosen) in states.items():
            _put(out, (sel, part), wt, chosen)
            if can_take:
                nb = self._canon(list(part) + [(v,)])
                _put(out, (sel | {v}, nb), wt + wv, chosen | {v})
        return out

    def forget(self, node, states):
        v = node.v
        out: dict = {}
        for (sel, part), (wt, chosen) in states.items():
            if v not in sel:
                _put(out, (sel, part), wt, chosen)
                continue
            nbrs_sel = [u for u in sorted(sel) if u != v and self.g.has_edge(v, u)]
            blocks = [set(b) for b in part]
            bi = next(i for i, b in enumerate(blocks) if v in b)
            dead = False
            for u in nbrs_sel:
                if u in blocks[bi]:
                    dead = True  # second connection into v's block: a cycle
                    break
                uj = next(i for i, b in enumerate(blocks) if u in b)
                blocks[bi] |= blocks[uj]
                blocks[uj] = set()
            if dead:
                continue
            blocks[bi].discard(v)
            _put(out, (sel - {v}, self._canon(blocks)), wt, chosen)
        return out

    def join(self, node, left, right):
        sel_weight = {}
        by_sel: dict = {}
        for key, val in right.items():
            by_sel.setdefault(key[0], []).append((key, val))
        out: dict = {}
        for (sel, part_l), (wl, cl) in left.items():
            if sel not in by_sel:
                continue
            if sel not in sel_weight:
                sel_weight[sel] = sum(int(self.w[v]) for v in sel)
            for ((_sel, part_r), (wr, cr)) in by_sel[sel]:
                parent = {x: x for x in sel}

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                dead = False
                for blocks, detect in ((part_l, False), (part_r, True)):
                    for b in blocks:
                        base = b[0]
                        for x in b[1:]:
                            ra, rb = find(base), find(x)
                            if ra == rb:
                                if detect:
                                    dead = True
                                    break
                            else:
                                parent[rb] = ra
                        if dead:
                            break
                    if dead:
                        break
                if dead:
                    continue
                groups: dict = {}
                for x in sel:
                    groups.setdefault(find(x), set()).add(x)
                key = (sel, self._canon(groups.values()))
                _put(out, key, wl + wr - sel_weight[sel], cl | cr)
        return out


def solve_induced_forest(g: Graph, td: TreeDecomposition, weights=None,
                         allowed: VertexSet = None) -> SolveResult:
    """Maximum-weight subset of ``allowed`` inducing an acyclic subgraph."""
    _check_td(g, td)
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    mask = allowed.to_mask() if allowed is not None else np.ones(g.n, dtype=bool)
    nodes = nice_nodes(td)
    weight, chosen, max_states = _run_dp(nodes, _ForestHandler(g, w, mask))
    return SolveResult(VertexSet(g.n, chosen), weight,
                       {"bags": td.bag_count, "nice_nodes": len(nodes), "max_states": max_states})


# ---------------------------------------------------------------------------
# fixed-pattern matching with scattered copies (exact, desk scale)
# ---------------------------------------------------------------------------

PATTERN_SIZES = {"k2": 2, "p3": 3, "k3": 3}
FRMATCH_LIMIT = 18


def enumerate_copies(g: Graph, pattern: str, allowed: VertexSet = None) -> List[Tuple[int, ...]]:
    """Vertex sets inside ``allowed`` spanning a subgraph copy of the pattern."""
    if pattern not in PATTERN_SIZES:
        raise InputError(f"unknown pattern {pattern!r}; choose one of {sorted(PATTERN_SIZES)}")
    ok = allowed.to_mask() if allowed is not None else np.ones(g.n, dtype=bool)
    found = set()
    if pattern == "k2":
        for u, v in g.edges():
            if ok[u] and ok[v]:
                found.add((u, v))
    elif pattern == "p3":
        for b in range(g.n):
            if not ok[b]:
                continue
            row = [int(u) for u in g.neighbors(b) if ok[u]]
            for i in range(len(row)):
                for j in range(i + 1, len(row)):
                    found.add(tuple(sorted((row[i], b, row[j]))))
    else:  # k3
        for u, v in g.edges():
            if not (ok[u] and ok[v]):
                continue
            common = set(int(x) for x in g.neighbors(u)) & set(int(x) for x in g.neighbors(v))
            for x in common:
                if ok[x] and x > v:
                    found.add((u, v, x))
    return sorted(found)


def _cross_ok(copy1, copy2, dist, r) -> bool:
    for p in copy1:
        for q in copy2:
            d = dist[p, q]
            if d != OVER and d < r:
                return False
    return True


def solve_fr_matching_bruteforce(g: Graph, weights=None, allowed: VertexSet = None,
                                 pattern: str = "k2", r: int = 2,
                                 limit: int = FRMATCH_LIMIT) -> SolveResult:
    """Exact optimum over packings of vertex-disjoint pattern copies whose
    cross-copy distance in g is at least r.  Enumeration only; refuses
    instances above ``limit`` vertices."""
    if g.n > limit:
        raise ResourceRefusal(f"pattern matching enumeration capped at {limit} vertices, got {g.n}")
    if r < 1:
        raise InputError("r must be positive")
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    copies = enumerate_copies(g, pattern, allowed)
    dist = all_pairs_truncated(g, r) if g.n else np.zeros((0, 0), dtype=np.int64)
    nc = len(copies)
    compat = [[False] * nc for _ in range(nc)]
    for i in range(nc):
        for j in range(i + 1, nc):
            if not (set(copies[i]) & set(copies[j])) and _cross_ok(copies[i], copies[j], dist, r):
                compat[i][j] = compat[j][i] = True
    cw = [sum(int(w[v]) for v in c) for c in copies]
    suffix = [0] * (nc + 1)
    for i in range(nc - 1, -1, -1):
        suffix[i] = suffix[i + 1] + max(cw[i], 0)

    best = [0, frozenset()]

    def consider(weight, chosen_vertices):
        if _better(weight, chosen_vertices, best[0], best[1]):
            best[0] = weight
            best[1] = chosen_vertices

    def dfs(idx, picked, weight, vertices):
        consider(weight, vertices)
        if idx == nc or weight + suffix[idx] < best[0]:
            return
        # take idx if compatible with everything picked
        if all(compat[idx][p] for p in picked):
            dfs(idx + 1, picked + [idx], weight + cw[idx], vertices | set(copies[idx]))
        dfs(idx + 1, picked, weight, vertices)

    dfs(0, [], 0, frozenset())
    return SolveResult(VertexSet(g.n, best[1]), best[0],
                       {"copies": nc, "pattern": pattern, "r": r})


def find_packing(g: Graph, members: Iterable[int], pattern: str, r: int) -> Optional[List[Tuple[int, ...]]]:
    """A partition of ``members`` into pattern copies with pairwise cross
    distance >= r, or None.  Deterministic first solution."""
    target = set(int(v) for v in members)
    if not target:
        return []
    inside = VertexSet(g.n, target)
    copies = [c for c in enumerate_copies(g, pattern, inside)]
    dist = all_pairs_truncated(g, r)
    by_vertex: Dict[int, List[int]] = {v: [] for v in target}
    for i, c in enumerate(copies):
        for v in c:
            by_vertex[v].append(i)

    def rec(uncovered, picked):
        if not uncovered:
            return list(picked)
        v = min(uncovered)
        for i in by_vertex.get(v, ()):
            c = set(copies[i])
            if not (c <= uncovered):
                continue
            if all(_cross_ok(copies[i], copies[p], dist, r) for p in picked):
                res = rec(uncovered - c, picked + [i])
                if res is not None:
                    return res
        return None

    sol = rec(frozenset(target), [])
    if sol is None:
        return None
    return [copies[i] for i in sol]


def witness_system_monotone(g: Graph, a: Iterable[int]) -> Dict[int, frozenset]:
    """Singleton witnesses: removing Z removes exactly Z."""
    return {int(v): frozenset({int(v)}) for v in a}


def witness_system_frmatching(g: Graph, a: Iterable[int],
                              packing: List[Tuple[int, ...]]) -> Dict[int, frozenset]:
    """Witness of each vertex is its whole copy, so removals delete whole
    copies and the survivors stay packable."""
    members = set(int(v) for v in a)
    seen = set()
    for copy in packing:
        cs = set(copy)
        if cs & seen:
            raise InputError("packing copies are not disjoint")
        seen |= cs
    if seen != members:
        raise InputError("packing does not partition the admissible set")
    out: Dict[int, frozenset] = {}
    for copy in packing:
        fz = frozenset(int(v) for v in copy)
        for v in fz:
            out[v] = fz
    return out


# ---------------------------------------------------------------------------
# problem definitions
# ---------------------------------------------------------------------------

@dataclass
class ProblemDef:
    name: str
    r: int
    c: int
    admissible: Callable[[Graph, Iterable[int]], bool]
    solve: Callable[[Graph, TreeDecomposition, object, VertexSet], SolveResult]
    witness_system: Callable[[Graph, Iterable[int]], Dict[int, frozenset]]


def _admissible_mis(g: Graph, xs: Iterable[int]) -> bool:
    s = set(int(v) for v in xs)
    for v in s:
        for u in g.neighbors(v):
            if int(u) in s and int(u) > v:
                return False
    return True


def _admissible_scattered(g: Graph, xs: Iterable[int], r: int) -> bool:
    s = sorted(set(int(v) for v in xs))
    if len(s) <= 1:
        return True
    for i, v in enumerate(s):
        d = truncated_bfs(g, v, r)
        for u in s[i + 1:]:
            if d[u] != OVER and d[u] < r:
                return False
    return True


def _admissible_forest(g: Graph, xs: Iterable[int]) -> bool:
    s = set(int(v) for v in xs)
    parent = {v: v for v in s}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in sorted(s):
        for u in g.neighbors(v):
            u = int(u)
            if u in s and u > v:
                ra, rb = find(v), find(u)
                if ra == rb:
                    return False
                parent[rb] = ra
    return True


def mis_problem() -> ProblemDef:
    return ProblemDef(
        name="mis", r=1, c=1,
        admissible=_admissible_mis,
        solve=lambda g, td, w, allowed: solve_mis(g, td, w, allowed),
        witness_system=witness_system_monotone,
    )


def ris_problem(r: int) -> ProblemDef:
    if r < 1:
        raise InputError("r must be positive")
    return ProblemDef(
        name=f"ris{r}", r=r, c=1,
        admissible=lambda g, xs, _r=r: _admissible_scattered(g, xs, _r),
        solve=lambda g, td, w, allowed, _r=r: solve_scattered(g, td, w, allowed, _r),
        witness_system=witness_system_monotone,
    )


def forest_problem() -> ProblemDef:
    # Acyclicity of the chosen induced subgraph is adjacency information,
    # so distance bound 1 suffices for the deletion argument.
    return ProblemDef(
        name="forest", r=1, c=1,
        admissible=_admissible_forest,
        solve=lambda g, td, w, allowed: solve_induced_forest(g, td, w, allowed),
        witness_system=witness_system_monotone,
    )


def frmatch_problem(pattern: str = "k2", r: int = 2, limit: int = FRMATCH_LIMIT) -> ProblemDef:
    if pattern not in PATTERN_SIZES:
        raise InputError(f"unknown pattern {pattern!r}")

    def admissible(g, xs, _p=pattern, _r=r):
        return find_packing(g, xs, _p, _r) is not None

    def witness(g, a, _p=pattern, _r=r):
        packing = find_packing(g, a, _p, _r)
        if packing is None:
            raise InputError("set is not admissible: no valid packing")
        return witness_system_frmatching(g, a, packing)

    return ProblemDef(
        name=f"frmatch-{pattern}-r{r}", r=r, c=PATTERN_SIZES[pattern],
        admissible=admissible,
        solve=lambda g, td, w, allowed, _p=pattern, _r=r, _l=limit:
            solve_fr_matching_bruteforce(g, w, allowed, _p, _r, _l),
        witness_system=witness,
    )


def problem_by_name(name: str, r: int = None, pattern: str = "k2") -> ProblemDef:
    """CLI problem registry: mis | ris | forest | frmatch."""
    if name == "mis":
        return mis_problem()
    if name == "ris":
        return ris_problem(2 if r is None else r)
    if name == "forest":
        return forest_problem()
    if name == "frmatch":
        return frmatch_problem(pattern, 2 if r is None else r)
    raise InputError(f"unknown problem {name!r}; choose mis, ris, forest or frmatch")
