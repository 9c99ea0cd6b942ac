"""Bipartite matching, Hall deficiency and skipless path covers of layered Hasse graphs.

One Hopcroft-Karp engine serves the matching number of a layer against its
shadow, Dilworth decompositions (through the comparability split graph) and
the Hall witness. ``min_path_cover`` is a min-cost flow on the vertex-split
Hasse diagram.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleCoverError, PreconditionError
from .lattice import Family, canonical_key, popcount, shadow_words

UNMATCHED = -1


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.left_count:
            raise PreconditionError("adjacency must list every left vertex")
        for u, nbrs in enumerate(self.adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise PreconditionError(f"duplicate neighbour of left vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.right_count:
                    raise PreconditionError(f"right index {v} out of range")

    @classmethod
    def from_lists(cls, left_count, right_count, adjacency) -> "BipartiteGraph":
        return cls(left_count, right_count, tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def is_valid_for(self, graph: BipartiteGraph) -> bool:
        lefts = [u for u, _ in self.pairs]
        rights = [v for _, v in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            return False
        return all(v in graph.adjacency[u] for u, v in self.pairs)


def hopcroft_karp(adj: Sequence[Sequence[int]], right_count: int) -> tuple[list[int], list[int]]:
    """Maximum matching; returns (match_left, match_right) with -1 for free vertices.

    Left vertices and their adjacency lists are scanned in the given order, so
    the result is a deterministic function of the input.
    """
    n_left = len(adj)
    match_l = [UNMATCHED] * n_left
    match_r = [UNMATCHED] * right_count
    INF = n_left + 1

    # cheap greedy start
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] == UNMATCHED:
                match_l[u] = v
                match_r[v] = u
                break

    while True:
        dist = [INF] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == UNMATCHED:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        pointer = [0] * n_left
        for root in range(n_left):
            if match_l[root] != UNMATCHED:
                continue
            # iterative layered DFS
            stack = [root]
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                advanced = False
                while pointer[u] < len(nbrs):
                    v = nbrs[pointer[u]]
                    w = match_r[v]
                    if w == UNMATCHED:
                        # augment along the stack
                        for x in reversed(stack):
                            vx = adj[x][pointer[x]]
                            prev = match_l[x]
                            match_l[x] = vx
                            match_r[vx] = x
                            if prev == UNMATCHED:
                                break
                        stack = []
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                    pointer[u] += 1
                if not advanced:
                    dist[u] = INF
                    stack.pop()
                    if stack:
                        pointer[stack[-1]] += 1
    return match_l, match_r


def alternating_reach(adj, match_l, match_r) -> tuple[set[int], set[int]]:
    """Vertices reachable from free left vertices along alternating paths."""
    zl, zr = set(), set()
    queue = deque(u for u in range(len(adj)) if match_l[u] == UNMATCHED)
    zl.update(queue)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in zr:
                continue
            zr.add(v)
            w = match_r[v]
            if w != UNMATCHED and w not in zl:
                zl.add(w)
                queue.append(w)
    return zl, zr


def max_matching(graph: BipartiteGraph) -> Matching:
    match_l, _ = hopcroft_karp(graph.adjacency, graph.right_count)
    return Matching(tuple((u, v) for u, v in enumerate(match_l) if v != UNMATCHED))


def hall_deficiency(graph: BipartiteGraph) -> tuple[int, frozenset[int]]:
    """``max |X| - |N(X)|`` over left subsets X, with a set attaining it.

    The witness is the left side of the König alternating-reach set; each of
    its neighbours is matched back into it, so only the free vertices count.
    """
    match_l, match_r = hopcroft_karp(graph.adjacency, graph.right_count)
    zl, zr = alternating_reach(graph.adjacency, match_l, match_r)
    return len(zl) - len(zr), frozenset(zl)


def shadow_graph(words: Sequence[int]) -> tuple[BipartiteGraph, list[int]]:
    """Containment graph between a single-layer family and its shadow."""
    below = sorted(shadow_words(words), key=canonical_key)
    index = {w: i for i, w in enumerate(below)}
    adj = []
    for w in words:
        nbrs = []
        rest = w
        while rest:
            low = rest & -rest
            nbrs.append(index[w ^ low])
            rest ^= low
        adj.append(tuple(sorted(nbrs)))
    return BipartiteGraph(len(words), len(below), tuple(adj)), below


def nu(family: Family) -> int:
    """Maximum matching size between a single layer family and its shadow."""
    words = family.words
    if not words:
        raise PreconditionError("nu needs a nonempty family")
    sizes = {popcount(w) for w in words}
    if len(sizes) != 1:
        raise PreconditionError(f"nu needs a single layer, got layers {sorted(sizes)}")
    if sizes.pop() == 0:
        raise PreconditionError("nu is undefined on layer 0")
    graph, _ = shadow_graph(words)
    match_l, _ = hopcroft_karp(graph.adjacency, graph.right_count)
    return sum(1 for v in match_l if v != UNMATCHED)


# -- comparability split graph -------------------------------------------------

def comparability_adjacency(words: Sequence[int]) -> list[list[int]]:
    """Edge i -> j iff words[i] is a proper subset of words[j]."""
    adj = []
    for i, a in enumerate(words):
        row = []
        for j, b in enumerate(words):
            if a != b and a & b == a:
                row.append(j)
        adj.append(row)
    return adj


def chains_from_matching(words, match_l, match_r) -> list[list[int]]:
    """Read off the chain partition encoded by a matching of the split graph."""
    chains = []
    for start in range(len(words)):
        if match_r[start] != UNMATCHED:
            continue
        chain = [start]
        cur = start
        while match_l[cur] != UNMATCHED:
            cur = match_l[cur]
            chain.append(cur)
        chains.append(chain)
    return chains


def max_antichain_indices(words, adj, match_l, match_r) -> list[int]:
    """Complement of the König vertex cover, as indices into ``words``."""
    zl, zr = alternating_reach(adj, match_l, match_r)
    # cover = (L \ Z) | (R & Z); antichain = elements with neither copy covered
    return [i for i in range(len(words)) if i in zl and i not in zr]


def max_antichain_words(words: Sequence[int]) -> list[int]:
    adj = comparability_adjacency(words)
    match_l, match_r = hopcroft_karp(adj, len(words))
    return [words[i] for i in max_antichain_indices(words, adj, match_l, match_r)]


# -- skipless path covers --------------------------------------------------------

@dataclass(frozen=True)
class LayeredCoverInstance:
    """Cover ``required`` with ``target_paths`` disjoint paths of the Hasse diagram.

    The node set is every subset of [n] whose size lies between the smallest
    and largest required size. Using a node outside ``required`` costs 1.
    """

    required: Family
    target_paths: int

    @property
    def n(self) -> int:
        return self.required.universe_size

    @property
    def layer_range(self) -> tuple[int, int]:
        sizes = [popcount(w) for w in self.required.words]
        return min(sizes), max(sizes)


class _Flow:
    __slots__ = ("to", "cap", "cost", "adj")

    def __init__(self, node_count):
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(node_count)]

    def add(self, u, v, cap, cost):
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)


def _layer_words(n: int, lo: int, hi: int) -> list[int]:
    from itertools import combinations

    out = []
    for t in range(lo, hi + 1):
        layer = sorted(sum(1 << (i - 1) for i in c) for c in combinations(range(1, n + 1), t))
        out.extend(layer)
    return out


def min_path_cover(inst: LayeredCoverInstance) -> list[tuple[int, ...]]:
    """Exactly ``target_paths`` disjoint skipless paths covering every required set.

    Among all such covers the number of non-required sets used is minimal.
    Paths are returned as tuples of words in increasing size, sorted by their
    first set. Raises InfeasibleCoverError when no cover exists.
    """
    required = inst.required
    m = inst.target_paths
    if not required.words:
        raise PreconditionError("required family must be nonempty")
    if m < 1:
        raise PreconditionError("target_paths must be positive")
    n = required.universe_size
    lo, hi = inst.layer_range
    verts = _layer_words(n, lo, hi)
    index = {w: i for i, w in enumerate(verts)}
    req = set(required.words)
    N = len(verts)
    if m > N:
        raise InfeasibleCoverError(
            f"{m} disjoint nonempty paths need at least {m} vertices, only {N} available",
            certificate=Family(n, verts),
        )
    big = N + 1
    S, T = 0, 1
    g = _Flow(2 + 2 * N)
    full = (1 << n) - 1
    for k, w in enumerate(verts):
        g.add(S, 2 + 2 * k, 1, 0)
    for k, w in enumerate(verts):
        vin, vout = 2 + 2 * k, 3 + 2 * k
        g.add(vin, vout, 1, -big if w in req else 1)
        if popcount(w) < hi:
            free = full & ~w
            ups = []
            while free:
                low = free & -free
                ups.append(w | low)
                free ^= low
            for u in sorted(ups):
                g.add(vout, 2 + 2 * index[u], 1, 0)
        g.add(vout, T, 1, 0)

    pot = _dag_potentials(g, N)
    sent = _successive_shortest_paths(g, pot, S, T, m)

    covered = {verts[k] for k in range(N) if g.cap[_split_arc(g, k)] == 0}
    if sent < m or not req <= covered:
        cert = Family(n, max_antichain_words(required.words))
        raise InfeasibleCoverError(
            f"cannot cover {len(req)} required sets with {m} disjoint skipless paths "
            f"(antichain of size {len(cert)} among them)",
            certificate=cert,
        )
    return _decompose(g, verts, S, T)


def _split_arc(g: _Flow, k: int) -> int:
    # first arc added at v_in is the split arc (the S arc is reverse-indexed there)
    vin = 2 + 2 * k
    for e in g.adj[vin]:
        if e % 2 == 0 and g.to[e] == vin + 1:
            return e
    raise AssertionError("split arc missing")


def _dag_potentials(g: _Flow, N: int) -> list[int]:
    """Shortest distances from the source; nodes are already in topological order."""
    INF = float("inf")
    dist = [INF] * len(g.adj)
    dist[0] = 0
    order = [0] + list(range(2, 2 + 2 * N)) + [1]
    for u in order:
        du = dist[u]
        if du == INF:
            continue
        for e in g.adj[u]:
            if e % 2 == 0 and g.cap[e] > 0:
                v = g.to[e]
                nd = du + g.cost[e]
                if nd < dist[v]:
                    dist[v] = nd
    return [d if d != INF else 0 for d in dist]


def _successive_shortest_paths(g: _Flow, pot: list[int], S: int, T: int, demand: int) -> int:
    to, cap, cost, adj = g.to, g.cap, g.cost, g.adj
    V = len(adj)
    sent = 0
    INF = float("inf")
    while sent < demand:
        dist = [INF] * V
        done = [False] * V
        dist[S] = 0
        heap = [(0, S)]
        while heap:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            if u == T:
                break
            pu = pot[u]
            for e in adj[u]:
                if cap[e] <= 0:
                    continue
                v = to[e]
                if done[v]:
                    continue
                nd = d + cost[e] + pu - pot[v]
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        if not done[T]:
            return sent
        dt = dist[T]
        for v in range(V):
            pot[v] += dist[v] if done[v] else dt

        # push as many unit paths as possible along zero reduced-cost arcs
        dead = [False] * V
        while sent < demand:
            path = _admissible_path(g, pot, S, T, dead)
            if path is None:
                break
            for e in path:
                cap[e] -= 1
                cap[e ^ 1] += 1
            sent += 1
    return sent


def _admissible_path(g: _Flow, pot, S, T, dead) -> list[int] | None:
    to, cap, cost, adj = g.to, g.cap, g.cost, g.adj
    on_path = {S}
    arcs: list[int] = []
    stack = [(S, 0)]
    while stack:
        u, i = stack[-1]
        if u == T:
            return arcs
        nbrs = adj[u]
        while i < len(nbrs):
            e = nbrs[i]
            i += 1
            v = to[e]
            if cap[e] > 0 and not dead[v] and v not in on_path and cost[e] + pot[u] - pot[v] == 0:
                stack[-1] = (u, i)
                stack.append((v, 0))
                arcs.append(e)
                on_path.add(v)
                break
        else:
            stack.pop()
            dead[u] = True
            on_path.discard(u)
            if arcs:
                arcs.pop()
    return None


def _decompose(g: _Flow, verts: list[int], S: int, T: int) -> list[tuple[int, ...]]:
    to, cap = g.to, g.cap
    paths = []
    for e in g.adj[S]:
        if e % 2 or cap[e] > 0:
            continue
        node = to[e]
        path = []
        while node != T:
            k = (node - 2) // 2
            path.append(verts[k])
            vout = node + 1
            nxt = None
            for f in g.adj[vout]:
                if f % 2 == 0 and cap[f] == 0:
                    nxt = to[f]
                    break
            node = nxt
        paths.append(tuple(path))
    paths.sort(key=lambda p: canonical_key(p[0]))
    return paths
