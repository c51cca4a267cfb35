"""Integer max-flow and feasible circulations with lower bounds.

Networks here are tiny (a quotient plus a few auxiliary nodes), so a plain
Edmonds-Karp on adjacency lists is plenty.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence


@dataclass
class FlowNetwork:
    n: int
    head: list[int] = field(default_factory=list)
    cap: list[int] = field(default_factory=list)
    adj: list[list[int]] = field(init=False)

    def __post_init__(self):
        self.adj = [[] for _ in range(self.n)]

    def add_node(self) -> int:
        self.adj.append([])
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, cap: int) -> int:
        """Add ``u -> v`` with capacity ``cap``; returns the edge id."""
        e = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def flow_on(self, e: int) -> int:
        return self.cap[e ^ 1]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            parent = [-1] * self.n
            parent[s] = -2
            queue = deque([s])
            while queue and parent[t] == -1:
                u = queue.popleft()
                for e in self.adj[u]:
                    v = self.head[e]
                    if self.cap[e] > 0 and parent[v] == -1:
                        parent[v] = e
                        queue.append(v)
            if parent[t] == -1:
                return total
            push = None
            v = t
            while v != s:
                e = parent[v]
                push = self.cap[e] if push is None else min(push, self.cap[e])
                v = self.head[e ^ 1]
            v = t
            while v != s:
                e = parent[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.head[e ^ 1]
            total += push


def feasible_circulation(n: int, edges: Sequence[tuple[int, int, int, int]]) -> list[int] | None:
    """Integer circulation with ``lo <= f(e) <= hi`` on every ``(u, v, lo, hi)``.

    Returns one flow value per edge, or ``None`` when no circulation exists.
    """
    net = FlowNetwork(n + 2)
    s, t = n, n + 1
    excess = [0] * n
    ids = []
    for u, v, lo, hi in edges:
        if lo > hi:
            return None
        ids.append(net.add_edge(u, v, hi - lo))
        excess[v] += lo
        excess[u] -= lo
    need = 0
    for v, x in enumerate(excess):
        if x > 0:
            net.add_edge(s, v, x)
            need += x
        elif x < 0:
            net.add_edge(v, t, -x)
    if net.max_flow(s, t) != need:
        return None
    return [lo + net.flow_on(e) for e, (_, _, lo, _) in zip(ids, edges)]


def node_bounded_circulation(
    quotient_arcs: Sequence[tuple[int, int]],
    lower: Sequence[int],
    upper: Sequence[int],
) -> dict[tuple[int, int], int] | None:
    """Arc flows on a quotient so that node ``i`` carries between ``lower[i]`` and ``upper[i]`` units.

    Node ``i`` is split into ``2i`` (in) and ``2i + 1`` (out).
    """
    t = len(lower)
    edges = [(2 * i, 2 * i + 1, lower[i], upper[i]) for i in range(t)]
    edges += [(2 * i + 1, 2 * p, 0, min(upper[i], upper[p])) for i, p in quotient_arcs]
    flows = feasible_circulation(2 * t, edges)
    if flows is None:
        return None
    return {arc: f for arc, f in zip(quotient_arcs, flows[t:]) if f}
