"""Finite simple digraphs on dense integer vertices.

A :class:`Digraph` stores one out-neighbourhood bitmask per vertex.  That gives
O(1) arc membership, cheap induced subdigraphs and lexicographic arc iteration,
and it is the representation the compiled kernels consume directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DuplicateArcError, SelfLoopError, ValidationError, VertexRangeError


_TABLE_BITS = 12
_BIT_TABLE = tuple(tuple(i for i in range(_TABLE_BITS) if (m >> i) & 1) for m in range(1 << _TABLE_BITS))


def _bits_gen(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Iterate over the set bit positions of ``mask`` in increasing order."""
    if mask < 1 << _TABLE_BITS:
        return iter(_BIT_TABLE[mask])
    return _bits_gen(mask)


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph with vertices ``0..n-1``; 2-cycles are two ordered arcs."""

    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValidationError(f"expected {self.n} out-masks, got {len(self.out)}")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.out):
            if m & ~full:
                raise VertexRangeError(f"arc from {v} leaves the vertex range 0..{self.n - 1}")
            if (m >> v) & 1:
                raise SelfLoopError(f"self-loop at {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"arc ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Digraph":
        return cls.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])

    # -- basic queries ---------------------------------------------------

    @cached_property
    def inn(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, m in enumerate(self.out):
            for v in bits(m):
                inn[v] |= 1 << u
        return tuple(inn)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in bits(self.out[u]))

    @property
    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.out[u] >> v) & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) or self.has_arc(v, u)

    def out_neighbors(self, v: int) -> list[int]:
        return list(bits(self.out[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(bits(self.inn[v]))

    # -- derived digraphs -------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        """Subdigraph induced by ``vertices``; vertex ``vertices[k]`` becomes ``k``."""
        index = {v: k for k, v in enumerate(vertices)}
        out = []
        for v in vertices:
            m = 0
            for w in bits(self.out[v]):
                k = index.get(w)
                if k is not None:
                    m |= 1 << k
            out.append(m)
        return Digraph(len(vertices), tuple(out))

    def remove_vertices(self, removed: Iterable[int]) -> "Digraph":
        drop = to_mask(removed)
        return self.induced([v for v in range(self.n) if not (drop >> v) & 1])

    def relabel(self, new_label: Sequence[int]) -> "Digraph":
        """Rename vertex ``v`` to ``new_label[v]`` (a permutation)."""
        if sorted(new_label) != list(range(self.n)):
            raise ValidationError("relabelling must be a permutation of the vertices")
        return Digraph.from_arcs(self.n, ((new_label[u], new_label[v]) for u, v in self.arcs))

    def without_arcs(self, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        out = list(self.out)
        for u, v in arcs:
            out[u] &= ~(1 << v)
        return Digraph(self.n, tuple(out))

    def spanning_subdigraph(self, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        """Spanning subdigraph with the given arcs; every arc must belong to ``self``."""
        sub = Digraph.from_arcs(self.n, arcs)
        for u in range(self.n):
            if sub.out[u] & ~self.out[u]:
                v = next(bits(sub.out[u] & ~self.out[u]))
                raise ValidationError(f"arc ({u}, {v}) is not an arc of the host digraph")
        return sub

    def is_subdigraph_of(self, other: "Digraph") -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.out, other.out))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def make_digraph(n: int, arcs: Sequence[tuple[int, int]]) -> Digraph:
    """Validated constructor; rejects out-of-range vertices, loops and duplicates."""
    if n < 0:
        raise ValidationError("vertex count must be non-negative")
    seen = set()
    for arc in arcs:
        u, v = arc
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"arc ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if (u, v) in seen:
            raise DuplicateArcError(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
    return Digraph.from_arcs(n, arcs)


# -- reachability and strong components ----------------------------------


def reach(adj: Sequence[int], start: int, within: int) -> int:
    """Bitmask of vertices reachable from ``start`` using only vertices in ``within``."""
    seen = frontier = (1 << start) & within
    small = within < 1 << _TABLE_BITS
    while frontier:
        nxt = 0
        for v in _BIT_TABLE[frontier] if small else _bits_gen(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_strong_mask(D: Digraph, mask: int) -> bool:
    """Strongness of ``D[mask]``; the empty and one-vertex digraphs count as strong."""
    if mask & (mask - 1) == 0:
        return True
    s = (mask & -mask).bit_length() - 1
    return reach(D.out, s, mask) == mask and reach(D.inn, s, mask) == mask


class StrongComponentReport(NamedTuple):
    components: tuple[tuple[int, ...], ...]
    condensation: Digraph
    initial: tuple[int, ...]
    terminal: tuple[int, ...]

    def component_of(self, v: int) -> int:
        for k, comp in enumerate(self.components):
            if v in comp:
                return k
        raise VertexRangeError(f"vertex {v} not in digraph")


def strong_components(D: Digraph) -> StrongComponentReport:
    """Strong components ordered by minimum vertex, with their condensation."""
    comps = []
    assigned = 0
    for v in range(D.n):
        if (assigned >> v) & 1:
            continue
        free = D.full_mask & ~assigned
        comp = reach(D.out, v, free) & reach(D.inn, v, free)
        assigned |= comp
        comps.append(comp)
    comps.sort(key=lambda m: (m & -m))
    which = [0] * D.n
    for k, comp in enumerate(comps):
        for v in bits(comp):
            which[v] = k
    arcs = {(which[u], which[v]) for u, v in D.arcs if which[u] != which[v]}
    cond = Digraph.from_arcs(len(comps), arcs)
    initial = tuple(k for k in range(cond.n) if cond.inn[k] == 0)
    terminal = tuple(k for k in range(cond.n) if cond.out[k] == 0)
    return StrongComponentReport(tuple(tuple(bits(c)) for c in comps), cond, initial, terminal)


def is_strong(D: Digraph) -> bool:
    return is_strong_mask(D, D.full_mask)


def is_semicomplete(D: Digraph) -> bool:
    full = D.full_mask
    return all((D.out[v] | D.inn[v] | (1 << v)) == full for v in range(D.n))


def is_acyclic(D: Digraph) -> bool:
    """Kahn's algorithm; a 2-cycle counts as a cycle."""
    remaining = D.full_mask
    while remaining:
        sources = [v for v in bits(remaining) if D.inn[v] & remaining == 0]
        if not sources:
            return False
        for v in sources:
            remaining &= ~(1 << v)
    return True


def topological_order(D: Digraph) -> list[int]:
    """Least-index-first topological order; raises on a cycle."""
    order = []
    remaining = D.full_mask
    while remaining:
        source = next((v for v in bits(remaining) if D.inn[v] & remaining == 0), None)
        if source is None:
            raise ValidationError("digraph has a cycle")
        order.append(source)
        remaining &= ~(1 << source)
    return order


def complement_components(D: Digraph) -> tuple[tuple[int, ...], ...]:
    """Connected components of the complement of the underlying graph ``U(D)``.

    Sorted by minimum vertex.  Two vertices in different parts are always adjacent.
    """
    full = D.full_mask
    non_adj = [full & ~(D.out[v] | D.inn[v] | (1 << v)) for v in range(D.n)]
    comps = []
    assigned = 0
    for v in range(D.n):
        if (assigned >> v) & 1:
            continue
        comp = reach(non_adj, v, full)
        assigned |= comp
        comps.append(tuple(bits(comp)))
    return tuple(comps)


# -- branchings -------------------------------------------------------------


class Branching(NamedTuple):
    root: int
    arcs: tuple[tuple[int, int], ...]


def _bfs_tree(adj: Sequence[int], root: int, n: int) -> list[tuple[int, int]] | None:
    parent_arcs = []
    seen = 1 << root
    queue = [root]
    for v in queue:
        for w in bits(adj[v] & ~seen):
            seen |= 1 << w
            parent_arcs.append((v, w))
            queue.append(w)
    if seen != (1 << n) - 1:
        return None
    return parent_arcs


def _mother_root(adj: Sequence[int], back: Sequence[int], n: int) -> int | None:
    """Least vertex reaching every vertex along ``adj``, or ``None``."""
    full = (1 << n) - 1
    visited = 0
    last = 0
    for v in range(n):  # the root of the last search tree is the only candidate
        if not (visited >> v) & 1:
            last = v
            visited |= reach(adj, v, full & ~visited)
    if reach(adj, last, full) != full:
        return None
    # vertices reaching ``last`` reach everything; take the least of them
    return (reach(back, last, full) & -reach(back, last, full)).bit_length() - 1


def branchings(D: Digraph) -> tuple[Branching | None, Branching | None]:
    """An out-branching and an in-branching of ``D``, each ``None`` when absent.

    The roots are the minimum vertices of the unique initial (resp. terminal)
    strong component.
    """
    if D.n == 0:
        return None, None
    out_b = in_b = None
    root = _mother_root(D.out, D.inn, D.n)
    if root is not None:
        out_b = Branching(root, tuple(sorted(_bfs_tree(D.out, root, D.n))))
    root = _mother_root(D.inn, D.out, D.n)
    if root is not None:
        tree = _bfs_tree(D.inn, root, D.n)
        in_b = Branching(root, tuple(sorted((w, v) for v, w in tree)))
    return out_b, in_b
