"""Path-cycle subdigraphs: cycle factors, 1-path-cycle factors, coverage and path covers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import kernels
from .composition import Composition, recognize
from .digraph import Digraph, bits, is_acyclic, is_semicomplete, is_strong, topological_order
from .errors import PreconditionError, ScaleError, TheoremViolation, ValidationError
from .flows import feasible_circulation, node_bounded_circulation

PC_EXACT_BOUND = 12
ENUM_BOUND = 10


def _rotate(cycle: Sequence[int]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


@dataclass(frozen=True)
class PathCycleSubdigraph:
    """Disjoint paths and cycles; a cycle lists its vertices once, closing back to the first."""

    paths: tuple[tuple[int, ...], ...] = ()
    cycles: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def make(cls, paths=(), cycles=()) -> "PathCycleSubdigraph":
        """Canonical form: cycles rotated to their least vertex, elements sorted."""
        ps = tuple(sorted(tuple(p) for p in paths))
        cs = tuple(sorted(_rotate(list(c)) for c in cycles))
        return cls(ps, cs)

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return self.paths + self.cycles

    @property
    def vertex_mask(self) -> int:
        m = 0
        for el in self.elements:
            for v in el:
                m |= 1 << v
        return m

    @property
    def vertices(self) -> list[int]:
        return list(bits(self.vertex_mask))

    @property
    def size(self) -> int:
        return sum(len(el) for el in self.elements)

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for p in self.paths:
            out.extend(zip(p, p[1:]))
        for c in self.cycles:
            out.extend(zip(c, c[1:] + c[:1]))
        return out

    def validate(self, D: Digraph) -> None:
        """Raise :class:`ValidationError` unless this is a path-cycle subdigraph of ``D``."""
        seen = 0
        for el in self.elements:
            if not el:
                raise ValidationError("empty path or cycle")
            for v in el:
                if not 0 <= v < D.n:
                    raise ValidationError(f"vertex {v} outside 0..{D.n - 1}")
                if (seen >> v) & 1:
                    raise ValidationError(f"vertex {v} used twice")
                seen |= 1 << v
        for c in self.cycles:
            if len(c) < 2:
                raise ValidationError(f"cycle {list(c)} has fewer than 2 vertices")
        for u, v in self.arcs():
            if not D.has_arc(u, v):
                raise ValidationError(f"({u}, {v}) is not an arc")

    def is_spanning(self, D: Digraph) -> bool:
        return self.vertex_mask == D.full_mask


@dataclass(frozen=True)
class CoverageProfile:
    per_house: tuple[int, ...]

    @classmethod
    def of(cls, C: Composition, vertex_mask: int) -> "CoverageProfile":
        return cls(tuple((vertex_mask & hm).bit_count() for hm in C.house_masks))

    def check(self, C: Composition) -> None:
        if len(self.per_house) != C.t or any(not 0 <= c <= n for c, n in zip(self.per_house, C.orders)):
            raise ValidationError(f"profile {self.per_house} incompatible with orders {C.orders}")


# -- matchings and factors --------------------------------------------------


def _perfect_matching(n: int, adj: Sequence[int]) -> list[int] | None:
    """Kuhn's algorithm: ``succ[u] in adj[u]`` bijectively, or ``None``."""
    match_in = [-1] * n

    def augment(u, seen):
        for v in bits(adj[u]):
            if seen[v]:
                continue
            seen[v] = True
            if match_in[v] < 0 or augment(match_in[v], seen):
                match_in[v] = u
                return True
        return False

    for u in range(n):
        if not augment(u, [False] * n):
            return None
    succ = [0] * n
    for v, u in enumerate(match_in):
        succ[u] = v
    return succ


def _cycles_of(succ: dict[int, int] | list[int]) -> list[list[int]]:
    keys = sorted(succ) if isinstance(succ, dict) else range(len(succ))
    seen = set()
    cycles = []
    for s in keys:
        if s in seen:
            continue
        c = [s]
        seen.add(s)
        v = succ[s]
        while v != s:
            c.append(v)
            seen.add(v)
            v = succ[v]
        cycles.append(c)
    return cycles


def cycle_factor(D: Digraph) -> PathCycleSubdigraph | None:
    if D.n == 0:
        return PathCycleSubdigraph()
    succ = _perfect_matching(D.n, D.out)
    if succ is None:
        return None
    return PathCycleSubdigraph.make(cycles=_cycles_of(succ))


def one_path_cycle_factor(D: Digraph) -> PathCycleSubdigraph | None:
    """One path (possibly a single vertex) plus disjoint cycles covering ``D``."""
    if D.n == 0:
        return None
    z = D.n
    full = D.full_mask
    adj = [m | (1 << z) for m in D.out] + [full]
    succ = _perfect_matching(D.n + 1, adj)
    if succ is None:
        return None
    cycles = []
    path = None
    for c in _cycles_of(succ):
        if z in c:
            k = c.index(z)
            path = c[k + 1:] + c[:k]
        else:
            cycles.append(c)
    return PathCycleSubdigraph.make(paths=[path], cycles=cycles)


# -- extensions: coverage and lower bounds ------------------------------------


def _require_extension(C: Composition) -> None:
    if not C.is_extension:
        raise PreconditionError("expected an extension (all houses arcless)")


def _assignment_cycles(D: Digraph, weight: Sequence[int]) -> list[int]:
    """Successor list of a cycle subdigraph maximizing the total weight of covered vertices."""
    n = D.n
    big = 1 + n * (max(weight, default=0) + 1)
    cost = np.full((n, n), big, dtype=np.int64)
    for u in range(n):
        cost[u, u] = 0
        for v in bits(D.out[u]):
            cost[u, v] = -weight[v]
    rows, cols = linear_sum_assignment(cost)
    succ = [0] * n
    for u, v in zip(rows, cols):
        succ[u] = int(v)
    return succ


def max_coverage_cycle_subdigraph(C: Composition, objective: int | str = "total"):
    """Cycle subdigraph of the extension maximizing coverage of house ``objective`` or of all houses.

    Returns ``(PathCycleSubdigraph, CoverageProfile)``.  With a house objective,
    total coverage is maximized secondarily.
    """
    _require_extension(C)
    D = C.expanded
    if objective == "total":
        weight = [1] * D.n
    else:
        if not isinstance(objective, int) or not 0 <= objective < C.t:
            raise ValidationError(f"objective must be 'total' or a house index 0..{C.t - 1}")
        hm = C.house_masks[objective]
        weight = [(D.n + 1) if (hm >> v) & 1 else 1 for v in range(D.n)]
    succ = _assignment_cycles(D, weight)
    moved = {u: v for u, v in enumerate(succ) if u != v}
    F = PathCycleSubdigraph.make(cycles=_cycles_of(moved))
    return F, CoverageProfile.of(C, F.vertex_mask)


@lru_cache(maxsize=None)
def _coverage_maxima(quotient: Digraph, orders: tuple[int, ...]) -> tuple[int, ...]:
    C = Composition.extension(quotient, orders)
    return tuple(max_coverage_cycle_subdigraph(C, i)[1].per_house[i] for i in range(C.t))


def coverage_maxima(C: Composition) -> tuple[int, ...]:
    """``m_i``: most vertices of house ``i`` a cycle subdigraph of the extension can cover."""
    return _coverage_maxima(C.quotient, C.orders)


def _slot_cycles(quotient: Digraph, flows: dict, used: Sequence[Sequence[int]]) -> dict[int, int]:
    """Turn quotient arc flows into a successor map on the given vertices of each house.

    House ``i`` sends ``flows[(i, p)]`` of its vertices to house ``p``; out-slots and
    in-slots are both listed arc by arc in index order and matched copy by copy.
    """
    t = quotient.n
    out_slots = [[] for _ in range(t)]
    in_slots = [[] for _ in range(t)]
    for (i, p) in sorted(flows):
        for r in range(flows[(i, p)]):
            out_slots[i].append((p, r))
    for (i, p) in sorted(flows, key=lambda a: (a[1], a[0])):
        for r in range(flows[(i, p)]):
            in_slots[p].append((i, r))
    receiver = {}
    for p in range(t):
        for pos, (i, r) in enumerate(in_slots[p]):
            receiver[(i, p, r)] = used[p][pos]
    succ = {}
    for i in range(t):
        for pos, (p, r) in enumerate(out_slots[i]):
            succ[used[i][pos]] = receiver[(i, p, r)]
    return succ


def cycle_subdigraph_with_lower_bounds(C: Composition, bounds: Sequence[int]) -> PathCycleSubdigraph | None:
    """Cycle subdigraph of the extension covering at least ``bounds[i]`` vertices of house ``i``.

    Similar vertices are interchangeable, so this is a circulation on the
    quotient with node throughput in ``[bounds[i], n_i]``.
    """
    _require_extension(C)
    if len(bounds) != C.t or any(not 0 <= b <= n for b, n in zip(bounds, C.orders)):
        raise ValidationError(f"bounds {list(bounds)} incompatible with orders {C.orders}")
    flows = node_bounded_circulation(C.quotient.arcs, bounds, C.orders)
    if flows is None:
        return None
    used = []
    for i in range(C.t):
        k = sum(f for (a, _), f in flows.items() if a == i)
        used.append(list(C.house_vertices(i))[:k])
    succ = _slot_cycles(C.quotient, flows, used)
    return PathCycleSubdigraph.make(cycles=_cycles_of(succ))


def exact_usage_path_cycle_factor(quotient: Digraph, usage: Sequence[int]) -> PathCycleSubdigraph | None:
    """1-path-cycle factor of ``quotient[K̄_{usage}]`` (houses numbered contiguously), or ``None``.

    The path is modelled by an auxiliary quotient node joined both ways to every
    house and carrying exactly one unit.
    """
    t = quotient.n
    z = t
    edges = [(2 * i, 2 * i + 1, usage[i], usage[i]) for i in range(t)]
    edges.append((2 * z, 2 * z + 1, 1, 1))
    arcs = list(quotient.arcs) + [(z, i) for i in range(t)] + [(i, z) for i in range(t)]
    cap = max(usage, default=0) + 1
    edges += [(2 * i + 1, 2 * p, 0, cap) for i, p in arcs]
    flows = feasible_circulation(2 * (t + 1), edges)
    if flows is None:
        return None
    arc_flow = {a: f for a, f in zip(arcs, flows[t + 1:]) if f}
    offsets = [0]
    for k in usage:
        offsets.append(offsets[-1] + k)
    n = offsets[-1]
    used = [list(range(offsets[i], offsets[i + 1])) for i in range(t)] + [[n]]
    ext_q = Digraph.from_arcs(t + 1, arcs)
    succ = _slot_cycles(ext_q, arc_flow, used)
    cycles, path = [], None
    for c in _cycles_of(succ):
        if n in c:
            k = c.index(n)
            path = c[k + 1:] + c[:k]
        else:
            cycles.append(c)
    return PathCycleSubdigraph.make(paths=[path], cycles=cycles)


# -- path covers --------------------------------------------------------------


@lru_cache(maxsize=4096)
def _pc_tables(D: Digraph):
    ends = kernels.path_ends_table(list(D.out), list(D.inn), D.n)
    return ends, kernels.path_cover_table(ends, D.n)


def _acyclic_extension_pc(D: Digraph) -> int | None:
    if D.n < 2 or not is_acyclic(D):
        return None
    C = recognize(D)
    if C is None or not C.is_extension or not is_semicomplete(C.quotient):
        return None
    return max(C.orders)


def path_cover_number(D: Digraph, bound: int = PC_EXACT_BOUND) -> int:
    """``pc(D)``: fewest vertex-disjoint paths covering ``D``."""
    if D.n == 0:
        return 0
    fast = _acyclic_extension_pc(D)
    if fast is not None:
        return fast
    if D.n > bound:
        raise ScaleError(f"exact pc limited to n <= {bound} (got {D.n})")
    return _pc_tables(D)[1][D.full_mask]


def exact_path_cover_number(D: Digraph, bound: int = PC_EXACT_BOUND) -> int:
    if D.n == 0:
        return 0
    if D.n > bound:
        raise ScaleError(f"exact pc limited to n <= {bound} (got {D.n})")
    return _pc_tables(D)[1][D.full_mask]


def _path_on(D: Digraph, ends: Sequence[int], sub: int) -> list[int]:
    v = (ends[sub] & -ends[sub]).bit_length() - 1
    path = [v]
    mask = sub
    while mask != 1 << v:
        prev = mask ^ (1 << v)
        cand = ends[prev] & D.inn[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
        mask = prev
    path.reverse()
    return path


@lru_cache(maxsize=4096)
def _min_path_factor(D: Digraph) -> tuple[tuple[int, ...], ...]:
    ends, pc = _pc_tables(D)
    paths = []
    mask = D.full_mask
    while mask:
        low = mask & -mask
        rest = mask ^ low
        s = rest
        while True:  # largest sub first
            sub = s | low
            if ends[sub] and pc[mask ^ sub] == pc[mask] - 1:
                break
            s = (s - 1) & rest
        paths.append(tuple(_path_on(D, ends, sub)))
        mask ^= sub
    return tuple(paths)


def path_factor(D: Digraph, k: int, bound: int = PC_EXACT_BOUND) -> list[list[int]]:
    """A spanning set of exactly ``k`` disjoint paths, ``pc(D) <= k <= n``.

    Built from a minimum path cover by splitting off path ends.
    """
    if D.n > bound:
        raise ScaleError(f"exact path factors limited to n <= {bound} (got {D.n})")
    if D.n == 0:
        if k:
            raise ValidationError("the empty digraph only has the 0-path factor")
        return []
    paths = [list(p) for p in _min_path_factor(D)]
    if not len(paths) <= k <= D.n:
        raise ValidationError(f"no {k}-path factor: need pc(D)={len(paths)} <= k <= n={D.n}")
    while len(paths) < k:
        j = next(j for j, p in enumerate(paths) if len(p) >= 2)
        paths.append([paths[j].pop()])
    return paths


def longest_path_peeling(D: Digraph) -> list[list[int]]:
    """Cover an acyclic digraph by repeatedly removing a longest path.

    Each path goes from an in-degree-0 to an out-degree-0 vertex of what remains.
    Ties go to the path whose vertex sequence is lexicographically least.
    """
    if not is_acyclic(D):
        raise PreconditionError("longest-path peeling needs an acyclic digraph")
    remaining = list(range(D.n))
    paths = []
    while remaining:
        sub = D.induced(remaining)
        order = topological_order(sub)
        best: list[tuple[int, tuple[int, ...]]] = [(0, ())] * sub.n
        for v in reversed(order):  # longest path starting at v
            cands = [(1 + best[w][0], (v,) + best[w][1]) for w in bits(sub.out[v])]
            best[v] = min(cands, key=lambda c: (-c[0], c[1])) if cands else (1, (v,))
        _, path = min(best, key=lambda c: (-c[0], c[1]))
        paths.append([remaining[v] for v in path])
        keep = set(path)
        remaining = [remaining[v] for v in range(sub.n) if v not in keep]
    return paths


# -- k-path coverage ------------------------------------------------------------


def max_k_path_profiles(C: Composition, k: int, bound: int = ENUM_BOUND) -> tuple[int, set]:
    """Largest vertex count of a k-path subdigraph of ``expand(C)`` and all profiles attaining it.

    A vertex set carries a subdigraph with at most ``k`` paths iff its path
    covering number is at most ``k``; coverage depends on the vertex set only.
    """
    D = C.expanded
    if D.n > bound:
        raise ScaleError(f"k-path enumeration limited to n <= {bound} (got {D.n})")
    if k < 1:
        raise ValidationError("k must be at least 1")
    _, pc = _pc_tables(D)
    best = 0
    profiles: set = set()
    hm = C.house_masks
    for mask in range(1, 1 << D.n):
        if pc[mask] > k:
            continue
        size = mask.bit_count()
        if size < best:
            continue
        prof = tuple((mask & h).bit_count() for h in hm)
        if size > best:
            best, profiles = size, {prof}
        else:
            profiles.add(prof)
    return best, profiles


def k_path_coverage_profile(C: Composition, k: int, bound: int = ENUM_BOUND) -> CoverageProfile:
    """Per-house coverage shared by every maximum k-path subdigraph.

    Raises :class:`TheoremViolation` if two maximum subdigraphs disagree.
    """
    if not is_strong(C.expanded):
        raise PreconditionError("k-path coverage profile needs a strong composition")
    _, profiles = max_k_path_profiles(C, k, bound)
    if len(profiles) != 1:
        raise TheoremViolation(f"maximum {k}-path subdigraphs disagree: {sorted(profiles)}")
    return CoverageProfile(next(iter(profiles)))


def max_k_path_coverage_in(D: Digraph, k: int) -> int:
    """Most vertices of ``D`` covered by at most ``k`` disjoint paths."""
    if D.n == 0:
        return 0
    _, pc = _pc_tables(D)
    return max((m.bit_count() for m in range(1 << D.n) if pc[m] <= k), default=0)
