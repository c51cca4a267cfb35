"""Spanning structures: tournaments, ear decompositions, ``H_k(D)``, smallest strong and acyclic spanning subdigraphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .composition import Composition, trivial_composition
from .digraph import (
    Digraph,
    bits,
    branchings,
    is_acyclic,
    is_semicomplete,
    is_strong,
    reach,
    strong_components,
    to_mask,
)
from .errors import PreconditionError, TheoremViolation, ValidationError
from .factors import coverage_maxima, longest_path_peeling, max_coverage_cycle_subdigraph, path_cover_number, path_factor
from .hamiltonicity import _merge_cycles_in, _rotate_min, ham_cycle, house_pcs


EAR_HAM_BOUND = 10


def _cycle_arcs(cyc: Sequence[int]) -> list[tuple[int, int]]:
    return list(zip(cyc, list(cyc[1:]) + [cyc[0]]))


# -- 2-cycle-free spanning structures ---------------------------------------------


def strong_spanning_tournament(D: Digraph) -> Digraph:
    """Strong spanning tournament: a Hamiltonian cycle plus one arc per remaining pair.

    Of an off-cycle 2-cycle the arc leaving the later cycle position is dropped.
    """
    if D.n < 3:
        raise PreconditionError("need at least 3 vertices")
    if not is_semicomplete(D):
        raise PreconditionError("digraph is not semicomplete")
    if not is_strong(D):
        raise PreconditionError("digraph is not strong")
    return _spanning_tournament(D)


@lru_cache(maxsize=None)
def _spanning_tournament(D: Digraph) -> Digraph:
    cyc = ham_cycle(trivial_composition(D))
    if cyc is None:
        raise TheoremViolation("strong semicomplete digraph without a Hamiltonian cycle")
    pos = {v: k for k, v in enumerate(cyc)}
    keep = set(_cycle_arcs(cyc))
    for u, v in D.arcs:
        if (u, v) in keep or (v, u) in keep:
            continue
        if D.has_arc(v, u) and pos[u] > pos[v]:
            continue
        keep.add((u, v))
    return D.spanning_subdigraph(sorted(keep))


def strong_spanning_composition_no_2cycle(C: Composition) -> Composition | None:
    """Strong spanning 2-cycle-free composition over the same houses, ``None`` when ``t = 2``."""
    if not is_strong(C.expanded):
        raise PreconditionError("expansion is not strong")
    if not is_semicomplete(C.quotient):
        raise PreconditionError("quotient is not semicomplete")
    if C.t == 2:
        return None
    T = strong_spanning_tournament(C.quotient)
    return Composition.extension(T, C.orders)


# -- ear decompositions ---------------------------------------------------------------


@dataclass(frozen=True)
class EarDecomposition:
    """``ears[0]`` is a cycle; every later ear is ``('path', seq)`` or ``('cycle', seq)``."""

    ears: tuple[tuple[str, tuple[int, ...]], ...]

    @staticmethod
    def _arcs_of(kind, seq):
        return _cycle_arcs(seq) if kind == "cycle" else list(zip(seq, seq[1:]))

    def validate(self, D: Digraph) -> None:
        if not self.ears or self.ears[0][0] != "cycle":
            raise ValidationError("first ear must be a cycle")
        used_arcs: set = set()
        verts = 0
        for k, (kind, seq) in enumerate(self.ears):
            arcs = self._arcs_of(kind, seq)
            for a in arcs:
                if not D.has_arc(*a):
                    raise ValidationError(f"ear {k}: {a} is not an arc")
                if a in used_arcs:
                    raise ValidationError(f"ear {k}: arc {a} used twice")
                used_arcs.add(a)
            if len(set(seq)) != len(seq):
                raise ValidationError(f"ear {k} repeats a vertex")
            if k:
                if kind == "cycle":
                    if len(seq) < 2 or sum((verts >> v) & 1 for v in seq) != 1:
                        raise ValidationError(f"cycle ear {k} must meet earlier ears in one vertex")
                else:
                    inner = seq[1:-1]
                    if len(seq) < 2 or seq[0] == seq[-1] or not (verts >> seq[0]) & 1 or not (verts >> seq[-1]) & 1:
                        raise ValidationError(f"path ear {k} needs distinct old end vertices")
                    if any((verts >> v) & 1 for v in inner):
                        raise ValidationError(f"path ear {k} revisits old vertices")
            verts |= to_mask(seq)
        if used_arcs != set(D.arcs):
            raise ValidationError("ears do not cover every arc")
        if verts != D.full_mask:
            raise ValidationError("ears do not cover every vertex")


def _shortest_cycle_through(D: Digraph, s: int) -> list[int] | None:
    parent = {s: None}
    queue = deque()
    for w in bits(D.out[s]):
        parent[w] = s
        queue.append(w)
    while queue:
        v = queue.popleft()
        if D.has_arc(v, s):
            path = [v]
            while parent[path[-1]] != s:
                path.append(parent[path[-1]])
            path.append(s)
            return path[::-1]
        for w in bits(D.out[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def ear_decomposition(D: Digraph, start: Sequence[int] | None = None) -> EarDecomposition:
    """Ear decomposition from ``start``.

    The default start is a Hamiltonian cycle when one exists (checked for
    ``n <= EAR_HAM_BOUND``), otherwise a shortest cycle through vertex 0.

    Each step takes the least unused arc ``(u, v)`` leaving the covered set;
    an ear returns from ``v`` to the covered set by a shortest outside path.
    """
    if D.n < 2:
        raise PreconditionError("need at least 2 vertices")
    if not is_strong(D):
        raise PreconditionError("digraph is not strong")
    if start is None:
        if D.n <= EAR_HAM_BOUND:
            start = ham_cycle(trivial_composition(D))
        if start is None:
            start = _shortest_cycle_through(D, 0)
    start = list(start)
    if len(start) < 2 or len(set(start)) != len(start) or any(not D.has_arc(u, v) for u, v in _cycle_arcs(start)):
        raise ValidationError(f"{start} is not a cycle of the digraph")
    ears = [("cycle", tuple(start))]
    used = set(_cycle_arcs(start))
    covered = to_mask(start)
    while len(used) < D.num_arcs:
        u, v = next(a for a in D.arcs if a not in used and (covered >> a[0]) & 1)
        if (covered >> v) & 1:
            ears.append(("path", (u, v)))
            used.add((u, v))
            continue
        parent = {v: None}
        queue = deque([v])
        end = None
        while queue and end is None:
            x = queue.popleft()
            hit = D.out[x] & covered
            if hit:
                end = (x, u if (hit >> u) & 1 else next(bits(hit)))
                break
            for w in bits(D.out[x] & ~covered):
                if w not in parent:
                    parent[w] = x
                    queue.append(w)
        x, w = end
        inner = [x]
        while parent[inner[-1]] is not None:
            inner.append(parent[inner[-1]])
        inner.reverse()
        seq = [u] + inner
        if w == u:
            ears.append(("cycle", tuple(seq)))
            used.update(_cycle_arcs(seq))
        else:
            seq.append(w)
            ears.append(("path", tuple(seq)))
            used.update(zip(seq, seq[1:]))
        covered |= to_mask(seq)
    return EarDecomposition(tuple(ears))


# -- H_k(D) and epsilon ---------------------------------------------------------------


def build_Hk(D: Digraph, k: int) -> Digraph:
    """``D`` plus ``x_1..x_k`` (vertices ``n..n+k-1``) entered from all of ``D``,
    ``y_1..y_k`` (``n+k..n+2k-1``) entering all of ``D``, and every ``x_i -> y_j``."""
    if k < 0:
        raise ValidationError("k must be non-negative")
    n = D.n
    arcs = list(D.arcs)
    xs = range(n, n + k)
    ys = range(n + k, n + 2 * k)
    for v in range(n):
        arcs += [(v, x) for x in xs] + [(y, v) for y in ys]
    arcs += [(x, y) for x in xs for y in ys]
    return Digraph.from_arcs(n + 2 * k, arcs)


def epsilon(D: Digraph) -> int:
    """0 if ``D`` is Hamiltonian, else ``pc(D)``."""
    if not is_strong(D):
        raise PreconditionError("digraph is not strong")
    if D.n >= 2 and ham_cycle(trivial_composition(D)) is not None:
        return 0
    return path_cover_number(D)


# -- smallest strong spanning subdigraph -------------------------------------------------


@dataclass(frozen=True)
class _Skeleton:
    orders: tuple[int, ...]  # m'_i
    arcs: tuple[tuple[int, int], ...]  # strong spanning subdigraph of T[K̄_{m'}]
    k: int


@lru_cache(maxsize=None)
def _ssss_skeleton(quotient: Digraph, orders: tuple[int, ...], pcs: tuple[int, ...]) -> _Skeleton:
    m = coverage_maxima(Composition.extension(quotient, orders))
    k = max(p - mi for p, mi in zip(pcs, m))
    if k < 1:
        raise TheoremViolation(f"non-Hamiltonian but pc(H_i) <= m_i for all i: pcs={pcs}, m={m}")
    mp = tuple(max(p, mi) for p, mi in zip(pcs, m))
    Q1 = Composition.extension(quotient, mp)
    D1 = Q1.expanded
    F, prof = max_coverage_cycle_subdigraph(Q1, "total")
    if prof.per_house != m:
        raise TheoremViolation(f"longest cycle coverage {prof.per_house} differs from m = {m}")
    cyc = _merge_cycles_in(D1, F)
    if to_mask(cyc) != F.vertex_mask:
        raise TheoremViolation("merged longest cycle changed its vertex set")
    arcs = _cycle_arcs(cyc)
    current = to_mask(cyc)
    rest = [v for v in range(D1.n) if not (current >> v) & 1]
    remainder = D1.induced(rest)
    if not is_acyclic(remainder):
        raise TheoremViolation("remainder of a longest cycle is not acyclic")
    paths = [[rest[v] for v in p] for p in longest_path_peeling(remainder)]
    if len(paths) != k:
        raise TheoremViolation(f"remainder needs {len(paths)} paths, expected {k}")
    for p in paths:
        a, b = p[0], p[-1]
        z = next(bits(D1.inn[a] & current), None)
        z2 = next(bits(D1.out[b] & current), None)
        if z is None or z2 is None:
            raise TheoremViolation(f"path {p} cannot be attached")
        arcs += [(z, a)] + list(zip(p, p[1:])) + [(b, z2)]
        current |= to_mask(p)
    return _Skeleton(mp, tuple(sorted(arcs)), k)


def smallest_strong_spanning(C: Composition) -> Digraph:
    """Strong spanning subdigraph of ``expand(C)`` with exactly ``n + epsilon`` arcs."""
    D = C.expanded
    if not is_strong(D):
        raise PreconditionError("expansion is not strong")
    if not is_semicomplete(C.quotient):
        raise PreconditionError("quotient is not semicomplete")
    cyc = ham_cycle(C)
    if cyc is not None:
        return D.spanning_subdigraph(_cycle_arcs(cyc))
    sk = _ssss_skeleton(C.quotient, C.orders, house_pcs(C))
    offs = C.vertex_map.offsets
    flat_paths = []  # extension vertex -> house path, in extension vertex order
    for i, h in enumerate(C.houses):
        for p in path_factor(h, sk.orders[i]):
            flat_paths.append([offs[i] + x for x in p])
    arcs = []
    for p in flat_paths:
        arcs += list(zip(p, p[1:]))
    for a, b in sk.arcs:
        arcs.append((flat_paths[a][-1], flat_paths[b][0]))
    return D.spanning_subdigraph(arcs)


# -- acyclic spanning subdigraphs ------------------------------------------------------------


@dataclass(frozen=True)
class AcyclicSpanningResult:
    subdigraph: Digraph
    source: int
    sink: int
    case: str  # "a", "b" or "general"

    def validate(self, D: Digraph) -> None:
        R = self.subdigraph
        if not R.is_subdigraph_of(D):
            raise ValidationError("R is not a spanning subdigraph")
        if not is_acyclic(R):
            raise ValidationError("R has a cycle")
        if R.inn[self.source]:
            raise ValidationError(f"source {self.source} has an entering arc")
        if R.out[self.sink]:
            raise ValidationError(f"sink {self.sink} has a leaving arc")
        if reach(R.out, self.source, R.full_mask) != R.full_mask:
            raise ValidationError("some vertex is unreachable from the source")
        if reach(R.inn, self.sink, R.full_mask) != R.full_mask:
            raise ValidationError("some vertex cannot reach the sink")


def acyclic_conditions(C: Composition) -> dict[str, bool]:
    """Which hypotheses hold: (a) non-strong with both branchings, (b) strong with houses >= 2,
    general: Hamiltonian quotient with houses >= 2."""
    D = C.expanded
    semi = is_semicomplete(C.quotient)
    strong = is_strong(D)
    big = all(n >= 2 for n in C.orders)
    case_a = False
    if semi and not strong:
        out_b, in_b = branchings(D)
        case_a = out_b is not None and in_b is not None
    return {
        "a": case_a,
        "b": semi and strong and big,
        "general": big and ham_cycle(trivial_composition(C.quotient)) is not None,
    }


def _case_a(C: Composition) -> AcyclicSpanningResult:
    D = C.expanded
    rep = strong_components(C.quotient)
    # the condensation of a semicomplete digraph is a transitive tournament
    order = sorted(range(len(rep.components)), key=lambda k: -rep.condensation.out[k].bit_count())
    first = to_mask(v for i in rep.components[order[0]] for v in C.house_vertices(i))
    last = to_mask(v for i in rep.components[order[-1]] for v in C.house_vertices(i))
    middle = D.full_mask & ~(first | last)
    out_b, in_b = branchings(D)
    x, y = out_b.root, in_b.root
    arcs = []
    seen = 1 << x
    queue = [x]
    for v in queue:  # out-branching of Q[first]
        for w in bits(D.out[v] & first & ~seen):
            seen |= 1 << w
            arcs.append((v, w))
            queue.append(w)
    seen = 1 << y
    queue = [y]
    for v in queue:  # in-branching of Q[last]
        for w in bits(D.inn[v] & last & ~seen):
            seen |= 1 << w
            arcs.append((w, v))
            queue.append(w)
    if middle:
        for v in bits(middle):
            arcs += [(u, v) for u in bits(first)] + [(v, w) for w in bits(last)]
    else:
        arcs += [(u, w) for u in bits(first) for w in bits(last)]
    return AcyclicSpanningResult(D.spanning_subdigraph(arcs), x, y, "a")


def _case_cycle(C: Composition, case: str) -> AcyclicSpanningResult:
    D = C.expanded
    cyc = ham_cycle(trivial_composition(C.quotient))
    t = C.t
    H = [list(C.house_vertices(i)) for i in cyc]
    x, y = H[0][0], H[1][0]
    arcs = []
    for j in range(t):
        src, dst = H[j], H[(j + 1) % t]
        for u in src:
            for w in dst:
                if t >= 3:
                    if j == t - 1 and w == x:
                        continue
                    if j == 0 and u != x and w != y:
                        continue
                    if j == 1 and u == y:
                        continue
                else:
                    if j == 0 and u != x and w != y:
                        continue
                    if j == 1 and (w == x or u == y):
                        continue
                arcs.append((u, w))
    return AcyclicSpanningResult(D.spanning_subdigraph(arcs), x, y, case)


def acyclic_spanning(C: Composition, case: str | None = None) -> AcyclicSpanningResult | None:
    """Acyclic spanning ``R`` with source ``x``, sink ``y`` and every vertex on an x-y path.

    ``case`` forces one construction; by default the first applicable of
    ``a``, ``b``, ``general`` is used.  Returns ``None`` when none applies.
    """
    cond = acyclic_conditions(C)
    if case is None:
        case = next((c for c in ("a", "b", "general") if cond[c]), None)
        if case is None:
            return None
    elif case not in cond:
        raise ValidationError(f"unknown case {case!r}")
    elif not cond[case]:
        raise PreconditionError(f"hypothesis of case {case!r} does not hold")
    return construct_acyclic_spanning(C, case)


def construct_acyclic_spanning(C: Composition, case: str) -> AcyclicSpanningResult:
    """The case construction alone; the caller has established its hypothesis."""
    return _case_a(C) if case == "a" else _case_cycle(C, case)


def acyclic_failure_reason(C: Composition) -> str:
    return (
        "no hypothesis holds: (a) needs a non-strong expansion with in- and out-branchings "
        "over a semicomplete quotient; (b) needs a strong expansion with every house of order >= 2; "
        "the general form needs a Hamiltonian quotient with every house of order >= 2"
    )
