"""Hamiltonian paths and cycles of semicomplete compositions, with certificates.

Both decisions reduce to the extension ``T[K̄_{k_1}, ..., K̄_{k_t}]``: a
Hamiltonian cycle (path) of the composition meets house ``i`` in a
``k_i``-path factor of ``H_i``, and shrinking those paths leaves a
Hamiltonian cycle (path) of the extension.  Conversely any such cycle (path)
of the extension re-expands by substituting path factors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .composition import Composition
from .digraph import Digraph, bits, complement_components, is_semicomplete, is_strong
from .errors import PreconditionError, ScaleError, ValidationError
from .factors import (
    PathCycleSubdigraph,
    cycle_factor,
    cycle_subdigraph_with_lower_bounds,
    exact_usage_path_cycle_factor,
    one_path_cycle_factor,
    path_cover_number,
    path_factor,
)

HAM_BOUND = 14

# How often merging had to fall back to exhaustive search (diagnostics only).
fallback_count = {"cycle": 0, "path": 0}


@dataclass(frozen=True)
class ShrinkResult:
    extension: Composition
    shrunk_paths: tuple[tuple[int, ...], ...]  # extension vertex -> original vertex sequence
    factor: PathCycleSubdigraph  # the shrunk factor, on extension vertices
    kept: tuple[int, ...]  # original index of each extension house

    def expand_sequence(self, seq: Sequence[int]) -> list[int]:
        out = []
        for v in seq:
            out.extend(self.shrunk_paths[v])
        return out


def _check_scale(n: int) -> None:
    if n > HAM_BOUND:
        raise ScaleError(f"Hamiltonicity search limited to n <= {HAM_BOUND} (got {n})")


# -- shrinking ------------------------------------------------------------------


def _pieces(seq: Sequence[int], house_of, closed: bool) -> list[list[int]]:
    """Maximal runs of consecutive vertices inside one house."""
    seq = list(seq)
    if closed:
        k = next((k for k in range(len(seq)) if house_of(seq[k - 1]) != house_of(seq[k])), None)
        if k is None:
            raise ValidationError(f"cycle {seq} lies inside one house and cannot be shrunk")
        seq = seq[k:] + seq[:k]
    runs = [[seq[0]]]
    for v in seq[1:]:
        if house_of(v) == house_of(runs[-1][-1]):
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def shrink_factor(C: Composition, F: PathCycleSubdigraph) -> ShrinkResult:
    """Contract every maximal house-internal run of ``F`` to one vertex of an extension.

    Houses that ``F`` misses are dropped from the quotient.
    """
    D = C.expanded
    F.validate(D)
    if not F.elements:
        raise ValidationError("cannot shrink an empty subdigraph")
    house_of = C.vertex_map.house_of
    runs_per_element = [(_pieces(p, house_of, False), False) for p in F.paths]
    runs_per_element += [(_pieces(c, house_of, True), True) for c in F.cycles]
    per_house: dict[int, list[tuple[int, ...]]] = {}
    for runs, _ in runs_per_element:
        for r in runs:
            per_house.setdefault(house_of(r[0]), []).append(tuple(r))
    kept = tuple(sorted(per_house))
    if len(kept) < 2:
        raise ValidationError("shrunk subdigraph touches fewer than two houses")
    for i in kept:
        per_house[i].sort()
    new_index = {}
    shrunk = []
    for i in kept:
        for run in per_house[i]:
            new_index[run] = len(shrunk)
            shrunk.append(run)
    quotient = C.quotient.induced(list(kept))
    ext = Composition.extension(quotient, [len(per_house[i]) for i in kept])
    paths, cycles = [], []
    for runs, closed in runs_per_element:
        seq = [new_index[tuple(r)] for r in runs]
        (cycles if closed else paths).append(seq)
    Fs = PathCycleSubdigraph.make(paths, cycles)
    Fs.validate(ext.expanded)
    return ShrinkResult(ext, tuple(shrunk), Fs, kept)


# -- exhaustive fallbacks (depth-first, independent of the kernels) -----------------


def _dfs_ham_path(D: Digraph, mask: int) -> list[int] | None:
    """Hamiltonian path of ``D[mask]``, least start vertex first."""
    size = mask.bit_count()
    path: list[int] = []

    def go(v, used):
        path.append(v)
        if len(path) == size:
            return True
        for w in bits(D.out[v] & mask & ~used):
            if go(w, used | (1 << w)):
                return True
        path.pop()
        return False

    for s in bits(mask):
        if go(s, 1 << s):
            return path
    return None


def _dfs_cycle_on(D: Digraph, mask: int) -> list[int] | None:
    """Hamiltonian cycle of ``D[mask]`` starting at its least vertex."""
    size = mask.bit_count()
    if size < 2:
        return None
    s = (mask & -mask).bit_length() - 1
    path = [s]

    def go(v, used):
        if len(path) == size:
            return (D.out[v] >> s) & 1 == 1
        for w in bits(D.out[v] & mask & ~used):
            path.append(w)
            if go(w, used | (1 << w)):
                return True
            path.pop()
        return False

    return path if go(s, 1 << s) else None


def _cycle_containing(D: Digraph, required: int) -> list[int] | None:
    """A cycle through every vertex of ``required``, on as few vertices as possible."""
    rest = D.full_mask & ~required
    extras = list(bits(rest))
    for k in range(len(extras) + 1):
        for combo in itertools.combinations(extras, k):
            mask = required
            for v in combo:
                mask |= 1 << v
            cyc = _dfs_cycle_on(D, mask)
            if cyc is not None:
                return cyc
    return None


# -- merging in extensions ------------------------------------------------------------


def _merge_two_cycles(D: Digraph, a: list[int], b: list[int]) -> list[int] | None:
    p, q = len(a), len(b)
    for i in range(p):
        ai, an = a[i], a[(i + 1) % p]
        for j in range(q):
            bj, bn = b[j], b[(j + 1) % q]
            if D.has_arc(ai, bn) and D.has_arc(bj, an):
                return a[: i + 1] + b[j + 1:] + b[: j + 1] + a[i + 1:]
    return None


def _merge_path_cycle(D: Digraph, path: list[int], cyc: list[int]) -> list[int] | None:
    q = len(cyc)
    rotations = [cyc[j + 1:] + cyc[: j + 1] for j in range(q)]  # starts at c_{j+1}, ends at c_j
    for r in range(len(path) - 1):
        for rot in rotations:
            if D.has_arc(path[r], rot[0]) and D.has_arc(rot[-1], path[r + 1]):
                return path[: r + 1] + rot + path[r + 1:]
    for rot in rotations:
        if D.has_arc(rot[-1], path[0]):
            return rot + path
        if D.has_arc(path[-1], rot[0]):
            return path + rot
    return None


def _merge_cycles(D: Digraph, cycles: list[list[int]]) -> list[int] | None:
    cycles = [list(c) for c in cycles]
    while len(cycles) > 1:
        for x, y in itertools.combinations(range(len(cycles)), 2):
            merged = _merge_two_cycles(D, cycles[x], cycles[y])
            if merged is not None:
                cycles[x] = merged
                del cycles[y]
                break
        else:
            return None
    return cycles[0]


def _rotate_min(cycle: Sequence[int]) -> list[int]:
    k = list(cycle).index(min(cycle))
    return list(cycle[k:]) + list(cycle[:k])


def merge_cycle_subdigraph(Q0: Composition, F: PathCycleSubdigraph) -> list[int]:
    """One cycle of the strong extension ``Q0`` containing every vertex of ``F``.

    Cycles are merged pairwise at crossing arcs ``a_i -> b_(j+1)``, ``b_j -> a_(i+1)``;
    if no merge applies, an exhaustive search finds a smallest cycle through ``V(F)``.
    """
    if not Q0.is_extension:
        raise PreconditionError("merge_cycle_subdigraph expects an extension")
    D = Q0.expanded
    if not is_strong(D):
        raise PreconditionError("merge_cycle_subdigraph expects a strong extension")
    if F.paths:
        raise ValidationError("expected a cycle subdigraph (no paths)")
    F.validate(D)
    if not F.cycles:
        raise ValidationError("cannot merge an empty cycle subdigraph")
    return _rotate_min(_merge_cycles_in(D, F))


def _merge_cycles_in(D: Digraph, F: PathCycleSubdigraph) -> list[int]:
    merged = _merge_cycles(D, [list(c) for c in F.cycles])
    if merged is None:
        fallback_count["cycle"] += 1
        merged = _cycle_containing(D, F.vertex_mask)
        if merged is None:
            raise PreconditionError("no cycle contains all vertices of the subdigraph")
    return merged


def _merge_path_factor(D: Digraph, F: PathCycleSubdigraph) -> list[int] | None:
    """Hamiltonian path from a 1-path-cycle factor of an extended semicomplete digraph."""
    path = list(F.paths[0])
    pending = [list(c) for c in F.cycles]
    while pending:
        for k, c in enumerate(pending):
            merged = _merge_path_cycle(D, path, c)
            if merged is not None:
                path = merged
                del pending[k]
                break
        else:
            fallback_count["path"] += 1
            return _dfs_ham_path(D, D.full_mask)
    return path


def extension_ham(Q0: Composition) -> tuple[list[int] | None, list[int] | None]:
    """Hamiltonian path and cycle of an extension, each ``None`` when absent."""
    if not Q0.is_extension:
        raise PreconditionError("extension_ham expects arcless houses")
    return _extension_ham(Q0.quotient, Q0.orders)


@lru_cache(maxsize=None)
def _extension_ham(quotient: Digraph, orders: tuple[int, ...]):
    Q0 = Composition.extension(quotient, orders)
    D = Q0.expanded
    _check_scale(D.n)
    path = cycle = None
    F = one_path_cycle_factor(D)
    if F is not None:
        path = _merge_path_factor(D, F)
    if is_strong(D):
        Fc = cycle_factor(D)
        if Fc is not None:
            cycle = _rotate_min(_merge_cycles_in(D, Fc))
    return path, cycle


# -- substitution of house path factors ---------------------------------------------------


def _substitute(C: Composition, seqs: Sequence[Sequence[int]], ext_vertex_map) -> list[list[int]]:
    """Replace the ``j``-th visit of house ``i`` (across all of ``seqs``) by path ``j`` of a path factor of ``H_i``."""
    counts = [0] * C.t
    for seq in seqs:
        for v in seq:
            counts[ext_vertex_map.house_of(v)] += 1
    factors = [path_factor(C.houses[i], counts[i]) if counts[i] else [] for i in range(C.t)]
    offs = C.vertex_map.offsets
    used = [0] * C.t
    result = []
    for seq in seqs:
        out = []
        for v in seq:
            i = ext_vertex_map.house_of(v)
            out.extend(offs[i] + x for x in factors[i][used[i]])
            used[i] += 1
        result.append(out)
    return result


def _validate_cycle(D: Digraph, cyc: Sequence[int]) -> None:
    if sorted(cyc) != list(range(D.n)):
        raise AssertionError(f"not spanning: {cyc}")
    for u, v in zip(cyc, list(cyc[1:]) + [cyc[0]]):
        if not D.has_arc(u, v):
            raise AssertionError(f"({u}, {v}) missing in {cyc}")


def _validate_path(D: Digraph, path: Sequence[int]) -> None:
    if sorted(path) != list(range(D.n)):
        raise AssertionError(f"not spanning: {path}")
    for u, v in zip(path, path[1:]):
        if not D.has_arc(u, v):
            raise AssertionError(f"({u}, {v}) missing in {path}")


def house_pcs(C: Composition) -> tuple[int, ...]:
    return tuple(path_cover_number(h) for h in C.houses)


@lru_cache(maxsize=None)
def _extension_cycle_with_bounds(quotient: Digraph, orders: tuple[int, ...], bounds: tuple[int, ...]):
    Q0 = Composition.extension(quotient, orders)
    F = cycle_subdigraph_with_lower_bounds(Q0, bounds)
    if F is None:
        return None
    return tuple(_rotate_min(_merge_cycles_in(Q0.expanded, F)))


def ham_cycle_with_reason(C: Composition) -> tuple[list[int] | None, str | None]:
    """Hamiltonian cycle of ``expand(C)`` or ``(None, reason)``."""
    D = C.expanded
    _check_scale(D.n)
    if not is_semicomplete(C.quotient):
        cyc = _dfs_cycle_on(D, D.full_mask) if D.n >= 2 else None
        return (cyc, None) if cyc else (None, "no Hamiltonian cycle (exhaustive search)")
    if not is_strong(D):
        return None, "not strong"
    pcs = house_pcs(C)
    ext_cycle = _extension_cycle_with_bounds(C.quotient, C.orders, pcs)
    if ext_cycle is None:
        return None, f"no cycle subdigraph of the extension covers pc(H_i) = {list(pcs)} vertices per house"
    cyc = _rotate_min(_substitute(C, [ext_cycle], C.vertex_map)[0])
    _validate_cycle(D, cyc)
    return cyc, None


def ham_cycle(C: Composition) -> list[int] | None:
    return ham_cycle_with_reason(C)[0]


def _check_one_path_factor(C: Composition, F: PathCycleSubdigraph) -> None:
    D = C.expanded
    F.validate(D)
    if len(F.paths) != 1 or not F.is_spanning(D):
        raise PreconditionError("expected a spanning 1-path-cycle factor")
    for comp in complement_components(D):
        cm = 0
        for v in comp:
            cm |= 1 << v
        for el in F.elements:
            em = 0
            for v in el:
                em |= 1 << v
            if em & ~cm == 0:
                raise PreconditionError(
                    f"element {list(el)} lies inside the complement component {list(comp)}"
                )


def ham_path_from_factor(C: Composition, F: PathCycleSubdigraph) -> list[int]:
    """Hamiltonian path of ``expand(C)`` from a suitable 1-path-cycle factor.

    No element of ``F`` may lie inside one complement component.  The factor is
    shrunk to an extension, merged into a Hamiltonian path there and re-expanded.
    """
    _check_one_path_factor(C, F)
    D = C.expanded
    try:
        sr = shrink_factor(C, F)
    except ValidationError:
        # a cycle inside one house spanning several complement components
        path = ham_path(C)
        if path is None:
            raise PreconditionError("no Hamiltonian path despite the factor") from None
        return path
    ext_path = _merge_path_factor(sr.extension.expanded, sr.factor)
    path = sr.expand_sequence(ext_path)
    _validate_path(D, path)
    return path


@lru_cache(maxsize=None)
def _usage_factor(quotient: Digraph, orders: tuple[int, ...], pcs: tuple[int, ...]):
    """Least usage vector ``pc(H_i) <= k_i <= n_i`` whose extension has a 1-path-cycle factor."""
    for k in itertools.product(*(range(p, n + 1) for p, n in zip(pcs, orders))):
        F = exact_usage_path_cycle_factor(quotient, k)
        if F is not None:
            return k, F
    return None


def ham_path_with_reason(C: Composition) -> tuple[list[int] | None, str | None]:
    D = C.expanded
    _check_scale(D.n)
    if not is_semicomplete(C.quotient):
        path = _dfs_ham_path(D, D.full_mask)
        return (path, None) if path else (None, "no Hamiltonian path (exhaustive search)")
    pcs = house_pcs(C)
    found = _usage_factor(C.quotient, C.orders, pcs)
    if found is None:
        return None, f"no usage vector pc(H_i) <= k_i <= n_i admits a 1-path-cycle factor of the extension"
    k, Fk = _ext_path_for_usage(C.quotient, *found)
    vm = Composition.extension(C.quotient, k).vertex_map
    path = _substitute(C, [Fk], vm)[0]
    _validate_path(D, path)
    return path, None


@lru_cache(maxsize=None)
def _ext_path_for_usage(quotient: Digraph, k: tuple[int, ...], F: PathCycleSubdigraph):
    ext = Composition.extension(quotient, k).expanded
    return k, tuple(_merge_path_factor(ext, F))


def ham_path(C: Composition) -> list[int] | None:
    return ham_path_with_reason(C)[0]
