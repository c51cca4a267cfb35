"""Brute-force ground truth and corpus generators.

Everything here works at definition level on the expanded digraph and shares
no code with the structural algorithms it is used to check.  The exhaustive
searches run on the bitmask kernels (none of which the structural side uses
for the same question).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import kernels
from .composition import Composition
from .digraph import Digraph, bits, is_strong_mask
from .errors import CorpusError, PreconditionError, ScaleError, ValidationError

MAX_CORPUS_ORDER = 12
HAM_ORACLE_BOUND = 16
SSS_ORACLE_BOUND = 8
PC_ORACLE_BOUND = 10
SEPARATOR_ORACLE_BOUND = 8


# -- corpus ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    max_quotient_order: int
    max_house_order: int
    max_total_order: int
    mode: str = "exhaustive"  # or "random"
    samples: int = 0
    seed: int = 0

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise CorpusError(f"mode must be 'exhaustive' or 'random', not {self.mode!r}")
        if self.max_quotient_order < 2:
            raise CorpusError("max_quotient_order must be at least 2")
        if self.max_house_order < 1:
            raise CorpusError("max_house_order must be at least 1")
        if not 2 <= self.max_total_order <= MAX_CORPUS_ORDER:
            raise CorpusError(f"max_total_order must lie in 2..{MAX_CORPUS_ORDER}")
        if self.mode == "random":
            if self.samples < 0:
                raise CorpusError("samples must be non-negative")
            if not 0 <= self.seed < 1 << 64:
                raise CorpusError("seed must be a 64-bit unsigned integer")


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def semicomplete_digraphs(n: int) -> list[Digraph]:
    """All labeled semicomplete digraphs on ``n`` vertices; per pair ``->``, ``<-``, ``<->``."""
    pairs = _pairs(n)
    found = []
    for choice in product(range(3), repeat=len(pairs)):
        arcs = []
        for (a, b), c in zip(pairs, choice):
            if c != 1:
                arcs.append((a, b))
            if c != 0:
                arcs.append((b, a))
        found.append(Digraph.from_arcs(n, arcs))
    return found


def all_digraphs(n: int) -> list[Digraph]:
    """All labeled loopless digraphs on ``n`` vertices, by arc bitmask over ordered pairs."""
    ordered = [(a, b) for a in range(n) for b in range(n) if a != b]
    return [
        Digraph.from_arcs(n, [p for k, p in enumerate(ordered) if (code >> k) & 1])
        for code in range(1 << len(ordered))
    ]


def _exhaustive(spec: CorpusSpec) -> Iterator[Composition]:
    houses = {k: all_digraphs(k) for k in range(1, spec.max_house_order + 1)}
    for q in range(2, spec.max_quotient_order + 1):
        quotients = semicomplete_digraphs(q)
        sizes = [o for o in product(range(1, spec.max_house_order + 1), repeat=q) if sum(o) <= spec.max_total_order]
        for T in quotients:
            for orders in sizes:
                for hs in product(*(houses[o] for o in orders)):
                    yield Composition(T, hs)


def _random_digraph(rng: random.Random, n: int) -> Digraph:
    return Digraph.from_arcs(n, [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < 0.5])


def _random(spec: CorpusSpec) -> Iterator[Composition]:
    rng = random.Random(spec.seed)
    max_q = min(spec.max_quotient_order, spec.max_total_order)
    for _ in range(spec.samples):
        while True:
            q = rng.randint(2, max_q)
            orders = [rng.randint(1, spec.max_house_order) for _ in range(q)]
            if sum(orders) <= spec.max_total_order:
                break
        arcs = []
        for a, b in _pairs(q):
            c = rng.randrange(3)
            if c != 1:
                arcs.append((a, b))
            if c != 0:
                arcs.append((b, a))
        yield Composition(Digraph.from_arcs(q, arcs), tuple(_random_digraph(rng, k) for k in orders))


def enumerate_compositions(spec: CorpusSpec) -> Iterator[Composition]:
    """Deterministic stream of semicomplete compositions within the bounds."""
    spec.validate()
    return _exhaustive(spec) if spec.mode == "exhaustive" else _random(spec)


EXHAUSTIVE_SPEC = CorpusSpec(3, 3, 7)
RANDOM_SPEC = CorpusSpec(5, 4, 10, mode="random", samples=500, seed=2024)


def standard_corpus(seed: int = RANDOM_SPEC.seed, samples: int = RANDOM_SPEC.samples, max_n: int = 10) -> Iterator[Composition]:
    """The exhaustive corpus followed by the seeded random sample, both cut at ``max_n``."""
    ex = CorpusSpec(3, 3, min(7, max_n))
    yield from enumerate_compositions(ex)
    if max_n >= 2:
        rnd = CorpusSpec(5, 4, min(10, max_n), mode="random", samples=samples, seed=seed)
        yield from enumerate_compositions(rnd)


# -- brute-force oracles ----------------------------------------------------------------------


def _check(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise ScaleError(f"{what} oracle limited to n <= {bound} (got {n})")


def bf_ham_path(D: Digraph) -> list[int] | None:
    """Hamiltonian path by exhaustive subset search, validated."""
    _check(D.n, HAM_ORACLE_BOUND, "Hamiltonian path")
    path = kernels.ham_path_search(list(D.out), list(D.inn), D.n)
    if path is not None:
        if sorted(path) != list(range(D.n)) or any(not D.has_arc(u, v) for u, v in zip(path, path[1:])):
            raise ValidationError(f"invalid Hamiltonian path certificate {path}")
    return path


def bf_ham_cycle(D: Digraph) -> list[int] | None:
    """Hamiltonian cycle by exhaustive subset search, validated."""
    _check(D.n, HAM_ORACLE_BOUND, "Hamiltonian cycle")
    cyc = kernels.ham_cycle_search(list(D.out), list(D.inn), D.n)
    if cyc is not None:
        closed = list(zip(cyc, cyc[1:] + cyc[:1]))
        if sorted(cyc) != list(range(D.n)) or any(not D.has_arc(u, v) for u, v in closed):
            raise ValidationError(f"invalid Hamiltonian cycle certificate {cyc}")
    return cyc


def bf_min_strong_spanning(D: Digraph) -> Digraph:
    """Minimum-arc strong spanning subdigraph by iterative deepening on the arc count."""
    _check(D.n, SSS_ORACLE_BOUND, "minimum strong spanning subdigraph")
    arcs = kernels.min_strong_spanning(list(D.out), list(D.inn), D.n)
    if arcs is None:
        raise PreconditionError("digraph is not strong")
    return D.spanning_subdigraph(arcs)


def _path_end_sets(D: Digraph) -> list[int]:
    # ends[mask]: vertices v such that D[mask] has a Hamiltonian path ending at v
    size = 1 << D.n
    ends = [0] * size
    for mask in range(1, size):
        if mask & (mask - 1) == 0:
            ends[mask] = mask
            continue
        e = 0
        for v in bits(mask):
            if ends[mask ^ (1 << v)] & D.inn[v]:
                e |= 1 << v
        ends[mask] = e
    return ends


def bf_pc_table(D: Digraph) -> list[int]:
    """Least number of paths partitioning each vertex subset."""
    _check(D.n, PC_ORACLE_BOUND, "path cover")
    ends = _path_end_sets(D)
    size = 1 << D.n
    pc = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        best = D.n + 1
        sub = rest
        while True:  # the part containing the lowest vertex
            part = sub | low
            if ends[part]:
                best = min(best, 1 + pc[mask ^ part])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        pc[mask] = best
    return pc


def bf_pc(D: Digraph) -> int:
    """Path covering number by exhaustive partition search."""
    if D.n == 0:
        return 0
    return bf_pc_table(D)[D.full_mask]


def bf_cycle_sets(D: Digraph) -> list[int]:
    """Vertex sets (as masks) of all cycles."""
    _check(D.n, HAM_ORACLE_BOUND, "cycle enumeration")
    table = kernels.cycle_table(list(D.out), list(D.inn), D.n)
    return [m for m in range(1 << D.n) if table[m]]


def bf_longest_cycle_sets(D: Digraph) -> list[int]:
    """Vertex sets of all longest cycles (empty if ``D`` is acyclic)."""
    sets = bf_cycle_sets(D)
    if not sets:
        return []
    top = max(m.bit_count() for m in sets)
    return [m for m in sets if m.bit_count() == top]


def bf_cycle_lengths(D: Digraph) -> set[int]:
    return {m.bit_count() for m in bf_cycle_sets(D)}


def bf_pancyclic(D: Digraph) -> bool:
    """Cycles of every length ``3..n``."""
    _check(D.n, PC_ORACLE_BOUND, "pancyclicity")
    return set(range(3, D.n + 1)) <= bf_cycle_lengths(D)


def bf_minimal_separators(D: Digraph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex sets whose deletion leaves a non-strong digraph.

    Deleting all but one vertex leaves a strong digraph, so separators are proper
    subsets with at least two vertices outside.
    """
    _check(D.n, SEPARATOR_ORACLE_BOUND, "minimal separator")
    full = D.full_mask
    seps = [m for m in range(1 << D.n) if (full & ~m).bit_count() >= 2 and not is_strong_mask(D, full & ~m)]
    minimal = [m for m in seps if not any(s != m and s & m == s for s in seps)]
    minimal.sort(key=lambda m: (m.bit_count(), m))
    return [tuple(bits(m)) for m in minimal]


def bf_build_Hk(D: Digraph, k: int) -> Digraph:
    """``D`` with ``k`` entry and ``k`` exit vertices."""
    n = D.n
    out = list(D.out) + [0] * (2 * k)
    xs = sum(1 << (n + i) for i in range(k))
    ys = sum(1 << (n + k + i) for i in range(k))
    for v in range(n):
        out[v] |= xs
    for i in range(k):
        out[n + i] = ys
        out[n + k + i] = D.full_mask
    return Digraph(n + 2 * k, tuple(out))


def bf_epsilon(D: Digraph, kmax: int = 3) -> int | None:
    """Least ``k <= kmax`` with ``H_k(D)`` Hamiltonian, or ``None``."""
    for k in range(kmax + 1):
        if bf_ham_cycle(bf_build_Hk(D, k)) is not None:
            return k
    return None


# -- factor-level characterizations ---------------------------------------------------------


def _inside_table(n: int, parts: list[int]) -> bytearray:
    # inside[m] == 1 iff the vertex set m lies within a single part
    inside = bytearray(1 << n)
    for p in parts:
        sub = p
        while sub:
            inside[sub] = 1
            sub = (sub - 1) & p
    return inside


def _parts(D: Digraph) -> list[int]:
    # complement components by brute force: merge non-adjacent pairs
    label = list(range(D.n))
    for u in range(D.n):
        for v in range(u + 1, D.n):
            if not D.has_arc(u, v) and not D.has_arc(v, u):
                a, b = label[u], label[v]
                label = [a if x == b else x for x in label]
    parts: dict[int, int] = {}
    for v, x in enumerate(label):
        parts[x] = parts.get(x, 0) | (1 << v)
    return list(parts.values())


def _good_cycle_cover_table(D: Digraph, parts: list[int]) -> bytes:
    cycles = kernels.cycle_table(list(D.out), list(D.inn), D.n)
    inside = _inside_table(D.n, parts)
    family = bytes(c & (1 - i) for c, i in zip(cycles, inside))
    return kernels.partition_table(family, D.n)


def bf_good_cycle_factor(D: Digraph, parts: list[int] | None = None) -> bool:
    """A cycle factor none of whose cycles lies inside one part.

    ``parts`` are vertex masks, by default the complement components.
    """
    _check(D.n, PC_ORACLE_BOUND, "cycle factor")
    if D.n == 0:
        return False
    return bool(_good_cycle_cover_table(D, _parts(D) if parts is None else parts)[D.full_mask])


def bf_good_path_cycle_factor(D: Digraph, parts: list[int] | None = None) -> bool:
    """A 1-path-cycle factor whose path and cycles each leave every part (default: complement components)."""
    _check(D.n, PC_ORACLE_BOUND, "path-cycle factor")
    if D.n == 0:
        return False
    if parts is None:
        parts = _parts(D)
    covers = _good_cycle_cover_table(D, parts)
    ends = kernels.path_ends_table(list(D.out), list(D.inn), D.n)
    inside = _inside_table(D.n, parts)
    full = D.full_mask
    return any(ends[m] and not inside[m] and covers[full ^ m] for m in range(1, 1 << D.n))


def bf_extension_cycle_cover(quotient: Digraph, orders: tuple[int, ...], bounds: tuple[int, ...]) -> bool:
    """Some cycle subdigraph of the extension covers at least ``bounds[i]`` vertices of house ``i``."""
    n = sum(orders)
    _check(n, PC_ORACLE_BOUND, "extension cycle cover")
    D = Composition.extension(quotient, orders).expanded
    covers = kernels.partition_table(kernels.cycle_table(list(D.out), list(D.inn), n), n)
    masks, off = [], 0
    for k in orders:
        masks.append(((1 << k) - 1) << off)
        off += k
    return any(
        covers[m] and all((m & h).bit_count() >= b for h, b in zip(masks, bounds)) for m in range(1 << n)
    )


def bf_max_k_path_profiles(D: Digraph, house_masks: tuple[int, ...], pc: list[int] | None = None) -> dict[int, set]:
    """For each ``k`` in ``1..n``: the per-house profiles of all maximum k-path subdigraphs.

    A vertex set carries a k-path subdigraph exactly when it splits into at most
    ``k`` paths (paths may be single vertices; a set of at least ``k`` vertices
    then splits into exactly ``k``).
    """
    if pc is None:
        pc = bf_pc_table(D)
    n = D.n
    best = [0] * (n + 1)
    for m in range(1, 1 << n):
        p = pc[m]
        if m.bit_count() > best[p]:
            best[p] = m.bit_count()
    for k in range(1, n + 1):
        best[k] = max(best[k], best[k - 1])
    out: dict[int, set] = {k: set() for k in range(1, n + 1)}
    for m in range(1, 1 << n):
        s, p = m.bit_count(), pc[m]
        ks = [k for k in range(max(p, 1), n + 1) if best[k] == s]
        if ks:
            prof = tuple((m & h).bit_count() for h in house_masks)
            for k in ks:
                out[k].add(prof)
    return out
