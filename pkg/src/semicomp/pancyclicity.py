"""Pancyclicity of Hamiltonian compositions via the triangular obstruction."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .composition import Composition
from .digraph import Digraph, bits, complement_components
from .errors import PreconditionError, ScaleError
from .hamiltonicity import ham_cycle

PANCYCLIC_BOUND = 12


@dataclass(frozen=True)
class TriangularPartition:
    """``V0 => V1 => V2 => V0``: all arcs between parts run forward, none backward."""

    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def sizes(self) -> tuple[int, int, int]:
        return tuple(len(p) for p in self.parts)

    def validate(self, D: Digraph) -> None:
        masks = [sum(1 << v for v in p) for p in self.parts]
        if any(m == 0 for m in masks) or sum(masks) != D.full_mask or masks[0] & masks[1] or masks[1] & masks[2] or masks[0] & masks[2]:
            raise PreconditionError("parts must partition the vertices into non-empty sets")
        for k in range(3):
            if not _dominates(D, masks[k], masks[(k + 1) % 3]):
                raise PreconditionError(f"V{k} does not dominate V{(k + 1) % 3}")


def _dominates(D: Digraph, a: int, b: int) -> bool:
    """``a => b``: every arc from ``a`` to ``b`` present and none from ``b`` to ``a``."""
    return all(D.out[u] & b == b for u in bits(a)) and all(D.out[w] & a == 0 for w in bits(b))


def _has_two_arc_path(D: Digraph, mask: int) -> bool:
    """``D[mask]`` contains a path on three distinct vertices."""
    for v in bits(mask):
        ins = D.inn[v] & mask
        outs = D.out[v] & mask
        if ins and outs and (ins | outs).bit_count() >= 2:
            return True
    return False


def _independent_sets(D: Digraph) -> list[int]:
    adj = [D.out[v] | D.inn[v] for v in range(D.n)]
    found = []

    def grow(mask, start):
        found.append(mask)
        for v in range(start, D.n):
            if not adj[v] & mask:
                grow(mask | (1 << v), v + 1)

    for v in range(D.n):
        grow(1 << v, v + 1)
    return found


def triangular_obstructions(D: Digraph) -> list[TriangularPartition]:
    """Every triangular partition with two independent parts that meets the size/path clause.

    The clause is: all parts of equal size, or (when ``n >= 5``) no part contains
    a path on three vertices.  With ``n = 4`` that second clause cannot force a
    missing cycle length, so it is not used there.
    """
    n = D.n
    full = D.full_mask
    ind = _independent_sets(D)
    seen = set()
    out = []
    for a in ind:
        for b in ind:
            if a & b:
                continue
            w = full & ~(a | b)
            if not w:
                continue
            # the reverse orientation is met when the loop reaches (b, a)
            if not (_dominates(D, a, b) and _dominates(D, b, w) and _dominates(D, w, a)):
                continue
            equal = a.bit_count() == b.bit_count() == w.bit_count()
            no_path = n >= 5 and not any(_has_two_arc_path(D, m) for m in (a, b, w))
            if not (equal or no_path):
                continue
            key = (min(a, b, w), frozenset((a, b, w)))
            if key in seen:
                continue
            seen.add(key)
            out.append((a, b, w))
    parts = []
    for triple in out:
        best = min(
            (triple[r:] + triple[:r] for r in range(3)),
            key=lambda t: (t[0].bit_count(), tuple(bits(t[0])), tuple(bits(t[1]))),
        )
        parts.append(TriangularPartition(tuple(tuple(bits(m)) for m in best)))
    parts.sort(key=lambda p: (len(p.parts[0]), p.parts[0], p.parts[1]))
    return parts


def _require(C: Composition) -> Digraph:
    D = C.expanded
    if D.n < 4:
        raise PreconditionError("pancyclicity test needs n >= 4")
    if D.n > PANCYCLIC_BOUND:
        raise ScaleError(f"pancyclicity search limited to n <= {PANCYCLIC_BOUND} (got {D.n})")
    if ham_cycle(C) is None:
        raise PreconditionError("composition is not Hamiltonian")
    return D


def find_obstruction(C: Composition) -> TriangularPartition | None:
    """Least obstruction by ``(|V0|, V0, V1)``, or ``None``."""
    D = _require(C)
    obs = triangular_obstructions(D)
    return obs[0] if obs else None


@dataclass(frozen=True)
class PancyclicResult:
    pancyclic: bool
    cycles: dict = field(default_factory=dict)  # length -> cycle
    obstruction: TriangularPartition | None = None
    missing: tuple[int, ...] = ()
    complement_components: int = 0

    @property
    def consistent_with_obstruction(self) -> bool:
        """No obstruction found and the decision agrees (pancyclic), or an obstruction was found."""
        return self.obstruction is not None or self.pancyclic


def is_pancyclic(C: Composition) -> PancyclicResult:
    """Obstruction if one exists, otherwise a cycle of each length ``3..n``.

    If no obstruction exists but some length is missing the result is ``False``
    with the missing lengths listed (possible only with few complement components).
    """
    D = _require(C)
    k = len(complement_components(D))
    obs = triangular_obstructions(D)
    if obs:
        return PancyclicResult(False, {}, obs[0], (), k)
    out = list(D.out)
    cycles = {}
    missing = []
    for length in range(3, D.n + 1):
        cyc = kernels.find_cycle_of_length(out, D.n, length)
        if cyc is None:
            missing.append(length)
        else:
            cycles[length] = cyc
    return PancyclicResult(not missing, cycles, None, tuple(missing), k)


def cycles_through_lengths(D: Digraph, v: int, bound: int = PANCYCLIC_BOUND) -> set[int]:
    """Every length of a cycle through ``v``."""
    if D.n > bound:
        raise ScaleError(f"cycle-length search limited to n <= {bound} (got {D.n})")
    if not 0 <= v < D.n:
        raise PreconditionError(f"vertex {v} outside 0..{D.n - 1}")
    return kernels.cycle_lengths_through(list(D.out), list(D.inn), D.n, v)
