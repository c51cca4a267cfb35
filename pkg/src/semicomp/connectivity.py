"""Separators and vertex connectivity of compositions."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .composition import Composition, is_in_T1
from .digraph import Digraph, bits, complement_components, is_semicomplete, is_strong, is_strong_mask, to_mask
from .errors import PreconditionError, ScaleError, TheoremViolation, ValidationError

SEPARATOR_BOUND = 12


@dataclass(frozen=True)
class SeparatorReport:
    separator: tuple[int, ...]
    is_minimal: bool
    complement_parts_covered: tuple[int, ...] | None  # None when S is not a union of parts


def vertex_connectivity(D: Digraph) -> int:
    """Least size of a separator; ``n - 1`` if there is none, 0 if ``D`` is not strong.

    Minimum over ordered non-arcs ``(x, y)`` of the least x-y vertex cut.
    """
    if not is_strong(D):
        return 0
    best = max(D.n - 1, 0)
    out = list(D.out)
    for x in range(D.n):
        for y in bits(D.full_mask & ~D.out[x] & ~(1 << x)):
            best = min(best, kernels.min_vertex_cut(out, D.n, x, y))
    return best


def _parts_covered(mask: int, parts: list[int]) -> tuple[int, ...] | None:
    covered = []
    for k, p in enumerate(parts):
        hit = mask & p
        if hit == p:
            covered.append(k)
        elif hit:
            return None
    return tuple(covered)


def minimal_separators(D: Digraph, bound: int = SEPARATOR_BOUND) -> list[SeparatorReport]:
    """Every inclusion-minimal separator of a strong digraph, ordered by (size, vertices)."""
    if D.n > bound:
        raise ScaleError(f"separator enumeration limited to n <= {bound} (got {D.n})")
    if not is_strong(D):
        raise PreconditionError("minimal separators are defined here for strong digraphs")
    parts = [to_mask(c) for c in complement_components(D)]
    masks = kernels.minimal_separators(list(D.out), list(D.inn), D.n)
    reports = [SeparatorReport(tuple(bits(m)), True, _parts_covered(m, parts)) for m in masks]
    reports.sort(key=lambda r: (len(r.separator), r.separator))
    return reports


@dataclass(frozen=True)
class SeparatorVerdict:
    hypothesis_holds: bool
    hypothesis_note: str | None
    holds: bool
    separators_checked: int
    violation: tuple | None  # (separator, kind, witness)


def _structure_hypothesis(C: Composition) -> str | None:
    if not is_semicomplete(C.quotient):
        return "quotient is not semicomplete"
    if not is_strong(C.expanded):
        return "expansion is not strong"
    if is_in_T1(C.quotient):
        return "quotient belongs to T1"
    return None


def check_separator_structure(C: Composition, bound: int = SEPARATOR_BOUND) -> SeparatorVerdict:
    """Check that minimal separators are unions of complement components adjacent to everything else.

    When the hypothesis fails the check still runs, and the verdict says so.
    """
    D = C.expanded
    note = _structure_hypothesis(C)
    if note == "expansion is not strong":
        return SeparatorVerdict(False, note, True, 0, None)
    parts = [to_mask(c) for c in complement_components(D)]
    adj = [D.out[v] | D.inn[v] for v in range(D.n)]
    reports = minimal_separators(D, bound)
    for r in reports:
        s = to_mask(r.separator)
        if r.complement_parts_covered is None:
            comp = next(k for k, p in enumerate(parts) if s & p and s & p != p)
            return SeparatorVerdict(note is None, note, False, len(reports), (r.separator, "splits-component", tuple(bits(parts[comp]))))
        outside = D.full_mask & ~s
        for v in r.separator:
            if outside & ~adj[v]:
                w = next(bits(outside & ~adj[v]))
                return SeparatorVerdict(note is None, note, False, len(reports), (r.separator, "non-adjacent", (v, w)))
    return SeparatorVerdict(note is None, note, True, len(reports), None)


@dataclass(frozen=True)
class HouseDeletionVerdict:
    hypothesis_holds: bool
    hypothesis_note: str | None
    before: int
    after: int

    @property
    def preserved(self) -> bool:
        return self.after >= self.before


def delete_house_arcs(C: Composition, i: int) -> Composition:
    houses = list(C.houses)
    houses[i] = Digraph.empty(houses[i].n)
    return Composition(C.quotient, tuple(houses))


def check_house_arc_deletion(C: Composition, i: int) -> HouseDeletionVerdict:
    """Connectivity before and after deleting every arc inside house ``i``."""
    if not 0 <= i < C.t:
        raise ValidationError(f"house index {i} outside 0..{C.t - 1}")
    note = _structure_hypothesis(C)
    if note is None:
        comps = {to_mask(c) for c in complement_components(C.expanded)}
        if C.house_masks[i] not in comps:
            note = f"house {i} is not a single complement component"
    before = vertex_connectivity(C.expanded)
    after = vertex_connectivity(delete_house_arcs(C, i).expanded)
    return HouseDeletionVerdict(note is None, note, before, after)


def two_non_separating_vertices(C: Composition) -> tuple[int, int]:
    """Two vertices whose individual deletion leaves ``expand(C)`` strong.

    Two vertices of a house with at least two vertices always work (the quotient
    is unchanged); with trivial houses the pair is found by search.
    """
    D = C.expanded
    if D.n < 4:
        raise PreconditionError("need at least 4 vertices")
    if not is_strong(D):
        raise PreconditionError("expansion is not strong")
    for i, h in enumerate(C.houses):
        if h.n >= 2:
            v = C.vertex_map.offsets[i]
            return v, v + 1
    good = [v for v in range(D.n) if is_strong_mask(D, D.full_mask & ~(1 << v))]
    if len(good) < 2:
        raise TheoremViolation(f"fewer than two non-separating vertices in {D!r}")
    return good[0], good[1]
