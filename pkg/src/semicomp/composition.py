"""Semicomplete compositions ``Q = T[H_1, ..., H_t]``: build, expand, recognize."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .digraph import Digraph, bits, complement_components, is_semicomplete, to_mask
from .errors import CompositionError, PreconditionError, VertexRangeError


class VertexMap(NamedTuple):
    """Bijection between flat vertices and ``(house, local)`` pairs."""

    forward: tuple[tuple[int, int], ...]
    offsets: tuple[int, ...]

    def flat(self, house: int, local: int) -> int:
        return self.offsets[house] + local

    def house_of(self, v: int) -> int:
        return self.forward[v][0]


@dataclass(frozen=True)
class Composition:
    quotient: Digraph
    houses: tuple[Digraph, ...]

    def __post_init__(self):
        if self.quotient.n < 2:
            raise CompositionError("t must be at least 2")
        if len(self.houses) != self.quotient.n:
            raise CompositionError(
                f"quotient has {self.quotient.n} vertices but {len(self.houses)} houses given"
            )
        for i, h in enumerate(self.houses):
            if h.n < 1:
                raise CompositionError(f"house {i} has no vertices")

    @classmethod
    def of(cls, quotient: Digraph, houses: Sequence[Digraph]) -> "Composition":
        return cls(quotient, tuple(houses))

    @classmethod
    def extension(cls, quotient: Digraph, orders: Sequence[int]) -> "Composition":
        """``T[K̄_{n_1}, ..., K̄_{n_t}]``."""
        return cls(quotient, tuple(Digraph.empty(k) for k in orders))

    @property
    def t(self) -> int:
        return self.quotient.n

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(h.n for h in self.houses)

    @property
    def order(self) -> int:
        return sum(self.orders)

    @property
    def is_extension(self) -> bool:
        return all(h.num_arcs == 0 for h in self.houses)

    @property
    def is_semicomplete(self) -> bool:
        return is_semicomplete(self.quotient)

    @cached_property
    def vertex_map(self) -> VertexMap:
        forward = []
        offsets = []
        for i, h in enumerate(self.houses):
            offsets.append(len(forward))
            forward.extend((i, j) for j in range(h.n))
        return VertexMap(tuple(forward), tuple(offsets))

    @cached_property
    def house_masks(self) -> tuple[int, ...]:
        offs = self.vertex_map.offsets
        return tuple(((1 << h.n) - 1) << offs[i] for i, h in enumerate(self.houses))

    def house_vertices(self, i: int) -> range:
        off = self.vertex_map.offsets[i]
        return range(off, off + self.houses[i].n)

    @cached_property
    def expanded(self) -> Digraph:
        return _expand(self)


def _expand(C: Composition) -> Digraph:
    offs = C.vertex_map.offsets
    hm = C.house_masks
    out = []
    for i, h in enumerate(C.houses):
        across = 0
        for p in bits(C.quotient.out[i]):
            across |= hm[p]
        for j in range(h.n):
            out.append((h.out[j] << offs[i]) | across)
    return Digraph(C.order, tuple(out))


def expand(C: Composition) -> tuple[Digraph, VertexMap]:
    """Flat digraph of ``C`` with vertices numbered house by house."""
    return C.expanded, C.vertex_map


class Recognition(NamedTuple):
    composition: Composition
    original: tuple[int, ...]  # flat vertex of the expansion -> vertex of the input digraph

    def relabel_back(self) -> list[int]:
        """``new_label`` mapping for ``expand(composition).relabel`` to reproduce the input."""
        return list(self.original)


def _uniform(D: Digraph, a: int, b: int) -> bool:
    """Arcs from part ``a`` to part ``b`` are all present or all absent."""
    first = None
    for u in bits(a):
        hit = D.out[u] & b
        if hit not in (0, b):
            return False
        state = hit == b
        if first is None:
            first = state
        elif state != first:
            return False
    return True


def recognize_with_map(D: Digraph) -> Recognition | None:
    """Finest semicomplete-composition structure of ``D``, or ``None``.

    Parts start as complement components; any two parts with non-uniform arcs
    between them must share a house, so they are merged until a fixpoint.
    """
    if D.n < 2:
        return None
    parts = [to_mask(c) for c in complement_components(D)]
    changed = True
    while changed and len(parts) > 1:
        changed = False
        for x in range(len(parts)):
            for y in range(x + 1, len(parts)):
                a, b = parts[x], parts[y]
                if not (_uniform(D, a, b) and _uniform(D, b, a)):
                    parts[x] = a | b
                    del parts[y]
                    changed = True
                    break
            if changed:
                break
    if len(parts) < 2:
        return None
    parts.sort(key=lambda m: m & -m)
    member = [list(bits(m)) for m in parts]
    houses = tuple(D.induced(vs) for vs in member)
    qarcs = []
    for x, a in enumerate(parts):
        u = member[x][0]
        for y, b in enumerate(parts):
            if x != y and D.out[u] & b:
                qarcs.append((x, y))
    quotient = Digraph.from_arcs(len(parts), qarcs)
    if not is_semicomplete(quotient):
        return None
    original = tuple(v for vs in member for v in vs)
    return Recognition(Composition(quotient, houses), original)


def recognize(D: Digraph) -> Composition | None:
    rec = recognize_with_map(D)
    return None if rec is None else rec.composition


def is_in_T1(T: Digraph) -> bool:
    """Some vertex is joined by a 2-cycle to every other vertex."""
    if not is_semicomplete(T):
        raise PreconditionError("is_in_T1 expects a semicomplete digraph")
    full = T.full_mask
    return any((T.out[u] & T.inn[u]) == full & ~(1 << u) for u in range(T.n))


def to_extension(C: Composition) -> Composition:
    """Same quotient, every house replaced by an arcless digraph of the same order."""
    if C.is_extension:
        return C
    return Composition.extension(C.quotient, C.orders)


def similar(C: Composition, x: int, y: int) -> bool:
    n = C.order
    if not (0 <= x < n and 0 <= y < n):
        raise VertexRangeError(f"vertex outside 0..{n - 1}")
    vm = C.vertex_map
    return vm.house_of(x) == vm.house_of(y)


def trivial_composition(D: Digraph) -> Composition:
    """``D`` viewed as ``D[K_1, ..., K_1]``."""
    return Composition.extension(D, [1] * D.n)
