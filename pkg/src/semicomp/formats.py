"""Text formats: ``.dg`` digraphs and ``.comp`` compositions.

``.dg``::

    n 3
    0 1
    1 2

``.comp``::

    t 2
    tarcs
    0 1
    1 0
    end
    house 0 2
    0 1
    end
    house 1 1
    end

``#`` starts a comment line; blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .composition import Composition
from .digraph import Digraph
from .errors import FormatError, ValidationError


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def _arc(tokens, lineno, n, seen):
    if len(tokens) != 2:
        raise FormatError("an arc line needs exactly two vertices", lineno)
    u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise FormatError(f"arc ({u}, {v}) outside 0..{n - 1}", lineno)
    if u == v:
        raise FormatError(f"self-loop at {u}", lineno)
    if (u, v) in seen:
        raise FormatError(f"duplicate arc ({u}, {v})", lineno)
    seen.add((u, v))
    return u, v


def parse_dg(text: str) -> Digraph:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty file: expected 'n <N>'", 1)
    lineno, head = lines[0]
    if head[0] != "n" or len(head) != 2:
        raise FormatError("first line must be 'n <N>'", lineno)
    n = _int(head[1], lineno)
    if n < 0:
        raise FormatError("vertex count must be non-negative", lineno)
    seen: set = set()
    arcs = [_arc(tokens, ln, n, seen) for ln, tokens in lines[1:]]
    return Digraph.from_arcs(n, arcs)


def format_dg(D: Digraph, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    out.append(f"n {D.n}")
    out.extend(f"{u} {v}" for u, v in D.arcs)
    return "\n".join(out) + "\n"


def parse_comp(text: str) -> Composition:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty file: expected 't <t>'", 1)
    lineno, head = lines[0]
    if head[0] != "t" or len(head) != 2:
        raise FormatError("first line must be 't <t>'", lineno)
    t = _int(head[1], lineno)
    if t < 2:
        raise FormatError("t must be at least 2", lineno)
    pos = 1
    quotient_arcs = None
    houses: dict[int, Digraph] = {}
    while pos < len(lines):
        lineno, tokens = lines[pos]
        pos += 1
        if tokens == ["tarcs"]:
            if quotient_arcs is not None:
                raise FormatError("second 'tarcs' block", lineno)
            n, size = t, None
        elif tokens[0] == "house" and len(tokens) == 3:
            i, size = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not 0 <= i < t:
                raise FormatError(f"house index {i} outside 0..{t - 1}", lineno)
            if i in houses:
                raise FormatError(f"house {i} given twice", lineno)
            if size < 1:
                raise FormatError(f"house {i} must have at least one vertex", lineno)
            n = size
        else:
            raise FormatError(f"expected 'tarcs' or 'house <i> <n_i>', got {' '.join(tokens)!r}", lineno)
        seen: set = set()
        arcs = []
        while True:
            if pos >= len(lines):
                raise FormatError("block not closed by 'end'", lineno)
            ln, body = lines[pos]
            pos += 1
            if body == ["end"]:
                break
            arcs.append(_arc(body, ln, n, seen))
        if size is None:
            quotient_arcs = arcs
        else:
            houses[i] = Digraph.from_arcs(size, arcs)
    if quotient_arcs is None:
        raise FormatError("missing 'tarcs' block", lines[-1][0])
    missing = [i for i in range(t) if i not in houses]
    if missing:
        raise FormatError(f"missing house block(s): {missing}", lines[-1][0])
    try:
        return Composition(Digraph.from_arcs(t, quotient_arcs), tuple(houses[i] for i in range(t)))
    except ValidationError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def format_comp(C: Composition, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    out.append(f"t {C.t}")
    out.append("tarcs")
    out.extend(f"{u} {v}" for u, v in C.quotient.arcs)
    out.append("end")
    for i, h in enumerate(C.houses):
        out.append(f"house {i} {h.n}")
        out.extend(f"{u} {v}" for u, v in h.arcs)
        out.append("end")
    return "\n".join(out) + "\n"


def sniff(text: str) -> str:
    """``'dg'`` or ``'comp'`` from the first non-comment token."""
    for lineno, tokens in _lines(text):
        if tokens[0] == "n":
            return "dg"
        if tokens[0] == "t":
            return "comp"
        raise FormatError("file must start with 'n <N>' (.dg) or 't <t>' (.comp)", lineno)
    raise FormatError("empty file", 1)


def read_any(path: str | Path) -> Digraph | Composition:
    text = Path(path).read_text()
    return parse_dg(text) if sniff(text) == "dg" else parse_comp(text)


def compact(C: Composition) -> str:
    """One-line serialization used as an instance key in reports."""
    def arcs(D):
        return ",".join(f"{u}{v}" if D.n <= 10 else f"{u}-{v}" for u, v in D.arcs)

    houses = " ".join(f"{h.n}[{arcs(h)}]" for h in C.houses)
    return f"T{C.t}[{arcs(C.quotient)}] {houses}"
