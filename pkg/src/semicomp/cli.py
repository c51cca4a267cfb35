"""Command-line front end.

Exit status: 0 success or pass, 1 verified absence, 2 invalid input or
unmet hypothesis, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .composition import Composition, is_in_T1, recognize
from .connectivity import minimal_separators, vertex_connectivity
from .digraph import Digraph, complement_components, is_semicomplete, is_strong
from .errors import PreconditionError, ScaleError, SemicompError, TheoremViolation
from .formats import format_comp, format_dg, read_any
from .hamiltonicity import ham_cycle_with_reason, ham_path_with_reason
from .pancyclicity import is_pancyclic
from .spanning import (
    acyclic_failure_reason,
    acyclic_spanning,
    ear_decomposition,
    epsilon,
    smallest_strong_spanning,
    strong_spanning_tournament,
)
from .verify import THEOREM_IDS, CampaignConfig, run_all

EXIT_OK, EXIT_ABSENT, EXIT_INVALID, EXIT_FAILED = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _load(path: str) -> Digraph | Composition:
    try:
        return read_any(path)
    except OSError as exc:
        raise _Exit(EXIT_INVALID, f"error: cannot read {path}: {exc.strerror}") from None


def _digraph(path: str) -> Digraph:
    obj = _load(path)
    return obj.expanded if isinstance(obj, Composition) else obj


def _composition(path: str) -> Composition:
    obj = _load(path)
    if isinstance(obj, Composition):
        if not is_semicomplete(obj.quotient):
            raise _Exit(EXIT_INVALID, "error: quotient is not semicomplete")
        return obj
    C = recognize(obj)
    if C is None:
        raise _Exit(EXIT_INVALID, "error: digraph is not a semicomplete composition")
    return C


def _any_composition(path: str) -> Composition:
    """A .comp file as given (any quotient), or a recognized .dg file."""
    obj = _load(path)
    return obj if isinstance(obj, Composition) else _composition(path)


def _seq(vs: Sequence[int]) -> str:
    return " ".join(map(str, vs))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise _Exit(EXIT_INVALID, f"error: expected vertex indices, got {text!r}") from None


# -- subcommands ------------------------------------------------------------------------------


def cmd_expand(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, Composition):
        raise _Exit(EXIT_INVALID, "error: expand needs a .comp file")
    print(format_dg(obj.expanded), end="")
    return EXIT_OK


def cmd_decompose(args) -> int:
    obj = _load(args.file)
    D = obj.expanded if isinstance(obj, Composition) else obj
    C = recognize(D)
    if C is None:
        print("ABSENT: not a semicomplete composition")
        return EXIT_ABSENT
    print(format_comp(C), end="")
    return EXIT_OK


def _check_certificate(D: Digraph, seq: list[int], closed: bool) -> str | None:
    kind = "cycle" if closed else "path"
    if sorted(seq) != list(range(D.n)):
        return f"{kind} does not visit every vertex exactly once"
    pairs = list(zip(seq, seq[1:] + seq[:1] if closed else seq[1:]))
    bad = [p for p in pairs if not D.has_arc(*p)]
    return f"{kind} uses non-arc {bad[0]}" if bad else None


def cmd_analyze(args) -> int:
    obj = _load(args.file)
    D = obj.expanded if isinstance(obj, Composition) else obj
    C = obj if isinstance(obj, Composition) else recognize(D)
    strong = is_strong(D)
    print(f"vertices: {D.n}")
    print(f"arcs: {D.num_arcs}")
    print(f"strong: {str(strong).lower()}")
    print(f"semicomplete: {str(is_semicomplete(D)).lower()}")
    print(f"vertex connectivity: {vertex_connectivity(D)}")
    comps = complement_components(D)
    print(f"complement components: {len(comps)}: " + " | ".join(_seq(c) for c in comps))
    if C is None:
        print("composition: none")
    else:
        print(f"composition: t={C.t} orders={list(C.orders)}")
        if is_semicomplete(C.quotient):
            print(f"quotient in T1: {str(is_in_T1(C.quotient)).lower()}")
    status = EXIT_OK
    for kind, text in (("cycle", args.cycle), ("path", args.path)):
        if text is None:
            continue
        err = _check_certificate(D, _ints(text), kind == "cycle")
        print(f"{kind} certificate: {'valid' if err is None else 'INVALID: ' + err}")
        if err is not None:
            status = EXIT_FAILED
    return status


def _ham(args, closed: bool) -> int:
    C = _composition(args.file)
    seq, reason = (ham_cycle_with_reason if closed else ham_path_with_reason)(C)
    if seq is None:
        print(f"ABSENT: {reason}")
        return EXIT_ABSENT
    print(_seq(seq))
    return EXIT_OK


def cmd_hampath(args) -> int:
    return _ham(args, closed=False)


def cmd_hamcycle(args) -> int:
    return _ham(args, closed=True)


def cmd_pancyclic(args) -> int:
    C = _composition(args.file)
    res = is_pancyclic(C)
    if res.pancyclic:
        print("PANCYCLIC")
        for length in sorted(res.cycles):
            print(f"{length}: {_seq(res.cycles[length])}")
        return EXIT_OK
    if res.obstruction is not None:
        print("OBSTRUCTION")
        for k, part in enumerate(res.obstruction.parts):
            print(f"V{k}: {_seq(part)}")
    else:
        print(f"NOT PANCYCLIC: no cycle of length {', '.join(map(str, res.missing))}")
    return EXIT_ABSENT


def cmd_ssss(args) -> int:
    C = _composition(args.file)
    R = smallest_strong_spanning(C)
    eps = epsilon(C.expanded)
    print(format_dg(R, [f"smallest strong spanning subdigraph: n={R.n} epsilon={eps} arcs={R.num_arcs}"]), end="")
    return EXIT_OK


def cmd_acyclic_span(args) -> int:
    C = _any_composition(args.file)
    res = acyclic_spanning(C, args.case)
    if res is None:
        print(f"ABSENT: {acyclic_failure_reason(C)}")
        return EXIT_ABSENT
    R = res.subdigraph
    print(format_dg(R, [f"acyclic spanning subdigraph: case={res.case} source={res.source} sink={res.sink}"]), end="")
    return EXIT_OK


def cmd_separators(args) -> int:
    D = _digraph(args.file)
    reps = minimal_separators(D)
    print(f"minimal separators: {len(reps)}")
    for r in reps:
        print(_seq(r.separator))
    return EXIT_OK


def cmd_conn(args) -> int:
    print(vertex_connectivity(_digraph(args.file)))
    return EXIT_OK


def cmd_ear(args) -> int:
    D = _digraph(args.file)
    start = _ints(args.start) if args.start else None
    ears = ear_decomposition(D, start)
    ears.validate(D)
    print(f"# ear decomposition: {len(ears.ears)} ears, {len(ears.ears) - 1} beyond the first")
    for kind, seq in ears.ears:
        print(f"{kind} {_seq(seq)}")
    return EXIT_OK


def cmd_tournament(args) -> int:
    D = _digraph(args.file)
    T = strong_spanning_tournament(D)
    print(format_dg(T, [f"strong spanning tournament: n={T.n} arcs={T.num_arcs}"]), end="")
    return EXIT_OK


def _text_table(reports) -> str:
    lines = [f"{'theorem':<22} {'checked':>9} {'failures':>9} {'flagged':>8}  status"]
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.theorem_id:<22} {r.checked:>9} {len(r.failures):>9} {len(r.flagged):>8}  {status}")
    for r in reports:
        for inst, exp, got in r.failures:
            lines.append(f"FAIL {r.theorem_id}: {inst}: expected {exp}, got {got}")
        for inst, note in r.flagged:
            lines.append(f"FLAG {r.theorem_id}: {inst}: {note}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    ids = list(THEOREM_IDS) if args.theorem == "all" else [args.theorem]
    cfg = CampaignConfig(max_n=args.max_n, mode=args.mode, samples=args.samples, seed=args.seed)
    reports = run_all(ids, cfg)
    if args.format == "json":
        if len(reports) == 1:
            doc = reports[0].to_dict(args.timings)
        else:
            doc = {
                "theorem_id": "all",
                "checked": sum(r.checked for r in reports),
                "passed": all(r.passed for r in reports),
                "failures": [dict(f, theorem_id=r.theorem_id) for r in reports for f in r.to_dict()["failures"]],
                "reports": [r.to_dict(args.timings) for r in reports],
            }
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(_text_table(reports))
        if args.timings:
            for r in reports:
                print(f"time {r.theorem_id}: {r.elapsed:.2f}s")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# -- parser -------------------------------------------------------------------------------------------


def _theorem(value: str) -> str:
    if value != "all" and value not in THEOREM_IDS:
        raise argparse.ArgumentTypeError(f"unknown theorem id {value!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semicomp", description="Semicomplete compositions of digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help=".dg or .comp file")
        sp.set_defaults(fn=fn)
        return sp

    add("expand", cmd_expand, "print the expansion of a composition as .dg")
    add("decompose", cmd_decompose, "recognize a digraph as a semicomplete composition")
    a = add("analyze", cmd_analyze, "structural summary; optionally validate a certificate")
    a.add_argument("--cycle", help="Hamiltonian cycle to validate, e.g. '0 1 2'")
    a.add_argument("--path", help="Hamiltonian path to validate")
    add("hampath", cmd_hampath, "Hamiltonian path or ABSENT")
    add("hamcycle", cmd_hamcycle, "Hamiltonian cycle or ABSENT")
    add("pancyclic", cmd_pancyclic, "pancyclicity with witnesses or obstruction")
    add("ssss", cmd_ssss, "smallest strong spanning subdigraph")
    s = add("acyclic-span", cmd_acyclic_span, "acyclic spanning subdigraph with source and sink")
    s.add_argument("--case", choices=["a", "b", "general"], help="force one construction")
    add("separators", cmd_separators, "all minimal separators")
    add("conn", cmd_conn, "vertex connectivity")
    e = add("ear", cmd_ear, "ear decomposition")
    e.add_argument("--start", help="starting cycle, e.g. '0 1 2'")
    add("tournament", cmd_tournament, "strong spanning tournament of a strong semicomplete digraph")

    v = sub.add_parser("verify", help="run verification campaigns")
    v.add_argument("--theorem", type=_theorem, default="all", help=f"one of {', '.join(THEOREM_IDS)} or all")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--seed", type=int, default=2024)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    v.set_defaults(fn=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _Exit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except TheoremViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (PreconditionError, ScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SemicompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
