"""Verification campaigns: every structural theorem checked against the brute-force oracles."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import oracles
from .composition import Composition, is_in_T1, to_extension, trivial_composition
from .connectivity import (
    check_house_arc_deletion,
    check_separator_structure,
    minimal_separators,
    two_non_separating_vertices,
    vertex_connectivity,
)
from .digraph import Digraph, complement_components, is_strong, is_strong_mask, to_mask
from .errors import SemicompError, ValidationError
from .factors import coverage_maxima, k_path_coverage_profile, max_coverage_cycle_subdigraph
from .formats import compact
from .hamiltonicity import ham_cycle, ham_path, merge_cycle_subdigraph
from .pancyclicity import is_pancyclic
from .spanning import (
    acyclic_conditions,
    construct_acyclic_spanning,
    epsilon,
    smallest_strong_spanning,
    strong_spanning_composition_no_2cycle,
)

THEOREM_IDS = (
    "obs-strong",
    "sep-structure",
    "house-deletion",
    "two-vertices",
    "ham-path-char",
    "kpath-coverage",
    "ham-cycle-char-1",
    "ham-cycle-char-2",
    "longest-cycle-ext",
    "pancyclic",
    "no-2cycle-spanning",
    "ssss",
    "epsilon-def",
    "acyclic-span",
    "acyclic-span-general",
)


@dataclass
class VerificationReport:
    theorem_id: str
    checked: int = 0
    failures: list = field(default_factory=list)  # (instance, expected, got)
    flagged: list = field(default_factory=list)  # (instance, note)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, expected, got) -> None:
        self.failures.append((_key(instance), str(expected), str(got)))

    def flag(self, instance, note) -> None:
        self.flagged.append((_key(instance), str(note)))

    def finish(self) -> "VerificationReport":
        self.failures.sort()
        self.flagged.sort()
        return self

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [{"instance": i, "expected": e, "got": g} for i, e, g in self.failures],
            "flagged": [{"instance": i, "note": n} for i, n in self.flagged],
        }
        if timings:
            d["elapsed"] = round(self.elapsed, 3)
        return d


def _key(instance) -> str:
    if isinstance(instance, Composition):
        return compact(instance)
    if isinstance(instance, Digraph):
        return f"D{instance.n}[{','.join(f'{u}-{v}' for u, v in instance.arcs)}]"
    return str(instance)


@dataclass(frozen=True)
class CampaignConfig:
    max_n: int = 10
    mode: str = "exhaustive"  # exhaustive part plus random samples, or random only
    samples: int = 500
    seed: int = 2024

    def corpus(self, cap: int | None = None) -> Iterator[Composition]:
        n = self.max_n if cap is None else min(cap, self.max_n)
        if n < 2:
            return
        if self.mode == "exhaustive":
            yield from oracles.enumerate_compositions(oracles.CorpusSpec(3, 3, min(7, n)))
        elif self.mode != "random":
            raise ValidationError(f"mode must be 'exhaustive' or 'random', not {self.mode!r}")
        if self.samples:
            spec = oracles.CorpusSpec(5, 4, min(10, n), mode="random", samples=self.samples, seed=self.seed)
            yield from oracles.enumerate_compositions(spec)


# -- fixed instances ---------------------------------------------------------------------------


def t1_deletion_family(k: int = 3) -> Composition:
    """2-cycle quotient with two directed ``2k``-cycles as houses."""
    return Composition.of(Digraph.cycle(2), [Digraph.cycle(2 * k), Digraph.cycle(2 * k)])


def t1_separator_example() -> Composition:
    """2-cycle quotient with two directed 4-cycles as houses."""
    return Composition.of(Digraph.cycle(2), [Digraph.cycle(4), Digraph.cycle(4)])


def triangular_example() -> Composition:
    return Composition.extension(Digraph.cycle(3), [2, 2, 2])


def star_digraph() -> Digraph:
    """``D(4; 0<->1, 0<->2, 0<->3)``."""
    return Digraph.from_arcs(4, [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)])


def general_acyclic_examples() -> list[Composition]:
    """Hamiltonian quotients that are not semicomplete, houses of order 2."""
    out = []
    arc = Digraph.from_arcs(2, [(0, 1)])
    for t in (4, 5):
        T = Digraph.cycle(t)
        out.append(Composition.extension(T, [2] * t))
        out.append(Composition.of(T, [arc] + [Digraph.cycle(2)] * (t - 1)))
    return out


# -- helpers ---------------------------------------------------------------------------------------


def _path_ok(D: Digraph, path) -> bool:
    return sorted(path) == list(range(D.n)) and all(D.has_arc(u, v) for u, v in zip(path, path[1:]))


def _cycle_ok(D: Digraph, cyc, spanning: bool = True) -> bool:
    if len(set(cyc)) != len(cyc) or len(cyc) < 2:
        return False
    if spanning and len(cyc) != D.n:
        return False
    return all(D.has_arc(u, v) for u, v in zip(cyc, list(cyc[1:]) + [cyc[0]]))


@lru_cache(maxsize=None)
def _house_pc_table(h: Digraph) -> tuple[int, ...]:
    return tuple(oracles.bf_pc_table(h))


@lru_cache(maxsize=None)
def _extension_ell(quotient: Digraph, orders: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
    # l_{i,k}: most vertices of house i covered by a k-path subdigraph of the extension
    Q0 = Composition.extension(quotient, orders)
    D = Q0.expanded
    pc = oracles.bf_pc_table(D)
    ell = {}
    for k in range(1, D.n + 1):
        ell[k] = tuple(max((m & h).bit_count() for m in range(1 << D.n) if pc[m] <= k) for h in Q0.house_masks)
    return ell


def _max_cover_with_paths(h: Digraph, k: int) -> int:
    pc = _house_pc_table(h)
    return max((m.bit_count() for m in range(1 << h.n) if pc[m] <= k), default=0)


# -- campaigns -----------------------------------------------------------------------------------------


def _obs_strong(cfg, r):
    for C in cfg.corpus():
        r.checked += 1
        a, b = is_strong(C.expanded), is_strong(C.quotient)
        if a != b:
            r.fail(C, f"strong={b}", f"strong={a}")


def _sep_structure(cfg, r):
    for C in cfg.corpus(7):
        D = C.expanded
        if not is_strong(D) or is_in_T1(C.quotient):
            continue
        r.checked += 1
        v = check_separator_structure(C)
        if not v.holds:
            r.fail(C, "structure holds", v.violation)
        fast = sorted(rep.separator for rep in minimal_separators(D))
        slow = sorted(oracles.bf_minimal_separators(D))
        if fast != slow:
            r.fail(C, f"separators {slow}", f"separators {fast}")
    C = t1_separator_example()
    r.checked += 1
    v = check_separator_structure(C)
    if v.holds:
        r.fail(C, "structure violated (quotient in T1)", "structure holds")
    else:
        r.flag(C, f"T1 example: {v.violation[1]} at separator {v.violation[0]}")


def _house_deletion(cfg, r):
    for C in cfg.corpus():
        D = C.expanded
        if not is_strong(D) or is_in_T1(C.quotient):
            continue
        comps = {to_mask(c) for c in complement_components(D)}
        for i, h in enumerate(C.houses):
            if not h.num_arcs or C.house_masks[i] not in comps:
                continue
            r.checked += 1
            v = check_house_arc_deletion(C, i)
            if not v.preserved:
                r.fail(C, f"house {i}: connectivity >= {v.before}", v.after)
    C = t1_deletion_family(3)
    r.checked += 1
    v = check_house_arc_deletion(C, 0)
    if v.after < v.before:
        r.flag(C, f"T1 family: connectivity {v.before} -> {v.after}")
    else:
        r.fail(C, "strict drop (quotient in T1)", f"{v.before} -> {v.after}")


def _two_vertices(cfg, r):
    for C in cfg.corpus():
        D = C.expanded
        if D.n < 4 or not is_strong(D):
            continue
        r.checked += 1
        v1, v2 = two_non_separating_vertices(C)
        ok = v1 != v2 and all(is_strong_mask(D, D.full_mask & ~(1 << v)) for v in (v1, v2))
        if not ok:
            r.fail(C, "two non-separating vertices", (v1, v2))


def _factor_condition(r, C, want, oracle):
    """The factor condition with houses as parts must match; the complement-component
    reading is only flagged when it differs (houses may split into several components)."""
    by_house = oracle(C.expanded, list(C.house_masks))
    if by_house != want:
        r.fail(C, f"house factor condition={want}", f"house factor condition={by_house}")
    if C.expanded.n and any(h.n > 1 for h in C.houses):
        literal = oracle(C.expanded)
        if literal != want:
            r.flag(C, f"complement-component factor condition={literal} but Hamiltonian={want}")


def _ham_path_char(cfg, r):
    for C in cfg.corpus(9):
        D = C.expanded
        r.checked += 1
        got = ham_path(C)
        want = oracles.bf_ham_path(D)
        if (got is None) != (want is None):
            r.fail(C, f"path={want is not None}", f"path={got is not None}")
        elif got is not None and not _path_ok(D, got):
            r.fail(C, "valid Hamiltonian path", got)
        _factor_condition(r, C, want is not None, oracles.bf_good_path_cycle_factor)


def _ham_cycle_char_1(cfg, r):
    for C in cfg.corpus(9):
        D = C.expanded
        r.checked += 1
        got = ham_cycle(C)
        want = oracles.bf_ham_cycle(D)
        if (got is None) != (want is None):
            r.fail(C, f"cycle={want is not None}", f"cycle={got is not None}")
        elif got is not None and not _cycle_ok(D, got):
            r.fail(C, "valid Hamiltonian cycle", got)
        if is_strong(D):
            _factor_condition(r, C, want is not None, oracles.bf_good_cycle_factor)
        elif want is not None:
            r.fail(C, "no cycle (not strong)", want)


def _ham_cycle_char_2(cfg, r):
    for C in cfg.corpus(9):
        D = C.expanded
        if not is_strong(D):
            continue
        r.checked += 1
        want = oracles.bf_ham_cycle(D) is not None
        bounds = tuple(oracles.bf_pc(h) for h in C.houses)
        char = oracles.bf_extension_cycle_cover(C.quotient, C.orders, bounds)
        got = ham_cycle(C) is not None
        if char != want:
            r.fail(C, f"extension cover condition={want}", f"extension cover condition={char}")
        if got != want:
            r.fail(C, f"cycle={want}", f"cycle={got}")


def _kpath_coverage(cfg, r):
    for C in cfg.corpus(7):
        D = C.expanded
        if not is_strong(D):
            continue
        pc = oracles.bf_pc_table(D)
        profiles = oracles.bf_max_k_path_profiles(D, C.house_masks, pc)
        ell = _extension_ell(C.quotient, C.orders)
        for k in range(1, D.n + 1):
            r.checked += 1
            profs = sorted(profiles[k])
            if len(profs) != 1:
                r.fail(C, f"k={k}: one profile", profs)
                continue
            fast = k_path_coverage_profile(C, k).per_house
            if tuple(fast) != profs[0]:
                r.fail(C, f"k={k}: profile {profs[0]}", fast)
            ident = tuple(_max_cover_with_paths(h, l) for h, l in zip(C.houses, ell[k]))
            if ident != profs[0]:
                r.flag(C, f"k={k}: profile {profs[0]} differs from house-wise n_(i,k) {ident}")


def _longest_cycle_ext(cfg, r):
    seen = set()
    for C in cfg.corpus(9):
        key = (C.quotient, C.orders)
        if key in seen or not is_strong(C.quotient):
            continue
        seen.add(key)
        Q0 = to_extension(C)
        D = Q0.expanded
        r.checked += 1
        m = coverage_maxima(Q0)
        longest = oracles.bf_longest_cycle_sets(D)
        for s in longest:
            prof = tuple((s & h).bit_count() for h in Q0.house_masks)
            if prof != m:
                r.fail(Q0, f"longest cycle covers m={m}", prof)
                break
        F, _ = max_coverage_cycle_subdigraph(Q0, "total")
        cyc = merge_cycle_subdigraph(Q0, F)
        top = longest[0].bit_count() if longest else 0
        if not _cycle_ok(D, cyc, spanning=False) or to_mask(cyc) != F.vertex_mask:
            r.fail(Q0, "merged cycle on V(F)", cyc)
        elif len(cyc) != sum(m) or len(cyc) != top:
            r.fail(Q0, f"length {sum(m)} (longest {top})", len(cyc))


def _pancyclic(cfg, r):
    for C in cfg.corpus(9):
        D = C.expanded
        if D.n < 4 or oracles.bf_ham_cycle(D) is None:
            continue
        r.checked += 1
        res = is_pancyclic(C)
        want = oracles.bf_pancyclic(D)
        if res.pancyclic != want:
            r.fail(C, f"pancyclic={want}", f"pancyclic={res.pancyclic}")
            continue
        if res.obstruction is not None:
            res.obstruction.validate(D)
        elif not want:
            note = f"no obstruction, missing lengths {list(res.missing)}, {res.complement_components} complement components"
            if res.complement_components < 3:
                r.flag(C, note)
            else:
                r.fail(C, "pancyclic (no obstruction)", note)
        for length, cyc in res.cycles.items():
            if len(cyc) != length or not _cycle_ok(D, cyc, spanning=False):
                r.fail(C, f"valid {length}-cycle", cyc)
    C = triangular_example()
    r.checked += 1
    obs = is_pancyclic(C).obstruction
    if obs is None or obs.sizes != (2, 2, 2) or 5 in oracles.bf_cycle_lengths(C.expanded):
        r.fail(C, "equal-parts obstruction, no 5-cycle", obs)


def _no_2cycle(cfg, r):
    for C in cfg.corpus():
        D = C.expanded
        if not is_strong(D):
            continue
        r.checked += 1
        out = strong_spanning_composition_no_2cycle(C)
        if (out is None) != (C.t == 2):
            r.fail(C, f"exists={C.t >= 3}", f"exists={out is not None}")
            continue
        if out is not None:
            E = out.expanded
            two = any(E.has_arc(v, u) for u, v in E.arcs)
            if two or not is_strong(E) or not E.is_subdigraph_of(D):
                r.fail(C, "strong spanning 2-cycle-free", compact(out))


def _ssss(cfg, r):
    for C in cfg.corpus(8):
        D = C.expanded
        if not is_strong(D):
            continue
        r.checked += 1
        R = smallest_strong_spanning(C)
        e = epsilon(D)
        best = oracles.bf_min_strong_spanning(D).num_arcs
        if not (is_strong(R) and R.is_subdigraph_of(D)):
            r.fail(C, "strong spanning subdigraph", R.arcs)
        if not R.num_arcs == D.n + e == best:
            r.fail(C, f"arcs = n + eps = {D.n}+{e}, brute force {best}", R.num_arcs)
    S = star_digraph()
    C = Composition.extension(Digraph.cycle(2), [1, 3])
    r.checked += 1
    if C.expanded != S or smallest_strong_spanning(C).num_arcs != 6:
        r.fail(S, "6 arcs", smallest_strong_spanning(C).num_arcs)


def _epsilon_def(cfg, r):
    for C in cfg.corpus(7):
        D = C.expanded
        if not is_strong(D):
            continue
        r.checked += 1
        e = epsilon(D)
        want = oracles.bf_epsilon(D, 3)
        got = e if e <= 3 else None
        if got != want:
            r.fail(C, f"least k={want if want is not None else '>3'}", e)
    S = star_digraph()
    r.checked += 1
    if epsilon(S) != 2 or oracles.bf_epsilon(S) != 2:
        r.fail(S, 2, epsilon(S))


def _check_acyclic(r, C, case):
    r.checked += 1
    res = construct_acyclic_spanning(C, case)
    try:
        res.validate(C.expanded)
    except ValidationError as exc:
        r.fail(C, "valid acyclic spanning subdigraph", f"case {res.case}: {exc}")


def _acyclic_span(cfg, r):
    for C in cfg.corpus():
        cond = acyclic_conditions(C)
        if cond["a"] or cond["b"]:
            _check_acyclic(r, C, "a" if cond["a"] else "b")


def _acyclic_span_general(cfg, r):
    for C in cfg.corpus():
        if min(C.orders) >= 2 and _hamiltonian_quotient(C.quotient):
            _check_acyclic(r, C, "general")
    for C in general_acyclic_examples():
        if not acyclic_conditions(C)["general"]:
            r.fail(C, "hypothesis of the general form", "not satisfied")
        else:
            _check_acyclic(r, C, "general")


@lru_cache(maxsize=None)
def _hamiltonian_quotient(T: Digraph) -> bool:
    return ham_cycle(trivial_composition(T)) is not None


CAMPAIGNS: dict[str, Callable] = {
    "obs-strong": _obs_strong,
    "sep-structure": _sep_structure,
    "house-deletion": _house_deletion,
    "two-vertices": _two_vertices,
    "ham-path-char": _ham_path_char,
    "kpath-coverage": _kpath_coverage,
    "ham-cycle-char-1": _ham_cycle_char_1,
    "ham-cycle-char-2": _ham_cycle_char_2,
    "longest-cycle-ext": _longest_cycle_ext,
    "pancyclic": _pancyclic,
    "no-2cycle-spanning": _no_2cycle,
    "ssss": _ssss,
    "epsilon-def": _epsilon_def,
    "acyclic-span": _acyclic_span,
    "acyclic-span-general": _acyclic_span_general,
}


def run_campaign(theorem_id: str, cfg: CampaignConfig | None = None) -> VerificationReport:
    if theorem_id not in CAMPAIGNS:
        raise ValidationError(f"unknown theorem id {theorem_id!r}; choose from {', '.join(THEOREM_IDS)} or 'all'")
    cfg = cfg or CampaignConfig()
    report = VerificationReport(theorem_id)
    start = time.perf_counter()
    try:
        CAMPAIGNS[theorem_id](cfg, report)
    except SemicompError as exc:
        report.fail("campaign", "no error", f"{type(exc).__name__}: {exc}")
    report.elapsed = time.perf_counter() - start
    return report.finish()


def run_all(ids: Iterable[str] | None = None, cfg: CampaignConfig | None = None) -> list[VerificationReport]:
    return [run_campaign(i, cfg) for i in (ids or THEOREM_IDS)]
