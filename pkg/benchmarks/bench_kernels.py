"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--n 11]
"""
import argparse
import random
import time

from semicomp import kernels
from semicomp.digraph import Digraph


def random_digraphs(count, n, p, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
        out.append(Digraph.from_arcs(n, arcs))
    return out


def workloads(n):
    dense = random_digraphs(20, n, 0.6, 1)
    sparse = random_digraphs(20, n, 0.3, 2)

    def tables(k):
        for G in dense:
            k.strong_table(list(G.out), list(G.inn), G.n)
            ends = k.path_ends_table(list(G.out), list(G.inn), G.n)
            k.path_cover_table(ends, G.n)
            k.cycle_table(list(G.out), list(G.inn), G.n)

    def separators(k):
        for G in dense:
            k.minimal_separators(list(G.out), list(G.inn), G.n)

    def hamilton(k):
        for G in sparse:
            k.ham_path_search(list(G.out), list(G.inn), G.n)
            k.ham_cycle_search(list(G.out), list(G.inn), G.n)

    def cuts(k):
        for G in dense:
            out = list(G.out)
            for s in range(G.n):
                for t in range(G.n):
                    if s != t and not G.has_arc(s, t):
                        k.min_vertex_cut(out, G.n, s, t)

    def cycles(k):
        for G in sparse:
            for v in range(G.n):
                k.cycle_lengths_through(list(G.out), list(G.inn), G.n, v)

    return {"subset tables": tables, "minimal separators": separators, "hamilton search": hamilton,
            "vertex cuts": cuts, "cycle lengths": cycles}


def best_of(fn, impl, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n", type=int, default=11)
    args = ap.parse_args()
    backends = kernels.available()
    print(f"backends: {', '.join(backends)}; n = {args.n}")
    print(f"{'workload':<20}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in workloads(args.n).items():
        row = {b: best_of(fn, kernels.module(b), args.repeat) for b in backends}
        line = f"{name:<20}" + "".join(f"{row[b]:>11.3f}s" for b in backends)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
