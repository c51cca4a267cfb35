"""Pure-Python kernels.  Same signatures and results as the compiled ``_kernels_c``.

Digraphs arrive as per-vertex out/in neighbourhood bitmasks.  Subset tables are
indexed by vertex bitmask and have ``2**n`` entries.
"""

BACKEND = "python"


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(adj, start_bit, within):
    seen = frontier = start_bit
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def strong_table(out, inn, n):
    """``t[mask] == 1`` iff ``D[mask]`` is strong (empty and singletons included)."""
    size = 1 << n
    table = bytearray(size)
    for mask in range(size):
        if mask & (mask - 1) == 0:
            table[mask] = 1
            continue
        low = mask & -mask
        if _reach(out, low, mask) == mask and _reach(inn, low, mask) == mask:
            table[mask] = 1
    return bytes(table)


def minimal_separators(out, inn, n):
    """Bitmasks of all inclusion-minimal separators, ascending by (size, mask)."""
    full = (1 << n) - 1
    strong = strong_table(out, inn, n)
    size = 1 << n
    sep = bytearray(size)
    below = bytearray(size)  # some proper subset is a separator
    found = []
    for mask in range(size):
        sep[mask] = 0 if strong[full & ~mask] else 1
        b = 0
        m = mask
        while m:
            low = m & -m
            sub = mask ^ low
            if sep[sub] or below[sub]:
                b = 1
                break
            m ^= low
        below[mask] = b
        if sep[mask] and not b:
            found.append(mask)
    found.sort(key=lambda m: (bin(m).count("1"), m))
    return found


def path_ends_table(out, inn, n):
    """``e[mask]``: bitmask of end vertices of Hamiltonian paths of ``D[mask]``."""
    size = 1 << n
    ends = [0] * size
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, size):
        e = ends[mask]
        if not e:
            continue
        rest = ((1 << n) - 1) & ~mask
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            if e & inn[w]:
                ends[mask | low] |= low
            rest ^= low
    return ends


def cycle_table(out, inn, n):
    """``c[mask] == 1`` iff ``D[mask]`` has a Hamiltonian cycle (``|mask| >= 2``)."""
    size = 1 << n
    paths = [0] * size  # ends of paths starting at the lowest vertex of mask
    for v in range(n):
        paths[1 << v] = 1 << v
    table = bytearray(size)
    full = (1 << n) - 1
    for mask in range(1, size):
        e = paths[mask]
        if not e:
            continue
        low = mask & -mask
        s = low.bit_length() - 1
        if mask != low and e & inn[s]:
            table[mask] = 1
        rest = full & ~mask & ~((low << 1) - 1)
        while rest:
            b = rest & -rest
            w = b.bit_length() - 1
            if e & inn[w]:
                paths[mask | b] |= b
            rest ^= b
    return bytes(table)


def path_cover_table(ends, n):
    """``pc[mask]``: minimum number of paths partitioning ``mask`` (0 for empty)."""
    size = 1 << n
    pc = [0] * size
    for mask in range(1, size):
        if ends[mask]:
            pc[mask] = 1
            continue
        low = mask & -mask
        rest = mask ^ low
        best = n + 1
        s = rest
        while True:
            sub = s | low
            if ends[sub]:
                c = 1 + pc[mask ^ sub]
                if c < best:
                    best = c
            if s == 0:
                break
            s = (s - 1) & rest
        pc[mask] = best
    return pc


def partition_table(family, n):
    """``f[mask] == 1`` iff ``mask`` splits into members of ``family`` (a byte table)."""
    size = 1 << n
    f = bytearray(size)
    f[0] = 1
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        s = rest
        while True:
            sub = s | low
            if family[sub] and f[mask ^ sub]:
                f[mask] = 1
                break
            if s == 0:
                break
            s = (s - 1) & rest
    return bytes(f)


def ham_path_search(out, inn, n):
    """A Hamiltonian path as a vertex list, or ``None``."""
    if n == 0:
        return None
    ends = path_ends_table(out, inn, n)
    full = (1 << n) - 1
    if not ends[full]:
        return None
    v = (ends[full] & -ends[full]).bit_length() - 1
    path = [v]
    mask = full
    while mask != (1 << v):
        prev = mask ^ (1 << v)
        cand = ends[prev] & inn[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
        mask = prev
    path.reverse()
    return path


def ham_cycle_search(out, inn, n):
    """A Hamiltonian cycle starting at vertex 0, or ``None``."""
    if n < 2:
        return None
    size = 1 << n
    full = size - 1
    reach = [0] * size  # indexed by masks containing vertex 0
    reach[1] = 1
    for mask in range(1, size, 2):
        e = reach[mask]
        if not e:
            continue
        rest = full & ~mask
        while rest:
            b = rest & -rest
            w = b.bit_length() - 1
            if e & inn[w]:
                reach[mask | b] |= b
            rest ^= b
    last = reach[full] & inn[0] & ~1
    if not last:
        return None
    v = (last & -last).bit_length() - 1
    cycle = [v]
    mask = full
    while v != 0:
        prev = mask ^ (1 << v)
        cand = reach[prev] & inn[v]
        v = (cand & -cand).bit_length() - 1
        cycle.append(v)
        mask = prev
    cycle.reverse()
    return cycle


def min_vertex_cut(out, n, s, t):
    """Minimum number of vertices (not ``s``, ``t``) meeting every s-t path.

    Returns -1 when ``s -> t`` is an arc.  Unit-capacity augmenting paths on the
    vertex-split network: node ``2v`` is v-in, ``2v+1`` is v-out.
    """
    if (out[s] >> t) & 1:
        return -1
    size = 2 * n
    inf = n + 1
    cap = [[0] * size for _ in range(size)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = inf if v in (s, t) else 1
        for w in _iter_bits(out[v]):
            cap[2 * v + 1][2 * w] = inf
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        for x in queue:
            if x == sink:
                break
            row = cap[x]
            for y in range(size):
                if row[y] > 0 and parent[y] < 0:
                    parent[y] = x
                    queue.append(y)
        if parent[sink] < 0:
            return flow
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def min_strong_spanning(out, inn, n):
    """Arcs of a minimum strong spanning subdigraph, by iterative deepening.

    Level ``m`` chooses a non-empty out-set per vertex so that exactly ``m`` arcs
    are used and every vertex is entered; the first strong choice wins.
    Returns ``None`` if the digraph is not strong.
    """
    if n <= 1:
        return []
    full = (1 << n) - 1
    if _reach(out, 1, full) != full or _reach(inn, 1, full) != full:
        return None
    choices = []
    for v in range(n):
        subs = []
        m = out[v]
        s = m
        while s:
            subs.append(s)
            s = (s - 1) & m
        subs.sort(key=lambda x: (bin(x).count("1"), x))
        choices.append(subs)
    total = sum(bin(m).count("1") for m in out)
    # remaining_in[v]: vertices with an in-neighbour among v..n-1
    remaining_in = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        remaining_in[v] = remaining_in[v + 1] | out[v]
    chosen = [0] * n

    def search(v, covered, extra_out, extra_in):
        if v == n:
            if covered != full or extra_out or extra_in:
                return False
            return _reach(chosen, 1, full) == full and _reach(_transpose(chosen, n), 1, full) == full
        uncovered = full & ~covered
        if uncovered & ~remaining_in[v]:
            return False
        if bin(uncovered).count("1") > (n - v) + extra_out:
            return False
        for s in choices[v]:
            k = bin(s).count("1")
            if k - 1 > extra_out:
                break
            waste = bin(s & covered).count("1")
            if waste > extra_in:
                continue
            chosen[v] = s
            if search(v + 1, covered | s, extra_out - (k - 1), extra_in - waste):
                return True
        chosen[v] = 0
        return False

    for m in range(n, total + 1):
        if search(0, 0, m - n, m - n):
            return [(u, w) for u in range(n) for w in _iter_bits(chosen[u])]
    return None


def _transpose(out, n):
    inn = [0] * n
    for u in range(n):
        for w in _iter_bits(out[u]):
            inn[w] |= 1 << u
    return inn


def find_cycle_of_length(out, n, length, through=-1):
    """A cycle with exactly ``length`` vertices (through ``through`` if >= 0), or ``None``.

    Depth-first search; each cycle is rooted at its least vertex unless a
    mandatory vertex is given.
    """
    if length < 2 or length > n:
        return None
    starts = [through] if through >= 0 else range(n)
    for s in starts:
        allowed = ((1 << n) - 1) if through >= 0 else ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(v, used):
            if len(path) == length:
                return (out[v] >> s) & 1 == 1
            cand = out[v] & allowed & ~used
            while cand:
                b = cand & -cand
                w = b.bit_length() - 1
                path.append(w)
                if dfs(w, used | b):
                    return True
                path.pop()
                cand ^= b
            return False

        if dfs(s, 1 << s):
            return list(path)
    return None


def cycle_lengths_through(out, inn, n, v):
    """Set of lengths of cycles through ``v`` (bitmask DP over paths from ``v``)."""
    size = 1 << n
    full = size - 1
    start = 1 << v
    reach = {start: start}
    lengths = set()
    frontier = [start]
    for _ in range(n):
        nxt = {}
        for mask in frontier:
            e = reach[mask]
            if mask != start and e & inn[v]:
                lengths.add(bin(mask).count("1"))
            rest = full & ~mask
            while rest:
                b = rest & -rest
                w = b.bit_length() - 1
                if e & inn[w]:
                    key = mask | b
                    nxt[key] = nxt.get(key, 0) | b
                rest ^= b
        for key, e in nxt.items():
            reach[key] = reach.get(key, 0) | e
        frontier = list(nxt)
    return lengths
