# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""

from libc.stdint cimport uint64_t, uint8_t, int32_t
from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"

cdef extern from * nogil:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int MAX_TABLE_N = 24


cdef uint64_t* _masks(object seq, int n) except NULL:
    cdef uint64_t* arr = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        arr[i] = <uint64_t> seq[i]
    arr[n] = 0
    return arr


cdef inline uint64_t _reach(const uint64_t* adj, uint64_t start, uint64_t within) nogil:
    cdef uint64_t seen = start, frontier = start, nxt, f, low
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & (~f + 1)
            nxt |= adj[ctz(low)]
            f ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


cdef int _check_table_n(int n) except -1:
    if n > MAX_TABLE_N:
        raise ValueError(f"subset tables limited to n <= {MAX_TABLE_N}")
    return 0


cdef uint8_t* _strong(const uint64_t* out, const uint64_t* inn, int n) nogil:
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint8_t* table = <uint8_t*> calloc(size, 1)
    cdef uint64_t mask, low
    if table == NULL:
        return NULL
    for mask in range(size):
        if mask & (mask - 1) == 0:
            table[mask] = 1
            continue
        low = mask & (~mask + 1)
        if _reach(out, low, mask) == mask and _reach(inn, low, mask) == mask:
            table[mask] = 1
    return table


def strong_table(out, inn, int n):
    _check_table_n(n)
    cdef uint64_t* o = _masks(out, n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint8_t* t = _strong(o, i, n)
    free(o)
    free(i)
    if t == NULL:
        raise MemoryError()
    try:
        return bytes(t[:(1 << n)])
    finally:
        free(t)


def minimal_separators(out, inn, int n):
    _check_table_n(n)
    cdef uint64_t* o = _masks(out, n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint8_t* strong = _strong(o, i, n)
    free(o)
    free(i)
    if strong == NULL:
        raise MemoryError()
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t full = size - 1
    cdef uint8_t* flags = <uint8_t*> calloc(size, 1)  # bit0 sep, bit1 below
    cdef uint64_t mask, m, low, sub
    cdef uint8_t b
    found = []
    try:
        for mask in range(size):
            if not strong[full & ~mask]:
                flags[mask] = 1
            b = 0
            m = mask
            while m:
                low = m & (~m + 1)
                sub = mask ^ low
                if flags[sub]:
                    b = 2
                    break
                m ^= low
            flags[mask] |= b
            if flags[mask] == 1:
                found.append(mask)
    finally:
        free(strong)
        free(flags)
    found.sort(key=lambda x: (bin(x).count("1"), x))
    return found


cdef uint64_t* _path_ends(const uint64_t* inn, int n) nogil:
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t full = size - 1
    cdef uint64_t* ends = <uint64_t*> calloc(size, sizeof(uint64_t))
    cdef uint64_t mask, e, rest, b
    cdef int v
    if ends == NULL:
        return NULL
    for v in range(n):
        ends[(<uint64_t> 1) << v] = (<uint64_t> 1) << v
    for mask in range(1, size):
        e = ends[mask]
        if not e:
            continue
        rest = full & ~mask
        while rest:
            b = rest & (~rest + 1)
            if e & inn[ctz(b)]:
                ends[mask | b] |= b
            rest ^= b
    return ends


def path_ends_table(out, inn, int n):
    _check_table_n(n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t* e = _path_ends(i, n)
    free(i)
    if e == NULL:
        raise MemoryError()
    cdef uint64_t k
    try:
        return [e[k] for k in range((<uint64_t> 1) << n)]
    finally:
        free(e)


def cycle_table(out, inn, int n):
    _check_table_n(n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t full = size - 1
    cdef uint64_t* paths = <uint64_t*> calloc(size, sizeof(uint64_t))
    cdef uint8_t* table = <uint8_t*> calloc(size, 1)
    cdef uint64_t mask, e, low, rest, b
    cdef int v, s
    try:
        if paths == NULL or table == NULL:
            raise MemoryError()
        with nogil:
            for v in range(n):
                paths[(<uint64_t> 1) << v] = (<uint64_t> 1) << v
            for mask in range(1, size):
                e = paths[mask]
                if not e:
                    continue
                low = mask & (~mask + 1)
                s = ctz(low)
                if mask != low and (e & i[s]):
                    table[mask] = 1
                rest = full & ~mask & ~((low << 1) - 1)
                while rest:
                    b = rest & (~rest + 1)
                    if e & i[ctz(b)]:
                        paths[mask | b] |= b
                    rest ^= b
        return bytes(table[:size])
    finally:
        free(i)
        free(paths)
        free(table)


def path_cover_table(ends, int n):
    _check_table_n(n)
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t* e = <uint64_t*> malloc(size * sizeof(uint64_t))
    cdef int32_t* pc = <int32_t*> calloc(size, sizeof(int32_t))
    cdef uint64_t mask, low, rest, s, sub, k
    cdef int32_t best, c
    try:
        if e == NULL or pc == NULL:
            raise MemoryError()
        for k in range(size):
            e[k] = <uint64_t> ends[k]
        with nogil:
            for mask in range(1, size):
                if e[mask]:
                    pc[mask] = 1
                    continue
                low = mask & (~mask + 1)
                rest = mask ^ low
                best = n + 1
                s = rest
                while True:
                    sub = s | low
                    if e[sub]:
                        c = 1 + pc[mask ^ sub]
                        if c < best:
                            best = c
                    if s == 0:
                        break
                    s = (s - 1) & rest
                pc[mask] = best
        return [pc[k] for k in range(size)]
    finally:
        free(e)
        free(pc)


def partition_table(family, int n):
    _check_table_n(n)
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef const uint8_t[:] fam = family
    cdef uint8_t* f = <uint8_t*> calloc(size, 1)
    cdef uint64_t mask, low, rest, s, sub
    if f == NULL:
        raise MemoryError()
    try:
        f[0] = 1
        with nogil:
            for mask in range(1, size):
                low = mask & (~mask + 1)
                rest = mask ^ low
                s = rest
                while True:
                    sub = s | low
                    if fam[sub] and f[mask ^ sub]:
                        f[mask] = 1
                        break
                    if s == 0:
                        break
                    s = (s - 1) & rest
        return bytes(f[:size])
    finally:
        free(f)


def ham_path_search(out, inn, int n):
    if n == 0:
        return None
    _check_table_n(n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t* ends = _path_ends(i, n)
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1
    cdef uint64_t mask, prev, cand
    cdef int v
    try:
        if ends == NULL:
            raise MemoryError()
        if not ends[full]:
            return None
        v = ctz(ends[full])
        path = [v]
        mask = full
        while mask != ((<uint64_t> 1) << v):
            prev = mask ^ ((<uint64_t> 1) << v)
            cand = ends[prev] & i[v]
            v = ctz(cand)
            path.append(v)
            mask = prev
        path.reverse()
        return path
    finally:
        free(i)
        free(ends)


def ham_cycle_search(out, inn, int n):
    if n < 2:
        return None
    _check_table_n(n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t full = size - 1
    cdef uint64_t* reach = <uint64_t*> calloc(size, sizeof(uint64_t))
    cdef uint64_t mask, e, rest, b, last, prev, cand
    cdef int v
    try:
        if reach == NULL:
            raise MemoryError()
        reach[1] = 1
        with nogil:
            mask = 1
            while mask < size:
                e = reach[mask]
                if e:
                    rest = full & ~mask
                    while rest:
                        b = rest & (~rest + 1)
                        if e & i[ctz(b)]:
                            reach[mask | b] |= b
                        rest ^= b
                mask += 2
        last = reach[full] & i[0] & ~(<uint64_t> 1)
        if not last:
            return None
        v = ctz(last)
        cycle = [v]
        mask = full
        while v != 0:
            prev = mask ^ ((<uint64_t> 1) << v)
            cand = reach[prev] & i[v]
            v = ctz(cand)
            cycle.append(v)
            mask = prev
        cycle.reverse()
        return cycle
    finally:
        free(i)
        free(reach)


def min_vertex_cut(out, int n, int s, int t):
    if (out[s] >> t) & 1:
        return -1
    cdef int size = 2 * n
    cdef int inf = n + 1
    cdef int* cap = <int*> calloc(size * size, sizeof(int))
    cdef int* parent = <int*> malloc(size * sizeof(int))
    cdef int* queue = <int*> malloc(size * sizeof(int))
    cdef uint64_t* o = _masks(out, n)
    cdef int v, w, x, y, head, tail, source, sink, flow
    cdef uint64_t m, b
    try:
        if cap == NULL or parent == NULL or queue == NULL:
            raise MemoryError()
        with nogil:
            for v in range(n):
                cap[(2 * v) * size + 2 * v + 1] = inf if (v == s or v == t) else 1
                m = o[v]
                while m:
                    b = m & (~m + 1)
                    w = ctz(b)
                    cap[(2 * v + 1) * size + 2 * w] = inf
                    m ^= b
            source = 2 * s + 1
            sink = 2 * t
            flow = 0
            while True:
                for x in range(size):
                    parent[x] = -1
                parent[source] = source
                head = 0
                tail = 0
                queue[tail] = source
                tail += 1
                while head < tail:
                    x = queue[head]
                    head += 1
                    if x == sink:
                        break
                    for y in range(size):
                        if cap[x * size + y] > 0 and parent[y] < 0:
                            parent[y] = x
                            queue[tail] = y
                            tail += 1
                if parent[sink] < 0:
                    break
                y = sink
                while y != source:
                    x = parent[y]
                    cap[x * size + y] -= 1
                    cap[y * size + x] += 1
                    y = x
                flow += 1
        return flow
    finally:
        free(cap)
        free(parent)
        free(queue)
        free(o)


cdef struct MSS:
    int n
    uint64_t full
    uint64_t* chosen
    uint64_t* transposed
    uint64_t* remaining_in
    uint64_t** choices
    int* nchoices


cdef bint _mss_leaf(MSS* st) nogil:
    cdef int u
    cdef uint64_t m, b
    if _reach(st.chosen, 1, st.full) != st.full:
        return False
    for u in range(st.n):
        st.transposed[u] = 0
    for u in range(st.n):
        m = st.chosen[u]
        while m:
            b = m & (~m + 1)
            st.transposed[ctz(b)] |= (<uint64_t> 1) << u
            m ^= b
    return _reach(st.transposed, 1, st.full) == st.full


cdef bint _mss_search(MSS* st, int v, uint64_t covered, int extra_out, int extra_in) nogil:
    cdef uint64_t uncovered, s
    cdef int j, k, waste
    if v == st.n:
        if covered != st.full or extra_out or extra_in:
            return False
        return _mss_leaf(st)
    uncovered = st.full & ~covered
    if uncovered & ~st.remaining_in[v]:
        return False
    if popc(uncovered) > (st.n - v) + extra_out:
        return False
    for j in range(st.nchoices[v]):
        s = st.choices[v][j]
        k = popc(s)
        if k - 1 > extra_out:
            break
        waste = popc(s & covered)
        if waste > extra_in:
            continue
        st.chosen[v] = s
        if _mss_search(st, v + 1, covered | s, extra_out - (k - 1), extra_in - waste):
            return True
    st.chosen[v] = 0
    return False


def min_strong_spanning(out, inn, int n):
    if n <= 1:
        return []
    if n > 63:
        raise ValueError("min_strong_spanning limited to n <= 63")
    cdef uint64_t* o = _masks(out, n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1
    cdef MSS st
    cdef int v, j, total, m
    cdef uint64_t s
    st.n = n
    st.full = full
    st.chosen = <uint64_t*> calloc(n, sizeof(uint64_t))
    st.transposed = <uint64_t*> calloc(n, sizeof(uint64_t))
    st.remaining_in = <uint64_t*> calloc(n + 1, sizeof(uint64_t))
    st.choices = <uint64_t**> calloc(n, sizeof(uint64_t*))
    st.nchoices = <int*> calloc(n, sizeof(int))
    try:
        if _reach(o, 1, full) != full or _reach(i, 1, full) != full:
            return None
        total = 0
        for v in range(n):
            subs = []
            s = o[v]
            while s:
                subs.append(s)
                s = (s - 1) & o[v]
            subs.sort(key=lambda x: (bin(x).count("1"), x))
            st.nchoices[v] = len(subs)
            st.choices[v] = <uint64_t*> malloc((len(subs) + 1) * sizeof(uint64_t))
            for j in range(len(subs)):
                st.choices[v][j] = subs[j]
            total += popc(o[v])
        for v in range(n - 1, -1, -1):
            st.remaining_in[v] = st.remaining_in[v + 1] | o[v]
        for m in range(n, total + 1):
            if _mss_search(&st, 0, 0, m - n, m - n):
                arcs = []
                for v in range(n):
                    s = st.chosen[v]
                    while s:
                        arcs.append((v, ctz(s)))
                        s &= s - 1
                return arcs
        return None
    finally:
        for v in range(n):
            if st.choices[v] != NULL:
                free(st.choices[v])
        free(st.choices)
        free(st.nchoices)
        free(st.chosen)
        free(st.transposed)
        free(st.remaining_in)
        free(o)
        free(i)


cdef bint _cycle_dfs(const uint64_t* out, int* path, int depth, int length, int s,
                     uint64_t allowed, uint64_t used) nogil:
    cdef int v = path[depth - 1]
    cdef uint64_t cand, b
    if depth == length:
        return (out[v] >> s) & 1
    cand = out[v] & allowed & ~used
    while cand:
        b = cand & (~cand + 1)
        path[depth] = ctz(b)
        if _cycle_dfs(out, path, depth + 1, length, s, allowed, used | b):
            return True
        cand ^= b
    return False


def find_cycle_of_length(out, int n, int length, int through=-1):
    if length < 2 or length > n:
        return None
    if n > 63:
        raise ValueError("find_cycle_of_length limited to n <= 63")
    cdef uint64_t* o = _masks(out, n)
    cdef int* path = <int*> malloc(n * sizeof(int))
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1
    cdef uint64_t allowed
    cdef int s, first, last, k
    cdef bint ok
    try:
        if through >= 0:
            first = through
            last = through
        else:
            first = 0
            last = n - 1
        for s in range(first, last + 1):
            if through >= 0:
                allowed = full
            else:
                allowed = full & ~(((<uint64_t> 1) << (s + 1)) - 1)
            path[0] = s
            with nogil:
                ok = _cycle_dfs(o, path, 1, length, s, allowed, (<uint64_t> 1) << s)
            if ok:
                return [path[k] for k in range(length)]
        return None
    finally:
        free(o)
        free(path)


def cycle_lengths_through(out, inn, int n, int v):
    _check_table_n(n)
    cdef uint64_t* i = _masks(inn, n)
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t full = size - 1
    cdef uint64_t start = (<uint64_t> 1) << v
    cdef uint64_t* reach = <uint64_t*> calloc(size, sizeof(uint64_t))
    cdef uint64_t mask, e, rest, b
    cdef uint64_t found = 0
    try:
        if reach == NULL:
            raise MemoryError()
        reach[start] = start
        with nogil:
            for mask in range(1, size):
                if not (mask & start):
                    continue
                e = reach[mask]
                if not e:
                    continue
                if mask != start and (e & i[v]):
                    found |= (<uint64_t> 1) << popc(mask)
                rest = full & ~mask
                while rest:
                    b = rest & (~rest + 1)
                    if e & i[ctz(b)]:
                        reach[mask | b] |= b
                    rest ^= b
        return {k for k in range(n + 1) if (found >> k) & 1}
    finally:
        free(i)
        free(reach)
