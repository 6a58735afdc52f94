# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled edge-subset census kernel.

Same contract as espider._subsets_py.subset_type_census, restricted to
n <= 25 vertices and at most 28 edges.  The component-size multiset is a
125-bit integer (5-bit counter per size, sizes 1..25), updated in O(1) per
union and accumulated into a small open-addressing hash table at each of
the 2^|E| leaves.
"""

from libc.string cimport memset

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef enum:
    MAX_N = 25          # 5 bits * 25 sizes = 125 <= 128
    MAX_E = 28
    TABLE_BITS = 13     # 8192 slots; p(25) = 1958 distinct keys at most
    TABLE_SIZE = 8192

cdef struct Ctx:
    int m
    int eu[MAX_E]
    int ev[MAX_E]
    int parent[MAX_N]
    int size[MAX_N]
    u128 key
    u128 tkey[TABLE_SIZE]
    long long tcount[TABLE_SIZE]


cdef inline int find(Ctx* c, int x) noexcept nogil:
    while c.parent[x] != x:
        x = c.parent[x]
    return x


cdef inline void table_add(Ctx* c, long long sign) noexcept nogil:
    cdef u128 key = c.key
    cdef unsigned long long h = (<unsigned long long> key) ^ (<unsigned long long> (key >> 64))
    h *= 0x9E3779B97F4A7C15ULL
    cdef int idx = <int> (h >> (64 - TABLE_BITS))
    while True:
        if c.tkey[idx] == key:
            c.tcount[idx] += sign
            return
        if c.tkey[idx] == 0:
            c.tkey[idx] = key
            c.tcount[idx] = sign
            return
        idx = (idx + 1) & (TABLE_SIZE - 1)


cdef void rec(Ctx* c, int ei, long long sign) noexcept nogil:
    if ei == c.m:
        table_add(c, sign)
        return
    cdef int ru, rv, su, sv, t
    cdef u128 saved
    rec(c, ei + 1, sign)
    ru = find(c, c.eu[ei])
    rv = find(c, c.ev[ei])
    if ru == rv:
        rec(c, ei + 1, -sign)
    else:
        su = c.size[ru]
        sv = c.size[rv]
        if su < sv:
            t = ru; ru = rv; rv = t
            t = su; su = sv; sv = t
        c.parent[rv] = ru
        c.size[ru] = su + sv
        saved = c.key
        c.key = c.key + ((<u128> 1) << (5 * (su + sv - 1))) \
                      - ((<u128> 1) << (5 * (su - 1))) \
                      - ((<u128> 1) << (5 * (sv - 1)))
        rec(c, ei + 1, -sign)
        c.key = saved
        c.parent[rv] = rv
        c.size[ru] = su


def subset_type_census(int n, edges):
    """Signed count of edge subsets per component-size partition."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"kernel supports 1..{MAX_N} vertices, got {n}")
    if len(edges) > MAX_E:
        raise ValueError(f"kernel supports at most {MAX_E} edges, got {len(edges)}")
    cdef Ctx c
    cdef int i, u, v
    c.m = len(edges)
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
        c.eu[i] = u
        c.ev[i] = v
    for i in range(n):
        c.parent[i] = i
        c.size[i] = 1
    c.key = <u128> n  # n singletons: counter for size 1 equals n
    memset(c.tkey, 0, sizeof(c.tkey))
    memset(c.tcount, 0, sizeof(c.tcount))

    with nogil:
        rec(&c, 0, 1)

    out = {}
    cdef u128 key
    cdef int s
    cdef long long cnt
    for i in range(TABLE_SIZE):
        key = c.tkey[i]
        cnt = c.tcount[i]
        if key != 0 and cnt != 0:
            parts = []
            s = 1
            while key != 0:
                parts.extend([s] * (<int> (key & 31)))
                key >>= 5
                s += 1
            parts.reverse()
            out[tuple(parts)] = cnt
    return out
