"""Pure-Python edge-subset census (fallback for the compiled kernel).

For a graph on n vertices with edge list E, walks every subset A of E and
accumulates the sign (-1)^|A| into a counter keyed by the partition of n
given by the component sizes of (V, A).  This is the raw material of the
power-sum expansion of a chromatic symmetric function.

The walk is an include/exclude DFS sharing union-find work across subsets
with a common prefix; undo is a single parent-link revert because unions
are by size with no path compression.  The running component-size multiset
is kept as one big integer with a 7-bit counter field per size, so the
accumulator key update per union is O(1).
"""

from __future__ import annotations

_SHIFT = 7  # counter field width; component counts never exceed n < 2**7 for sane n


def subset_type_census(n: int, edges: list[tuple[int, int]]) -> dict[tuple[int, ...], int]:
    """Signed count of edge subsets per component-size partition.

    Returns {partition tuple (descending): sum over subsets of (-1)^|subset|}.
    Entries that cancel to zero are dropped.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n >= (1 << _SHIFT):
        raise ValueError(f"n={n} too large for the counter encoding")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
    parent = list(range(n))
    size = [1] * n
    acc: dict[int, int] = {}
    m = len(edges)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(ei, sign, key):
        if ei == m:
            acc[key] = acc.get(key, 0) + sign
            return
        u, v = edges[ei]
        rec(ei + 1, sign, key)  # edge excluded
        ru, rv = find(u), find(v)
        if ru == rv:
            # cycle edge: component sizes unchanged, sign flips
            rec(ei + 1, -sign, key)
        else:
            su, sv = size[ru], size[rv]
            if su < sv:
                ru, rv = rv, ru
                su, sv = sv, su
            parent[rv] = ru
            size[ru] = su + sv
            key2 = key + (1 << (_SHIFT * (su + sv - 1))) \
                       - (1 << (_SHIFT * (su - 1))) - (1 << (_SHIFT * (sv - 1)))
            rec(ei + 1, -sign, key2)
            parent[rv] = rv
            size[ru] = su

    rec(0, 1, n)  # empty subset: n singleton components
    out = {}
    for key, count in acc.items():
        if count:
            out[_decode(key)] = count
    return out


def _decode(key: int) -> tuple[int, ...]:
    parts = []
    s = 1
    while key:
        c = key & ((1 << _SHIFT) - 1)
        parts.extend([s] * c)
        key >>= _SHIFT
        s += 1
    parts.reverse()
    return tuple(parts)
