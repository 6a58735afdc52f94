"""Independent oracles for the test suite.

Everything here is deliberately written from scratch with different
algorithms than the package uses: partition counting via the pentagonal
recurrence, partition streaming via an in-place successor rule, edge-subset
censuses by plain mask iteration, proper colorings by direct assignment,
symmetric-function identities by numeric evaluation at integer points, and
labeled-tree enumeration through sequence decoding with a centroid-rooted
canonical form.
"""

from functools import lru_cache
from itertools import product
from math import comb
from random import Random


@lru_cache(maxsize=None)
def pentagonal_partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (pentagonal_partition_count(n - g1)
                         + pentagonal_partition_count(n - g2))
        k += 1
    return total


def successor_partitions(n):
    """All partitions of n, largest-first order, via the successor rule:
    decrement the rightmost part exceeding 1, then re-greedy the tail."""
    if n == 0:
        yield ()
        return
    cur = [n]
    while True:
        yield tuple(cur)
        idx = -1
        for i in range(len(cur) - 1, -1, -1):
            if cur[i] > 1:
                idx = i
                break
        if idx == -1:
            return
        rem = sum(cur[idx:]) - (cur[idx] - 1)
        cur = cur[:idx] + [cur[idx] - 1]
        while rem:
            take = min(cur[-1], rem)
            cur.append(take)
            rem -= take


def naive_subset_census(n, edges):
    """Signed subset counts per component-size type, one fresh union-find
    per mask."""
    acc = {}
    m = len(edges)
    for mask in range(1 << m):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        bits = 0
        for i in range(m):
            if mask >> i & 1:
                bits += 1
                ru, rv = find(edges[i][0]), find(edges[i][1])
                if ru != rv:
                    parent[ru] = rv
        sizes = {}
        for v in range(n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        key = tuple(sorted(sizes.values(), reverse=True))
        acc[key] = acc.get(key, 0) + (-1) ** bits
    return {k: v for k, v in acc.items() if v}


def connected_partition_types(n, edges):
    """All achievable component-size types over edge subsets."""
    out = set()
    m = len(edges)
    for mask in range(1 << m):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for i in range(m):
            if mask >> i & 1:
                ru, rv = find(edges[i][0]), find(edges[i][1])
                if ru != rv:
                    parent[ru] = rv
        sizes = {}
        for v in range(n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        out.add(tuple(sorted(sizes.values(), reverse=True)))
    return out


def count_colorings(n, edges, k):
    """Number of proper colorings with k colors, direct assignment."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colors = [-1] * n

    def rec(v):
        if v == n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[w] != c for w in adj[v] if w < v):
                colors[v] = c
                total += rec(v + 1)
        colors[v] = -1
        return total

    return rec(0)


def eval_elementary(xs, j):
    """e_j at the point xs, via the coefficient recurrence of
    prod(1 + x_i t)."""
    coeffs = [1] + [0] * j
    for x in xs:
        for d in range(min(j, len(coeffs) - 1), 0, -1):
            coeffs[d] += x * coeffs[d - 1]
    return coeffs[j]


def eval_power_sum(xs, k):
    return sum(x ** k for x in xs)


def eval_e_expansion(expansion, xs):
    """Numeric value of an elementary-basis expansion at the point xs."""
    total = 0
    for key, coeff in expansion.terms.items():
        prod = coeff
        for part in key:
            prod *= eval_elementary(xs, part)
        total += prod
    return total


def random_points(n_vars, count, seed=0, lo=-6, hi=7):
    rng = Random(seed)
    return [tuple(rng.randint(lo, hi) for _ in range(n_vars))
            for _ in range(count)]


def prufer_to_edges(seq, n):
    """Decode a length-(n-2) sequence over 0..n-1 into a labeled tree."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def all_labeled_trees(n):
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_edges(seq, n)


def ahu_canonical(n, edges):
    """Isomorphism-invariant string: parenthesis encoding rooted at the
    centroid(s), minimized when there are two."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def subtree_sizes(root):
        size = [0] * n
        order, parent = [root], [-1] * n
        parent[root] = root
        for v in order:
            for w in adj[v]:
                if parent[w] == -1 and w != root:
                    parent[w] = v
                    order.append(w)
        for v in reversed(order):
            size[v] = 1 + sum(size[w] for w in adj[v] if parent[w] == v)
        return size, parent

    size, _ = subtree_sizes(0)
    best = n
    centroids = []
    for v in range(n):
        sz, parent = subtree_sizes(v)
        heaviest = max((sz[w] for w in adj[v]), default=0)
        if heaviest < best:
            best = heaviest
            centroids = [v]
        elif heaviest == best:
            centroids.append(v)

    def encode(v, parent):
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in centroids)


def free_tree_count_by_prufer(n):
    """Number of isomorphism classes of trees on n vertices, found the slow
    honest way."""
    return len({ahu_canonical(n, edges) for edges in all_labeled_trees(n)})


def binomial(n, k):
    return comb(n, k)
