"""Trees, spiders and small simple graphs, plus connected-partition machinery.

A connected partition of type lambda splits the vertex set into blocks that
induce connected subgraphs with block sizes lambda.  For trees this is
equivalent to deleting an edge subset whose component sizes are lambda, which
turns the search into a structured bottom-up scan.  Spiders additionally
admit an exact reduction to a tiny bin-packing problem, fast enough to sweep
every partition type on spiders with dozens of vertices.
"""

from __future__ import annotations

from typing import Iterator

from espider.partitions import Partition, partitions_of


class Spider:
    """A star of paths: d legs of the given lengths joined at one center.

    The graph has 1 + sum(legs) vertices; leg lengths count the vertices on
    the leg excluding the center.
    """

    __slots__ = ("legs",)

    def __init__(self, legs):
        if not isinstance(legs, Partition):
            legs = Partition(legs)
        if len(legs) < 1:
            raise ValueError("a spider needs at least one leg")
        object.__setattr__(self, "legs", legs)

    def __setattr__(self, name, value):
        raise AttributeError("Spider is immutable")

    @property
    def n(self) -> int:
        return 1 + self.legs.n

    @property
    def d(self) -> int:
        return len(self.legs)

    def __eq__(self, other):
        return isinstance(other, Spider) and self.legs == other.legs

    def __hash__(self):
        return hash(("Spider", self.legs))

    def __repr__(self):
        return f"Spider({list(self.legs.parts)})"

    def __str__(self):
        return "S[" + ",".join(str(l) for l in self.legs) + "]"

    @classmethod
    def parse(cls, text: str) -> "Spider":
        text = text.strip()
        if not (text.startswith("S[") and text.endswith("]")):
            raise ValueError(f"cannot parse spider notation {text!r}")
        return cls([int(tok) for tok in text[2:-1].split(",")])

    def to_tree(self) -> "Tree":
        return spider_to_tree(self)

    def has_connected_partition(self, typ: Partition) -> bool:
        """Exact check via packing: one part is the center block, the rest
        must fit into the legs (any multiset summing to at most a leg's
        length fits, because a path can be cut into arbitrary pieces)."""
        if typ.n != self.n:
            raise ValueError(f"type weight {typ.n} != vertex count {self.n}")
        caps = self.legs.parts
        items = list(typ.parts)
        seen = set()
        for idx, a in enumerate(items):
            if a in seen:
                continue
            seen.add(a)
            rest = tuple(items[:idx] + items[idx + 1:])
            if _pack(rest, 0, tuple(sorted(caps, reverse=True)), {}):
                return True
        return False

    def first_missing_type(self) -> Partition | None:
        """Reverse-lexicographically first type with no connected partition."""
        for typ in partitions_of(self.n):
            if not self.has_connected_partition(typ):
                return typ
        return None

    def has_all_connected_partitions(self) -> bool:
        return self.first_missing_type() is None


def _pack(items, idx, caps, memo):
    # Can items[idx:] (descending) be placed into bins with capacities
    # `caps` (descending), no bin exceeded?  Leftover capacity is fine.
    if idx == len(items):
        return True
    key = (idx, caps)
    hit = memo.get(key)
    if hit is not None:
        return hit
    it = items[idx]
    ok = False
    tried = set()
    for b, cap in enumerate(caps):
        if cap < it:
            break  # caps descending: nothing later fits either
        if cap in tried:
            continue
        tried.add(cap)
        new_caps = tuple(sorted(caps[:b] + (cap - it,) + caps[b + 1:],
                                reverse=True))
        if _pack(items, idx + 1, new_caps, memo):
            ok = True
            break
    memo[key] = ok
    return ok


class Tree:
    """An unrooted tree on vertices 0..n-1 given by its edge set."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges):
        edge_set = frozenset(tuple(sorted(e)) for e in edges)
        if n < 1:
            raise ValueError("a tree needs at least one vertex")
        for u, v in edge_set:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
        if len(edge_set) != n - 1:
            raise ValueError(f"a tree on {n} vertices has {n - 1} edges, "
                             f"got {len(edge_set)}")
        adj = [[] for _ in range(n)]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            raise ValueError("edge set is not connected")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_set)
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    @property
    def adj(self):
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def __eq__(self, other):
        return (isinstance(other, Tree) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self):
        return hash(("Tree", self.n, self.edges))

    def __repr__(self):
        return f"Tree({self.n}, {sorted(self.edges)})"

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "Tree":
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        if not lines:
            raise ValueError("empty tree text")
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
        return cls(n, edges)

    def is_spider(self) -> bool:
        """At most one vertex of degree >= 3 (paths count as spiders)."""
        return sum(1 for v in range(self.n) if self.degree(v) >= 3) <= 1

    def as_spider(self) -> Spider | None:
        """The Spider this tree is, or None.

        A path on k+1 >= 2 vertices is reported as the one-leg spider S(k).
        """
        if self.n == 1:
            return None
        centers = [v for v in range(self.n) if self.degree(v) >= 3]
        if len(centers) > 1:
            return None
        if centers:
            return reduce_to_spider(self, centers[0])
        return Spider([self.n - 1])  # a path


class SimpleGraph:
    """A loopless simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges):
        edge_set = frozenset(tuple(sorted(e)) for e in edges)
        for u, v in edge_set:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
        adj = [[] for _ in range(n)]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_set)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    @property
    def adj(self):
        return self._adj

    def __repr__(self):
        return f"SimpleGraph({self.n}, {sorted(self.edges)})"


class ModTypeInfo:
    """Arithmetic verdict for block types (m^q, r) on a spider.

    With n = mq + r (0 <= r < m) and sigma = 1 + sum of leg residues mod m,
    the spider has a connected partition of type (m^q, r) exactly when
    sigma == r, or sigma == m + r with some leg residue >= r.  sigma is
    always congruent to r mod m, so the only other possibility is
    sigma >= 2m; either failure mode proves the type missing.
    """

    __slots__ = ("m", "q", "r", "sigma", "residues", "has_type")

    def __init__(self, m, q, r, sigma, residues, has_type):
        self.m = m
        self.q = q
        self.r = r
        self.sigma = sigma
        self.residues = residues
        self.has_type = has_type

    @property
    def type_partition(self) -> Partition:
        return Partition((self.m,) * self.q + ((self.r,) if self.r else ()))


def spider_mod_type_info(s: Spider, m: int) -> ModTypeInfo:
    """Decide in O(d) whether s has a connected partition of type (m^q, r)."""
    if m <= 1:
        raise ValueError(f"modulus must exceed 1, got {m}")
    q, r = divmod(s.n, m)
    residues = s.legs.residue_vector(m)
    sigma = 1 + sum(residues)
    has = sigma == r or (sigma == m + r and any(x >= r for x in residues))
    return ModTypeInfo(m, q, r, sigma, residues, has)


def spider_to_tree(s: Spider) -> Tree:
    """Lay the spider out: vertex 0 is the center, legs take consecutive
    index ranges in decreasing leg order."""
    edges = []
    nxt = 1
    for leg in s.legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(s.n, edges)


def reduce_to_spider(t: Tree, v: int) -> Spider:
    """Spider whose legs are the sizes of the subtrees hanging off v."""
    if t.degree(v) < 3:
        raise ValueError(f"vertex {v} has degree {t.degree(v)} < 3")
    legs = []
    for w in t.adj[v]:
        seen = {v, w}
        stack = [w]
        size = 1
        while stack:
            x = stack.pop()
            for y in t.adj[x]:
                if y not in seen:
                    seen.add(y)
                    size += 1
                    stack.append(y)
        legs.append(size)
    return Spider(legs)


def has_connected_partition(t: Tree, typ: Partition) -> bool:
    """Does some edge-subset deletion split t into components of sizes typ?

    Bottom-up over the rooted tree: the state at a vertex is the achievable
    set of (size of the still-open component at the root, counts of already
    completed block sizes), pruned against typ.  For each child edge we
    either keep it (sizes merge) or cut it (the child component must close
    as a needed block size).
    """
    if typ.n != t.n:
        raise ValueError(f"type weight {typ.n} != vertex count {t.n}")
    values = sorted({p for p in typ.parts})
    index = {s: i for i, s in enumerate(values)}
    need = tuple(typ.parts.count(s) for s in values)
    maxpart = typ.parts[0]
    zero = (0,) * len(values)

    order, parent = _dfs_order(t, 0)
    states: list[dict | None] = [None] * t.n
    for v in reversed(order):
        st = {(1, zero)}
        for w in t.adj[v]:
            if w == parent[v]:
                continue
            child = states[w]
            states[w] = None
            new = set()
            for (rp, up) in st:
                for (rc, uc) in child:
                    merged = tuple(a + b for a, b in zip(up, uc))
                    if any(a > b for a, b in zip(merged, need)):
                        continue
                    total = rp + rc
                    if total <= maxpart:
                        new.add((total, merged))
                    i = index.get(rc)
                    if i is not None and merged[i] < need[i]:
                        closed = merged[:i] + (merged[i] + 1,) + merged[i + 1:]
                        new.add((rp, closed))
            st = new
            if not st:
                return False
        states[v] = st

    root_states = states[order[0]]
    for (r, u) in root_states:
        i = index.get(r)
        if i is None:
            continue
        final = u[:i] + (u[i] + 1,) + u[i + 1:]
        if final == need:
            return True
    return False


def _dfs_order(t: Tree, root: int):
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for v in order:
        for w in t.adj[v]:
            if parent[w] == -1 and w != root:
                parent[w] = v
                order.append(w)
    return order, parent


def first_missing_type(t: Tree) -> Partition | None:
    """Reverse-lexicographically first type t is missing, or None."""
    for typ in partitions_of(t.n):
        if not has_connected_partition(t, typ):
            return typ
    return None


def has_all_connected_partitions(t: Tree) -> bool:
    return first_missing_type(t) is None


def graph_has_connected_partition(g: SimpleGraph, typ: Partition,
                                  max_n: int = 14) -> bool:
    """Connected-partition check for small general graphs by backtracking
    over vertex blocks (smallest free vertex seeds each block)."""
    if typ.n != g.n:
        raise ValueError(f"type weight {typ.n} != vertex count {g.n}")
    if g.n > max_n:
        raise ValueError(f"general-graph check capped at {max_n} vertices")
    remaining = sorted(typ.parts, reverse=True)

    def place(free: frozenset, counts: dict) -> bool:
        if not free:
            return all(c == 0 for c in counts.values())
        v = min(free)
        for size in sorted({s for s, c in counts.items() if c > 0}, reverse=True):
            counts[size] -= 1
            for block in _connected_sets(g, v, size, free):
                if place(free - block, counts):
                    counts[size] += 1
                    return True
            counts[size] += 1
        return False

    counts: dict[int, int] = {}
    for p in remaining:
        counts[p] = counts.get(p, 0) + 1
    return place(frozenset(range(g.n)), counts)


def _connected_sets(g: SimpleGraph, v: int, size: int, allowed: frozenset):
    """All connected vertex sets of the given size containing v inside
    `allowed`.  Plain combinations plus a connectivity scan; only ever run
    on graphs small enough for that to be cheap."""
    from itertools import combinations

    if size == 1:
        yield frozenset([v])
        return
    pool = sorted(allowed - {v})
    for combo in combinations(pool, size - 1):
        block = frozenset(combo) | {v}
        if _is_connected_within(g, block):
            yield block


def _is_connected_within(g: SimpleGraph, block: frozenset) -> bool:
    start = next(iter(block))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in block and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(block)


def graph_has_all_connected_partitions(g: SimpleGraph, max_n: int = 14) -> bool:
    return all(graph_has_connected_partition(g, typ, max_n)
               for typ in partitions_of(g.n))


def line_graph(g: SimpleGraph | Tree) -> SimpleGraph:
    """One vertex per edge; adjacency = shared endpoint."""
    base = sorted(g.edges)
    idx = {e: i for i, e in enumerate(base)}
    out = []
    for i, (u1, v1) in enumerate(base):
        for j in range(i + 1, len(base)):
            u2, v2 = base[j]
            if len({u1, v1} & {u2, v2}) > 0:
                out.append((i, j))
    return SimpleGraph(len(base), out)


def mn_tree(n: int) -> Tree:
    """Path of 2n+1 vertices with two extra leaves on path positions n, n+1.

    Positions are 1-indexed along the path; vertices 0..2n are the path,
    2n+1 hangs off position n and 2n+2 off position n+1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    edges = [(i, i + 1) for i in range(2 * n)]
    edges.append((n - 1, 2 * n + 1))
    edges.append((n, 2 * n + 2))
    return Tree(2 * n + 3, edges)


def enumerate_spiders(n: int, legs: int | None = None) -> Iterator[Spider]:
    """One spider per partition of n-1 (optionally with exactly `legs`
    parts), in reverse-lexicographic leg order."""
    if n < 2:
        raise ValueError(f"spiders need >= 2 vertices, got {n}")
    for p in partitions_of(n - 1, length=legs):
        yield Spider(p)


# ---------------------------------------------------------------------------
# Free-tree enumeration.

def _rooted_level_sequences(n: int):
    """All canonical level sequences of rooted trees on n vertices
    (root level 0), generated by the classic successor rule in
    decreasing lexicographic order starting from the path."""
    if n == 1:
        yield (0,)
        return
    seq = list(range(n))  # the path
    while True:
        yield tuple(seq)
        p = -1
        for i in range(n - 1, 0, -1):
            if seq[i] > 1:
                p = i
                break
        if p == -1:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _levels_to_tree(seq) -> Tree:
    n = len(seq)
    if n == 1:
        return Tree(1, [])
    latest = [0] * n  # latest vertex seen at each level
    edges = []
    for i in range(1, n):
        lvl = seq[i]
        edges.append((latest[lvl - 1], i))
        latest[lvl] = i
    return Tree(n, edges)


def tree_centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices, found by iterative leaf stripping."""
    if t.n == 1:
        return [0]
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] == 1]
    removed = len(layer)
    while removed < t.n:
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        if not nxt:
            break
        removed += len(nxt)
        layer = nxt
    return sorted(layer)


def _canonical_rooted_seq(t: Tree, root: int) -> tuple[int, ...]:
    def canon(v, parent, depth):
        subs = sorted((canon(w, v, depth + 1) for w in t.adj[v] if w != parent),
                      reverse=True)
        out = (depth,)
        for s in subs:
            out += s
        return out

    return canon(root, -1, 0)


def canonical_form(t: Tree) -> tuple[int, ...]:
    """Level sequence rooted at the center, minimized over both centers
    when the tree is bicentral.  Equal forms iff isomorphic."""
    return min(_canonical_rooted_seq(t, c) for c in tree_centers(t))


def enumerate_trees(n: int, bound: int = 18) -> Iterator[Tree]:
    """One representative per isomorphism class of free trees on n vertices,
    in increasing canonical-form order."""
    if not 1 <= n <= bound:
        raise ValueError(f"n must be in 1..{bound}, got {n}")
    seen = {}
    for seq in _rooted_level_sequences(n):
        t = _levels_to_tree(seq)
        form = canonical_form(t)
        if form not in seen:
            seen[form] = t
    for form in sorted(seen):
        yield seen[form]
