"""Trees with leaf boundary: named families, canonical forms, enumeration.

A tree is a vertex count plus an edge list over {0..n-1}; its boundary is
always the leaf set.  This module constructs the families the optimization
theory is phrased in (paths, spiders, double spiders, generalized almost
seesaw trees), recognizes them back from bare edge lists, computes an
isomorphism-invariant canonical code, and enumerates all unlabeled trees
of a given order and diameter for the brute-force certification harness.

Vertex labeling of constructed families is deterministic: center(s) get
the smallest labels, then each branch is laid out outward in profile
order, so that golden outputs are reproducible.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional

import networkx as nx

Edge = tuple[int, int]


# ------------------------------ core type ------------------------------


@dataclass(frozen=True)
class Tree:
    """Finite unweighted tree on vertices {0..n-1}.

    Invariants checked on construction: exactly n-1 edges, no self-loops,
    no repeated edges, connected.  Edges are normalized to (min, max) and
    sorted, so two Tree objects are equal iff they are the same labeled
    tree.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"tree needs at least 2 vertices, got n={self.n}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        if len(normalized) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} edges, got {len(normalized)}")
        if len(set(normalized)) != len(normalized):
            raise ValueError("repeated edge")
        object.__setattr__(self, "edges", tuple(normalized))
        if len(self._bfs_order(0)) != self.n:
            raise ValueError("edge list is not connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def _bfs_order(self, start: int) -> list[int]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = [False] * self.n
        seen[start] = True
        order = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
                    queue.append(y)
        return order

    def bfs_distances(self, start: int) -> list[int]:
        """Graph distances from start to every vertex."""
        dist = [-1] * self.n
        dist[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def path_between(self, a: int, b: int) -> list[int]:
        """The unique path from a to b, as a vertex sequence."""
        parent = [-1] * self.n
        parent[a] = a
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self.adjacency[x]:
                if parent[y] < 0:
                    parent[y] = x
                    queue.append(y)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        path.reverse()
        return path


def leaf_set(t: Tree) -> list[int]:
    """All degree-1 vertices, ascending.  For n=2 both vertices are leaves."""
    return [v for v in range(t.n) if t.degrees[v] == 1]


def diameter(t: Tree) -> int:
    """Longest path length in edges, by the double breadth-first sweep."""
    d0 = t.bfs_distances(0)
    far = max(range(t.n), key=lambda v: (d0[v], -v))
    d1 = t.bfs_distances(far)
    return max(d1)


def tree_centers(t: Tree) -> list[int]:
    """The one or two middle vertices, found by stripping leaves in rounds."""
    if t.n <= 2:
        return list(range(t.n))
    deg = list(t.degrees)
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in t.adjacency[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        remaining -= len(layer)
        layer = nxt
    return sorted(layer)


# ------------------------------ profiles ------------------------------


@dataclass(frozen=True)
class SpiderProfile:
    """Branch-length multiset of a one-center tree, stored longest first."""

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.lengths) < 2:
            raise ValueError("spider needs at least 2 branches")
        if any(l < 1 for l in self.lengths):
            raise ValueError(f"branch lengths must be >= 1, got {self.lengths}")
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths, reverse=True)))

    @property
    def order(self) -> int:
        return 1 + sum(self.lengths)

    @property
    def diameter(self) -> int:
        return self.lengths[0] + self.lengths[1]


@dataclass(frozen=True)
class ASParams:
    """Generalized almost seesaw tree AS(r, q+2, c, t).

    The spider with principal branches r+1 and r plus q lateral branches:
    t of length c+1 and q-t of length c.  Lateral mass M = q*c + t.
    """

    r: int
    q: int
    c: int
    t: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.q < 1 or self.c < 1:
            raise ValueError(f"need r,q,c >= 1, got {self!r}")
        if not 0 <= self.t <= self.q - 1:
            raise ValueError(f"need 0 <= t <= q-1, got {self!r}")
        if self.c > self.r:
            raise ValueError(f"lateral length c={self.c} exceeds r={self.r}")
        if self.t > 0 and self.c + 1 > self.r:
            raise ValueError(f"lateral length c+1={self.c + 1} exceeds r={self.r}")

    @property
    def lateral_mass(self) -> int:
        return self.q * self.c + self.t

    @property
    def order(self) -> int:
        return 2 * self.r + 2 + self.lateral_mass

    @property
    def diameter(self) -> int:
        return 2 * self.r + 1

    def spider_profile(self) -> SpiderProfile:
        lateral = (self.c + 1,) * self.t + (self.c,) * (self.q - self.t)
        return SpiderProfile((self.r + 1, self.r) + lateral)


@dataclass(frozen=True)
class DoubleSpiderProfile:
    """Two adjacent centers u, v carrying disjoint pendant paths.

    Sides are stored longest-first and ordered so that the a-side is the
    lexicographically larger tuple; DS(x;y) and DS(y;x) are the same
    unlabeled tree, so the constructor canonicalizes.
    """

    a_lengths: tuple[int, ...]
    b_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.a_lengths or not self.b_lengths:
            raise ValueError("double spider needs a nonempty branch list on each side")
        if any(l < 1 for l in self.a_lengths + self.b_lengths):
            raise ValueError("branch lengths must be >= 1")
        a = tuple(sorted(self.a_lengths, reverse=True))
        b = tuple(sorted(self.b_lengths, reverse=True))
        if a < b:
            a, b = b, a
        object.__setattr__(self, "a_lengths", a)
        object.__setattr__(self, "b_lengths", b)

    @property
    def order(self) -> int:
        return 2 + sum(self.a_lengths) + sum(self.b_lengths)

    @property
    def diameter(self) -> int:
        return self.a_lengths[0] + self.b_lengths[0] + 1


# ---------------------------- constructors ----------------------------


def make_path(length: int) -> Tree:
    """Path with `length` edges (so diameter length), labeled 0..length."""
    if length < 1:
        raise ValueError(f"path length must be >= 1, got {length}")
    return Tree(length + 1, tuple((i, i + 1) for i in range(length)))


def make_spider(profile: SpiderProfile) -> Tree:
    """One-center tree: vertex 0 is the hub, branches laid out longest first."""
    edges = []
    nxt = 1
    for length in profile.lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def make_as_tree(p: ASParams) -> Tree:
    """Generalized almost seesaw tree, as the spider it abbreviates."""
    return make_spider(p.spider_profile())


def make_double_spider(profile: DoubleSpiderProfile) -> Tree:
    """Two-center tree: vertex 0 = u, vertex 1 = v, then branches outward."""
    edges = [(0, 1)]
    nxt = 2
    for root, lengths in ((0, profile.a_lengths), (1, profile.b_lengths)):
        for length in lengths:
            prev = root
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree(nxt, tuple(edges))


# ---------------------------- recognizers -----------------------------


def _pendant_path_length(t: Tree, start: int, first: int) -> int:
    """Edge count of the path leaving `start` through `first`.

    Only valid when the walk meets no further branching; the recognizers
    below call it exactly in that situation.
    """
    length = 1
    prev, cur = start, first
    while t.degrees[cur] == 2:
        nxt = t.adjacency[cur][0] if t.adjacency[cur][0] != prev else t.adjacency[cur][1]
        prev, cur = cur, nxt
        length += 1
    return length


def recognize_spider(t: Tree) -> Optional[SpiderProfile]:
    """Profile of t if it has at most one vertex of degree >= 3, else None.

    A path of diameter d >= 2 reports as the 2-branch profile
    (ceil(d/2), floor(d/2)); the single edge has no valid profile and
    reports None.
    """
    hubs = [v for v in range(t.n) if t.degrees[v] >= 3]
    if len(hubs) > 1:
        return None
    if not hubs:
        d = t.n - 1
        if d < 2:
            return None
        return SpiderProfile(((d + 1) // 2, d // 2))
    center = hubs[0]
    lengths = [_pendant_path_length(t, center, w) for w in t.adjacency[center]]
    return SpiderProfile(tuple(lengths))


def recognize_double_spider(t: Tree) -> Optional[DoubleSpiderProfile]:
    """Profile of t if all branching sits on two adjacent vertices.

    Trees with at most one branch vertex qualify too, split along a
    longest branch; stars and paths with fewer than 3 edges do not admit
    two nonempty sides and report None.
    """
    hubs = [v for v in range(t.n) if t.degrees[v] >= 3]
    if len(hubs) > 2:
        return None
    if len(hubs) == 2:
        u, v = hubs
        if v not in t.adjacency[u]:
            return None
        a = [_pendant_path_length(t, u, w) for w in t.adjacency[u] if w != v]
        b = [_pendant_path_length(t, v, w) for w in t.adjacency[v] if w != u]
        return DoubleSpiderProfile(tuple(a), tuple(b))
    if len(hubs) == 1:
        prof = recognize_spider(t)
        assert prof is not None
        if prof.lengths[0] < 2:
            return None  # star: the split would leave an empty side
        rest = prof.lengths[1:]
        return DoubleSpiderProfile(rest, (prof.lengths[0] - 1,))
    d = t.n - 1
    if d < 3:
        return None
    return DoubleSpiderProfile((d // 2,), ((d - 1) // 2,))


# --------------------------- canonical code ---------------------------


def _rooted_code(t: Tree, root: int, banned: int) -> bytes:
    """AHU code of the subtree at root, not crossing the vertex `banned`.

    Children are sorted by code, so the result is invariant under
    relabeling.  Iterative post-order; recursion would overflow on long
    CLI-constructed paths.
    """
    code: dict[int, bytes] = {}
    stack: list[tuple[int, int, bool]] = [(root, banned, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            kids = sorted(code[w] for w in t.adjacency[v] if w != parent)
            code[v] = b"(" + b"".join(kids) + b")"
        else:
            stack.append((v, parent, True))
            for w in t.adjacency[v]:
                if w != parent:
                    stack.append((w, v, False))
    return code[root]


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-invariant code: equal codes iff isomorphic trees.

    Rooted at the tree center; the one- and two-center cases carry
    distinct prefixes so that a code never collides across the two
    shapes.
    """
    centers = tree_centers(t)
    if len(centers) == 1:
        return b"1" + _rooted_code(t, centers[0], -1)
    a, b = centers
    ca = _rooted_code(t, a, b)
    cb = _rooted_code(t, b, a)
    lo, hi = sorted((ca, cb))
    return b"2" + lo + hi


# ----------------------------- enumeration ----------------------------


@lru_cache(maxsize=None)
def _tree_catalog(n: int) -> tuple[tuple[int, bytes, tuple[Edge, ...]], ...]:
    """Every unlabeled tree of order n, as (diameter, code, edges).

    Backed by the write-read-orient-merge generator; entries are sorted
    by (diameter, code), which fixes the enumeration order.  Codes are
    checked pairwise distinct, so the generator emitting an isomorphic
    duplicate would be caught here.
    """
    if n < 2:
        raise ValueError(f"tree enumeration needs n >= 2, got n={n}")
    entries = []
    for g in nx.nonisomorphic_trees(n):
        relabel = {node: i for i, node in enumerate(sorted(g.nodes()))}
        t = Tree(n, tuple((relabel[u], relabel[v]) for u, v in g.edges()))
        entries.append((diameter(t), canonical_code(t), t.edges))
    entries.sort()
    codes = {code for _, code, _ in entries}
    if len(codes) != len(entries):
        raise RuntimeError(f"tree generator emitted isomorphic duplicates at n={n}")
    return tuple(entries)


def enumerate_trees(n: int, d: int) -> Iterator[Tree]:
    """One representative per isomorphism class with order n, diameter d.

    Deterministic order (sorted canonical codes); empty when no tree of
    that order and diameter exists.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}, n={n}")
    for dd, _code, edges in _tree_catalog(n):
        if dd == d:
            yield Tree(n, edges)


def count_trees(n: int) -> int:
    """Number of unlabeled trees of order n (all diameters)."""
    return len(_tree_catalog(n))


# ------------------------- parsing and rendering ------------------------


_SHORTHAND_RE = re.compile(r"^(path|spider|ds|as):([0-9,/]+)$")


def parse_tree(text: str) -> Tree:
    """Tree from shorthand: path:L, spider:3,2,1, ds:2,1/2, as:r,q,c,t."""
    m = _SHORTHAND_RE.match(text.strip())
    if not m:
        raise ValueError(
            f"unrecognized tree shorthand {text!r}; expected path:L, "
            "spider:L1,L2,..., ds:A1,../B1,.., or as:r,q,c,t"
        )
    kind, body = m.groups()
    try:
        if kind == "path":
            return make_path(int(body))
        if kind == "spider":
            return make_spider(SpiderProfile(tuple(int(x) for x in body.split(","))))
        if kind == "ds":
            a_part, b_part = body.split("/")
            return make_double_spider(
                DoubleSpiderProfile(
                    tuple(int(x) for x in a_part.split(",")),
                    tuple(int(x) for x in b_part.split(",")),
                )
            )
        r, q, c, t = (int(x) for x in body.split(","))
        return make_as_tree(ASParams(r, q, c, t))
    except ValueError as exc:
        raise ValueError(f"bad tree shorthand {text!r}: {exc}") from exc


def parse_tree_text(text: str) -> Tree:
    """Tree from the edge-list format: first line n, then n-1 lines 'u v'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty tree description")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ValueError(f"bad tree file: {exc}") from exc
    return Tree(n, tuple(edges))


def format_tree_text(t: Tree) -> str:
    """Inverse of parse_tree_text."""
    return "\n".join([str(t.n)] + [f"{u} {v}" for u, v in t.edges]) + "\n"


def render_shorthand(t: Tree) -> Optional[str]:
    """Most specific shorthand describing t, or None for other shapes."""
    if all(deg <= 2 for deg in t.degrees):
        return f"path:{t.n - 1}"
    spider = recognize_spider(t)
    if spider is not None:
        return "spider:" + ",".join(str(l) for l in spider.lengths)
    ds = recognize_double_spider(t)
    if ds is not None:
        a = ",".join(str(l) for l in ds.a_lengths)
        b = ",".join(str(l) for l in ds.b_lengths)
        return f"ds:{a}/{b}"
    return None
