"""Undirected simple graphs with bit-set adjacency rows.

Adjacency is one Python integer per vertex (bit j of rows[j] set iff i ~ j),
which gives the clique-search kernels fast row intersection on graphs up to
a few thousand vertices.  Constructors cover orthogonality graphs, Cayley
graphs, the OR product, complements and disjoint unions, plus DIMACS and
JSON I/O and a small exact isomorphism search.
"""

from __future__ import annotations

import json
from multiprocessing import get_context

from .clifford import CliffordElement
from .errors import BadConnectionSetError, ShapeMismatchError
from .states import StateFamily, is_orthogonal


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: list[int], labels: tuple[str, ...] | None = None):
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & (1 << i):
                raise ValueError(f"self-loop at vertex {i}")
            if r & ~full:
                raise ValueError(f"row {i} addresses vertices outside range")
        for i in range(n):
            for j in _bits(rows[i]):
                if not rows[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")
        self.n = n
        self.rows = tuple(rows)
        self.labels = labels

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_edges(
        cls, n: int, edges, labels: tuple[str, ...] | None = None
    ) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("self-loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, rows, labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def pan(cls, n: int) -> "Graph":
        """An n-cycle plus a pendant vertex attached to vertex 0."""
        edges = [(i, (i + 1) % n) for i in range(n)] + [(0, n)]
        return cls.from_edges(n + 1, edges)

    # -- queries -----------------------------------------------------------
    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(i) for i in range(self.n)]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            r = self.rows[i] >> (i + 1) << (i + 1)
            out.extend((i, j) for j in _bits(r))
        return out

    def is_regular(self) -> int | None:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [full & ~self.rows[i] & ~(1 << i) for i in range(self.n)]
        return Graph(self.n, rows, self.labels)

    def subgraph(self, vertices: list[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for v in vertices:
            for w in _bits(self.rows[v]):
                if w in pos:
                    rows[pos[v]] |= 1 << pos[w]
        labels = tuple(self.labels[v] for v in vertices) if self.labels else None
        return Graph(len(vertices), rows, labels)

    def relabeled(self, perm: list[int]) -> "Graph":
        """Graph with vertex i renamed perm[i]."""
        rows = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.rows[i]):
                rows[perm[i]] |= 1 << perm[j]
        return Graph(self.n, rows)

    def edge_set(self) -> frozenset:
        return frozenset((min(i, j), max(i, j)) for i, j in self.edges())

    # -- I/O ----------------------------------------------------------------
    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.edge_count()}"]
        lines += [f"e {i + 1} {j + 1}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dimacs(cls, text: str) -> "Graph":
        n = None
        edges = []
        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        if n is None:
            raise ValueError("missing DIMACS problem line")
        return cls.from_edges(n, edges)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "edges": [[i, j] for i, j in self.edges()],
                "labels": list(self.labels) if self.labels else None,
            },
            sort_keys=True,
        )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def disjoint_union(m: int, g: Graph) -> Graph:
    """Disjoint union of m copies of g (so disjoint_union(m, complete(n)) = mK_n)."""
    n = g.n
    rows = []
    for copy in range(m):
        off = copy * n
        rows.extend(r << off for r in g.rows)
    return Graph(m * n, rows)


def or_product(g: Graph, h: Graph) -> Graph:
    """OR product: (a,b) ~ (a',b') iff a ~ a' or b ~ b'; vertex (a,b) -> a*h.n + b."""
    hn = h.n
    full_h = (1 << hn) - 1
    col = 0
    for a in range(g.n):
        col |= 1 << (a * hn)
    rows = []
    for a in range(g.n):
        row_left = 0
        for a2 in _bits(g.rows[a]):
            row_left |= full_h << (a2 * hn)
        for b in range(hn):
            row = row_left
            for b2 in _bits(h.rows[b]):
                row |= col << b2
            row &= ~(1 << (a * hn + b))
            rows.append(row)
    return Graph(g.n * hn, rows)


def _orth_rows_block(args) -> list[tuple[int, int]]:
    states, lo, hi = args
    out = []
    for i in range(lo, hi):
        row = 0
        si = states[i]
        for j in range(len(states)):
            if j != i and is_orthogonal(si, states[j]):
                row |= 1 << j
        out.append((i, row))
    return out


def orthogonality_graph(family: StateFamily, jobs: int = 1) -> Graph:
    """Vertex per state (in family order), edge iff exactly orthogonal."""
    states = list(family.states)
    n = len(states)
    labels = tuple(s.label for s in states)
    if jobs <= 1 or n < 64:
        rows = [0] * n
        for i in range(n):
            si = states[i]
            for j in range(i + 1, n):
                if is_orthogonal(si, states[j]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(n, rows, labels)
    # parallel path: each worker fills whole rows for a block of vertices
    for s in states:
        s.group()
    chunks = []
    step = max(1, -(-n // jobs))
    for lo in range(0, n, step):
        chunks.append((states, lo, min(n, lo + step)))
    ctx = get_context("fork")
    with ctx.Pool(jobs) as pool:
        parts = pool.map(_orth_rows_block, chunks)
    rows = [0] * n
    for part in parts:
        for i, row in part:
            rows[i] = row
    return Graph(n, rows, labels)


def cayley_graph(elements: list[CliffordElement], connection) -> Graph:
    """Cayley graph on the listed group elements: g ~ h iff g^{-1} h in T."""
    tkeys = {t.key for t in connection}
    tlist = list(connection)
    for t in tlist:
        if t.is_identity():
            raise BadConnectionSetError("connection set contains the identity")
        if t.inverse().key not in tkeys:
            raise BadConnectionSetError("connection set is not inverse-closed")
    index = {g.key: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate group elements")
    rows = [0] * len(elements)
    for i, g in enumerate(elements):
        for t in tlist:
            h = g.compose(t)
            j = index.get(h.key)
            if j is None:
                raise ShapeMismatchError("element list is not closed under T")
            if j != i:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    labels = tuple(f"C{g.f}{g.u}" for g in elements)
    return Graph(len(elements), rows, labels)


# -- exact isomorphism on small graphs ---------------------------------------

def _refine_invariants(g: Graph, rounds: int = 3) -> list[tuple]:
    inv = [(g.degree(i),) for i in range(g.n)]
    for _ in range(rounds):
        inv = [
            inv[i] + (tuple(sorted(inv[j] for j in _bits(g.rows[i]))),)
            for i in range(g.n)
        ]
    return inv


def find_isomorphism(g: Graph, h: Graph, max_n: int = 64) -> list[int] | None:
    """A bijection mapping g-vertices to h-vertices preserving adjacency, or None.

    Vertex-invariant refinement followed by backtracking; intended for the
    desk-scale identifications (pentagons, pan complements, the 24-vertex
    entangled graph), not as a general-purpose solver.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if g.n > max_n:
        raise ValueError(f"isomorphism search capped at {max_n} vertices")
    gi = _refine_invariants(g)
    hi = _refine_invariants(h)
    if sorted(gi) != sorted(hi):
        return None
    candidates = [
        [v for v in range(h.n) if hi[v] == gi[u]] for u in range(g.n)
    ]
    order = sorted(range(g.n), key=lambda u: len(candidates[u]))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(idx: int) -> bool:
        if idx == g.n:
            return True
        u = order[idx]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in range(g.n):
                if mapping[w] >= 0:
                    if g.has_edge(u, w) != h.has_edge(v, mapping[w]):
                        ok = False
                        break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(idx + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    if extend(0):
        return mapping
    return None


def verify_bijection(g: Graph, h: Graph, mapping: list[int]) -> bool:
    if sorted(mapping) != list(range(g.n)):
        return False
    return all(
        g.has_edge(i, j) == h.has_edge(mapping[i], mapping[j])
        for i in range(g.n)
        for j in range(i + 1, g.n)
    )


def automorphism_count(g: Graph, max_n: int = 64) -> int:
    """Order of the automorphism group, by exhaustive backtracking (small n)."""
    if g.n > max_n:
        raise ValueError(f"automorphism count capped at {max_n} vertices")
    gi = _refine_invariants(g)
    candidates = [[v for v in range(g.n) if gi[v] == gi[u]] for u in range(g.n)]
    order = sorted(range(g.n), key=lambda u: len(candidates[u]))
    mapping = [-1] * g.n
    used = [False] * g.n
    count = 0

    def extend(idx: int) -> None:
        nonlocal count
        if idx == g.n:
            count += 1
            return
        u = order[idx]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in range(g.n):
                if mapping[w] >= 0 and g.has_edge(u, w) != g.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                extend(idx + 1)
                mapping[u] = -1
                used[v] = False

    extend(0)
    return count
