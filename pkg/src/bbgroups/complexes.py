"""Flag (clique) complexes of finite graphs.

A flag complex is completely determined by its 1-skeleton: a set of
k+1 vertices spans a k-simplex exactly when all its pairs are edges.
Complexes are therefore constructed from graphs only, and the clique
simplices are derived (eagerly, at construction) rather than supplied.

Everything here is deterministic: vertices are ordered by declaration,
simplices are tuples sorted in that order, and simplex lists, spanning
trees and boundary matrices follow from that ordering.  Complexes are
immutable after construction.
"""

from __future__ import annotations

import enum
import json as _json
import re

from . import snf
from .errors import ParseError
from .presentations import Presentation, tietze_simplify

_FORBIDDEN_ID_CHARS = set(" \t\r\n\f\v-#[]>^")


def _check_identifier(name):
    if not isinstance(name, str) or not name:
        raise ValueError(f"vertex identifier must be a nonempty string, got {name!r}")
    bad = _FORBIDDEN_ID_CHARS.intersection(name)
    if bad:
        raise ValueError(
            f"vertex identifier {name!r} contains forbidden character {sorted(bad)[0]!r} "
            "(whitespace and - # [ ] > ^ are reserved by the text formats)"
        )


class DirectedEdge:
    """An oriented edge, written ``[a>b]`` for the edge from a to b."""

    __slots__ = ("initial", "terminal")

    def __init__(self, initial, terminal):
        self.initial = initial
        self.terminal = terminal

    def reverse(self):
        return DirectedEdge(self.terminal, self.initial)

    def __eq__(self, other):
        return (
            isinstance(other, DirectedEdge)
            and self.initial == other.initial
            and self.terminal == other.terminal
        )

    def __hash__(self):
        return hash((DirectedEdge, self.initial, self.terminal))

    def __lt__(self, other):
        return (self.initial, self.terminal) < (other.initial, other.terminal)

    def __str__(self):
        return f"[{self.initial}>{self.terminal}]"

    def __repr__(self):
        return f"DirectedEdge({self.initial!r}, {self.terminal!r})"


class DirectedCycle:
    """A closed directed edge-walk of length >= 2.

    Vertex and edge repetition is allowed; consecutive edges must be
    incident (terminal of one = initial of the next) and the walk must
    return to its starting vertex.
    """

    __slots__ = ("edges",)

    def __init__(self, edges):
        edges = tuple(edges)
        if len(edges) < 2:
            raise ValueError(f"directed cycle needs length >= 2, got {len(edges)}")
        for e, f in zip(edges, edges[1:]):
            if e.terminal != f.initial:
                raise ValueError(f"edges {e} and {f} are not consecutive")
        if edges[-1].terminal != edges[0].initial:
            raise ValueError("walk is not closed")
        self.edges = edges

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __eq__(self, other):
        return isinstance(other, DirectedCycle) and self.edges == other.edges

    def __hash__(self):
        return hash((DirectedCycle, self.edges))

    def rotated(self, k):
        k %= len(self.edges)
        return DirectedCycle(self.edges[k:] + self.edges[:k])

    def vertices(self):
        return tuple(e.initial for e in self.edges)

    def __repr__(self):
        return "DirectedCycle(%s)" % " ".join(str(e) for e in self.edges)


class FlagComplex:
    """The clique complex of a finite graph."""

    def __init__(self, vertices, edges, dim_cap=None):
        vertices = tuple(vertices)
        seen = set()
        for v in vertices:
            _check_identifier(v)
            if v in seen:
                raise ValueError(f"duplicate vertex identifier {v!r}")
            seen.add(v)
        self.vertices = vertices
        self._vidx = {v: i for i, v in enumerate(vertices)}

        n = len(vertices)
        adj = [set() for _ in range(n)]
        edge_set = set()
        for pair in edges:
            u, v = pair
            if u not in self._vidx:
                raise ValueError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in self._vidx:
                raise ValueError(f"edge endpoint {v!r} is not a declared vertex")
            i, j = self._vidx[u], self._vidx[v]
            if i == j:
                raise ValueError(f"loop edge at vertex {u!r}")
            key = (min(i, j), max(i, j))
            if key in edge_set:
                raise ValueError(f"duplicate edge {u!r}-{v!r}")
            edge_set.add(key)
            adj[i].add(j)
            adj[j].add(i)
        self._adj_idx = [frozenset(s) for s in adj]
        self._neighbors = {
            vertices[i]: tuple(vertices[j] for j in sorted(adj[i])) for i in range(n)
        }

        if dim_cap is None:
            dim_cap = max(n, 1)
        if dim_cap < 1:
            raise ValueError("dim_cap must be at least 1")
        self.dim_cap = dim_cap
        self._enumerate_cliques()

    def _enumerate_cliques(self):
        n = len(self.vertices)
        adj = self._adj_idx
        by_dim = [[] for _ in range(self.dim_cap + 1)]
        complete = True

        def grow(clique, candidates):
            nonlocal complete
            d = len(clique) - 1
            by_dim[d].append(clique)
            if d == self.dim_cap:
                if candidates:
                    complete = False
                return
            for v in candidates:
                grow(clique + (v,), [w for w in candidates if w > v and w in adj[v]])

        for v in range(n):
            grow((v,), [w for w in sorted(adj[v]) if w > v])

        while by_dim and not by_dim[-1]:
            by_dim.pop()
        names = self.vertices
        self.simplices_by_dim = tuple(
            tuple(tuple(names[i] for i in s) for s in level) for level in by_dim
        )
        self.enumeration_complete = complete
        self.edges = self.simplices_by_dim[1] if len(self.simplices_by_dim) > 1 else ()

    # -- basic queries ------------------------------------------------

    @property
    def dim(self):
        return len(self.simplices_by_dim) - 1

    def f_vector(self):
        return tuple(len(level) for level in self.simplices_by_dim)

    def simplices(self, k):
        if 0 <= k < len(self.simplices_by_dim):
            return self.simplices_by_dim[k]
        return ()

    def triangles(self):
        return self.simplices(2)

    def vertex_index(self, v):
        try:
            return self._vidx[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v):
        return v in self._vidx

    def neighbors(self, v):
        self.vertex_index(v)
        return self._neighbors[v]

    def adjacent(self, u, v):
        return self.vertex_index(v) in self._adj_idx[self.vertex_index(u)]

    def directed_edge(self, u, v):
        if not self.adjacent(u, v):
            raise ValueError(f"{u!r}-{v!r} is not an edge of the complex")
        return DirectedEdge(u, v)

    def directed_edges(self):
        out = []
        for u in self.vertices:
            for v in self._neighbors[u]:
                out.append(DirectedEdge(u, v))
        return tuple(out)

    def directed_cycle(self, vertex_walk):
        """Closed walk through the given vertices (first vertex repeated implicitly)."""
        walk = list(vertex_walk)
        if len(walk) < 2:
            raise ValueError("a cycle needs at least two vertices")
        pairs = list(zip(walk, walk[1:] + walk[:1]))
        return DirectedCycle(self.directed_edge(u, v) for u, v in pairs)

    def is_connected(self):
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in self._neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def spanning_tree(self, root):
        return SpanningTree(self, root)

    def __eq__(self, other):
        return (
            isinstance(other, FlagComplex)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"FlagComplex({len(self.vertices)} vertices, {len(self.edges)} edges)"


def from_graph(vertices, edges, dim_cap=None):
    """Clique complex of the graph on ``vertices`` with the given edges."""
    return FlagComplex(vertices, edges, dim_cap)


class SpanningTree:
    """Breadth-first spanning tree, neighbors visited in vertex order."""

    def __init__(self, complex, root):
        complex.vertex_index(root)
        if not complex.is_connected():
            raise ValueError("complex is not connected")
        self.complex = complex
        self.root = root
        parent = {root: None}
        depth = {root: 0}
        order = [root]
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for w in complex.neighbors(v):
                    if w not in parent:
                        parent[w] = v
                        depth[w] = depth[v] + 1
                        order.append(w)
                        nxt.append(w)
            queue = nxt
        self.parent = parent
        self.depth = depth
        self.order = tuple(order)

    def has_edge(self, u, v):
        return self.parent.get(u) == v or self.parent.get(v) == u

    def path_vertices(self, u, v):
        """The unique tree path from u to v, as a vertex list."""
        self.complex.vertex_index(u)
        self.complex.vertex_index(v)
        up, down = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            up.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            down.append(b)
        while a != b:
            a = self.parent[a]
            up.append(a)
            b = self.parent[b]
            down.append(b)
        return up + down[-2::-1]

    def path_edges(self, u, v):
        """The tree path from u to v as a tuple of directed edges."""
        path = self.path_vertices(u, v)
        return tuple(DirectedEdge(a, b) for a, b in zip(path, path[1:]))


# -- Euler characteristic and homology --------------------------------


def euler_characteristic(complex):
    """Alternating sum of face counts.

    Refuses to answer when dim_cap truncated the clique enumeration,
    since the missing top cells would make the sum wrong.
    """
    if not complex.enumeration_complete:
        raise ValueError(
            "clique enumeration was truncated by dim_cap; "
            "Euler characteristic would be wrong"
        )
    return sum((-1) ** k * f for k, f in enumerate(complex.f_vector()))


def boundary_matrix(complex, k):
    """Integer matrix of the boundary map C_k -> C_{k-1} (k >= 1).

    Rows are indexed by (k-1)-simplices, columns by k-simplices, both in
    the complex's deterministic order.
    """
    if k < 1:
        raise ValueError("boundary_matrix is defined for k >= 1")
    faces = complex.simplices(k - 1)
    cells = complex.simplices(k)
    face_index = {s: i for i, s in enumerate(faces)}
    matrix = [[0] * len(cells) for _ in faces]
    for j, cell in enumerate(cells):
        for i in range(len(cell)):
            face = cell[:i] + cell[i + 1 :]
            matrix[face_index[face]][j] = (-1) ** i
    return matrix


class HomologyResult:
    """Integral simplicial homology, one (betti, torsion) pair per degree."""

    __slots__ = ("betti", "torsion", "reduced")

    def __init__(self, betti, torsion, reduced):
        self.betti = tuple(betti)
        self.torsion = tuple(tuple(t) for t in torsion)
        self.reduced = reduced

    def is_trivial(self, k):
        """Whether H_k = 0 (no free part, no torsion)."""
        if k >= len(self.betti):
            return True
        return self.betti[k] == 0 and not self.torsion[k]

    def group_text(self, k):
        parts = []
        if k < len(self.betti):
            b = self.betti[k]
            if b == 1:
                parts.append("Z")
            elif b > 1:
                parts.append(f"Z^{b}")
            parts.extend(f"Z/{d}" for d in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        kind = "reduced" if self.reduced else "unreduced"
        body = ", ".join(
            f"H_{k}={self.group_text(k)}" for k in range(len(self.betti))
        )
        return f"HomologyResult({kind}: {body})"


def homology(complex, reduced=False):
    """Integral homology in every degree, via exact Smith normal form.

    The boundary-of-boundary identity is checked before any reduction.
    Degree 0 uses the augmentation map when ``reduced`` is true.
    """
    if not complex.enumeration_complete:
        raise ValueError("clique enumeration was truncated by dim_cap")
    f = complex.f_vector()
    dim = len(f) - 1
    if dim < 0:
        return HomologyResult((), (), reduced)

    matrices = {k: boundary_matrix(complex, k) for k in range(1, dim + 1)}
    for k in range(2, dim + 1):
        if not snf.is_zero_matrix(snf.matrix_multiply(matrices[k - 1], matrices[k])):
            raise AssertionError(f"boundary composition d_{k-1} d_{k} is nonzero")

    factors = {k: snf.invariant_factors(matrices[k]) for k in range(1, dim + 1)}
    ranks = {k: len(factors[k]) for k in range(1, dim + 1)}
    ranks[dim + 1] = 0
    ranks[0] = (1 if reduced and f[0] else 0)  # augmentation C_0 -> Z

    betti = []
    torsion = []
    for k in range(dim + 1):
        betti.append(f[k] - ranks[k] - ranks[k + 1])
        if k + 1 <= dim:
            torsion.append(tuple(d for d in factors[k + 1] if d > 1))
        else:
            torsion.append(())
    return HomologyResult(betti, torsion, reduced)


# -- fundamental group -------------------------------------------------


def edge_generator_name(u, v):
    return f"[{u}>{v}]"


def pi1_presentation(complex, basepoint=None):
    """Edge-path presentation of the fundamental group.

    Generators are the non-tree edges of the breadth-first spanning tree
    from the basepoint (canonically oriented by vertex order); each
    triangle contributes one relator, with tree edges eliminated.
    """
    if not complex.is_connected():
        raise ValueError("complex is not connected")
    if basepoint is None:
        basepoint = complex.vertices[0]
    tree = complex.spanning_tree(basepoint)

    idx = complex.vertex_index
    non_tree = [
        (u, v) for (u, v) in complex.edges if not tree.has_edge(u, v)
    ]
    generators = [edge_generator_name(u, v) for u, v in non_tree]
    gen_of_pair = {pair: name for pair, name in zip(non_tree, generators)}

    def letter(x, y):
        if tree.has_edge(x, y):
            return None
        if idx(x) < idx(y):
            return (gen_of_pair[(x, y)], 1)
        return (gen_of_pair[(y, x)], -1)

    relators = []
    for a, b, c in complex.triangles():
        word = [letter(*pair) for pair in ((a, b), (b, c), (c, a))]
        word = [l for l in word if l is not None]
        if word:
            relators.append(word)
    return Presentation(
        generators,
        relators,
        provenance={
            "construction": "edge-path-pi1",
            "basepoint": basepoint,
        },
    )


class Pi1Status(enum.Enum):
    CERTIFIED_TRIVIAL = "CertifiedTrivial"
    CERTIFIED_NONTRIVIAL = "CertifiedNontrivial"
    UNKNOWN = "Unknown"


def simply_connected_status(complex, budget=10000):
    """Tri-state simple-connectivity certificate.

    Nontriviality is certified by H_1 != 0; triviality by bounded Tietze
    simplification of the edge-path presentation reaching the empty
    presentation.  Anything else is honestly Unknown (triviality of a
    fundamental group is undecidable in general).
    """
    if not complex.is_connected():
        raise ValueError("complex is not connected")
    h = homology(complex, reduced=True)
    if not h.is_trivial(1):
        return Pi1Status.CERTIFIED_NONTRIVIAL
    pres = pi1_presentation(complex)
    simplified, _ = tietze_simplify(pres, budget)
    if not simplified.generators and not simplified.relators:
        return Pi1Status.CERTIFIED_TRIVIAL
    return Pi1Status.UNKNOWN


# -- text and JSON graph input -----------------------------------------


def parse_graph_text(text, dim_cap=None):
    """Parse the line-oriented graph format.

    ``vertices: a b c`` and ``edges: a-b c-d`` lines, ``#`` comments.
    Raises ParseError with 1-based line/column diagnostics.
    """
    vertices = []
    vpos = {}
    edges = []
    edge_keys = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        head, headcol = tokens[0]
        if head == "vertices:":
            for tok, col in tokens[1:]:
                try:
                    _check_identifier(tok)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col) from None
                if tok in vpos:
                    raise ParseError(
                        f"duplicate vertex identifier {tok!r}", lineno, col
                    )
                vpos[tok] = (lineno, col)
                vertices.append(tok)
        elif head == "edges:":
            for tok, col in tokens[1:]:
                parts = tok.split("-")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ParseError(
                        f"malformed edge token {tok!r} (expected a-b)", lineno, col
                    )
                u, v = parts
                for endpoint in (u, v):
                    if endpoint not in vpos:
                        raise ParseError(
                            f"unknown vertex {endpoint!r} in edge", lineno, col
                        )
                if u == v:
                    raise ParseError(f"loop edge at vertex {u!r}", lineno, col)
                key = frozenset((u, v))
                if key in edge_keys:
                    raise ParseError(f"duplicate edge {tok!r}", lineno, col)
                edge_keys[key] = (lineno, col)
                edges.append((u, v))
        else:
            raise ParseError(
                f"unrecognized line head {head!r} (expected 'vertices:' or 'edges:')",
                lineno,
                headcol,
            )
    return FlagComplex(vertices, edges, dim_cap)


def parse_graph_json(text, dim_cap=None):
    """Parse the JSON graph form {"vertices": [...], "edges": [[a, b], ...]}."""
    try:
        data = _json.loads(text)
    except _json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    unknown = set(data) - {"vertices", "edges"}
    if unknown:
        raise ParseError(f"unknown key {sorted(unknown)[0]!r} in graph object")
    verts = data.get("vertices", [])
    edges = data.get("edges", [])
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise ParseError("'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of two-element lists")
    pairs = []
    for i, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, str) for x in e)
        ):
            raise ParseError(f"edges[{i}] must be a two-element list of strings")
        pairs.append(tuple(e))
    try:
        return FlagComplex(verts, pairs, dim_cap)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_complex(text, dim_cap=None):
    """Dispatch on content: JSON if the text starts with '{', else the line format."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text, dim_cap)
    return parse_graph_text(text, dim_cap)
