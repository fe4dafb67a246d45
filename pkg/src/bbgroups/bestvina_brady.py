"""Edge-generated presentations of Bestvina-Brady kernels.

For a connected flag complex, the kernel H of the total-exponent map
from the RAAG onto Z is generated by the directed edges, a directed
edge [a>b] mapping to the vertex word ``a b^-1``.  Every closed
directed edge-walk c = (e_1, ..., e_l) contributes the relators
``c^[n] = e_1^n ... e_l^n`` for all nonzero n; backtrack (length-2) and
triangle (length-3) cycles already suffice when the complex is simply
connected, which is how the finite presentation below arises.

Everything claimed about these words is checked through their images in
the RAAG: ``verify_relator`` pushes an edge word through ``raag_image``
and asks the normal-form engine whether the result is trivial.  The
module also implements the supporting word transformations (letterwise
inversion, tree-path conjugation, the cyclic extension of the kernel by
the basepoint letter) and a homotopy-move engine that rewrites cycle
relators one backtrack or triangle at a time.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .complexes import DirectedCycle, DirectedEdge, Pi1Status, simply_connected_status
from .errors import ParseError
from .presentations import Presentation
from .words import (
    Alphabet,
    RaagContext,
    Word,
    edge_alphabet,
    exponent_sum,
    letter_token,
)


class BBContext:
    """A connected flag complex with a basepoint and its BFS spanning tree."""

    __slots__ = ("complex", "basepoint", "tree", "edge_alphabet", "raag")

    def __init__(self, complex, basepoint=None):
        if not complex.is_connected():
            raise ValueError("complex is not connected")
        if basepoint is None:
            basepoint = complex.vertices[0]
        complex.vertex_index(basepoint)
        self.complex = complex
        self.basepoint = basepoint
        self.tree = complex.spanning_tree(basepoint)
        self.edge_alphabet = edge_alphabet(complex)
        self.raag = RaagContext(complex)

    @property
    def vertex_alphabet(self):
        return self.raag.alphabet

    def empty_edge_word(self):
        return Word(self.edge_alphabet)

    def __repr__(self):
        return f"BBContext({self.complex!r}, basepoint={self.basepoint!r})"


# -- the word transformations ------------------------------------------


def raag_image(edge_word, ctx):
    """Image of an edge word in the RAAG: [a>b] maps to ``a b^-1``.

    The result is freely reduced and always has exponent sum zero, so
    it lies in the kernel of the total-exponent map.
    """
    if edge_word.alphabet != ctx.edge_alphabet:
        raise ValueError("word is not over this complex's directed-edge alphabet")
    letters = []
    for e, s in edge_word.letters:
        if s > 0:
            letters.append((e.initial, 1))
            letters.append((e.terminal, -1))
        else:
            letters.append((e.terminal, 1))
            letters.append((e.initial, -1))
    return Word(ctx.vertex_alphabet, letters)


def tree_path_word(ctx, a, b):
    """Edge word of the unique spanning-tree path from a to b.

    Its raag_image free-reduces to ``a b^-1``; the path from a vertex to
    itself is the empty word.
    """
    return Word(ctx.edge_alphabet, [(e, 1) for e in ctx.tree.path_edges(a, b)])


def letterwise_inverse(word):
    """Flip the sign of every letter in place (order preserved).

    An involution on words over any alphabet; on edge words it realizes
    the automorphism sending each directed edge to its inverse.
    """
    return Word(word.alphabet, [(l, -s) for l, s in word.letters])


def basepoint_conjugate(edge_word, ctx):
    """Replace each edge e by (path to its start) e (path back), letterwise.

    Negative letters get the inverse of the positive-letter image.  The
    verified contract: raag_image of the result equals
    ``a * raag_image(word) * a^-1`` in the RAAG, a the basepoint.
    """
    if edge_word.alphabet != ctx.edge_alphabet:
        raise ValueError("word is not over this complex's directed-edge alphabet")
    a = ctx.basepoint
    out = []
    for e, s in edge_word.letters:
        there = ctx.tree.path_edges(a, e.initial)
        back = ctx.tree.path_edges(e.initial, a)
        image = [(f, 1) for f in there] + [(e, 1)] + [(f, 1) for f in back]
        if s < 0:
            image = [(l, -t) for l, t in reversed(image)]
        out.extend(image)
    return Word(ctx.edge_alphabet, out)


def basepoint_conjugate_inverse(edge_word, ctx):
    """The inverse twist, realized as (letterwise inverse) conjugate (letterwise inverse)."""
    return letterwise_inverse(basepoint_conjugate(letterwise_inverse(edge_word), ctx))


def conjugate_power(edge_word, k, ctx):
    """k-fold basepoint twist; negative k applies the inverse twist."""
    word = edge_word
    step = basepoint_conjugate if k >= 0 else basepoint_conjugate_inverse
    for _ in range(abs(k)):
        word = step(word, ctx)
    return word


def cycle_relator(cycle, n, ctx):
    """The relator ``e_1^n e_2^n ... e_l^n`` of a directed cycle.

    Kept as written (a backtrack pair e followed by its reverse stays
    two letters); only genuine free cancellation is performed.
    """
    if n == 0:
        raise ValueError("relator exponent must be nonzero")
    sign = 1 if n > 0 else -1
    letters = []
    for e in cycle.edges:
        letters.extend([(e, sign)] * abs(n))
    return Word(ctx.edge_alphabet, letters)


def verify_relator(edge_word, ctx):
    """Ground-truth check: does the word die in the RAAG?

    True iff the raag_image is the identity.  This is a necessary
    condition for being a relator of the kernel presentation, and a
    sufficient acceptance check because the edge-word group embeds via
    raag_image.
    """
    return ctx.raag.is_identity(raag_image(edge_word, ctx))


def express_in_kernel(vertex_word, ctx):
    """An edge word mapping to the given zero-exponent-sum vertex word.

    Absorbs one syllable at a time: for a leading ``a^n`` followed by
    ``b^m``, emit the tree path from a to b raised to the n-th power
    (whose image is ``a^n b^-n``) and continue with ``b^(n+m)``.  The
    zero total exponent makes the final syllable vanish.
    """
    if vertex_word.alphabet != ctx.vertex_alphabet:
        raise ValueError("word is not over this complex's vertex alphabet")
    if exponent_sum(vertex_word) != 0:
        raise ValueError("word has nonzero exponent sum, so it is not in the kernel")
    syllables = vertex_word.syllables()
    out = []
    while len(syllables) > 1:
        v, n = syllables[0]
        u, m = syllables[1]
        sign = 1 if n > 0 else -1
        for f in ctx.tree.path_edges(v, u):
            out.extend([(f, sign)] * abs(n))
        merged = n + m
        if merged == 0:
            syllables = syllables[2:]
        else:
            syllables = [(u, merged)] + syllables[2:]
    return Word(ctx.edge_alphabet, out)


# -- cycle enumeration and the presentations ----------------------------


def _edge_key(edge, ctx):
    idx = ctx.complex.vertex_index
    return (idx(edge.initial), idx(edge.terminal))


def _canonical_rotation(edges, ctx):
    keys = [_edge_key(e, ctx) for e in edges]
    best = None
    best_rot = 0
    for r in range(len(edges)):
        rotated = tuple(keys[r:] + keys[:r])
        if best is None or rotated < best:
            best = rotated
            best_rot = r
    return tuple(edges[best_rot:] + edges[:best_rot]), best


def enumerate_cycle_classes(ctx, max_len):
    """All closed directed edge-walks of length 2..max_len, up to rotation.

    Vertex and edge repetition is allowed; orientation reversal is NOT
    identified (the reversed cycle carries its own relators).  Each
    class is represented by its rotation with the least edge-key tuple,
    and classes come out sorted by (length, key tuple).
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    complex = ctx.complex
    found = {}

    def extend(start, current, walk):
        if len(walk) >= 2 and current == start:
            canon, key = _canonical_rotation(tuple(walk), ctx)
            found.setdefault((len(walk), key), canon)
        if len(walk) == max_len:
            return
        for w in complex.neighbors(current):
            walk.append(DirectedEdge(current, w))
            extend(start, w, walk)
            walk.pop()

    for v in complex.vertices:
        extend(v, v, [])
    return tuple(DirectedCycle(found[k]) for k in sorted(found))


def _edge_word_to_named(edge_word, alphabet):
    return Word(
        alphabet, [(letter_token(e), s) for e, s in edge_word.letters]
    )


def named_word_to_edge_word(word, ctx):
    """Reinterpret a presentation word whose generators are edge tokens."""
    letters = []
    for token, s in word.letters:
        letters.append((ctx.edge_alphabet.letter_for_token(token), s))
    return Word(ctx.edge_alphabet, letters)


def directed_cycle_presentation(ctx, max_len, max_exp):
    """Truncation of the full cycle-relator presentation of the kernel.

    Generators: all directed edges.  Relators: ``c^[n]`` for every
    rotation class of closed directed walks with 2 <= length <= max_len
    and every 0 < |n| <= max_exp.  The full family is infinite, so the
    provenance always records the truncation; this output is never
    flagged complete.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    if max_exp < 1:
        raise ValueError("max_exp must be at least 1")
    generators = [letter_token(e) for e in ctx.complex.directed_edges()]
    cycles = enumerate_cycle_classes(ctx, max_len)
    relators = []
    named = Alphabet("named", tuple(generators))
    for cycle in cycles:
        for k in range(1, max_exp + 1):
            for n in (k, -k):
                relators.append(_edge_word_to_named(cycle_relator(cycle, n, ctx), named))
    return Presentation(
        generators,
        relators,
        provenance={
            "construction": "directed-cycle-relators",
            "max_len": max_len,
            "max_exp": max_exp,
            "truncated": True,
            "complete": False,
            "presents": "kernel (truncated infinite relator family)",
        },
    )


def canonical_edge_name(complex, u, v):
    if complex.vertex_index(u) > complex.vertex_index(v):
        u, v = v, u
    return f"[{u}>{v}]"


def _fold_edge_word_to_named(edge_word, ctx, named):
    """Rewrite over one generator per undirected edge: [b>a] becomes [a>b]^-1."""
    idx = ctx.complex.vertex_index
    letters = []
    for e, s in edge_word.letters:
        if idx(e.initial) < idx(e.terminal):
            letters.append((letter_token(e), s))
        else:
            letters.append((letter_token(e.reverse()), -s))
    return Word(named, letters)


def finite_presentation(ctx, extra_cycles=(), max_exp=1, tietze_budget=10000):
    """One generator per undirected edge; backtracks folded away.

    Relators: for each triangle (oriented from its least vertex toward
    the lesser neighbor) the two cycle relators with n = +1 and n = -1,
    plus ``c^[n]`` for each supplied extra cycle and 0 < |n| <= max_exp.
    When the complex is certified simply connected and no extra cycles
    were supplied, this is a complete presentation of the kernel;
    otherwise it presents the edge group with only backtrack and
    triangle relations (plus the truncated extra families), and the
    provenance says so explicitly.
    """
    if max_exp < 1:
        raise ValueError("max_exp must be at least 1")
    extra_cycles = tuple(extra_cycles)
    complex = ctx.complex
    generators = [canonical_edge_name(complex, u, v) for u, v in complex.edges]
    named = Alphabet("named", tuple(generators))
    relators = []
    for a, b, c in complex.triangles():
        cycle = DirectedCycle(
            (DirectedEdge(a, b), DirectedEdge(b, c), DirectedEdge(c, a))
        )
        for n in (1, -1):
            relators.append(_fold_edge_word_to_named(cycle_relator(cycle, n, ctx), ctx, named))
    for cycle in extra_cycles:
        for k in range(1, max_exp + 1):
            for n in (k, -k):
                word = _fold_edge_word_to_named(cycle_relator(cycle, n, ctx), ctx, named)
                if len(word):
                    relators.append(word)

    status = simply_connected_status(complex, budget=tietze_budget)
    complete = status is Pi1Status.CERTIFIED_TRIVIAL and not extra_cycles
    if complete:
        presents = "kernel (complete finite presentation)"
    elif extra_cycles:
        presents = "edge group with backtrack/triangle relators plus truncated extra-cycle families"
    else:
        presents = "edge group with backtrack/triangle relators only (maps onto the kernel)"
    provenance = {
        "construction": "edge-triangle-presentation",
        "complete": complete,
        "presents": presents,
        "simply_connected": status.value,
        "extra_cycles": len(extra_cycles),
    }
    if extra_cycles:
        provenance["max_exp"] = max_exp
    return Presentation(generators, relators, provenance=provenance)


def presentation_relator_edge_words(presentation, ctx):
    """The relators of an edge-generated presentation, as edge words."""
    return [named_word_to_edge_word(rel, ctx) for rel in presentation.relators]


def fundamental_cycle_basis(ctx):
    """One based loop per non-tree edge: tree path out, the edge, tree path back.

    The loops normally generate the fundamental group, so they are a
    reasonable default for the extra cycles of finite_presentation when
    the complex is not simply connected.  No minimality is attempted.
    """
    out = []
    for u, v in ctx.complex.edges:
        if ctx.tree.has_edge(u, v):
            continue
        edges = (
            ctx.tree.path_edges(ctx.basepoint, u)
            + (DirectedEdge(u, v),)
            + ctx.tree.path_edges(v, ctx.basepoint)
        )
        out.append(DirectedCycle(edges))
    return tuple(out)


# -- the cyclic extension ------------------------------------------------


@dataclass(frozen=True)
class ExtensionElement:
    """A pair (edge word, integer) in the extension of the kernel by Z.

    Multiplication is the semidirect law
    ``(h, j) * (h', k) = (h * twist^j(h'), j + k)`` where twist is the
    basepoint conjugation; (empty, 0) is the identity.  The group laws
    hold through the extension image, not letter-for-letter.
    """

    word: Word
    power: int


def extension_identity(ctx):
    return ExtensionElement(ctx.empty_edge_word(), 0)


def extension_multiply(x, y, ctx):
    return ExtensionElement(
        x.word * conjugate_power(y.word, x.power, ctx), x.power + y.power
    )


def extension_inverse(x, ctx):
    return ExtensionElement(conjugate_power(~x.word, -x.power, ctx), -x.power)


def extension_image(x, ctx):
    """Image in the RAAG: the word's image times basepoint^power."""
    sign = 1 if x.power >= 0 else -1
    tail = Word(ctx.vertex_alphabet, [(ctx.basepoint, sign)] * abs(x.power))
    return raag_image(x.word, ctx) * tail


def lift_vertex(b, ctx):
    """Lift of a vertex generator: (tree path from b to the basepoint, 1).

    Its extension image normal-form-equals the vertex itself.
    """
    return ExtensionElement(tree_path_word(ctx, b, ctx.basepoint), 1)


# -- homotopy moves on cycle relators ------------------------------------


@dataclass(frozen=True)
class InsertMove:
    """Splice a backtrack pair (edge, reverse) in before position ``position``."""

    position: int
    edge: DirectedEdge


@dataclass(frozen=True)
class DeleteMove:
    """Remove the backtrack pair at positions (position, position + 1)."""

    position: int


@dataclass(frozen=True)
class TriangleMove:
    """Replace edge e at ``position`` by (reverse g, reverse f) for a triangle (e, f, g)."""

    position: int
    e: DirectedEdge
    f: DirectedEdge
    g: DirectedEdge


@dataclass(frozen=True)
class RotateMove:
    """Re-root the cycle k steps forward."""

    amount: int


def _require_edge(ctx, edge):
    if edge not in ctx.edge_alphabet:
        raise ValueError(f"{edge} is not a directed edge of the complex")


def apply_move_to_cycle(cycle, move, ctx):
    """Apply one homotopy move to a directed cycle; validates the site."""
    edges = cycle.edges
    l = len(edges)
    if isinstance(move, RotateMove):
        return cycle.rotated(move.amount)
    if isinstance(move, InsertMove):
        if not 0 <= move.position <= l:
            raise ValueError(f"insert position {move.position} out of range")
        _require_edge(ctx, move.edge)
        junction = edges[move.position % l].initial
        if move.edge.initial != junction:
            raise ValueError(
                f"inserted edge {move.edge} must start at {junction!r}"
            )
        pair = (move.edge, move.edge.reverse())
        return DirectedCycle(edges[: move.position] + pair + edges[move.position :])
    if isinstance(move, DeleteMove):
        if not 0 <= move.position <= l - 2:
            raise ValueError(f"delete position {move.position} out of range")
        if edges[move.position + 1] != edges[move.position].reverse():
            raise ValueError(
                f"edges at positions {move.position}, {move.position + 1} "
                "are not a backtrack pair"
            )
        if l - 2 < 2:
            raise ValueError("deletion would leave a cycle of length < 2")
        return DirectedCycle(edges[: move.position] + edges[move.position + 2 :])
    if isinstance(move, TriangleMove):
        if not 0 <= move.position < l:
            raise ValueError(f"triangle position {move.position} out of range")
        if edges[move.position] != move.e:
            raise ValueError(
                f"edge at position {move.position} is {edges[move.position]}, not {move.e}"
            )
        for edge in (move.e, move.f, move.g):
            _require_edge(ctx, edge)
        if (
            move.e.terminal != move.f.initial
            or move.f.terminal != move.g.initial
            or move.g.terminal != move.e.initial
        ):
            raise ValueError(f"({move.e}, {move.f}, {move.g}) is not a directed triangle")
        replacement = (move.g.reverse(), move.f.reverse())
        return DirectedCycle(
            edges[: move.position] + replacement + edges[move.position + 1 :]
        )
    raise ValueError(f"unknown move {move!r}")


def relator_to_cycle(relator_word, n, ctx):
    """Recover the directed cycle c from the relator word c^[n]."""
    if n == 0:
        raise ValueError("relator exponent must be nonzero")
    edges = []
    for letter, exp in relator_word.syllables():
        if exp != n:
            raise ValueError(
                f"relator is not of the form c^[{n}]: syllable {letter} has exponent {exp}"
            )
        edges.append(letter)
    return DirectedCycle(edges)


def apply_homotopy_move(relator_word, move, n, ctx):
    """Move the underlying cycle of a relator c^[n]; returns the new relator."""
    cycle = relator_to_cycle(relator_word, n, ctx)
    return cycle_relator(apply_move_to_cycle(cycle, move, ctx), n, ctx)


def _legal_moves(cycle, ctx):
    edges = cycle.edges
    l = len(edges)
    for k in range(1, l):
        yield RotateMove(k)
    if l >= 4:
        for pos in range(l - 1):
            if edges[pos + 1] == edges[pos].reverse():
                yield DeleteMove(pos)
    complex = ctx.complex
    for pos in range(l):
        e = edges[pos]
        for c in complex.neighbors(e.initial):
            if c != e.terminal and complex.adjacent(c, e.terminal):
                yield TriangleMove(
                    pos, e, DirectedEdge(e.terminal, c), DirectedEdge(c, e.initial)
                )
    for pos in range(l):
        junction = edges[pos].initial
        for w in complex.neighbors(junction):
            yield InsertMove(pos, DirectedEdge(junction, w))


def find_move_sequence(cycle, target, ctx, budget=2000):
    """Breadth-first search for a move sequence turning one cycle into another.

    Returns a tuple of moves replayable with apply_move_to_cycle, or
    None when the budget (number of expanded nodes) runs out.  None
    means "unknown", never "not homotopic": the search is bounded.
    """
    start = cycle.edges
    goal = target.edges
    if start == goal:
        return ()
    seen = {start: None}
    queue = deque([start])
    expanded = 0
    while queue and expanded < budget:
        state = queue.popleft()
        expanded += 1
        current = DirectedCycle(state)
        for move in _legal_moves(current, ctx):
            child = apply_move_to_cycle(current, move, ctx).edges
            if child in seen:
                continue
            seen[child] = (state, move)
            if child == goal:
                moves = []
                node = child
                while seen[node] is not None:
                    node, mv = seen[node]
                    moves.append(mv)
                return tuple(reversed(moves))
            queue.append(child)
    return None


# -- move files ----------------------------------------------------------

_EDGE_TOKEN_RE = re.compile(r"^\[([^\[\]>^\s]+)>([^\[\]>^\s]+)\]$")


def _parse_edge_token(token, line, column):
    m = _EDGE_TOKEN_RE.match(token)
    if not m:
        raise ParseError(f"malformed edge token {token!r}", line, column)
    return DirectedEdge(m.group(1), m.group(2))


def render_moves(moves):
    """Move-sequence file: one move per line."""
    lines = []
    for move in moves:
        if isinstance(move, InsertMove):
            lines.append(f"ins {move.position} {move.edge}")
        elif isinstance(move, DeleteMove):
            lines.append(f"del {move.position}")
        elif isinstance(move, TriangleMove):
            lines.append(f"tri {move.position} {move.e} {move.f} {move.g}")
        elif isinstance(move, RotateMove):
            lines.append(f"rot {move.amount}")
        else:
            raise ValueError(f"unknown move {move!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_moves(text):
    """Parse a move-sequence file; inverse of render_moves."""
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        head, headcol = tokens[0]
        args = tokens[1:]

        def integer(pos):
            tok, col = args[pos]
            try:
                return int(tok)
            except ValueError:
                raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None

        def edge(pos):
            tok, col = args[pos]
            return _parse_edge_token(tok, lineno, col)

        if head == "ins" and len(args) == 2:
            moves.append(InsertMove(integer(0), edge(1)))
        elif head == "del" and len(args) == 1:
            moves.append(DeleteMove(integer(0)))
        elif head == "tri" and len(args) == 4:
            moves.append(TriangleMove(integer(0), edge(1), edge(2), edge(3)))
        elif head == "rot" and len(args) == 1:
            moves.append(RotateMove(integer(0)))
        else:
            raise ParseError(f"malformed move line starting {head!r}", lineno, headcol)
    return tuple(moves)
