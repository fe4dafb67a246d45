"""Finite group presentations: storage, abelianization, Tietze moves, I/O.

A Presentation owns an ordered alphabet of generator names (plain
tokens; directed-edge generators use their ``[a>b]`` text form) and a
sequence of freely reduced, nonempty relator words over that alphabet.
A free-form provenance mapping records which construction emitted the
presentation and with what truncation parameters; provenance rides
along through serialization but does not take part in equality.
"""

from __future__ import annotations

import enum
import json as _json
import re
from dataclasses import dataclass

from . import snf
from .errors import ParseError
from .words import Alphabet, Word, parse_word, render_word


class Presentation:
    """Generators plus relators; immutable."""

    __slots__ = ("generators", "relators", "alphabet", "provenance")

    def __init__(self, generators, relators, provenance=None):
        self.generators = tuple(generators)
        for g in self.generators:
            if not g or re.search(r"[\s^]", g):
                raise ValueError(f"bad generator name {g!r}")
        self.alphabet = Alphabet("named", self.generators)
        rels = []
        for r in relators:
            if isinstance(r, Word):
                if r.alphabet != self.alphabet:
                    raise ValueError("relator is over a different alphabet")
                word = r
            else:
                word = Word(self.alphabet, r)
            if not len(word):
                raise ValueError("relator is empty after free reduction")
            rels.append(word)
        self.relators = tuple(rels)
        self.provenance = dict(provenance) if provenance else {}

    def is_empty(self):
        return not self.generators and not self.relators

    def total_relator_length(self):
        return sum(len(r) for r in self.relators)

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self):
        return hash((self.generators, self.relators))

    def __repr__(self):
        return (
            f"Presentation({len(self.generators)} generators, "
            f"{len(self.relators)} relators)"
        )


@dataclass(frozen=True)
class AbelianizationResult:
    """Rank and torsion divisibility chain of the abelianized group."""

    rank: int
    torsion: tuple


def exponent_matrix(presentation):
    """|relators| x |generators| matrix of letter exponent sums."""
    index = {g: i for i, g in enumerate(presentation.generators)}
    rows = []
    for rel in presentation.relators:
        row = [0] * len(presentation.generators)
        for letter, sign in rel.letters:
            row[index[letter]] += sign
        rows.append(row)
    return rows

def abelianization(presentation):
    """Smith normal form of the exponent matrix.

    rank = #generators - matrix rank; torsion = diagonal entries > 1.
    """
    factors = snf.invariant_factors(exponent_matrix(presentation))
    return AbelianizationResult(
        rank=len(presentation.generators) - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )


# -- Tietze simplification ----------------------------------------------


class TietzeStatus(enum.Enum):
    FIXPOINT = "Fixpoint"
    BUDGET_EXHAUSTED = "BudgetExhausted"


def _reduce(seq):
    stack = []
    for letter, sign in seq:
        if stack and stack[-1][0] == letter and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((letter, sign))
    return tuple(stack)


def _inverse(seq):
    return tuple((l, -s) for l, s in reversed(seq))


def _apply_one_move(gens, rels):
    """Apply the first applicable elementary move; returns False at fixpoint.

    Moves are tried cheapest first, scans in deterministic order:
    cyclic reduction, trivial-relator deletion, elimination of a
    generator occurring exactly once in some relator, and shortening a
    relator by (a rotation of) another.  Every move is a Tietze
    transformation, so the presented group never changes.
    """
    # cyclic reduction
    for i, rel in enumerate(rels):
        if len(rel) >= 2 and rel[0] == (rel[-1][0], -rel[-1][1]):
            word = rel
            while len(word) >= 2 and word[0] == (word[-1][0], -word[-1][1]):
                word = _reduce(word[1:-1])
            rels[i] = word
            return True

    # trivial relators
    for i, rel in enumerate(rels):
        if not rel:
            del rels[i]
            return True

    # generator elimination
    for i, rel in enumerate(rels):
        counts = {}
        for letter, _ in rel:
            counts[letter] = counts.get(letter, 0) + 1
        for p, (letter, sign) in enumerate(rel):
            if counts[letter] != 1:
                continue
            # rel = pre g^sign post = 1, so g^sign = pre^-1 post^-1
            value = _reduce(_inverse(rel[:p]) + _inverse(rel[p + 1 :]))
            if sign < 0:
                value = _inverse(value)
            replaced = []
            for k, other in enumerate(rels):
                if k == i:
                    continue
                out = []
                for l, s in other:
                    if l == letter:
                        out.extend(value if s > 0 else _inverse(value))
                    else:
                        out.append((l, s))
                replaced.append(_reduce(out))
            rels[:] = replaced
            gens.remove(letter)
            return True

    # shorten one relator by another
    for i, target in enumerate(rels):
        for j, source in enumerate(rels):
            if i == j:
                continue
            for base in (source, _inverse(source)):
                for rot in range(len(base)):
                    u = base[rot:] + base[:rot]
                    longest = min(len(u), len(target))
                    for length in range(longest, len(u) // 2, -1):
                        pattern = u[:length]
                        for p in range(len(target) - length + 1):
                            if target[p : p + length] == pattern:
                                new = _reduce(
                                    target[:p]
                                    + _inverse(u[length:])
                                    + target[p + length :]
                                )
                                if len(new) < len(target):
                                    rels[i] = new
                                    return True
    return False


def tietze_simplify(presentation, budget=10000):
    """Bounded Tietze simplification.

    Returns ``(presentation, status)`` where status reports whether a
    fixpoint was reached or the move budget ran out first.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    gens = list(presentation.generators)
    rels = [tuple(r.letters) for r in presentation.relators]
    status = TietzeStatus.FIXPOINT
    while budget:
        if not _apply_one_move(gens, rels):
            break
        budget -= 1
    else:
        if _apply_one_move(list(gens), [tuple(r) for r in rels]):
            status = TietzeStatus.BUDGET_EXHAUSTED
    simplified = Presentation(gens, rels, provenance=presentation.provenance)
    return simplified, status


# -- text and JSON formats ----------------------------------------------

_PROVENANCE_RE = re.compile(r"^#\s*provenance:\s*(.*)$")


def serialize_presentation(presentation):
    """Text form: ``gens:`` line, one ``rel:`` line per relator.

    Provenance is carried in a ``# provenance:`` comment so the round
    trip through parse_presentation is the identity.
    """
    lines = []
    if presentation.provenance:
        blob = _json.dumps(presentation.provenance, sort_keys=True)
        lines.append(f"# provenance: {blob}")
    gens_line = "gens:"
    if presentation.generators:
        gens_line += " " + " ".join(presentation.generators)
    lines.append(gens_line)
    for rel in presentation.relators:
        lines.append("rel: " + render_word(rel))
    return "\n".join(lines) + "\n"


def parse_presentation(text):
    """Parse the presentation text format; errors carry line/column."""
    gens = []
    seen = set()
    rel_texts = []
    provenance = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        prov = _PROVENANCE_RE.match(raw.strip())
        if prov:
            if provenance is not None:
                raise ParseError("duplicate provenance comment", lineno)
            try:
                provenance = _json.loads(prov.group(1))
            except _json.JSONDecodeError:
                raise ParseError("malformed provenance JSON", lineno) from None
            if not isinstance(provenance, dict):
                raise ParseError("provenance must be a JSON object", lineno)
            continue
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head_match = re.match(r"\s*(\S+)", line)
        head = head_match.group(1)
        headcol = head_match.start(1) + 1
        body_start = head_match.end(1)
        if head == "gens:":
            for m in re.finditer(r"\S+", line[body_start:]):
                tok, col = m.group(), body_start + m.start() + 1
                if "^" in tok:
                    raise ParseError(
                        f"generator name {tok!r} may not contain '^'", lineno, col
                    )
                if tok in seen:
                    raise ParseError(f"duplicate generator {tok!r}", lineno, col)
                seen.add(tok)
                gens.append(tok)
        elif head == "rel:":
            rel_texts.append((lineno, body_start, line[body_start:]))
        else:
            raise ParseError(
                f"unrecognized line head {head!r} (expected 'gens:' or 'rel:')",
                lineno,
                headcol,
            )
    alphabet = Alphabet("named", gens)
    relators = []
    for lineno, offset, body in rel_texts:
        word = parse_word(body, alphabet, line=lineno, column_offset=offset)
        if not len(word):
            raise ParseError("relator is empty after free reduction", lineno)
        relators.append(word)
    try:
        return Presentation(gens, relators, provenance=provenance)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def presentation_to_json(presentation):
    """JSON mirror with the text format's field names."""
    data = {
        "gens": list(presentation.generators),
        "rel": [render_word(r) for r in presentation.relators],
    }
    if presentation.provenance:
        data["provenance"] = dict(presentation.provenance)
    return data


def presentation_from_json(data):
    """Inverse of presentation_to_json; accepts a dict or JSON text."""
    if isinstance(data, str):
        try:
            data = _json.loads(data)
        except _json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("presentation JSON must be an object")
    unknown = set(data) - {"gens", "rel", "provenance"}
    if unknown:
        raise ParseError(f"unknown key {sorted(unknown)[0]!r} in presentation JSON")
    gens = data.get("gens", [])
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("'gens' must be a list of strings")
    rel = data.get("rel", [])
    if not isinstance(rel, list) or not all(isinstance(r, str) for r in rel):
        raise ParseError("'rel' must be a list of word strings")
    alphabet = Alphabet("named", gens)
    try:
        relators = [parse_word(r, alphabet) for r in rel]
        return Presentation(gens, relators, provenance=data.get("provenance"))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
