"""Free-group words over tagged alphabets, and the RAAG word problem.

A Word is a freely reduced sequence of (letter, sign) pairs over a
declared Alphabet.  Alphabets are tagged ("vertex", "edge", "named") so
that words over a complex's vertex letters and words over its
directed-edge letters can never be mixed by accident; concatenating
across alphabets is a hard error.

The word problem for a right-angled Artin group is decided by a
heap-of-pieces normal form: letters are piled per generator with
blockers on the piles of non-commuting generators, inverse pairs cancel
as they meet at the top of a pile, and the reduced heap is linearized
by always emitting the least available letter.  The result is the
lexicographically least word among all commutation-equivalent ones, so
two words represent the same group element iff their normal forms are
equal letter-for-letter.
"""

from __future__ import annotations

import re
from collections import deque

from .errors import ParseError


def letter_token(letter):
    """Text form of a letter: strings are themselves, edges render [a>b]."""
    return letter if isinstance(letter, str) else str(letter)


class Alphabet:
    """An ordered, tagged set of letters."""

    __slots__ = ("kind", "letters", "_index", "_by_token")

    def __init__(self, kind, letters):
        self.kind = kind
        self.letters = tuple(letters)
        self._index = {l: i for i, l in enumerate(self.letters)}
        if len(self._index) != len(self.letters):
            raise ValueError("alphabet letters must be distinct")
        self._by_token = {letter_token(l): l for l in self.letters}
        if len(self._by_token) != len(self.letters):
            raise ValueError("alphabet letters must have distinct text forms")

    def __contains__(self, letter):
        return letter in self._index

    def __len__(self):
        return len(self.letters)

    def index(self, letter):
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(
                f"letter {letter_token(letter)!r} is not in the {self.kind} alphabet"
            ) from None

    def letter_for_token(self, token):
        try:
            return self._by_token[token]
        except KeyError:
            raise ValueError(f"unknown generator {token!r}") from None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Alphabet)
            and self.kind == other.kind
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.kind, self.letters))

    def __repr__(self):
        return f"Alphabet({self.kind!r}, {len(self.letters)} letters)"


def vertex_alphabet(complex):
    """The vertex letters of a complex (generators of its RAAG)."""
    return Alphabet("vertex", complex.vertices)


def edge_alphabet(complex):
    """All directed edges of a complex, both orientations as distinct letters."""
    return Alphabet("edge", complex.directed_edges())


class Word:
    """A freely reduced word; immutable.

    Construction performs free reduction, so no adjacent (g, s)(g, -s)
    pair survives.  Words multiply with ``*``, invert with ``~`` and
    power with ``**``; operands must share an alphabet.
    """

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet, letters=()):
        stack = []
        for letter, sign in letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            alphabet.index(letter)
            if stack and stack[-1][0] == letter and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((letter, sign))
        self.alphabet = alphabet
        self.letters = tuple(stack)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.alphabet, self.letters))

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise ValueError(
                f"cannot concatenate words over different alphabets "
                f"({self.alphabet.kind} vs {other.alphabet.kind})"
            )
        return Word(self.alphabet, self.letters + other.letters)

    def __invert__(self):
        return Word(
            self.alphabet, [(l, -s) for l, s in reversed(self.letters)]
        )

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        return Word(self.alphabet, self.letters * n)

    def syllables(self):
        """Runs of equal letters as (letter, signed exponent) pairs."""
        out = []
        for letter, sign in self.letters:
            if out and out[-1][0] == letter:
                out[-1][1] += sign
            else:
                out.append([letter, sign])
        return [(l, e) for l, e in out]

    def __repr__(self):
        return f"Word({render_word(self) or '1'})"


def free_reduce(alphabet, letters):
    """The unique freely reduced word with the given letters."""
    return Word(alphabet, letters)


def exponent_sum(word):
    """Sum of letter signs; the total-exponent homomorphism to Z."""
    return sum(s for _, s in word.letters)


class RaagContext:
    """A right-angled Artin group: vertex generators, adjacent pairs commute.

    Commutation is symmetric and irreflexive, derived from the edge set
    of the owning complex.
    """

    __slots__ = ("complex", "alphabet", "_blockers")

    def __init__(self, complex):
        self.complex = complex
        self.alphabet = vertex_alphabet(complex)
        n = len(complex.vertices)
        idx = {v: i for i, v in enumerate(complex.vertices)}
        blockers = []
        for v in complex.vertices:
            adjacent = {idx[w] for w in complex.neighbors(v)}
            blockers.append(
                tuple(j for j in range(n) if j != idx[v] and j not in adjacent)
            )
        self._blockers = blockers

    def commutes(self, u, v):
        return u != v and self.complex.adjacent(u, v)

    def _pile(self, word):
        if word.alphabet != self.alphabet:
            raise ValueError("word is not over this RAAG's vertex alphabet")
        index = self.alphabet.index
        blockers = self._blockers
        piles = [deque() for _ in self.alphabet.letters]
        count = 0
        for letter, sign in word.letters:
            i = index(letter)
            pile = piles[i]
            if pile and pile[-1] == -sign:
                pile.pop()
                for j in blockers[i]:
                    piles[j].pop()
                count -= 1
            else:
                pile.append(sign)
                for j in blockers[i]:
                    piles[j].append(0)
                count += 1
        return piles, count

    def normal_form(self, word):
        """Lexicographically least representative of the reduced heap.

        Letter order: by generator position in the vertex alphabet, with
        g preceding g^-1.
        """
        piles, count = self._pile(word)
        letters = self.alphabet.letters
        blockers = self._blockers
        out = []
        for _ in range(count):
            best = None
            for i, pile in enumerate(piles):
                if pile and pile[0]:
                    key = (i, 0 if pile[0] > 0 else 1)
                    if best is None or key < best:
                        best = key
            i = best[0]
            out.append((letters[i], piles[i][0]))
            piles[i].popleft()
            for j in blockers[i]:
                piles[j].popleft()
        return Word(self.alphabet, out)

    def is_identity(self, word):
        _, count = self._pile(word)
        return count == 0


def raag_normal_form(word, ctx):
    """Canonical representative of the group element of ``word`` in the RAAG."""
    return ctx.normal_form(word)


def is_identity(word, ctx):
    """Whether the word represents the identity of the RAAG."""
    return ctx.is_identity(word)


# -- word text syntax ---------------------------------------------------

_FACTOR_RE = re.compile(r"^([^\^]+?)(?:\^(-?\d+))?$")


def render_word(word):
    """Whitespace-separated factors ``g``, ``g^k``; edge letters as [a>b]."""
    parts = []
    for letter, exp in word.syllables():
        token = letter_token(letter)
        parts.append(token if exp == 1 else f"{token}^{exp}")
    return " ".join(parts)


def parse_word(text, alphabet, line=None, column_offset=0):
    """Parse the word syntax against an alphabet.

    Whitespace-separated factors: ``g``, ``g^-1``, ``g^k`` for a nonzero
    decimal k; directed-edge letters written ``[a>b]``.  Raises
    ParseError with position diagnostics.
    """
    letters = []
    for match in re.finditer(r"\S+", text):
        column = column_offset + match.start() + 1
        factor = _FACTOR_RE.match(match.group())
        if factor is None:
            raise ParseError(f"malformed factor {match.group()!r}", line, column)
        base, exp_text = factor.groups()
        try:
            letter = alphabet.letter_for_token(base)
        except ValueError as exc:
            raise ParseError(str(exc), line, column) from None
        exp = 1 if exp_text is None else int(exp_text)
        if exp == 0:
            raise ParseError("exponent must be nonzero", line, column)
        sign = 1 if exp > 0 else -1
        letters.extend([(letter, sign)] * abs(exp))
    return Word(alphabet, letters)
