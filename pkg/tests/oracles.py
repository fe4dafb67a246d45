"""Independent oracles the library is checked against.

Each oracle takes the dumbest correct route it can: subset enumeration
for cliques, textbook corner reduction for Smith normal form, full
product enumeration for closed walks, breadth-first closure for the
RAAG word problem.  None of them shares code with the library paths
they audit.
"""

from collections import deque
from itertools import combinations, product
from math import gcd


def naive_invariant_factors(matrix):
    """Recursive corner-pivot row/column reduction, then gcd/lcm folding."""
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return ()
    m, n = len(a), len(a[0])
    pivot = None
    for i in range(m):
        for j in range(n):
            if a[i][j]:
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        return ()
    i0, j0 = pivot
    a[0], a[i0] = a[i0], a[0]
    for row in a:
        row[0], row[j0] = row[j0], row[0]
    while True:
        for i in range(1, m):
            while a[i][0]:
                q = a[i][0] // a[0][0]
                for j in range(n):
                    a[i][j] -= q * a[0][j]
                if a[i][0]:
                    a[0], a[i] = a[i], a[0]
        for j in range(1, n):
            while a[0][j]:
                q = a[0][j] // a[0][0]
                for i in range(m):
                    a[i][j] -= q * a[i][0]
                if a[0][j]:
                    for i in range(m):
                        a[i][0], a[i][j] = a[i][j], a[i][0]
        if not any(a[i][0] for i in range(1, m)) and not any(
            a[0][j] for j in range(1, n)
        ):
            break
    diagonal = [abs(a[0][0])]
    diagonal.extend(naive_invariant_factors([row[1:] for row in a[1:]]))
    # any diagonal matrix is equivalent to its gcd/lcm-folded chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diagonal) - 1):
            x, y = diagonal[i], diagonal[i + 1]
            if y % x:
                g = gcd(x, y)
                diagonal[i], diagonal[i + 1] = g, x * y // g
                changed = True
    return tuple(diagonal)


def brute_force_simplices(vertices, edges):
    """Cliques by raw subset enumeration; returns levels of vertex tuples."""
    vertices = list(vertices)
    adjacent = set()
    for u, v in edges:
        adjacent.add((u, v))
        adjacent.add((v, u))
    levels = []
    for k in range(1, len(vertices) + 1):
        level = tuple(
            subset
            for subset in combinations(vertices, k)
            if all((u, v) in adjacent for u, v in combinations(subset, 2))
        )
        if not level:
            break
        levels.append(level)
    return tuple(levels)


def brute_force_closed_walk_classes(complex, max_len):
    """Rotation classes of closed directed walks, by product enumeration.

    Only usable on small complexes (cost |directed edges|^length).
    Classes are canonical rotations of (initial, terminal) pair tuples.
    """
    des = complex.directed_edges()
    classes = set()
    for l in range(2, max_len + 1):
        for combo in product(des, repeat=l):
            if all(
                combo[i].terminal == combo[(i + 1) % l].initial for i in range(l)
            ):
                keys = [(e.initial, e.terminal) for e in combo]
                classes.add(min(tuple(keys[r:] + keys[:r]) for r in range(l)))
    return classes


class ShuffleClosureOracle:
    """Word-problem oracle: exhaustive closure under adjacent-commutation
    swaps and free cancellation, with memoization across queries.

    Words are encoded as bytes, one letter per byte: ``2 * index + (0 if
    positive else 1)``.  Every word visited by one closure represents
    the same group element, so the closure's answer is recorded for all
    of them.
    """

    def __init__(self, complex):
        self.complex = complex
        self.letters = complex.vertices
        index = {v: i for i, v in enumerate(self.letters)}
        n = len(self.letters)
        self.commutes = [[False] * n for _ in range(n)]
        for u, v in complex.edges:
            self.commutes[index[u]][index[v]] = True
            self.commutes[index[v]][index[u]] = True
        self._index = index
        self._memo = {}

    def encode(self, word):
        return bytes(
            2 * self._index[letter] + (0 if sign > 0 else 1)
            for letter, sign in word.letters
        )

    def is_identity_encoded(self, code):
        memo = self._memo
        known = memo.get(code)
        if known is not None:
            return known
        commutes = self.commutes
        seen = {code}
        queue = deque([code])
        answer = False
        while queue:
            w = queue.popleft()
            if not w:
                answer = True
                break
            for i in range(len(w) - 1):
                x, y = w[i], w[i + 1]
                if x >> 1 == y >> 1:
                    if x != y:  # inverse pair: cancel
                        nw = w[:i] + w[i + 2 :]
                        if nw not in seen:
                            seen.add(nw)
                            queue.append(nw)
                elif commutes[x >> 1][y >> 1]:
                    nw = w[:i] + bytes((y, x)) + w[i + 2 :]
                    if nw not in seen:
                        seen.add(nw)
                        queue.append(nw)
        for w in seen:
            memo[w] = answer
        return answer

    def is_identity(self, word):
        return self.is_identity_encoded(self.encode(word))


def permutation_parity(sequence, key=None):
    """Sign of the permutation sorting the sequence, by brute inversion count."""
    keys = [key(x) if key else x for x in sequence]
    inversions = sum(
        1
        for i in range(len(keys))
        for j in range(i + 1, len(keys))
        if keys[i] > keys[j]
    )
    return (-1) ** inversions
