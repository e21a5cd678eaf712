"""Independent oracles the main library is tested against.

Nothing here imports the word engine's reduction or canonicalization logic.
The faithful linear representation gives an equality test for group elements
that knows nothing about Tits reductions; the brute-force helpers below
enumerate commutation classes and pattern embeddings directly.
"""

from itertools import combinations, permutations

from racg.graph import PATTERNS, SimpleGraph
from racg.words import Element


def reflection_matrix(g: SimpleGraph, v: str) -> tuple[tuple[int, ...], ...]:
    """Matrix of the generator ``v`` in the standard geometric representation.

    Basis vector e_u maps to: -e_u for u = v, e_u when u and v commute, and
    e_u + 2 e_v otherwise (integer matrix since all exponents are 2 or
    infinity).  The representation is faithful, so matrix equality decides
    group equality.
    """
    n = len(g.vertices)
    idx = g.index
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    j = idx[v]
    for u in g.vertices:
        i = idx[u]
        if u == v:
            m[j][j] = -1
        elif u not in g.adj[v]:
            m[j][i] = 2
    return tuple(tuple(row) for row in m)


def _mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * bt[j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def word_matrix(g: SimpleGraph, letters) -> tuple[tuple[int, ...], ...]:
    n = len(g.vertices)
    m = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    for v in letters:
        m = _mat_mul(m, reflection_matrix(g, v))
    return m


def words_equal(g: SimpleGraph, w1, w2) -> bool:
    """Group equality of two words, decided by the faithful representation."""
    return word_matrix(g, w1) == word_matrix(g, w2)


def commutation_class(g: SimpleGraph, letters: tuple) -> frozenset:
    """All words reachable from ``letters`` by swapping adjacent commuting
    letters (no cancellations)."""
    seen = {tuple(letters)}
    frontier = [tuple(letters)]
    while frontier:
        w = frontier.pop()
        for i in range(len(w) - 1):
            if w[i + 1] in g.adj[w[i]]:
                swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    frontier.append(swapped)
    return frozenset(seen)


def brute_ball(g: SimpleGraph, radius: int) -> dict:
    """Matrix -> shortest length, by enumerating all words up to ``radius``.

    Exponential in the radius; for cross-checking small balls only.
    """
    out = {word_matrix(g, ()): 0}
    frontier = {word_matrix(g, ()): ()}
    for n in range(1, radius + 1):
        new = {}
        for m, w in frontier.items():
            for v in g.vertices:
                m2 = _mat_mul(m, reflection_matrix(g, v))
                if m2 not in out:
                    out[m2] = n
                    new[m2] = w + (v,)
        frontier = new
    return out


def element_matrix(x: Element):
    return word_matrix(x.graph, x.letters)


def induced_embeddings(g: SimpleGraph, pattern: str) -> list[dict]:
    """Every induced embedding of a named pattern, by brute permutation scan."""
    p = PATTERNS[pattern]
    out = []
    for chosen in permutations(g.vertices, len(p.vertices)):
        m = dict(zip(p.vertices, chosen))
        if all(
            p.adjacent(u, v) == g.adjacent(m[u], m[v])
            for u, v in combinations(p.vertices, 2)
        ):
            out.append(m)
    return out
