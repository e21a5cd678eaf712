"""Words and canonical elements of a right-angled Coxeter group.

Generators are involutions; adjacent generators commute.  A word is reduced
when no two equal letters are separated only by letters commuting with them
(Tits' criterion for the right-angled case).  The canonical form used for
equality is the ShortLex-least word in the commutation class, obtained by
greedily emitting the smallest available left descent.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Optional

from .graph import SimpleGraph, UnknownVertexError, link

DEFAULT_BALL_CAP = 2_000_000
BALL_CAP_ENV = "RACG_BALL_CAP"


class GraphMismatchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


def _check_letters(g: SimpleGraph, letters: Iterable[str]) -> tuple[str, ...]:
    letters = tuple(letters)
    for a in letters:
        if a not in g.index:
            raise UnknownVertexError(f"unknown letter {a!r}")
    return letters


def reduce_word(g: SimpleGraph, letters: Iterable[str]) -> tuple[str, ...]:
    """A reduced word for the same group element.

    Folds letters left to right: an incoming letter cancels the rightmost
    equal letter that only commuting letters separate it from, else appends.
    """
    letters = _check_letters(g, letters)
    out: list[str] = []
    for a in letters:
        cancel = -1
        for i in range(len(out) - 1, -1, -1):
            if out[i] == a:
                cancel = i
                break
            if a not in g.adj[out[i]]:
                break
        if cancel >= 0:
            del out[cancel]
        else:
            out.append(a)
    return tuple(out)


#: short alias; ``reduce(g, w)`` returns a reduced word for the element of w
reduce = reduce_word


def _canonical(g: SimpleGraph, reduced: tuple[str, ...]) -> tuple[str, ...]:
    """ShortLex-least word commutation-equivalent to a reduced word."""
    idx = g.index
    rest = list(reduced)
    out: list[str] = []
    while rest:
        best = None
        best_pos = -1
        for i, a in enumerate(rest):
            if all(a in g.adj[b] for b in rest[:i]):
                if best is None or idx[a] < idx[best]:
                    best = a
                    best_pos = i
        out.append(rest.pop(best_pos))
    return tuple(out)


class Element:
    """A group element, stored as its canonical reduced word."""

    __slots__ = ("graph", "letters", "_hash")

    def __init__(self, graph: SimpleGraph, letters: tuple[str, ...], _canonical_ok=False):
        if not _canonical_ok:
            letters = _canonical(graph, reduce_word(graph, letters))
        self.graph = graph
        self.letters = letters
        self._hash = hash((graph, letters))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.letters == other.letters
            and self.graph == other.graph
        )

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Element") -> "Element":
        if self.graph != other.graph:
            raise GraphMismatchError("elements live over different graphs")
        return Element(self.graph, self.letters + other.letters)

    def inverse(self) -> "Element":
        # letters are involutions, so reversal inverts
        return Element(self.graph, self.letters[::-1])

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity(self.graph)
        for _ in range(n):
            result = result * self
        return result

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self):
        idx = self.graph.index
        return (len(self.letters), tuple(idx[a] for a in self.letters))

    def __repr__(self) -> str:
        return f"Element({format_word(self)!r})"


def identity(g: SimpleGraph) -> Element:
    return Element(g, (), _canonical_ok=True)


def generator(g: SimpleGraph, v: str) -> Element:
    g.check_vertex(v)
    return Element(g, (v,), _canonical_ok=True)


def normal_form(g: SimpleGraph, letters: Iterable[str]) -> Element:
    return Element(g, _check_letters(g, letters))


def multiply(x: Element, y: Element) -> Element:
    return x * y


def inverse(x: Element) -> Element:
    return x.inverse()


def length(x: Element) -> int:
    return len(x.letters)


def left_descents(x: Element) -> frozenset:
    """Letters a with |a x| < |x|: first occurrence preceded only by commuting letters."""
    g = x.graph
    out = set()
    for i, a in enumerate(x.letters):
        if a in out:
            continue
        if all(a in g.adj[b] for b in x.letters[:i]):
            out.add(a)
    return frozenset(out)


def right_descents(x: Element) -> frozenset:
    g = x.graph
    out = set()
    rev = x.letters[::-1]
    for i, a in enumerate(rev):
        if a in out:
            continue
        if all(a in g.adj[b] for b in rev[:i]):
            out.add(a)
    return frozenset(out)


def support(x: Element) -> frozenset:
    """Set of letters of the canonical word; an invariant of the element."""
    return frozenset(x.letters)


def element_link(x: Element) -> frozenset:
    """Vertices commuting with (and disjoint from) the support of ``x``."""
    return link(x.graph, support(x))


def ball_cap() -> int:
    raw = os.environ.get(BALL_CAP_ENV)
    return int(raw) if raw else DEFAULT_BALL_CAP


def ball(g: SimpleGraph, radius: int, cap: Optional[int] = None) -> list[Element]:
    """All elements of length at most ``radius``, sorted by ShortLex.

    Breadth-first over right multiplication by generators, deduplicating on
    normal forms.  Raises BudgetExceededError past the element cap.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if cap is None:
        cap = ball_cap()
    seen: set[Element] = {identity(g)}
    frontier = [identity(g)]
    for _ in range(radius):
        new = []
        for x in frontier:
            for v in g.vertices:
                y = x * generator(g, v)
                if len(y) == len(x) + 1 and y not in seen:
                    seen.add(y)
                    new.append(y)
                    if len(seen) > cap:
                        raise BudgetExceededError(
                            f"ball size exceeds cap of {cap} elements"
                        )
        frontier = new
        if not frontier:
            break
    return sorted(seen, key=Element.sort_key)


def sphere_sizes(g: SimpleGraph, radius: int, cap: Optional[int] = None) -> list[int]:
    """Element counts per length, 0..radius."""
    counts = [0] * (radius + 1)
    for x in ball(g, radius, cap=cap):
        counts[len(x)] += 1
    return counts


def iter_words(g: SimpleGraph, max_len: int) -> Iterator[tuple[str, ...]]:
    """All words (not just reduced ones) of length at most ``max_len``."""
    stack: list[tuple[str, ...]] = [()]
    while stack:
        w = stack.pop()
        yield w
        if len(w) < max_len:
            for v in g.vertices:
                stack.append(w + (v,))


# -- word text format ------------------------------------------------------

IDENTITY_TOKEN = "e"


def parse_word(g: SimpleGraph, text: str) -> Element:
    """Whitespace-separated letters; ``e`` denotes the identity."""
    tokens = text.split()
    if tokens == [IDENTITY_TOKEN] and IDENTITY_TOKEN not in g.index:
        return identity(g)
    return normal_form(g, tokens)


def format_word(x: Element) -> str:
    return " ".join(x.letters) if x.letters else IDENTITY_TOKEN
