"""The named graph corpus used by the verification suites and fixtures.

Includes the four classification patterns, small cycles, cliques, paths and
20 fixed-seed random graphs on 6 vertices.  Random graphs whose radius-10
ball would be huge are skipped deterministically so that exact BFS
cross-checks stay cheap.
"""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

from .graph import PATTERNS, C4, K23, K23_PLUS, L, L_PLUS, SimpleGraph
from .growth import growth_series, series_coefficients

RANDOM_SEED = 20240801
RANDOM_COUNT = 20
RANDOM_EDGE_PROB = 0.6
BALL10_LIMIT = 60_000


def dinf() -> SimpleGraph:
    """Two free involutions: the infinite dihedral group."""
    return SimpleGraph(["u", "v"], [])


def path(n: int) -> SimpleGraph:
    vs = [f"p{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, list(zip(vs, vs[1:])))


def clique(n: int) -> SimpleGraph:
    vs = [f"k{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, list(combinations(vs, 2)))


def cycle(n: int) -> SimpleGraph:
    vs = [f"c{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def k23_minus() -> SimpleGraph:
    """K_{2,3} with the a2-b3 edge removed."""
    edges = [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")]
    edges.remove(("a2", "b3"))
    return SimpleGraph(["a1", "a2", "b1", "b2", "b3"], edges)


def _ball_size(g: SimpleGraph, radius: int) -> int:
    return sum(series_coefficients(growth_series(g), radius))


def random_graphs() -> dict[str, SimpleGraph]:
    """20 seeded 6-vertex graphs with tractable radius-10 balls."""
    rng = random.Random(RANDOM_SEED)
    vs = [f"v{i}" for i in range(1, 7)]
    out: dict[str, SimpleGraph] = {}
    while len(out) < RANDOM_COUNT:
        edges = [e for e in combinations(vs, 2) if rng.random() < RANDOM_EDGE_PROB]
        g = SimpleGraph(vs, edges)
        if _ball_size(g, 10) > BALL10_LIMIT:
            continue
        out[f"rand6_{len(out):02d}"] = g
    return out


def named_corpus() -> dict[str, SimpleGraph]:
    """The small named graphs (no randoms)."""
    out = {
        "l": PATTERNS[L],
        "l_plus": PATTERNS[L_PLUS],
        "k23": PATTERNS[K23],
        "k23_plus": PATTERNS[K23_PLUS],
        "c4": PATTERNS[C4],
        "c5": cycle(5),
        "k1": clique(1),
        "k2": clique(2),
        "k3": clique(3),
        "k4": clique(4),
        "p2": path(2),
        "p3": path(3),
        "p4": path(4),
        "k23_minus": k23_minus(),
        "dinf": dinf(),
    }
    return out


def full_corpus() -> dict[str, SimpleGraph]:
    out = named_corpus()
    out.update(random_graphs())
    return out


def write_fixtures(directory: str | Path) -> list[Path]:
    """Write every corpus graph as a .graph file; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, g in full_corpus().items():
        p = directory / f"{name}.graph"
        p.write_text(g.to_text(), encoding="utf-8")
        paths.append(p)
    return paths
