import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from floodit.core import Board, ColouredGraph, FloodState

settings.register_profile(
    "workbench",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("workbench")


def random_connected_graph(rng: random.Random, n: int, colour_count: int) -> ColouredGraph:
    """Random spanning tree plus up to n extra edges; colouring unconstrained."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for _ in range(rng.randrange(n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    colours = tuple(rng.randrange(colour_count) for _ in range(n))
    return ColouredGraph(colour_count, colours, frozenset(edges))


def random_proper_graph(rng: random.Random, lo: int, hi: int, colour_count: int) -> ColouredGraph:
    """Random connected properly coloured graph with lo..hi vertices."""
    while True:
        g = random_connected_graph(rng, rng.randint(lo, hi + 2), colour_count)
        contracted = FloodState.from_graph(g).graph
        if lo <= contracted.vertex_count <= hi:
            return contracted


def random_two_coloured_graph(rng: random.Random, n: int) -> ColouredGraph:
    """Properly 2-coloured connected graph: parity-coloured tree plus odd chords."""
    depth = [0] * n
    edges = set()
    for v in range(1, n):
        p = rng.randrange(v)
        depth[v] = depth[p] + 1
        edges.add((p, v))
    for _ in range(rng.randrange(n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b and (depth[a] + depth[b]) % 2 == 1:
            edges.add((min(a, b), max(a, b)))
    return ColouredGraph(2, tuple(d % 2 for d in depth), frozenset(edges))


def random_spanning_subgraph(rng: random.Random, graph: ColouredGraph) -> ColouredGraph:
    """Connected subgraph on all vertices: random spanning tree plus some edges."""
    n = graph.vertex_count
    perm = list(range(n))
    rng.shuffle(perm)
    in_tree = {perm[0]}
    keep = set()
    frontier = [e for e in graph.edges]
    rng.shuffle(frontier)
    while len(in_tree) < n:
        for a, b in frontier:
            if (a in in_tree) != (b in in_tree):
                keep.add((a, b))
                in_tree.update((a, b))
                break
    for e in graph.edges:
        if e not in keep and rng.random() < 0.5:
            keep.add(e)
    return ColouredGraph(graph.colour_count, graph.colours, frozenset(keep))


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8, min_colours=1, max_colours=3):
    """Connected coloured graph; the colouring may be improper."""
    n = draw(st.integers(min_vertices, max_vertices))
    cc = draw(st.integers(min_colours, max_colours))
    colours = tuple(draw(st.lists(st.integers(0, cc - 1), min_size=n, max_size=n)))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    for a, b in draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n)):
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return ColouredGraph(cc, colours, frozenset(edges))


@st.composite
def boards(draw, max_height=3, max_width=6, min_colours=1, max_colours=3):
    h = draw(st.integers(1, max_height))
    w = draw(st.integers(1, max_width))
    cc = draw(st.integers(min_colours, max_colours))
    cells = tuple(draw(st.lists(st.integers(0, cc - 1), min_size=h * w, max_size=h * w)))
    return Board(h, w, cc, cells)


@st.composite
def path_colourings(draw, max_length=10, max_colours=3):
    cc = draw(st.integers(1, max_colours))
    return draw(st.lists(st.integers(0, cc - 1), min_size=1, max_size=max_length))
