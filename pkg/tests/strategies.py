"""Hypothesis strategies for labeled structures."""

from hypothesis import strategies as st

from tourpat.structures import ColoredGraph, ColoredTournament, Coloring, Graph, Tournament, num_pairs


@st.composite
def tournaments(draw, min_order=1, max_order=6):
    k = draw(st.integers(min_order, max_order))
    return Tournament(k, draw(st.integers(0, (1 << num_pairs(k)) - 1)))


@st.composite
def graphs(draw, min_order=1, max_order=6):
    k = draw(st.integers(min_order, max_order))
    return Graph(k, draw(st.integers(0, (1 << num_pairs(k)) - 1)))


@st.composite
def colorings(draw, n, palette):
    return Coloring(palette, tuple(draw(st.lists(st.integers(1, palette), min_size=n, max_size=n))))


@st.composite
def colored_graphs(draw, palette, max_order=9):
    n = draw(st.integers(1, max_order))
    g = Graph(n, draw(st.integers(0, (1 << num_pairs(n)) - 1)))
    return ColoredGraph(g, draw(colorings(n, palette)))


@st.composite
def colored_tournaments(draw, palette, max_order=9):
    n = draw(st.integers(1, max_order))
    t = Tournament(n, draw(st.integers(0, (1 << num_pairs(n)) - 1)))
    return ColoredTournament(t, draw(colorings(n, palette)))
