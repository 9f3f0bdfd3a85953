"""Hypothesis strategies for small labelled graphs."""

from hypothesis import strategies as st

from turanlab.graph.core import Graph


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph.empty(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, chosen)


@st.composite
def relabelled(draw: st.DrawFn, g: Graph) -> Graph:
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(perm)


@st.composite
def graph_and_permutation(draw: st.DrawFn, max_n: int = 7) -> tuple[Graph, list[int]]:
    g = draw(graphs(max_n=max_n))
    return g, list(draw(st.permutations(range(g.n))))
