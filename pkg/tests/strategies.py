import random

from hypothesis import strategies as st

from multires.generators import graph_from_mask
from multires.graph import Graph


def random_connected_graph(rng, n_max=8, n_min=2):
    """Uniform-ish random connected graph: spanning tree plus random edges."""
    n = rng.randint(n_min, n_max)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        parent = rng.choice(order[:i])
        edges.add(tuple(sorted((order[i], parent))))
    extra = rng.randint(0, n * (n - 1) // 2)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add(tuple(sorted((u, v))))
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, n_max=6):
    n = draw(st.integers(min_value=1, max_value=n_max))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1))
    g = graph_from_mask(n, mask)
    if not g.is_connected():
        # patch up connectivity deterministically from the drawn mask
        seed = draw(st.integers(min_value=0, max_value=2**16))
        rng = random.Random(seed)
        comps = _components(g)
        edges = set(g.edges)
        for a, b in zip(comps, comps[1:]):
            edges.add(tuple(sorted((rng.choice(a), rng.choice(b)))))
        g = Graph(n, edges)
    return g


def _components(g):
    seen = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        stack = [s]
        comp = []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps
