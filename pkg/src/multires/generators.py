"""Deterministic constructors for every analysed graph family.

Vertex labelings are part of the contract so that solver witnesses are
reproducible:

  path/cycle/complete  0..n-1 in order (cycle in rim order)
  star                 center 0, leaves 1..m
  wheel                rim 0..n-1 in cycle order, hub = n (last index)
  amal                 identified vertex 0, cliques appended in order
  edge_amal            identified edge (0, 1), cliques appended in order
  corona               base graph keeps its labels, copies appended per base
                       vertex in order
  join                 first graph's labels, then the second graph shifted
  unicyclic            cycle 0..c-1, tree vertices appended; parent of the
                       t-th tree vertex is any already-existing vertex
  gadget               clique first (u_1..u_k, v_0, v_1, ...), then the
                       pendant paths in j order
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import CapExceededError, GraphValidationError
from .graph import Graph

ALL_CONNECTED_CAP = 7


@dataclass(frozen=True)
class FamilySpec:
    """Parametric description of a generated family.

    Compact string grammar (see parse_family_spec): "wheel:8",
    "amal:3,3,4", "corona:path:3/2,2,2", "join:cycle:5+path:2",
    "unicyclic:5/1,5", "gadget:8".
    """

    tag: str
    numbers: tuple = ()
    subs: tuple = ()

    def __str__(self):
        if self.tag == "corona":
            return f"corona:{self.subs[0]}/{','.join(map(str, self.numbers))}"
        if self.tag == "join":
            return f"join:{self.subs[0]}+{self.subs[1]}"
        if self.tag == "unicyclic":
            head = str(self.numbers[0])
            rest = ",".join(map(str, self.numbers[1:]))
            return f"unicyclic:{head}/{rest}" if rest else f"unicyclic:{head}"
        return f"{self.tag}:{','.join(map(str, self.numbers))}"


_TAGS = {
    "path",
    "cycle",
    "complete",
    "star",
    "wheel",
    "amal",
    "edge_amal",
    "corona",
    "join",
    "unicyclic",
    "gadget",
}


def _ints(text, what):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise GraphValidationError(f"bad integer list {text!r} in {what}") from None


def parse_family_spec(text):
    text = text.strip()
    tag, sep, rest = text.partition(":")
    tag = tag.strip().lower().replace("edgeamal", "edge_amal")
    if tag not in _TAGS:
        raise GraphValidationError(f"unknown family {tag!r}")
    if not sep or not rest:
        raise GraphValidationError(f"family {tag!r} needs parameters")
    if tag == "corona":
        base_text, slash, orders = rest.rpartition("/")
        if not slash:
            raise GraphValidationError("corona spec needs base/orders, e.g. corona:path:3/2,2,2")
        return FamilySpec("corona", _ints(orders, "corona orders"), (parse_family_spec(base_text),))
    if tag == "join":
        left, plus, right = rest.partition("+")
        if not plus:
            raise GraphValidationError("join spec needs two parts, e.g. join:cycle:5+path:2")
        return FamilySpec("join", (), (parse_family_spec(left), parse_family_spec(right)))
    if tag == "unicyclic":
        head, slash, parents = rest.partition("/")
        nums = _ints(head, "cycle length")
        if slash:
            nums += _ints(parents, "unicyclic parents")
        return FamilySpec("unicyclic", nums)
    return FamilySpec(tag, _ints(rest, tag))


def _require(cond, message):
    if not cond:
        raise GraphValidationError(message)


def gen_path(n):
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n):
    _require(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n):
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def gen_star(m):
    _require(m >= 1, "star needs m >= 1 leaves")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def gen_wheel(n):
    _require(n >= 3, "wheel needs n >= 3 rim vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


def gen_amal(orders):
    _require(len(orders) >= 2, "amal needs m >= 2 cliques")
    _require(all(ni >= 1 for ni in orders), "amal needs n_i >= 1")
    edges = []
    nxt = 1
    for ni in orders:
        block = [0] + list(range(nxt, nxt + ni - 1))
        nxt += ni - 1
        edges += combinations(block, 2)
    return Graph(max(nxt, 1), edges)


def gen_edge_amal(orders):
    _require(len(orders) >= 2, "edge_amal needs m >= 2 cliques")
    _require(all(ni >= 2 for ni in orders), "edge_amal needs n_i >= 2")
    edges = [(0, 1)]
    nxt = 2
    for ni in orders:
        block = [0, 1] + list(range(nxt, nxt + ni - 2))
        nxt += ni - 2
        edges += combinations(block, 2)
    return Graph(nxt, edges)


def gen_corona(base, orders):
    _require(
        len(orders) == base.n,
        f"corona needs one clique order per base vertex ({base.n}), got {len(orders)}",
    )
    _require(all(mi >= 1 for mi in orders), "corona needs m_i >= 1")
    edges = list(base.edges)
    nxt = base.n
    for i, mi in enumerate(orders):
        block = list(range(nxt, nxt + mi))
        nxt += mi
        edges += combinations(block, 2)
        edges += [(i, v) for v in block]
    return Graph(nxt, edges)


def gen_join(g1, g2):
    shift = g1.n
    edges = list(g1.edges)
    edges += [(u + shift, v + shift) for u, v in g2.edges]
    edges += [(u, v + shift) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def gen_unicyclic(c, parents=()):
    _require(c >= 3, "unicyclic needs cycle length >= 3")
    edges = [(i, (i + 1) % c) for i in range(c)]
    for t, parent in enumerate(parents):
        child = c + t
        _require(
            0 <= parent < child,
            f"unicyclic parent {parent} must reference an existing vertex < {child}",
        )
        edges.append((parent, child))
    return Graph(c + len(parents), edges)


@dataclass(frozen=True)
class CliqueGadget:
    """Clique-of-order-n gadget with its distinguished landmark set.

    labels maps each clique vertex to its k-vector of distances to the
    landmarks (entry j is 2j when realized through the shortcut edge to the
    j-th pendant path, 2j+1 otherwise).
    """

    graph: Graph
    landmarks: tuple
    clique: tuple
    labels: dict


def gen_clique_gadget(n):
    """Graph with clique number n achieving the ceil(log2 n) lower bound.

    A clique K_{2^k} whose vertices are told apart by parity patterns of
    their distances to the far ends of k pendant paths of lengths 2, 4, ...,
    2k; for 2^{k-1} < n < 2^k the lexicographically first mixed-parity clique
    vertices are deleted.
    """
    _require(n >= 2, "clique gadget needs n >= 2")
    if n == 2:
        return CliqueGadget(
            graph=gen_complete(2), landmarks=(0,), clique=(0, 1), labels={}
        )
    k = (n - 1).bit_length()
    full = 1 << k

    vectors = list(product(*[(2 * j, 2 * j + 1) for j in range(1, k + 1)]))
    all_even = tuple(2 * j for j in range(1, k + 1))
    all_odd = tuple(2 * j + 1 for j in range(1, k + 1))
    single_even = {}
    mixed = []
    for vec in vectors:
        evens = [j for j, a in enumerate(vec, start=1) if a % 2 == 0]
        if len(evens) == k or len(evens) == 0:
            continue
        if len(evens) == 1:
            single_even[evens[0]] = vec
        else:
            mixed.append(vec)
    mixed.sort()

    # Full Case-1 ids: u_j -> j-1, v_0 -> k, v_i -> k+i, then path vertices.
    u_id = {j: j - 1 for j in range(1, k + 1)}
    v_count = full - k  # v_0 .. v_{2^k - k - 1}
    v_id = {i: k + i for i in range(v_count)}
    labels_full = {u_id[j]: single_even[j] for j in range(1, k + 1)}
    labels_full[v_id[0]] = all_even
    labels_full[v_id[v_count - 1]] = all_odd
    for i, vec in enumerate(mixed, start=1):
        labels_full[v_id[i]] = vec

    clique_full = list(range(k + v_count))
    edges = list(combinations(clique_full, 2))
    nxt = k + v_count
    path_first = {}  # j -> u_{j,1}
    landmarks_full = []
    for j in range(1, k + 1):
        prev = u_id[j]
        for s in range(1, 2 * j + 1):
            edges.append((prev, nxt))
            if s == 1:
                path_first[j] = nxt
            prev = nxt
            nxt += 1
        landmarks_full.append(prev)  # u_{j,2j}
    for i in range(v_count):
        vec = labels_full[v_id[i]]
        for j in range(1, k + 1):
            if vec[j - 1] == 2 * j:
                edges.append((path_first[j], v_id[i]))

    deleted = {v_id[i] for i in range(1, full - n + 1)} if n < full else set()
    if not deleted:
        g = Graph(nxt, edges)
        return CliqueGadget(
            graph=g,
            landmarks=tuple(landmarks_full),
            clique=tuple(clique_full),
            labels=dict(labels_full),
        )
    kept = [v for v in range(nxt) if v not in deleted]
    remap = {v: i for i, v in enumerate(kept)}
    g = Graph(
        len(kept),
        [(remap[u], remap[v]) for u, v in edges if u not in deleted and v not in deleted],
    )
    return CliqueGadget(
        graph=g,
        landmarks=tuple(remap[v] for v in landmarks_full),
        clique=tuple(remap[v] for v in clique_full if v not in deleted),
        labels={remap[v]: vec for v, vec in labels_full.items() if v not in deleted},
    )


def gen(spec):
    """Build the graph a FamilySpec describes; always connected."""
    tag = spec.tag
    if tag == "path":
        return gen_path(*spec.numbers)
    if tag == "cycle":
        return gen_cycle(*spec.numbers)
    if tag == "complete":
        return gen_complete(*spec.numbers)
    if tag == "star":
        return gen_star(*spec.numbers)
    if tag == "wheel":
        return gen_wheel(*spec.numbers)
    if tag == "amal":
        return gen_amal(spec.numbers)
    if tag == "edge_amal":
        return gen_edge_amal(spec.numbers)
    if tag == "corona":
        return gen_corona(gen(spec.subs[0]), spec.numbers)
    if tag == "join":
        return gen_join(gen(spec.subs[0]), gen(spec.subs[1]))
    if tag == "unicyclic":
        return gen_unicyclic(spec.numbers[0], spec.numbers[1:])
    if tag == "gadget":
        return gen_clique_gadget(*spec.numbers).graph
    raise GraphValidationError(f"unknown family {tag!r}")


def graph_from_mask(n, mask):
    """Labeled graph on 0..n-1 whose edge set is the bitmask over C(n,2) pairs."""
    pairs = list(combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return Graph(n, edges)


def all_connected(n):
    """Every labeled connected simple graph on 0..n-1, each exactly once."""
    if n > ALL_CONNECTED_CAP:
        raise CapExceededError("all_connected enumeration", n, ALL_CONNECTED_CAP)
    if n < 1:
        raise GraphValidationError("all_connected needs n >= 1")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        g = graph_from_mask(n, mask)
        if g.is_connected():
            yield g
