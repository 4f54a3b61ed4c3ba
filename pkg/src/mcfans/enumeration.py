"""Exchange-graph exploration, maximal green sequences, edge parity and fan
components.

m-clusters are unordered, so states are identified up to simultaneous column
permutation (canonical_key).  Graph nodes are canonical keys with one concrete
representative state each; green edges are recorded while expanding each
representative through mu_plus, and mu_minus is used only to close the node
set downward.
"""

import json
import math
from itertools import permutations

from .errors import NodeCapExceeded, NotInvertibleHere, SlopeAtMax
from .mutation import (GradedVector, initial_state, is_terminal, mu_minus,
                       mu_plus, state_to_json)

DEFAULT_NODE_CAP = 100000


def canonical_key(st):
    """Lexicographically minimal serialization over all column permutations.

    A permutation acts by reordering C-columns and slopes and conjugating B;
    coordinate rows of |C| are not permuted.
    """
    n = st.context.n
    best = None
    for p in permutations(range(n)):
        b = tuple(tuple(st.B[p[i]][p[j]] for j in range(n)) for i in range(n))
        absc = tuple(tuple(st.absC[i][p[j]] for j in range(n)) for i in range(n))
        slopes = tuple(st.slopes[p[j]] for j in range(n))
        cand = json.dumps([b, absc, slopes], separators=(",", ":"))
        if best is None or cand < best:
            best = cand
    return best


class ExchangeGraph:
    """Canonicalized exchange graph: nodes, green edges, initial/terminal keys."""

    def __init__(self, nodes, edges, initial, terminals):
        self.nodes = nodes          # key -> representative MutationState
        self.edges = edges          # list of (from_key, to_key, k, parity)
        self.initial = initial
        self.terminals = terminals

    def __len__(self):
        return len(self.nodes)


def classify_edge(st, k):
    """'horizontal' if the mutated slope is even, 'vertical' if odd."""
    sk = st.slopes[k - 1]
    if sk == st.context.m:
        raise SlopeAtMax(f"slope at vertex {k} already equals m")
    return "horizontal" if sk % 2 == 0 else "vertical"


def exchange_graph(ctx, node_cap=None):
    """Closure of the initial state under mu_plus and mu_minus.

    Raises NodeCapExceeded if more than node_cap canonical classes appear
    (guards against non-finite type).
    """
    cap = DEFAULT_NODE_CAP if node_cap is None else int(node_cap)
    init = initial_state(ctx)
    init_key = canonical_key(init)
    reps = {init_key: init}
    edges = []
    queue = [init_key]
    qi = 0
    while qi < len(queue):
        key = queue[qi]
        qi += 1
        st = reps[key]
        for k in range(1, ctx.n + 1):
            sk = st.slopes[k - 1]
            if sk < ctx.m:
                nxt = mu_plus(st, k)
                nkey = canonical_key(nxt)
                if nkey not in reps:
                    reps[nkey] = nxt
                    queue.append(nkey)
                    if len(reps) > cap:
                        raise NodeCapExceeded(f"exchange graph exceeds {cap} nodes")
                edges.append((key, nkey, k, classify_edge(st, k)))
            if sk > 0:
                try:
                    prev = mu_minus(st, k)
                except NotInvertibleHere:
                    continue
                pkey = canonical_key(prev)
                if pkey not in reps:
                    reps[pkey] = prev
                    queue.append(pkey)
                    if len(reps) > cap:
                        raise NodeCapExceeded(f"exchange graph exceeds {cap} nodes")
    terminals = sorted(k for k, s in reps.items() if is_terminal(s))
    return ExchangeGraph(reps, edges, init_key, terminals)


def fuss_catalan(n, m):
    """(1/(m(n+1)+1)) * binomial((m+1)(n+1), n+1), exactly."""
    if n < 1 or m < 1:
        raise ValueError("fuss_catalan needs n, m >= 1")
    num = math.comb((m + 1) * (n + 1), n + 1)
    den = m * (n + 1) + 1
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Fuss-Catalan closed form came out non-integral")
    return q


class MgsRecord:
    """One maximal green sequence: vertex indices plus graded crossings."""

    def __init__(self, mutations, crossings):
        self.mutations = tuple(mutations)
        self.crossings = tuple(crossings)

    @property
    def length(self):
        return len(self.mutations)

    def __repr__(self):
        return f"MgsRecord(mutations={self.mutations})"

    def to_json(self):
        return {"mutations": list(self.mutations),
                "crossings": [c.to_json() for c in self.crossings]}


class MgsResult:
    """All MGSs found within the depth cap, plus a truncation flag."""

    def __init__(self, records, truncated):
        self.records = list(records)
        self.truncated = truncated

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def enumerate_mgs(ctx, depth_cap):
    """All maximal positive-mutation sequences from the initial state that
    terminate (all slopes = m) within depth_cap steps. Deterministic DFS,
    ascending vertex index at every branch."""
    if depth_cap < 1:
        raise ValueError("depth_cap must be >= 1")
    records = []
    truncated = [False]

    def dfs(st, path, crossings):
        if is_terminal(st):
            records.append(MgsRecord(path, crossings))
            return
        if len(path) >= depth_cap:
            truncated[0] = True
            return
        for k in range(1, ctx.n + 1):
            if st.slopes[k - 1] < ctx.m:
                cross = st.graded_column(k - 1)
                dfs(mu_plus(st, k), path + [k], crossings + [cross])

    dfs(initial_state(ctx), [], [])
    return MgsResult(records, truncated[0])


def _toposort_green(graph):
    """Topological order of nodes under green edges; raises if cyclic."""
    indeg = {key: 0 for key in graph.nodes}
    out = {key: [] for key in graph.nodes}
    for (u, v, _k, _p) in graph.edges:
        out[u].append(v)
        indeg[v] += 1
    order = [k for k in sorted(indeg) if indeg[k] == 0]
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in sorted(out[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    if len(order) != len(graph.nodes):
        raise ValueError("green-edge relation has a directed cycle")
    return order


def longest_mgs(ctx, node_cap=None):
    """Length of the longest green path from the initial to a terminal node."""
    graph = exchange_graph(ctx, node_cap=node_cap)
    order = _toposort_green(graph)
    dist = {key: None for key in graph.nodes}
    dist[graph.initial] = 0
    succ = {key: [] for key in graph.nodes}
    for (u, v, _k, _p) in graph.edges:
        succ[u].append(v)
    for u in order:
        if dist[u] is None:
            continue
        for v in succ[u]:
            if dist[v] is None or dist[v] < dist[u] + 1:
                dist[v] = dist[u] + 1
    best = [dist[t] for t in graph.terminals if dist[t] is not None]
    if not best:
        raise ValueError("no terminal node reachable from the initial state")
    return max(best)


def fan_components(graph, parity):
    """Connected components of the subgraph keeping only edges of one parity.

    Returns a list of sorted key tuples, largest first (ties by first key).
    """
    if parity not in ("horizontal", "vertical"):
        raise ValueError(f"parity must be horizontal or vertical, got {parity!r}")
    parent = {key: key for key in graph.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v, _k, p) in graph.edges:
        if p == parity:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    groups = {}
    for key in graph.nodes:
        groups.setdefault(find(key), []).append(key)
    comps = [tuple(sorted(g)) for g in groups.values()]
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


# --- serialization ---

def graph_to_json(graph):
    return {
        "nodes": [{"key": key, "state": state_to_json(graph.nodes[key])}
                  for key in sorted(graph.nodes)],
        "edges": [{"from": u, "to": v, "k": k, "parity": p}
                  for (u, v, k, p) in sorted(graph.edges)],
        "initial": graph.initial,
        "terminals": list(graph.terminals),
    }


def mgs_to_json(result):
    return {"sequences": [rec.to_json() for rec in result.records],
            "truncated": result.truncated}
