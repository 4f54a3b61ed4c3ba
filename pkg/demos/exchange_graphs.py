"""Count exchange-graph chambers and compare against the closed formula.

Builds the canonicalized exchange graph for the rank-2 and rank-3 presets at
levels 1..3, checks the node counts against the Fuss-Catalan numbers, looks at
the pentagon shape of the smallest graph, and shows how the node cap guards
against quivers whose graph never closes up.

Run:  python3 demos/exchange_graphs.py
"""

from collections import Counter

from mcfans import MutationContext, exchange_graph, fuss_catalan, preset
from mcfans.errors import NodeCapExceeded


def main():
    # --- chamber counts match fuss_catalan(n, m) ---
    for name in ("a2", "a3"):
        q = preset(name)
        for m in (1, 2, 3):
            g = exchange_graph(MutationContext(q, m))
            expected = fuss_catalan(q.n, m)
            mark = "ok" if len(g) == expected else "MISMATCH"
            print(f"{name} m={m}: {len(g)} chambers, "
                  f"{len(g.edges)} green edges (formula {expected}, {mark})")

    # --- the level-1 rank-2 graph is a pentagon ---
    g = exchange_graph(MutationContext(preset("a2"), 1))
    degree = Counter()
    for (u, v, _k, _p) in g.edges:
        degree[u] += 1
        degree[v] += 1
    print(f"a2 m=1: degrees {sorted(degree.values())}, "
          f"{len(g.terminals)} terminal chamber -> a pentagon")

    # --- the affine preset never closes up; the cap raises instead of hanging ---
    try:
        exchange_graph(MutationContext(preset("a2tilde"), 1), node_cap=50)
    except NodeCapExceeded as exc:
        print(f"a2tilde m=1 with node_cap=50: {exc}")


if __name__ == "__main__":
    main()
