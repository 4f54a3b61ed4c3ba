"""Enumerate maximal green sequences and print their graded crossings.

Lists every maximal green sequence for "a2" at levels 1 and 3, shows the
graded vectors each sequence crosses, reports the longest green path for
"a3" at level 3, and demonstrates the truncation flag on the affine preset,
which has infinitely many sequences.

Run:  python3 demos/maximal_green.py
"""

from collections import Counter

from mcfans import MutationContext, enumerate_mgs, longest_mgs, preset


def main():
    # --- level 1: the two classical sequences of the rank-2 quiver ---
    ctx = MutationContext(preset("a2"), 1)
    result = enumerate_mgs(ctx, depth_cap=8)
    print(f"a2 m=1: {len(result)} sequences, truncated={result.truncated}")
    for rec in result:
        crossings = [(c.coords, c.grade) for c in rec.crossings]
        print(f"  {rec.mutations}  crossings={crossings}")

    # --- level 3: many more sequences, lengths between 2n and n*(m+... ) ---
    ctx3 = MutationContext(preset("a2"), 3)
    result3 = enumerate_mgs(ctx3, depth_cap=12)
    lengths = Counter(rec.length for rec in result3)
    print(f"a2 m=3: {len(result3)} sequences, "
          f"length histogram {dict(sorted(lengths.items()))}")
    first = result3.records[0]
    print(f"  first (DFS order): {first.mutations}")

    # --- longest green path, computed on the exchange graph ---
    print(f"a3 m=3: longest sequence has length "
          f"{longest_mgs(MutationContext(preset('a3'), 3))}")

    # --- the affine preset: enumeration works, but only up to the cap ---
    ctx_aff = MutationContext(preset("a2tilde"), 1)
    res_aff = enumerate_mgs(ctx_aff, depth_cap=10)
    print(f"a2tilde m=1 (depth_cap=10): {len(res_aff)} sequences found, "
          f"truncated={res_aff.truncated}")
    for rec in res_aff:
        print(f"  {rec.mutations}")


if __name__ == "__main__":
    main()
