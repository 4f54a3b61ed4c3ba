"""Slice a mutation state into horizontal and vertical fan algebras.

Takes a level-3 state of the rank-3 preset "a3", prints its m-configuration,
builds the horizontal and vertical algebras (one factor per slot of two
adjacent slopes), checks which algebra survives a mutation of each parity,
and prints the tagged wall sets with their drawing styles.

Run:  python3 demos/fan_algebras.py
"""

from mcfans import (MutationContext, check_hv_invariance,
                    configuration_of_state, fan_wall_set, horizontal_algebra,
                    initial_state, mu_plus, preset, vertical_algebra)


def main():
    ctx = MutationContext(preset("a3"), 3)
    st = mu_plus(mu_plus(initial_state(ctx), 2), 1)
    print(f"state: slopes={st.slopes}")

    # --- the m-configuration groups columns by slope ---
    conf = configuration_of_state(st)
    print(f"configuration items: {conf.ordered_items()}")

    # --- horizontal slots pair slopes (2s, 2s+1); vertical pair (2s-1, 2s) ---
    h = horizontal_algebra(conf)
    v = vertical_algebra(conf)
    print(f"horizontal algebra: parity={h.parity}, ranks={h.ranks()}")
    for (slot, dims) in h.factor_dims():
        print(f"  slot {slot}: {sorted(dims)}")
    print(f"vertical algebra:   parity={v.parity}, ranks={v.ranks()}")
    for (slot, dims) in v.factor_dims():
        print(f"  slot {slot}: {sorted(dims)}")

    # --- an even-slope mutation preserves H, an odd-slope one preserves V ---
    for k in (1, 2, 3):
        slope = st.slopes[k - 1]
        which = "H" if slope % 2 == 0 else "V"
        kept = check_hv_invariance(st, k)
        print(f"mu+({k}) raises slope {slope}: {which} preserved = {kept}")

    # --- tagged walls carry a slot and a style for rendering ---
    for parity in ("horizontal", "vertical"):
        walls = fan_wall_set(conf, parity)
        print(f"{parity} wall set ({len(walls)} walls):")
        for w in walls:
            print(f"  normal={w.normal} slot={w.slot} style={w.style} "
                  f"subdims={sorted(w.subdims)}")


if __name__ == "__main__":
    main()
