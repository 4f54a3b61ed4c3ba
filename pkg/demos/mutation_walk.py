"""Walk a slope-graded mutation chain and then undo it.

Starts from the initial state of the rank-2 quiver "a2" at level 3, applies a
fixed sequence of raising mutations, prints the exchange matrix, the
unsigned c-matrix and the slope vector after every step, and finally reverses
the whole walk with lowering mutations to recover the initial state.

Run:  python3 demos/mutation_walk.py
"""

from mcfans import (MutationContext, initial_state, mu_plus, mu_minus,
                    is_terminal, preset, signed_c_matrix, validate_state)

MOVES = (2, 2, 2, 1, 1, 1, 2)  # vertex indices, 1-based


def show(label, st):
    print(f"{label:>10}  B={st.B}  |C|={st.absC}  slopes={st.slopes}")


def main():
    q = preset("a2")
    ctx = MutationContext(q, 3)
    st = initial_state(ctx)
    show("start", st)

    # --- raise slopes one mutation at a time ---
    history = [st]
    for k in MOVES:
        st = mu_plus(st, k)
        validate_state(st)
        show(f"mu+({k})", st)
        history.append(st)
    print(f"terminal: {is_terminal(st)} (all slopes reached m={ctx.m})")
    print(f"signed c-matrix at the top: {signed_c_matrix(st)}")

    # --- walk back down with lowering mutations ---
    for k in reversed(MOVES):
        st = mu_minus(st, k)
    show("back", st)
    assert st.B == history[0].B
    assert st.absC == history[0].absC
    assert st.slopes == history[0].slopes
    print("lowering mutations returned the walk to its starting state")


if __name__ == "__main__":
    main()
