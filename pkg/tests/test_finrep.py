"""Indecomposables, hom/ext, walls, torsion classes, module oracles."""

import pytest

from mcfans.enumeration import exchange_graph
from mcfans.errors import (NotExceptionalSequence, TooLarge, UnsupportedType)
from mcfans.finrep import (ShiftedProjective, Wall, canonical_decomposition,
                           check_wall_membership, ext_dim, extension_middle,
                           generic_subdims, hom_dim, indecomposables,
                           is_exceptional_sequence, mutation_case_oracle,
                           perp_category, quotient_summand_dims,
                           restricted_walls, span_of, submodule_dims,
                           torsion_class_of_state, verify_chamber, wall_of)
from mcfans.mutation import MutationContext
from mcfans.seed import ValuedQuiver, euler_pairing, preset

# --- tables ---

def test_table_sizes(q2, q3, table2, table3):
    assert len(table2) == 3 and len(table3) == 6
    assert len(indecomposables(preset("a_n:<<<"))) == 10
    assert set(table2.by_dim) == {(1, 0), (0, 1), (1, 1)}
    assert set(table3.by_dim) == {(1, 0, 0), (0, 1, 0), (0, 0, 1),
                                  (1, 1, 0), (0, 1, 1), (1, 1, 1)}


def test_table_is_cached(q2, table2):
    assert indecomposables(q2) is table2


def test_projectives_and_simples(table2, table3):
    assert table2.projective(1).dim == (1, 0)
    assert table2.projective(2).dim == (1, 1)
    assert table2.simple(2).dim == (0, 1)
    # vertices 1 and 3 are sinks, so their projectives are simple
    assert table3.projective(1).dim == (1, 0, 0)
    assert table3.projective(3).dim == (0, 0, 1)
    assert table3.projective(2).dim == (1, 1, 1)


def test_star_quiver_table():
    e = ((1, -1, -1, -1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    star = ValuedQuiver(4, e, name="star4")
    table = indecomposables(star)
    assert len(table) == 12
    assert (2, 1, 1, 1) in table.by_dim


def test_unsupported_quivers(q2t, qb2):
    with pytest.raises(UnsupportedType):
        indecomposables(q2t)
    with pytest.raises(UnsupportedType):
        indecomposables(qb2)


# --- hom / ext ---

def test_hom_ext_values(table2, table3):
    S1, S2, P2 = table2.simple(1), table2.simple(2), table2.projective(2)
    assert hom_dim(S1, P2) == 1 and hom_dim(P2, S1) == 0
    assert hom_dim(S2, S1) == 0 and ext_dim(S2, S1) == 1
    assert ext_dim(S1, S2) == 0
    assert hom_dim(table3.projective(2), table3.simple(2)) == 1
    assert ext_dim(table3.simple(2), table3.simple(3)) == 1


def test_hom_minus_ext_is_euler(q3, table3):
    for x in table3:
        for y in table3:
            assert hom_dim(x, y) - ext_dim(x, y) == \
                euler_pairing(q3, x.dim, y.dim)


def test_hom_rejects_foreign_pairs(table2, table3):
    with pytest.raises(ValueError):
        hom_dim(table2.simple(1), table3.simple(1))
    with pytest.raises(TypeError):
        hom_dim((1, 0), table2.simple(1))


def test_exceptional_sequences(table2, table3):
    S1, S2 = table2.simple(1), table2.simple(2)
    assert is_exceptional_sequence((S2, S1))
    assert not is_exceptional_sequence((S1, S2))
    assert is_exceptional_sequence(
        (table3.simple(2), table3.simple(1), table3.simple(3)))


# --- submodules and walls ---

def test_submodule_dims(table2, table3):
    assert submodule_dims(table2.projective(2)) == {(1, 0)}
    assert submodule_dims(table2.simple(1)) == set()
    p2 = table3.projective(2)
    assert submodule_dims(p2) == {(1, 0, 0), (0, 0, 1), (1, 0, 1)}
    # prime-independence spot check
    assert submodule_dims(p2, _char=3) == submodule_dims(p2)


def test_submodule_guard():
    q13 = preset("a_n:" + "<" * 12)
    table = indecomposables(q13)
    with pytest.raises(TooLarge):
        submodule_dims(table.by_dim[tuple([1] * 13)])


def test_wall_of(table2):
    w = wall_of(table2.projective(2))
    assert w == Wall((1, 1), {(1, 0)})
    assert w.to_json() == {"normal": [1, 1], "subdims": [[1, 0]]}
    # on the hyperplane, submodule side
    assert w.contains((-1, 1))
    # on the hyperplane but on the wrong side of the submodule inequality
    assert not w.contains((1, -1))
    # off the hyperplane entirely
    assert not w.contains((1, 0))


def test_check_wall_membership(table2):
    S1, S2, P2 = table2.simple(1), table2.simple(2), table2.projective(2)
    assert check_wall_membership(S1, S2) is True
    assert check_wall_membership(P2, S1) is True
    assert check_wall_membership(S1, S1) is False
    assert check_wall_membership(ShiftedProjective(table2, 1), S2) is True
    assert check_wall_membership(ShiftedProjective(table2, 2), S2) is False


def test_shifted_projective_guard(table2):
    with pytest.raises(ValueError):
        ShiftedProjective(table2, 3)


def test_verify_chamber(q2):
    graph = exchange_graph(MutationContext(q2, 1))
    assert all(verify_chamber(st) for st in graph.nodes.values())
    ctx3 = MutationContext(q2, 3)
    from mcfans.mutation import initial_state
    with pytest.raises(ValueError):
        verify_chamber(initial_state(ctx3))


# --- torsion classes ---

def test_torsion_chart(q2):
    graph = exchange_graph(MutationContext(q2, 1))
    chart = {tuple(map(tuple, torsion_class_of_state(st).dims()))
             for st in graph.nodes.values()}
    assert chart == {
        (),
        ((0, 1),),
        ((1, 0),),
        ((0, 1), (1, 1)),
        ((0, 1), (1, 0), (1, 1)),
    }


def test_torsion_distinct_rank3(q3):
    graph = exchange_graph(MutationContext(q3, 1))
    classes = {torsion_class_of_state(st) for st in graph.nodes.values()}
    assert len(classes) == 14


def test_torsion_json(q2):
    graph = exchange_graph(MutationContext(q2, 1))
    full = max((torsion_class_of_state(st) for st in graph.nodes.values()),
               key=lambda t: len(t.member_ids))
    assert full.to_json() == {"members": [[0, 1], [1, 0], [1, 1]]}
    assert [m.dim for m in full.members] != []


def test_torsion_needs_level_one(q2):
    from mcfans.mutation import initial_state
    with pytest.raises(ValueError):
        torsion_class_of_state(initial_state(MutationContext(q2, 2)))


# --- perpendicular categories and spans ---

def test_perp_category(table2):
    S1, S2 = table2.simple(1), table2.simple(2)
    assert [x.dim for x in perp_category([S1], "right")] == [(0, 1)]
    assert [x.dim for x in perp_category([S2], "left")] == [(1, 0)]
    with pytest.raises(ValueError):
        perp_category([S1], "down")
    with pytest.raises(ValueError):
        perp_category([], "left")


def test_span_of(table2):
    P2 = table2.projective(2)
    assert [x.dim for x in span_of([P2])] == [(1, 1)]
    assert span_of([], table=table2) == ()  # empty sequence spans nothing
    with pytest.raises(NotExceptionalSequence):
        span_of([table2.simple(1), table2.simple(2)])


# --- module-theoretic oracles ---

def test_mutation_case_oracle(table2, table3):
    S1, S2, P2 = table2.simple(1), table2.simple(2), table2.projective(2)
    assert mutation_case_oracle(S2, S1, 1) == "extension"
    assert mutation_case_oracle(S1, P2, 1) == "mono"
    assert mutation_case_oracle(table3.simple(2), table3.by_dim[(1, 1, 0)],
                                1) == "epi"
    with pytest.raises(ValueError):
        mutation_case_oracle(S1, S2, 0)
    with pytest.raises(ValueError):
        mutation_case_oracle(S1, S2, 2)


def test_extension_middle(table2, table3):
    S1, S2 = table2.simple(1), table2.simple(2)
    ids = extension_middle(S2, S1)
    assert [table2.reps[i].dim for i in ids] == [(1, 1)]
    ids = extension_middle(table3.simple(2), table3.simple(3))
    assert [table3.reps[i].dim for i in ids] == [(0, 1, 1)]
    with pytest.raises(ValueError):
        extension_middle(S1, S2)  # no nonsplit extension this way round


def test_quotient_summand_dims(table2, table3):
    assert quotient_summand_dims(table2.projective(2)) == {(0, 1)}
    assert quotient_summand_dims(table3.projective(2)) == \
        {(0, 1, 0), (0, 1, 1), (1, 1, 0)}
    e = ((1, -1, -1, -1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    star = indecomposables(ValuedQuiver(4, e, name="star4"))
    with pytest.raises(ValueError):
        quotient_summand_dims(star.by_dim[(2, 1, 1, 1)])


def test_canonical_decomposition(table2):
    assert canonical_decomposition(table2, (1, 1)) == [(1, 1)]
    assert canonical_decomposition(table2, (2, 1)) == [(1, 1), (1, 0)]
    assert canonical_decomposition(table2, (1, 2)) == [(1, 1), (0, 1)]


def test_generic_subdims_match(table3):
    for m in table3:
        assert generic_subdims(m) == submodule_dims(m)


# --- wall restriction under arrow deletion ---

def test_restricted_walls(q3):
    sub = ValuedQuiver(3, ((1, 0, 0), (-1, 1, 0), (0, 0, 1)), name="a2xa1")
    report = restricted_walls(q3, sub)
    assert report.ok and report.missing == []
    assert sorted(d for (d, _f, _w) in report.entries) == \
        [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 0)]
    assert all(wall_match for (_d, _f, wall_match) in report.entries)


def test_restricted_walls_guards(q2, q3):
    with pytest.raises(ValueError):
        restricted_walls(q3, q2)  # rank mismatch
    added = ValuedQuiver(3, ((1, 0, -1), (-1, 1, 0), (0, 0, 1)))
    with pytest.raises(ValueError):
        restricted_walls(q3, added)  # extra arrow not present upstream
    reversed_arrow = ValuedQuiver(3, ((1, -1, 0), (0, 1, 0), (0, -1, 1)))
    with pytest.raises(ValueError):
        restricted_walls(q3, reversed_arrow)
