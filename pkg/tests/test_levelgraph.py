"""Level objects, their completions, morphisms, and graph realizations."""

import itertools

from properads import cospan as csp
from properads import levelgraph as lg
from properads.levelgraph import (LevelObject, active_collapse, all_level_morphisms,
                                  completion, compose_level, dag_key, dag_to_dot,
                                  elementary_subgraphs, factorize_level,
                                  forget_leveling, identity_level_morphism,
                                  is_active, is_connected, is_elementary, is_inert,
                                  level_object, realize)


def figure_object():
    return level_object(
        edge_sizes=(3, 4, 4), vertex_sizes=(2, 3),
        lefts=((0, 0, 0), (0, 2, 0, 2)),
        rights=((0, 0, 1, 1), (0, 1, 2, 2)))


def test_figure_realization_counts():
    g = realize(figure_object())
    assert g.num_edges == 11
    assert g.num_vertices == 5
    assert len(elementary_subgraphs(g)) == 16


def test_completion_interval_values_via_pushouts():
    x = figure_object()
    c = completion(x)
    # singleton intervals are literally the edge levels
    for i, size in enumerate((3, 4, 4)):
        assert c.size(i, i) == size
    # basic intervals are literally the vertex levels
    assert c.size(0, 1) == 2 and c.size(1, 2) == 3
    # the total value counts connected components of the realization
    assert c.size(0, 2) == 2
    assert not is_connected(x)


def test_elementary_objects_are_edges_and_corollas():
    edge = level_object((1,), (), (), ())
    assert is_elementary(edge) and edge.height == 0
    corolla = level_object((2, 1), (1,), ((0, 0),), ((0,),))
    assert is_elementary(corolla) and corolla.height == 1
    two_edges = level_object((2,), (), (), ())
    assert not is_elementary(two_edges)


def test_active_collapse_merges_levels():
    x = figure_object()
    y = active_collapse((0, 2), x)
    assert y.height == 1
    # vertices of the collapsed level are the components of the whole graph
    assert y.vertex_level(0).size == 2
    assert y.edge_level(0).size == 3 and y.edge_level(1).size == 4


def test_factorization_on_all_small_morphisms():
    objs = [LevelObject(ch) for ch in csp.enumerate_chains(1, 3)]
    seen = 0
    for src in objs:
        for dst in objs:
            for f in all_level_morphisms(src, dst):
                seen += 1
                inert, active = factorize_level(f)
                assert is_inert(inert) and is_active(active)
                assert compose_level(active, inert) == f
    assert seen > 0


def test_composites_pass_full_validation():
    # compose_level builds its output through the trusted fast path, so
    # check against the validating constructor explicitly
    from properads.levelgraph import LevelMorphism
    objs = [LevelObject(ch) for ch in csp.enumerate_chains(1, 2)]
    for src in objs:
        for mid in objs:
            for dst in objs:
                for f in all_level_morphisms(src, mid):
                    for g in all_level_morphisms(mid, dst):
                        c = compose_level(f, g)
                        revalidated = LevelMorphism(c.lam, c.src, c.dst, c.alpha)
                        assert revalidated == c


def test_identity_is_inert_and_active():
    x = figure_object()
    f = identity_level_morphism(x)
    assert is_inert(f) and is_active(f)
    i, a = factorize_level(f)
    assert compose_level(a, i) == f


def test_releveling_invariance_of_the_underlying_dag():
    # one arrow plus an isolated vertex, with the extra vertex placed at
    # either level: same abstract graph, different levelings
    lower = level_object((0, 1, 0), (2, 1), ((), (0,)), ((0,), ()))
    upper = level_object((0, 1, 0), (1, 2), ((), (0,)), ((0,), ()))
    assert forget_leveling(lower) == forget_leveling(upper)
    assert forget_leveling(lower) != forget_leveling(figure_object())


def test_dag_key_separates_leg_orders_when_pinned():
    from properads.segal import _corolla_dag
    c = _corolla_dag("g", (0, 1), (0,))
    swapped = _corolla_dag("g", (1, 0), (0,))
    assert dag_key(c) != dag_key(swapped)


def test_dot_output_mentions_every_vertex():
    dot = dag_to_dot(realize(figure_object()))
    assert dot.startswith("digraph")
    assert dot.count("->") == 11
