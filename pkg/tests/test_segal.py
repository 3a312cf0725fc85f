"""Segal checks, free properads on graphs, the envelope, and span nerve data."""

from properads import segal
from properads.cospan import cyclic_monoid, trivial_monoid
from properads.properad import check_axioms, endomorphism_properad, is_monic
from properads.segal import (check_pre_properad, check_segal, envelope_nerve,
                             free_properad, induced_value_fn, is_complete,
                             span_nerve_data)


def test_free_properad_tree_counts():
    F = free_properad([("g", (0, 0), (0,))], num_colors=1, max_vertices=2)
    by_arity = {}
    for op in F.all_ops():
        by_arity.setdefault(F.arity(op), 0)
        by_arity[F.arity(op)] += 1
    # identity edge, the corolla, and the three leg-labeled 2-vertex trees
    assert by_arity[(1, 1)] == 1
    assert by_arity[(2, 1)] == 1
    assert by_arity[(3, 1)] == 3
    assert is_monic(F)


def test_free_properad_axioms_hold():
    F = free_properad([("g", (0, 0), (0,))], num_colors=1, max_vertices=3)
    report = check_axioms(F, size_bound=3)
    assert report["ok"], report


def test_free_properad_two_generators_arities():
    G = free_properad([("u", (0,), (0, 0)), ("d", (0, 0), (0,))],
                      num_colors=1, max_vertices=2)
    arities = {G.arity(op) for op in G.all_ops() if G.dag_reps[op].num_vertices == 2}
    assert (1, 1) in arities and (2, 2) in arities
    assert not is_monic(G)


def test_induced_presheaf_satisfies_segal():
    P = endomorphism_properad(cyclic_monoid(2), max_arity=3)
    report = check_segal(induced_value_fn(P), 2, 3)
    assert report["ok"], report


def test_mutated_presheaf_fails_segal():
    import properads.levelgraph as lg
    from properads.cospan import chain_key
    P = endomorphism_properad(trivial_monoid(), max_arity=3)
    value = induced_value_fn(P)
    target = {}

    def mutated(x):
        out = list(value(x))
        if lg.is_connected(x) and x.height == 1 and out and not target:
            target["key"] = chain_key(x.chain)
        if target and chain_key(x.chain) == target["key"]:
            out.append(out[0])
        return out

    assert not check_segal(mutated, 2, 3)["ok"]


def test_envelope_is_a_pre_properad():
    P = endomorphism_properad(cyclic_monoid(2), max_arity=3)
    env = envelope_nerve(P, 2, 4)
    report = check_pre_properad(env)
    assert report["ok"], report


def test_envelope_generators_are_colors_and_corollas():
    P = endomorphism_properad(trivial_monoid(), max_arity=3)
    env = envelope_nerve(P, 2, 4)
    assert len(env.gens[0]) == 1
    # corollas sized k + 1 + l <= 4, i.e. the ten pairs with k + l <= 3
    assert len(env.gens[1]) == 10


def test_span_nerve_fails_pre_properad_with_named_witness():
    data = span_nerve_data(4, surjective_only=False)
    report = check_pre_properad(data)
    assert not report["ok"]
    assert report["violation"] == "d1_not_free"
    from properads.verify import witness_span_pair_key
    assert witness_span_pair_key() in report["witnesses"]


def test_surjective_span_nerve_passes():
    data = span_nerve_data(4, surjective_only=True)
    report = check_pre_properad(data)
    assert report["ok"], report


def test_completeness_detects_invertibles():
    assert is_complete(endomorphism_properad(trivial_monoid(), max_arity=2))
    # the nontrivial element of the cyclic group of order 2 is its own inverse
    assert not is_complete(endomorphism_properad(cyclic_monoid(2), max_arity=2))
    assert is_complete(free_properad([("g", (0, 0), (0,))], max_vertices=2))
