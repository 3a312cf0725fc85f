"""Discrete properads: gluing axioms, admissible arity sets, endomorphisms."""

import itertools

from properads import properad as prp
from properads.cospan import cyclic_monoid, hom_count_weighted, max_monoid, trivial_monoid
from properads.properad import (AdmissibleSet, Plan, check_axioms, compose_ops,
                                endomorphism_properad, enumerate_admissible,
                                is_admissible, is_monic, plan_results)


def test_endomorphism_properad_axioms():
    for M in [trivial_monoid(), cyclic_monoid(2), cyclic_monoid(3), max_monoid()]:
        P = endomorphism_properad(M, max_arity=2)
        report = check_axioms(P, size_bound=3)
        assert report["ok"], report


def test_endo_ops_are_monoid_elements_per_arity():
    # operations are connected (singleton-apex) weighted cospans, so each
    # stored arity carries exactly the elements of the monoid
    for M in [trivial_monoid(), cyclic_monoid(2), max_monoid()]:
        P = endomorphism_properad(M, max_arity=2)
        for a in range(3):
            for b in range(3):
                got = sum(1 for op in P.all_ops() if P.arity(op) == (a, b))
                assert got == M.size


def test_glue_arity_formula():
    P = endomorphism_properad(trivial_monoid(), max_arity=3)
    ops21 = [op for op in P.all_ops() if P.arity(op) == (2, 1)]
    ops12 = [op for op in P.all_ops() if P.arity(op) == (1, 2)]
    res = compose_ops(P, ops12[0], ops21[0], ((0, 0), (1, 1)))
    assert P.arity(res) == (1, 1)
    res = compose_ops(P, ops12[0], ops21[0], ((0, 0),))
    assert P.arity(res) == (2, 2)


def test_plan_results_is_a_singleton_on_connected_plans():
    P = endomorphism_properad(cyclic_monoid(2), max_arity=2)
    ops = [op for op in P.all_ops() if P.arity(op) == (1, 1)]
    for a, b, c in itertools.product(ops, repeat=3):
        plan = Plan((a, b, c), ((0, 0, 1, 0), (1, 0, 2, 0)))
        out = plan_results(P, plan)
        assert len(out) == 1


def test_admissible_named_cases():
    box = 2
    grid = [(a, b) for a in range(box + 1) for b in range(box + 1)]
    named = [
        [],
        [(0, 0)],
        [(1, 1)],
        [(a, 1) for a in range(box + 1)],
        [(1, b) for b in range(box + 1)],
        grid,
    ]
    for pairs in named:
        ok, witness = is_admissible(pairs, box)
        assert ok, (pairs, witness)


def test_admissible_rejects_with_witness():
    # (2,2) composed with (2,2) along one shared leg needs (3,3)
    ok, witness = is_admissible([(1, 1), (2, 2)], 3)
    assert not ok
    assert tuple(witness["witness"]) == (2, 2, 2, 1)
    # inside the 2-box the forced composite leaves the box, so it passes
    assert is_admissible([(1, 1), (2, 2)], 2)[0]


def test_enumerate_admissible_matches_brute_filter():
    box = 2
    grid = [(a, b) for a in range(box + 1) for b in range(box + 1)]
    brute = set()
    for bits in itertools.product([0, 1], repeat=len(grid)):
        subset = [p for p, keep in zip(grid, bits) if keep]
        if is_admissible(subset, box)[0]:
            brute.add(frozenset(subset))
    enumerated = {s.members for s in enumerate_admissible(box)}
    assert enumerated == brute


def test_monic_detection():
    P = endomorphism_properad(trivial_monoid(), max_arity=2)
    assert not is_monic(P)
