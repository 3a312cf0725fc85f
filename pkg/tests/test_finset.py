"""Colimit/limit primitives against brute-force oracles."""

import itertools

from hypothesis import given, settings, strategies as st

from properads import finset
from properads.finset import (FinMap, FinSet, PointedMap, UnionFind, compose,
                              inert_active_factorize, pointed_compose, pullback,
                              pushout)


def finmaps(max_size=4):
    def build(draw):
        dom = draw(st.integers(0, max_size))
        cod = draw(st.integers(1, max_size))
        table = draw(st.tuples(*[st.integers(0, cod - 1) for _ in range(dom)]))
        return FinMap(FinSet(dom), FinSet(cod), table)
    return st.composite(build)()


def pointed_maps(max_size=4):
    def build(draw):
        dom = draw(st.integers(1, max_size))
        cod = draw(st.integers(1, max_size))
        table = (0,) + draw(st.tuples(*[st.integers(0, cod - 1) for _ in range(dom - 1)]))
        return PointedMap(FinMap(FinSet(dom), FinSet(cod), table))
    return st.composite(build)()


def naive_components(n, edges):
    """Connected-component count and labels by repeated sweeping."""
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for i, j in edges:
            lo = min(label[i], label[j])
            if label[i] != lo or label[j] != lo:
                label[i] = label[j] = lo
                changed = True
    roots = sorted(set(label))
    return len(roots), [roots.index(l) for l in label]


@given(st.integers(0, 8), st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7))))
def test_union_find_matches_naive(n, edges):
    edges = [(i % max(n, 1), j % max(n, 1)) for i, j in edges] if n else []
    uf = UnionFind(n)
    for i, j in edges:
        uf.union(i, j)
    assert uf.quotient() == naive_components(n, edges)


def spans(max_size=4):
    def build(draw):
        b = draw(st.integers(0, max_size))
        xs = draw(st.integers(1, max_size))
        ys = draw(st.integers(1, max_size))
        ft = draw(st.tuples(*[st.integers(0, xs - 1) for _ in range(b)]))
        gt = draw(st.tuples(*[st.integers(0, ys - 1) for _ in range(b)]))
        return (FinMap(FinSet(b), FinSet(xs), ft), FinMap(FinSet(b), FinSet(ys), gt))
    return st.composite(build)()


@given(spans())
@settings(max_examples=60, deadline=None)
def test_pushout_universal_property(fg):
    f, g = fg
    p, left, right = pushout(f, g)
    # commutes
    assert compose(f, left) == compose(g, right)
    # jointly surjective, so the quotient is minimal
    assert set(left.table) | set(right.table) == set(range(p.size))
    # couniversal against every small cocone
    for q in range(1, 3):
        for lt in itertools.product(range(q), repeat=f.cod.size):
            l2 = FinMap(f.cod, FinSet(q), lt)
            for rt in itertools.product(range(q), repeat=g.cod.size):
                r2 = FinMap(g.cod, FinSet(q), rt)
                if compose(f, l2) != compose(g, r2):
                    continue
                mediators = [
                    m for mt in itertools.product(range(q), repeat=p.size)
                    for m in [FinMap(p, FinSet(q), mt)]
                    if compose(left, m) == l2 and compose(right, m) == r2]
                assert len(mediators) == 1


def test_pushout_of_injections_glues_boundary():
    b = FinSet(1)
    f = FinMap(b, FinSet(2), (0,))
    g = FinMap(b, FinSet(2), (1,))
    p, left, right = pushout(f, g)
    assert p.size == 3
    assert left.table == (0, 1)
    assert right.table == (2, 0)


@given(finmaps(), finmaps())
@settings(max_examples=60)
def test_pullback_is_agreeing_pairs(f, g):
    if f.cod != g.cod:
        return
    q, to_x, to_y = pullback(f, g)
    pairs = {(x, y) for x in f.dom for y in g.dom if f.table[x] == g.table[y]}
    assert {(to_x.table[i], to_y.table[i]) for i in q} == pairs
    assert q.size == len(pairs)


@given(pointed_maps())
def test_pointed_factorization(p):
    inert, active = inert_active_factorize(p)
    assert inert.is_inert() and active.is_active()
    assert pointed_compose(inert, active) == p


@given(pointed_maps(), pointed_maps())
def test_pointed_classes_compose(p, q):
    if p.cod != q.dom:
        return
    c = pointed_compose(p, q)
    if p.is_active() and q.is_active():
        assert c.is_active()


def test_compose_applies_first_argument_first():
    f = FinMap(FinSet(2), FinSet(2), (1, 0))
    g = FinMap(FinSet(2), FinSet(3), (2, 0))
    assert compose(f, g).table == (0, 2)
