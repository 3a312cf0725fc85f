"""Cospans, chains, projective and weighted variants."""

import itertools

from hypothesis import given, settings, strategies as st

from properads import cospan as csp
from properads.finset import FinMap, FinSet
from properads.cospan import (Chain, Cospan, ProjCospan, Span, canonicalize_cospan,
                              chain_key, chain_of_cospans, compose_cospans,
                              compose_proj, compose_spans, cyclic_monoid,
                              decompose_chain, enumerate_chains, hom_count_weighted,
                              identity_cospan, identity_proj, identity_span,
                              is_connected_chain, max_monoid, monoidal_sum_chains,
                              proj_canonical, proj_partition, span_to_proj,
                              total_colimit_size, trivial_monoid)


def cospans(max_size=3):
    def build(draw):
        a = draw(st.integers(0, max_size))
        b = draw(st.integers(0, max_size))
        x = draw(st.integers(0, max_size))
        if x == 0 and (a or b):
            x = 1
        lt = draw(st.tuples(*[st.integers(0, x - 1) for _ in range(a)]))
        rt = draw(st.tuples(*[st.integers(0, x - 1) for _ in range(b)]))
        return Cospan(FinMap(FinSet(a), FinSet(x), lt),
                      FinMap(FinSet(b), FinSet(x), rt))
    return st.composite(build)()


def cokey(c):
    return csp.canonicalize_cospan(c)[0]


@given(cospans())
@settings(max_examples=80, deadline=None)
def test_cospan_unitality_up_to_iso(c):
    assert cokey(compose_cospans(identity_cospan(c.src), c)) == cokey(c)
    assert cokey(compose_cospans(c, identity_cospan(c.dst))) == cokey(c)


@given(cospans(2), cospans(2), cospans(2))
@settings(max_examples=60, deadline=None)
def test_cospan_associativity_up_to_iso(c1, c2, c3):
    if c1.dst != c2.src or c2.dst != c3.src:
        return
    lhs = compose_cospans(compose_cospans(c1, c2), c3)
    rhs = compose_cospans(c1, compose_cospans(c2, c3))
    assert cokey(lhs) == cokey(rhs)


def test_canonical_form_is_iso_invariant():
    # the same abstract cospan written with the apex relabeled
    c1 = Cospan(FinMap(FinSet(1), FinSet(2), (0,)), FinMap(FinSet(1), FinSet(2), (1,)))
    c2 = Cospan(FinMap(FinSet(1), FinSet(2), (1,)), FinMap(FinSet(1), FinSet(2), (0,)))
    assert cokey(c1) == cokey(c2)
    # and the automorphism count of a discrete 2-point apex with no legs
    d = Cospan(FinMap(FinSet(0), FinSet(2), ()), FinMap(FinSet(0), FinSet(2), ()))
    assert canonicalize_cospan(d)[1] == 2


def test_chain_decomposition_partitions_the_colimit():
    for ch in enumerate_chains(2, 3):
        pieces = decompose_chain(ch)
        assert all(is_connected_chain(p) for p in pieces)
        assert len(pieces) == total_colimit_size(ch)
        if not pieces:
            continue
        back = pieces[0]
        for p in pieces[1:]:
            back = monoidal_sum_chains(back, p)
        assert chain_key(back) == chain_key(ch)


def test_span_composition_is_pullback():
    s1 = Span(FinMap(FinSet(2), FinSet(1), (0, 0)), FinMap(FinSet(2), FinSet(2), (0, 1)))
    s2 = Span(FinMap(FinSet(2), FinSet(2), (0, 0)), FinMap(FinSet(2), FinSet(1), (0, 0)))
    c = compose_spans(s1, s2)
    # middle fibers: right leg of s1 is a bijection, left leg of s2 hits 0
    # twice and 1 never, so the pullback pairs x=0 with y in {0, 1}
    assert c.left.dom.size == 2


def test_proj_composition_tracks_partitions():
    # projective cospans on a fixed boundary are equivalence relations on
    # A + B, and composition is relational composition of partitions
    a = FinSet(2)
    for p1 in _all_proj(2, 2):
        for p2 in _all_proj(2, 2):
            comp = compose_proj(p1, p2)
            part = _compose_partitions(proj_partition(p1), proj_partition(p2), 2, 2, 2)
            assert proj_partition(comp) == part
    assert proj_partition(identity_proj(a)) == frozenset(
        {frozenset({0, 2}), frozenset({1, 3})})


def _all_proj(a, b):
    out = []
    seen = set()
    for x in range(1, a + b + 1):
        for lt in itertools.product(range(x), repeat=a):
            for rt in itertools.product(range(x), repeat=b):
                if set(lt) | set(rt) != set(range(x)):
                    continue
                p = proj_canonical(Cospan(FinMap(FinSet(a), FinSet(x), lt),
                                          FinMap(FinSet(b), FinSet(x), rt)))
                key = (p.underlying.left.table, p.underlying.right.table,
                       p.underlying.apex.size)
                if key not in seen:
                    seen.add(key)
                    out.append(p)
    if a == 0 and b == 0:
        out.append(identity_proj(FinSet(0)))
    return out


def _compose_partitions(part1, part2, a, b, c):
    """Relational composite of a partition of A+B and one of B+C.

    Elements: A as 0..a-1, B as a.., C appended after; the composite
    partition of A+C glues through shared B classes.
    """
    from properads.finset import UnionFind
    uf = UnionFind(a + b + c)
    for blk in part1:
        base = min(blk)
        for e in blk:
            uf.union(base, e)
    for blk in part2:
        lifted = [e + a for e in blk]
        base = min(lifted)
        for e in lifted:
            uf.union(base, e)
    _, table = uf.quotient()
    keep = list(range(a)) + list(range(a + b, a + b + c))
    blocks = {}
    for pos, e in enumerate(keep):
        blocks.setdefault(table[e], []).append(pos)
    return frozenset(frozenset(blk) for blk in blocks.values())


def test_span_to_proj_on_the_empty_middle():
    s1 = Span(FinMap(FinSet(0), FinSet(0), ()), FinMap(FinSet(0), FinSet(1), ()))
    s2 = Span(FinMap(FinSet(0), FinSet(1), ()), FinMap(FinSet(0), FinSet(0), ()))
    lhs = span_to_proj(compose_spans(s1, s2))
    rhs = compose_proj(span_to_proj(s1), span_to_proj(s2))
    ident = identity_proj(FinSet(0))
    assert lhs.underlying == ident.underlying == rhs.underlying


def test_weighted_hom_counts_are_bell_polynomial_values():
    # frozen fixtures computed by the independent partition-sum oracle
    frozen = {1: [1, 1, 2, 5, 15], 2: [1, 2, 6, 22, 94], 3: [1, 3, 12, 57, 309]}
    monoids = {1: trivial_monoid(), 2: cyclic_monoid(2), 3: cyclic_monoid(3)}
    for m, row in frozen.items():
        M = monoids[m]
        for total, want in enumerate(row):
            counts = [hom_count_weighted(a, total - a, M) for a in range(total + 1)]
            assert counts == [want] * (total + 1)


def test_max_monoid_table():
    M = max_monoid()
    assert M.add(0, 1) == 1 and M.add(1, 1) == 1 and M.add(0, 0) == 0
