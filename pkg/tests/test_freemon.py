"""Free commutative monoids: classification, factorization, freeness audits."""

import itertools
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from properads import freemon
from properads.finset import FinMap, FinSet
from properads.freemon import (HomTag, MonHom, Multiset, Submonoid, classify_hom,
                               ctf_eqf_factorize, equifibered_by_cardinality,
                               free_hom, groupoid_cardinality, hom_compose,
                               is_free, is_free_submonoid, is_transfer,
                               multisets_of_degree, multisets_up_to_degree,
                               transfer_hom)


def homs(max_gens=3, max_entry=2):
    def build(draw):
        src = draw(st.integers(0, max_gens))
        dst = draw(st.integers(0, max_gens))
        cols = tuple(
            Multiset(draw(st.tuples(*[st.integers(0, max_entry) for _ in range(dst)])))
            for _ in range(src))
        return MonHom(src, dst, cols)
    return st.composite(build)()


def test_multiset_counts_are_binomials():
    # multisets of degree d over n generators: C(d + n - 1, d)
    import math
    for n in range(1, 4):
        for d in range(5):
            got = sum(1 for _ in multisets_of_degree(n, d))
            assert got == math.comb(d + n - 1, d)


def test_groupoid_cardinality_is_inverse_automorphisms():
    assert groupoid_cardinality(Multiset((3, 1))) == Fraction(1, 6)
    assert groupoid_cardinality(Multiset(())) == 1


@given(homs(), homs())
@settings(max_examples=60)
def test_compose_matches_elementwise_application(f, g):
    if f.dst_gens != g.src_gens:
        return
    h = hom_compose(f, g)
    for m in multisets_up_to_degree(f.src_gens, 3):
        assert h.apply(m) == g.apply(f.apply(m))


def test_free_and_transfer_from_tables():
    q = free_hom(FinMap(FinSet(2), FinSet(3), (2, 0)))
    assert is_free(q) and q.apply(Multiset((1, 1))) == Multiset((1, 0, 1))
    t = transfer_hom(FinMap(FinSet(3), FinSet(2), (0, 0, 1)))
    assert is_transfer(t)
    # the transfer sends each source generator to the sum of its fiber
    assert t.apply(Multiset((1, 0))) == Multiset((1, 1, 0))
    assert t.apply(Multiset((0, 1))) == Multiset((0, 0, 1))


@given(homs())
@settings(max_examples=80)
def test_factorization_recomposes_with_correct_classes(h):
    t, f = ctf_eqf_factorize(h)
    assert is_transfer(t) and is_free(f)
    assert hom_compose(t, f) == h


@given(homs())
@settings(max_examples=60, deadline=None)
def test_classification_matches_cardinality_oracle(h):
    col_max = max((c.degree() for c in h.matrix), default=0)
    oracle = equifibered_by_cardinality(h, max(4, col_max))
    assert (classify_hom(h).tag == HomTag.FREE) == oracle


def test_classification_tags_on_named_maps():
    fold = transfer_hom(FinMap(FinSet(2), FinSet(1), (0, 0)))
    assert classify_hom(fold).tag == HomTag.TRANSFER
    squarish = MonHom(1, 2, (Multiset((2, 1)),))
    cls = classify_hom(squarish)
    assert cls.tag == HomTag.MIXED and cls.factorization is not None


def test_even_sum_submonoid_is_not_free():
    evens = Submonoid(2, (Multiset((1, 1)), Multiset((2, 0)), Multiset((0, 2))))
    ok, witness = is_free_submonoid(evens)
    assert not ok
    # 2 * (1,1) = (2,0) + (0,2): one element, two distinct factorizations
    assert set(witness) == {(0, 1, 1), (2, 0, 0)}


def test_coordinate_submonoid_is_free():
    axes = Submonoid(2, (Multiset((1, 0)), Multiset((0, 2))))
    ok, witness = is_free_submonoid(axes)
    assert ok, witness


def brute_fiber(h, v, bound):
    total = Fraction(0)
    for m in multisets_up_to_degree(h.src_gens, bound):
        if h.apply(m) == v:
            total += groupoid_cardinality(m) / groupoid_cardinality(v)
    return total


def test_integer_oracle_agrees_with_fraction_arithmetic():
    # spot check the scaled-integer fiber test against direct Fractions
    for cols in itertools.product(list(multisets_up_to_degree(2, 2)), repeat=2):
        h = MonHom(2, 2, cols)
        if any(c.is_zero() for c in h.matrix):
            continue
        ok = True
        vals = [v for d in range(4) for v in multisets_of_degree(2, d)]
        for a in vals:
            for b in vals:
                if a.degree() + b.degree() > 3:
                    continue
                if brute_fiber(h, a, 3) * brute_fiber(h, b, 3) != brute_fiber(h, a + b, 3):
                    ok = False
                    break
            if not ok:
                break
        assert equifibered_by_cardinality(h, 3) == ok
