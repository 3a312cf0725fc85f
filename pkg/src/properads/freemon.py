"""Free commutative monoids on finite generator sets.

Elements are multisets (vectors of naturals), homomorphisms are matrices of
naturals stored column-major: column j is the image of source generator j.
The classification of homomorphisms mirrors the free/transfer dichotomy:
a hom is *free* when every generator maps to a single generator, and a
*transfer* when it is the fiber-sum map along a function of finite sets.
At this discrete level the contrafibered maps are exactly the transfers,
and every hom factors as free-after-transfer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .finset import FinMap


@dataclass(frozen=True, order=True)
class Multiset:
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("negative multiplicity")

    @property
    def generator_count(self) -> int:
        return len(self.multiplicities)

    def degree(self) -> int:
        return sum(self.multiplicities)

    def __add__(self, other: "Multiset") -> "Multiset":
        return Multiset(tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities, strict=True)))

    def scale(self, k: int) -> "Multiset":
        return Multiset(tuple(k * m for m in self.multiplicities))

    def is_zero(self) -> bool:
        return all(m == 0 for m in self.multiplicities)


def zero(gens: int) -> Multiset:
    return Multiset((0,) * gens)


def basis(gens: int, j: int) -> Multiset:
    return Multiset(tuple(1 if i == j else 0 for i in range(gens)))


def multisets_of_degree(gens: int, degree: int):
    """All multisets over `gens` generators with the exact total degree."""
    if gens == 0:
        if degree == 0:
            yield Multiset(())
        return
    for first in range(degree + 1):
        for rest in multisets_of_degree(gens - 1, degree - first):
            yield Multiset((first,) + rest.multiplicities)


def multisets_up_to_degree(gens: int, bound: int):
    for d in range(bound + 1):
        yield from multisets_of_degree(gens, d)


@dataclass(frozen=True)
class MonHom:
    src_gens: int
    dst_gens: int
    matrix: tuple[Multiset, ...]  # one column per source generator

    def __post_init__(self):
        if len(self.matrix) != self.src_gens:
            raise ValueError("matrix must have one column per source generator")
        for col in self.matrix:
            if col.generator_count != self.dst_gens:
                raise ValueError("column length must match destination generators")

    def apply(self, m: Multiset) -> Multiset:
        out = [0] * self.dst_gens
        for j, mult in enumerate(m.multiplicities):
            if mult:
                for i, v in enumerate(self.matrix[j].multiplicities):
                    out[i] += mult * v
        return Multiset(tuple(out))

    def to_json(self):
        return {
            "src": self.src_gens,
            "dst": self.dst_gens,
            "matrix": [list(col.multiplicities) for col in self.matrix],
        }

    @staticmethod
    def from_json(data) -> "MonHom":
        return MonHom(int(data["src"]), int(data["dst"]),
                      tuple(Multiset(tuple(int(v) for v in col)) for col in data["matrix"]))


def hom_identity(gens: int) -> MonHom:
    return MonHom(gens, gens, tuple(basis(gens, j) for j in range(gens)))


def hom_compose(f: MonHom, g: MonHom) -> MonHom:
    """g after f."""
    if f.dst_gens != g.src_gens:
        raise ValueError("hom_compose: generator counts do not match")
    return MonHom(f.src_gens, g.dst_gens, tuple(g.apply(col) for col in f.matrix))


def free_hom(f: FinMap) -> MonHom:
    """The hom induced by a map of generator sets."""
    return MonHom(f.dom.size, f.cod.size, tuple(basis(f.cod.size, f.table[j]) for j in f.dom))


def transfer_hom(p: FinMap) -> MonHom:
    """Transfer along p: Y -> X, sending x to the sum of its p-fiber."""
    cols = []
    for x in p.cod:
        cols.append(Multiset(tuple(1 if p.table[y] == x else 0 for y in p.dom)))
    return MonHom(p.cod.size, p.dom.size, tuple(cols))


class HomTag(Enum):
    FREE = "free"
    TRANSFER = "transfer"
    # Reserved: at the matrix level the contrafibered maps coincide with
    # the transfers, so classify_hom never emits this tag.
    CONTRAFIBERED_ONLY = "contrafibered_only"
    MIXED = "mixed"


@dataclass(frozen=True)
class HomClass:
    tag: HomTag
    factorization: tuple[MonHom, MonHom] | None = None  # (transfer, free) for MIXED


def is_free(h: MonHom) -> bool:
    return all(col.degree() == 1 for col in h.matrix)


def is_transfer(h: MonHom) -> bool:
    support: set[int] = set()
    for col in h.matrix:
        for i, v in enumerate(col.multiplicities):
            if v not in (0, 1):
                return False
            if v == 1:
                if i in support:
                    return False
                support.add(i)
    return True


def classify_hom(h: MonHom) -> HomClass:
    if is_free(h):
        return HomClass(HomTag.FREE)
    if is_transfer(h):
        return HomClass(HomTag.TRANSFER)
    return HomClass(HomTag.MIXED, factorization=ctf_eqf_factorize(h))


def ctf_eqf_factorize(h: MonHom) -> tuple[MonHom, MonHom]:
    """Factor h = free o transfer through a canonical middle.

    The middle has one generator per unit of each matrix entry, ordered by
    (source generator, target generator, copy index).
    """
    middle = [(j, i)
              for j in range(h.src_gens)
              for i in range(h.dst_gens)
              for _ in range(h.matrix[j].multiplicities[i])]
    mid_gens = len(middle)
    t_cols = []
    for j in range(h.src_gens):
        t_cols.append(Multiset(tuple(1 if middle[k][0] == j else 0 for k in range(mid_gens))))
    t = MonHom(h.src_gens, mid_gens, tuple(t_cols))
    f = MonHom(mid_gens, h.dst_gens, tuple(basis(h.dst_gens, i) for _, i in middle))
    return t, f


@dataclass(frozen=True)
class Submonoid:
    ambient_gens: int
    generators: tuple[Multiset, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.generator_count != self.ambient_gens:
                raise ValueError("generator lives in the wrong ambient monoid")
            if g.is_zero():
                raise ValueError("zero vector is not allowed as a listed generator")

    def contains(self, m: Multiset) -> bool:
        """Membership in the generated submonoid, by bounded search."""
        return self._member(m.multiplicities, {})

    def _member(self, vec: tuple[int, ...], memo: dict) -> bool:
        if all(v == 0 for v in vec):
            return True
        if vec in memo:
            return memo[vec]
        memo[vec] = False  # guards against cycles (none occur: degree strictly drops)
        for g in self.generators:
            rest = tuple(v - w for v, w in zip(vec, g.multiplicities))
            if all(r >= 0 for r in rest) and self._member(rest, memo):
                memo[vec] = True
                break
        return memo[vec]


def is_closed_under_factoring(s: Submonoid, degree_bound: int = 6):
    """Check that a + b in <s> forces a, b in <s>, for degrees up to the bound.

    Returns (True, None) or (False, (a, b)) with the lexicographically least
    witness.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    candidates = [m for m in multisets_up_to_degree(s.ambient_gens, degree_bound)
                  if not m.is_zero()]
    for a in candidates:
        for b in candidates:
            if s.contains(a + b) and not (s.contains(a) and s.contains(b)):
                return False, (a, b)
    return True, None


def is_free_submonoid(s: Submonoid, degree_bound: int = 6):
    """Check the listed generators freely generate <s>.

    The generators must be pairwise distinct indecomposables of <s>, and no
    two distinct coefficient vectors of coefficient sum <= degree_bound may
    give the same value.  Returns (True, None) or (False, witness) where the
    witness is a pair of distinct coefficient vectors with equal value.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    gens = s.generators
    if len(set(gens)) != len(gens):
        dup = next(g for i, g in enumerate(gens) if g in gens[:i])
        return False, "duplicate generator " + repr(dup)
    for g in gens:
        for other in gens:
            rest = tuple(v - w for v, w in zip(g.multiplicities, other.multiplicities))
            if other != g and all(r >= 0 for r in rest) and s.contains(Multiset(rest)):
                return False, f"generator {g} decomposes through {other}"
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for total in range(degree_bound + 1):
        for coeffs in _compositions(len(gens), total):
            value = zero(s.ambient_gens)
            for c, g in zip(coeffs, gens):
                value = value + g.scale(c)
            key = value.multiplicities
            if key in seen and seen[key] != coeffs:
                return False, (seen[key], coeffs)
            seen.setdefault(key, coeffs)
    return True, None


def _compositions(parts: int, total: int):
    """All tuples of `parts` naturals summing to `total`, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(parts - 1, total - first):
            yield (first,) + rest


def groupoid_cardinality(m: Multiset) -> Fraction:
    """1 / prod(m_j!), the homotopy cardinality of the component of m."""
    denom = 1
    for mult in m.multiplicities:
        denom *= factorial(mult)
    return Fraction(1, denom)


def equifibered_by_cardinality(h: MonHom, degree_bound: int = 4) -> bool:
    """Brute-force fiberwise check that h is equifibered.

    Uses groupoid-cardinality-weighted fiber sizes: the fiber over v has
    cardinality sum over h(m) = v of |Aut v| / |Aut m|, and h is equifibered
    precisely when fib(a) * fib(b) = fib(a+b) for all target values within
    the degree bound.  Columns mapping a generator to zero make the fiber
    over zero infinite, which is never equifibered for a nonempty source.
    """
    if any(col.is_zero() for col in h.matrix):
        return False
    bound = degree_bound
    fb = factorial(bound)
    scale = fb ** h.src_gens
    # integer-scaled fiber weights: weight(v) = scale * fib(v), so the
    # multiplicativity test fib(a) * fib(b) = fib(a+b) becomes
    # weight(a) * weight(b) = scale * weight(a+b) in exact integers
    weight: dict[tuple[int, ...], int] = {}
    for m in multisets_up_to_degree(h.src_gens, bound):
        v = h.apply(m)
        if v.degree() <= bound:
            t = 1
            for k in m.multiplicities:
                t *= fb // factorial(k)
            weight[v.multiplicities] = weight.get(v.multiplicities, 0) + t
    for key in weight:
        c = 1
        for k in key:
            c *= factorial(k)
        weight[key] *= c
    values = []
    for d in range(bound + 1):
        for v in multisets_of_degree(h.dst_gens, d):
            values.append((d, v.multiplicities, weight.get(v.multiplicities, 0)))
    for da, am, wa in values:
        for db, bm, wb in values:
            if da + db > bound:
                continue
            ab = tuple(x + y for x, y in zip(am, bm))
            if wa * wb != scale * weight.get(ab, 0):
                return False
    return True


def all_homs(src_gens: int, dst_gens: int, max_entry: int):
    """Every MonHom with the given shape and entries bounded by max_entry."""
    columns = [Multiset(c) for c in itertools.product(range(max_entry + 1), repeat=dst_gens)]
    for cols in itertools.product(columns, repeat=src_gens):
        yield MonHom(src_gens, dst_gens, cols)
