"""The cospan category of finite sets and its relatives.

Morphisms are cospans A -> X <- B composed by pushout over the shared
boundary; the monoidal structure is disjoint union.  Iso classes are
realized by brute-force canonical forms (lexicographically least relabeling)
whose stabilizer count doubles as the automorphism order.  Chains are
zigzags of composable cospans, i.e. objects of the nerve; their connected
decomposition is what makes the nerve level-wise free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import finset
from .finset import FinMap, FinSet, FinSetError, UnionFind

CANONICAL_SIZE_BOUND = 8


class BoundExceeded(ValueError):
    """A set was larger than the configured brute-force bound."""


@dataclass(frozen=True)
class Cospan:
    left: FinMap   # A -> X
    right: FinMap  # B -> X

    def __post_init__(self):
        if self.left.cod != self.right.cod:
            raise FinSetError("cospan legs must share their codomain")

    @property
    def src(self) -> FinSet:
        return self.left.dom

    @property
    def dst(self) -> FinSet:
        return self.right.dom

    @property
    def apex(self) -> FinSet:
        return self.left.cod

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    @staticmethod
    def from_json(data) -> "Cospan":
        return Cospan(FinMap.from_json(data["left"]), FinMap.from_json(data["right"]))


@dataclass(frozen=True)
class Span:
    left: FinMap   # X -> A
    right: FinMap  # X -> B

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise FinSetError("span legs must share their domain")

    @property
    def src(self) -> FinSet:
        return self.left.cod

    @property
    def dst(self) -> FinSet:
        return self.right.cod

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    @staticmethod
    def from_json(data) -> "Span":
        return Span(FinMap.from_json(data["left"]), FinMap.from_json(data["right"]))


def identity_cospan(a: FinSet) -> Cospan:
    return Cospan(finset.identity(a), finset.identity(a))


def identity_span(a: FinSet) -> Span:
    return Span(finset.identity(a), finset.identity(a))


def compose_cospans(c1: Cospan, c2: Cospan) -> Cospan:
    """(A -> X <- B) then (B -> Y <- C), composed by pushout over B."""
    if c1.dst != c2.src:
        raise FinSetError("compose_cospans: boundary mismatch")
    _, px, py = finset.pushout(c1.right, c2.left)
    return Cospan(finset.compose(c1.left, px), finset.compose(c2.right, py))


def compose_spans(s1: Span, s2: Span) -> Span:
    if s1.dst != s2.src:
        raise FinSetError("compose_spans: boundary mismatch")
    _, qx, qy = finset.pullback(s1.right, s2.left)
    return Span(finset.compose(qx, s1.left), finset.compose(qy, s2.right))


def monoidal_sum_cospans(u: Cospan, v: Cospan) -> Cospan:
    a = FinSet(u.src.size + v.src.size)
    b = FinSet(u.dst.size + v.dst.size)
    x = FinSet(u.apex.size + v.apex.size)
    left = FinMap(a, x, u.left.table + tuple(t + u.apex.size for t in v.left.table))
    right = FinMap(b, x, u.right.table + tuple(t + u.apex.size for t in v.right.table))
    return Cospan(left, right)


def monoidal_sum_spans(u: Span, v: Span) -> Span:
    x = FinSet(u.left.dom.size + v.left.dom.size)
    a = FinSet(u.src.size + v.src.size)
    b = FinSet(u.dst.size + v.dst.size)
    left = FinMap(x, a, u.left.table + tuple(t + u.src.size for t in v.left.table))
    right = FinMap(x, b, u.right.table + tuple(t + u.dst.size for t in v.right.table))
    return Span(left, right)


def _relabel_tables(sets, maps, perms):
    """Relabel each map table under the permutations of its dom/cod sets.

    `maps` lists (dom_index, cod_index, table); perms[i] permutes set i
    (perms[i][old] = new).  Returns the tuple of relabeled tables.
    """
    out = []
    for dom_i, cod_i, table in maps:
        pd, pc = perms[dom_i], perms[cod_i]
        new = [0] * len(table)
        for old_pos, value in enumerate(table):
            new[pd[old_pos]] = pc[value]
        out.append(tuple(new))
    return tuple(out)


def _canonicalize_diagram(sizes, maps, bound=CANONICAL_SIZE_BOUND):
    """Least relabeling of a diagram of finite sets over all per-set perms.

    Returns (canonical tables, aut_order).  `maps` is a list of
    (dom_index, cod_index, table).
    """
    for s in sizes:
        if s > bound:
            raise BoundExceeded(f"set of size {s} exceeds canonicalization bound {bound}")
    best = None
    hits = 0
    for perms in itertools.product(*(itertools.permutations(range(s)) for s in sizes)):
        key = _relabel_tables(sizes, maps, perms)
        if best is None or key < best:
            best, hits = key, 1
        elif key == best:
            hits += 1
    return best, hits


def canonicalize_cospan(c: Cospan, bound=CANONICAL_SIZE_BOUND) -> tuple[Cospan, int]:
    sizes = (c.src.size, c.dst.size, c.apex.size)
    tables, aut = _canonicalize_diagram(sizes, [(0, 2, c.left.table), (1, 2, c.right.table)], bound)
    canon = Cospan(FinMap(c.src, c.apex, tables[0]), FinMap(c.dst, c.apex, tables[1]))
    return canon, aut


def canonicalize_span(s: Span, bound=CANONICAL_SIZE_BOUND) -> tuple[Span, int]:
    x = s.left.dom
    sizes = (x.size, s.src.size, s.dst.size)
    tables, aut = _canonicalize_diagram(sizes, [(0, 1, s.left.table), (0, 2, s.right.table)], bound)
    canon = Span(FinMap(x, s.src, tables[0]), FinMap(x, s.dst, tables[1]))
    return canon, aut


@dataclass(frozen=True)
class Chain:
    """A zigzag A_0 -> M_1 <- A_1 -> ... <- A_n of n composable cospans."""

    boundaries: tuple[FinSet, ...]  # A_0 .. A_n
    lefts: tuple[FinMap, ...]       # A_{i-1} -> M_i
    rights: tuple[FinMap, ...]      # A_i -> M_i

    def __post_init__(self):
        n = len(self.lefts)
        if len(self.rights) != n or len(self.boundaries) != n + 1:
            raise FinSetError("chain arity mismatch")
        for i in range(n):
            if self.lefts[i].dom != self.boundaries[i]:
                raise FinSetError(f"chain left map {i} has wrong domain")
            if self.rights[i].dom != self.boundaries[i + 1]:
                raise FinSetError(f"chain right map {i} has wrong domain")
            if self.lefts[i].cod != self.rights[i].cod:
                raise FinSetError(f"chain cospan {i} legs disagree on apex")

    @property
    def height(self) -> int:
        return len(self.lefts)

    @property
    def apexes(self) -> tuple[FinSet, ...]:
        return tuple(m.cod for m in self.lefts)

    def cospan(self, i: int) -> Cospan:
        """The i-th cospan (1-indexed levels, i in 0..height-1)."""
        return Cospan(self.lefts[i], self.rights[i])

    def total_size(self) -> int:
        return sum(s.size for s in self.boundaries) + sum(s.size for s in self.apexes)

    def to_json(self):
        return {
            "boundaries": [s.size for s in self.boundaries],
            "lefts": [m.to_json() for m in self.lefts],
            "rights": [m.to_json() for m in self.rights],
        }

    @staticmethod
    def from_json(data) -> "Chain":
        return Chain(tuple(FinSet(int(s)) for s in data["boundaries"]),
                     tuple(FinMap.from_json(m) for m in data["lefts"]),
                     tuple(FinMap.from_json(m) for m in data["rights"]))


def chain_of_sets(a: FinSet) -> Chain:
    return Chain((a,), (), ())


def chain_of_cospans(cospans) -> Chain:
    cospans = list(cospans)
    boundaries = [cospans[0].src] + [c.dst for c in cospans]
    for c1, c2 in zip(cospans, cospans[1:]):
        if c1.dst != c2.src:
            raise FinSetError("cospans are not composable")
    return Chain(tuple(boundaries), tuple(c.left for c in cospans), tuple(c.right for c in cospans))


def monoidal_sum_chains(u: Chain, v: Chain) -> Chain:
    if u.height != v.height:
        raise FinSetError("monoidal sum needs chains of equal height")
    if u.height == 0:
        return chain_of_sets(FinSet(u.boundaries[0].size + v.boundaries[0].size))
    cospans = [monoidal_sum_cospans(u.cospan(i), v.cospan(i)) for i in range(u.height)]
    return chain_of_cospans(cospans)


def canonicalize_chain(ch: Chain, bound=CANONICAL_SIZE_BOUND) -> tuple[Chain, int]:
    """Least relabeling over all permutations of every boundary and apex."""
    n = ch.height
    sizes = tuple(s.size for s in ch.boundaries) + tuple(s.size for s in ch.apexes)
    maps = []
    for i in range(n):
        maps.append((i, n + 1 + i, ch.lefts[i].table))
        maps.append((i + 1, n + 1 + i, ch.rights[i].table))
    tables, aut = _canonicalize_diagram(sizes, maps, bound)
    lefts = tuple(FinMap(ch.boundaries[i], ch.apexes[i], tables[2 * i]) for i in range(n))
    rights = tuple(FinMap(ch.boundaries[i + 1], ch.apexes[i], tables[2 * i + 1]) for i in range(n))
    return Chain(ch.boundaries, lefts, rights), aut


def chain_key(ch: Chain, bound=CANONICAL_SIZE_BOUND):
    """Hashable canonical key of the iso class of a chain."""
    canon, _ = canonicalize_chain(ch, bound)
    return (tuple(s.size for s in canon.boundaries), tuple(s.size for s in canon.apexes),
            tuple(m.table for m in canon.lefts), tuple(m.table for m in canon.rights))


def segment_cospan(ch: Chain, j: int, k: int) -> Cospan:
    """Composite cospan from boundary j to boundary k (identity when j == k)."""
    if j == k:
        return identity_cospan(ch.boundaries[j])
    out = ch.cospan(j)
    for i in range(j + 1, k):
        out = compose_cospans(out, ch.cospan(i))
    return out


def simplicial_act(lam: tuple[int, ...], ch: Chain) -> Chain:
    """Restriction along a monotone map [m] -> [n] given by its value tuple.

    Faces compose adjacent cospans by pushout; degeneracies insert identity
    cospans.
    """
    if any(a > b for a, b in zip(lam, lam[1:])):
        raise FinSetError("simplicial operator must be monotone")
    if not lam or lam[-1] > ch.height or lam[0] < 0:
        raise FinSetError("simplicial operator out of range")
    m = len(lam) - 1
    if m == 0:
        return chain_of_sets(ch.boundaries[lam[0]])
    return chain_of_cospans([segment_cospan(ch, lam[i], lam[i + 1]) for i in range(m)])


def _chain_element_blocks(ch: Chain):
    """Offsets for the disjoint union of all boundary and apex sets."""
    offsets = []
    total = 0
    for s in ch.boundaries:
        offsets.append(total)
        total += s.size
    apex_offsets = []
    for s in ch.apexes:
        apex_offsets.append(total)
        total += s.size
    return offsets, apex_offsets, total


def chain_components(ch: Chain) -> list[int]:
    """Component index for every element of the chain, in block order."""
    b_off, a_off, total = _chain_element_blocks(ch)
    uf = UnionFind(total)
    for i in range(ch.height):
        for e in ch.boundaries[i]:
            uf.union(b_off[i] + e, a_off[i] + ch.lefts[i].table[e])
        for e in ch.boundaries[i + 1]:
            uf.union(b_off[i + 1] + e, a_off[i] + ch.rights[i].table[e])
    _, table = uf.quotient()
    return table


def total_colimit_size(ch: Chain) -> int:
    table = chain_components(ch)
    return len(set(table)) if table else 0


def is_connected_chain(ch: Chain) -> bool:
    return total_colimit_size(ch) == 1


def chain_component_data(ch: Chain) -> list[tuple[Chain, list[list[int]], list[list[int]]]]:
    """Connected summands with their element selections.

    Returns one (piece, boundary_elements, apex_elements) triple per
    component, unsorted; the element lists say which elements of the
    original chain make up the piece.
    """
    b_off, a_off, _ = _chain_element_blocks(ch)
    table = chain_components(ch)
    n_comp = len(set(table))
    out = []
    for comp in range(n_comp):
        b_sel = [[e for e in s if table[b_off[i] + e] == comp]
                 for i, s in enumerate(ch.boundaries)]
        a_sel = [[e for e in s if table[a_off[i] + e] == comp]
                 for i, s in enumerate(ch.apexes)]
        a_pos = [{e: p for p, e in enumerate(sel)} for sel in a_sel]
        boundaries = tuple(FinSet(len(sel)) for sel in b_sel)
        lefts, rights = [], []
        for i in range(ch.height):
            apex = FinSet(len(a_sel[i]))
            lefts.append(FinMap(boundaries[i], apex,
                                tuple(a_pos[i][ch.lefts[i].table[e]] for e in b_sel[i])))
            rights.append(FinMap(boundaries[i + 1], apex,
                                 tuple(a_pos[i][ch.rights[i].table[e]] for e in b_sel[i + 1])))
        out.append((Chain(boundaries, tuple(lefts), tuple(rights)), b_sel, a_sel))
    return out


def decompose_chain(ch: Chain) -> list[Chain]:
    """Split a chain into its connected summands, sorted by canonical key."""
    pieces = [piece for piece, _, _ in chain_component_data(ch)]
    pieces.sort(key=chain_key)
    return pieces


def all_monotone(m: int, n: int):
    """All monotone maps [m] -> [n] as value tuples."""
    for values in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield values


def active_operators(n: int, max_height: int = 3):
    """All active [m] -> [n] (endpoint preserving) with m <= max_height."""
    for m in range(max_height + 1):
        for lam in all_monotone(m, n):
            if lam[0] == 0 and lam[-1] == n:
                yield lam


def enumerate_chains(n: int, size_bound: int):
    """All iso classes of height-n chains with total element count <= bound.

    Yields one canonical representative per class.
    """
    seen = set()
    set_count = 2 * n + 1
    for sizes in itertools.product(range(size_bound + 1), repeat=set_count):
        if sum(sizes) > size_bound:
            continue
        b_sizes, a_sizes = sizes[:n + 1], sizes[n + 1:]
        # a nonempty boundary needs a nonempty adjacent apex
        ok = all((a_sizes[i] > 0 or b_sizes[i] == 0) and (a_sizes[i] > 0 or b_sizes[i + 1] == 0)
                 for i in range(n))
        if not ok:
            continue
        boundaries = tuple(FinSet(s) for s in b_sizes)
        apexes = tuple(FinSet(s) for s in a_sizes)
        left_choices = [list(itertools.product(range(a_sizes[i]), repeat=b_sizes[i]))
                        for i in range(n)]
        right_choices = [list(itertools.product(range(a_sizes[i]), repeat=b_sizes[i + 1]))
                         for i in range(n)]
        for lts in itertools.product(*left_choices):
            for rts in itertools.product(*right_choices):
                ch = Chain(boundaries,
                           tuple(FinMap(boundaries[i], apexes[i], lts[i]) for i in range(n)),
                           tuple(FinMap(boundaries[i + 1], apexes[i], rts[i]) for i in range(n)))
                key = chain_key(ch)
                if key not in seen:
                    seen.add(key)
                    yield canonicalize_chain(ch)[0]


def verify_levelwise_free(n: int, size_bound: int, max_operator_height: int = 3) -> dict:
    """Check the free decomposition of height-n chains up to the size bound.

    For every iso class: the connected pieces recompose to the chain, the
    automorphism order equals the wreath-product formula over the pieces,
    and every active simplicial operator preserves connectedness.
    """
    from collections import Counter
    from math import factorial

    checked = 0
    for ch in enumerate_chains(n, size_bound):
        checked += 1
        pieces = decompose_chain(ch)
        if pieces:
            total = pieces[0]
            for p in pieces[1:]:
                total = monoidal_sum_chains(total, p)
        else:
            total = ch if ch.total_size() == 0 else None
        if total is None or chain_key(total) != chain_key(ch):
            return {"ok": False, "checked": checked, "violation": "recomposition",
                    "witness": ch.to_json()}
        aut = canonicalize_chain(ch)[1]
        expected = 1
        for _, mult in Counter(chain_key(p) for p in pieces).items():
            expected *= factorial(mult)
        for p in pieces:
            expected *= canonicalize_chain(p)[1]
        if aut != expected:
            return {"ok": False, "checked": checked, "violation": "aut_order_formula",
                    "witness": ch.to_json(), "aut": aut, "expected": expected}
        if is_connected_chain(ch):
            for lam in active_operators(n, max_operator_height):
                if not is_connected_chain(simplicial_act(lam, ch)):
                    return {"ok": False, "checked": checked, "violation": "active_connectivity",
                            "witness": ch.to_json(), "operator": list(lam)}
    return {"ok": True, "checked": checked}


# ---------------------------------------------------------------------------
# Projective cospans


@dataclass(frozen=True)
class ProjCospan:
    """A cospan whose apex is covered by the two boundaries.

    Morphisms A -> B of the projective cospan category are equivalence
    relations on A + B; composition restricts the pushout apex to the image
    of the outer boundaries.  Values are kept in canonical form: apex
    elements are numbered by first occurrence scanning A's images then B's.
    """

    underlying: Cospan

    def __post_init__(self):
        c = self.underlying
        covered = set(c.left.table) | set(c.right.table)
        if covered != set(range(c.apex.size)):
            raise FinSetError("projective cospan apex must be covered by the boundaries")

    @property
    def src(self) -> FinSet:
        return self.underlying.src

    @property
    def dst(self) -> FinSet:
        return self.underlying.dst

    def to_json(self):
        return self.underlying.to_json()

    @staticmethod
    def from_json(data) -> "ProjCospan":
        return proj_canonical(Cospan.from_json(data))


def proj_canonical(c: Cospan) -> ProjCospan:
    """Restrict the apex to the boundary image and renumber by first occurrence."""
    order: dict[int, int] = {}
    for v in c.left.table + c.right.table:
        if v not in order:
            order[v] = len(order)
    apex = FinSet(len(order))
    left = FinMap(c.src, apex, tuple(order[v] for v in c.left.table))
    right = FinMap(c.dst, apex, tuple(order[v] for v in c.right.table))
    return ProjCospan(Cospan(left, right))


def identity_proj(a: FinSet) -> ProjCospan:
    return proj_canonical(identity_cospan(a))


def compose_proj(p1: ProjCospan, p2: ProjCospan) -> ProjCospan:
    """Pushout, then restrict the apex to the image of the outer boundaries."""
    if p1.dst != p2.src:
        raise FinSetError("compose_proj: boundary mismatch")
    return proj_canonical(compose_cospans(p1.underlying, p2.underlying))


def span_to_proj(s: Span) -> ProjCospan:
    """Push out the span and keep only the image of the outer boundaries."""
    _, pa, pb = finset.pushout(s.left, s.right)
    return proj_canonical(Cospan(pa, pb))


def proj_partition(p: ProjCospan) -> frozenset[frozenset[int]]:
    """The equivalence relation on A + B encoded by a projective cospan.

    Elements of B are shifted by |A|.
    """
    c = p.underlying
    blocks: dict[int, set[int]] = {}
    for a, v in enumerate(c.left.table):
        blocks.setdefault(v, set()).add(a)
    for b, v in enumerate(c.right.table):
        blocks.setdefault(v, set()).add(c.src.size + b)
    return frozenset(frozenset(bl) for bl in blocks.values())


# ---------------------------------------------------------------------------
# Weighted cospans


@dataclass(frozen=True)
class FinCommMonoid:
    size: int
    zero: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, z, t = self.size, self.zero, self.table
        if not (0 <= z < n) or len(t) != n or any(len(row) != n for row in t):
            raise ValueError("malformed monoid table")
        for a in range(n):
            if t[a][z] != a or t[z][a] != a:
                raise ValueError("zero is not a unit")
            for b in range(n):
                if t[a][b] != t[b][a]:
                    raise ValueError("addition is not commutative")
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValueError("addition is not associative")

    def add(self, a: int, b: int) -> int:
        return self.table[a][b]

    def sum(self, values) -> int:
        out = self.zero
        for v in values:
            out = self.table[out][v]
        return out

    def to_json(self):
        return {"size": self.size, "zero": self.zero, "table": [list(r) for r in self.table]}

    @staticmethod
    def from_json(data) -> "FinCommMonoid":
        return FinCommMonoid(int(data["size"]), int(data["zero"]),
                             tuple(tuple(int(v) for v in row) for row in data["table"]))


def trivial_monoid() -> FinCommMonoid:
    return FinCommMonoid(1, 0, ((0,),))


def cyclic_monoid(n: int) -> FinCommMonoid:
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FinCommMonoid(n, 0, table)


def max_monoid(n: int = 2) -> FinCommMonoid:
    table = tuple(tuple(max(a, b) for b in range(n)) for a in range(n))
    return FinCommMonoid(n, 0, table)


@dataclass(frozen=True)
class WeightedCospan:
    underlying: Cospan
    monoid: FinCommMonoid
    labels: tuple[int, ...]  # one monoid element per apex point

    def __post_init__(self):
        if len(self.labels) != self.underlying.apex.size:
            raise ValueError("labels must be total on the apex")
        if any(not (0 <= v < self.monoid.size) for v in self.labels):
            raise ValueError("label outside the monoid")

    def to_json(self):
        return {"left": self.underlying.left.to_json(),
                "right": self.underlying.right.to_json(),
                "labels": list(self.labels)}

    @staticmethod
    def from_json(data, monoid: FinCommMonoid) -> "WeightedCospan":
        return WeightedCospan(Cospan(FinMap.from_json(data["left"]),
                                     FinMap.from_json(data["right"])),
                              monoid, tuple(int(v) for v in data["labels"]))


def identity_weighted(a: FinSet, monoid: FinCommMonoid) -> WeightedCospan:
    return WeightedCospan(identity_cospan(a), monoid, (monoid.zero,) * a.size)


def compose_weighted(w1: WeightedCospan, w2: WeightedCospan) -> WeightedCospan:
    """Compose the cospans and add labels over the fibers of the pushout."""
    if w1.monoid != w2.monoid:
        raise ValueError("weighted cospans live over different monoids")
    c1, c2 = w1.underlying, w2.underlying
    if c1.dst != c2.src:
        raise FinSetError("compose_weighted: boundary mismatch")
    p, px, py = finset.pushout(c1.right, c2.left)
    labels = []
    for q in p:
        parts = [w1.labels[x] for x in px.fiber(q)] + [w2.labels[y] for y in py.fiber(q)]
        labels.append(w1.monoid.sum(parts))
    composite = Cospan(finset.compose(c1.left, px), finset.compose(c2.right, py))
    return WeightedCospan(composite, w1.monoid, tuple(labels))


def monoidal_sum_weighted(u: WeightedCospan, v: WeightedCospan) -> WeightedCospan:
    if u.monoid != v.monoid:
        raise ValueError("weighted cospans live over different monoids")
    return WeightedCospan(monoidal_sum_cospans(u.underlying, v.underlying),
                          u.monoid, u.labels + v.labels)


def weighted_hom_key(w: WeightedCospan):
    """Canonical key of a weighted cospan as a hom-set element.

    Boundaries are fixed pointwise; only the apex may be relabeled.  Requires
    the apex to be covered by the boundaries (the surjective case).
    """
    c = w.underlying
    order: dict[int, int] = {}
    for v in c.left.table + c.right.table:
        if v not in order:
            order[v] = len(order)
    if len(order) != c.apex.size:
        raise ValueError("weighted_hom_key needs a boundary-covered apex")
    labels = [0] * c.apex.size
    for old, new in order.items():
        labels[new] = w.labels[old]
    return (tuple(order[v] for v in c.left.table),
            tuple(order[v] for v in c.right.table),
            tuple(labels))


def surjective_weighted_cospans(a_size: int, b_size: int, monoid: FinCommMonoid):
    """All surjective weighted cospans a -> X <- b, one per hom-class."""
    seen = set()
    out = []
    a, b = FinSet(a_size), FinSet(b_size)
    max_apex = a_size + b_size
    for x_size in range(max_apex + 1):
        x = FinSet(x_size)
        for lt in itertools.product(range(x_size), repeat=a_size):
            for rt in itertools.product(range(x_size), repeat=b_size):
                if set(lt) | set(rt) != set(range(x_size)):
                    continue
                cospan = Cospan(FinMap(a, x, lt), FinMap(b, x, rt))
                for labels in itertools.product(range(monoid.size), repeat=x_size):
                    w = WeightedCospan(cospan, monoid, labels)
                    key = weighted_hom_key(w)
                    if key not in seen:
                        seen.add(key)
                        out.append(w)
    return out


def hom_count_weighted(a_size: int, b_size: int, monoid: FinCommMonoid) -> int:
    """Number of hom-classes of surjective weighted cospans a -> X <- b."""
    if a_size > 4 or b_size > 4:
        raise BoundExceeded("hom_count_weighted supports sizes <= 4")
    return len(surjective_weighted_cospans(a_size, b_size, monoid))
