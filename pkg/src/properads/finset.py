"""Skeletal finite sets, maps between them, and the colimit/limit primitives.

Elements of a finite set of size n are the integers 0..n-1.  Pointed sets
reserve element 0 as the basepoint.  All values are immutable and all
operations are pure functions, so everything here is safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class FinSetError(ValueError):
    """Raised on malformed or incompatible finite-set data."""


@dataclass(frozen=True, order=True)
class FinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise FinSetError(f"negative size {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def to_json(self):
        return {"size": self.size}

    @staticmethod
    def from_json(data) -> "FinSet":
        return FinSet(int(data["size"]))


@dataclass(frozen=True, order=True)
class FinMap:
    dom: FinSet
    cod: FinSet
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise FinSetError("table length does not match domain size")
        for v in self.table:
            if not (0 <= v < self.cod.size):
                raise FinSetError(f"table entry {v} outside codomain of size {self.cod.size}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.cod.size))

    def image(self) -> set[int]:
        return set(self.table)

    def fiber(self, y: int) -> tuple[int, ...]:
        return tuple(x for x, v in enumerate(self.table) if v == y)

    def to_json(self):
        return {"dom": self.dom.size, "cod": self.cod.size, "table": list(self.table)}

    @staticmethod
    def from_json(data) -> "FinMap":
        return FinMap(FinSet(int(data["dom"])), FinSet(int(data["cod"])),
                      tuple(int(v) for v in data["table"]))


def identity(a: FinSet) -> FinMap:
    return FinMap(a, a, tuple(range(a.size)))


def constant(dom: FinSet, cod: FinSet, value: int) -> FinMap:
    return FinMap(dom, cod, (value,) * dom.size)


def compose(f: FinMap, g: FinMap) -> FinMap:
    """Pointwise composite g after f (apply f first)."""
    if f.cod != g.dom:
        raise FinSetError("compose: codomain of first map must equal domain of second")
    return FinMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


def coproduct_legs(x: FinSet, y: FinSet) -> tuple[FinSet, FinMap, FinMap]:
    """X + Y with X occupying 0..|X|-1 and Y shifted by |X|."""
    s = FinSet(x.size + y.size)
    inl = FinMap(x, s, tuple(range(x.size)))
    inr = FinMap(y, s, tuple(range(x.size, x.size + y.size)))
    return s, inl, inr


class UnionFind:
    """Standard union-find with path compression, used for pushouts/quotients."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the smaller index as root so numbering is by least element
            if ri > rj:
                ri, rj = rj, ri
            self.parent[rj] = ri

    def quotient(self) -> tuple[int, list[int]]:
        """Class count and element -> class table, classes numbered by least member."""
        labels: dict[int, int] = {}
        table = []
        for i in range(len(self.parent)):
            root = self.find(i)
            if root not in labels:
                labels[root] = len(labels)
            table.append(labels[root])
        return len(labels), table


def pushout(f: FinMap, g: FinMap) -> tuple[FinSet, FinMap, FinMap]:
    """Pushout of X <-f- B -g-> Y.

    Returns (P, X -> P, Y -> P) where P is the quotient of X + Y by
    f(b) ~ g(b), with classes numbered by least representative in
    X-then-Y order.
    """
    if f.dom != g.dom:
        raise FinSetError("pushout: maps must share their domain")
    x, y = f.cod, g.cod
    uf = UnionFind(x.size + y.size)
    for b in f.dom:
        uf.union(f.table[b], x.size + g.table[b])
    n, table = uf.quotient()
    p = FinSet(n)
    left = FinMap(x, p, tuple(table[:x.size]))
    right = FinMap(y, p, tuple(table[x.size:]))
    return p, left, right


def pullback(f: FinMap, g: FinMap) -> tuple[FinSet, FinMap, FinMap]:
    """Pullback of X -f-> B <-g- Y: pairs (x, y) with f(x) = g(y), lex ordered."""
    if f.cod != g.cod:
        raise FinSetError("pullback: maps must share their codomain")
    pairs = [(x, y) for x in f.dom for y in g.dom if f.table[x] == g.table[y]]
    q = FinSet(len(pairs))
    to_x = FinMap(q, f.dom, tuple(p[0] for p in pairs))
    to_y = FinMap(q, g.dom, tuple(p[1] for p in pairs))
    return q, to_x, to_y


def coequalize(n: int, relations) -> tuple[int, list[int]]:
    """Quotient 0..n-1 by the given (i, j) relations; least-member numbering."""
    uf = UnionFind(n)
    for i, j in relations:
        uf.union(i, j)
    return uf.quotient()


@dataclass(frozen=True)
class PointedMap:
    """A map of pointed sets; basepoint is element 0 on both sides."""

    underlying: FinMap

    def __post_init__(self):
        f = self.underlying
        if f.dom.size < 1 or f.cod.size < 1:
            raise FinSetError("pointed sets are nonempty")
        if f.table[0] != 0:
            raise FinSetError("basepoint must map to basepoint")

    @property
    def dom(self) -> FinSet:
        return self.underlying.dom

    @property
    def cod(self) -> FinSet:
        return self.underlying.cod

    def is_inert(self) -> bool:
        """Injective away from the basepoint preimage."""
        seen = set()
        for x in range(1, self.dom.size):
            v = self.underlying.table[x]
            if v != 0:
                if v in seen:
                    return False
                seen.add(v)
        return True

    def is_active(self) -> bool:
        """Only the basepoint hits the basepoint."""
        return all(self.underlying.table[x] != 0 for x in range(1, self.dom.size))


def pointed_identity(a: FinSet) -> PointedMap:
    return PointedMap(identity(a))


def pointed_compose(f: PointedMap, g: PointedMap) -> PointedMap:
    return PointedMap(compose(f.underlying, g.underlying))


def inert_active_factorize(p: PointedMap) -> tuple[PointedMap, PointedMap]:
    """Factor p as active o inert (inert applied first).

    The middle object is the canonical one: basepoint plus the non-basepoint
    elements of the domain that p does not send to the basepoint, in
    inherited order.
    """
    f = p.underlying
    kept = [x for x in range(1, f.dom.size) if f.table[x] != 0]
    mid = FinSet(1 + len(kept))
    position = {x: i + 1 for i, x in enumerate(kept)}
    inert_table = tuple([0] + [position.get(x, 0) for x in range(1, f.dom.size)])
    inert = PointedMap(FinMap(f.dom, mid, inert_table))
    active_table = tuple([0] + [f.table[x] for x in kept])
    active = PointedMap(FinMap(mid, f.cod, active_table))
    return inert, active
