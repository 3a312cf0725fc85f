"""Level graphs: leveled directed acyclic graphs presented by zigzags.

An object of height n is a zigzag of edge levels and vertex levels

    E_0 -> V_0 <- E_1 -> V_1 <- ... <- E_n

which we store as a chain (cospan module).  The full diagram on the
twisted arrow poset of [n] is recovered by iterated pushout: the value on
the interval [i, j] is the component set of the sub-zigzag, computed here
with union-find.  Morphisms pair a monotone map of levels with injections
on interval values whose naturality squares are all cartesian, so a
morphism restricts to a level subgraph and then collapses levels; that is
the inert / active factorization implemented below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import finset
from .finset import FinMap, FinSet, FinSetError, UnionFind
from .cospan import Chain, canonicalize_chain, chain_key


@dataclass(frozen=True)
class LevelObject:
    """A height-n level graph: edge levels are the chain boundaries,
    vertex levels are the chain apexes."""

    chain: Chain

    @property
    def height(self) -> int:
        return self.chain.height

    def edge_level(self, i: int) -> FinSet:
        return self.chain.boundaries[i]

    def vertex_level(self, i: int) -> FinSet:
        return self.chain.apexes[i]

    def left_incidence(self, i: int) -> FinMap:
        """E_i -> V_i (the vertex below an edge)."""
        return self.chain.lefts[i]

    def right_incidence(self, i: int) -> FinMap:
        """E_{i+1} -> V_i (the vertex above an edge)."""
        return self.chain.rights[i]

    def total_size(self) -> int:
        return self.chain.total_size()

    def val(self, i: int, j: int) -> FinSet:
        return FinSet(completion(self).size(i, j))

    def to_json(self):
        levels = []
        maps = []
        n = self.height
        for i in range(n):
            levels.append(self.edge_level(i).size)
            levels.append(self.vertex_level(i).size)
            maps.append(self.chain.lefts[i].to_json())
            maps.append(self.chain.rights[i].to_json())
        levels.append(self.edge_level(n).size)
        return {"levels": levels, "maps": maps}

    @staticmethod
    def from_json(data) -> "LevelObject":
        levels = [int(v) for v in data["levels"]]
        if len(levels) % 2 != 1:
            raise FinSetError("level list must alternate edge/vertex levels")
        n = len(levels) // 2
        boundaries = tuple(FinSet(levels[2 * i]) for i in range(n + 1))
        apexes = tuple(FinSet(levels[2 * i + 1]) for i in range(n))
        maps = [FinMap.from_json(m) for m in data["maps"]]
        if len(maps) != 2 * n:
            raise FinSetError("wrong number of incidence maps")
        lefts = tuple(maps[2 * i] for i in range(n))
        rights = tuple(maps[2 * i + 1] for i in range(n))
        ch = Chain(boundaries, lefts, rights)
        for i in range(n):
            if lefts[i].cod != apexes[i]:
                raise FinSetError("incidence map codomain disagrees with level list")
        return LevelObject(ch)


def level_object(edge_sizes, vertex_sizes, lefts, rights) -> LevelObject:
    boundaries = tuple(FinSet(s) for s in edge_sizes)
    apexes = tuple(FinSet(s) for s in vertex_sizes)
    n = len(apexes)
    lmaps = tuple(FinMap(boundaries[i], apexes[i], tuple(lefts[i])) for i in range(n))
    rmaps = tuple(FinMap(boundaries[i + 1], apexes[i], tuple(rights[i])) for i in range(n))
    return LevelObject(Chain(boundaries, lmaps, rmaps))


class Completion:
    """Interval values of a level object and their structure maps.

    The value on [i, j] is the set of components of the sub-zigzag over
    levels i..j.  Classes are numbered by least vertex element (in block
    order), falling back to edge elements, which makes the value on [i, i]
    literally the edge level and the value on [i, i+1] literally the
    vertex level, with identity numbering.
    """

    def __init__(self, x: LevelObject):
        self.obj = x
        ch = x.chain
        n = ch.height
        self.b_off = []
        total = 0
        for s in ch.boundaries:
            self.b_off.append(total)
            total += s.size
        self.a_off = []
        for s in ch.apexes:
            self.a_off.append(total)
            total += s.size
        self.total = total
        self._windows: dict[tuple[int, int], tuple[int, dict[int, int], list[int]]] = {}
        for i in range(n + 1):
            for j in range(i, n + 1):
                self._windows[(i, j)] = self._build(i, j)
        self._smaps: dict[tuple[int, int, int, int], FinMap] = {}

    def _build(self, i, j):
        ch = self.obj.chain
        uf = UnionFind(self.total)
        for lv in range(i, j):
            for e in ch.boundaries[lv]:
                uf.union(self.b_off[lv] + e, self.a_off[lv] + ch.lefts[lv].table[e])
            for e in ch.boundaries[lv + 1]:
                uf.union(self.b_off[lv + 1] + e, self.a_off[lv] + ch.rights[lv].table[e])
        elems = []
        for lv in range(i, j):
            elems.extend(self.a_off[lv] + e for e in ch.apexes[lv])
        for lv in range(i, j + 1):
            elems.extend(self.b_off[lv] + e for e in ch.boundaries[lv])
        labels: dict[int, int] = {}
        reps: list[int] = []
        table: dict[int, int] = {}
        for g in elems:
            root = uf.find(g)
            if root not in labels:
                labels[root] = len(labels)
                reps.append(g)
            table[g] = labels[root]
        return len(labels), table, reps

    def size(self, i: int, j: int) -> int:
        return self._windows[(i, j)][0]

    def class_of(self, i: int, j: int, global_elem: int) -> int:
        return self._windows[(i, j)][1][global_elem]

    def rep(self, i: int, j: int, cls: int) -> int:
        return self._windows[(i, j)][2][cls]

    def decode(self, global_elem: int):
        """(kind, level, element) for a global element index."""
        for lv, off in enumerate(self.a_off):
            if off <= global_elem < off + self.obj.vertex_level(lv).size:
                return ("v", lv, global_elem - off)
        for lv, off in enumerate(self.b_off):
            if off <= global_elem < off + self.obj.edge_level(lv).size:
                return ("e", lv, global_elem - off)
        raise FinSetError("global element out of range")

    def edge_map(self, i: int, j: int, lv: int) -> FinMap:
        """E_lv -> val(i, j) for i <= lv <= j."""
        src = self.obj.edge_level(lv)
        return FinMap(src, FinSet(self.size(i, j)),
                      tuple(self.class_of(i, j, self.b_off[lv] + e) for e in src))

    def vertex_map(self, i: int, j: int, lv: int) -> FinMap:
        """V_lv -> val(i, j) for i <= lv < j."""
        src = self.obj.vertex_level(lv)
        return FinMap(src, FinSet(self.size(i, j)),
                      tuple(self.class_of(i, j, self.a_off[lv] + e) for e in src))

    def structure_map(self, i: int, j: int, i2: int, j2: int) -> FinMap:
        """val(i, j) -> val(i2, j2) for [i, j] contained in [i2, j2]."""
        cached = self._smaps.get((i, j, i2, j2))
        if cached is not None:
            return cached
        if not (i2 <= i and j <= j2):
            raise FinSetError("structure map needs nested intervals")
        table = tuple(self.class_of(i2, j2, self.rep(i, j, c))
                      for c in range(self.size(i, j)))
        out = FinMap(FinSet(self.size(i, j)), FinSet(self.size(i2, j2)), table)
        self._smaps[(i, j, i2, j2)] = out
        return out


def completion(x: LevelObject) -> Completion:
    # cached on the object itself: hashing a level object is far more
    # expensive than the attribute lookup
    cached = getattr(x, "_completion", None)
    if cached is None:
        cached = Completion(x)
        object.__setattr__(x, "_completion", cached)
    return cached


def is_elementary(x: LevelObject) -> bool:
    """Height at most 1 with a singleton total value: an edge or a corolla."""
    return x.height <= 1 and x.val(0, x.height).size == 1


def is_connected(x: LevelObject) -> bool:
    """Singleton total value, equivalently a connected realization."""
    return x.val(0, x.height).size == 1


def last_level_singleton(x: LevelObject) -> bool:
    """The literal last-edge-level condition; see `is_connected` for the
    component-count notion actually used (the two can disagree)."""
    return x.edge_level(x.height).size == 1


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class LevelMorphism:
    """lam: [m] -> [n] monotone plus injections on interval values.

    alpha lists the injections on the basic intervals of the source, in the
    order (0,0), (0,1), (1,1), (1,2), ..., (m,m); entry 2i maps edge level
    i into val(lam i, lam i) of the target and entry 2i+1 maps vertex level
    i into val(lam i, lam (i+1)).  Injections on all other intervals are
    derived; construction fails unless every naturality square commutes and
    is cartesian.
    """

    lam: tuple[int, ...]
    src: LevelObject
    dst: LevelObject
    alpha: tuple[FinMap, ...]

    def __post_init__(self):
        m, n = self.src.height, self.dst.height
        lam = self.lam
        if len(lam) != m + 1 or any(a > b for a, b in zip(lam, lam[1:])):
            raise FinSetError("lam must be monotone of the source height")
        if lam[0] < 0 or lam[-1] > n:
            raise FinSetError("lam out of range")
        if len(self.alpha) != 2 * m + 1:
            raise FinSetError("wrong number of basic injections")
        for i in range(m + 1):
            a = self.alpha[2 * i]
            if a.dom != self.src.edge_level(i) or a.cod != self.dst.val(lam[i], lam[i]):
                raise FinSetError(f"edge injection {i} has the wrong shape")
        for i in range(m):
            a = self.alpha[2 * i + 1]
            if a.dom != self.src.vertex_level(i) or a.cod != self.dst.val(lam[i], lam[i + 1]):
                raise FinSetError(f"vertex injection {i} has the wrong shape")
        _validate_morphism(self)

    def derived(self, i: int, j: int) -> FinMap:
        """The injection val_src(i, j) -> val_dst(lam i, lam j)."""
        return _derived_alpha(self, i, j)


def _derived_alpha(f: LevelMorphism, i: int, j: int) -> FinMap:
    cs, cd = completion(f.src), completion(f.dst)
    lam = f.lam
    table = []
    for c in range(cs.size(i, j)):
        kind, lv, e = cs.decode(cs.rep(i, j, c))
        table.append(_image_class(f, kind, lv, e, i, j))
    return FinMap(FinSet(cs.size(i, j)), FinSet(cd.size(lam[i], lam[j])), tuple(table))


def _image_class(f: LevelMorphism, kind: str, lv: int, e: int, i: int, j: int) -> int:
    """Where the basic source element lands in val_dst(lam i, lam j)."""
    cd = completion(f.dst)
    lam = f.lam
    if kind == "e":
        v = f.alpha[2 * lv].table[e]
        step = cd.structure_map(lam[lv], lam[lv], lam[i], lam[j])
    else:
        v = f.alpha[2 * lv + 1].table[e]
        step = cd.structure_map(lam[lv], lam[lv + 1], lam[i], lam[j])
    return step.table[v]


def _validate_morphism(f: LevelMorphism):
    m = f.src.height
    cs, cd = completion(f.src), completion(f.dst)
    lam = f.lam
    derived = {}
    for i in range(m + 1):
        for j in range(i, m + 1):
            a = _derived_alpha(f, i, j)
            if not a.is_injective():
                raise FinSetError(f"derived injection on [{i},{j}] is not injective")
            derived[(i, j)] = a
            # every element of a class must land in the class of its rep
            for lv in range(i, j + 1):
                for e in f.src.edge_level(lv):
                    c = cs.class_of(i, j, cs.b_off[lv] + e)
                    if _image_class(f, "e", lv, e, i, j) != a.table[c]:
                        raise FinSetError("morphism data is not natural")
            for lv in range(i, j):
                for e in f.src.vertex_level(lv):
                    c = cs.class_of(i, j, cs.a_off[lv] + e)
                    if _image_class(f, "v", lv, e, i, j) != a.table[c]:
                        raise FinSetError("morphism data is not natural")
    for (i, j), a in derived.items():
        for (i2, j2), a2 in derived.items():
            if not (i2 <= i and j <= j2):
                continue
            ss = cs.structure_map(i, j, i2, j2)
            sd = cd.structure_map(lam[i], lam[j], lam[i2], lam[j2])
            for c in range(a.dom.size):
                if sd.table[a.table[c]] != a2.table[ss.table[c]]:
                    raise FinSetError("naturality square does not commute")
            image = set(a.table)
            preimage = {v for v in range(sd.dom.size) if sd.table[v] in set(a2.table)}
            if image != preimage:
                raise FinSetError("naturality square is not cartesian")


def identity_level_morphism(x: LevelObject) -> LevelMorphism:
    m = x.height
    alpha = []
    for i in range(m):
        alpha.append(finset.identity(x.edge_level(i)))
        alpha.append(finset.identity(x.vertex_level(i)))
    alpha.append(finset.identity(x.edge_level(m)))
    return LevelMorphism(tuple(range(m + 1)), x, x, tuple(alpha))


def _trusted_morphism(lam, src, dst, alpha) -> LevelMorphism:
    """Build a LevelMorphism without re-running validation.

    Only for data already known to be valid, such as the composite of two
    validated morphisms; validation cost dominates exhaustive searches.
    """
    f = object.__new__(LevelMorphism)
    object.__setattr__(f, "lam", lam)
    object.__setattr__(f, "src", src)
    object.__setattr__(f, "dst", dst)
    object.__setattr__(f, "alpha", alpha)
    return f


def compose_level(f: LevelMorphism, g: LevelMorphism) -> LevelMorphism:
    """g after f."""
    if f.dst != g.src:
        raise FinSetError("compose_level: objects do not match")
    lam = tuple(g.lam[v] for v in f.lam)
    m = f.src.height
    alpha = []
    for i in range(m):
        alpha.append(finset.compose(f.alpha[2 * i], g.derived(f.lam[i], f.lam[i])))
        alpha.append(finset.compose(f.alpha[2 * i + 1], g.derived(f.lam[i], f.lam[i + 1])))
    alpha.append(finset.compose(f.alpha[2 * m], g.derived(f.lam[m], f.lam[m])))
    return _trusted_morphism(lam, f.src, g.dst, tuple(alpha))


def is_inert(f: LevelMorphism) -> bool:
    """lam is a subinterval inclusion."""
    return all(f.lam[i] == f.lam[0] + i for i in range(len(f.lam)))


def is_active(f: LevelMorphism) -> bool:
    """lam preserves endpoints and all injections are bijections."""
    if f.lam[0] != 0 or f.lam[-1] != f.dst.height:
        return False
    return all(a.dom.size == a.cod.size for a in f.alpha)


def factorize_level(f: LevelMorphism) -> tuple[LevelMorphism, LevelMorphism]:
    """Split f into a level collapse onto a subgraph of the target.

    Returns (inert, active) with f = compose_level(active, inert): the
    active part collapses the source onto a middle object, the middle is
    the full subgraph of the target spanned by the image components, and
    the inert part includes it back.
    """
    m = f.src.height
    lam = f.lam
    o, h = lam[0], lam[-1] - lam[0]
    cd = completion(f.dst)
    top = f.derived(0, m)
    im_top = set(top.table)

    kept_e = []
    for j in range(h + 1):
        emap = cd.edge_map(o, o + h, o + j)
        kept_e.append([e for e in f.dst.edge_level(o + j) if emap.table[e] in im_top])
    kept_v = []
    for j in range(h):
        vmap = cd.vertex_map(o, o + h, o + j)
        kept_v.append([e for e in f.dst.vertex_level(o + j) if vmap.table[e] in im_top])
    e_pos = [{e: p for p, e in enumerate(sel)} for sel in kept_e]
    v_pos = [{e: p for p, e in enumerate(sel)} for sel in kept_v]
    mid = level_object(
        [len(sel) for sel in kept_e], [len(sel) for sel in kept_v],
        [[v_pos[j][f.dst.chain.lefts[o + j].table[e]] for e in kept_e[j]] for j in range(h)],
        [[v_pos[j][f.dst.chain.rights[o + j].table[e]] for e in kept_e[j + 1]] for j in range(h)])

    inert_alpha = []
    for j in range(h):
        inert_alpha.append(FinMap(mid.edge_level(j), f.dst.edge_level(o + j), tuple(kept_e[j])))
        inert_alpha.append(FinMap(mid.vertex_level(j), f.dst.vertex_level(o + j), tuple(kept_v[j])))
    inert_alpha.append(FinMap(mid.edge_level(h), f.dst.edge_level(o + h), tuple(kept_e[h])))
    inert = LevelMorphism(tuple(o + j for j in range(h + 1)), mid, f.dst, tuple(inert_alpha))

    cm = completion(mid)
    rho = tuple(v - o for v in lam)

    def to_mid_class(dst_cls: int, p: int, q: int, rp: int, rq: int) -> int:
        # convert a class of val_dst(p, q) lying over im_top to val_mid(rp, rq)
        kind, lv, e = cd.decode(cd.rep(p, q, dst_cls))
        if kind == "e":
            return cm.edge_map(rp, rq, lv - o).table[e_pos[lv - o][e]]
        return cm.vertex_map(rp, rq, lv - o).table[v_pos[lv - o][e]]

    active_alpha = []
    for i in range(m):
        ea = f.alpha[2 * i]
        active_alpha.append(FinMap(ea.dom, mid.val(rho[i], rho[i]),
                                   tuple(to_mid_class(v, lam[i], lam[i], rho[i], rho[i])
                                         for v in ea.table)))
        va = f.alpha[2 * i + 1]
        active_alpha.append(FinMap(va.dom, mid.val(rho[i], rho[i + 1]),
                                   tuple(to_mid_class(v, lam[i], lam[i + 1], rho[i], rho[i + 1])
                                         for v in va.table)))
    ea = f.alpha[2 * m]
    active_alpha.append(FinMap(ea.dom, mid.val(rho[m], rho[m]),
                               tuple(to_mid_class(v, lam[m], lam[m], rho[m], rho[m])
                                     for v in ea.table)))
    active = LevelMorphism(rho, f.src, mid, tuple(active_alpha))
    return inert, active


def active_collapse(lam: tuple[int, ...], x: LevelObject) -> LevelObject:
    """Merge consecutive levels along an endpoint-preserving monotone map."""
    if lam[0] != 0 or lam[-1] != x.height:
        raise FinSetError("active_collapse needs an endpoint-preserving map")
    if any(a > b for a, b in zip(lam, lam[1:])):
        raise FinSetError("active_collapse needs a monotone map")
    c = completion(x)
    m = len(lam) - 1
    edge_sizes = [x.edge_level(lam[i]).size for i in range(m + 1)]
    vertex_sizes = [c.size(lam[i], lam[i + 1]) for i in range(m)]
    lefts = [c.edge_map(lam[i], lam[i + 1], lam[i]).table for i in range(m)]
    rights = [c.edge_map(lam[i], lam[i + 1], lam[i + 1]).table for i in range(m)]
    return level_object(edge_sizes, vertex_sizes, lefts, rights)


def all_injections(dom: FinSet, cod: FinSet):
    for values in itertools.permutations(range(cod.size), dom.size):
        yield FinMap(dom, cod, values)


def all_level_morphisms(src: LevelObject, dst: LevelObject):
    """Every valid morphism src -> dst, by brute force."""
    m, n = src.height, dst.height
    for lam in itertools.combinations_with_replacement(range(n + 1), m + 1):
        choices = []
        ok = True
        for i in range(m):
            choices.append(list(all_injections(src.edge_level(i), dst.val(lam[i], lam[i]))))
            choices.append(list(all_injections(src.vertex_level(i), dst.val(lam[i], lam[i + 1]))))
        choices.append(list(all_injections(src.edge_level(m), dst.val(lam[m], lam[m]))))
        if any(not c for c in choices):
            continue
        for alpha in itertools.product(*choices):
            try:
                yield LevelMorphism(lam, src, dst, alpha)
            except FinSetError:
                continue


def level_objects_isomorphic(x: LevelObject, y: LevelObject) -> bool:
    return x.height == y.height and chain_key(x.chain) == chain_key(y.chain)


# ---------------------------------------------------------------------------
# Graph realization


@dataclass(frozen=True)
class LabeledDAG:
    """A directed graph with open ends.

    Every edge has at most one source vertex and at most one target vertex
    (-1 marks a missing end: an input leg has no source, an output leg no
    target).  Vertex in/out edges are unordered; legs are unordered unless
    pinned by in_legs / out_legs, which fix a linear order on them.
    """

    num_edges: int
    num_vertices: int
    edge_source: tuple[int, ...]
    edge_target: tuple[int, ...]
    vertex_labels: tuple | None = None
    edge_labels: tuple | None = None
    levels: tuple[int, ...] | None = None
    in_legs: tuple[int, ...] | None = None
    out_legs: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.edge_source) != self.num_edges or len(self.edge_target) != self.num_edges:
            raise ValueError("edge end lists must cover all edges")
        for v in self.edge_source + self.edge_target:
            if not (-1 <= v < self.num_vertices):
                raise ValueError("edge end out of range")
        if self.vertex_labels is not None and len(self.vertex_labels) != self.num_vertices:
            raise ValueError("vertex labels must cover all vertices")
        if self.edge_labels is not None and len(self.edge_labels) != self.num_edges:
            raise ValueError("edge labels must cover all edges")
        if self.levels is not None and len(self.levels) != self.num_edges:
            raise ValueError("levels must cover all edges")
        if self.in_legs is not None and sorted(self.in_legs) != sorted(
                e for e in range(self.num_edges) if self.edge_source[e] == -1):
            raise ValueError("in_legs must list exactly the sourceless edges")
        if self.out_legs is not None and sorted(self.out_legs) != sorted(
                e for e in range(self.num_edges) if self.edge_target[e] == -1):
            raise ValueError("out_legs must list exactly the targetless edges")
        if not self._acyclic():
            raise ValueError("graph has a directed cycle")

    def _acyclic(self) -> bool:
        succ = [set() for _ in range(self.num_vertices)]
        indeg = [0] * self.num_vertices
        for e in range(self.num_edges):
            s, t = self.edge_source[e], self.edge_target[e]
            if s != -1 and t != -1:
                if t not in succ[s]:
                    succ[s].add(t)
                    indeg[t] += 1
        queue = [v for v in range(self.num_vertices) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.num_vertices

    def in_edges(self, v: int) -> tuple[int, ...]:
        return tuple(e for e in range(self.num_edges) if self.edge_target[e] == v)

    def out_edges(self, v: int) -> tuple[int, ...]:
        return tuple(e for e in range(self.num_edges) if self.edge_source[e] == v)

    def input_legs(self) -> tuple[int, ...]:
        if self.in_legs is not None:
            return self.in_legs
        return tuple(e for e in range(self.num_edges) if self.edge_source[e] == -1)

    def output_legs(self) -> tuple[int, ...]:
        if self.out_legs is not None:
            return self.out_legs
        return tuple(e for e in range(self.num_edges) if self.edge_target[e] == -1)


def realize(x: LevelObject) -> LabeledDAG:
    """Edges are the edge-level elements, vertices the vertex-level ones.

    An edge at level i runs from the vertex above it (level i-1 incidence)
    to the vertex below it (level i incidence); missing ends are legs.
    """
    n = x.height
    v_off = []
    total_v = 0
    for i in range(n):
        v_off.append(total_v)
        total_v += x.vertex_level(i).size
    sources, targets, levels = [], [], []
    for i in range(n + 1):
        for e in x.edge_level(i):
            src = v_off[i - 1] + x.right_incidence(i - 1).table[e] if i >= 1 else -1
            tgt = v_off[i] + x.left_incidence(i).table[e] if i <= n - 1 else -1
            sources.append(src)
            targets.append(tgt)
            levels.append(i)
    return LabeledDAG(len(sources), total_v, tuple(sources), tuple(targets),
                      levels=tuple(levels))


def _edge_key(g: LabeledDAG, e: int, vperm, in_pos, out_pos):
    src = vperm[g.edge_source[e]] if g.edge_source[e] != -1 else -1
    tgt = vperm[g.edge_target[e]] if g.edge_target[e] != -1 else -1
    label = g.edge_labels[e] if g.edge_labels is not None else None
    return (src, tgt, in_pos.get(e, -1), out_pos.get(e, -1), label)


def dag_key(g: LabeledDAG):
    """Canonical hashable key of the iso class of a labeled DAG.

    Minimized over vertex relabelings only: edges with equal keys are
    interchangeable, so the sorted multiset of edge keys already captures
    the edge structure.  Levels are ignored.
    """
    in_pos = {e: p for p, e in enumerate(g.in_legs)} if g.in_legs is not None else {}
    out_pos = {e: p for p, e in enumerate(g.out_legs)} if g.out_legs is not None else {}
    best = None
    for perm in itertools.permutations(range(g.num_vertices)):
        labels = None
        if g.vertex_labels is not None:
            relabeled = [None] * g.num_vertices
            for v in range(g.num_vertices):
                relabeled[perm[v]] = g.vertex_labels[v]
            labels = tuple(relabeled)
        edges = tuple(sorted(_edge_key(g, e, perm, in_pos, out_pos)
                             for e in range(g.num_edges)))
        key = (g.num_edges, g.num_vertices, labels, edges)
        if best is None or key < best:
            best = key
    return best


def forget_leveling(x: LevelObject):
    """Canonical key of the underlying graph, levels discarded."""
    g = realize(x)
    bare = LabeledDAG(g.num_edges, g.num_vertices, g.edge_source, g.edge_target)
    return dag_key(bare)


def elementary_subgraphs(g: LabeledDAG) -> list[LabeledDAG]:
    """One corolla per vertex and one bare edge per edge."""
    out = []
    for v in range(g.num_vertices):
        ins, outs = g.in_edges(v), g.out_edges(v)
        k, l = len(ins), len(outs)
        sources = tuple([-1] * k + [0] * l)
        targets = tuple([0] * k + [-1] * l)
        labels = None
        if g.edge_labels is not None:
            labels = tuple(g.edge_labels[e] for e in ins + outs)
        vlabels = (g.vertex_labels[v],) if g.vertex_labels is not None else None
        out.append(LabeledDAG(k + l, 1, sources, targets,
                              vertex_labels=vlabels, edge_labels=labels))
    for e in range(g.num_edges):
        labels = (g.edge_labels[e],) if g.edge_labels is not None else None
        out.append(LabeledDAG(1, 0, (-1,), (-1,), edge_labels=labels))
    return out


def dag_to_dot(g: LabeledDAG) -> str:
    """DOT export; leg stubs are drawn as points, ranks follow levels."""
    lines = ["digraph levelgraph {", "  rankdir=LR;"]
    for v in range(g.num_vertices):
        label = str(g.vertex_labels[v]) if g.vertex_labels is not None else f"v{v}"
        lines.append(f'  v{v} [shape=circle, label="{label}"];')
    stubs = 0
    ends = []
    for e in range(g.num_edges):
        s, t = g.edge_source[e], g.edge_target[e]
        if s == -1:
            lines.append(f"  s{stubs} [shape=point];")
            sname = f"s{stubs}"
            stubs += 1
        else:
            sname = f"v{s}"
        if t == -1:
            lines.append(f"  s{stubs} [shape=point];")
            tname = f"s{stubs}"
            stubs += 1
        else:
            tname = f"v{t}"
        attr = ""
        if g.edge_labels is not None:
            attr = f' [label="{g.edge_labels[e]}"]'
        elif g.levels is not None:
            attr = f' [label="{g.levels[e]}"]'
        ends.append(f"  {sname} -> {tname}{attr};")
    lines.extend(ends)
    if g.levels is not None:
        # vertices between edge levels i and i+1 share a rank
        by_gap: dict[int, list[int]] = {}
        for e in range(g.num_edges):
            t = g.edge_target[e]
            if t != -1:
                by_gap.setdefault(g.levels[e], []).append(t)
        for gap in sorted(by_gap):
            names = " ".join(f"v{v}" for v in sorted(set(by_gap[gap])))
            lines.append(f"  {{ rank=same; {names} }}")
    lines.append("}")
    return "\n".join(lines)


def enumerate_level_objects(height: int, size_bound: int):
    """One representative per iso class of level objects within the bound."""
    from .cospan import enumerate_chains
    for ch in enumerate_chains(height, size_bound):
        yield LevelObject(ch)
