"""Set-valued Segal presheaves on small level graphs, and their audits.

A discrete properad induces a presheaf whose value at a level object is
the set of labelings: a color for every edge and an operation of matching
profile for every vertex.  `check_segal` verifies that such values satisfy
the segmentation condition (a height-2 value is the fiber product of its
two segments over the middle edge level) and the decomposition condition
(values are products over connected components).

The envelope turns a properad into simplicial free-commutative-monoid
data: level-n generators are connected labeled height-n objects, the inner
face composes the labels, and `check_pre_properad` audits the consequences
(free levels, Segal on generators, and the inner face taking generators to
generators).  The span category gives the classical counterexample: its
nerve data fails the last audit, while the forward-surjective subcategory
passes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from . import finset
from .finset import FinMap, FinSet, FinSetError
from . import freemon
from .freemon import MonHom, Multiset, HomTag
from .cospan import (BoundExceeded, Chain, Span, chain_component_data, compose_spans,
                     enumerate_chains, _canonicalize_diagram)
from .levelgraph import LabeledDAG, LevelObject, dag_key, realize
from .properad import DiscreteProperad, Plan, PropError, plan_results


# ---------------------------------------------------------------------------
# Values of the induced presheaf


def value_at_graph(P: DiscreteProperad, g: LabeledDAG, size_bound: int = 12):
    """Labelings of a graph by the properad, as (edge colors, vertex ops).

    Computed as a constrained product over the elementary subgraphs: each
    edge gets a color (fixed ones come from g.edge_labels), each vertex an
    operation whose sorted input/output colors match its incident edges.
    """
    if g.num_edges + g.num_vertices > size_bound:
        raise BoundExceeded("graph exceeds the labeling bound")
    free_edges = [e for e in range(g.num_edges)
                  if g.edge_labels is None or g.edge_labels[e] is None]
    base = list(g.edge_labels) if g.edge_labels is not None else [None] * g.num_edges
    out = []
    for combo in itertools.product(range(P.num_colors), repeat=len(free_edges)):
        colors = list(base)
        for e, c in zip(free_edges, combo):
            colors[e] = c
        vertex_choices = []
        for v in range(g.num_vertices):
            ins = tuple(sorted(colors[e] for e in g.in_edges(v)))
            outs = tuple(sorted(colors[e] for e in g.out_edges(v)))
            vertex_choices.append(P.ops_of_arity(ins, outs))
        for ops in itertools.product(*vertex_choices):
            out.append((tuple(colors), tuple(ops)))
    return out


def induced_value_fn(P: DiscreteProperad, size_bound: int = 12):
    """The presheaf of labelings, as a function on level objects.

    Elements are (colors per edge, ops per vertex) in block order: edges
    are listed level by level, vertices likewise, matching `realize`.
    """
    def value(x: LevelObject):
        return value_at_graph(P, realize(x), size_bound)
    return value


def _restrict_segment(x: LevelObject, element, i: int, j: int):
    """Restrict a labeling element to the levels i..j."""
    colors, ops = element
    e_off, v_off = [], []
    t = 0
    for lv in range(x.height + 1):
        e_off.append(t)
        t += x.edge_level(lv).size
    t = 0
    for lv in range(x.height):
        v_off.append(t)
        t += x.vertex_level(lv).size
    sub_colors = []
    for lv in range(i, j + 1):
        sub_colors.extend(colors[e_off[lv] + e] for e in x.edge_level(lv))
    sub_ops = []
    for lv in range(i, j):
        sub_ops.extend(ops[v_off[lv] + v] for v in x.vertex_level(lv))
    return tuple(sub_colors), tuple(sub_ops)


def _segment_object(x: LevelObject, i: int, j: int) -> LevelObject:
    ch = x.chain
    return LevelObject(Chain(ch.boundaries[i:j + 1], ch.lefts[i:j], ch.rights[i:j]))


def _restrict_component(element, b_sel, a_sel, boundary_sizes, apex_sizes):
    colors, ops = element
    e_off, t = [], 0
    for s in boundary_sizes:
        e_off.append(t)
        t += s
    v_off, t = [], 0
    for s in apex_sizes:
        v_off.append(t)
        t += s
    sub_colors = tuple(colors[e_off[lv] + e] for lv, sel in enumerate(b_sel) for e in sel)
    sub_ops = tuple(ops[v_off[lv] + v] for lv, sel in enumerate(a_sel) for v in sel)
    return sub_colors, sub_ops


def check_segal(value_fn, n_max: int = 2, size_bound: int = 4) -> dict:
    """Audit segmentation and decomposition of a tabulated presheaf.

    `value_fn(x)` must return the list of labeling elements of the level
    object x, as produced by `induced_value_fn`.  Decomposition is checked
    at heights 0 and 1, segmentation at height 2.
    """
    objects_checked = 0
    for n in range(min(n_max, 1) + 1):
        for ch in enumerate_chains(n, size_bound):
            x = LevelObject(ch)
            objects_checked += 1
            value = value_fn(x)
            pieces = chain_component_data(ch)
            b_sizes = [s.size for s in ch.boundaries]
            a_sizes = [s.size for s in ch.apexes]
            piece_values = [value_fn(LevelObject(p)) for p, _, _ in pieces]
            expected = 1
            for pv in piece_values:
                expected *= len(pv)
            split = {tuple(_restrict_component(e, b_sel, a_sel, b_sizes, a_sizes)
                           for _, b_sel, a_sel in pieces)
                     for e in value}
            target = set(itertools.product(*piece_values))
            if len(value) != expected or split != target or len(split) != len(value):
                return {"ok": False, "condition": "decomposition",
                        "object": x.to_json(), "value_size": len(value),
                        "expected_size": expected}
    if n_max >= 2:
        for ch in enumerate_chains(2, size_bound):
            x = LevelObject(ch)
            objects_checked += 1
            value = value_fn(x)
            top, bottom = _segment_object(x, 0, 1), _segment_object(x, 1, 2)
            top_vals, bottom_vals = value_fn(top), value_fn(bottom)
            mid = x.edge_level(1).size
            pairs = set()
            for u in top_vals:
                for v in bottom_vals:
                    if u[0][len(u[0]) - mid:] == v[0][:mid]:
                        pairs.add((u, v))
            split = {(_restrict_segment(x, e, 0, 1), _restrict_segment(x, e, 1, 2))
                     for e in value}
            if split != pairs or len(split) != len(value):
                return {"ok": False, "condition": "segmentation",
                        "object": x.to_json(), "value_size": len(value),
                        "expected_size": len(pairs)}
    return {"ok": True, "objects_checked": objects_checked}


# ---------------------------------------------------------------------------
# Free properads on generators


def _corolla_dag(name, in_colors, out_colors) -> LabeledDAG:
    k, l = len(in_colors), len(out_colors)
    return LabeledDAG(k + l, 1,
                      tuple([-1] * k + [0] * l), tuple([0] * k + [-1] * l),
                      vertex_labels=(name,),
                      edge_labels=tuple(in_colors) + tuple(out_colors),
                      in_legs=tuple(range(k)), out_legs=tuple(range(k, k + l)))


def _edge_dag(color) -> LabeledDAG:
    return LabeledDAG(1, 0, (-1,), (-1,), edge_labels=(color,),
                      in_legs=(0,), out_legs=(0,))


def _stable_color_order(items, colors):
    order = sorted(range(len(items)), key=lambda x: (colors[x], x))
    return tuple(items[x] for x in order)


def glue_dags(g1: LabeledDAG, g2: LabeledDAG, matching) -> LabeledDAG:
    """Merge output legs of g1 with input legs of g2 along the matching."""
    voff = g1.num_vertices
    matched_e2 = {}
    for i, j in matching:
        e1 = g1.out_legs[i]
        e2 = g2.in_legs[j]
        if g1.edge_labels[e1] != g2.edge_labels[e2]:
            raise PropError("gluing does not respect edge colors")
        matched_e2[e2] = e1
    sources = list(g1.edge_source)
    targets = list(g1.edge_target)
    labels = list(g1.edge_labels)
    for e2, e1 in matched_e2.items():
        t = g2.edge_target[e2]
        targets[e1] = t + voff if t != -1 else -1
    e2_index = {}
    for e2 in range(g2.num_edges):
        if e2 in matched_e2:
            e2_index[e2] = matched_e2[e2]
            continue
        e2_index[e2] = len(sources)
        s, t = g2.edge_source[e2], g2.edge_target[e2]
        sources.append(s + voff if s != -1 else -1)
        targets.append(t + voff if t != -1 else -1)
        labels.append(g2.edge_labels[e2])
    in_list = list(g1.in_legs) + [e2_index[e] for e in g2.in_legs if e not in matched_e2]
    matched_out = {i for i, _ in matching}
    out_list = ([g1.out_legs[i] for i in range(len(g1.out_legs)) if i not in matched_out]
                + [e2_index[e] for e in g2.out_legs])
    in_legs = _stable_color_order(in_list, [labels[e] for e in in_list])
    out_legs = _stable_color_order(out_list, [labels[e] for e in out_list])
    vlabels = tuple(g1.vertex_labels or ()) + tuple(g2.vertex_labels or ())
    return LabeledDAG(len(sources), voff + g2.num_vertices,
                      tuple(sources), tuple(targets),
                      vertex_labels=vlabels or None, edge_labels=tuple(labels),
                      in_legs=in_legs, out_legs=out_legs)


def free_properad(generators, num_colors: int = 1, max_vertices: int = 4) -> DiscreteProperad:
    """The properad of connected generator-labeled DAGs, up to iso.

    `generators` lists (name, input colors, output colors); color lists
    are sorted on intake.  Operations are canonical iso classes of
    connected DAGs with ordered legs and at most max_vertices vertices;
    gluing is graph gluing followed by canonicalization; identities are
    single edges.
    """
    reps: dict = {}
    profiles: dict = {}

    def store(key, g: LabeledDAG):
        reps[key] = g
        profiles[key] = (tuple(g.edge_labels[e] for e in g.in_legs),
                         tuple(g.edge_labels[e] for e in g.out_legs))

    def register(g: LabeledDAG):
        """Register g and every relabeling of its leg order."""
        key = dag_key(g)
        if key in reps:
            return key, False
        store(key, g)
        for in_perm in itertools.permutations(g.in_legs):
            for out_perm in itertools.permutations(g.out_legs):
                h = replace(g, in_legs=in_perm, out_legs=out_perm)
                k2 = dag_key(h)
                if k2 not in reps:
                    store(k2, h)
        return key, True

    identities = []
    for c in range(num_colors):
        key, _ = register(_edge_dag(c))
        identities.append(key)
    corollas = []
    for name, ins, outs in generators:
        for c in tuple(ins) + tuple(outs):
            if not (0 <= c < num_colors):
                raise PropError("generator color out of range")
        key, _ = register(_corolla_dag(name, tuple(sorted(ins)), tuple(sorted(outs))))
        corollas.append(key)

    frontier = list(reps)
    while frontier:
        new_frontier = []
        for k1, k2 in itertools.chain(
                itertools.product(frontier, list(reps)),
                itertools.product(list(reps), frontier)):
            g1, g2 = reps[k1], reps[k2]
            if g1.num_vertices + g2.num_vertices > max_vertices:
                continue
            m, l = len(g1.out_legs), len(g2.in_legs)
            for size in range(1, min(m, l) + 1):
                for outs in itertools.combinations(range(m), size):
                    for ins in itertools.permutations(range(l), size):
                        try:
                            glued = glue_dags(g1, g2, tuple(zip(outs, ins)))
                        except PropError:
                            continue
                        key, fresh = register(glued)
                        if fresh:
                            new_frontier.append(key)
        frontier = new_frontier

    def glue(o, p, matching):
        g1, g2 = reps[o], reps[p]
        if g1.num_vertices + g2.num_vertices > max_vertices:
            raise BoundExceeded("gluing exceeds the vertex bound")
        glued = glue_dags(g1, g2, matching)
        key = dag_key(glued)
        # slot maps: positions of the concatenated open legs in the stably
        # sorted result lists, recomputed the same way glue_dags sorts them
        matched_in = {j for _, j in matching}
        matched_out = {i for i, _ in matching}
        n_in = len(g1.in_legs) + len(g2.in_legs) - len(matching)
        n_out = len(g1.out_legs) - len(matching) + len(g2.out_legs)
        in_colors = ([g1.edge_labels[e] for e in g1.in_legs]
                     + [g2.edge_labels[g2.in_legs[j]] for j in range(len(g2.in_legs))
                        if j not in matched_in])
        out_colors = ([g1.edge_labels[g1.out_legs[i]] for i in range(len(g1.out_legs))
                       if i not in matched_out]
                      + [g2.edge_labels[e] for e in g2.out_legs])
        in_slots = _sort_positions(in_colors)
        out_slots = _sort_positions(out_colors)
        assert len(in_slots) == n_in and len(out_slots) == n_out
        return key, in_slots, out_slots

    def reorder(op, in_perm, out_perm):
        g = reps[op]
        new_in = [None] * len(g.in_legs)
        for s, e in enumerate(g.in_legs):
            new_in[in_perm[s]] = e
        new_out = [None] * len(g.out_legs)
        for s, e in enumerate(g.out_legs):
            new_out[out_perm[s]] = e
        h = replace(g, in_legs=tuple(new_in), out_legs=tuple(new_out))
        key = dag_key(h)
        if key not in profiles:
            raise PropError("slot relabeling left the enumerated operations")
        return key

    P = DiscreteProperad(num_colors, profiles, identities, glue,
                         plan_universe=identities + corollas, reorder=reorder)
    P.dag_reps = reps
    P.generator_ops = corollas
    return P


def _sort_positions(colors):
    order = sorted(range(len(colors)), key=lambda x: (colors[x], x))
    pos = [0] * len(colors)
    for slot, x in enumerate(order):
        pos[x] = slot
    return tuple(pos)


# ---------------------------------------------------------------------------
# The envelope: simplicial free commutative monoids


@dataclass
class SimplicialMonoidData:
    """Free commutative monoids on generator lists, through level 2.

    `gens[n]` lists the level-n generators (hashable keys); `face[(n, i)]`
    is the matrix of d_i: Q_n -> Q_{n-1} on generators and `degen[(n, i)]`
    of s_i: Q_n -> Q_{n+1} (present only when images stay in bounds).
    `pair_keys` lists, for the Segal audit, the keys of all connected
    amalgamations of two composable level-1 sums, enumerated independently
    of gens[2].
    """

    gens: tuple
    face: dict
    degen: dict
    pair_keys: tuple

    def to_json(self):
        return {
            "gens": [[str(g) for g in level] for level in self.gens],
            "face": {f"{n},{i}": h.to_json() for (n, i), h in sorted(self.face.items())},
            "degen": {f"{n},{i}": h.to_json() for (n, i), h in sorted(self.degen.items())},
            "pair_count": len(self.pair_keys),
        }


def labeled_chain_key(ch: Chain, colors, ops):
    """Canonical key of a chain whose edges carry colors and vertices ops."""
    n = ch.height
    sizes = tuple(s.size for s in ch.boundaries) + tuple(s.size for s in ch.apexes)
    maps = []
    for i in range(n):
        maps.append((i, n + 1 + i, ch.lefts[i].table))
        maps.append((i + 1, n + 1 + i, ch.rights[i].table))
    e_off, t = [], 0
    for s in ch.boundaries:
        e_off.append(t)
        t += s.size
    v_off, t = [], 0
    for s in ch.apexes:
        v_off.append(t)
        t += s.size
    best = None
    for perms in itertools.product(*(itertools.permutations(range(s)) for s in sizes)):
        tables = []
        for dom_i, cod_i, table in maps:
            pd, pc = perms[dom_i], perms[cod_i]
            new = [0] * len(table)
            for old, v in enumerate(table):
                new[pd[old]] = pc[v]
            tables.append(tuple(new))
        lab_colors = []
        for lv in range(n + 1):
            block = [None] * ch.boundaries[lv].size
            for e in ch.boundaries[lv]:
                block[perms[lv][e]] = colors[e_off[lv] + e]
            lab_colors.append(tuple(block))
        lab_ops = []
        for lv in range(n):
            block = [None] * ch.apexes[lv].size
            for v in ch.apexes[lv]:
                block[perms[n + 1 + lv][v]] = ops[v_off[lv] + v]
            lab_ops.append(tuple(block))
        key = (sizes, tuple(tables), tuple(lab_colors),
               tuple(tuple(str(o) for o in b) for b in lab_ops))
        if best is None or key < best:
            best = key
    return best


def _chain_plan(P: DiscreteProperad, ch: Chain, colors, ops) -> Plan:
    """The gluing plan of a connected labeled height-2 chain."""
    v0 = ch.apexes[0].size
    e_off_mid = ch.boundaries[0].size
    plan_edges = []
    out_slot = {}
    in_slot = {}
    mid_by_src: dict[int, list[int]] = {}
    mid_by_tgt: dict[int, list[int]] = {}
    for e in ch.boundaries[1]:
        mid_by_src.setdefault(ch.rights[0].table[e], []).append(e)
        mid_by_tgt.setdefault(ch.lefts[1].table[e], []).append(e)
    for v, edges in mid_by_src.items():
        edges.sort(key=lambda e: (colors[e_off_mid + e], e))
        for slot, e in enumerate(edges):
            out_slot[e] = slot
    for v, edges in mid_by_tgt.items():
        edges.sort(key=lambda e: (colors[e_off_mid + e], e))
        for slot, e in enumerate(edges):
            in_slot[e] = slot
    for e in ch.boundaries[1]:
        plan_edges.append((ch.rights[0].table[e], out_slot[e],
                           v0 + ch.lefts[1].table[e], in_slot[e]))
    return Plan(tuple(ops), tuple(sorted(plan_edges)))


def _compose_labeled_chain(P: DiscreteProperad, ch: Chain, colors, ops):
    """Evaluate the inner face of a connected labeled height-2 chain."""
    plan = _chain_plan(P, ch, colors, ops)
    results = plan_results(P, plan)
    if len(results) != 1:
        raise PropError(f"plan evaluation gave {len(results)} results")
    return next(iter(results))


def envelope_nerve(P: DiscreteProperad, n_max: int = 2, size_bound: int = 4) -> SimplicialMonoidData:
    """Simplicial monoid data of the properad's labeled-chain nerve.

    Level-0 generators are colors, level-1 generators corollas labeled by
    operations, level-2 generators connected labeled height-2 objects
    within the size bound.  The inner face composes via the properad.
    """
    if n_max > 2:
        raise BoundExceeded("envelope_nerve is tabulated through level 2")
    gens0 = [("col", c) for c in range(P.num_colors)]
    gens1 = [("cor", op) for op in P.all_ops()
             if sum(P.arity(op)) + 1 <= size_bound]
    gen1_index = {g: i for i, g in enumerate(gens1)}
    value = induced_value_fn(P)

    gens2 = []
    gen2_data = {}
    for ch in enumerate_chains(2, size_bound):
        x = LevelObject(ch)
        if x.val(0, 2).size != 1:
            continue
        for colors, ops in value(x):
            key = labeled_chain_key(ch, colors, ops)
            if key not in gen2_data:
                gen2_data[key] = (ch, colors, ops)
                gens2.append(key)
    gens2.sort()

    col_index = {c: i for i, c in enumerate(range(P.num_colors))}

    def color_sum(colors):
        out = freemon.zero(len(gens0))
        for c in colors:
            out = out + freemon.basis(len(gens0), col_index[c])
        return out

    face = {}
    face[(1, 1)] = MonHom(len(gens1), len(gens0),
                          tuple(color_sum(P.profile(op)[0]) for _, op in gens1))
    face[(1, 0)] = MonHom(len(gens1), len(gens0),
                          tuple(color_sum(P.profile(op)[1]) for _, op in gens1))

    def corolla_sum(ops):
        out = freemon.zero(len(gens1))
        for op in ops:
            out = out + freemon.basis(len(gens1), gen1_index[("cor", op)])
        return out

    d2_cols, d0_cols, d1_cols = [], [], []
    for key in gens2:
        ch, colors, ops = gen2_data[key]
        v0 = ch.apexes[0].size
        d2_cols.append(corolla_sum(ops[:v0]))
        d0_cols.append(corolla_sum(ops[v0:]))
        d1_cols.append(corolla_sum([_compose_labeled_chain(P, ch, colors, ops)]))
    face[(2, 2)] = MonHom(len(gens2), len(gens1), tuple(d2_cols))
    face[(2, 0)] = MonHom(len(gens2), len(gens1), tuple(d0_cols))
    face[(2, 1)] = MonHom(len(gens2), len(gens1), tuple(d1_cols))

    degen = {}
    cols = []
    for _, c in gens0:
        key = ("cor", P.identities[c])
        if key not in gen1_index:
            cols = None
            break
        cols.append(freemon.basis(len(gens1), gen1_index[key]))
    if cols is not None:
        degen[(0, 0)] = MonHom(len(gens0), len(gens1), tuple(cols))

    pair_keys = _envelope_pairs(P, gens1, size_bound)
    return SimplicialMonoidData((tuple(gens0), tuple(gens1), tuple(gens2)),
                                face, degen, tuple(sorted(set(pair_keys))))


def _bounded_multisets(items, size_of, bound):
    """Multisets (as sorted tuples) of items with total size within bound."""
    items = list(items)

    def rec(start, budget):
        yield ()
        for i in range(start, len(items)):
            s = size_of(items[i])
            if s <= budget:
                for rest in rec(i, budget - s):
                    yield (items[i],) + rest

    yield from rec(0, bound)


def _envelope_pairs(P: DiscreteProperad, gens1, size_bound: int):
    """Keys of connected amalgamations of composable corolla sums.

    This enumerates the fiber-product side of the Segal condition without
    going through gens[2]: pick a multiset of labeled corollas for the top
    level, one for the bottom, wire top outputs to bottom inputs in every
    color-respecting way, and keep the connected results within bound.
    """
    corollas = [op for _, op in gens1]

    def size_of(op):
        k, l = P.arity(op)
        return k + 1 + l

    sides = []
    for ms in _bounded_multisets(corollas, size_of, size_bound):
        ins = sum(P.arity(o)[0] for o in ms)
        outs = sum(P.arity(o)[1] for o in ms)
        sides.append((ms, ins + len(ms) + outs, ins, outs))
    keys = []
    for top, top_size, _, top_out in sides:
        for bot, bot_size, bot_in, _ in sides:
            if not top and not bot:
                continue
            if bot_in != top_out:
                continue
            # both sides count the middle edges, the chain counts them once
            if top_size + bot_size - top_out > size_bound:
                continue
            keys.extend(_wire_pairs(P, top, bot))
    return keys


def _wire_pairs(P: DiscreteProperad, top, bot):
    """All connected labeled 2-chains gluing the given corolla lists."""
    out_list = []  # (top vertex, color) per middle edge from the top side
    for v, op in enumerate(top):
        for c in P.profile(op)[1]:
            out_list.append((v, c))
    in_slots = []  # (bottom vertex, color) per open input of the bottom
    for v, op in enumerate(bot):
        for c in P.profile(op)[0]:
            in_slots.append((v, c))
    results = []
    for perm in itertools.permutations(range(len(in_slots))):
        if any(out_list[e][1] != in_slots[perm[e]][1] for e in range(len(out_list))):
            continue
        e0_colors, e0_src = [], []
        for v, op in enumerate(top):
            for c in P.profile(op)[0]:
                e0_colors.append(c)
                e0_src.append(v)
        e2_colors, e2_src = [], []
        for v, op in enumerate(bot):
            for c in P.profile(op)[1]:
                e2_colors.append(c)
                e2_src.append(v)
        mid_colors = [c for _, c in out_list]
        boundaries = (FinSet(len(e0_colors)), FinSet(len(out_list)), FinSet(len(e2_colors)))
        apexes = (FinSet(len(top)), FinSet(len(bot)))
        ch = Chain(boundaries,
                   (FinMap(boundaries[0], apexes[0], tuple(e0_src)),
                    FinMap(boundaries[1], apexes[1],
                           tuple(in_slots[perm[e]][0] for e in range(len(out_list))))),
                   (FinMap(boundaries[1], apexes[0], tuple(v for v, _ in out_list)),
                    FinMap(boundaries[2], apexes[1], tuple(e2_src))))
        x = LevelObject(ch)
        if x.val(0, 2).size != 1:
            continue
        colors = tuple(e0_colors) + tuple(mid_colors) + tuple(e2_colors)
        ops = tuple(top) + tuple(bot)
        results.append(labeled_chain_key(ch, colors, ops))
    return results


def check_pre_properad(d: SimplicialMonoidData) -> dict:
    """Audit the pre-properad conditions on simplicial monoid data.

    Checks duplicate-free generator lists, the simplicial identities on
    the provided faces and degeneracies, the Segal condition on generators
    (gens[2] matches the independently enumerated composable pairs), and
    that the inner face d1 sends generators to generators.
    """
    for n, level in enumerate(d.gens):
        if len(set(level)) != len(level):
            return {"ok": False, "violation": "duplicate_generators", "level": n}
    for i, j in [(0, 1), (0, 2), (1, 2)]:
        if (2, j) in d.face and (1, i) in d.face and (2, i) in d.face and (1, j - 1) in d.face:
            lhs = freemon.hom_compose(d.face[(2, j)], d.face[(1, i)])
            rhs = freemon.hom_compose(d.face[(2, i)], d.face[(1, j - 1)])
            if lhs != rhs:
                return {"ok": False, "violation": "simplicial_identity", "pair": [i, j]}
    if (0, 0) in d.degen:
        s = d.degen[(0, 0)]
        for i in (0, 1):
            if freemon.hom_compose(s, d.face[(1, i)]) != freemon.hom_identity(len(d.gens[0])):
                return {"ok": False, "violation": "degeneracy_identity", "face": i}
    if set(d.gens[2]) != set(d.pair_keys):
        missing = sorted(set(d.pair_keys) - set(d.gens[2]))
        extra = sorted(set(d.gens[2]) - set(d.pair_keys))
        return {"ok": False, "violation": "segal_generators",
                "missing": missing[:3], "extra": extra[:3]}
    d1 = d.face[(2, 1)]
    cls = freemon.classify_hom(d1)
    if cls.tag != HomTag.FREE:
        witnesses = [d.gens[2][j] for j in range(d1.src_gens)
                     if d1.matrix[j].degree() != 1]
        return {"ok": False, "violation": "d1_not_free", "tag": cls.tag.value,
                "witnesses": witnesses}
    return {"ok": True, "gens": [len(level) for level in d.gens]}


# ---------------------------------------------------------------------------
# Span nerve data


@dataclass(frozen=True)
class SpanChain:
    """A chain of composable spans A_0 <- X_1 -> A_1 <- ... -> A_n."""

    objects: tuple[FinSet, ...]
    lefts: tuple[FinMap, ...]   # X_i -> A_{i-1}
    rights: tuple[FinMap, ...]  # X_i -> A_i

    def __post_init__(self):
        n = len(self.lefts)
        if len(self.rights) != n or len(self.objects) != n + 1:
            raise FinSetError("span chain arity mismatch")
        for i in range(n):
            if self.lefts[i].dom != self.rights[i].dom:
                raise FinSetError("span legs must share their domain")
            if self.lefts[i].cod != self.objects[i] or self.rights[i].cod != self.objects[i + 1]:
                raise FinSetError("span chain boundaries disagree")

    @property
    def height(self) -> int:
        return len(self.lefts)

    @property
    def apexes(self) -> tuple[FinSet, ...]:
        return tuple(m.dom for m in self.lefts)

    def total_size(self) -> int:
        return sum(s.size for s in self.objects) + sum(s.size for s in self.apexes)

    def forward_surjective(self) -> bool:
        return all(r.is_surjective() for r in self.rights)


def span_chain_key(sc: SpanChain):
    n = sc.height
    sizes = tuple(s.size for s in sc.objects) + tuple(s.size for s in sc.apexes)
    maps = []
    for i in range(n):
        maps.append((n + 1 + i, i, sc.lefts[i].table))
        maps.append((n + 1 + i, i + 1, sc.rights[i].table))
    tables, _ = _canonicalize_diagram(sizes, maps)
    return (sizes, tables)


def span_chain_components(sc: SpanChain) -> list[SpanChain]:
    """Connected summands of a span chain."""
    o_off, t = [], 0
    for s in sc.objects:
        o_off.append(t)
        t += s.size
    x_off = []
    for s in sc.apexes:
        x_off.append(t)
        t += s.size
    uf = finset.UnionFind(t)
    for i in range(sc.height):
        for x in sc.lefts[i].dom:
            uf.union(x_off[i] + x, o_off[i] + sc.lefts[i].table[x])
            uf.union(x_off[i] + x, o_off[i + 1] + sc.rights[i].table[x])
    count, table = uf.quotient() if t else (0, [])
    pieces = []
    for comp in range(count):
        o_sel = [[e for e in s if table[o_off[i] + e] == comp]
                 for i, s in enumerate(sc.objects)]
        x_sel = [[e for e in s if table[x_off[i] + e] == comp]
                 for i, s in enumerate(sc.apexes)]
        o_pos = [{e: p for p, e in enumerate(sel)} for sel in o_sel]
        objects = tuple(FinSet(len(sel)) for sel in o_sel)
        lefts, rights = [], []
        for i in range(sc.height):
            apex = FinSet(len(x_sel[i]))
            lefts.append(FinMap(apex, objects[i],
                                tuple(o_pos[i][sc.lefts[i].table[x]] for x in x_sel[i])))
            rights.append(FinMap(apex, objects[i + 1],
                                 tuple(o_pos[i + 1][sc.rights[i].table[x]] for x in x_sel[i])))
        pieces.append(SpanChain(objects, tuple(lefts), tuple(rights)))
    return pieces


def span_chain_connected(sc: SpanChain) -> bool:
    return len(span_chain_components(sc)) == 1


def _enumerate_span_chains(n: int, size_bound: int):
    seen = set()
    for sizes in itertools.product(range(size_bound + 1), repeat=2 * n + 1):
        if sum(sizes) > size_bound:
            continue
        o_sizes, x_sizes = sizes[:n + 1], sizes[n + 1:]
        if any(x_sizes[i] > 0 and (o_sizes[i] == 0 or o_sizes[i + 1] == 0) for i in range(n)):
            continue
        objects = tuple(FinSet(s) for s in o_sizes)
        apexes = tuple(FinSet(s) for s in x_sizes)
        lchoices = [list(itertools.product(range(o_sizes[i]), repeat=x_sizes[i]))
                    for i in range(n)]
        rchoices = [list(itertools.product(range(o_sizes[i + 1]), repeat=x_sizes[i]))
                    for i in range(n)]
        for lts in itertools.product(*lchoices):
            for rts in itertools.product(*rchoices):
                sc = SpanChain(objects,
                               tuple(FinMap(apexes[i], objects[i], lts[i]) for i in range(n)),
                               tuple(FinMap(apexes[i], objects[i + 1], rts[i]) for i in range(n)))
                key = span_chain_key(sc)
                if key not in seen:
                    seen.add(key)
                    yield sc


def span_nerve_data(size_bound: int = 4, surjective_only: bool = False) -> SimplicialMonoidData:
    """Nerve data of the span category (or its forward-surjective part).

    Level-n generators are connected chains of n composable spans within
    the size bound; the inner face composes spans by pullback and expands
    the result in connected components.  With surjective_only, every span
    must have a surjective forward (rightward) leg.
    """
    gens0 = [("pt",)]
    gens1 = []
    gen1_data = {}
    for sc in _enumerate_span_chains(1, size_bound):
        if not span_chain_connected(sc):
            continue
        if surjective_only and not sc.forward_surjective():
            continue
        key = span_chain_key(sc)
        gens1.append(key)
        gen1_data[key] = sc
    gens2 = []
    gen2_data = {}
    for sc in _enumerate_span_chains(2, size_bound):
        if not span_chain_connected(sc):
            continue
        if surjective_only and not sc.forward_surjective():
            continue
        key = span_chain_key(sc)
        gens2.append(key)
        gen2_data[key] = sc

    def register_components(sc: SpanChain):
        parts = []
        for piece in span_chain_components(sc):
            key = span_chain_key(piece)
            if key not in gen1_data:
                gen1_data[key] = piece
                gens1.append(key)
            parts.append(key)
        return parts

    d2_parts, d0_parts, d1_parts = [], [], []
    for key in gens2:
        sc = gen2_data[key]
        top = SpanChain(sc.objects[:2], sc.lefts[:1], sc.rights[:1])
        bot = SpanChain(sc.objects[1:], sc.lefts[1:], sc.rights[1:])
        composite = compose_spans(Span(sc.lefts[0], sc.rights[0]),
                                  Span(sc.lefts[1], sc.rights[1]))
        comp_chain = SpanChain((composite.src, composite.dst),
                               (composite.left,), (composite.right,))
        d2_parts.append(register_components(top))
        d0_parts.append(register_components(bot))
        d1_parts.append(register_components(comp_chain))

    gen1_index = {g: i for i, g in enumerate(gens1)}

    def gen1_sum(parts):
        out = freemon.zero(len(gens1))
        for key in parts:
            out = out + freemon.basis(len(gens1), gen1_index[key])
        return out

    face = {}
    face[(1, 1)] = MonHom(len(gens1), 1,
                          tuple(Multiset((gen1_data[g].objects[0].size,)) for g in gens1))
    face[(1, 0)] = MonHom(len(gens1), 1,
                          tuple(Multiset((gen1_data[g].objects[1].size,)) for g in gens1))
    face[(2, 2)] = MonHom(len(gens2), len(gens1), tuple(gen1_sum(p) for p in d2_parts))
    face[(2, 0)] = MonHom(len(gens2), len(gens1), tuple(gen1_sum(p) for p in d0_parts))
    face[(2, 1)] = MonHom(len(gens2), len(gens1), tuple(gen1_sum(p) for p in d1_parts))

    degen = {}
    ident = SpanChain((FinSet(1), FinSet(1)),
                      (finset.identity(FinSet(1)),), (finset.identity(FinSet(1)),))
    ident_key = span_chain_key(ident)
    if ident_key in gen1_index:
        degen[(0, 0)] = MonHom(1, len(gens1),
                               (freemon.basis(len(gens1), gen1_index[ident_key]),))

    pair_keys = _span_pairs(gen1_data, [g for g in gens1 if gen1_data[g].total_size() <= size_bound],
                            size_bound, surjective_only)
    return SimplicialMonoidData((tuple(gens0), tuple(gens1), tuple(gens2)),
                                face, degen, tuple(sorted(set(pair_keys))))


def _span_pairs(gen1_data, gens1, size_bound, surjective_only):
    """Connected amalgamations of composable sums of span generators."""
    sides = []
    for ms in _bounded_multisets(gens1, lambda g: gen1_data[g].total_size(), size_bound):
        chains = [gen1_data[g] for g in ms]
        sides.append((chains,
                      sum(c.total_size() for c in chains),
                      sum(c.objects[0].size for c in chains),
                      sum(c.objects[1].size for c in chains)))
    keys = []
    for top_chains, top_size, _, mid in sides:
        for bot_chains, bot_size, bot_in, _ in sides:
            if not top_chains and not bot_chains:
                continue
            if bot_in != mid:
                continue
            # the shared middle objects are counted once in the glued chain
            if top_size + bot_size - mid > size_bound:
                continue
            keys.extend(_wire_span_pair(top_chains, bot_chains, surjective_only))
    return keys


def _wire_span_pair(top_chains, bot_chains, surjective_only):
    """Glue the disjoint sums along every identification of the middle."""
    a0, off = [], []
    t = 0
    for c in top_chains:
        off.append(t)
        t += c.objects[0].size
    a0_size = t
    x1_src, x1_tgt = [], []
    t_mid_top, mid_off_top = 0, []
    for c in top_chains:
        mid_off_top.append(t_mid_top)
        t_mid_top += c.objects[1].size
    t = 0
    x1_dom = 0
    for ci, c in enumerate(top_chains):
        for x in c.lefts[0].dom:
            x1_src.append(off[ci] + c.lefts[0].table[x])
            x1_tgt.append(mid_off_top[ci] + c.rights[0].table[x])
        x1_dom += c.lefts[0].dom.size
    a2_off, t = [], 0
    for c in bot_chains:
        a2_off.append(t)
        t += c.objects[1].size
    a2_size = t
    mid_off_bot, t = [], 0
    for c in bot_chains:
        mid_off_bot.append(t)
        t += c.objects[0].size
    x2_src_local, x2_tgt = [], []
    for ci, c in enumerate(bot_chains):
        for x in c.lefts[0].dom:
            x2_src_local.append(mid_off_bot[ci] + c.lefts[0].table[x])
            x2_tgt.append(a2_off[ci] + c.rights[0].table[x])
    mid = t_mid_top
    results = []
    for perm in itertools.permutations(range(mid)):
        # perm sends the bottom middle numbering to the top one
        objects = (FinSet(a0_size), FinSet(mid), FinSet(a2_size))
        lefts = (FinMap(FinSet(len(x1_src)), objects[0], tuple(x1_src)),
                 FinMap(FinSet(len(x2_tgt)), objects[1],
                        tuple(perm[v] for v in x2_src_local)))
        rights = (FinMap(FinSet(len(x1_tgt)), objects[1], tuple(x1_tgt)),
                  FinMap(FinSet(len(x2_tgt)), objects[2], tuple(x2_tgt)))
        sc = SpanChain(objects, lefts, rights)
        if not span_chain_connected(sc):
            continue
        if surjective_only and not sc.forward_surjective():
            continue
        results.append(span_chain_key(sc))
    return results


# ---------------------------------------------------------------------------
# Completeness


def is_complete(P: DiscreteProperad) -> bool:
    """No non-identity invertible morphism in the (1,1)-ary part."""
    from .properad import compose_ops
    for c in range(P.num_colors):
        for c2 in range(P.num_colors):
            for u in P.ops_of_arity((c,), (c2,)):
                if u == P.identities[c]:
                    continue
                for v in P.ops_of_arity((c2,), (c,)):
                    try:
                        uv = compose_ops(P, u, v, ((0, 0),))
                        vu = compose_ops(P, v, u, ((0, 0),))
                    except (PropError, BoundExceeded):
                        continue
                    if uv == P.identities[c] and vu == P.identities[c2]:
                        return False
    return True
