"""Discrete properads: graded operation sets with graph-substitution gluing.

An operation has a list of input colors and a list of output colors; the
operation sets are keyed by the sorted color lists.  Composition glues a
nonempty partial bijection between outputs of one operation and inputs of
another, and the properad axiom says that evaluating a connected acyclic
plan of gluings is independent of the order; `check_axioms` verifies that
by brute force on small plans.  The admissibility predicate classifies
which sets of arities can support a one-operation-per-arity sub-properad
of the terminal one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .finset import FinMap, FinSet
from .cospan import BoundExceeded, Cospan, FinCommMonoid


class PropError(ValueError):
    """Malformed properad data or an invalid gluing request."""


class DiscreteProperad:
    """Colors, operations with color profiles, identities, and a gluer.

    `glue(o, p, matching)` must return (result, in_slots, out_slots) where
    matching is a sorted tuple of (output slot of o, input slot of p)
    pairs, in_slots[x] is the result input slot of the x-th entry of
    "inputs of o, then unmatched inputs of p" and out_slots[x] the result
    output slot of the x-th entry of "unmatched outputs of o, then outputs
    of p".  `plan_universe` optionally lists the operations that
    check_axioms should build plans from.  `reorder(op, in_perm, out_perm)`
    optionally relabels the open slots of an operation (perm[s] is the new
    position of current slot s); properads whose operations carry no slot
    order leave it None.
    """

    def __init__(self, num_colors, profiles, identities, glue, plan_universe=None,
                 reorder=None):
        self.num_colors = num_colors
        self.profiles = dict(profiles)
        self.identities = tuple(identities)
        self._glue = glue
        self.plan_universe = list(plan_universe) if plan_universe is not None else None
        self.reorder = reorder
        if len(self.identities) != num_colors:
            raise PropError("one identity operation per color required")
        for c, op in enumerate(self.identities):
            if self.profiles.get(op) != ((c,), (c,)):
                raise PropError(f"identity for color {c} has the wrong profile")

    def profile(self, op):
        if op not in self.profiles:
            raise PropError(f"unknown operation {op!r}")
        return self.profiles[op]

    def arity(self, op):
        ins, outs = self.profile(op)
        return len(ins), len(outs)

    def all_ops(self):
        return sorted(self.profiles, key=lambda o: (self.profiles[o], str(o)))

    def ops_of_arity(self, in_colors, out_colors):
        key = (tuple(sorted(in_colors)), tuple(sorted(out_colors)))
        return [o for o in self.all_ops() if self.profiles[o] == key]

    def glue_full(self, o, p, matching):
        matching = _check_matching(self, o, p, matching)
        result, in_slots, out_slots = self._glue(o, p, matching)
        n, m = self.arity(o)
        l, k = self.arity(p)
        a = len(matching)
        if result not in self.profiles:
            raise PropError(f"gluing produced an unknown operation {result!r}")
        if self.arity(result) != (n + l - a, m + k - a):
            raise PropError("gluing violated the arity formula")
        return result, in_slots, out_slots


def _check_matching(P, o, p, matching):
    n, m = P.arity(o)
    l, k = P.arity(p)
    matching = tuple(sorted((int(i), int(j)) for i, j in matching))
    if not matching:
        raise PropError("matching must be nonempty")
    outs = [i for i, _ in matching]
    ins = [j for _, j in matching]
    if len(set(outs)) != len(outs) or len(set(ins)) != len(ins):
        raise PropError("matching must be a partial bijection")
    o_out = P.profile(o)[1]
    p_in = P.profile(p)[0]
    for i, j in matching:
        if not (0 <= i < m and 0 <= j < l):
            raise PropError("matching slot out of range")
        if o_out[i] != p_in[j]:
            raise PropError("matching does not respect colors")
    return matching


def compose_ops(P: DiscreteProperad, o, p, matching):
    """Glue outputs of o onto inputs of p along the matching."""
    return P.glue_full(o, p, matching)[0]


def counting_slot_maps(P, o, p, matching):
    """Slot maps for properads whose result slots are counted off in order.

    Suitable when slots of an operation are interchangeable within a color
    and colors are listed sorted: the concatenated unmatched lists are
    stably sorted by color to give result positions.
    """
    n, m = P.arity(o)
    l, k = P.arity(p)
    matched_in = {j for _, j in matching}
    matched_out = {i for i, _ in matching}
    o_in, o_out = P.profile(o)
    p_in, p_out = P.profile(p)
    in_list = list(o_in) + [p_in[j] for j in range(l) if j not in matched_in]
    out_list = [o_out[i] for i in range(m) if i not in matched_out] + list(p_out)
    in_slots = _stable_sort_positions(in_list)
    out_slots = _stable_sort_positions(out_list)
    return in_slots, out_slots


def _stable_sort_positions(colors):
    order = sorted(range(len(colors)), key=lambda x: (colors[x], x))
    pos = [0] * len(colors)
    for slot, x in enumerate(order):
        pos[x] = slot
    return tuple(pos)


# ---------------------------------------------------------------------------
# Plans and the axiom checker


@dataclass(frozen=True)
class Plan:
    """A connected acyclic gluing plan.

    Vertices 0..k-1 carry operations; edges (a, i, b, j) glue output slot i
    of vertex a to input slot j of vertex b, with a < b so the plan is
    acyclic by construction.
    """

    ops: tuple
    edges: tuple  # sorted tuples (a, out_slot, b, in_slot)

    def to_json(self):
        return {"ops": [str(o) for o in self.ops], "edges": [list(e) for e in self.edges]}


def _plan_connected(k, edges):
    from .finset import UnionFind
    uf = UnionFind(k)
    for a, _, b, _ in edges:
        uf.union(a, b)
    return uf.quotient()[0] == 1


def plan_results(P: DiscreteProperad, plan: Plan):
    """Results of every valid binary-merge evaluation order of the plan.

    A merge is valid when all plan edges between the two clusters point the
    same way.  Returns the set of final operations (empty if no complete
    order exists).  When the properad orders its slots, the final
    operation is normalized so that open slots appear in the order of
    their originating (vertex, slot) pairs; this makes the outcome a
    property of the plan rather than of the merge order chosen.
    """
    k = len(plan.ops)
    results = set()

    # cluster: (frozenset of vertices, op, in_map, out_map) where the maps
    # send (vertex, original slot) of still-open slots to cluster slots
    start = []
    for v, op in enumerate(plan.ops):
        n, m = P.arity(op)
        start.append((frozenset([v]), op,
                      {(v, j): j for j in range(n)}, {(v, i): i for i in range(m)}))

    def step(clusters):
        if len(clusters) == 1:
            _, op, ain, aout = clusters[0]
            if P.reorder is not None:
                in_perm = [0] * len(ain)
                for rank, key in enumerate(sorted(ain)):
                    in_perm[ain[key]] = rank
                out_perm = [0] * len(aout)
                for rank, key in enumerate(sorted(aout)):
                    out_perm[aout[key]] = rank
                op = P.reorder(op, tuple(in_perm), tuple(out_perm))
            results.add(op)
            return
        for x in range(len(clusters)):
            for y in range(len(clusters)):
                if x == y:
                    continue
                av, ao, ain, aout = clusters[x]
                bv, bo, bin_, bout = clusters[y]
                matching = []
                backward = False
                for a, i, b, j in plan.edges:
                    if a in av and b in bv:
                        matching.append((aout[(a, i)], bin_[(b, j)]))
                    elif a in bv and b in av:
                        backward = True
                if backward or not matching:
                    continue
                try:
                    res, in_slots, out_slots = P.glue_full(ao, bo, tuple(sorted(matching)))
                except PropError:
                    continue
                matched_out = {i for i, _ in matching}
                matched_in = {j for _, j in matching}
                new_in = {}
                a_in_count = len(ain)
                for key, slot in ain.items():
                    new_in[key] = in_slots[slot]
                for key, slot in bin_.items():
                    if slot in matched_in:
                        continue
                    offset = sum(1 for s in range(slot) if s not in matched_in)
                    new_in[key] = in_slots[a_in_count + offset]
                new_out = {}
                a_open_out = sum(1 for s in range(len(aout)) if s not in matched_out)
                for key, slot in aout.items():
                    if slot in matched_out:
                        continue
                    offset = sum(1 for s in range(slot) if s not in matched_out)
                    new_out[key] = out_slots[offset]
                for key, slot in bout.items():
                    new_out[key] = out_slots[a_open_out + slot]
                merged = (av | bv, res, new_in, new_out)
                rest = [c for z, c in enumerate(clusters) if z not in (x, y)]
                step(rest + [merged])

    step(start)
    return results


def _unit_composite(P: DiscreteProperad, op, slot, left):
    """Compose an identity into the given slot and renormalize slot order.

    For slot-ordered properads the glued operation lists the identity's
    leg first (or last); the slot maps say which result position plays
    each original slot, so the composite is reordered back before the
    unit law compares it with op.
    """
    ins, outs = P.profile(op)
    n, m = len(ins), len(outs)
    if left:
        ident = P.identities[ins[slot]]
        res, in_slots, out_slots = P.glue_full(ident, op, ((0, slot),))
        if P.reorder is None:
            return res
        in_perm = [0] * n
        in_perm[in_slots[0]] = slot
        r = 1
        for s in range(n):
            if s != slot:
                in_perm[in_slots[r]] = s
                r += 1
        out_perm = [0] * m
        for i in range(m):
            out_perm[out_slots[i]] = i
        return P.reorder(res, tuple(in_perm), tuple(out_perm))
    ident = P.identities[outs[slot]]
    res, in_slots, out_slots = P.glue_full(op, ident, ((slot, 0),))
    if P.reorder is None:
        return res
    in_perm = [0] * n
    for s in range(n):
        in_perm[in_slots[s]] = s
    out_perm = [0] * m
    r = 0
    for s in range(m):
        if s != slot:
            out_perm[out_slots[r]] = s
            r += 1
    out_perm[out_slots[r]] = slot
    return P.reorder(res, tuple(in_perm), tuple(out_perm))


def _default_universe(P: DiscreteProperad, cap: int = 9):
    if P.plan_universe is not None:
        return list(P.plan_universe)
    ops = [o for o in P.all_ops() if sum(P.arity(o)) <= 3]
    if not ops:
        ops = P.all_ops()
    return ops[:cap]


def check_axioms(P: DiscreteProperad, size_bound: int = 3, op_universe=None) -> dict:
    """Verify unitality and order-independent evaluation of small plans.

    Plans are built from `op_universe` (default: the properad's declared
    plan universe, else small-arity operations); all connected plans with
    at most size_bound vertices are evaluated in every valid merge order.
    """
    for op in P.all_ops():
        ins, outs = P.profile(op)
        for j in range(len(ins)):
            if _unit_composite(P, op, j, left=True) != op:
                return {"ok": False, "violation": "left_unit", "op": str(op), "slot": j}
        for i in range(len(outs)):
            if _unit_composite(P, op, i, left=False) != op:
                return {"ok": False, "violation": "right_unit", "op": str(op), "slot": i}

    universe = op_universe if op_universe is not None else _default_universe(P)
    plans_checked = 0
    for k in range(2, size_bound + 1):
        for ops in itertools.product(universe, repeat=k):
            pair_choices = []
            pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
            for a, b in pairs:
                _, m = P.arity(ops[a])
                l, _ = P.arity(ops[b])
                o_out = P.profile(ops[a])[1]
                p_in = P.profile(ops[b])[0]
                opts = [()]
                for size in range(1, min(m, l) + 1):
                    for outs in itertools.combinations(range(m), size):
                        for ins in itertools.permutations(range(l), size):
                            cand = tuple((i, j) for i, j in zip(outs, ins))
                            if all(o_out[i] == p_in[j] for i, j in cand):
                                opts.append(tuple((a, i, b, j) for i, j in cand))
                pair_choices.append(opts)
            for combo in itertools.product(*pair_choices):
                edges = tuple(sorted(e for grp in combo for e in grp))
                if not edges or not _plan_connected(k, edges):
                    continue
                srcs = [(a, i) for a, i, _, _ in edges]
                tgts = [(b, j) for _, _, b, j in edges]
                if len(set(srcs)) != len(srcs) or len(set(tgts)) != len(tgts):
                    # an output or input slot may be wired at most once
                    continue
                plan = Plan(ops, edges)
                try:
                    outcomes = plan_results(P, plan)
                except BoundExceeded:
                    continue
                plans_checked += 1
                if len(outcomes) > 1:
                    return {"ok": False, "violation": "order_dependence",
                            "plan": plan.to_json(),
                            "results": sorted(str(o) for o in outcomes)}
    return {"ok": True, "plans_checked": plans_checked}


def is_monic(P: DiscreteProperad) -> bool:
    """Every operation has exactly one output."""
    return all(len(outs) == 1 for _, outs in P.profiles.values())


# ---------------------------------------------------------------------------
# Admissible arity sets


@dataclass(frozen=True)
class AdmissibleSet:
    box: int
    members: frozenset  # pairs (inputs, outputs) within the box

    def __post_init__(self):
        for a, b in self.members:
            if not (0 <= a <= self.box and 0 <= b <= self.box):
                raise ValueError("member outside the box")

    def to_json(self):
        return {"box": self.box, "members": sorted(list(p) for p in self.members)}


def is_admissible(pairs, box: int):
    """Check the two closure conditions for an arity set within the box.

    Condition (1): (1,1) is a member, or the set is empty, or it is exactly
    {(0,0)}.  Condition (2): members (a,b) and (b,c) with 1 <= k <= b must
    have the composite arity (a+b-k, c+b-k) as a member whenever it stays
    inside the box.  Returns (True, None) or (False, witness); a condition
    (2) witness is the tuple (a, b, c, k).
    """
    s = frozenset((int(a), int(b)) for a, b in pairs)
    if s and s != {(0, 0)} and (1, 1) not in s:
        return False, {"condition": 1, "missing": [1, 1]}
    for a, b in sorted(s):
        for b2, c in sorted(s):
            if b2 != b:
                continue
            for k in range(1, b + 1):
                comp = (a + b - k, c + b - k)
                if comp[0] > box or comp[1] > box:
                    continue
                if comp not in s:
                    return False, {"condition": 2, "witness": [a, b, c, k],
                                   "missing": list(comp)}
    return True, None


def enumerate_admissible(box: int):
    """All admissible subsets of the box grid, in (size, lex) order."""
    grid = [(a, b) for a in range(box + 1) for b in range(box + 1)]
    if len(grid) > 16:
        raise BoundExceeded("enumerate_admissible supports boxes up to 3")
    found = []
    for r in range(len(grid) + 1):
        for subset in itertools.combinations(grid, r):
            ok, _ = is_admissible(subset, box)
            if ok:
                found.append(AdmissibleSet(box, frozenset(subset)))
    found.sort(key=lambda s: (len(s.members), sorted(s.members)))
    return found


# ---------------------------------------------------------------------------
# Endomorphism properads of finite commutative monoids


def endomorphism_properad(M: FinCommMonoid, max_arity: int = 3) -> DiscreteProperad:
    """One color; an operation of arity (k, l) is an element of M.

    This is the properad of connected M-weighted cospans k -> * <- l:
    gluing merges the singleton apexes and adds the labels.  The stored
    operation table covers arities up to max_arity, but gluing is defined
    by the closed formula for all arities.
    """
    profiles = {}
    for k in range(max_arity + 1):
        for l in range(max_arity + 1):
            for v in range(M.size):
                profiles[("endo", k, l, v)] = ((0,) * k, (0,) * l)

    def glue(o, p, matching):
        _, k1, l1, v1 = o
        _, k2, l2, v2 = p
        a = len(matching)
        result = ("endo", k1 + k2 - a, l1 - a + l2, M.add(v1, v2))
        if result not in profiles:
            raise BoundExceeded("gluing left the stored arity table")
        n_in = k1 + k2 - a
        n_out = l1 - a + l2
        return result, tuple(range(n_in)), tuple(range(n_out))

    identity = ("endo", 1, 1, M.zero)
    universe = [("endo", k, l, v)
                for k, l in ((1, 1), (2, 1), (1, 2)) if k <= max_arity and l <= max_arity
                for v in range(M.size)]
    return DiscreteProperad(1, profiles, (identity,), glue, plan_universe=universe)


def shape_map(P: DiscreteProperad, op) -> Cospan:
    """The connected cospan (inputs -> * <- outputs) underlying an operation."""
    n, m = P.arity(op)
    apex = FinSet(1)
    return Cospan(FinMap(FinSet(n), apex, (0,) * n), FinMap(FinSet(m), apex, (0,) * m))
