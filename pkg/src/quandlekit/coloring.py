"""Colorings of oriented trivalent diagrams by a G-family of quandles.

Every arc receives a pair (g, x) with g in the group and x in the set.
At a positive crossing with over color (h, y) the outgoing under arc is
the incoming one acted on in the associated quandle:

  out = (h^-1 g h, x *_h y)    where (g, x) colors the incoming under arc.

A negative crossing applies the inverse of that map.  At a vertex the x
component is shared by all three arcs and the group components satisfy
g_c = g_a g_b (two in, one out, local order a then b) or g_a = g_b g_c
(one in, two out, local order b then c).

The two components never interact in the constraints except through the
group element of the over arc, so the enumerator solves in two phases:
it first backtracks over group labels alone, then for each group
labelling counts the set labels, which live on classes of arcs merged by
the vertex relations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import ONE_IN_TWO_OUT, TrivalentDiagram
from .gfamily import GFamily, Subfamily, associated_quandle, subfamily_closure
from .finite_algebra import subquandle_closure
from .polynomial import (
    PolyMultiset,
    gsubfamily_polynomial,
    subquandle_polynomial,
)


@dataclass(frozen=True)
class Coloring:
    """An assignment of (g, x) pairs to arcs, arcs listed in ascending order."""

    arcs: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def pair(self, arc: int) -> tuple[int, int]:
        return self.pairs[self.arcs.index(arc)]

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return dict(zip(self.arcs, self.pairs))


def used_pairs(c: Coloring) -> frozenset[tuple[int, int]]:
    return frozenset(c.pairs)


def _bfs_order(count: int, groups) -> list[int]:
    """Visit order over `count` slots: breadth-first over shared membership.

    `groups` is an iterable of slot tuples; slots in one group are
    neighbours.  Branching in this order keeps each new choice adjacent
    to already-decided slots, so propagation fires as early as possible.
    """
    adj: list[set[int]] = [set() for _ in range(count)]
    for group in groups:
        for a in group:
            for b in group:
                if a != b:
                    adj[a].add(b)
    order: list[int] = []
    seen = [False] * count
    for start in range(count):
        if seen[start]:
            continue
        seen[start] = True
        frontier = [start]
        while frontier:
            u = frontier.pop(0)
            order.append(u)
            for w in sorted(adj[u]):
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
    return order


def enumerate_colorings(f: GFamily, d: TrivalentDiagram) -> tuple[Coloring, ...]:
    """All valid colorings, sorted by the encoded color vector over the arcs."""
    m, n = f.group.order, f.set_size
    arcs = d.arcs
    index = {a: i for i, a in enumerate(arcs)}
    narcs = len(arcs)
    if narcs == 0:
        return (Coloring((), ()),)
    if m * n == 0:
        return ()

    mul = [[f.group.mul(a + 1, b + 1) - 1 for b in range(m)] for a in range(m)]
    ginv = [f.group.inv(a + 1) - 1 for a in range(m)]
    ops = [[[v - 1 for v in row] for row in q.table] for q in f.ops]
    inv_ops = [[[v - 1 for v in row] for row in q.inv_table] for q in f.ops]

    crossings = [
        (c.sign, index[c.over], index[c.under_in], index[c.under_out])
        for c in d.crossings
    ]
    # vertices normalised to g[p] = g[l] g[r]
    products = []
    for v in d.vertices:
        a, b, c = (index[arc] for arc in v.arcs)
        products.append((a, b, c) if v.kind == ONE_IN_TWO_OUT else (c, a, b))

    # ---- group phase ----
    gcons: list[tuple] = [("c",) + c for c in crossings]
    gcons += [("v",) + p for p in products]
    gtouch: list[list[int]] = [[] for _ in range(narcs)]
    for ci, con in enumerate(gcons):
        for pos in set(con[2:] if con[0] == "c" else con[1:]):
            gtouch[pos].append(ci)
    gorder = _bfs_order(narcs, [con[2:] if con[0] == "c" else con[1:] for con in gcons])

    gval = [-1] * narcs
    gsols: list[tuple[int, ...]] = []

    def gput(pos, val, trail, queue):
        if gval[pos] >= 0:
            return gval[pos] == val
        gval[pos] = val
        trail.append(pos)
        queue.append(pos)
        return True

    def gprocess(ci, trail, queue):
        con = gcons[ci]
        if con[0] == "c":
            _, sign, o, ui, uo = con
            h = gval[o]
            if h < 0:
                return True
            if gval[ui] >= 0:
                g = gval[ui]
                out = mul[mul[ginv[h]][g]][h] if sign > 0 else mul[mul[h][g]][ginv[h]]
                if not gput(uo, out, trail, queue):
                    return False
            if gval[uo] >= 0:
                g = gval[uo]
                inn = mul[mul[h][g]][ginv[h]] if sign > 0 else mul[mul[ginv[h]][g]][h]
                if not gput(ui, inn, trail, queue):
                    return False
            return True
        _, p, l, r = con
        gp, gl, gr = gval[p], gval[l], gval[r]
        if gl >= 0 and gr >= 0:
            return gput(p, mul[gl][gr], trail, queue)
        if gp >= 0 and gl >= 0:
            return gput(r, mul[ginv[gl]][gp], trail, queue)
        if gp >= 0 and gr >= 0:
            return gput(l, mul[gp][ginv[gr]], trail, queue)
        return True

    def gpropagate(trail, queue):
        while queue:
            pos = queue.pop()
            for ci in gtouch[pos]:
                if not gprocess(ci, trail, queue):
                    return False
        return True

    def gsolve():
        pos = -1
        for i in gorder:
            if gval[i] < 0:
                pos = i
                break
        if pos < 0:
            gsols.append(tuple(gval))
            return
        for val in range(m):
            trail: list[int] = []
            queue: list[int] = []
            gput(pos, val, trail, queue)
            if gpropagate(trail, queue):
                gsolve()
            for p in trail:
                gval[p] = -1

    gsolve()

    # ---- set phase ----
    # vertex relations force equal set labels, merge those arcs up front
    parent = list(range(narcs))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p, l, r in products:
        for other in (l, r):
            rp, ro = find(p), find(other)
            if rp != ro:
                parent[max(rp, ro)] = min(rp, ro)
    reps = sorted({find(i) for i in range(narcs)})
    rep_index = {rep: k for k, rep in enumerate(reps)}
    cls = [rep_index[find(i)] for i in range(narcs)]
    ncls = len(reps)

    xcons = [(sign, cls[o], cls[ui], cls[uo], o) for sign, o, ui, uo in crossings]
    xtouch: list[list[int]] = [[] for _ in range(ncls)]
    for ci, (_, co, cui, cuo, _) in enumerate(xcons):
        for pos in {co, cui, cuo}:
            xtouch[pos].append(ci)
    xorder = _bfs_order(ncls, [(co, cui, cuo) for _, co, cui, cuo, _ in xcons])

    xval = [-1] * ncls
    solutions: list[tuple[int, ...]] = []

    def xput(pos, val, trail, queue):
        if xval[pos] >= 0:
            return xval[pos] == val
        xval[pos] = val
        trail.append(pos)
        queue.append(pos)
        return True

    def run_set_phase(gsol):
        def xprocess(ci, trail, queue):
            sign, co, cui, cuo, o = xcons[ci]
            y = xval[co]
            if y < 0:
                return True
            fwd = ops[gsol[o]] if sign > 0 else inv_ops[gsol[o]]
            bwd = inv_ops[gsol[o]] if sign > 0 else ops[gsol[o]]
            if xval[cui] >= 0 and not xput(cuo, fwd[xval[cui]][y], trail, queue):
                return False
            if xval[cuo] >= 0 and not xput(cui, bwd[xval[cuo]][y], trail, queue):
                return False
            return True

        def xpropagate(trail, queue):
            while queue:
                pos = queue.pop()
                for ci in xtouch[pos]:
                    if not xprocess(ci, trail, queue):
                        return False
            return True

        def xsolve():
            pos = -1
            for i in xorder:
                if xval[i] < 0:
                    pos = i
                    break
            if pos < 0:
                solutions.append(
                    tuple(gsol[i] * n + xval[cls[i]] for i in range(narcs))
                )
                return
            for val in range(n):
                trail: list[int] = []
                queue: list[int] = []
                xput(pos, val, trail, queue)
                if xpropagate(trail, queue):
                    xsolve()
                for p in trail:
                    xval[p] = -1

        xsolve()

    for gsol in gsols:
        run_set_phase(gsol)

    solutions.sort()
    out = []
    for sol in solutions:
        pairs = tuple((v // n + 1, v % n + 1) for v in sol)
        out.append(Coloring(arcs, pairs))
    return tuple(out)


def counting_invariant(f: GFamily, d: TrivalentDiagram) -> int:
    """Number of valid colorings of the diagram by the family."""
    return len(enumerate_colorings(f, d))


def image_subfamily(f: GFamily, c: Coloring) -> Subfamily:
    """Smallest subfamily containing every x component used by the coloring."""
    return subfamily_closure(f, {x for _, x in c.pairs})


def _gfamily_values(f: GFamily, colorings) -> PolyMultiset:
    cache: dict[frozenset[int], object] = {}
    values = []
    for c in colorings:
        sub = image_subfamily(f, c).subset
        poly = cache.get(sub)
        if poly is None:
            poly = gsubfamily_polynomial(f, sub)
            cache[sub] = poly
        values.append(poly)
    return PolyMultiset.from_values(values)


def _associated_values(f: GFamily, colorings) -> PolyMultiset:
    assoc = associated_quandle(f)
    closure_cache: dict[frozenset[int], frozenset[int]] = {}
    poly_cache: dict[frozenset[int], object] = {}
    values = []
    for c in colorings:
        seed = frozenset(assoc.encode(g, x) for g, x in c.pairs)
        closed = closure_cache.get(seed)
        if closed is None:
            closed = subquandle_closure(assoc.quandle, seed)
            closure_cache[seed] = closed
        poly = poly_cache.get(closed)
        if poly is None:
            poly = subquandle_polynomial(assoc.quandle, closed)
            poly_cache[closed] = poly
        values.append(poly)
    return PolyMultiset.from_values(values)


def enhancement_gfamily(f: GFamily, d: TrivalentDiagram) -> PolyMultiset:
    """Multiset of subfamily polynomials of the image subfamilies.

    One polynomial per coloring, computed with ambient counts, so the total
    multiplicity equals the counting invariant.
    """
    return _gfamily_values(f, enumerate_colorings(f, d))


def enhancement_associated(f: GFamily, d: TrivalentDiagram) -> PolyMultiset:
    """Multiset of subquandle polynomials of the image subquandles.

    For each coloring, the pairs (g, x) that actually occur are closed up
    inside the associated quandle, and that subquandle's polynomial (with
    ambient counts) is collected.
    """
    return _associated_values(f, enumerate_colorings(f, d))


@dataclass(frozen=True)
class InvariantSummary:
    count: int
    gfamily: PolyMultiset
    associated: PolyMultiset


def all_invariants(f: GFamily, d: TrivalentDiagram) -> InvariantSummary:
    colorings = enumerate_colorings(f, d)
    return InvariantSummary(
        len(colorings),
        _gfamily_values(f, colorings),
        _associated_values(f, colorings),
    )
