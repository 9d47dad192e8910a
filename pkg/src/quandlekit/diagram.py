"""Diagrams of spatial trivalent graphs with an admissible orientation.

A diagram is a set of arcs together with crossings and trivalent vertices.
Arcs are maximal strand pieces: they end where they pass under a crossing
or meet a vertex.  Passing over a crossing does not end an arc.  Every
vertex has either two incoming arcs and one outgoing, or one incoming and
two outgoing; the order of the two parallel slots is part of the data.
Closed curves that never go under anything are declared as loops.

Text form, one record per line, '#' starts a comment, any line order:

  loop <arc>
  vertex in2 <a> <b> out <c>
  vertex in <a> out2 <b> <c>
  xing <+|-> over <o> under <u_in> <u_out>
"""

from __future__ import annotations

from dataclasses import dataclass

TWO_IN_ONE_OUT = "two_in_one_out"
ONE_IN_TWO_OUT = "one_in_two_out"


class DiagramSyntaxError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DiagramStructureError(ValueError):
    """An arc fails to have exactly one start and one end (or a loop has any)."""

    def __init__(self, name: str, arc: int):
        self.name = name
        self.arc = arc
        super().__init__(f"{name}: arc {arc}")


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class Vertex:
    kind: str
    arcs: tuple[int, int, int]

    @property
    def ins(self) -> tuple[int, ...]:
        return self.arcs[:2] if self.kind == TWO_IN_ONE_OUT else self.arcs[:1]

    @property
    def outs(self) -> tuple[int, ...]:
        return self.arcs[2:] if self.kind == TWO_IN_ONE_OUT else self.arcs[1:]


@dataclass(frozen=True)
class TrivalentDiagram:
    arcs: tuple[int, ...]
    crossings: tuple[Crossing, ...]
    vertices: tuple[Vertex, ...]
    loops: frozenset[int]

    @classmethod
    def from_parts(cls, crossings, vertices, loops) -> "TrivalentDiagram":
        crossings = tuple(crossings)
        vertices = tuple(vertices)
        loops = frozenset(loops)
        mentioned = set(loops)
        for c in crossings:
            mentioned.update((c.over, c.under_in, c.under_out))
        for v in vertices:
            mentioned.update(v.arcs)
        starts = {a: 0 for a in mentioned}
        ends = {a: 0 for a in mentioned}
        for c in crossings:
            ends[c.under_in] += 1
            starts[c.under_out] += 1
        for v in vertices:
            for a in v.ins:
                ends[a] += 1
            for a in v.outs:
                starts[a] += 1
        for a in sorted(mentioned):
            if a in loops:
                if starts[a] or ends[a]:
                    raise DiagramStructureError("loop_with_endpoints", a)
            else:
                if starts[a] == 0:
                    raise DiagramStructureError("missing_start", a)
                if starts[a] > 1:
                    raise DiagramStructureError("multiple_start", a)
                if ends[a] == 0:
                    raise DiagramStructureError("missing_end", a)
                if ends[a] > 1:
                    raise DiagramStructureError("multiple_end", a)
        return cls(tuple(sorted(mentioned)), crossings, vertices, loops)

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        """Arcs grouped by the crossing/vertex incidences linking them."""
        parent = {a: a for a in self.arcs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        for c in self.crossings:
            union(c.over, c.under_in)
            union(c.over, c.under_out)
        for v in self.vertices:
            union(v.arcs[0], v.arcs[1])
            union(v.arcs[0], v.arcs[2])
        groups: dict[int, list[int]] = {}
        for a in self.arcs:
            groups.setdefault(find(a), []).append(a)
        return tuple(tuple(g) for _, g in sorted(groups.items()))


def parse_diagram(text: str) -> TrivalentDiagram:
    crossings: list[Crossing] = []
    vertices: list[Vertex] = []
    loops: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append((tok, col + 1))
            col += len(tok)

        def arc_at(i: int) -> int:
            if i >= len(tokens):
                raise DiagramSyntaxError(lineno, len(line) + 1, "missing arc id")
            tok, c = tokens[i]
            try:
                v = int(tok)
            except ValueError:
                raise DiagramSyntaxError(lineno, c, f"expected arc id, got {tok!r}") from None
            if v < 1:
                raise DiagramSyntaxError(lineno, c, f"arc ids are positive, got {v}")
            return v

        def expect(i: int, word: str):
            if i >= len(tokens) or tokens[i][0] != word:
                got = tokens[i][0] if i < len(tokens) else "end of line"
                c = tokens[i][1] if i < len(tokens) else len(line) + 1
                raise DiagramSyntaxError(lineno, c, f"expected {word!r}, got {got!r}")

        def exact_length(k: int):
            if len(tokens) > k:
                tok, c = tokens[k]
                raise DiagramSyntaxError(lineno, c, f"unexpected token {tok!r}")

        head, head_col = tokens[0]
        if head == "loop":
            loops.append(arc_at(1))
            exact_length(2)
        elif head == "vertex":
            if len(tokens) < 2:
                raise DiagramSyntaxError(lineno, len(line) + 1, "incomplete vertex")
            mode = tokens[1][0]
            if mode == "in2":
                a, b = arc_at(2), arc_at(3)
                expect(4, "out")
                c = arc_at(5)
                exact_length(6)
                vertices.append(Vertex(TWO_IN_ONE_OUT, (a, b, c)))
            elif mode == "in":
                a = arc_at(2)
                expect(3, "out2")
                b, c = arc_at(4), arc_at(5)
                exact_length(6)
                vertices.append(Vertex(ONE_IN_TWO_OUT, (a, b, c)))
            else:
                raise DiagramSyntaxError(
                    lineno,
                    tokens[1][1],
                    "vertex must read 'in2 a b out c' or 'in a out2 b c'; "
                    "one or two incoming arcs are required, sources and sinks "
                    "are not admissible",
                )
        elif head == "xing":
            if len(tokens) < 2 or tokens[1][0] not in ("+", "-"):
                got = tokens[1][0] if len(tokens) > 1 else "end of line"
                c = tokens[1][1] if len(tokens) > 1 else len(line) + 1
                raise DiagramSyntaxError(lineno, c, f"expected '+' or '-', got {got!r}")
            sign = 1 if tokens[1][0] == "+" else -1
            expect(2, "over")
            over = arc_at(3)
            expect(4, "under")
            u_in, u_out = arc_at(5), arc_at(6)
            exact_length(7)
            crossings.append(Crossing(sign, over, u_in, u_out))
        else:
            raise DiagramSyntaxError(
                lineno, head_col, f"unknown record {head!r} (loop, vertex or xing)"
            )
    return TrivalentDiagram.from_parts(crossings, vertices, loops)


def diagram_to_text(d: TrivalentDiagram) -> str:
    lines = [f"loop {a}" for a in sorted(d.loops)]
    for v in d.vertices:
        a, b, c = v.arcs
        if v.kind == TWO_IN_ONE_OUT:
            lines.append(f"vertex in2 {a} {b} out {c}")
        else:
            lines.append(f"vertex in {a} out2 {b} {c}")
    for c in d.crossings:
        sign = "+" if c.sign > 0 else "-"
        lines.append(f"xing {sign} over {c.over} under {c.under_in} {c.under_out}")
    return "\n".join(lines) + "\n" if lines else ""


# ---------------------------------------------------------------------------
# moves that only add local complexity


@dataclass(frozen=True)
class R1Kink:
    """Insert a curl at the end of an arc (the arc crosses itself once)."""

    arc: int
    sign: int = 1
    handedness: str = "over_first"


@dataclass(frozen=True)
class R2Poke:
    """Push the end of arc_a under arc_b and straight back out."""

    arc_a: int
    arc_b: int
    orientation: str = "pos_first"


def _replace_end(crossings, vertices, arc: int, new_arc: int):
    """Rewrite the unique end role of arc to new_arc."""
    for i, c in enumerate(crossings):
        if c.under_in == arc:
            crossings[i] = Crossing(c.sign, c.over, new_arc, c.under_out)
            return
    for i, v in enumerate(vertices):
        if arc in v.ins:
            arcs = list(v.arcs)
            # the in slots come first, so the first occurrence is an in slot
            arcs[arcs.index(arc)] = new_arc
            vertices[i] = Vertex(v.kind, tuple(arcs))
            return
    raise ValueError(f"arc {arc} has no end role")


def apply_move(d: TrivalentDiagram, move) -> TrivalentDiagram:
    if isinstance(move, R1Kink):
        return _apply_r1(d, move)
    if isinstance(move, R2Poke):
        return _apply_r2(d, move)
    raise TypeError(f"unknown move {move!r}")


def _apply_r1(d: TrivalentDiagram, move: R1Kink) -> TrivalentDiagram:
    if move.arc not in d.arcs:
        raise ValueError(f"arc {move.arc} not in diagram")
    if move.sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if move.handedness not in ("over_first", "under_first"):
        raise ValueError("handedness must be 'over_first' or 'under_first'")
    crossings = list(d.crossings)
    vertices = list(d.vertices)
    loops = set(d.loops)
    if move.arc in loops:
        loops.remove(move.arc)
        crossings.append(Crossing(move.sign, move.arc, move.arc, move.arc))
    else:
        new_arc = max(d.arcs) + 1
        _replace_end(crossings, vertices, move.arc, new_arc)
        if move.handedness == "over_first":
            crossings.append(Crossing(move.sign, move.arc, move.arc, new_arc))
        else:
            crossings.append(Crossing(move.sign, new_arc, move.arc, new_arc))
    return TrivalentDiagram.from_parts(crossings, vertices, loops)


def _apply_r2(d: TrivalentDiagram, move: R2Poke) -> TrivalentDiagram:
    a, b = move.arc_a, move.arc_b
    if a not in d.arcs or b not in d.arcs:
        raise ValueError(f"arcs {a}, {b} must both be in the diagram")
    if a == b:
        raise ValueError("the poked arc and the over arc must be distinct")
    if move.orientation not in ("pos_first", "neg_first"):
        raise ValueError("orientation must be 'pos_first' or 'neg_first'")
    s1, s2 = (1, -1) if move.orientation == "pos_first" else (-1, 1)
    crossings = list(d.crossings)
    vertices = list(d.vertices)
    loops = set(d.loops)
    if a in loops:
        loops.remove(a)
        mid = max(d.arcs) + 1
        crossings.append(Crossing(s1, b, a, mid))
        crossings.append(Crossing(s2, b, mid, a))
    else:
        mid = max(d.arcs) + 1
        last = mid + 1
        _replace_end(crossings, vertices, a, last)
        crossings.append(Crossing(s1, b, a, mid))
        crossings.append(Crossing(s2, b, mid, last))
    return TrivalentDiagram.from_parts(crossings, vertices, loops)


# ---------------------------------------------------------------------------
# bundled diagrams

_BUILTIN_TEXT = {
    # one closed curve, no crossings
    "unknot": "loop 1\n",
    # two vertices joined by three parallel strands
    "theta": (
        "vertex in 3 out2 1 2\n"
        "vertex in2 1 2 out 3\n"
    ),
    # two closed curves joined by a bridge
    "handcuff": (
        "vertex in 1 out2 1 3\n"
        "vertex in2 3 2 out 2\n"
    ),
    # knotted handcuff with four positive crossings: the bridge clasps
    # each loop once
    "hk4_1": (
        "vertex in 2 out2 5 1\n"
        "vertex in2 4 7 out 3\n"
        "xing + over 1 under 6 7\n"
        "xing + over 7 under 1 2\n"
        "xing + over 5 under 3 4\n"
        "xing + over 4 under 5 6\n"
    ),
}

DIAGRAM_NAMES = tuple(sorted(_BUILTIN_TEXT))


def builtin(name: str) -> TrivalentDiagram:
    """One of the bundled diagrams; see DIAGRAM_NAMES for the keys."""
    if name not in _BUILTIN_TEXT:
        raise KeyError(f"unknown diagram {name!r}; available: {', '.join(DIAGRAM_NAMES)}")
    return parse_diagram(_BUILTIN_TEXT[name])
