"""G-families of quandles and their associated quandles.

A G-family assigns a quandle operation *_g on a fixed set X to every
element g of a finite group G, subject to

  x *_e y = x                      (e the group identity)
  x *_{gh} y = (x *_g y) *_h y
  (x *_g y) *_h z = (x *_h z) *_{h^-1 g h} (y *_h z)

Each *_g is itself required to be a quandle operation.  The associated
quandle lives on the pairs (g, x) with

  (g, x) * (h, y) = (h^-1 g h, x *_h y)

encoded as 1-based indices (g - 1) * n + x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_algebra import (
    AxiomError,
    AxiomReport,
    FileFormatError,
    FiniteGroup,
    FiniteQuandle,
    TableFormatError,
    _normalize_table,
    is_kei,
    table_to_text,
    validate_quandle,
)


@dataclass(frozen=True)
class GFamily:
    """A validated G-family: one quandle per group element, shared set size."""

    group: FiniteGroup
    set_size: int
    ops: tuple[FiniteQuandle, ...]

    @classmethod
    def from_tables(cls, group: FiniteGroup, op_tables) -> "GFamily":
        tables = tuple(op_tables)
        if len(tables) != group.order:
            raise TableFormatError(
                f"expected {group.order} operation tables, got {len(tables)}"
            )
        n = len(tables[0]) if tables else 0
        report = validate_gfamily(group, tables)
        if not report.valid:
            raise AxiomError(report, "G-family")
        ops = tuple(FiniteQuandle.from_table(t) for t in tables)
        return cls(group, n, ops)

    def op(self, g: int, x: int, y: int) -> int:
        return self.ops[g - 1].table[x - 1][y - 1]

    def inv_op(self, g: int, x: int, y: int) -> int:
        return self.ops[g - 1].inv_table[x - 1][y - 1]


def validate_gfamily(group: FiniteGroup, op_tables) -> AxiomReport:
    """Check the G-family axioms over a validated group.

    Per-operation quandle violations are reported with the group element
    prepended to the witness.  Family-level axioms and witnesses:

      identity_trivial      (x, y)           x *_e y != x
      product_rule          (g, h, x, y)     x *_{gh} y != (x *_g y) *_h y
      conjugation_rule      (g, h, x, y, z)  see module docstring

    For each axiom only the first witness in scan order is kept.
    """
    tables = tuple(_normalize_table(t) for t in op_tables)
    m = group.order
    if len(tables) != m:
        raise TableFormatError(f"expected {m} operation tables, got {len(tables)}")
    n = len(tables[0]) if tables else 0
    for i, t in enumerate(tables, start=1):
        if len(t) != n:
            raise TableFormatError(f"operation table {i} has size {len(t)}, expected {n}")
    violations = []
    for g, t in enumerate(tables, start=1):
        rep = validate_quandle(t)
        for name, witness in rep.violations:
            violations.append((name, (g,) + witness))
    e = group.identity
    hit = None
    for x in range(n):
        for y in range(n):
            if tables[e - 1][x][y] != x + 1:
                hit = ("identity_trivial", (x + 1, y + 1))
                break
        if hit:
            break
    if hit:
        violations.append(hit)
    hit = None
    for g in range(1, m + 1):
        for h in range(1, m + 1):
            gh = group.mul(g, h)
            tg, th, tgh = tables[g - 1], tables[h - 1], tables[gh - 1]
            for x in range(n):
                for y in range(n):
                    if tgh[x][y] != th[tg[x][y] - 1][y]:
                        hit = ("product_rule", (g, h, x + 1, y + 1))
                        break
                if hit:
                    break
            if hit:
                break
        if hit:
            break
    if hit:
        violations.append(hit)
    hit = None
    for g in range(1, m + 1):
        for h in range(1, m + 1):
            k = group.mul(group.mul(group.inv(h), g), h)
            tg, th, tk = tables[g - 1], tables[h - 1], tables[k - 1]
            for x in range(n):
                for y in range(n):
                    a = tg[x][y] - 1
                    for z in range(n):
                        if th[a][z] != tk[th[x][z] - 1][th[y][z] - 1]:
                            hit = ("conjugation_rule", (g, h, x + 1, y + 1, z + 1))
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                break
        if hit:
            break
    if hit:
        violations.append(hit)
    return AxiomReport(tuple(violations))


def kei_to_z2_family(k: FiniteQuandle) -> GFamily:
    """Complete an involutory quandle to a family over the two-element group.

    The identity acts trivially and the other group element acts by the
    given operation.  Raises ValueError when the quandle is not involutory.
    """
    if not is_kei(k):
        raise ValueError("quandle is not involutory, cannot form a Z2-family")
    z2 = FiniteGroup.from_table(((1, 2), (2, 1)))
    trivial = tuple(tuple(x for _ in range(k.order)) for x in range(1, k.order + 1))
    return GFamily.from_tables(z2, (trivial, k.table))


@dataclass(frozen=True)
class AssociatedQuandle:
    """Quandle on the pairs (g, x), with the encoding (g - 1) * n + x."""

    quandle: FiniteQuandle
    group_order: int
    set_size: int

    def encode(self, g: int, x: int) -> int:
        return (g - 1) * self.set_size + x

    def decode(self, i: int) -> tuple[int, int]:
        g, x = divmod(i - 1, self.set_size)
        return g + 1, x + 1

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (g, x)
            for g in range(1, self.group_order + 1)
            for x in range(1, self.set_size + 1)
        )


def associated_quandle(f: GFamily) -> AssociatedQuandle:
    """Build the quandle on pairs (g, x) from a validated family."""
    m, n = f.group.order, f.set_size
    size = m * n
    table = [[0] * size for _ in range(size)]
    for g in range(1, m + 1):
        for x in range(1, n + 1):
            row = (g - 1) * n + x - 1
            for h in range(1, m + 1):
                conj = f.group.mul(f.group.mul(f.group.inv(h), g), h)
                for y in range(1, n + 1):
                    col = (h - 1) * n + y - 1
                    table[row][col] = (conj - 1) * n + f.op(h, x, y)
    q = FiniteQuandle.from_table(tuple(tuple(r) for r in table))
    return AssociatedQuandle(q, m, n)


@dataclass(frozen=True)
class Subfamily:
    """A subset of the family's underlying set closed under every operation."""

    parent: GFamily
    subset: frozenset[int]


def is_subfamily(f: GFamily, subset) -> bool:
    """True when subset is closed under x *_g y for all g and x, y in it."""
    sub = frozenset(subset)
    for x in sub:
        if not 1 <= x <= f.set_size:
            return False
    for op in f.ops:
        for x in sub:
            for y in sub:
                if op.table[x - 1][y - 1] not in sub:
                    return False
    return True


def subfamily_closure(f: GFamily, seed) -> Subfamily:
    """Smallest subfamily containing seed.

    Closure under every *_g suffices: the right inverse of *_g is *_{g^-1},
    which is itself in the family.
    """
    current = set(seed)
    for x in current:
        if not 1 <= x <= f.set_size:
            raise ValueError(f"seed element {x} not in 1..{f.set_size}")
    while True:
        new = set()
        for op in f.ops:
            for x in current:
                for y in current:
                    v = op.table[x - 1][y - 1]
                    if v not in current:
                        new.add(v)
        if not new:
            return Subfamily(f, frozenset(current))
        current |= new


# ---------------------------------------------------------------------------
# file format: group block in the group file format, then one block of n
# rows per group element, blocks separated by blank lines, '#' comments


def parse_family_blocks(text: str) -> tuple[tuple, tuple]:
    """Structural parse of a family file: (group_table, op_tables).

    Checks only the block layout and entry ranges, not the axioms, so a
    caller can run the validators itself and report violations.
    """
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(line)
    if not blocks[-1]:
        blocks.pop()
    if not blocks:
        raise FileFormatError("empty family file")
    group_lines = blocks[0]
    try:
        m = int(group_lines[0])
    except ValueError:
        raise FileFormatError(
            f"first line must be the group order, got {group_lines[0]!r}"
        ) from None
    if len(group_lines) != m + 1:
        raise FileFormatError(f"group block needs {m} rows, got {len(group_lines) - 1}")
    try:
        group_table = tuple(tuple(int(v) for v in line.split()) for line in group_lines[1:])
    except ValueError:
        raise FileFormatError("group block contains a non-integer entry") from None
    try:
        group_table = _normalize_table(group_table, m)
    except TableFormatError as e:
        raise FileFormatError(f"group block: {e}") from None
    op_blocks = blocks[1:]
    if len(op_blocks) != m:
        raise FileFormatError(f"expected {m} operation blocks, got {len(op_blocks)}")
    tables = []
    for i, block in enumerate(op_blocks, start=1):
        try:
            rows = tuple(tuple(int(v) for v in line.split()) for line in block)
        except ValueError:
            raise FileFormatError(f"operation block {i} contains a non-integer entry") from None
        tables.append(rows)
    n = len(tables[0][0]) if tables and tables[0] else 0
    for i, rows in enumerate(tables, start=1):
        if len(rows) != n or any(len(r) != n for r in rows):
            raise FileFormatError(f"operation block {i} is not {n}x{n}")
        try:
            _normalize_table(rows, n)
        except TableFormatError as e:
            raise FileFormatError(f"operation block {i}: {e}") from None
    return group_table, tuple(tables)


def family_from_text(text: str) -> GFamily:
    group_table, op_tables = parse_family_blocks(text)
    try:
        group = FiniteGroup.from_table(group_table)
    except TableFormatError as e:
        raise FileFormatError(str(e)) from None
    return GFamily.from_tables(group, op_tables)


def family_to_text(f: GFamily) -> str:
    parts = [table_to_text(f.group.table).rstrip("\n")]
    for op in f.ops:
        parts.append("\n".join(" ".join(str(v) for v in row) for row in op.table))
    return "\n\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# bundled families used by the test fixtures and demos

_Z2 = ((1, 2), (2, 1))
_Z3 = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
_S3 = (
    (1, 2, 3, 4, 5, 6),
    (2, 1, 5, 6, 3, 4),
    (3, 6, 1, 5, 4, 2),
    (4, 5, 6, 1, 2, 3),
    (5, 4, 2, 3, 6, 1),
    (6, 3, 4, 2, 1, 5),
)

_DIHEDRAL3 = ((1, 3, 2), (3, 2, 1), (2, 1, 3))
_SWAP13 = ((1, 3, 1, 1), (2, 2, 2, 2), (3, 1, 3, 3), (4, 4, 4, 4))
_KLEIN_A = ((1, 3, 4, 2), (4, 2, 1, 3), (2, 4, 3, 1), (3, 1, 2, 4))
_KLEIN_B = ((1, 4, 2, 3), (3, 2, 4, 1), (4, 1, 3, 2), (2, 3, 1, 4))
_S34_B = ((1, 1, 2, 2), (2, 2, 1, 1), (4, 4, 3, 3), (3, 3, 4, 4))
_S34_C = ((1, 3, 1, 3), (4, 2, 4, 2), (3, 1, 3, 1), (2, 4, 2, 4))
_S34_D = ((1, 4, 4, 1), (3, 2, 2, 3), (2, 3, 3, 2), (4, 1, 1, 4))


def _trivial_table(n: int):
    return tuple(tuple(x for _ in range(n)) for x in range(1, n + 1))


def _builtin_tables() -> dict[str, tuple[tuple, tuple]]:
    return {
        # Z2 acting on three elements, the non-identity op the dihedral quandle
        "z2_3": (_Z2, (_trivial_table(3), _DIHEDRAL3)),
        # Z2 acting on four elements, the non-identity op swapping 1 and 3
        # when acting by 2
        "z2_4": (_Z2, (_trivial_table(4), _SWAP13)),
        # Z3 acting on four elements by an order-3 symmetry
        "z3_4": (_Z3, (_trivial_table(4), _KLEIN_A, _KLEIN_B)),
        # S3 acting on three elements: transpositions act dihedrally,
        # even permutations act trivially
        "s3_3": (
            _S3,
            (
                _trivial_table(3),
                _DIHEDRAL3,
                _DIHEDRAL3,
                _DIHEDRAL3,
                _trivial_table(3),
                _trivial_table(3),
            ),
        ),
        # S3 acting faithfully on four elements
        "s3_4": (_S3, (_trivial_table(4), _S34_B, _S34_C, _S34_D, _KLEIN_A, _KLEIN_B)),
    }


FAMILY_NAMES = tuple(sorted(_builtin_tables()))


def builtin_family(name: str) -> GFamily:
    """One of the bundled families; see FAMILY_NAMES for the keys."""
    tables = _builtin_tables()
    if name not in tables:
        raise KeyError(f"unknown family {name!r}; available: {', '.join(FAMILY_NAMES)}")
    group_table, op_tables = tables[name]
    return GFamily.from_tables(FiniteGroup.from_table(group_table), op_tables)
