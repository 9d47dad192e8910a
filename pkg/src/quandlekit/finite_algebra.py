"""Finite groups and finite quandles given by 1-based operation tables.

A quandle is a set X with a binary operation * such that

  (1) x*x = x for all x,
  (2) for each y the map x -> x*y is a bijection of X,
  (3) (x*y)*z = (x*z)*(y*z) for all x, y, z.

Tables are tuples of tuples of 1-based integers: table[x-1][y-1] = x*y.
The empty quandle (order 0) is allowed; groups must be nonempty.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class TableFormatError(ValueError):
    """Raised when a table is structurally malformed (shape or entry range)."""


class AxiomError(ValueError):
    """Raised when a structurally well-formed table violates the axioms."""

    def __init__(self, report: AxiomReport, what: str = "table"):
        self.report = report
        super().__init__(f"{what} violates axioms: {report.summary()}")


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check.

    violations is a tuple of (axiom_name, witness) pairs, where the witness
    is a tuple of 1-based indices.  For each violated axiom only the first
    witness in lexicographic scan order is recorded.  An empty violations
    tuple means the table is valid.
    """

    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.valid:
            return "valid"
        return "; ".join(f"{name} at {witness}" for name, witness in self.violations)


def _normalize_table(table, n: int | None = None):
    """Return table as a tuple of tuples of ints, checking shape and range.

    If n is given the table must be n x n; otherwise the size is taken from
    the number of rows.  Entries must lie in 1..n.
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if n is None:
        n = len(rows)
    if len(rows) != n:
        raise TableFormatError(f"expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise TableFormatError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row, start=1):
            if not 1 <= v <= n:
                raise TableFormatError(f"entry ({i},{j}) = {v} out of range 1..{n}")
    return rows


def validate_quandle(table) -> AxiomReport:
    """Check the three quandle axioms, returning a report.

    Witness conventions (all 1-based, first in lexicographic scan order):
      idempotence          (x,)        x*x != x
      right_invertibility  (y, x1, x2) column y repeats: x1*y = x2*y, x1 < x2
      self_distributivity  (x, y, z)   (x*y)*z != (x*z)*(y*z)

    Raises TableFormatError for malformed tables.
    """
    t = _normalize_table(table)
    n = len(t)
    violations = []
    for x in range(n):
        if t[x][x] != x + 1:
            violations.append(("idempotence", (x + 1,)))
            break
    for y in range(n):
        seen = {}
        hit = None
        for x in range(n):
            v = t[x][y]
            if v in seen:
                hit = ("right_invertibility", (y + 1, seen[v] + 1, x + 1))
                break
            seen[v] = x
        if hit:
            violations.append(hit)
            break
    done = False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x][y] - 1][z] != t[t[x][z] - 1][t[y][z] - 1]:
                    violations.append(("self_distributivity", (x + 1, y + 1, z + 1)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return AxiomReport(tuple(violations))


def validate_group(table) -> AxiomReport:
    """Check that a nonempty table is a group (Latin square + associativity).

    Witness conventions (1-based, first in scan order):
      row_permutation     (x, y1, y2)  row x repeats: x*y1 = x*y2
      column_permutation  (y, x1, x2)  column y repeats
      associativity       (a, b, c)    (a*b)*c != a*(b*c)
    """
    t = _normalize_table(table)
    n = len(t)
    if n == 0:
        raise TableFormatError("a group must have at least one element")
    violations = []
    for x in range(n):
        seen = {}
        hit = None
        for y in range(n):
            v = t[x][y]
            if v in seen:
                hit = ("row_permutation", (x + 1, seen[v] + 1, y + 1))
                break
            seen[v] = y
        if hit:
            violations.append(hit)
            break
    for y in range(n):
        seen = {}
        hit = None
        for x in range(n):
            v = t[x][y]
            if v in seen:
                hit = ("column_permutation", (y + 1, seen[v] + 1, x + 1))
                break
            seen[v] = x
        if hit:
            violations.append(hit)
            break
    done = False
    for a in range(n):
        for b in range(n):
            ab = t[a][b] - 1
            for c in range(n):
                if t[ab][c] != t[a][t[b][c] - 1]:
                    violations.append(("associativity", (a + 1, b + 1, c + 1)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return AxiomReport(tuple(violations))


@dataclass(frozen=True)
class FiniteQuandle:
    """A finite quandle with 1-based elements 1..order.

    inv_table holds the right inverse operation: inv_table[x-1][y-1] is the
    unique z with z*y = x.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    inv_table: tuple[tuple[int, ...], ...]

    @classmethod
    def from_table(cls, table) -> "FiniteQuandle":
        t = _normalize_table(table)
        report = validate_quandle(t)
        if not report.valid:
            raise AxiomError(report, "quandle table")
        n = len(t)
        inv = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                inv[t[x][y] - 1][y] = x + 1
        return cls(n, t, tuple(tuple(row) for row in inv))

    @property
    def elements(self) -> range:
        return range(1, self.order + 1)

    def op(self, x: int, y: int) -> int:
        return self.table[x - 1][y - 1]

    def inv_op(self, x: int, y: int) -> int:
        return self.inv_table[x - 1][y - 1]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group with 1-based elements, identity and inverses precomputed."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @classmethod
    def from_table(cls, table) -> "FiniteGroup":
        t = _normalize_table(table)
        report = validate_group(t)
        if not report.valid:
            raise AxiomError(report, "group table")
        n = len(t)
        identity = 0
        for e in range(n):
            if all(t[e][y] == y + 1 for y in range(n)):
                identity = e + 1
                break
        if not identity:
            raise AxiomError(AxiomReport((("identity", ()),)), "group table")
        inverse = [0] * n
        for a in range(n):
            for b in range(n):
                if t[a][b] == identity:
                    inverse[a] = b + 1
                    break
        return cls(n, t, identity, tuple(inverse))

    @property
    def elements(self) -> range:
        return range(1, self.order + 1)

    def mul(self, a: int, b: int) -> int:
        return self.table[a - 1][b - 1]

    def inv(self, a: int) -> int:
        return self.inverse[a - 1]


def is_kei(q: FiniteQuandle) -> bool:
    """True when the quandle is involutory: (x*y)*y = x for all x, y."""
    return q.table == q.inv_table


def orbit_decomposition(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """Partition of the elements into orbits of the maps x -> x*y and inverses.

    Returned as a tuple of sorted tuples, ordered by smallest member.
    """
    n = q.order
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(n):
        for y in range(n):
            a, b = find(x), find(q.table[x][y] - 1)
            if a != b:
                parent[b] = a
    orbits: dict[int, list[int]] = {}
    for x in range(n):
        orbits.setdefault(find(x), []).append(x + 1)
    return tuple(tuple(members) for _, members in sorted(orbits.items()))


def subquandle_closure(q: FiniteQuandle, seed) -> frozenset[int]:
    """Smallest subset containing seed closed under * and its right inverse."""
    current = set(seed)
    for x in current:
        if not 1 <= x <= q.order:
            raise ValueError(f"seed element {x} not in 1..{q.order}")
    while True:
        new = set()
        for x in current:
            for y in current:
                a = q.table[x - 1][y - 1]
                b = q.inv_table[x - 1][y - 1]
                if a not in current:
                    new.add(a)
                if b not in current:
                    new.add(b)
        if not new:
            return frozenset(current)
        current |= new


def _profiles(q: FiniteQuandle) -> list[tuple[int, int, int]]:
    # (column fixed points, row fixed points, orbit size) per element;
    # all three are preserved by isomorphisms.
    n = q.order
    orbit_size = {}
    for orbit in orbit_decomposition(q):
        for x in orbit:
            orbit_size[x] = len(orbit)
    out = []
    for x in range(n):
        c = sum(1 for y in range(n) if q.table[y][x] == y + 1)
        r = sum(1 for y in range(n) if q.table[x][y] == x + 1)
        out.append((c, r, orbit_size[x + 1]))
    return out


def are_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> tuple[int, ...] | None:
    """Return a quandle isomorphism q1 -> q2 as a tuple (image of 1, ...), or None.

    The search assigns images of 1, 2, ... in order and tries candidate
    images in ascending order, so the first isomorphism in lexicographic
    order is returned.  Candidates are restricted to elements with the same
    (column fixed points, row fixed points, orbit size) profile.
    """
    n = q1.order
    if n != q2.order:
        return None
    if n == 0:
        return ()
    p1, p2 = _profiles(q1), _profiles(q2)
    if sorted(p1) != sorted(p2):
        return None
    image = [0] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y] or p1[x] != p2[y]:
                continue
            image[x] = y
            used[y] = True
            ok = True
            for a in range(x + 1):
                for b in range(x + 1):
                    v = q1.table[a][b] - 1
                    w = q2.table[image[a]][image[b]] - 1
                    if v <= x:
                        if w != image[v]:
                            ok = False
                            break
                    elif used[w]:
                        # the product's image is still free, so it cannot be
                        # an element already used by the partial bijection
                        ok = False
                        break
                if not ok:
                    break
            if ok and extend(x + 1):
                return True
            used[y] = False
        return False

    if extend(0):
        return tuple(v + 1 for v in image)
    return None


# ---------------------------------------------------------------------------
# standard constructions


def trivial_quandle(n: int) -> FiniteQuandle:
    """x*y = x on n elements."""
    return FiniteQuandle.from_table(tuple(tuple(x for _ in range(n)) for x in range(1, n + 1)))


def dihedral_quandle(n: int) -> FiniteQuandle:
    """Core quandle of the cyclic group of order n: x*y = 2y - x mod n."""
    if n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    table = tuple(
        tuple((2 * y - x) % n + 1 for y in range(n)) for x in range(n)
    )
    return FiniteQuandle.from_table(table)


def conjugation_quandle(g: FiniteGroup, n: int = 1) -> FiniteQuandle:
    """x*y = y^-n x y^n on the elements of the group."""
    powers = []
    for y in g.elements:
        p = g.identity
        for _ in range(abs(n)):
            p = g.mul(p, y)
        if n < 0:
            p = g.inv(p)
        powers.append(p)
    table = tuple(
        tuple(g.mul(g.inv(powers[y - 1]), g.mul(x, powers[y - 1])) for y in g.elements)
        for x in g.elements
    )
    return FiniteQuandle.from_table(table)


def alexander_quandle(m: int, t: int) -> FiniteQuandle:
    """x*y = t x + (1-t) y on Z_m; t must be a unit mod m."""
    if m < 1:
        raise ValueError("alexander quandle needs modulus >= 1")
    t %= m
    if _gcd(t, m) != 1:
        raise ValueError(f"t = {t} is not a unit mod {m}")
    table = tuple(
        tuple((t * x + (1 - t) * y) % m + 1 for y in range(m)) for x in range(m)
    )
    return FiniteQuandle.from_table(table)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with elements 1..n standing for residues 0..n-1."""
    table = tuple(tuple((a + b) % n + 1 for b in range(n)) for a in range(n))
    return FiniteGroup.from_table(table)


def symmetric_group(n: int) -> FiniteGroup:
    """The group of permutations of n letters, elements ordered lexicographically.

    The product a*b acts by b first, then a, matching composition of the
    permutations as functions written on the left.
    """
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i + 1 for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(a[b[i]] for i in range(n))] for b in perms) for a in perms
    )
    return FiniteGroup.from_table(table)


def standard_quandle(kind: str, *params) -> FiniteQuandle:
    """Dispatch on a construction name: trivial, dihedral, conj, alexander."""
    if kind == "trivial":
        return trivial_quandle(*params)
    if kind == "dihedral":
        return dihedral_quandle(*params)
    if kind == "conj":
        return conjugation_quandle(*params)
    if kind == "alexander":
        return alexander_quandle(*params)
    raise ValueError(f"unknown quandle kind {kind!r}")


# ---------------------------------------------------------------------------
# file format: first line is the order, then one row per line, '#' comments


class FileFormatError(ValueError):
    """Raised when a table file cannot be parsed."""


def parse_table_text(text: str):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FileFormatError("empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FileFormatError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 0:
        raise FileFormatError(f"order must be nonnegative, got {n}")
    if len(lines) != n + 1:
        raise FileFormatError(f"expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        try:
            row = tuple(int(v) for v in line.split())
        except ValueError:
            raise FileFormatError(f"row {i} is not a list of integers: {line!r}") from None
        rows.append(row)
    try:
        return _normalize_table(rows, n)
    except TableFormatError as e:
        raise FileFormatError(str(e)) from None


def quandle_from_text(text: str) -> FiniteQuandle:
    return FiniteQuandle.from_table(parse_table_text(text))


def group_from_text(text: str) -> FiniteGroup:
    return FiniteGroup.from_table(parse_table_text(text))


def table_to_text(table) -> str:
    rows = tuple(tuple(row) for row in table)
    out = [str(len(rows))]
    for row in rows:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def quandle_to_text(q: FiniteQuandle) -> str:
    return table_to_text(q.table)


def group_to_text(g: FiniteGroup) -> str:
    return table_to_text(g.table)
