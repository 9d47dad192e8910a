"""Enumeration of all finite quandles of a given order up to isomorphism.

A quandle table is equivalent to its sequence of column permutations
f_1, ..., f_n (f_y sends x to x*y): each f_y fixes y, and right
self-distributivity is exactly the conjugation rule

  f_{f_z(y)} = f_z f_y f_z^-1.

The generator assigns the columns one by one, propagating the conjugation
rule to force or refute later columns, and collapses the surviving tables
to canonical form by minimizing the flattened table over all relabelings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .finite_algebra import FiniteQuandle, validate_quandle
from .polynomial import TwoVarPoly, quandle_polynomial, serialize_poly


@lru_cache(maxsize=None)
def _perm_arrays(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inv = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    inv[rows, perms] = np.arange(n)[None, :]
    return perms, inv


def canonical_form(table) -> str:
    """Lex smallest flattened table over simultaneous relabelings, as text.

    Two tables get the same canonical form exactly when the quandles are
    isomorphic.  Feasible for small orders (all n! relabelings are tried).
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        return ""
    t0 = np.array(rows, dtype=np.int64) - 1
    perms, inv = _perm_arrays(n)
    k = len(perms)
    gathered = t0[inv[:, :, None], inv[:, None, :]]
    relabeled = perms[np.arange(k)[:, None, None], gathered]
    flat = relabeled.reshape(k, n * n)
    order = np.lexsort(flat.T[::-1])
    best = flat[order[0]]
    return " ".join(str(v + 1) for v in best)


@dataclass(frozen=True)
class CensusEntry:
    quandle: FiniteQuandle
    polynomial: TwoVarPoly
    canonical_form: str


@dataclass(frozen=True)
class ClassificationReport:
    """Whether the polynomial separates the classes of one order.

    collisions lists 1-based (i, j) positions in census order of distinct
    classes sharing a polynomial, i < j.
    """

    order: int
    injective: bool
    collisions: tuple[tuple[int, int], ...]


def _labeled_tables(n: int):
    """All quandle tables on 1..n, one list of column permutations each."""
    if n == 0:
        yield ()
        return
    idperm = tuple(range(n))
    pool = {
        y: [p for p in itertools.permutations(range(n)) if p[y] == y] for y in range(n)
    }
    inv_cache: dict[tuple, tuple] = {}

    def perm_inv(p):
        q = inv_cache.get(p)
        if q is None:
            q = [0] * n
            for i, v in enumerate(p):
                q[v] = i
            q = tuple(q)
            inv_cache[p] = q
        return q

    cols: list = [None] * n
    results = []

    def conj(pz, py):
        pzi = perm_inv(pz)
        return tuple(pz[py[pzi[i]]] for i in range(n))

    def check_pair(y: int, z: int, trail: list[int]) -> bool:
        # f_{f_z(y)} = f_z f_y f_z^-1, both columns y and z set
        i = cols[z][y]
        want = conj(cols[z], cols[y])
        if cols[i] is not None:
            return cols[i] == want
        if want[i] != i:
            return False
        cols[i] = want
        trail.append(i)
        return True

    def propagate_from(y: int, trail: list[int]) -> bool:
        stack = [y]
        while stack:
            a = stack.pop()
            before = len(trail)
            for b in range(n):
                if cols[b] is None or b == a:
                    continue
                if not check_pair(a, b, trail) or not check_pair(b, a, trail):
                    return False
            for i in trail[before:]:
                stack.append(i)
        return True

    def fill(y: int) -> None:
        while y < n and cols[y] is not None:
            y += 1
        if y == n:
            results.append(tuple(tuple(cols[c][x] + 1 for c in range(n)) for x in range(n)))
            return
        for p in pool[y] if n > 1 else [idperm]:
            cols[y] = p
            trail: list[int] = []
            if propagate_from(y, trail):
                fill(y + 1)
            for i in trail:
                cols[i] = None
            cols[y] = None

    fill(0)
    yield from results


@lru_cache(maxsize=None)
def enumerate_quandles(n: int) -> tuple[CensusEntry, ...]:
    """One entry per isomorphism class of quandles of order n.

    Entries are sorted by canonical form; each quandle is the canonical
    representative of its class.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    seen: dict[str, tuple] = {}
    for table in _labeled_tables(n):
        key = canonical_form(table)
        if key not in seen:
            seen[key] = table
    entries = []
    for key in sorted(seen, key=lambda k: [int(v) for v in k.split()] if k else []):
        canon = tuple(
            tuple(int(v) for v in key.split()[i * n : (i + 1) * n]) for i in range(n)
        )
        q = FiniteQuandle.from_table(canon if n else ())
        entries.append(CensusEntry(q, quandle_polynomial(q), key))
    return tuple(entries)


def enumerate_quandles_naive(n: int) -> frozenset[str]:
    """Canonical forms of all order-n quandles found by filtering every table.

    Exhausts all diagonal-fixing column permutation choices and keeps the
    self-distributive ones.  Only practical for n <= 4; used to cross-check
    the pruned generator.
    """
    forms = set()
    if n == 0:
        return frozenset({""})
    pools = [
        [p for p in itertools.permutations(range(1, n + 1)) if p[y] == y + 1]
        for y in range(n)
    ]
    for combo in itertools.product(*pools):
        table = tuple(tuple(combo[y][x] for y in range(n)) for x in range(n))
        if validate_quandle(table).valid:
            forms.add(canonical_form(table))
    return frozenset(forms)


def polynomial_classification(n: int) -> ClassificationReport:
    """Check whether the quandle polynomial separates the order-n classes."""
    entries = enumerate_quandles(n)
    by_poly: dict[tuple, list[int]] = {}
    for i, e in enumerate(entries, start=1):
        by_poly.setdefault(e.polynomial.terms, []).append(i)
    collisions = []
    for _, members in sorted(by_poly.items()):
        for i, j in itertools.combinations(members, 2):
            collisions.append((i, j))
    collisions.sort()
    return ClassificationReport(n, not collisions, tuple(collisions))


def write_census(n: int, directory) -> list[Path]:
    """Write one quandle file per class plus an index file.

    The index maps each canonical form to its polynomial, tab separated,
    one class per line in census order.  Returns the paths written.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    entries = enumerate_quandles(n)
    written = []
    index_lines = []
    for i, e in enumerate(entries, start=1):
        path = directory / f"quandle_{n}_{i}.qnd"
        rows = [str(n)]
        for row in e.quandle.table:
            rows.append(" ".join(str(v) for v in row))
        path.write_text("\n".join(rows) + "\n")
        written.append(path)
        index_lines.append(f"{e.canonical_form}\t{serialize_poly(e.polynomial)}")
    index = directory / f"index_{n}.tsv"
    index.write_text("\n".join(index_lines) + "\n" if index_lines else "")
    written.append(index)
    return written
