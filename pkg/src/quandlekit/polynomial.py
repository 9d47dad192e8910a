"""Two-variable polynomial invariants of quandles and G-families.

For a quandle element x, c(x) counts the elements fixed by acting with x
(entries y with y*x = y) and r(x) counts the elements x is fixed by
(entries y with x*y = x).  The quandle polynomial sums t^c(x) s^r(x) over
all elements.  For a G-family the same count is taken per group element,
collected into a tuple of polynomials indexed by the group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .finite_algebra import FiniteQuandle


@dataclass(frozen=True)
class TwoVarPoly:
    """Polynomial in t and s with integer coefficients.

    terms is the canonical form: (t_exp, s_exp, coeff) triples sorted by
    t exponent descending, then s exponent descending, zero coefficients
    dropped.  The terms tuple doubles as a sort key for multisets.
    """

    terms: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict[tuple[int, int], int]) -> "TwoVarPoly":
        terms = tuple(
            (a, b, c)
            for (a, b), c in sorted(coeffs.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
            if c != 0
        )
        return cls(terms)

    @classmethod
    def monomial(cls, t_exp: int, s_exp: int, coeff: int = 1) -> "TwoVarPoly":
        return cls.from_dict({(t_exp, s_exp): coeff})

    @classmethod
    def zero(cls) -> "TwoVarPoly":
        return cls(())

    def __add__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        coeffs: dict[tuple[int, int], int] = {}
        for a, b, c in self.terms + other.terms:
            coeffs[(a, b)] = coeffs.get((a, b), 0) + c
        return TwoVarPoly.from_dict(coeffs)

    def evaluate(self, t_val: int, s_val: int) -> int:
        return sum(c * t_val**a * s_val**b for a, b, c in self.terms)

    def sort_key(self):
        return self.terms

    def __str__(self) -> str:
        return serialize_poly(self)


@dataclass(frozen=True)
class GroupRingPoly:
    """A tuple of two-variable polynomials, one slot per group element."""

    slots: tuple[TwoVarPoly, ...]

    def evaluate(self, t_val: int, s_val: int) -> tuple[int, ...]:
        return tuple(p.evaluate(t_val, s_val) for p in self.slots)

    def sort_key(self):
        return tuple(p.terms for p in self.slots)

    def __str__(self) -> str:
        return serialize_poly(self)


@dataclass(frozen=True)
class PolyMultiset:
    """Multiset of polynomial values (all TwoVarPoly or all GroupRingPoly).

    entries holds (value, multiplicity) pairs sorted by the value's sort key.
    """

    entries: tuple[tuple[object, int], ...] = ()

    @classmethod
    def from_values(cls, values) -> "PolyMultiset":
        counts: dict[object, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        entries = tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))
        return cls(entries)

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def __str__(self) -> str:
        return serialize_multiset(self)


# ---------------------------------------------------------------------------
# counting


def cr_counts(q: FiniteQuandle, x: int) -> tuple[int, int]:
    """(c, r) for element x: fixed entries in column x and in row x."""
    if not 1 <= x <= q.order:
        raise ValueError(f"element {x} not in 1..{q.order}")
    n = q.order
    c = sum(1 for y in range(n) if q.table[y][x - 1] == y + 1)
    r = sum(1 for y in range(n) if q.table[x - 1][y] == x)
    return c, r


def quandle_polynomial(q: FiniteQuandle) -> TwoVarPoly:
    """Sum of t^c(x) s^r(x) over all elements of the quandle."""
    coeffs: dict[tuple[int, int], int] = {}
    for x in q.elements:
        key = cr_counts(q, x)
        coeffs[key] = coeffs.get(key, 0) + 1
    return TwoVarPoly.from_dict(coeffs)


def subquandle_polynomial(q: FiniteQuandle, sub) -> TwoVarPoly:
    """Sum of t^c(x) s^r(x) over x in sub, with c and r counted in all of q.

    sub must be closed under the operation; raises ValueError otherwise.
    """
    subset = frozenset(sub)
    for x in subset:
        if not 1 <= x <= q.order:
            raise ValueError(f"element {x} not in 1..{q.order}")
    for x in subset:
        for y in subset:
            if q.table[x - 1][y - 1] not in subset:
                raise ValueError(f"subset not closed: {x}*{y} = {q.table[x - 1][y - 1]}")
    coeffs: dict[tuple[int, int], int] = {}
    for x in subset:
        key = cr_counts(q, x)
        coeffs[key] = coeffs.get(key, 0) + 1
    return TwoVarPoly.from_dict(coeffs)


def gfamily_polynomial(f) -> GroupRingPoly:
    """Per-group-element quandle polynomial of a G-family."""
    return GroupRingPoly(tuple(quandle_polynomial(op) for op in f.ops))


def gsubfamily_polynomial(f, sub) -> GroupRingPoly:
    """Polynomial of a subfamily, counting c and r in the ambient family.

    sub may be a Subfamily or a bare subset of 1..n; it must be closed under
    every operation of the family.
    """
    subset = frozenset(getattr(sub, "subset", sub))
    for x in subset:
        if not 1 <= x <= f.set_size:
            raise ValueError(f"element {x} not in 1..{f.set_size}")
    for g in f.group.elements:
        t = f.ops[g - 1].table
        for x in subset:
            for y in subset:
                if t[x - 1][y - 1] not in subset:
                    raise ValueError(
                        f"subset not closed under op {g}: {x},{y} -> {t[x - 1][y - 1]}"
                    )
    slots = []
    for g in f.group.elements:
        coeffs: dict[tuple[int, int], int] = {}
        for x in subset:
            key = cr_counts(f.ops[g - 1], x)
            coeffs[key] = coeffs.get(key, 0) + 1
        slots.append(TwoVarPoly.from_dict(coeffs))
    return GroupRingPoly(tuple(slots))


# ---------------------------------------------------------------------------
# text form
#
# Terms print as c t^a s^b with coefficient 1 omitted, exponent 1 omitted
# and a variable omitted entirely at exponent 0.  Tuples are bracketed and
# comma separated; multisets are brace wrapped "mult x value" entries sorted
# by the value's canonical key.


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed."""


def _term_str(a: int, b: int, c: int) -> str:
    vars_part = ""
    if a == 1:
        vars_part += "t"
    elif a != 0:
        vars_part += f"t^{a}"
    if b == 1:
        vars_part += "s"
    elif b != 0:
        vars_part += f"s^{b}"
    if not vars_part:
        return str(c)
    if c == 1:
        return vars_part
    return f"{c}{vars_part}"


def _poly_str(p: TwoVarPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for i, (a, b, c) in enumerate(p.terms):
        if i == 0:
            parts.append(_term_str(a, b, c) if c > 0 else "-" + _term_str(a, b, -c))
        elif c > 0:
            parts.append("+" + _term_str(a, b, c))
        else:
            parts.append("-" + _term_str(a, b, -c))
    return "".join(parts)


def serialize_poly(p) -> str:
    if isinstance(p, TwoVarPoly):
        return _poly_str(p)
    if isinstance(p, GroupRingPoly):
        return "[" + ", ".join(_poly_str(slot) for slot in p.slots) + "]"
    raise TypeError(f"not a polynomial: {p!r}")


def serialize_multiset(ms: PolyMultiset) -> str:
    if not ms.entries:
        return "{}"
    return "{" + ", ".join(f"{m}×{serialize_poly(v)}" for v, m in ms.entries) + "}"


_TERM_RE = re.compile(r"(?P<c>\d+)?(?P<t>t(\^(?P<te>\d+))?)?(?P<s>s(\^(?P<se>\d+))?)?$")


def parse_poly(text: str):
    """Parse either a single polynomial or a bracketed tuple of them."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise PolyParseError(f"unbalanced brackets in {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return GroupRingPoly(())
        return GroupRingPoly(tuple(_parse_scalar(part) for part in inner.split(",")))
    return _parse_scalar(text)


def _parse_scalar(text: str) -> TwoVarPoly:
    text = text.replace(" ", "")
    if not text:
        raise PolyParseError("empty polynomial")
    coeffs: dict[tuple[int, int], int] = {}
    sign = 1
    token = ""
    for ch in text + "+":
        if ch in "+-":
            if not token:
                if ch == "-" and sign == 1 and not coeffs:
                    sign = -1
                    continue
                raise PolyParseError(f"misplaced sign in {text!r}")
            m = _TERM_RE.match(token)
            if not m or (m.group("c") is None and m.group("t") is None and m.group("s") is None):
                raise PolyParseError(f"bad term {token!r}")
            c = int(m.group("c")) if m.group("c") else 1
            a = 0 if m.group("t") is None else int(m.group("te") or 1)
            b = 0 if m.group("s") is None else int(m.group("se") or 1)
            coeffs[(a, b)] = coeffs.get((a, b), 0) + sign * c
            token = ""
            sign = 1 if ch == "+" else -1
        else:
            token += ch
    return TwoVarPoly.from_dict(coeffs)


def parse_multiset(text: str) -> PolyMultiset:
    text = text.strip()
    if not text.startswith("{") or not text.endswith("}"):
        raise PolyParseError(f"multiset must be brace wrapped: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return PolyMultiset(())
    depth = 0
    start = 0
    parts = []
    for i, ch in enumerate(inner):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    counts: dict[object, int] = {}
    for part in parts:
        part = part.strip()
        if "×" in part:
            mult_text, value_text = part.split("×", 1)
        elif "x" in part.split("[", 1)[0]:
            mult_text, value_text = part.split("x", 1)
        else:
            raise PolyParseError(f"multiset entry needs a multiplicity: {part!r}")
        try:
            mult = int(mult_text.strip())
        except ValueError:
            raise PolyParseError(f"bad multiplicity in {part!r}") from None
        if mult < 1:
            raise PolyParseError(f"multiplicity must be positive in {part!r}")
        value = parse_poly(value_text.strip())
        counts[value] = counts.get(value, 0) + mult
    entries = tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))
    return PolyMultiset(entries)
