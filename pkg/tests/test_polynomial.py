import random

import pytest

from quandlekit import (
    FiniteQuandle,
    GroupRingPoly,
    PolyMultiset,
    PolyParseError,
    TwoVarPoly,
    associated_quandle,
    builtin_family,
    cr_counts,
    dihedral_quandle,
    gfamily_polynomial,
    gsubfamily_polynomial,
    parse_multiset,
    parse_poly,
    quandle_polynomial,
    serialize_multiset,
    serialize_poly,
    subquandle_polynomial,
    symmetric_group,
    conjugation_quandle,
    trivial_quandle,
)

EXAMPLE3 = FiniteQuandle.from_table(((1, 1, 2), (2, 2, 1), (3, 3, 3)))


def test_cr_counts_on_example():
    assert cr_counts(EXAMPLE3, 1) == (3, 2)
    assert cr_counts(EXAMPLE3, 2) == (3, 2)
    assert cr_counts(EXAMPLE3, 3) == (1, 3)
    with pytest.raises(ValueError):
        cr_counts(EXAMPLE3, 4)


def test_quandle_polynomial_example():
    p = quandle_polynomial(EXAMPLE3)
    assert p == TwoVarPoly(((3, 2, 2), (1, 3, 1)))
    assert serialize_poly(p) == "2t^3s^2+ts^3"


def test_quandle_polynomial_standard_families():
    assert serialize_poly(quandle_polynomial(trivial_quandle(4))) == "4t^4s^4"
    assert serialize_poly(quandle_polynomial(dihedral_quandle(3))) == "3ts"
    assert serialize_poly(quandle_polynomial(dihedral_quandle(4))) == "4t^2s^2"
    assert serialize_poly(quandle_polynomial(FiniteQuandle.from_table(()))) == "0"


def test_polynomial_specializes_to_order():
    for q in (EXAMPLE3, trivial_quandle(5), dihedral_quandle(6),
              conjugation_quandle(symmetric_group(3))):
        assert quandle_polynomial(q).evaluate(1, 1) == q.order


def test_polynomial_invariant_under_relabeling():
    rng = random.Random(3)
    for q in (EXAMPLE3, dihedral_quandle(5), conjugation_quandle(symmetric_group(3))):
        base = quandle_polynomial(q)
        n = q.order
        for _ in range(10):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            table = [[0] * n for _ in range(n)]
            for x in range(1, n + 1):
                for y in range(1, n + 1):
                    table[perm[x - 1] - 1][perm[y - 1] - 1] = perm[q.op(x, y) - 1]
            relabeled = FiniteQuandle.from_table(tuple(tuple(r) for r in table))
            assert quandle_polynomial(relabeled) == base


def test_subquandle_polynomial():
    # whole set and empty set are the easy ends
    assert subquandle_polynomial(EXAMPLE3, {1, 2, 3}) == quandle_polynomial(EXAMPLE3)
    assert subquandle_polynomial(EXAMPLE3, ()) == TwoVarPoly.zero()
    # counts stay ambient: {3} alone keeps c=1, r=3 from the full table
    assert serialize_poly(subquandle_polynomial(EXAMPLE3, {3})) == "ts^3"
    with pytest.raises(ValueError):
        subquandle_polynomial(EXAMPLE3, {9})


def test_subquandle_polynomial_requires_closed_subset():
    # {1, 3} is not closed: 1 * 3 = 2
    with pytest.raises(ValueError):
        subquandle_polynomial(EXAMPLE3, {1, 3})


def test_subquandle_polynomial_in_associated_quandle():
    aq = associated_quandle(builtin_family("z2_3"))
    p = subquandle_polynomial(aq.quandle, {2, 5})
    assert serialize_poly(p) == "t^6s^4+t^2s^4"


def test_gfamily_polynomial():
    assert serialize_poly(gfamily_polynomial(builtin_family("z2_3"))) == "[3t^3s^3, 3ts]"
    assert serialize_poly(gfamily_polynomial(builtin_family("z3_4"))) == "[4t^4s^4, 4ts, 4ts]"


def test_gfamily_polynomial_identity_slot():
    for name in ("z2_3", "z2_4", "z3_4", "s3_3", "s3_4"):
        f = builtin_family(name)
        n = f.set_size
        slot = gfamily_polynomial(f).slots[f.group.identity - 1]
        assert slot == TwoVarPoly(((n, n, n),))


def test_gsubfamily_polynomial():
    f = builtin_family("z2_3")
    assert serialize_poly(gsubfamily_polynomial(f, {2})) == "[t^3s^3, ts]"
    assert gsubfamily_polynomial(f, {1, 2, 3}) == gfamily_polynomial(f)
    with pytest.raises(ValueError):
        gsubfamily_polynomial(builtin_family("z3_4"), {1, 2})
    with pytest.raises(ValueError):
        gsubfamily_polynomial(f, {0})


def test_gsubfamily_slotwise_complement_sum():
    # both halves are closed here, and their slots add up to the whole
    f = builtin_family("z2_4")
    whole = gfamily_polynomial(f)
    part = gsubfamily_polynomial(f, {1, 3})
    rest = gsubfamily_polynomial(f, {2, 4})
    for a, b, c in zip(whole.slots, part.slots, rest.slots):
        assert a == b + c


def test_serialize_terms():
    assert serialize_poly(TwoVarPoly.zero()) == "0"
    assert serialize_poly(TwoVarPoly.monomial(0, 0, 4)) == "4"
    assert serialize_poly(TwoVarPoly.monomial(1, 1)) == "ts"
    assert serialize_poly(TwoVarPoly.monomial(2, 0, 1)) == "t^2"
    assert serialize_poly(TwoVarPoly.monomial(0, 3, 2)) == "2s^3"
    p = TwoVarPoly.monomial(2, 1, 3) + TwoVarPoly.monomial(1, 1, -1)
    assert serialize_poly(p) == "3t^2s-ts"


def test_serialize_group_ring_poly():
    p = GroupRingPoly((
        TwoVarPoly.monomial(2, 1, 3),
        TwoVarPoly.zero(),
        TwoVarPoly.monomial(0, 0, 4),
    ))
    assert serialize_poly(p) == "[3t^2s, 0, 4]"


def test_parse_round_trip():
    polys = [
        TwoVarPoly.zero(),
        quandle_polynomial(EXAMPLE3),
        TwoVarPoly.monomial(2, 1, 3) + TwoVarPoly.monomial(1, 1, -1),
        gfamily_polynomial(builtin_family("z3_4")),
        GroupRingPoly(()),
    ]
    for p in polys:
        assert parse_poly(serialize_poly(p)) == p


def test_parse_tolerates_whitespace_and_order():
    assert parse_poly(" ts^3 + 2t^3s^2 ") == quandle_polynomial(EXAMPLE3)
    assert parse_poly("[4t^4s^4,4ts,4ts]") == parse_poly("[4t^4s^4, 4ts, 4ts]")


def test_parse_rejects_garbage():
    for bad in ("", "t+", "++t", "t^", "q^2", "[ts", "3tt"):
        with pytest.raises(PolyParseError):
            parse_poly(bad)


def test_multiset_construction_and_order():
    a = TwoVarPoly.monomial(6, 4)
    b = TwoVarPoly.monomial(6, 4) + TwoVarPoly.monomial(2, 4)
    ms = PolyMultiset.from_values([b, a, b, b, a])
    assert ms.total() == 5
    assert ms.entries == ((a, 2), (b, 3))
    assert serialize_multiset(ms) == "{2×t^6s^4, 3×t^6s^4+t^2s^4}"


def test_multiset_round_trip():
    a = GroupRingPoly((TwoVarPoly.monomial(3, 3), TwoVarPoly.monomial(1, 1)))
    b = GroupRingPoly((TwoVarPoly.monomial(3, 3, 3), TwoVarPoly.monomial(1, 1, 3)))
    ms = PolyMultiset.from_values([a] * 12 + [b] * 6)
    text = serialize_multiset(ms)
    assert text == "{12×[t^3s^3, ts], 6×[3t^3s^3, 3ts]}"
    assert parse_multiset(text) == ms
    # ascii separator and squeezed spacing are accepted on input
    assert parse_multiset("{12x[t^3s^3,ts], 6x[3t^3s^3,3ts]}") == ms
    assert parse_multiset("{}") == PolyMultiset(())
    assert serialize_multiset(PolyMultiset(())) == "{}"


def test_multiset_rejects_garbage():
    for bad in ("", "{1×ts", "{ts}", "{0×ts}", "{one×ts}"):
        with pytest.raises(PolyParseError):
            parse_multiset(bad)
