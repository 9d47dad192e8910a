"""Tests for the coloring enumerator and the derived invariants."""

import pytest

from quandlekit import (
    R1Kink,
    R2Poke,
    all_invariants,
    apply_move,
    builtin,
    builtin_family,
    counting_invariant,
    enhancement_associated,
    enhancement_gfamily,
    enumerate_colorings,
    image_subfamily,
    parse_diagram,
    serialize_multiset,
    used_pairs,
)

from oracles import naive_colorings

SMALL_DIAGRAMS = ("unknot", "theta", "handcuff")


def test_enumerator_matches_naive_oracle(families):
    for name in SMALL_DIAGRAMS:
        d = builtin(name)
        for f in families.values():
            got = tuple(c.pairs for c in enumerate_colorings(f, d))
            assert got == naive_colorings(f, d), name


def test_enumerator_matches_naive_oracle_with_crossings(families):
    kinked = apply_move(builtin("unknot"), R1Kink(1))
    poked = apply_move(parse_diagram("loop 1\nloop 2\n"), R2Poke(1, 2))
    twisted = apply_move(builtin("theta"), R1Kink(2, sign=-1, handedness="under_first"))
    for d in (kinked, poked):
        for f in families.values():
            got = tuple(c.pairs for c in enumerate_colorings(f, d))
            assert got == naive_colorings(f, d)
    # the 4 arc diagram only against the families with a small color count
    for fname in ("z2_3", "z2_4"):
        f = families[fname]
        got = tuple(c.pairs for c in enumerate_colorings(f, twisted))
        assert got == naive_colorings(f, twisted)


def test_colorings_are_well_formed_and_sorted(families):
    f = families["s3_3"]
    d = builtin("handcuff")
    cols = enumerate_colorings(f, d)
    assert cols == enumerate_colorings(f, d)
    encoded = []
    for c in cols:
        assert c.arcs == d.arcs
        for g, x in c.pairs:
            assert 1 <= g <= f.group.order
            assert 1 <= x <= f.set_size
        encoded.append(tuple((g - 1) * f.set_size + x for g, x in c.pairs))
    assert encoded == sorted(encoded)


def test_trivial_colorings_always_present(families):
    for name in SMALL_DIAGRAMS:
        d = builtin(name)
        for f in families.values():
            e = f.group.identity
            cols = {c.pairs for c in enumerate_colorings(f, d)}
            for x in range(1, f.set_size + 1):
                assert ((e, x),) * len(d.arcs) in cols
            assert counting_invariant(f, d) >= f.set_size


def test_coloring_accessors(families):
    d = builtin("theta")
    c = enumerate_colorings(families["z2_3"], d)[0]
    assert c.pair(2) == c.pairs[1]
    assert c.as_dict() == {1: c.pairs[0], 2: c.pairs[1], 3: c.pairs[2]}
    assert used_pairs(c) == frozenset(c.pairs)


def test_empty_diagram_has_one_coloring(families):
    d = parse_diagram("")
    for f in families.values():
        cols = enumerate_colorings(f, d)
        assert len(cols) == 1
        assert cols[0].pairs == ()


def test_theta_image_subfamilies_are_singletons(families):
    # both vertices share the x label, so all three arcs agree on x
    f = families["z2_3"]
    for c in enumerate_colorings(f, builtin("theta")):
        xs = {x for _, x in c.pairs}
        assert len(xs) == 1
        assert image_subfamily(f, c).subset == frozenset(xs)


def test_counting_invariant_values(families):
    z = families["z2_3"]
    assert counting_invariant(z, builtin("unknot")) == 6
    assert counting_invariant(z, builtin("theta")) == 12
    assert counting_invariant(z, builtin("handcuff")) == 12


def test_enhancement_values(families):
    z = families["z2_3"]
    assert serialize_multiset(enhancement_gfamily(z, builtin("unknot"))) == "{6×[t^3s^3, ts]}"
    assert (
        serialize_multiset(enhancement_associated(z, builtin("unknot")))
        == "{3×t^2s^4, 3×t^6s^4}"
    )
    assert serialize_multiset(enhancement_gfamily(z, builtin("theta"))) == "{12×[t^3s^3, ts]}"
    assert (
        serialize_multiset(enhancement_associated(z, builtin("theta")))
        == "{3×t^6s^4, 9×t^6s^4+t^2s^4}"
    )


def test_enhancement_totals_equal_count(families):
    for name in SMALL_DIAGRAMS:
        d = builtin(name)
        for f in families.values():
            inv = all_invariants(f, d)
            assert inv.gfamily.total() == inv.count
            assert inv.associated.total() == inv.count


def test_all_invariants_consistent_with_parts(families):
    f = families["z3_4"]
    d = builtin("handcuff")
    inv = all_invariants(f, d)
    assert inv.count == counting_invariant(f, d)
    assert inv.gfamily == enhancement_gfamily(f, d)
    assert inv.associated == enhancement_associated(f, d)
