"""Tests for the quandle census and the polynomial classification check."""

import random

import pytest

from quandlekit import (
    are_isomorphic,
    canonical_form,
    dihedral_quandle,
    enumerate_quandles,
    enumerate_quandles_naive,
    polynomial_classification,
    quandle_from_text,
    quandle_polynomial,
    serialize_poly,
    validate_quandle,
    write_census,
)

EXPECTED_COUNTS = {0: 1, 1: 1, 2: 1, 3: 3, 4: 7, 5: 22}


def relabel(table, perm):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[perm[x] - 1][perm[y] - 1] = perm[table[x][y] - 1]
    return tuple(tuple(r) for r in out)


def test_census_counts():
    for n, count in EXPECTED_COUNTS.items():
        assert len(enumerate_quandles(n)) == count, n


def test_census_rejects_negative_order():
    with pytest.raises(ValueError):
        enumerate_quandles(-1)


def test_census_matches_naive_filter():
    # the pruned generator against brute force over all diagonal-fixing columns
    for n in range(5):
        got = {e.canonical_form for e in enumerate_quandles(n)}
        assert got == enumerate_quandles_naive(n), n


def test_census_entries_are_canonical_and_valid():
    for n in range(6):
        entries = enumerate_quandles(n)
        forms = [e.canonical_form for e in entries]
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms, key=lambda k: [int(v) for v in k.split()])
        for e in entries:
            assert validate_quandle(e.quandle.table).valid
            assert canonical_form(e.quandle.table) == e.canonical_form
            assert e.polynomial == quandle_polynomial(e.quandle)


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(7)
    for n in (3, 4, 5):
        for e in enumerate_quandles(n):
            for _ in range(5):
                perm = list(range(1, n + 1))
                rng.shuffle(perm)
                assert canonical_form(relabel(e.quandle.table, perm)) == e.canonical_form


def test_canonical_form_of_empty_table():
    assert canonical_form(()) == ""


def test_known_quandles_appear():
    forms3 = {e.canonical_form for e in enumerate_quandles(3)}
    assert canonical_form(dihedral_quandle(3).table) in forms3
    trivial4 = tuple(tuple(x for _ in range(4)) for x in range(1, 5))
    assert canonical_form(trivial4) in {e.canonical_form for e in enumerate_quandles(4)}


def test_polynomial_classification_small_orders():
    for n in range(5):
        report = polynomial_classification(n)
        assert report.order == n
        assert report.injective
        assert report.collisions == ()


def test_polynomial_classification_collides_at_order_five():
    # dihedral 5 and the two other Alexander quandles on Z5 are Latin, so
    # every element has c(x) = r(x) = 1 and all three share the value 5ts;
    # two more pairs collide with richer polynomials
    report = polynomial_classification(5)
    assert not report.injective
    assert report.collisions == ((7, 8), (13, 15), (20, 21), (20, 22), (21, 22))
    entries = enumerate_quandles(5)
    for i, j in report.collisions:
        assert entries[i - 1].polynomial == entries[j - 1].polynomial
        assert are_isomorphic(entries[i - 1].quandle, entries[j - 1].quandle) is None
    latin = {serialize_poly(entries[k - 1].polynomial) for k in (20, 21, 22)}
    assert latin == {"5ts"}
    assert canonical_form(dihedral_quandle(5).table) == entries[21].canonical_form


def test_write_census(tmp_path):
    paths = write_census(3, tmp_path)
    names = sorted(p.name for p in paths)
    assert names == ["index_3.tsv", "quandle_3_1.qnd", "quandle_3_2.qnd", "quandle_3_3.qnd"]
    entries = enumerate_quandles(3)
    for i, e in enumerate(entries, start=1):
        q = quandle_from_text((tmp_path / f"quandle_3_{i}.qnd").read_text())
        assert q.table == e.quandle.table
    index = (tmp_path / "index_3.tsv").read_text().splitlines()
    assert len(index) == 3
    for line, e in zip(index, entries):
        form, poly = line.split("\t")
        assert form == e.canonical_form
        assert poly == serialize_poly(e.polynomial)
