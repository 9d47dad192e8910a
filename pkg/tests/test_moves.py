"""The three invariants must not change under the stabilising moves."""

from quandlekit import (
    R1Kink,
    R2Poke,
    all_invariants,
    apply_move,
    builtin,
    parse_diagram,
)

TWO_LOOPS = "loop 1\nloop 2\n"


def move_variants(d):
    out = []
    for arc in d.arcs:
        for sign in (1, -1):
            if arc in d.loops:
                out.append(R1Kink(arc, sign=sign))
            else:
                for handedness in ("over_first", "under_first"):
                    out.append(R1Kink(arc, sign=sign, handedness=handedness))
        for other in d.arcs:
            if other != arc:
                for orientation in ("pos_first", "neg_first"):
                    out.append(R2Poke(arc, other, orientation=orientation))
    return out


def test_invariants_stable_under_moves(families):
    diagrams = {name: builtin(name) for name in ("unknot", "theta", "handcuff")}
    diagrams["two_loops"] = parse_diagram(TWO_LOOPS)
    for dname, d in diagrams.items():
        moves = move_variants(d)
        for fname, f in families.items():
            base = all_invariants(f, d)
            for move in moves:
                moved = all_invariants(f, apply_move(d, move))
                assert moved == base, (dname, fname, move)


def test_invariants_stable_under_stacked_moves(families):
    # a kink inside a poke inside a kink, compared to the plain diagram
    d = builtin("theta")
    stacked = apply_move(d, R1Kink(3, sign=-1))
    stacked = apply_move(stacked, R2Poke(2, 1, orientation="neg_first"))
    stacked = apply_move(stacked, R1Kink(2, handedness="under_first"))
    assert len(stacked.crossings) == 4
    for fname, f in families.items():
        assert all_invariants(f, stacked) == all_invariants(f, d), fname
