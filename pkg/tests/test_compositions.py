import itertools

import pytest
from hypothesis import given

from conftest import compositions
from wcqsym.compositions import (
    CompositionSyntaxError,
    assemble,
    bar,
    coarsen,
    concat,
    descent_set,
    enumerate_compositions,
    eps_block_decomposition,
    eps_count,
    eps_entry_decomposition,
    format_composition,
    format_weak,
    integer_compositions,
    iter_classical,
    make_composition,
    parse_composition,
    parse_weak,
    precedes_wc,
    refinements,
    refines,
    reverse,
    set_alpha_wc,
    theta_seq,
    theta_seq_inv,
    weight,
)
from wcqsym.monoid import EPS as e, nt_add
from wcqsym.oracle import _slot_pattern


def test_weight():
    assert weight((e, 2, e)) == 2
    assert weight(()) == 0
    assert weight((e, e)) is e


def test_statistics():
    assert reverse((1, 3, 2)) == (2, 3, 1)
    assert concat((1, 3, 2), (6, 5)) == (1, 3, 2, 6, 5)
    assert bar((e, 2, e, 1)) == (2, 1)
    assert eps_count((e, 2, e, 1)) == 2


@given(compositions(), compositions())
def test_concat_laws(a, b):
    assert reverse(concat(a, b)) == concat(reverse(b), reverse(a))
    assert len(concat(a, b)) == len(a) + len(b)
    w = weight(concat(a, b))
    expected = nt_add(weight(a), weight(b))
    assert w == expected and (w is e) == (expected is e)


def test_theta_seq():
    assert theta_seq((e, 2, e)) == (0, 2, 0)
    assert theta_seq(()) == ()
    assert theta_seq_inv((1, 0, 0)) == (1, e, e)


@given(compositions(6))
def test_theta_round_trip(a):
    assert theta_seq_inv(theta_seq(a)) == a


def test_make_composition_rejects_zero():
    with pytest.raises(ValueError):
        make_composition((1, 0))
    assert make_composition([e, 2]) == (e, 2)


@pytest.mark.parametrize("alpha, expected", [
    ((1, 3, 2), {1, 4}),
    ((4, 2), {4}),
    ((6,), set()),
])
def test_descent_set(alpha, expected):
    assert descent_set(alpha) == expected


def test_descent_set_rejects_eps():
    with pytest.raises(ValueError):
        descent_set((e, 1))


def test_refines_examples():
    assert refines((1, 3, 2), (4, 2))
    assert not refines((4, 2), (1, 3, 2))
    assert refines((4, 2), (4, 2))
    assert not refines((1, 1), (3,))


def _brute_refines(a, b):
    """a refines b iff b is obtained by summing adjacent blocks of a."""
    return any(coarsen(J, a) == b for J in integer_compositions(len(a))) if a else a == b


@pytest.mark.parametrize("n", range(1, 9))
def test_refinement_is_partial_order(n):
    comps = integer_compositions(n)
    for a in comps:
        assert refines(a, a)
    for a, b in itertools.product(comps, repeat=2):
        if refines(a, b) and refines(b, a):
            assert a == b
    if n <= 6:
        for a, b, c in itertools.product(comps, repeat=3):
            if refines(a, b) and refines(b, c):
                assert refines(a, c)
        for a, b in itertools.product(comps, repeat=2):
            assert refines(a, b) == _brute_refines(a, b)


def test_integer_compositions_count():
    for n in range(1, 10):
        assert len(integer_compositions(n)) == 2 ** (n - 1)
    assert integer_compositions(0) == ((),)


def test_refinements_of_block():
    assert set(refinements((2, 1))) == {(2, 1), (1, 1, 1)}


@pytest.mark.parametrize("J, alpha, expected", [
    ((2, 1), (e, 1, e), (1, e)),
    ((1, 1, 1), (e, 1, e), (e, 1, e)),
    ((3,), (1, 3, 2), (6,)),
    ((1, 2), (e, e, 1), (e, 1)),
    ((2, 1), (e, e, 1), (e, 1)),
])
def test_coarsen(J, alpha, expected):
    assert coarsen(J, alpha) == expected


def test_coarsen_rejects_bad_J():
    with pytest.raises(ValueError):
        coarsen((2,), (1, 2, 3))


@given(compositions(5))
def test_coarsen_preserves_weight(a):
    for J in integer_compositions(len(a)):
        c = coarsen(J, a)
        assert len(c) == len(J)
        assert weight(c) == weight(a)
        if weight(a) is not e:
            assert sum(bar(c)) == weight(a)


def test_entry_decomposition():
    d = eps_entry_decomposition((e, 2, e, e, e))
    assert d.runs == (1, 3) and d.positives == (2,)
    d = eps_entry_decomposition((2, 1))
    assert d.runs == (0, 0, 0) and d.positives == (2, 1)


def test_block_decomposition():
    d = eps_block_decomposition((1, 2, e, e, 1, 3, 2, e))
    assert d.runs == (0, 2, 1) and d.blocks == ((1, 2), (1, 3, 2))
    d = eps_block_decomposition((e, e))
    assert d.runs == (2,) and d.blocks == ()


@given(compositions(7))
def test_decompositions_reassemble(a):
    runs, positives = eps_entry_decomposition(a)
    assert assemble(runs, [(s,) for s in positives]) == a
    runs, blocks = eps_block_decomposition(a)
    assert assemble(runs, blocks) == a
    assert all(i >= 1 for i in runs[1:-1])
    assert all(blk and e not in blk for blk in blocks)


@pytest.mark.parametrize("alpha, expected", [
    ((e, 2, e, e, e), {3}),
    ((2, 1), {2, 3}),
    ((), set()),
    ((e, 1, e, 2), {2, 5}),
])
def test_set_alpha_wc(alpha, expected):
    assert set_alpha_wc(alpha) == expected


@given(compositions(6))
def test_set_alpha_wc_matches_slot_pattern(a):
    # the oracle builds the strict positions of the F expansion on its own
    _, strict = _slot_pattern(a)
    assert set_alpha_wc(a) == strict


def test_precedes_wc_examples():
    assert precedes_wc((1, 2, e, e, 1, 3, 2, e), (3, e, e, 1, e, 5, e, e, e))
    assert not precedes_wc((1, 2, e, e, 1, 3, 2), (3, e, e, 1, e, 5, e, e, e))
    assert precedes_wc((e,), (e, e))
    assert not precedes_wc((), (e,))
    assert not precedes_wc((e, e), (e,))


def _brute_precedes(a, b):
    """Search all decompositions with possibly-empty interior runs and nonempty blocks."""
    ra, ba = eps_block_decomposition(a)
    rb, bb = eps_block_decomposition(b)
    def splits(runs, blocks):
        # every decomposition: cut maximal blocks into pieces joined by empty runs
        piece_options = [
            [tuple(blk[s:t] for s, t in zip((0,) + cut, cut + (len(blk),)))
             for r in range(len(blk)) for cut in itertools.combinations(range(1, len(blk)), r)]
            for blk in blocks
        ]
        for choice in itertools.product(*piece_options):
            new_runs, new_blocks = [], []
            for run, pieces in zip(runs, choice):
                new_runs.append(run)
                new_blocks.append(pieces[0])
                for p in pieces[1:]:
                    new_runs.append(0)
                    new_blocks.append(p)
            new_runs.append(runs[-1])
            yield tuple(new_runs), tuple(new_blocks)
    for runs_a, blocks_a in splits(ra, ba):
        for runs_b, blocks_b in splits(rb, bb):
            if len(blocks_a) != len(blocks_b):
                continue
            if (runs_a[-1] == 0) != (runs_b[-1] == 0):
                continue
            if any(i > j for i, j in zip(runs_a, runs_b)):
                continue
            if all(sum(x) == sum(y) and refines(x, y) for x, y in zip(blocks_a, blocks_b)):
                return True
    return False


def test_precedes_wc_matches_brute_force():
    comps = enumerate_compositions(4, 3)
    for a in comps:
        assert precedes_wc(a, a)
    for a, b in itertools.product(enumerate_compositions(4, 2), repeat=2):
        assert precedes_wc(a, b) == _brute_precedes(a, b), (a, b)


def test_precedes_wc_restricts_to_refinement():
    for a, b in itertools.product(list(iter_classical(4, 3)), repeat=2):
        assert precedes_wc(a, b) == refines(a, b)


def test_enumerate_compositions():
    assert enumerate_compositions(1, 1) == [(), (e,), (1,)]
    assert enumerate_compositions(0, 5) == [()]
    assert enumerate_compositions(2, 1) == [(), (e,), (1,), (e, e), (e, 1), (1, e), (1, 1)]
    assert len(enumerate_compositions(4, 2)) == sum(3 ** k for k in range(5))


@pytest.mark.parametrize("text, value", [
    ("()", ()),
    ("(e,1,e,2)", (e, 1, e, 2)),
    ("(e^3,2)", (e, e, e, 2)),
    ("(12)", (12,)),
])
def test_parse_composition(text, value):
    assert parse_composition(text) == value


@pytest.mark.parametrize("bad, pos", [
    ("e,1", 0),
    ("(e,1", 4),
    ("(e,0)", 3),
    ("(e,,1)", 3),
    ("(e^0)", 3),
    ("(x)", 1),
])
def test_parse_composition_errors(bad, pos):
    with pytest.raises(CompositionSyntaxError) as info:
        parse_composition(bad)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


@given(compositions(6))
def test_literal_round_trip(a):
    assert parse_composition(format_composition(a)) == a


def test_weak_literals():
    assert parse_weak("[0,2,0]") == (0, 2, 0)
    assert parse_weak("[]") == ()
    assert format_weak((1, 0)) == "[1,0]"
    with pytest.raises(CompositionSyntaxError):
        parse_weak("[1,-1]")
