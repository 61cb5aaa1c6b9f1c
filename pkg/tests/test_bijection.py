"""Test the bijection between LR tableaux and rigged configurations."""

import pytest

from KOSTKA import bijection
from KOSTKA import lr
from KOSTKA import rigged
from KOSTKA.lr import LRTableau
from KOSTKA.utils import MissingPadString

ROWS = ((1, 2), (1, 2), (1, 2), (1, 2), (1, 1))
LAM = (3, 3, 2, 1)
T = LRTableau(((1, 2, 6), (3, 4, 8), (5, 9), (7,)), "RLR", ROWS)
RC = rigged.make_rc([[(2, 0), (2, 0), (2, 0)], [(2, 1), (1, 0)], [(1, 0)]], LAM, ROWS)
RC_MINUS = rigged.make_rc(
    [[(2, 0), (2, 0), (1, 0)], [(1, 0), (1, 0)], [(1, 0)]], (3, 3, 1, 1), ROWS[:-1]
)


def _all_rcs(lam, rects):
    out = set()
    for config in rigged.enumerate_configs(lam, rects):
        out.update(rigged.enumerate_riggings(config))
    return out


def test_delta_inv_example():
    """Test one step of the single-row algorithm on a rank 4 example."""
    assert rigged.is_valid(RC_MINUS)
    trace = []
    assert bijection.delta_inv(RC_MINUS, 3, 1, trace) == RC
    assert trace[0].row == 3
    assert trace[0].lengths == (1, 1)
    assert bijection.delta(RC) == (RC_MINUS, 3)


def test_delta_inv_row_one():
    """Test that adding a cell in the first row selects no string."""
    rc = bijection.empty_rc(2)
    image = bijection.delta_inv(rc, 1, 1)
    assert image.strings == ((),)
    assert image.lam == (1, 0)
    assert bijection.delta(image) == (rc, 1)


def test_psi_bar_example():
    """Test the bijection and its inverse on a rank 4 example."""
    assert lr.is_lr(T)
    assert bijection.psi_bar(T, 4) == RC
    assert bijection.psi_bar_inverse(RC) == lr.relabel(T, "std_inv")


def test_psi_bar_rows_trace():
    """Test that the selected lengths weakly increase from block 1 in every step."""
    for qt in lr.enumerate_lr((3, 2, 1), ((1, 2), (1, 2), (1, 1), (1, 1))):
        trace = []
        bijection.psi_bar_rows(qt, 3, trace)
        for step in trace:
            assert all(a <= b for a, b in zip(step.lengths, step.lengths[1:]))


@pytest.mark.parametrize(
    "lam, rects",
    [
        ((2, 1, 0), ((1, 1), (1, 1), (1, 1))),
        ((3, 2, 1), ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))),
        ((2, 2, 1), ((2, 2), (1, 1))),
        ((3, 2, 1), ((2, 1), (1, 2), (2, 1))),
        ((2, 1, 1), ((1, 2), (2, 1))),
    ],
)
def test_psi_bar_bijective(lam, rects):
    """Test bijectivity, charge preservation and the inverse."""
    n = len(lam)
    image = set()
    for qt in lr.enumerate_lr(lam, rects):
        rc = bijection.psi_bar(qt, n)
        assert rigged.is_valid(rc)
        assert bijection.psi_bar_inverse(rc) == qt
        assert rigged.rc_charge(rc) == lr.charge(qt, "via_average")
        image.add(rc)
    assert image == _all_rcs(lam, rects)


@pytest.mark.parametrize(
    "lam, rects",
    [
        ((3, 2, 1), ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))),
        ((2, 2, 1), ((2, 2), (1, 1))),
        ((3, 1, 0), ((1, 2), (2, 1))),
    ],
)
def test_psi_bar_level(lam, rects):
    """Test that level restriction is preserved."""
    n = len(lam)
    for ell in range(max(lam[0] - lam[-1], max(w for _, w in rects)), 4):
        for qt in lr.enumerate_lr(lam, rects):
            rc = bijection.psi_bar(qt, n)
            assert lr.is_level_restricted_lr(qt, ell, n) == rigged.is_level_restricted_rc(rc, ell)


def test_pad_strings():
    """Test that removing the padding strings inverts adding them."""
    lam, rects = (3, 2, 2, 1), ((1, 2), (2, 2), (2, 1))
    for rc in _all_rcs(lam, rects):
        padded = bijection.pad_strings(rc, rects, "add")
        assert all(h == 1 for h, _ in padded.rects)
        assert bijection.pad_strings(padded, rects, "remove") == rc

    rows = ((1, 1), (1, 1), (1, 1))
    rc = next(iter(_all_rcs((2, 1, 0), rows)))
    assert bijection.pad_strings(rc, rows, "add") == rc

    empty = bijection.empty_rc(3)
    with pytest.raises(MissingPadString):
        rc = rigged.make_rc([(), ()], (1, 1, 0), ((1, 1), (1, 1)))
        bijection.pad_strings(rc, ((2, 1),), "remove")
    assert bijection.pad_strings(empty, (), "remove") == empty


def test_rows_order():
    """Test the order of the rows produced by the embedding."""
    assert bijection.rows_order(((2, 2), (1, 1))) == ((1, 2), (1, 2), (1, 1))
    assert bijection.rows_order(((1, 1), (2, 2))) == ((1, 2), (1, 2), (1, 1))


def test_check_skew_conjecture():
    """Test the skew check with an empty inner shape."""
    rects = ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))
    out = bijection.check_skew_conjecture((3, 2, 1), (0, 0, 0), rects, 2)
    assert out["match"]
    assert out["tableaux"] == out["rigged"] == out["common"] == 3
