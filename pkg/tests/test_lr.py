"""Test LR tableaux."""

import pytest

from KOSTKA import lr
from KOSTKA import paths
from KOSTKA.combinat import q
from KOSTKA.lr import LRTableau
from KOSTKA.utils import DomainMismatch
from KOSTKA.utils import SizeMismatch
from KOSTKA.utils import TooLarge

LAM = (3, 2, 1)
RECTS = ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))


def test_enumerate_lr():
    """Test the LR, CLR and RLR families on small data."""
    assert len(lr.enumerate_lr((2, 1), ((1, 1), (1, 1), (1, 1)))) == 2
    assert len(lr.enumerate_lr((2, 2), ((2, 2),))) == 1

    clr = [qt.tableau for qt in lr.enumerate_lr((3, 2), ((1, 1), (2, 2)), "CLR")]
    assert ((1, 2, 4), (3, 5)) in clr
    assert lr.is_lr(LRTableau(((1, 2, 4), (3, 5)), "CLR", ((1, 1), (2, 2))))

    for family in ("CLR", "RLR"):
        assert len(lr.enumerate_lr((3, 2), ((1, 1), (2, 2)), family)) == len(
            lr.enumerate_lr((3, 2), ((1, 1), (2, 2)))
        )

    with pytest.raises(SizeMismatch):
        lr.enumerate_lr((2, 1), ((1, 1),))


def test_enumerate_lr_order():
    """Test that the number of LR tableaux does not depend on the order of R."""
    lam = (3, 2, 1)
    assert len(lr.enumerate_lr(lam, ((2, 1), (1, 2), (1, 2)))) == len(
        lr.enumerate_lr(lam, ((1, 2), (2, 1), (1, 2)))
    )


def test_relabel():
    """Test that the relabelings are bijections between the families."""
    rects = ((1, 1), (2, 2))
    lrs = lr.enumerate_lr((3, 2), rects)
    rlrs = set(lr.enumerate_lr((3, 2), rects, "RLR"))
    clrs = set(lr.enumerate_lr((3, 2), rects, "CLR"))
    for qt in lrs:
        assert lr.relabel(lr.relabel(qt, "std"), "std_inv") == qt
        assert lr.relabel(qt, "std") in rlrs
        assert lr.relabel(qt, "beta") in clrs
    for qt in clrs:
        assert lr.relabel(lr.relabel(qt, "gamma"), "gamma_inv") == qt
        assert lr.relabel(qt, "tr_lr") == lr.relabel(lr.relabel(qt, "gamma"), "tr")

    qt = LRTableau(((1, 2, 2), (3, 3)), "LR", rects)
    assert lr.relabel(qt, "std").tableau == ((1, 2, 3), (4, 5))
    assert lr.relabel(lr.relabel(qt, "std"), "std_inv") == qt

    with pytest.raises(DomainMismatch):
        lr.relabel(lrs[0], "gamma")


def test_rsk():
    """Test RSK on a path with two factors and its inverse."""
    p = paths.parse_path("1,1/2,2|1")
    P, Q = lr.rsk(p)
    assert P == ((1, 1, 1), (2, 2))
    assert Q == LRTableau(((1, 2, 2), (3, 3)), "LR", ((1, 1), (2, 2)))
    assert lr.rsk_inverse(P, Q) == p

    b = ((1, 1), (2, 3))
    P, Q = lr.rsk((b,))
    assert P == b
    assert Q.tableau == ((1, 1), (2, 2))

    for p in paths.enumerate_paths(((1, 2), (2, 1), (1, 1)), 3):
        P, Q = lr.rsk(p)
        assert lr.is_lr(Q)
        assert lr.rsk_inverse(P, Q) == p


def test_charge():
    """Test the charges of the level 2 tableaux and the two charge methods."""
    level = [qt for qt in lr.enumerate_lr(LAM, RECTS) if lr.is_level_restricted_lr(qt, 2, 3)]
    assert len(level) == 3
    assert sorted(lr.charge(qt, "via_average") for qt in level) == [2, 3, 4]

    for qt in lr.enumerate_lr((2, 1), ((1, 1), (1, 1), (1, 1))):
        assert lr.charge(qt, "via_average") == lr.charge(qt, "via_bijection", 2)

    assert lr.charge(lr.enumerate_lr((2, 2), ((2, 2),))[0], "via_average") == 0

    with pytest.raises(TooLarge):
        lr.charge(lr.enumerate_lr((3, 2, 1), RECTS)[0], "via_average", max_length=4)


def test_kostka_via_lr():
    """Test the charge generating function against the path formula."""
    assert lr.kostka_via_lr(LAM, RECTS) == q**2 + 2 * q**3 + 2 * q**4 + 2 * q**5 + q**6
    assert lr.kostka_via_lr(LAM, RECTS, 2) == q**2 + q**3 + q**4
    for rects in (((2, 1), (1, 2)), ((1, 1), (2, 1), (1, 1))):
        assert lr.kostka_via_lr((2, 1, 1), rects) == paths.kostka_via_paths((2, 1, 1), rects)


def test_automorphism_sp():
    """Test s_p on equal rectangles, s_p^2 = id and the commuting square with sigma."""
    qt = lr.enumerate_lr((2, 1), ((1, 1), (1, 1), (1, 1)))[0]
    assert lr.automorphism_sp(qt, 1) == qt

    for lam in ((3, 0), (2, 1)):
        for qt in lr.enumerate_lr(lam, ((1, 1), (1, 2))):
            image = lr.automorphism_sp(qt, 1)
            assert lr.is_lr(image)
            assert image.rects == ((1, 2), (1, 1))
            assert lr.automorphism_sp(image, 1) == qt

    for p in paths.enumerate_paths(((1, 1), (1, 2), (2, 1)), 3):
        _, Q = lr.rsk(p)
        assert lr.rsk(paths.local_iso(p, 2))[1] == lr.automorphism_sp(Q, 2)


def test_embed_to_rows():
    """Test that the embedding does not depend on the step sequence."""
    rects = ((2, 2), (1, 1))
    other = [("split", None), ("s", 2), ("s", 1), ("s", 2), ("s", 1), ("s", 2)]
    for lam in ((3, 2), (2, 2, 1)):
        for qt in lr.enumerate_lr(lam, rects):
            rows = lr.embed_to_rows(qt)
            assert all(h == 1 for h, _ in rows.rects)
            assert lr.embed_to_rows(qt, other).tableau == rows.tableau

    qt = lr.enumerate_lr((2, 1), ((1, 1), (1, 1), (1, 1)))[1]
    assert lr.embed_to_rows(qt) == qt


def test_level_restriction():
    """Test level restriction of LR tableaux."""
    assert lr.is_level_restricted_lr(LRTableau((), "LR", ()), 1, 2)

    qt = LRTableau(((1, 2),), "LR", ((1, 1), (1, 1)))
    assert not lr.is_level_restricted_lr(qt, 1, 2)
    assert lr.is_level_restricted_lr(qt, 2, 2)
    assert lr.is_level_restricted_lr(qt, 1, 1)
    assert lr.is_level_restricted_cst(((1, 2), (3,)), 2, 3, 2)
    assert not lr.is_level_restricted_cst(((1, 2, 3),), 2, 3, 2)


def test_enumerate_rlr_skew():
    """Test that an empty inner shape gives the level-restricted RLR tableaux."""
    out = lr.enumerate_rlr_skew(LAM, (0, 0, 0), RECTS, 2)
    assert len(out) == 3
    assert all(qt.family == "RLR" for qt in out)
