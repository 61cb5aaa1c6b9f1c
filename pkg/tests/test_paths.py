"""Test paths."""

import pytest

from KOSTKA import combinat
from KOSTKA import paths
from KOSTKA import tableaux
from KOSTKA.combinat import q
from KOSTKA.utils import SizeMismatch

LAM = (3, 2, 1)
RECTS = ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))


def test_path_word_order():
    """Test that factors[0] is the rightmost factor."""
    p = paths.parse_path("1,1/2,2|1")
    assert p == (((1,),), ((1, 1), (2, 2)))
    assert paths.path_word(p) == (2, 2, 1, 1, 1)
    assert paths.path_to_str(p) == "1,1/2,2|1"
    assert paths.from_path_word((2, 2, 1, 1, 1), ((1, 1), (2, 2))) == p
    assert tableaux.is_yamanouchi(tableaux.schensted_p(paths.path_word(p)))
    assert paths.is_classically_restricted(p, 2)


def test_classical_restriction():
    """Test classical restriction on simple paths."""
    assert not paths.is_classically_restricted((((2,),),), 2)
    assert paths.is_classically_restricted((), 2)
    for p in paths.enumerate_paths(((1, 1), (1, 2)), 3):
        for i in range(1, 3):
            if paths.is_classically_restricted(p, 3):
                assert paths.tensor_crystal_op(p, i, 3, "raise") is None


def test_tensor_rule():
    """Test eps_i(b (x) b') = max(0, eps_i(b) - phi_i(b')) + eps_i(b')."""
    n = 3
    boxes = tableaux.enumerate_tableaux((1,), n)
    for right in boxes:
        for left in boxes:
            p = (right, left)
            for i in range(1, n):
                phi_l, eps_l = tableaux.phi_eps(left, i, n)
                phi_r, eps_r = tableaux.phi_eps(right, i, n)
                assert paths.phi_eps(p, i, n)[1] == max(0, eps_l - phi_r) + eps_r
                assert paths.phi_eps(p, i, n)[0] == phi_l + max(0, phi_r - eps_l)


def test_local_energy():
    """Test the normalization and two values of H."""
    u = ((1, 1),)
    big = ((1, 1), (2, 2))
    assert paths.local_energy(u, big) == 2
    assert paths.local_energy(((1,),), ((1,),)) == 1
    assert paths.local_energy(((2,),), ((1,),)) == 0
    assert paths.local_energy(((1,),), ((2,),)) == 1


def test_energy():
    """Test the energy on small paths."""
    u = ((1, 1),)
    assert paths.energy((u,)) == 0
    assert paths.energy((u, u)) == 2
    p = paths.parse_path("1,1/2,2|1")
    assert paths.energy(p) == paths.energy_by_rsk(p, 2)


def test_local_iso():
    """Test sigma on equal shapes, sigma^2 = id and the braid relation."""
    p = (((1,),), ((2,),))
    assert paths.local_iso(p, 1) == p

    for p in paths.enumerate_paths(((1, 1), (1, 2)), 2):
        swapped = paths.local_iso(p, 1)
        assert paths.path_rects(swapped) == ((1, 2), (1, 1))
        assert paths.local_iso(swapped, 1) == p
        assert paths.energy(swapped) == paths.energy(p)

    for p in paths.enumerate_paths(((1, 1), (1, 2), (2, 1)), 3):
        lhs = paths.local_iso(paths.local_iso(paths.local_iso(p, 1), 2), 1)
        rhs = paths.local_iso(paths.local_iso(paths.local_iso(p, 2), 1), 2)
        assert lhs == rhs


def test_energy_invariance():
    """Test that E is constant on classical crystal strings and equals c_R(Q(b))."""
    n = 3
    for p in paths.enumerate_paths(((1, 1), (1, 2), (1, 1)), n):
        e = paths.energy(p)
        for i in range(1, n):
            up = paths.tensor_crystal_op(p, i, n, "raise")
            if up is not None:
                assert paths.energy(up) == e
        if paths.is_classically_restricted(p, n):
            assert paths.energy_by_rsk(p, n) == e


def test_level_restriction():
    """Test that level restriction implies classical restriction and grows with ell."""
    n = 3
    for p in paths.enumerate_paths(((1, 2), (1, 1), (1, 1)), n, (2, 1, 1), lattice=True):
        for ell in range(1, 4):
            if paths.is_level_restricted(p, ell, n):
                assert paths.is_classically_restricted(p, n)
                assert paths.is_level_restricted(p, ell + 1, n)


def test_kostka_via_paths():
    """Test the polynomials of the rank 3 example."""
    assert paths.kostka_via_paths(LAM, RECTS, 2) == q**2 + q**3 + q**4
    assert paths.kostka_via_paths(LAM, RECTS) == (
        q**2 + 2 * q**3 + 2 * q**4 + 2 * q**5 + q**6
    )
    assert combinat.poly_at_one(paths.kostka_via_paths(LAM, RECTS, 2)) == 3
    assert paths.kostka_via_paths((3, 3), ((2, 3),)) == 1
    assert paths.kostka_via_paths(LAM, RECTS, 2, processes=2) == q**2 + q**3 + q**4


def test_kostka_via_paths_order():
    """Test that the polynomial does not depend on the order of the rectangles."""
    lam = (2, 1, 1)
    assert paths.kostka_via_paths(lam, ((1, 2), (2, 1))) == paths.kostka_via_paths(
        lam, ((2, 1), (1, 2))
    )


def test_size_mismatch():
    """Test the size check."""
    with pytest.raises(SizeMismatch):
        paths.kostka_via_paths((2, 1), ((1, 1),))


def test_embed_to_rows():
    """Test that the embedding keeps the word and splits into rows."""
    for p in paths.enumerate_paths(((2, 1), (1, 2)), 3):
        rows = paths.embed_to_rows(p)
        assert all(h == 1 for h, _ in paths.path_rects(rows))
        assert tableaux.schensted_p(paths.path_word(rows)) == tableaux.schensted_p(
            paths.path_word(p)
        )
