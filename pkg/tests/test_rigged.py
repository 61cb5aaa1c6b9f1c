"""Test rigged configurations."""

import pytest

from KOSTKA import combinat
from KOSTKA import rigged
from KOSTKA.combinat import q
from KOSTKA.rigged import Configuration
from KOSTKA.utils import BadWitness
from KOSTKA.utils import LevelTooSmall
from KOSTKA.utils import SizeMismatch

LAM = (3, 2, 1)
RECTS = ((1, 2), (1, 1), (1, 1), (1, 1), (1, 1))

EX_LAM = (3, 2, 2, 1)
EX_RECTS = ((1, 2), (2, 2), (2, 1))
EX_NUS = ((2,), (2, 1), (1,))


def _all_rcs(lam, rects, ell=None):
    return [
        rc
        for config in rigged.enumerate_configs(lam, rects, ell)
        for rc in rigged.enumerate_riggings(config)
    ]


def test_vacancy():
    """Test the vacancy numbers of a configuration with three rigged partitions."""
    config = Configuration(EX_NUS, EX_LAM, EX_RECTS)
    assert rigged.config_sizes(EX_LAM, EX_RECTS) == (2, 3, 1)
    assert rigged.xi(EX_RECTS, 1) == (2,)
    assert rigged.xi(EX_RECTS, 2) == (2, 1)
    assert rigged.vacancy(config, 1, 2) == 1
    assert rigged.vacancy(config, 2, 2) == 0
    assert rigged.vacancy(config, 2, 1) == 0
    assert rigged.vacancy(config, 3, 1) == 0
    for k in range(1, 4):
        assert rigged.vacancy(config, k, 0) == 0
    assert rigged.is_admissible(config)
    assert config in rigged.enumerate_configs(EX_LAM, EX_RECTS)


def test_vacancy_stability():
    """Test that P_i^(k) = lam_k - lam_{k+1} for i beyond every part."""
    config = Configuration(EX_NUS, EX_LAM, EX_RECTS)
    for k in range(1, 4):
        assert rigged.vacancy(config, k, 5) == EX_LAM[k - 1] - EX_LAM[k]


def test_charges():
    """Test cc, c, ||R|| and |P| of a configuration."""
    config = Configuration(EX_NUS, EX_LAM, EX_RECTS)
    assert rigged.charges(config) == (3, 1, 5, 1)

    for config in rigged.enumerate_configs(LAM, RECTS):
        cc, c, norm, abs_p = rigged.charges(config)
        assert c + cc + abs_p == norm


def test_enumerate_configs():
    """Test the configurations of the rank 3 example."""
    assert len(rigged.enumerate_configs(LAM, RECTS, 2)) == 2
    assert rigged.enumerate_configs((2, 2), ((2, 2),)) == [Configuration(((),), (2, 2), ((2, 2),))]
    with pytest.raises(SizeMismatch):
        rigged.enumerate_configs((2, 1), ((1, 1),))


def test_enumerate_riggings():
    """Test the number of riggings and their validity."""
    rcs = _all_rcs(LAM, RECTS)
    assert len(rcs) == 8
    assert len(set(rcs)) == 8
    assert all(rigged.is_valid(rc) for rc in rcs)

    for config in rigged.enumerate_configs(LAM, RECTS):
        expected = 1
        for k in range(1, len(config.nus) + 1):
            for i, m in combinat.multiplicities(config.nus[k - 1]).items():
                expected *= combinat.poly_at_one(
                    combinat.q_binomial(m, rigged.vacancy(config, k, i))
                )
        assert len(rigged.enumerate_riggings(config)) == expected


def test_theta():
    """Test that theta is an involution complementing the charge."""
    norm = combinat.norm(RECTS)
    for rc in _all_rcs(LAM, RECTS):
        image = rigged.theta(rc)
        assert rigged.is_valid(image)
        assert rigged.theta(image) == rc
        assert rigged.rc_charge(image) == norm - rigged.rc_cocharge(rc)


def test_kostka_via_rc():
    """Test the charge generating function and the quasiparticle sum."""
    assert rigged.kostka_via_rc(LAM, RECTS) == q**2 + 2 * q**3 + 2 * q**4 + 2 * q**5 + q**6
    assert rigged.kostka_via_rc(LAM, RECTS, 2) == q**2 + q**3 + q**4
    assert rigged.kostka_quasiparticle(LAM, RECTS) == rigged.kostka_via_rc(LAM, RECTS)
    assert rigged.kostka_quasiparticle(EX_LAM, EX_RECTS) == rigged.kostka_via_rc(
        EX_LAM, EX_RECTS
    )


def test_kostka_via_rc_order():
    """Test that the polynomial does not depend on the order of the rectangles."""
    assert rigged.kostka_via_rc(EX_LAM, EX_RECTS) == rigged.kostka_via_rc(
        EX_LAM, tuple(reversed(EX_RECTS))
    )


def test_level_restriction():
    """Test level restriction with witnesses."""
    assert len(rigged.cst_lambda_prime(LAM)) == 2
    restricted = [rc for rc in _all_rcs(LAM, RECTS) if rigged.is_level_restricted_rc(rc, 2)]
    assert len(restricted) == 3
    for rc in restricted:
        assert rigged.level_witness(rc, 2) in rigged.cst_lambda_prime(LAM)

    wide = [rc for rc in _all_rcs(LAM, RECTS) if any(nu and nu[0] > 2 for nu in rc.config.nus)]
    assert not any(rigged.is_level_restricted_rc(rc, 2) for rc in wide)

    with pytest.raises(LevelTooSmall):
        rigged.level_witness(_all_rcs(LAM, RECTS)[0], 1)


def test_modified_vacancy():
    """Test that an empty lam' leaves the vacancy numbers unchanged."""
    lam = (2, 2)
    rects = ((1, 2), (1, 1), (1, 1))
    assert rigged.cst_lambda_prime(lam) == [()]
    for config in rigged.enumerate_configs(lam, rects):
        for i in range(1, 4):
            assert rigged.modified_vacancy(config, (), 2, 1, i) == rigged.vacancy(config, 1, i)
        with pytest.raises(BadWitness):
            rigged.modified_vacancy(config, ((1,),), 2, 1, 1)

    config = rigged.enumerate_configs(LAM, RECTS)[0]
    with pytest.raises(BadWitness):
        rigged.modified_vacancy(config, ((2, 1), (1,)), 2, 1, 1)


def test_minima_table():
    """Test the imposed minima."""
    rho = (2, 1, 0)
    for t in rigged.cst_lambda_prime(rho):
        for k in (1, 2):
            values = [rigged.minima_table(t, rho, k, i) for i in range(1, 5)]
            assert all(a >= b for a, b in zip(values, values[1:]))
    assert rigged.rho_columns((2, 1, 0)) == ((2, 1), (1, 1))


def test_enumerate_rc_skew():
    """Test that an empty inner shape gives the level-restricted rigged configurations."""
    out = rigged.enumerate_rc_skew(LAM, (0, 0, 0), RECTS, 2)
    assert len(out) == 3


def test_text_form():
    """Test the rigged configuration text form."""
    rc = _all_rcs(LAM, RECTS)[0]
    assert rigged.parse_rc(rigged.rc_to_str(rc), LAM, RECTS) == rc
