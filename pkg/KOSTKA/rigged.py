"""Rigged configurations, vacancy numbers and level restriction.

A configuration of type (lam; R) is a sequence of partitions nu^(1), ..., nu^(n-1)
with n = len(lam). A rigged configuration attaches a label to every part; parts are
stored as strings (length, label).
"""

import warnings
from itertools import product
from typing import NamedTuple

from KOSTKA import combinat
from KOSTKA import tableaux
from KOSTKA.utils import BadWitness
from KOSTKA.utils import LevelTooSmall
from KOSTKA.utils import SizeMismatch


class Configuration(NamedTuple):
    """Configuration nu = (nu^(1), ..., nu^(n-1)) together with its type (lam; R)."""

    nus: tuple
    lam: tuple
    rects: tuple


class RiggedConfig(NamedTuple):
    """Rigged configuration of type (lam; R).

    strings[k - 1] holds the strings (length, label) of the k-th rigged partition,
    sorted by decreasing length and, among equal lengths, by decreasing label.
    """

    strings: tuple
    lam: tuple
    rects: tuple

    @property
    def config(self):
        """Underlying configuration."""
        nus = tuple(tuple(length for length, _ in block) for block in self.strings)
        return Configuration(nus, self.lam, self.rects)


def canonical(strings):
    """Sort a block of strings into canonical order."""
    return tuple(sorted(strings, reverse=True))


def make_rc(strings, lam, rects):
    """Build a RiggedConfig in canonical form."""
    lam = tuple(lam)
    strings = tuple(canonical(block) for block in strings)
    strings += ((),) * (len(lam) - 1 - len(strings))
    return RiggedConfig(strings, lam, combinat.rect_seq(rects))


def xi(rects, k):
    """xi^(k)(R): widths of the rectangles of height k."""
    return tuple(sorted((w for h, w in rects if h == k), reverse=True))


def config_sizes(lam, rects):
    """|nu^(k)| for k = 1..n-1 as forced by the size constraints."""
    return tuple(
        sum(lam[k:]) - sum(w * max(h - k, 0) for h, w in rects) for k in range(1, len(lam))
    )


def _nu(nus, k):
    return nus[k - 1] if 1 <= k <= len(nus) else ()


def vacancy(config, k, i):
    """Vacancy number P_i^(k)(nu).

    Q_i(nu^(k-1)) - 2 Q_i(nu^(k)) + Q_i(nu^(k+1)) + Q_i(xi^(k)(R)) with nu^(0) empty.
    When every rectangle is a single row this is the same as taking nu^(0) = mu.
    """
    nus = config.nus
    Q = combinat.column_counts
    return (
        Q(_nu(nus, k - 1), i)
        - 2 * Q(_nu(nus, k), i)
        + Q(_nu(nus, k + 1), i)
        + Q(xi(config.rects, k), i)
    )


def _stable_index(config):
    """Every vacancy number is constant in i beyond this index."""
    parts = [p for nu in config.nus for p in nu] + [w for _, w in config.rects]
    return max(parts, default=1)


def is_admissible(config):
    """P_i^(k)(nu) >= 0 for all k, i >= 1."""
    top = _stable_index(config)
    return all(
        vacancy(config, k, i) >= 0 for k in range(1, len(config.nus) + 1) for i in range(1, top + 1)
    )


def enumerate_configs(lam, rects, level_cap=None):
    """The admissible configurations C(lam; R), or C^ell(lam; R) when level_cap is given.

    Args:
        lam: partition with n parts
        rects: sequence of (height, width)
        level_cap: optional bound on the largest part of every nu^(k)

    Returns:
        list of Configuration
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    if sum(lam) != combinat.size(rects):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |R| = {combinat.size(rects)}")

    sizes = config_sizes(lam, rects)
    if any(s < 0 for s in sizes):
        return []

    choices = [list(combinat.partitions_of(s, s, level_cap)) for s in sizes]
    configs = []
    for nus in product(*choices):
        config = Configuration(tuple(nus), lam, rects)
        if is_admissible(config):
            configs.append(config)
    return configs


def charges(config):
    """(cc(nu), c(nu), ||R||, |P|) with c(nu) = ||R|| - cc(nu) - |P|."""
    nus = config.nus
    cc = 0
    for k in range(1, len(nus) + 1):
        alpha = combinat.transpose(_nu(nus, k))
        beta = combinat.transpose(_nu(nus, k + 1))
        beta = beta + (0,) * (len(alpha) - len(beta))
        cc += sum(a * (a - b) for a, b in zip(alpha, beta))

    abs_p = sum(
        m * vacancy(config, k, i)
        for k in range(1, len(nus) + 1)
        for i, m in combinat.multiplicities(_nu(nus, k)).items()
    )
    norm_r = combinat.norm(config.rects)
    return cc, norm_r - cc - abs_p, norm_r, abs_p


def _label_options(m, p):
    """Label multisets of m strings bounded by p, as decreasing m-tuples."""
    return [part + (0,) * (m - len(part)) for part in combinat.partitions_in_box(m, p)]


def enumerate_riggings(config):
    """All rigged configurations on an admissible configuration."""
    blocks = []
    for k in range(1, len(config.nus) + 1):
        for i, m in sorted(combinat.multiplicities(_nu(config.nus, k)).items()):
            blocks.append((k, i, _label_options(m, vacancy(config, k, i))))

    out = []
    for labelings in product(*(options for _, _, options in blocks)):
        strings = [[] for _ in config.nus]
        for (k, i, _), labels in zip(blocks, labelings):
            strings[k - 1].extend((i, x) for x in labels)
        out.append(make_rc(strings, config.lam, config.rects))
    return out


def labels_sum(rc):
    """|J|, the sum of all labels."""
    return sum(x for block in rc.strings for _, x in block)


def rc_charge(rc):
    """c(nu, J) = c(nu) + |J|."""
    return charges(rc.config)[1] + labels_sum(rc)


def rc_cocharge(rc):
    """cc(nu, J) = cc(nu) + |J|."""
    return charges(rc.config)[0] + labels_sum(rc)


def is_valid(rc):
    """The configuration is admissible and 0 <= x <= P_i^(k) for every string (i, x)."""
    config = rc.config
    if config_sizes(rc.lam, rc.rects) != tuple(sum(nu) for nu in config.nus):
        return False
    if not is_admissible(config):
        return False
    return all(
        0 <= x <= vacancy(config, k, i)
        for k, block in enumerate(rc.strings, start=1)
        for i, x in block
    )


def theta(rc):
    """Complement every label: (i, x) -> (i, P_i^(k) - x)."""
    config = rc.config
    strings = [
        [(i, vacancy(config, k, i) - x) for i, x in block]
        for k, block in enumerate(rc.strings, start=1)
    ]
    return make_rc(strings, rc.lam, rc.rects)


def is_singular(config, k, string):
    """The label of the string equals its vacancy number."""
    i, x = string
    return x == vacancy(config, k, i)


def lambda_prime(lam):
    """lam' = (lam_1 - lam_n, ..., lam_{n-1} - lam_n)^t."""
    return combinat.transpose([p - lam[-1] for p in lam[:-1]])


def cst_lambda_prime(lam):
    """CST(lam'): column-strict tableaux of shape lam' over 1..lam_1 - lam_n."""
    d = lam[0] - lam[-1]
    if d == 0:
        return [()]
    return tableaux.enumerate_tableaux(lambda_prime(lam), d)


def _column(t, k):
    return [row[k - 1] for row in t if len(row) >= k]


def vacancy_shift(t, k, i, threshold):
    """-#{j: i >= threshold + t_{j,k}} + #{j: i >= threshold + t_{j,k+1}}."""
    minus = sum(1 for x in _column(t, k) if i >= threshold + x)
    plus = sum(1 for x in _column(t, k + 1) if i >= threshold + x)
    return plus - minus


def modified_vacancy(config, t, ell, k, i):
    """P_i^(k)(nu, t) for a witness t in CST(lam').

    Raises:
        BadWitness: if t is not column-strict of shape lam' over 1..lam_1 - lam_n
    """
    lam = config.lam
    d = lam[0] - lam[-1]
    if d == 0:
        if t:
            raise BadWitness("lam' is empty, so the only witness is the empty tableau")
    else:
        tableaux.check_witness(t, lambda_prime(lam), d)
    return vacancy(config, k, i) + vacancy_shift(t, k, i, ell - d)


def max_labels(rc):
    """x_i^(k): the largest label among the strings of length i in block k."""
    out = {}
    for k, block in enumerate(rc.strings, start=1):
        for i, x in block:
            out[(k, i)] = max(out.get((k, i), 0), x)
    return out


def level_witness(rc, ell):
    """A tableau t in CST(lam') certifying that rc is restricted of level ell, or None.

    Raises:
        LevelTooSmall: if ell < lam_1 - lam_n
    """
    lam = rc.lam
    d = lam[0] - lam[-1]
    if ell < d:
        raise LevelTooSmall(f"level {ell} is smaller than lam_1 - lam_n = {d}")

    config = rc.config
    if any(nu and nu[0] > ell for nu in config.nus):
        return None

    x = max_labels(rc)
    top = max(_stable_index(config), ell)
    table = {
        (k, i): vacancy(config, k, i)
        for k in range(1, len(config.nus) + 1)
        for i in range(1, top + 1)
    }
    for t in cst_lambda_prime(lam):
        if all(
            x.get((k, i), 0) <= p + vacancy_shift(t, k, i, ell - d) for (k, i), p in table.items()
        ):
            return t
    return None


def is_level_restricted_rc(rc, ell):
    """nu_1^(k) <= ell for all k and some t in CST(lam') has x_i^(k) <= P_i^(k)(nu, t)."""
    try:
        return level_witness(rc, ell) is not None
    except LevelTooSmall as err:
        warnings.warn(str(err))
        return False


def minima_table(t, rho, k, i):
    """M_i^(k)(t) for t in CST(rho'), the imposed minima on labels."""
    d = rho[0] - rho[-1]
    plus = sum(1 for x in _column(t, k) if i <= d - x)
    minus = sum(1 for x in _column(t, k + 1) if i <= d - x)
    return plus - minus


def rho_columns(rho):
    """R_rho: single columns of heights rho^t_1, rho^t_2, ..."""
    return tuple((h, 1) for h in combinat.transpose(rho))


def _meets_minima(rc, rho, t):
    config = rc.config
    for k, block in enumerate(rc.strings, start=1):
        if any(minima_table(t, rho, k, i) > x for i, x in block):
            return False
    top = max(_stable_index(config), rho[0] - rho[-1])
    return all(
        minima_table(t, rho, k, i) <= vacancy(config, k, i)
        for k in range(1, len(config.nus) + 1)
        for i in range(1, top + 1)
    )


def enumerate_rc_skew(lam, rho, rects, ell):
    """RC^ell(lam, rho; R) inside RC^ell(lam; R_rho + R).

    Keeps the level-restricted rigged configurations for which some t in CST(rho')
    bounds every label from below by M(t) and every vacancy number by M(t).
    """
    lam = tuple(lam)
    rho = combinat.partition(rho, len(lam))
    full = rho_columns(rho) + combinat.rect_seq(rects)
    witnesses = cst_lambda_prime(rho)

    out = []
    for config in enumerate_configs(lam, full, ell):
        for rc in enumerate_riggings(config):
            if not is_level_restricted_rc(rc, ell):
                continue
            if any(_meets_minima(rc, rho, t) for t in witnesses):
                out.append(rc)
    return out


def kostka_via_rc(lam, rects, ell=None):
    """K_{lam R}(q), or K^ell_{lam R}(q), as the charge generating function of riggings."""
    poly = combinat.QRing.zero
    for config in enumerate_configs(lam, rects, ell):
        for rc in enumerate_riggings(config):
            if ell is not None and not is_level_restricted_rc(rc, ell):
                continue
            poly = poly + combinat.q ** rc_charge(rc)
    return poly


def kostka_quasiparticle(lam, rects):
    """sum over C(lam; R) of q^c(nu) prod_{k,i} [P_i^(k) + m_i, m_i]."""
    poly = combinat.QRing.zero
    for config in enumerate_configs(lam, rects):
        term = combinat.q ** charges(config)[1]
        for k in range(1, len(config.nus) + 1):
            for i, m in combinat.multiplicities(config.nus[k - 1]).items():
                term = term * combinat.q_binomial(m, vacancy(config, k, i))
        poly = poly + term
    return poly


def rc_to_str(rc):
    """Text form: 'len:label' strings per block, blocks separated by '||'."""
    return "||".join(",".join(f"{i}:{x}" for i, x in block) for block in rc.strings)


def parse_rc(text, lam, rects):
    """Inverse of rc_to_str."""
    blocks = []
    for chunk in text.split("||"):
        chunk = chunk.strip()
        pairs = [tuple(int(v) for v in s.split(":")) for s in chunk.split(",")] if chunk else []
        blocks.append(pairs)
    return make_rc(blocks, lam, rects)
