"""Fermionic and bosonic formulas for (level-restricted) generalized Kostka polynomials.

Shift vectors f(S), u(S) and the (m,n)-system are indexed by (i, a) with i the string
length (1..ell-1) and a the block (1..n-1); tables are nested lists t[i - 1][a - 1].
"""

from functools import lru_cache
from itertools import combinations
from itertools import permutations
from itertools import product
from math import ceil
from math import floor
from typing import NamedTuple

import numpy as np
import sympy

from KOSTKA import combinat
from KOSTKA import paths
from KOSTKA import rigged
from KOSTKA.utils import InternalInconsistency
from KOSTKA.utils import LevelTooSmall
from KOSTKA.utils import SizeMismatch


class SubsetWitness(NamedTuple):
    """A nonempty subset S of CST(lam') with its shift vectors.

    Args:
        subset: tuple of witness tableaux
        f: dict (a, i) -> f_i^(a)(S) for a in 1..n-1, i in 1..ell
        u: table u[i - 1][a - 1] for i in 1..ell-1
    """

    subset: tuple
    f: dict
    u: list


class MNSystem(NamedTuple):
    """Data of the (m,n)-system of a pair (lam; R) at level ell."""

    lam: tuple
    rects: tuple
    ell: int
    L: list
    sizes: tuple
    bounds: tuple
    g: sympy.Rational


def cartan(dim):
    """Cartan matrix of type A_dim as a numpy array."""
    return 2 * np.eye(dim, dtype=int) - np.eye(dim, k=1, dtype=int) - np.eye(dim, k=-1, dtype=int)


def cartan_inverse(dim):
    """Exact inverse, C^-1_ij = min(i, j) - ij / (dim + 1)."""
    return [
        [sympy.Rational(min(i, j)) - sympy.Rational(i * j, dim + 1) for j in range(1, dim + 1)]
        for i in range(1, dim + 1)
    ]


def scaled_cartan_inverse(dim):
    """(dim + 1) C^-1, an integer matrix."""
    idx = np.arange(1, dim + 1)
    return (dim + 1) * np.minimum.outer(idx, idx) - np.outer(idx, idx)


def _identity(dim):
    return np.eye(dim, dtype=int).tolist()


@lru_cache(maxsize=None)
def _kron(A, B):
    return sympy.kronecker_product(sympy.Matrix(A), sympy.Matrix(B))


def _exact(M):
    return tuple(tuple(sympy.sympify(v) for v in row) for row in M)


def form(x, A, B, y):
    """The pairing x.(A (x) B).y, with x and y indexed x[i][a] like the rows of A (x) B.

    Returns:
        sympy Integer or Rational; zero when A or B is empty
    """
    if len(A) == 0 or len(B) == 0:
        return sympy.Integer(0)
    K = _kron(_exact(A), _exact(B))
    X = sympy.Matrix([v for row in x for v in row])
    Y = sympy.Matrix([v for row in y for v in row])
    return (X.T * K * Y)[0, 0]


def _check_level(lam, rects, ell):
    if lam[0] - lam[-1] > ell:
        raise LevelTooSmall(f"level {ell} is smaller than lam_1 - lam_n = {lam[0] - lam[-1]}")
    if any(w > ell for _, w in rects):
        raise LevelTooSmall(f"level {ell} is smaller than a rectangle width in {rects}")


def f_table(lam, ell, subset):
    """f_i^(a)(S) = min over t in S of the vacancy shift of t, for i in 1..ell."""
    d = lam[0] - lam[-1]
    return {
        (a, i): min(rigged.vacancy_shift(t, a, i, ell - d) for t in subset)
        for a in range(1, len(lam))
        for i in range(1, ell + 1)
    }


def u_table(f, n, ell):
    """u_i = -f_{i-1} + 2 f_i - f_{i+1} with f_0 = 0, for i in 1..ell-1."""
    return [
        [-f.get((a, i - 1), 0) + 2 * f[(a, i)] - f[(a, i + 1)] for a in range(1, n)]
        for i in range(1, ell)
    ]


def subset_witnesses(lam, ell):
    """Yield SubsetWitness for every nonempty subset of CST(lam'), smallest first."""
    lam = tuple(lam)
    witnesses = rigged.cst_lambda_prime(lam)
    for size in range(1, len(witnesses) + 1):
        for subset in combinations(witnesses, size):
            f = f_table(lam, ell, subset)
            yield SubsetWitness(subset, f, u_table(f, len(lam), ell))


def check_u_identity(lam, ell, witness):
    """(C (x) I) f(S) + sum_a (lam_a - lam_{a+1}) e_{ell-1} (x) e_a equals u(S)."""
    n = len(lam)
    if ell < 2:
        return True
    C = cartan(ell - 1).tolist()
    for i in range(1, ell):
        for a in range(1, n):
            lhs = sum(C[i - 1][j - 1] * witness.f[(a, j)] for j in range(1, ell))
            if i == ell - 1:
                lhs += lam[a - 1] - lam[a]
            if lhs != witness.u[i - 1][a - 1]:
                return False
    return True


def fermionic_kostka(lam, rects):
    """K_{lam R}(q) as the quasiparticle sum over admissible configurations."""
    return rigged.kostka_quasiparticle(lam, rects)


def fermionic_level_kostka(lam, rects, ell):
    """K^ell_{lam R}(q) by inclusion-exclusion over the nonempty subsets of CST(lam').

    Each subset S contributes (-1)^(|S|+1) sum over C^ell(lam; R) of
    q^c(nu) prod_{k, i < ell} [m_i + P_i^(k)(nu, S), m_i], where P(nu, S) is the
    vacancy number shifted by f(S); a negative P_i^(k)(nu, S) kills the term.

    Raises:
        LevelTooSmall: if lam or a rectangle is wider than ell
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    _check_level(lam, rects, ell)
    configs = rigged.enumerate_configs(lam, rects, ell)

    poly = combinat.QRing.zero
    for witness in subset_witnesses(lam, ell):
        assert check_u_identity(lam, ell, witness), "u(S) does not match f(S)"
        sign = (-1) ** (len(witness.subset) + 1)
        for config in configs:
            term = combinat.q ** rigged.charges(config)[1]
            for k in range(1, len(lam)):
                mults = combinat.multiplicities(config.nus[k - 1])
                for i in range(1, ell):
                    p = rigged.vacancy(config, k, i) + witness.f[(k, i)]
                    if p < 0:
                        term = combinat.QRing.zero
                        break
                    term = term * combinat.q_binomial(mults.get(i, 0), p)
                if not term:
                    break
            poly = poly + sign * term

    assert all(c >= 0 for c in combinat.poly_to_dict(poly).values()), "negative coefficients"
    return poly


def rect_counts(rects, ell, n):
    """L_i^(a): the number of rectangles of width i and height a, i in 1..ell, a in 1..n-1."""
    return [
        [sum(1 for h, w in rects if (h, w) == (a, i)) for a in range(1, n)]
        for i in range(1, ell + 1)
    ]


def g_offset(lam, rects, ell):
    """g(R, lam) = ||R|| - 1/2 sum C^-1_ab L_j^a Lbar_j^b + 1/(2 ell) sum_j (lam_j - |lam|/n)^2.

    Lbar_j^b = sum_{i <= ell} min(j, i) L_i^b.
    """
    n = len(lam)
    L = rect_counts(rects, ell, n)
    Cinv = cartan_inverse(n - 1)
    Lbar = [
        [sum(min(j, i) * L[i - 1][b] for i in range(1, ell + 1)) for b in range(n - 1)]
        for j in range(1, ell + 1)
    ]
    cross = sum(
        Cinv[a][b] * L[j][a] * Lbar[j][b]
        for j in range(ell)
        for a in range(n - 1)
        for b in range(n - 1)
    )
    mean = sympy.Rational(sum(lam), n)
    spread = sum((p - mean) ** 2 for p in lam) / (2 * ell)
    return combinat.norm(rects) - sympy.Rational(1, 2) * cross + spread


def mn_system(lam, rects, ell):
    """Build the MNSystem of (lam; R) at level ell.

    The bound on m_i^(a) is |nu^(a-1)| + |nu^(a+1)| + |xi^(a)|, which dominates every
    vacancy number of block a.
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    n = len(lam)
    sizes = rigged.config_sizes(lam, rects)
    padded = (0,) + sizes + (0,)
    bounds = tuple(padded[a - 1] + padded[a + 1] + sum(rigged.xi(rects, a)) for a in range(1, n))
    L = rect_counts(rects, ell, n)[: ell - 1]
    return MNSystem(lam, rects, ell, L, sizes, bounds, g_offset(lam, rects, ell))


def _n_row(system, u, m, i, scaled):
    """(n + 1) n_i^(a) for a in 1..n-1, with m_0 = m_ell = 0."""
    A = len(scaled)
    zero = [0] * A
    below = m[i - 2] if i >= 2 else zero
    above = m[i] if i < len(m) else zero
    rhs = [
        system.L[i - 1][b] + u[i - 1][b] - (2 * m[i - 1][b] - below[b] - above[b])
        for b in range(A)
    ]
    return [sum(scaled[a][b] * rhs[b] for b in range(A)) for a in range(A)]


def solve_mn(system, u, prune=True):
    """Yield (m, n) with m >= 0, n = C^-1 (L + u - C m) >= 0 integral and n_ell integral.

    With prune=True the derived multiplicity n_ell^(a) must also be nonnegative.
    """
    A = len(system.lam) - 1
    I = system.ell - 1
    ell = system.ell
    denom = A + 1
    scaled = scaled_cartan_inverse(A).tolist()
    ranges = [range(b + 1) for b in system.bounds]

    def _row_ok(row):
        return all(x >= 0 and x % denom == 0 for x in row)

    def _rec(m, ns):
        if len(m) == I:
            last = _n_row(system, u, m, I, scaled) if I else []
            if I and not _row_ok(last):
                return
            ns = ns + ([[x // denom for x in last]] if I else [])
            top = []
            for a in range(A):
                rest = system.sizes[a] - sum((i + 1) * ns[i][a] for i in range(I))
                if rest % ell or (prune and rest < 0):
                    return
                top.append(rest // ell)
            yield [list(row) for row in m], ns, top
            return
        for row in product(*ranges):
            grown = m + [list(row)]
            if len(grown) >= 2:
                prev = _n_row(system, u, grown, len(grown) - 1, scaled)
                if not _row_ok(prev):
                    continue
                yield from _rec(grown, ns + [[x // denom for x in prev]])
            else:
                yield from _rec(grown, ns)

    yield from _rec([], [])


def mn_exponent(system, u, m):
    """g + 1/2 u.(C^-1 (x) C^-1).u + 1/2 m.(C (x) C^-1).m - m.(I (x) C^-1).u."""
    I = system.ell - 1
    A = len(system.lam) - 1
    Cl, Cl_inv = cartan(I).tolist(), cartan_inverse(I)
    Cn_inv = cartan_inverse(A)
    return (
        system.g
        + sympy.Rational(1, 2) * form(u, Cl_inv, Cn_inv, u)
        + sympy.Rational(1, 2) * form(m, Cl, Cn_inv, m)
        - form(m, _identity(I), Cn_inv, u)
    )


def kostka_level_mn(lam, rects, ell, prune=True):
    """K^ell_{lam R}(q) from the (m,n)-system.

    q^g sum_S (-1)^(|S|+1) q^(u C^-1 C^-1 u / 2) sum_m q^(m C C^-1 m / 2 - m C^-1 u)
    prod_{i < ell, a} [m + n, m], the inner sum running over the finite set of solutions
    of the (m,n)-system.

    Args:
        lam: partition with n parts
        rects: sequence of (height, width)
        ell: level
        prune: drop the solutions with a negative derived n_ell

    Raises:
        SizeMismatch, LevelTooSmall
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    if sum(lam) != combinat.size(rects):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |R| = {combinat.size(rects)}")
    _check_level(lam, rects, ell)
    if len(lam) == 1:
        return combinat.q ** combinat.norm(rects)

    system = mn_system(lam, rects, ell)
    if any(s < 0 for s in system.sizes):
        return combinat.QRing.zero

    coeffs = {}
    for witness in subset_witnesses(lam, ell):
        sign = (-1) ** (len(witness.subset) + 1)
        for m, ns, _ in solve_mn(system, witness.u, prune):
            e = mn_exponent(system, witness.u, m)
            if e.q != 1:
                raise InternalInconsistency(f"exponent {e} of the (m,n)-sum is not an integer")
            term = combinat.QRing.one
            for m_row, n_row in zip(m, ns):
                for x, y in zip(m_row, n_row):
                    term = term * combinat.q_binomial(x, y)
            add_shifted(coeffs, term, int(e), sign)

    return positive_poly(coeffs)


def add_shifted(coeffs, poly, shift, sign=1):
    """Add sign * q^shift * poly to a dict exponent -> coefficient; shift may be negative."""
    for e, c in combinat.poly_to_dict(poly).items():
        coeffs[e + shift] = coeffs.get(e + shift, 0) + sign * c


def positive_poly(coeffs):
    """QPoly of an accumulated sum whose surviving terms must be nonnegative."""
    kept = {e: c for e, c in coeffs.items() if c}
    assert all(e >= 0 and c > 0 for e, c in kept.items()), f"the sum {kept} is not positive"
    return combinat.poly_from_dict(kept)


def permutation_sign(perm):
    """(-1)^(number of inversions)."""
    inversions = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def root_lattice_range(lam, ell):
    """Vectors beta with sum 0 for which lam + rho - (ell + n) beta can be a content.

    beta_i lies between ceil((lam_i + rho_i - |lam| - n + 1) / (ell + n)) and
    floor((lam_i + rho_i) / (ell + n)).
    """
    n = len(lam)
    shifted = [lam[i] + n - 1 - i for i in range(n)]
    k = ell + n
    ranges = [range(ceil((s - sum(lam) - n + 1) / k), floor(s / k) + 1) for s in shifted]
    for head in product(*ranges[:-1]):
        last = -sum(head)
        if last in ranges[-1]:
            yield head + (last,)


@lru_cache(maxsize=None)
def _energy_sum(rects, n, cont):
    poly = combinat.QRing.zero
    for p in paths.enumerate_paths(rects, n, cont):
        poly = poly + combinat.q ** paths.energy(p)
    return poly


def kostka_level_weyl(lam, rects, ell):
    """K^ell_{lam R}(q) as the alternating sum over S_n and the root lattice.

    sum_{tau, beta} (-1)^tau q^(-(ell+n)|beta|^2/2 + (lam+rho|beta)) sum_b q^E(b), the
    inner sum over all paths b of content tau(lam + rho - (ell+n) beta) - rho.
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    if sum(lam) != combinat.size(rects):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |R| = {combinat.size(rects)}")
    _check_level(lam, rects, ell)

    n = len(lam)
    rho = [n - 1 - i for i in range(n)]
    k = ell + n
    coeffs = {}
    for beta in root_lattice_range(lam, ell):
        v = [lam[i] + rho[i] - k * beta[i] for i in range(n)]
        shift = -k * sum(b * b for b in beta) // 2 + sum(
            (lam[i] + rho[i]) * beta[i] for i in range(n)
        )
        for perm in permutations(range(n)):
            cont = tuple(v[perm[i]] - rho[i] for i in range(n))
            if min(cont) < 0:
                continue
            energies = _energy_sum(rects, n, cont)
            add_shifted(coeffs, energies, shift, permutation_sign(perm))

    return positive_poly(coeffs)
