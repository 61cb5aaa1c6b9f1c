"""Perfect crystals B^{k,ell}, ground state paths and affine branching functions.

Weights are classical weights Lambda = sum_i z_i Lambda_i of level sum_i z_i. The branching
function of Lambda in Lambda' (x) Lambda'' with Lambda' = r Lambda_s + (ell' - r) Lambda_0
and Lambda'' = ell'' Lambda_0 is computed twice: as a normalized limit of level-restricted
Kostka polynomials and from its fermionic formula.
"""

import warnings
from itertools import product
from typing import NamedTuple

import numpy as np
import sympy
from scipy.special import comb

from KOSTKA import combinat
from KOSTKA import fermionic
from KOSTKA import paths
from KOSTKA import rigged
from KOSTKA import tableaux
from KOSTKA import utils
from KOSTKA.utils import BadLevel
from KOSTKA.utils import InternalInconsistency
from KOSTKA.utils import NoStabilization


class ClWeight(NamedTuple):
    """Classical weight sum_i z_i Lambda_i, i = 0..n-1."""

    coeffs: tuple

    @property
    def n(self):
        """Rank."""
        return len(self.coeffs)

    @property
    def level(self):
        """<c, Lambda> = sum_i z_i."""
        return sum(self.coeffs)

    def pairing(self, i):
        """<h_i, Lambda>, indices taken mod n."""
        return self.coeffs[i % self.n]


def cl_weight(z):
    """ClWeight from a sequence or a comma-separated string z_0,...,z_{n-1}."""
    if isinstance(z, str):
        z = z.split(",")
    z = tuple(int(x) for x in z)
    assert len(z) >= 2, "a weight needs at least two coefficients"
    assert all(x >= 0 for x in z), "dominant weights have nonnegative coefficients"
    return ClWeight(z)


def fundamental(i, n, mult=1):
    """mult * Lambda_i."""
    z = [0] * n
    z[i % n] = mult
    return ClWeight(tuple(z))


def add_weights(*weights):
    """Sum of classical weights of the same rank."""
    return ClWeight(tuple(sum(z) for z in zip(*(w.coeffs for w in weights))))


def _push_up_left(cells, k):
    """Push the entries of every column to the top, then every row to the left."""
    columns = {}
    for (r, c), x in sorted(cells.items()):
        columns.setdefault(c, []).append(x)
    rows = [[] for _ in range(k)]
    for c in sorted(columns):
        for r, x in enumerate(columns[c]):
            rows[r].append(x)
    return rows


def _push_down_right(cells, k):
    """Push the entries of every column to the bottom, then every row to the right."""
    columns = {}
    for (r, c), x in sorted(cells.items()):
        columns.setdefault(c, []).append(x)
    rows = [[] for _ in range(k)]
    for c in sorted(columns):
        col = columns[c]
        for r, x in enumerate(col, start=k - len(col)):
            rows[r].append(x)
    return rows


def min_element(Lam, k, ell, side="phi"):
    """The element b of B^{k,ell} with phi(b) = Lambda (side 'phi') or eps(b) = Lambda ('eps').

    For 'phi' the k x ell tableau T has bottom row containing <h_i, Lambda> letters i
    (i = n standing for 0) and every row above one less; the positive part of T pushed
    up and left gives b on the shape complementary to the nonpositive part, and the
    remaining cells of row j get the largest letter n - k + j + 1. For 'eps' the first row
    of U has <h_i, Lambda> letters i + 1 mod n, every row below one more; the part of U
    at most n is pushed down and right and the remaining cells of row j get j + 1.

    Raises:
        BadLevel: if the level of Lambda is not ell
    """
    n = Lam.n
    assert 1 <= k <= n - 1, f"perfect crystals B^(k,ell) need 1 <= k <= {n - 1}"
    assert side in ("phi", "eps"), f"Unknown side {side}!"
    if Lam.level != ell:
        raise BadLevel(f"weight {Lam.coeffs} has level {Lam.level}, expected {ell}")

    if side == "phi":
        bottom = sorted(i for i in range(1, n + 1) for _ in range(Lam.pairing(i)))
        T = [[x - (k - 1 - r) for x in bottom] for r in range(k)]
        cells = {(r, c): x for r, row in enumerate(T) for c, x in enumerate(row) if x > 0}
        rows = _push_up_left(cells, k)
        b = tuple(tuple(row + [n - k + r + 1] * (ell - len(row))) for r, row in enumerate(rows))
    else:
        top = sorted(i % n + 1 for i in range(1, n + 1) for _ in range(Lam.pairing(i)))
        U = [[x + r for x in top] for r in range(k)]
        cells = {(r, c): x for r, row in enumerate(U) for c, x in enumerate(row) if x <= n}
        rows = _push_down_right(cells, k)
        b = tuple(tuple([r + 1] * (ell - len(row)) + row) for r, row in enumerate(rows))

    stats = tableaux.phi_vector(b, n) if side == "phi" else tableaux.eps_vector(b, n)
    if not tableaux.is_column_strict(b, n) or stats != Lam.coeffs:
        raise InternalInconsistency(f"no element of B^({k},{ell}) with {side} = {Lam.coeffs}")
    return b


def sigma_map(b, n):
    """sigma = psi^(-k) on B^{k,ell}, k the number of rows; phi(sigma(b)) = eps(b) on B_min."""
    assert len(b) < n, "sigma acts on B^(k,ell) with k <= n - 1"
    return tableaux.psi_power(b, n, -len(b))


def ground_state_path(Lam, k, N):
    """The first N steps bbar_1 (x) ... (x) bbar_N of the ground state path of (Lambda, B^{k,ell}).

    bbar_1 = b(Lambda) and bbar_{j+1} = sigma(bbar_j). Returned as a path, so that
    factors[0] is bbar_N.
    """
    b = min_element(Lam, k, Lam.level, "phi")
    steps = []
    for _ in range(N):
        steps.append(b)
        b = sigma_map(b, Lam.n)
    return tuple(reversed(steps))


def weight_vector(p, n):
    """(<h_i, wt(p)>)_i = phi_i(p) - eps_i(p), i = 0..n-1."""
    return tuple(phi - eps for phi, eps in zip(paths.phi_vector(p, n), paths.eps_vector(p, n)))


def is_highest_weight(p, LamPrime, Lam):
    """p is in H(Lambda', B, Lambda): eps_i(p) <= <h_i, Lambda'> and Lambda' + wt(p) = Lambda."""
    n = Lam.n
    eps = paths.eps_vector(p, n)
    if any(e > LamPrime.pairing(i) for i, e in enumerate(eps)):
        return False
    wt = weight_vector(p, n)
    return all(LamPrime.pairing(i) + wt[i] == Lam.pairing(i) for i in range(n))


def highest_weight_paths(LamPrime, rects, Lam):
    """The set H(Lambda', B, Lambda) for B the tensor product of the given rectangles."""
    return [p for p in paths.enumerate_paths(rects, Lam.n) if is_highest_weight(p, LamPrime, Lam)]


def check_theorem_iso(Lam, LamPrime, b, k, ell):
    """Compare the local isomorphism of x (x) b with psi^k(b) (x) y.

    x and y are the elements of B^{k,ell} with eps(x) = Lambda and eps(y) = Lambda',
    and b lies in H(Lambda', B', Lambda) for a perfect crystal B' of level at most ell.
    """
    n = Lam.n
    assert is_highest_weight((b,), LamPrime, Lam), "b is not in H(Lambda', B', Lambda)"
    x = min_element(Lam, k, ell, "eps")
    y = min_element(LamPrime, k, ell, "eps")
    return paths.local_iso((b, x), 1) == (y, tableaux.psi_power(b, n, k))


def ground_energy(yprime, k, M, n, ellprime):
    """E(y' (x) p') = E(y') + |y'| k M + n ell' binom(kM, 2).

    p' is the first nM steps of the ground state path of (ell' Lambda_0, B^{k,ell'}).
    """
    size = sum(tableaux.size(b) for b in yprime)
    return paths.energy(yprime) + size * k * M + n * ellprime * comb(k * M, 2, exact=True)


def ground_energy_direct(yprime, k, M, n, ellprime):
    """E(y' (x) p') from the energy function."""
    p = ground_state_path(fundamental(0, n, ellprime), k, n * M)
    return paths.energy(p + tuple(yprime))


def check_energy_normalization(LamPrime, k, yprime, N):
    """E(b (x) y') - E(p (x) y') equals E(b (x) bbar_1) - E(p (x) bbar_1) on B^{k,ell'}^N.

    p is the first N steps of the ground state path of (Lambda', B^{k,ell'}).
    """
    n, ellprime = LamPrime.n, LamPrime.level
    yprime = tuple(yprime)
    p = ground_state_path(LamPrime, k, N)
    first = p[-1]
    base_y = paths.energy(yprime + p)
    base_b = paths.energy((first,) + p)
    for b in paths.enumerate_paths(((k, ellprime),) * N, n):
        if paths.energy(yprime + b) - base_y != paths.energy((first,) + b) - base_b:
            return False
    return True


def class_condition(Lam, r, s):
    """rs = sum_i i z_i mod n, the condition for Lambda to occur in Lambda' (x) Lambda''."""
    return (r * s - sum(i * z for i, z in enumerate(Lam.coeffs))) % Lam.n == 0


def dominant_lambda(Lam, size):
    """The partition of the given size with n parts projecting to Lambda - ell Lambda_0.

    lam_a - lam_{a+1} = z_a for a = 1..n-1; None if no such partition exists.
    """
    n = Lam.n
    rest = size - sum(a * Lam.pairing(a) for a in range(1, n))
    if rest < 0 or rest % n:
        return None
    last = rest // n
    return tuple(last + sum(Lam.pairing(b) for b in range(a, n)) for a in range(1, n + 1))


def branching_rects(r, s, ellprime, k, M, n):
    """R^(M): the rectangle (r^s) followed by nM rectangles (ell'^k)."""
    head = ((s, r),) if r > 0 else ()
    return head + ((k, ellprime),) * (n * M)


def branching_paths(Lam, LamPrime, LamDoublePrime, k, N):
    """sum of q^(E_N(b) - E_N(bbar)) over H(Lambda' + Lambda'', B^{k,ell'}^N, Lambda).

    E_N(b) = E(b (x) bbar_1) with bbar the ground state path of (Lambda', B^{k,ell'}).
    """
    n = Lam.n
    ground = ground_state_path(LamPrime, k, N)
    first = ground[-1]
    base = paths.energy((first,) + ground)
    target = add_weights(LamPrime, LamDoublePrime)

    coeffs = {}
    for p in paths.enumerate_paths(((k, LamPrime.level),) * N, n):
        if is_highest_weight(p, target, Lam):
            e = paths.energy((first,) + p) - base
            coeffs[e] = coeffs.get(e, 0) + 1
    return fermionic.positive_poly(coeffs)


def _approximant(inputs, M):
    """Normalized K^ell_{lam^(M), R^(M)} as a dict exponent -> coefficient, or None."""
    Lam, r, s, ellprime, k = inputs
    n = Lam.n
    rects = branching_rects(r, s, ellprime, k, M, n)
    lam = dominant_lambda(Lam, combinat.size(rects))
    if lam is None:
        return None

    poly = rigged.kostka_via_rc(lam, rects, Lam.level)
    shift = r * s * k * M + n * ellprime * comb(k * M, 2, exact=True)
    out = {e - shift: c for e, c in combinat.poly_to_dict(poly).items()}
    assert all(e >= 0 for e in out), f"approximant M={M} has negative exponents after the shift"
    return out


def _to_series(coeffs, offset, degree):
    """QSeries with the first nonzero coefficient moved to exponent 0."""
    kept = {e: c for e, c in coeffs.items() if c and e <= degree}
    if not kept:
        return combinat.QSeries(sympy.Rational(offset), {}, degree)
    e0 = min(kept)
    return combinat.QSeries(
        sympy.Rational(offset) + e0, {e - e0: c for e, c in kept.items()}, degree - e0
    )


def branching_series(
    Lam, r, s, ellprime, elldoubleprime, truncation_degree=5, k=1, max_M=8, processes=1,
    verbose=False,
):
    """Branching function as the limit of q^(-rskM - n ell' binom(kM,2)) K^ell_{lam^(M) R^(M)}.

    Approximants are computed for M = 1, 2, ... until two consecutive ones agree up to
    truncation_degree.

    Args:
        Lam: ClWeight of level ell = ell' + ell''
        r, s: Lambda' = r Lambda_s + (ell' - r) Lambda_0
        ellprime, elldoubleprime: levels of Lambda' and Lambda'' = ell'' Lambda_0
        truncation_degree: number of coefficients compared
        k: number of rows of the perfect crystal B^{k,ell'}
        max_M: largest M tried
        processes: number of processes (1 computes the approximants one by one)
        verbose: print progress

    Returns:
        QSeries

    Raises:
        NoStabilization: if no two consecutive approximants up to max_M agree
    """
    n = Lam.n
    assert Lam.level == ellprime + elldoubleprime, "level of Lambda must be ell' + ell''"
    assert 0 <= r <= ellprime, "r must lie in 0..ell'"
    assert r == 0 or 1 <= s <= n - 1, f"s must lie in 1..{n - 1}"
    D = truncation_degree
    if not class_condition(Lam, r, s):
        warnings.warn(f"{Lam.coeffs} does not occur for (r, s) = ({r}, {s}); returning 0")
        return combinat.QSeries(sympy.Rational(0), {}, D)

    inputs = (Lam, r, s, ellprime, k)
    Ms = list(range(1, max_M + 1))
    if processes == 1:
        results = iter(_approximant(inputs, M) for M in Ms)
    else:
        results = iter(
            utils.parallel_proc(
                _approximant, Ms, inputs, processes=processes, desc="Approximants",
                verbose=verbose,
            )
        )

    previous = None
    for M, coeffs in zip(Ms, results):
        if coeffs is None:
            continue
        low = {e: c for e, c in coeffs.items() if e <= D}
        if verbose:
            print(f"\n---- M = {M}: {combinat.poly_to_str(combinat.poly_from_dict(low))}")
        if previous is not None and low and low == previous:
            return _to_series(low, 0, D)
        previous = low

    raise NoStabilization(f"approximants did not stabilize up to degree {D} with M <= {max_M}")


def _radius(Q_min, v, c, T):
    """Bound on |m| from 1/2 Q_min |m|^2 - |v| |m| + c <= T, or None if no m qualifies.

    All arguments are floats; numpy does not accept sympy numbers.
    """
    disc = v * v + 2 * Q_min * (T - c)
    if disc < 0:
        return None
    return (v + np.sqrt(disc)) / Q_min


def _fermionic_terms(data, witnesses, T, m_cap):
    """(sign, exponent, m, n) for every admissible m with exponent at most T."""
    ell, n, ellprime, Lr, shifts = data
    I, A = ell - 1, n - 1
    Cl, Cl_inv = fermionic.cartan(I), fermionic.cartan_inverse(I)
    Cn_inv = fermionic.cartan_inverse(A)
    scaled = fermionic.scaled_cartan_inverse(A).tolist()
    Q = np.kron(Cl, np.array(Cn_inv, dtype=float))
    Q_min = np.linalg.eigvalsh(Q).min()
    ident = np.eye(I, dtype=int).tolist()
    Cl = Cl.tolist()

    terms = []
    for witness in witnesses:
        u = witness.u
        sign = (-1) ** (len(witness.subset) + 1)
        c = fermionic.form(u, Cl_inv, Cn_inv, u) / 2
        v = [[sum(Cn_inv[a][b] * u[i][b] for b in range(A)) for a in range(A)] for i in range(I)]
        norm_v = float(np.linalg.norm(np.array(v, dtype=float)))
        radius = _radius(float(Q_min), norm_v, float(c), float(T))
        if radius is None:
            continue
        top = int(np.floor(radius + 1e-9))
        if top > m_cap:
            warnings.warn(f"m-entries up to {top} are needed but capped at {m_cap}")
            top = m_cap

        for flat in product(range(top + 1), repeat=I * A):
            m = [list(flat[i * A : (i + 1) * A]) for i in range(I)]
            top_row = [
                sum(Cn_inv[a][b] * m[I - 1][b] for b in range(A))
                - sum(Cl_inv[I - 1][j] * v[j][a] for j in range(I))
                - shifts[a]
                for a in range(A)
            ]
            if any(x.q != 1 for x in map(sympy.Rational, top_row)):
                continue

            ns, ok = {}, True
            for i in range(I):
                if i + 1 == ellprime:
                    continue
                rhs = [
                    Lr[i][b] + u[i][b] - sum(Cl[i][j] * m[j][b] for j in range(I)) for b in range(A)
                ]
                row = [sum(scaled[a][b] * rhs[b] for b in range(A)) for a in range(A)]
                if any(x < 0 or x % (A + 1) for x in row):
                    ok = False
                    break
                ns[i] = [x // (A + 1) for x in row]
            if not ok:
                continue

            e = c + fermionic.form(m, Cl, Cn_inv, m) / 2 - fermionic.form(m, ident, Cn_inv, u)
            if e <= T:
                terms.append((sign, sympy.Rational(e), m, ns))
    return terms


def branching_fermionic(Lam, r, s, ellprime, truncation_degree=5, m_cap=12, verbose=False):
    """Branching function from its fermionic formula, truncated at truncation_degree.

    q^(rs(s-n)/(2n) + sum_j (lam_j - |lam|/n)^2 / (2 ell)) sum_S (-1)^(|S|+1)
    q^(u C^-1 C^-1 u / 2) sum_m q^(m C C^-1 m / 2 - m C^-1 u) prod_{i != ell'} [m + n, m]
    prod_a 1 / (q)_{m_ell'^(a)}, with n = C^-1 (u + e_r e_s) - C C^-1 m for i != ell' and
    the integrality condition on the last row. lam is the partition with lam_n = 0.

    Args:
        Lam: ClWeight of level ell = ell' + ell'' with ell'' >= 1
        r, s: Lambda' = r Lambda_s + (ell' - r) Lambda_0
        ellprime: level of Lambda'
        truncation_degree: number of coefficients computed
        m_cap: largest m-entry enumerated
        verbose: print progress

    Returns:
        QSeries
    """
    n, ell = Lam.n, Lam.level
    D = truncation_degree
    assert 1 <= ellprime < ell, "the fermionic formula needs 1 <= ell' < ell"
    assert 0 <= r <= ellprime, "r must lie in 0..ell'"
    if not class_condition(Lam, r, s):
        warnings.warn(f"{Lam.coeffs} does not occur for (r, s) = ({r}, {s}); returning 0")
        return combinat.QSeries(sympy.Rational(0), {}, D)

    lam = dominant_lambda(Lam, sum(a * Lam.pairing(a) for a in range(1, n)))
    mean = sympy.Rational(sum(lam), n)
    spread = sum((p - mean) ** 2 for p in lam) / (2 * ell)
    prefactor = sympy.Rational(r * s * (s - n), 2 * n) + spread
    shifts = [sum(lam[j] - mean for j in range(a + 1)) / ell for a in range(n - 1)]
    Lr = [[int((i, a) == (r, s)) for a in range(1, n)] for i in range(1, ell)]
    data = (ell, n, ellprime, Lr, shifts)
    witnesses = list(fermionic.subset_witnesses(lam, ell))

    Cl_inv, Cn_inv = fermionic.cartan_inverse(ell - 1), fermionic.cartan_inverse(n - 1)
    T = min(fermionic.form(w.u, Cl_inv, Cn_inv, w.u) for w in witnesses) / 2 + D
    while True:
        terms = _fermionic_terms(data, witnesses, T, m_cap)
        if not terms:
            return combinat.QSeries(prefactor, {}, D)
        base = min(e for _, e, _, _ in terms)
        if base + D <= T:
            break
        T = base + D

    if verbose:
        print(f"\n---- {len(terms)} fermionic terms, lowest exponent {base}")

    coeffs = {}
    for sign, e, m, ns in terms:
        d = e - base
        if d.q != 1:
            raise InternalInconsistency(f"exponents {e} and {base} differ by a fraction")
        d = int(d)
        if d > D:
            continue
        term = combinat.QRing.one
        for i, row in ns.items():
            for x, y in zip(m[i], row):
                term = term * combinat.q_binomial(x, y)
        for x in m[ellprime - 1]:
            term = term * combinat.inverse_q_pochhammer(x, D - d)
        fermionic.add_shifted(coeffs, combinat.truncate(term, D - d), d, sign)

    series = _to_series(coeffs, prefactor + base, D)
    assert all(c > 0 for c in series.coeffs.values()), "branching coefficients must be positive"
    return series


def compare_branching(Lam, r, s, ellprime, truncation_degree=5, k=1, max_M=8, m_cap=12):
    """Both branching pipelines side by side.

    Returns:
        dict with the two series and whether coefficients and offsets agree
    """
    limit = branching_series(
        Lam, r, s, ellprime, Lam.level - ellprime, truncation_degree, k=k, max_M=max_M
    )
    ferm = branching_fermionic(Lam, r, s, ellprime, truncation_degree, m_cap=m_cap)
    degree = min(limit.truncation_degree, ferm.truncation_degree)
    coeffs_match = {e: c for e, c in limit.coeffs.items() if e <= degree} == {
        e: c for e, c in ferm.coeffs.items() if e <= degree
    }
    offset_match = limit.offset == ferm.offset
    if coeffs_match and not offset_match:
        warnings.warn(f"offsets differ: {limit.offset} (limit) and {ferm.offset} (fermionic)")
    return {
        "limit": limit,
        "fermionic": ferm,
        "coeffs_match": coeffs_match,
        "offset_match": offset_match,
    }
