"""Paths: tensor products of rectangular tableaux, local isomorphisms and energy.

A path is a tuple of rectangular tableaux (b_1, ..., b_L) standing for
b_L (x) ... (x) b_1, so that factors[0] is the rightmost tensor factor and
word(path) = word(b_L) ... word(b_1).
"""

from functools import lru_cache

from KOSTKA import combinat
from KOSTKA import lr
from KOSTKA import tableaux
from KOSTKA import utils
from KOSTKA.utils import SizeMismatch

path_rects = lr.path_rects


def path_word(p):
    """word(b_L) ... word(b_1)."""
    return tuple(x for b in reversed(p) for x in tableaux.reading_word(b))


def from_path_word(word, rects):
    """Cut a word into the factors of a path with the given rectangles."""
    factors = [None] * len(rects)
    pos = 0
    for j in reversed(range(len(rects))):
        h, w = rects[j]
        factors[j] = tableaux.from_word(word[pos : pos + h * w], [w] * h)
        pos += h * w
    return tuple(factors)


def content(p, n):
    """Content of a path."""
    return tableaux.content(path_word(p), n)


def tensor_crystal_op(p, i, n, direction="raise"):
    """e_i or f_i on a path, i in 0..n-1.

    For i >= 1 the operator acts on word(p) by bracket matching; for i = 0 it is
    conjugated by psi applied to every factor.

    Returns:
        the image path, or None where the operator is undefined
    """
    if i == 0:
        image = tensor_crystal_op(tuple(tableaux.psi(b, n) for b in p), 1, n, direction)
        if image is None:
            return None
        return tuple(tableaux.psi_inverse(b, n) for b in image)

    w = tableaux.word_op(path_word(p), i, direction)
    return None if w is None else from_path_word(w, path_rects(p))


def phi_eps(p, i, n):
    """(phi_i, eps_i) of a path, i in 0..n-1."""
    if i == 0:
        return tableaux.string_stats(path_word(tuple(tableaux.psi(b, n) for b in p)), 1)
    return tableaux.string_stats(path_word(p), i)


def phi_vector(p, n):
    """(phi_0, ..., phi_{n-1})."""
    return tuple(phi_eps(p, i, n)[0] for i in range(n))


def eps_vector(p, n):
    """(eps_0, ..., eps_{n-1})."""
    return tuple(phi_eps(p, i, n)[1] for i in range(n))


def is_lattice_suffix(word, n):
    """Every final subword of word has partition content."""
    counts = [0] * (n + 1)
    for x in reversed(word):
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def is_classically_restricted(p, n):
    """eps_i(p) = 0 for i = 1..n-1, equivalently word(p) is a lattice word."""
    by_eps = all(phi_eps(p, i, n)[1] == 0 for i in range(1, n))
    by_lattice = is_lattice_suffix(path_word(p), n)
    assert by_eps == by_lattice, "bracket rule and lattice test disagree"
    return by_eps


def is_level_restricted(p, ell, n):
    """Classically restricted with eps_0(p) <= ell."""
    return is_classically_restricted(p, n) and phi_eps(p, 0, n)[1] <= ell


def enumerate_paths(rects, n, cont=None, lattice=False, head=()):
    """All paths of P_R over 1..n, optionally of fixed content and classically restricted.

    Factors are chosen from b_1 upwards; content and lattice conditions are
    checked on every partial suffix b_j (x) ... (x) b_1.

    Args:
        rects: sequence of (height, width)
        n: rank
        cont: required content, or None
        lattice: keep only classically restricted paths
        head: fixed first factors (b_1, ..., b_k)
    """
    rects = combinat.rect_seq(rects)
    options = [tableaux.enumerate_tableaux([w] * h, n) for h, w in rects]
    out = []

    def _rec(j, prefix, remaining):
        if j == len(rects):
            if remaining is None or not any(remaining):
                out.append(tuple(prefix))
            return
        for b in options[j]:
            left = remaining
            if remaining is not None:
                left = [r - c for r, c in zip(remaining, tableaux.content(b, n))]
                if min(left) < 0:
                    continue
            if lattice and not is_lattice_suffix(path_word(tuple(prefix) + (b,)), n):
                continue
            _rec(j + 1, prefix + [b], left)

    remaining = None
    if cont is not None:
        remaining = list(cont)
        for b in head:
            remaining = [r - c for r, c in zip(remaining, tableaux.content(b, n))]
        if min(remaining, default=0) < 0:
            return out
    if lattice and not is_lattice_suffix(path_word(tuple(head)), n):
        return out

    _rec(len(head), list(head), remaining)
    return out


@lru_cache(maxsize=None)
def _sigma(b1, b2):
    P, Q = lr.rsk((b1, b2))
    swapped = (Q.rects[1], Q.rects[0])
    Q_new = lr.LRTableau(lr.lr_unique(tableaux.shape(P), swapped), "LR", swapped)
    return lr.rsk_inverse(P, Q_new)


def local_iso(p, pos):
    """Local isomorphism sigma_pos exchanging the rectangles at positions pos and pos + 1.

    Computed through RSK: P(b) is kept and Q(b) is replaced by the unique element of
    the LR set with the two rectangles exchanged.
    """
    k = pos - 1
    assert 0 <= k < len(p) - 1, f"position {pos} out of range"
    return p[:k] + _sigma(p[k], p[k + 1]) + p[k + 2 :]


@lru_cache(maxsize=None)
def local_energy(b2, b1):
    """H(b2 (x) b1) = d(Q(b2 (x) b1))."""
    _, Q = lr.rsk((b1, b2))
    return lr.d_statistic(tableaux.shape(Q.tableau), len(b1[0]), len(b2[0]))


def energy(p):
    """E(b) = sum_{i<j} H(b_j^(i+1) (x) b_i).

    b_j^(i+1) is the factor at position i + 1 after moving b_j there by local
    isomorphisms; for equal rectangles these are identities and E reduces to
    sum_i (L - i) H(b_{i+1} (x) b_i).
    """
    L = len(p)
    if L <= 1:
        return 0

    if len(set(path_rects(p))) == 1:
        return sum((L - i) * local_energy(p[i], p[i - 1]) for i in range(1, L))

    total = 0
    for j in range(2, L + 1):
        cur = p
        for i in range(j - 1, 0, -1):
            total += local_energy(cur[i], cur[i - 1])
            if i > 1:
                cur = local_iso(cur, i)
    return total


def energy_by_rsk(p, n, method="via_average"):
    """Energy as the generalized charge of the recording tableau, E(b) = c_R(Q(b))."""
    return lr.charge(lr.rsk(p)[1], method, n)


def split_top_row(p):
    """i^<: split the top row off the rightmost factor, keeping word(p)."""
    b = p[0]
    assert len(b) > 1, "only a factor with at least two rows can be split"
    return ((b[0],), b[1:]) + p[1:]


def embed_to_rows(p, steps=None):
    """The embedding i_R: P_R -> P_{r(R)} by local isomorphisms and i^< steps."""
    if steps is None:
        steps = lr.embedding_steps(path_rects(p))
    for kind, pos in steps:
        p = local_iso(p, pos) if kind == "s" else split_top_row(p)
    return p


def _kostka_worker(inputs, first):
    """Energies of the restricted paths of given weight whose rightmost factor is first."""
    lam, rects, ell, n = inputs
    energies = {}
    for p in enumerate_paths(rects, n, lam, lattice=True, head=(first,)):
        if ell is not None and not is_level_restricted(p, ell, n):
            continue
        e = energy(p)
        energies[e] = energies.get(e, 0) + 1
    return energies


def kostka_via_paths(lam, rects, ell=None, processes=1, verbose=False):
    """K_{lam R}(q) (or K^ell_{lam R}(q)) as the energy generating function of paths.

    Args:
        lam: partition with n parts, n being the rank
        rects: sequence of (height, width)
        ell: level, or None for the classically restricted sum
        processes: number of processes (-1 for all cores)
        verbose: print progress

    Returns:
        QPoly
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    n = len(lam)
    if sum(lam) != combinat.size(rects):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |R| = {combinat.size(rects)}")
    if not rects:
        return combinat.QRing.one

    h, w = rects[0]
    firsts = tableaux.enumerate_tableaux([w] * h, n)
    results = utils.parallel_proc(
        _kostka_worker,
        firsts,
        (lam, rects, ell, n),
        processes=processes,
        desc="Summing over paths",
        verbose=verbose,
    )

    coeffs = {}
    for energies in results:
        for e, c in energies.items():
            coeffs[e] = coeffs.get(e, 0) + c
    return combinat.poly_from_dict(coeffs)


def path_to_str(p):
    """Text form with factors separated by '|', rightmost factor last."""
    return "|".join(tableaux.tableau_to_str(b) for b in reversed(p))


def parse_path(text):
    """Inverse of path_to_str."""
    return tuple(tableaux.parse_tableau(part) for part in reversed(text.split("|")))
