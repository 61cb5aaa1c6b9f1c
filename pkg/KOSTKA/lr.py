"""Littlewood-Richardson tableaux, RSK on paths and generalized charge."""

from functools import lru_cache
from math import factorial
from typing import NamedTuple

from KOSTKA import combinat
from KOSTKA import tableaux
from KOSTKA.utils import DomainMismatch
from KOSTKA.utils import InternalInconsistency
from KOSTKA.utils import SizeMismatch
from KOSTKA.utils import TooLarge

FAMILIES = ("LR", "CLR", "RLR")


class LRTableau(NamedTuple):
    """Tableau together with the family of its alphabet and its rectangles."""

    tableau: tuple
    family: str
    rects: tuple


def _offsets(rects, family):
    out, total = [], 0
    for h, w in rects:
        out.append(total)
        total += h if family == "LR" else h * w
    return out


def targets(rects, family="LR"):
    """The key tableaux Z_j of a family with their alphabet intervals.

    Args:
        rects: sequence of (height, width)
        family: 'LR' (Y_j), 'CLR' (ZC_j, column-wise standard) or 'RLR' (ZR_j, row-wise standard)

    Returns:
        list of (lo, hi, Z_j)
    """
    assert family in FAMILIES, f"Unknown family {family}!"
    out = []
    for off, (h, w) in zip(_offsets(rects, family), rects):
        if family == "LR":
            Z = tableaux.yamanouchi([w] * h, off)
            out.append((off + 1, off + h, Z))
        elif family == "CLR":
            Z = tuple(tuple(off + c * h + r + 1 for c in range(w)) for r in range(h))
            out.append((off + 1, off + h * w, Z))
        else:
            Z = tuple(tuple(off + r * w + c + 1 for c in range(w)) for r in range(h))
            out.append((off + 1, off + h * w, Z))
    return out


def _horizontal_strips(sigma, lam, m):
    """New shapes obtained by adding a horizontal strip of m cells inside lam."""

    def _rec(r, left, acc):
        if r == len(sigma):
            if left == 0:
                yield tuple(acc)
            return
        bound = lam[r] if r == 0 else min(lam[r], sigma[r - 1])
        for a in range(min(left, bound - sigma[r]), -1, -1):
            yield from _rec(r + 1, left - a, acc + [sigma[r] + a])

    yield from _rec(0, m, [])


def _slr(lam, tgts):
    """Tableaux of shape lam whose restriction to each interval rectifies to its key."""
    lam = tuple(lam)
    mult = {}
    checks = {}
    for lo, hi, Z in tgts:
        for x in tableaux.reading_word(Z):
            mult[x] = mult.get(x, 0) + 1
        checks[hi] = (lo, Z)
    top = max(mult) if mult else 0
    out = []

    def _rec(v, rows):
        if v > top:
            if tuple(len(row) for row in rows) == lam:
                out.append(tuple(tuple(row) for row in rows if row))
            return
        sigma = tuple(len(row) for row in rows)
        for new in _horizontal_strips(sigma, lam, mult.get(v, 0)):
            grown = [row + [v] * (new[r] - sigma[r]) for r, row in enumerate(rows)]
            if v in checks:
                lo, Z = checks[v]
                t = tuple(tuple(row) for row in grown if row)
                if tableaux.schensted_p(tableaux.restricted_word(t, lo, v)) != Z:
                    continue
            _rec(v + 1, grown)

    _rec(1, [[] for _ in lam])
    return out


@lru_cache(maxsize=None)
def _enumerate_lr(lam, rects, family):
    return tuple(_slr(lam, targets(rects, family)))


def enumerate_lr(lam, rects, family="LR"):
    """All tableaux of LR(lam; R), CLR(lam; R) or RLR(lam; R).

    Args:
        lam: partition (trailing zeros allowed)
        rects: sequence of (height, width)
        family: 'LR', 'CLR' or 'RLR'

    Returns:
        list of LRTableau
    """
    lam = tuple(p for p in lam if p > 0)
    rects = combinat.rect_seq(rects)
    if sum(lam) != combinat.size(rects):
        raise SizeMismatch(f"|lambda| = {sum(lam)} but |R| = {combinat.size(rects)}")
    return [LRTableau(t, family, rects) for t in _enumerate_lr(lam, rects, family)]


def lr_unique(lam, rects):
    """The unique element of a multiplicity-free LR set of two rectangles."""
    found = enumerate_lr(lam, rects)
    if len(found) != 1:
        raise InternalInconsistency(
            f"LR({lam}; {rects}) has {len(found)} elements, expected exactly one"
        )
    return found[0].tableau


def is_lr(qt):
    """Check the defining restriction condition of an LRTableau."""
    for lo, hi, Z in targets(qt.rects, qt.family):
        if tableaux.schensted_p(tableaux.restricted_word(qt.tableau, lo, hi)) != Z:
            return False
    return tableaux.is_column_strict(qt.tableau)


def shift(t, a):
    """Add a to every letter."""
    return tuple(tuple(x + a for x in row) for row in t)


def _transpose(t):
    if not t:
        return t
    return tuple(tuple(row[c] for row in t if len(row) > c) for c in range(len(t[0])))


def _positional_map(rects, source, target):
    table = {}
    for (_, _, Zs), (_, _, Zt) in zip(targets(rects, source), targets(rects, target)):
        for row_s, row_t in zip(Zs, Zt):
            table.update(zip(row_s, row_t))
    return table


def _std(qt):
    rects = qt.rects
    src = qt.tableau
    rows = [list(row) for row in src]
    for off_lr, off_std, (h, w) in zip(_offsets(rects, "LR"), _offsets(rects, "RLR"), rects):
        for r in range(h):
            letter = off_lr + r + 1
            cells = sorted(
                (c, rr) for rr, row in enumerate(src) for c, x in enumerate(row) if x == letter
            )
            for k, (c, rr) in enumerate(cells):
                rows[rr][c] = off_std + r * w + k + 1
    return tuple(tuple(row) for row in rows)


def _std_inv(qt):
    table = {}
    rects = qt.rects
    for off_lr, off_std, (h, w) in zip(_offsets(rects, "LR"), _offsets(rects, "RLR"), rects):
        for r in range(h):
            for c in range(w):
                table[off_std + r * w + c + 1] = off_lr + r + 1
    return tuple(tuple(table[x] for x in row) for row in qt.tableau)


RELABELINGS = {
    "gamma": ("CLR", "RLR"),
    "gamma_inv": ("RLR", "CLR"),
    "std": ("LR", "RLR"),
    "std_inv": ("RLR", "LR"),
    "beta": ("LR", "CLR"),
    "tr": (None, None),
    "tr_lr": ("CLR", "CLR"),
}


def relabel(qt, name):
    """Apply one of the relabeling bijections between LR, CLR and RLR tableaux.

    Args:
        qt: LRTableau in the domain family of the map
        name: 'gamma' (CLR -> RLR), 'gamma_inv', 'std' (LR -> RLR), 'std_inv', 'beta' (LR -> CLR),
            'tr' (RLR(lam; R) <-> CLR(lam^t; R^t)) or 'tr_lr' (CLR(lam; R) -> CLR(lam^t; R^t))

    Returns:
        LRTableau in the codomain family
    """
    assert name in RELABELINGS, f"Unknown relabeling {name}!"
    source, target = RELABELINGS[name]

    if name == "tr":
        if qt.family not in ("RLR", "CLR"):
            raise DomainMismatch(f"tr is defined on RLR and CLR tableaux, got {qt.family}")
        rects_t = tuple((w, h) for h, w in qt.rects)
        target = "CLR" if qt.family == "RLR" else "RLR"
        return LRTableau(_transpose(qt.tableau), target, rects_t)

    if qt.family != source:
        raise DomainMismatch(f"{name} is defined on {source} tableaux, got {qt.family}")

    if name == "std":
        return LRTableau(_std(qt), target, qt.rects)
    if name == "std_inv":
        return LRTableau(_std_inv(qt), target, qt.rects)
    if name == "beta":
        return relabel(relabel(qt, "std"), "gamma_inv")
    if name == "tr_lr":
        return relabel(relabel(qt, "gamma"), "tr")

    table = _positional_map(qt.rects, source, target)
    return LRTableau(tuple(tuple(table[x] for x in row) for row in qt.tableau), target, qt.rects)


def path_rects(path):
    """Rectangles (height, width) of the factors of a path, rightmost factor first."""
    return tuple((len(b), len(b[0])) for b in path)


def rsk(path):
    """Column-insertion RSK of a path.

    The factors are inserted from the rightmost one, each from its top row, every
    row from right to left; a letter from row r of factor j is recorded by the
    letter of row r of Y_j.

    Args:
        path: tuple of rectangular tableaux, factors[0] is the rightmost tensor factor

    Returns:
        (P, Q) with Q an LRTableau in LR(shape(P); R)
    """
    rects = path_rects(path)
    letters, labels = [], []
    for off, b in zip(_offsets(rects, "LR"), path):
        for r, row in enumerate(b):
            letters.extend(reversed(row))
            labels.extend([off + r + 1] * len(row))

    P, Q = tableaux.insert_letters(letters, labels)
    return P, LRTableau(Q, "LR", rects)


def rsk_inverse(P, qt):
    """Inverse of rsk."""
    word = tableaux.uninsert(P, qt.tableau)
    factors = [None] * len(qt.rects)
    pos = 0
    for j in reversed(range(len(qt.rects))):
        h, w = qt.rects[j]
        factors[j] = tableaux.from_word(word[pos : pos + h * w], [w] * h)
        pos += h * w
    return tuple(factors)


def d_statistic(shp, w1, w2):
    """Cells of a two-rectangle recording shape strictly right of column max(w1, w2)."""
    return sum(max(0, length - max(w1, w2)) for length in shp)


def automorphism_sp(qt, pos):
    """Generalized automorphism of conjugation s_p: LR(lam; R) -> LR(lam; s_p R).

    The subtableau U on the alphabets of R_p and R_{p+1} is column-inserted with a
    standard recording tableau, its P-tableau is replaced by the unique element of
    the LR set with the two rectangles exchanged, and U is pulled back.

    Args:
        qt: LRTableau of family 'LR'
        pos: position p, 1 <= p < len(R)
    """
    assert qt.family == "LR", "s_p acts on LR tableaux"
    rects = qt.rects
    p = pos - 1
    assert 0 <= p < len(rects) - 1, f"position {pos} out of range"

    a = _offsets(rects, "LR")[p]
    hi = a + rects[p][0] + rects[p + 1][0]
    cells = [
        (r, c)
        for r, c in tableaux.reading_cells(tableaux.shape(qt.tableau))
        if a < qt.tableau[r][c] <= hi
    ]
    word = [qt.tableau[r][c] for r, c in cells]

    P, Q = tableaux.insert_letters(list(reversed(word)), range(1, len(word) + 1))
    swapped = (rects[p + 1], rects[p])
    P_new = shift(lr_unique(tableaux.shape(P), swapped), a)
    letters = tableaux.uninsert(P_new, Q)

    rows = [list(row) for row in qt.tableau]
    for (r, c), x in zip(cells, letters):
        rows[r][c] = x
    new_rects = rects[:p] + swapped + rects[p + 2 :]
    return LRTableau(tuple(tuple(row) for row in rows), "LR", new_rects)


def embedding_steps(rects):
    """Canonical sequence of steps turning R into its rows.

    While some rectangle has two or more rows, the leftmost such rectangle is
    moved to the front by s_{j-1}, ..., s_1 and its top row is split off.

    Returns:
        list of ('s', p) and ('split', None) steps
    """
    R = list(rects)
    steps = []
    while any(h > 1 for h, _ in R):
        j = next(idx for idx, (h, _) in enumerate(R) if h > 1)
        for p in range(j, 0, -1):
            steps.append(("s", p))
            R[p - 1], R[p] = R[p], R[p - 1]
        h, w = R[0]
        steps.append(("split", None))
        R = [(1, w), (h - 1, w)] + R[1:]
    return steps


def split_rects(rects):
    """R^<: the top row of the first rectangle is split off."""
    h, w = rects[0]
    assert h > 1, "only a rectangle with at least two rows can be split"
    return ((1, w), (h - 1, w)) + tuple(rects[1:])


def embed_to_rows(qt, steps=None):
    """The embedding i_R: LR(lam; R) -> LR(lam; r(R)).

    Args:
        qt: LRTableau (RLR tableaux are identified with LR tableaux by std)
        steps: optional sequence of steps; the canonical one is used by default
    """
    if qt.family == "RLR":
        qt = relabel(qt, "std_inv")
    if steps is None:
        steps = embedding_steps(qt.rects)

    for kind, p in steps:
        if kind == "s":
            qt = automorphism_sp(qt, p)
        else:
            qt = LRTableau(qt.tableau, "LR", split_rects(qt.rects))

    assert all(h == 1 for h, _ in qt.rects), "step sequence did not reach single rows"
    return qt


def shape_chain(t, n, top):
    """Shapes lambda^(j) of the subtableaux of letters <= j, j = 0..top, with n parts."""
    chain = []
    for j in range(top + 1):
        chain.append(tuple(sum(1 for x in row if x <= j) for row in t) + (0,) * (n - len(t)))
    return chain


def is_level_restricted_cst(t, n, top, ell):
    """lambda^(j)_1 - lambda^(j-1)_n <= ell along the chain of shapes."""
    chain = shape_chain(t, n, top)
    return all(chain[j][0] - chain[j - 1][n - 1] <= ell for j in range(1, top + 1))


def is_level_restricted_lr(qt, ell, n):
    """Q is restricted of level ell iff i_R(Q) lies in CST^ell(lam; r(R)).

    Args:
        qt: LRTableau
        ell: level
        n: number of parts of lam, zero parts included
    """
    if not qt.tableau:
        return True
    rows = embed_to_rows(qt)
    return is_level_restricted_cst(rows.tableau, n, len(rows.rects), ell)


def enumerate_rlr_skew(lam, rho, rects, ell):
    """RLR^ell(lam, rho; R) as a subset of RLR(lam; R_rho + R).

    R_rho consists of the columns of rho. The tableaux kept are level ell restricted
    and restrict on the cells of rho to the unique element of LR(rho; R_rho).

    Returns:
        list of LRTableau of family 'RLR'
    """
    lam = tuple(lam)
    n = len(lam)
    rho = combinat.partition(rho, n)
    assert all(r <= p for r, p in zip(rho, lam)), f"{rho} is not contained in {lam}"

    cols = tuple((h, 1) for h in combinat.transpose(rho))
    fixed = lr_unique(rho, cols) if cols else ()

    out = []
    for qt in enumerate_lr(lam, cols + combinat.rect_seq(rects)):
        inner = tuple(tuple(row[:r]) for row, r in zip(qt.tableau, rho) if r)
        if inner != fixed:
            continue
        if is_level_restricted_lr(qt, ell, n):
            out.append(relabel(qt, "std"))
    return out


def _d_sum(t, rects):
    offsets = _offsets(rects, "LR")
    L = len(rects)
    total = 0
    for i in range(L - 1):
        lo = offsets[i] + 1
        hi = offsets[i] + rects[i][0] + rects[i + 1][0]
        P = tableaux.schensted_p(tableaux.restricted_word(t, lo, hi))
        total += (L - i - 1) * d_statistic(tableaux.shape(P), rects[i][1], rects[i + 1][1])
    return total


def charge_via_average(qt, max_length=6):
    """Average over S_L of the weighted d-statistics of the images w Q.

    Each permutation is reached once from the identity by a breadth-first search
    in which every edge applies one s_p.
    """
    if qt.family == "RLR":
        qt = relabel(qt, "std_inv")
    L = len(qt.rects)
    if L > max_length:
        raise TooLarge(f"charge by symmetric group average needs L <= {max_length}, got {L}")

    start = tuple(range(L))
    seen = {start}
    frontier = [(start, qt)]
    total = 0
    while frontier:
        perm, cur = frontier.pop()
        total += _d_sum(cur.tableau, cur.rects)
        for p in range(1, L):
            nxt = list(perm)
            nxt[p - 1], nxt[p] = nxt[p], nxt[p - 1]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, automorphism_sp(cur, p)))

    if total % factorial(L):
        raise InternalInconsistency(f"average charge {total}/{factorial(L)} is not an integer")
    return total // factorial(L)


def charge(qt, method="via_bijection", n=None, max_length=6):
    """Generalized charge c_R of an LR tableau.

    Args:
        qt: LRTableau in LR(lam; R) (or RLR, identified by std)
        method: 'via_bijection' computes c(psi_bar(Q)), 'via_average' the S_L average
        n: number of parts of lam
        max_length: largest L accepted by 'via_average'
    """
    if method == "via_average":
        return charge_via_average(qt, max_length)

    from KOSTKA import bijection  # pylint: disable=import-outside-toplevel,cyclic-import
    from KOSTKA import rigged  # pylint: disable=import-outside-toplevel,cyclic-import

    if n is None:
        n = max(len(qt.tableau), max((h for h, _ in qt.rects), default=1))
    return rigged.rc_charge(bijection.psi_bar(qt, n))


def kostka_via_lr(lam, rects, ell=None, method="via_bijection"):
    """sum of q^{c_R(Q)} over LR(lam; R), or over its level-restricted subset."""
    n = len(lam)
    poly = combinat.QRing.zero
    for qt in enumerate_lr(lam, rects):
        if ell is not None and not is_level_restricted_lr(qt, ell, n):
            continue
        poly = poly + combinat.q ** charge(qt, method, n)
    return poly
