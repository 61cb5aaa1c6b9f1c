"""Bijection between LR tableaux and rigged configurations.

For single rows the bijection adds one cell at a time (delta_inv) and removes one
cell at a time (delta). General rectangles are reduced to rows by the embedding i_R on
tableaux and the string padding j_R on rigged configurations.
"""

import math
import warnings
from typing import NamedTuple

from KOSTKA import combinat
from KOSTKA import lr
from KOSTKA import rigged
from KOSTKA.utils import InternalInconsistency
from KOSTKA.utils import MissingPadString


class BijectionTrace(NamedTuple):
    """One step of the single-row algorithm: the row of the cell and the selected lengths."""

    row: int
    lengths: tuple


def _grow_rects(rects, mu_last):
    if mu_last == 1:
        return tuple(rects) + ((1, 1),)
    assert rects and rects[-1] == (1, mu_last - 1), "last row must grow by one cell"
    return tuple(rects[:-1]) + ((1, mu_last),)


def _shrink_rects(rects):
    h, w = rects[-1]
    assert h == 1, "delta acts on single rows"
    return tuple(rects[:-1]) if w == 1 else tuple(rects[:-1]) + ((1, w - 1),)


def _relabel_singular(blocks, changed, lam, rects):
    """Give the changed strings the label that makes them singular."""
    lengths = tuple(tuple(i for i, _ in block) for block in blocks)
    config = rigged.Configuration(lengths, lam, rects)
    out = []
    for k, block in enumerate(blocks, start=1):
        out.append(
            [
                (i, rigged.vacancy(config, k, i)) if (k, pos) in changed else (i, x)
                for pos, (i, x) in enumerate(block)
            ]
        )
    return rigged.make_rc(out, lam, rects)


def delta_inv(rc, r, mu_last, trace=None):
    """Add a cell in row r, the new cell completing the last row to width mu_last.

    For k = r-1 down to 1 the longest singular string of length at most the previous
    selection is chosen (a string of length zero if there is none). Selected strings
    grow by one and become singular; all other strings keep their labels.

    Args:
        rc: RiggedConfig over (lam^-; R^-) with R^- single rows
        r: row of the new cell
        mu_last: width of the last row after the step
        trace: optional list receiving a BijectionTrace
    """
    old = rc.config
    blocks = [list(block) for block in rc.strings]
    bound = math.inf
    selected = {}
    for k in range(r - 1, 0, -1):
        pos = next(
            (
                p
                for p, s in enumerate(blocks[k - 1])
                if s[0] <= bound and rigged.is_singular(old, k, s)
            ),
            None,
        )
        bound = 0 if pos is None else blocks[k - 1][pos][0]
        selected[k] = pos

    lengths = tuple(
        0 if selected[k] is None else blocks[k - 1][selected[k]][0] for k in range(1, r)
    )
    if lengths and mu_last - 1 > lengths[0]:
        raise InternalInconsistency(f"selected lengths {lengths} do not dominate {mu_last - 1}")

    changed = set()
    for k, pos in selected.items():
        if pos is None:
            blocks[k - 1].append((1, None))
            changed.add((k, len(blocks[k - 1]) - 1))
        else:
            i, x = blocks[k - 1][pos]
            blocks[k - 1][pos] = (i + 1, x)
            changed.add((k, pos))

    lam = list(rc.lam)
    lam[r - 1] += 1
    if trace is not None:
        trace.append(BijectionTrace(r, lengths))
    return _relabel_singular(blocks, changed, tuple(lam), _grow_rects(rc.rects, mu_last))


def delta(rc, trace=None):
    """Remove the last cell of the last row; inverse of delta_inv.

    Starting from the width of the last row, a singular string of smallest length at
    least the previous one is selected in blocks 1, 2, ... until none exists. Selected
    strings shrink by one and become singular.

    Returns:
        (RiggedConfig over (lam^-; R^-), r) with r the row of the removed cell
    """
    config = rc.config
    blocks = [list(block) for block in rc.strings]
    bound = rc.rects[-1][1]
    selected = {}
    k = 1
    while k <= len(blocks):
        block = blocks[k - 1]
        pos = next(
            (
                p
                for p in reversed(range(len(block)))
                if block[p][0] >= bound and rigged.is_singular(config, k, block[p])
            ),
            None,
        )
        if pos is None:
            break
        selected[k] = pos
        bound = block[pos][0]
        k += 1
    r = k

    lengths = tuple(blocks[j - 1][selected[j]][0] for j in range(1, r))
    assert all(a <= b for a, b in zip(lengths, lengths[1:])), "selected lengths must increase"

    changed = set()
    for j, pos in selected.items():
        i, x = blocks[j - 1][pos]
        blocks[j - 1][pos] = (i - 1, x)
        changed.add((j, pos))
    kept = []
    for j, block in enumerate(blocks, start=1):
        kept.append([(i, x, (j, p) in changed) for p, (i, x) in enumerate(block) if i > 0])
    blocks = [[(i, x) for i, x, _ in block] for block in kept]
    changed = {(j, p) for j, block in enumerate(kept, start=1) for p, s in enumerate(block) if s[2]}

    lam = list(rc.lam)
    lam[r - 1] -= 1
    if trace is not None:
        trace.append(BijectionTrace(r, lengths))
    return _relabel_singular(blocks, changed, tuple(lam), _shrink_rects(rc.rects)), r


def _cells_in_order(qt):
    """Rows of the cells of a single-row LR tableau in standard order.

    Letter j comes before letter j+1; the cells of one letter go from left to right.
    """
    rows = []
    for letter in range(1, len(qt.rects) + 1):
        cells = sorted(
            (c, r) for r, row in enumerate(qt.tableau) for c, x in enumerate(row) if x == letter
        )
        rows.extend(r + 1 for _, r in cells)
    return rows


def empty_rc(n):
    """The rigged configuration of (0^n; empty sequence)."""
    return rigged.make_rc([], (0,) * n, ())


def psi_bar_rows(qt, n, trace=None):
    """The bijection on CST(lam; mu) for single-row R by repeated delta_inv.

    Args:
        qt: LRTableau whose rectangles are single rows
        n: number of parts of lam
        trace: optional list receiving one BijectionTrace per cell
    """
    assert all(h == 1 for h, _ in qt.rects), "psi_bar_rows needs single rows"
    rc = empty_rc(n)
    cells = iter(_cells_in_order(qt))
    for _, w in qt.rects:
        for c in range(1, w + 1):
            rc = delta_inv(rc, next(cells), c, trace)
    return rc


def psi_bar_rows_inverse(rc, trace=None):
    """Inverse of psi_bar_rows by repeated delta."""
    rects = rc.rects
    n = len(rc.lam)
    removed = []
    while rc.rects:
        letter = len(rc.rects)
        rc, r = delta(rc, trace)
        removed.append((letter, r))

    if any(p for p in rc.lam) or any(block for block in rc.strings):
        raise InternalInconsistency("delta did not end at the empty rigged configuration")

    rows = [[] for _ in range(n)]
    for letter, r in reversed(removed):
        rows[r - 1].append(letter)
    return lr.LRTableau(tuple(tuple(row) for row in rows if row), "LR", rects)


def pad_strings(rc, rects, direction, rows=None):
    """j_R (direction 'add') or its inverse (direction 'remove').

    For each rectangle with k rows and m columns, block j < k gains k - j strings (m, 0).

    Args:
        rc: RiggedConfig over (lam; R) for 'add', over (lam; r(R)) for 'remove'
        rects: the rectangle sequence R
        direction: 'add' or 'remove'
        rows: order of the single rows of r(R) for 'add' (rows of R in order by default)

    Raises:
        MissingPadString: if a zero-labeled string to remove is absent
    """
    assert direction in ("add", "remove"), f"Unknown direction {direction}!"
    rects = combinat.rect_seq(rects)
    blocks = [list(block) for block in rc.strings]

    pads = []
    for k, m in rects:
        for j in range(1, k):
            pads.extend([(j, m)] * (k - j))

    if direction == "add":
        for j, m in pads:
            blocks[j - 1].append((m, 0))
        rows = combinat.rows_of(rects) if rows is None else tuple(rows)
        return rigged.make_rc(blocks, rc.lam, rows)

    for j, m in pads:
        if j > len(blocks) or (m, 0) not in blocks[j - 1]:
            raise MissingPadString(f"block {j} has no string ({m}, 0) to remove")
        blocks[j - 1].remove((m, 0))
    out = rigged.make_rc(blocks, rc.lam, rects)
    if not rigged.is_valid(out):
        raise InternalInconsistency("removing the padding strings left an invalid rigging")
    return out


def rows_order(rects, steps=None):
    """The sequence r(R) in the order produced by the embedding steps."""
    R = list(rects)
    if steps is None:
        steps = lr.embedding_steps(R)
    for kind, p in steps:
        if kind == "s":
            R[p - 1], R[p] = R[p], R[p - 1]
        else:
            R = list(lr.split_rects(R))
    return tuple(R)


def psi_bar(qt, n):
    """The charge-preserving bijection LR(lam; R) -> RC(lam; R).

    Computed as pad_strings(psi_bar_rows(i_R(qt)), R, 'remove').

    Args:
        qt: LRTableau (RLR tableaux are identified with LR tableaux by std)
        n: number of parts of lam
    """
    if qt.family == "RLR":
        qt = lr.relabel(qt, "std_inv")
    rows = lr.embed_to_rows(qt)
    return pad_strings(psi_bar_rows(rows, n), qt.rects, "remove")


def psi_bar_inverse(rc):
    """Inverse of psi_bar, undoing the embedding steps in reverse order."""
    steps = lr.embedding_steps(rc.rects)
    padded = pad_strings(rc, rc.rects, "add", rows_order(rc.rects, steps))
    qt = psi_bar_rows_inverse(padded)

    for kind, p in reversed(steps):
        if kind == "s":
            qt = lr.automorphism_sp(qt, p)
        else:
            (_, w), (h, _) = qt.rects[0], qt.rects[1]
            qt = lr.LRTableau(qt.tableau, "LR", ((h + 1, w),) + tuple(qt.rects[2:]))

    if not lr.is_lr(qt):
        raise InternalInconsistency("psi_bar_inverse did not return an LR tableau")
    return qt


def check_skew_conjecture(lam, rho, rects, ell, verbose=False):
    """Compare psi_bar(RLR^ell(lam, rho; R)) with RC^ell(lam, rho; R).

    The statement is experimental; a mismatch is reported by a warning.

    Returns:
        dict with the two set sizes, the overlap and whether the sets agree
    """
    lam = tuple(lam)
    n = len(lam)
    image = {psi_bar(qt, n) for qt in lr.enumerate_rlr_skew(lam, rho, rects, ell)}
    target = set(rigged.enumerate_rc_skew(lam, rho, rects, ell))
    match = image == target

    if verbose:
        print(f"\n---- Skew check lam={lam} rho={tuple(rho)} R={tuple(rects)} ell={ell}: {match}")
    if not match:
        warnings.warn(
            f"skew restriction differs for lam={lam}, rho={tuple(rho)}, R={tuple(rects)}, "
            f"ell={ell}: {len(image)} tableaux, {len(target)} rigged configurations"
        )
    return {
        "tableaux": len(image),
        "rigged": len(target),
        "common": len(image & target),
        "match": match,
    }
