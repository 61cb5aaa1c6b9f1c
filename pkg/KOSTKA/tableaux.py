"""Column-strict tableaux, reading words and classical/affine crystal operators.

A tableau is a tuple of rows (top row first), each a tuple of letters in 1..n.
A word is a tuple of letters. Crystal operators return None where they are undefined.
"""

from KOSTKA.utils import BadWitness
from KOSTKA.utils import NonRectangular


def shape(t):
    """Row lengths of a tableau."""
    return tuple(len(row) for row in t)


def size(t):
    """Number of cells."""
    return sum(len(row) for row in t)


def is_rectangular(t):
    """True if all rows have the same length."""
    return len(set(shape(t))) <= 1


def is_column_strict(t, n=None):
    """Rows weakly increase, columns strictly increase, letters lie in 1..n."""
    for r, row in enumerate(t):
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r > 0:
            if len(row) > len(t[r - 1]):
                return False
            if any(t[r - 1][c] >= row[c] for c in range(len(row))):
                return False
        if n is not None and any(x < 1 or x > n for x in row):
            return False
    return True


def reading_word(t):
    """word(t): rows read left to right, from the bottom row to the top row."""
    return tuple(x for row in reversed(t) for x in row)


def restricted_word(t, lo, hi):
    """Reading word of the subtableau of letters in the interval [lo, hi]."""
    return tuple(x for row in reversed(t) for x in row if lo <= x <= hi)


def reading_cells(shp):
    """Cells (row, col) of a shape in reading order."""
    return [(r, c) for r in reversed(range(len(shp))) for c in range(shp[r])]


def from_word(word, shp):
    """Fill a shape with a word in reading order; inverse of reading_word."""
    rows = [[0] * length for length in shp]
    for (r, c), x in zip(reading_cells(shp), word):
        rows[r][c] = x
    return tuple(tuple(row) for row in rows if row)


def content(word_or_tableau, n):
    """Tuple of letter multiplicities (c_1, ..., c_n)."""
    letters = word_or_tableau
    if letters and isinstance(letters[0], tuple):
        letters = reading_word(letters)
    c = [0] * n
    for x in letters:
        c[x - 1] += 1
    return tuple(c)


def _unmatched(word, i):
    """Positions of the unmatched letters i and i+1 after bracket matching.

    The letter i is a closing and i+1 an opening parenthesis; the unmatched
    subword is i^p (i+1)^q.
    """
    opening, closing = [], []
    for pos, x in enumerate(word):
        if x == i + 1:
            opening.append(pos)
        elif x == i:
            if opening:
                opening.pop()
            else:
                closing.append(pos)
    return closing, opening


def string_stats(word, i):
    """(phi_i, eps_i) of a word for i in 1..n-1."""
    closing, opening = _unmatched(word, i)
    return len(closing), len(opening)


def word_op(word, i, direction):
    """e_i (direction='raise') or f_i (direction='lower') on a word, i >= 1."""
    closing, opening = _unmatched(word, i)
    word = list(word)
    if direction == "raise":
        if not opening:
            return None
        word[opening[0]] = i
    else:
        if not closing:
            return None
        word[closing[-1]] = i + 1
    return tuple(word)


def psi_inverse(b, n):
    """Content-rotating bijection with content(psi^-1(b)) = (c_2, ..., c_n, c_1).

    Remove the letters 1, rectify by column insertion, decrease every letter by
    one and fill the vacated cells at the end of the last row with n.
    """
    if not is_rectangular(b):
        raise NonRectangular(f"psi is only defined on rectangles, got shape {shape(b)}")
    if not b:
        return b

    k, m = len(b), len(b[0])
    skew = tuple(x for row in reversed(b) for x in row if x != 1)
    rows = [[x - 1 for x in row] for row in schensted_p(skew)]
    rows += [[] for _ in range(k - len(rows))]
    rows = tuple(tuple(row + [n] * (m - len(row))) for row in rows)

    assert is_column_strict(rows, n), "psi^-1 left the set of column-strict tableaux"
    return rows


def psi(b, n):
    """Inverse of psi_inverse, computed as (psi^-1)^(n-1)."""
    for _ in range(n - 1):
        b = psi_inverse(b, n)
    return b


def psi_power(b, n, power):
    """psi^power for any integer power."""
    for _ in range((-power) % n):
        b = psi_inverse(b, n)
    return b


def psi_rotate(b, n, direction="forward"):
    """psi (direction 'forward') or psi^-1 ('inverse') on a rectangular tableau."""
    assert direction in ("forward", "inverse"), f"Unknown direction {direction}!"
    return psi(b, n) if direction == "forward" else psi_inverse(b, n)


def crystal_op(x, i, n, direction="raise"):
    """Apply e_i or f_i (i in 0..n-1) to a word or a tableau.

    Args:
        x: word (tuple of ints) or tableau (tuple of tuples)
        i: index, 0 is the affine index computed as psi^-1 e_1 psi
        n: rank parameter
        direction: 'raise' for e_i, 'lower' for f_i

    Returns:
        the image, or None where the operator is undefined
    """
    is_tableau = bool(x) and isinstance(x[0], tuple)

    if i == 0:
        if not is_tableau:
            raise NonRectangular("e_0 and f_0 need rectangular tableaux")
        y = crystal_op(psi(x, n), 1, n, direction)
        return None if y is None else psi_inverse(y, n)

    if not is_tableau:
        return word_op(x, i, direction)

    w = word_op(reading_word(x), i, direction)
    return None if w is None else from_word(w, shape(x))


def phi_eps(t, i, n):
    """(phi_i, eps_i) of a tableau, i in 0..n-1."""
    if i == 0:
        return string_stats(reading_word(psi(t, n)), 1)
    return string_stats(reading_word(t), i)


def phi_vector(t, n):
    """(phi_0, ..., phi_{n-1}) of a rectangular tableau."""
    return tuple(phi_eps(t, i, n)[0] for i in range(n))


def eps_vector(t, n):
    """(eps_0, ..., eps_{n-1}) of a rectangular tableau."""
    return tuple(phi_eps(t, i, n)[1] for i in range(n))


def _insert(columns, x):
    """Column-insert x, returning the (row, col) of the new cell."""
    c = 0
    while True:
        if c == len(columns):
            columns.append([])
        col = columns[c]
        k = next((k for k, y in enumerate(col) if y >= x), None)
        if k is None:
            col.append(x)
            return len(col) - 1, c
        col[k], x = x, col[k]
        c += 1


def _columns_to_rows(columns):
    nrows = max((len(col) for col in columns), default=0)
    return tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(nrows))


def _rows_to_columns(rows):
    ncols = len(rows[0]) if rows else 0
    return [[row[c] for row in rows if len(row) > c] for c in range(ncols)]


def insert_letters(letters, labels):
    """Column insertion of letters in the given order, recording with labels.

    Returns:
        (P, Q) as tuples of rows
    """
    columns, record = [], {}
    for x, label in zip(letters, labels):
        record[_insert(columns, x)] = label

    P = _columns_to_rows(columns)
    Q = tuple(tuple(record[(r, c)] for c in range(len(row))) for r, row in enumerate(P))
    return P, Q


def uninsert(P, Q):
    """Invert insert_letters.

    Cells are removed from the largest recording label down; among equal labels
    the rightmost cell goes first.

    Returns:
        list of letters in the reverse of their insertion order
    """
    columns = _rows_to_columns(P)
    cells = sorted(
        ((label, c, r) for r, row in enumerate(Q) for c, label in enumerate(row)), reverse=True
    )

    ejected = []
    for _, c, r in cells:
        assert len(columns[c]) == r + 1, "recording tableau does not match the insertion tableau"
        y = columns[c].pop()
        for cc in range(c - 1, -1, -1):
            col = columns[cc]
            k = max(k for k, x in enumerate(col) if x <= y)
            col[k], y = y, col[k]
        ejected.append(y)
        while columns and not columns[-1]:
            columns.pop()

    return ejected


def schensted_p(word):
    """P-tableau of a word by column insertion starting from its right end."""
    return insert_letters(tuple(reversed(word)), [0] * len(word))[0]


def is_yamanouchi(t):
    """True iff every row r contains only the letter r."""
    return all(x == r + 1 for r, row in enumerate(t) for x in row)


def yamanouchi(shp, offset=0):
    """Tableau of shape shp whose row r is filled with offset + r."""
    return tuple(tuple([offset + r + 1] * length) for r, length in enumerate(shp) if length)


def rectangle(height, width, rows=None):
    """Highest weight tableau of a height x width rectangle, or one filled from rows."""
    if rows is None:
        return yamanouchi([width] * height)
    return tuple(tuple(row) for row in rows)


def enumerate_tableaux(shp, n, cont=None):
    """All column-strict tableaux of shape shp over 1..n, optionally of fixed content.

    Tableaux are generated in lexicographic order of their row-major fillings.
    """
    shp = [length for length in shp if length > 0]
    cells = [(r, c) for r in range(len(shp)) for c in range(shp[r])]
    height = [sum(1 for length in shp if length > c) for c in range(shp[0])] if shp else []
    remaining = list(cont) if cont is not None else None
    filling = [[0] * length for length in shp]
    out = []

    def _rec(idx):
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in filling))
            return
        r, c = cells[idx]
        lo = filling[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, filling[r - 1][c] + 1)
        hi = n - (height[c] - r - 1)
        for x in range(lo, hi + 1):
            if remaining is not None:
                if remaining[x - 1] == 0:
                    continue
                remaining[x - 1] -= 1
            filling[r][c] = x
            _rec(idx + 1)
            if remaining is not None:
                remaining[x - 1] += 1

    if remaining is None or sum(remaining) == len(cells):
        _rec(0)
    return out


def check_witness(t, shp, alphabet):
    """Raise BadWitness unless t is column-strict of shape shp over 1..alphabet."""
    if tuple(length for length in shape(t) if length) != tuple(x for x in shp if x):
        raise BadWitness(f"witness {t} does not have shape {shp}")
    if not is_column_strict(t, alphabet):
        raise BadWitness(f"witness {t} is not column-strict over 1..{alphabet}")


def tableau_to_str(t):
    """Text form '1,1/2,2'."""
    return "/".join(",".join(str(x) for x in row) for row in t)


def parse_tableau(text):
    """Inverse of tableau_to_str."""
    text = text.strip()
    if not text:
        return ()
    return tuple(tuple(int(x) for x in row.split(",")) for row in text.split("/"))
