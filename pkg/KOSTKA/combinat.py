"""Partitions, rectangle sequences and q-polynomials."""

import json
from functools import lru_cache
from typing import NamedTuple

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

QRing, q = ring("q", ZZ)


class QSeries(NamedTuple):
    """Truncated power series q^offset * sum_e coeffs[e] q^e.

    Args:
        offset: overall exponent as an exact rational
        coeffs: dict exponent -> nonzero integer coefficient, exponents <= truncation_degree
        truncation_degree: largest exponent that is known exactly
    """

    offset: sympy.Rational
    coeffs: dict
    truncation_degree: int


def partition(parts, n=None):
    """Return a partition as a tuple of exactly n parts (trailing zeros appended)."""
    parts = [int(p) for p in parts]
    if n is None:
        n = len(parts)
    while len(parts) > n and parts[-1] == 0:
        parts.pop()

    assert len(parts) <= n, f"Partition {parts} has more than {n} nonzero parts!"
    assert all(p >= 0 for p in parts), "Partitions have nonnegative parts!"
    assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), "Parts must decrease!"

    return tuple(parts + [0] * (n - len(parts)))


def rect_seq(rects):
    """Return a sequence of rectangles as a tuple of (height, width) pairs."""
    rects = tuple((int(h), int(w)) for h, w in rects)
    assert all(h >= 1 and w >= 1 for h, w in rects), "Rectangles must have positive sides!"
    return rects


def rects_from_partitions(shapes):
    """Convert rectangular partitions such as (2, 2) to (height, width) pairs."""
    rects = []
    for shape in shapes:
        shape = [p for p in shape if p > 0]
        assert len(set(shape)) == 1, f"{shape} is not a rectangle!"
        rects.append((len(shape), shape[0]))
    return rect_seq(rects)


def size(rects):
    """Number of cells of a sequence of rectangles."""
    return sum(h * w for h, w in rects)


def rows_of(rects):
    """Split every rectangle into its rows."""
    return tuple((1, w) for h, w in rects for _ in range(h))


def transpose(parts, n=None):
    """Conjugate partition, padded to n parts if n is given."""
    parts = [p for p in parts if p > 0]
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    if n is None:
        return tuple(conj)
    return partition(conj, n)


def norm(rects):
    """||R||, the sum over pairs of rectangles of the size of their intersection."""
    return sum(
        min(rects[i][0], rects[j][0]) * min(rects[i][1], rects[j][1])
        for i in range(len(rects))
        for j in range(i + 1, len(rects))
    )


def column_counts(rho, i):
    """Q_i(rho), the number of cells in the first i columns of rho.

    Also accepts weak compositions, in which case it is sum_j min(rho_j, i).
    """
    return sum(min(i, r) for r in rho)


@lru_cache(maxsize=None)
def q_binomial(m, p):
    """Generating function of partitions in an m x p box by size.

    Args:
        m: maximal number of parts
        p: maximal part

    Returns:
        QPoly equal to (q)_{m+p} / ((q)_m (q)_p)
    """
    assert m >= 0 and p >= 0, "q-binomials take nonnegative arguments!"
    if m == 0 or p == 0:
        return QRing.one

    # split on whether the largest part equals p
    return q_binomial(m, p - 1) + q**p * q_binomial(m - 1, p)


def partitions_in_box(m, p):
    """Yield the partitions with at most m parts, each at most p, without zero parts."""

    def _rec(prefix, max_part, slots):
        yield tuple(prefix)
        if slots == 0:
            return
        for part in range(max_part, 0, -1):
            yield from _rec(prefix + [part], part, slots - 1)

    yield from _rec([], p, m)


def partitions_of(total, max_len, max_part=None):
    """Yield the partitions of total with at most max_len parts bounded by max_part."""
    if max_part is None:
        max_part = total

    def _rec(prefix, remaining, bound):
        if remaining == 0:
            yield tuple(prefix)
            return
        if len(prefix) == max_len:
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from _rec(prefix + [part], remaining - part, part)

    yield from _rec([], total, max_part)


def multiplicities(parts):
    """Dict i -> m_i, the number of parts of length i."""
    m = {}
    for p in parts:
        if p > 0:
            m[p] = m.get(p, 0) + 1
    return m


def poly_from_dict(coeffs):
    """Build a QPoly from a dict exponent -> coefficient."""
    return QRing.from_dict({(int(e),): int(c) for e, c in coeffs.items() if c != 0})


def poly_to_dict(poly):
    """Dict exponent -> coefficient of a QPoly, in ascending order."""
    return {int(m[0]): int(c) for m, c in sorted(poly.items())}


def poly_at_one(poly):
    """Evaluate a QPoly at q = 1."""
    return sum(int(c) for c in poly.values())


def min_degree(poly):
    """Smallest exponent of a nonzero QPoly."""
    assert poly, "The zero polynomial has no smallest exponent!"
    return min(m[0] for m in poly.keys())


def truncate(poly, degree):
    """Drop the terms of exponent larger than degree."""
    return QRing.from_dict({m: c for m, c in poly.items() if m[0] <= degree})


def inverse_q_pochhammer(m, degree):
    """1/(q)_m = prod_{j=1}^m 1/(1-q^j), truncated at degree."""
    result = QRing.one
    for j in range(1, m + 1):
        geometric = QRing.from_dict({(j * k,): 1 for k in range(degree // j + 1)})
        result = truncate(result * geometric, degree)
    return result


def _monomial(e, c):
    if e == 0:
        return str(abs(c))
    base = "q" if e == 1 else f"q^{e}"
    return base if abs(c) == 1 else f"{abs(c)}*{base}"


def poly_to_str(poly):
    """Text form with ascending exponents, e.g. 'q^2 + 2*q^3'."""
    coeffs = poly_to_dict(poly)
    if not coeffs:
        return "0"

    out = ""
    for e, c in coeffs.items():
        if not out:
            out = ("-" if c < 0 else "") + _monomial(e, c)
        else:
            out += (" - " if c < 0 else " + ") + _monomial(e, c)
    return out


def poly_to_json(poly):
    """JSON form with string exponents as keys, e.g. '{"2": 1}'."""
    return json.dumps({str(e): c for e, c in poly_to_dict(poly).items()})


def series_to_str(series):
    """Text form of a QSeries, e.g. 'q^(1/8) * (1 + q + O(q^6))'."""
    body = poly_to_str(poly_from_dict(series.coeffs))
    body = f"{body} + O(q^{series.truncation_degree + 1})"
    if series.offset == 0:
        return body
    return f"q^({series.offset}) * ({body})"
