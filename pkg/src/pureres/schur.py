"""Straightening of fillings into the SSYT basis and the GL_n action.

The module of shape ``lam`` is presented by fillings modulo two families of
relations: row-preserving permutations act trivially, and for each pair of
vertically adjacent boxes (i, j), (i+1, j) the exchange sums below vanish.

The exchange form used here replaces the full sum over permutations of the
box set B = {row i, columns j..lam_i} u {row i+1, columns 1..j}: choosing
which |bottom| entries of B occupy the row-(i+1) segment (one term per
choice, coefficient 1, rows re-sorted) gives a sum equal to the permutation
sum divided by the constant |B n row_i|! * |B n row_{i+1}|!, so both present
the same relation module.

Straightening repeatedly rewrites the topmost-then-leftmost column violation
using the exchange relation solved for the offending filling.  Every rewrite
strictly increases sum_r r * (sum of entries in row r), which is bounded on
the finite set of fillings with fixed shape and content, so the recursion
terminates; a depth guard turns any regression into a hard error.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .tableaux import Rows, is_ssyt, weight

TableauVector = dict[Rows, Fraction]

_CACHE: dict[Rows, tuple[tuple[Rows, Fraction], ...]] = {}
_MAX_DEPTH = 10000


def row_sorted(rows) -> Rows:
    return tuple(tuple(sorted(row)) for row in rows)


def first_violation(rows: Rows) -> tuple[int, int] | None:
    """Topmost-then-leftmost failure of strict column increase (0-based)."""
    for i in range(len(rows) - 1):
        upper, lower = rows[i], rows[i + 1]
        for j in range(len(lower)):
            if upper[j] >= lower[j]:
                return (i, j)
    return None


def _exchange_terms(rows: Rows, i: int, j: int) -> list[tuple[Rows, Fraction]]:
    """Exchange relation at boxes (i, j), (i+1, j) (0-based), solved for ``rows``.

    Returns the other terms with their coefficients; ``rows`` itself may occur
    among the raw exchange terms (with repeated entries) and is absorbed into
    the solved coefficients.
    """
    upper, lower = rows[i], rows[i + 1]
    if j >= len(lower):
        raise ValueError(f"box ({i + 1}, {j + 1}) is outside the shape")
    top = upper[j:]
    bottom = lower[: j + 1]
    tokens = list(top) + list(bottom)
    nbottom = len(bottom)
    counts: dict[Rows, int] = {}
    for chosen in combinations(range(len(tokens)), nbottom):
        chosen_set = set(chosen)
        new_bottom = [tokens[t] for t in chosen]
        new_top = [tokens[t] for t in range(len(tokens)) if t not in chosen_set]
        new_rows = list(rows)
        new_rows[i] = tuple(sorted(upper[:j] + tuple(new_top)))
        new_rows[i + 1] = tuple(sorted(tuple(new_bottom) + lower[j + 1 :]))
        key = tuple(new_rows)
        counts[key] = counts.get(key, 0) + 1
    self_count = counts.pop(rows, 0)
    if self_count == 0:
        raise AssertionError("identity split missing from exchange sum")
    return [(t, Fraction(-c, self_count)) for t, c in counts.items()]


def apply_shuffle(f, i: int, j: int) -> list[tuple[Rows, Fraction]]:
    """Rewrite of ``f`` via the exchange relation at row i, column j (1-based).

    ``(i, j)`` and ``(i+1, j)`` must be boxes of the shape.  The result
    expresses the class of ``f`` as a combination of the other exchange
    terms; it is a valid identity whether or not the column violates
    strictness at that box.
    """
    rows = row_sorted(f)
    if not 1 <= i < len(rows) or not 1 <= j <= len(rows[i]):
        raise ValueError(f"boxes ({i},{j}) and ({i + 1},{j}) must lie in the shape")
    return _exchange_terms(rows, i - 1, j - 1)


def straighten(f) -> TableauVector:
    """Expand the class of a filling in the SSYT basis.

    An SSYT maps to itself with coefficient one; fillings may straighten to
    zero (empty result).
    """
    return dict(_straighten(row_sorted(f), 0))


def _straighten(rows: Rows, depth: int) -> tuple[tuple[Rows, Fraction], ...]:
    cached = _CACHE.get(rows)
    if cached is not None:
        return cached
    if depth > _MAX_DEPTH:
        raise RuntimeError("straightening rewrite limit exceeded; rewrite cycle?")
    spot = first_violation(rows)
    if spot is None:
        result: tuple[tuple[Rows, Fraction], ...] = ((rows, Fraction(1)),)
    else:
        acc: dict[Rows, Fraction] = {}
        for term, coeff in _exchange_terms(rows, *spot):
            for tab, c in _straighten(term, depth + 1):
                val = acc.get(tab, Fraction(0)) + coeff * c
                if val:
                    acc[tab] = val
                elif tab in acc:
                    del acc[tab]
        result = tuple(sorted(acc.items()))
    _CACHE[rows] = result
    return result


def straighten_vector(vec: TableauVector) -> TableauVector:
    """Straighten a formal combination of fillings, merging like terms."""
    acc: dict[Rows, Fraction] = {}
    for rows, coeff in vec.items():
        coeff = Fraction(coeff)
        if not coeff:
            continue
        for tab, c in _straighten(row_sorted(rows), 0):
            val = acc.get(tab, Fraction(0)) + coeff * c
            if val:
                acc[tab] = val
            elif tab in acc:
                del acc[tab]
    return acc


def vector_eq(a: TableauVector, b: TableauVector) -> bool:
    return {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}


def _det(g: list[list[Fraction]]) -> Fraction:
    n = len(g)
    m = [row[:] for row in g]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def gl_action(g, v) -> TableauVector:
    """Action of an invertible matrix ``g`` on a tableau vector.

    ``g`` is an n x n matrix of rationals acting entrywise on fillings: each
    entry value j is replaced by i with coefficient g[i][j], summed over all
    replacement vectors, then straightened.  ``v`` may be a single filling or
    a TableauVector.
    """
    g = [[Fraction(x) for x in row] for row in g]
    n = len(g)
    if any(len(row) != n for row in g):
        raise ValueError("group element must be a square matrix")
    if not _det(g):
        raise ValueError("group element must be invertible")
    if not isinstance(v, dict):
        v = {row_sorted(v): Fraction(1)}
    acc: dict[Rows, Fraction] = {}

    def expand(boxes, idx, coeff, current):
        if not coeff:
            return
        if idx == len(boxes):
            key = tuple(tuple(r) for r in current)
            pre = raw.get(key, Fraction(0)) + coeff
            if pre:
                raw[key] = pre
            elif key in raw:
                del raw[key]
            return
        (r, c, j) = boxes[idx]
        for i in range(n):
            gij = g[i][j - 1]
            if gij:
                current[r][c] = i + 1
                expand(boxes, idx + 1, coeff * gij, current)
        current[r][c] = j

    for rows, cv in v.items():
        cv = Fraction(cv)
        if not cv:
            continue
        weight(rows, n)  # validates the entry range against g's size
        boxes = [(r, c, rows[r][c]) for r in range(len(rows)) for c in range(len(rows[r]))]
        raw: dict[Rows, Fraction] = {}
        expand(boxes, 0, Fraction(1), [list(r) for r in rows])
        for key, coeff in raw.items():
            for tab, sc in _straighten(row_sorted(key), 0):
                val = acc.get(tab, Fraction(0)) + cv * coeff * sc
                if val:
                    acc[tab] = val
                elif tab in acc:
                    del acc[tab]
    return acc


def straighten_is_identity_on(tabs) -> bool:
    """True when every given SSYT straightens to itself (basis sanity)."""
    for t in tabs:
        if not is_ssyt(t):
            return False
        if straighten(t) != {t: Fraction(1)}:
            return False
    return True
