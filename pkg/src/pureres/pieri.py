"""Single-box inclusion matrices, multi-box compositions, and integral forms.

The single-box map out of the shape ``mu`` (one box removed from row k) is
an alternating sum over paths J = (0 = j_1 < ... < j_p = k).  A path acts on
an augmented filling (a monomial "row 0" on top of a filling) by the moves
``tau(i, j)``: remove each box of row j in turn, shifting the boxes to its
right left by one, and append the removed entry to the end of row i (for
i = 0, multiply the monomial by the matching variable).  Path J contributes

    (-1)^p / c_J,   c_J = prod over interior stops j of (mu_j - mu_k + k - j),

one term per sequence of box choices; the resulting fillings of the smaller
shape are straightened into the SSYT basis and collected, per source SSYT,
into a matrix column over the polynomial ring.

Removing several boxes composes single-box maps; row-0 boxes commute as a
monomial, so no separate symmetrization step is needed.  Different removal
orders agree up to one nonzero rational scalar.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, pairwise

from . import tableaux
from .algebra import GF, QQ, ZZ, Monomial, mono_key, monomials_of_degree
from .linalg import saturate_columns
from .polymatrix import PolyMatrix, from_columns
from .schur import _straighten, row_sorted
from .tableaux import Partition, Rows, enumerate_ssyt, partition, remove_box, weight

Augmented = tuple[Monomial, Rows]


def is_removable(mu, k: int) -> bool:
    """True if removing one box from row k of mu leaves a partition."""
    mu = partition(mu)
    if not 1 <= k <= len(mu):
        return False
    nxt = mu[k] if k < len(mu) else 0
    return mu[k - 1] - 1 >= nxt


def paths(k: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing index paths from 0 to k."""
    out = []
    for size in range(k):
        for mid in combinations(range(1, k), size):
            out.append((0, *mid, k))
    return tuple(sorted(out))


def path_denominator(mu, k: int, J) -> int:
    """Product over the interior stops j of J of (mu_j - mu_k + k - j)."""
    mu = partition(mu)
    c = 1
    for j in J[1:-1]:
        factor = mu[j - 1] - mu[k - 1] + k - j
        if factor <= 0:
            raise ValueError(f"nonpositive path factor for stop {j} of {J} on {mu}")
        c *= factor
    return c


def tau(i: int, j: int, aug: Augmented) -> list[Augmented]:
    """One output term per box of row j: the box moves to the end of row i.

    Row 0 is the monomial; moving a box there multiplies by its variable.
    An empty row j yields no terms.
    """
    if not 0 <= i < j:
        raise ValueError(f"tau requires 0 <= i < j, got ({i}, {j})")
    mono, rows = aug
    if j > len(rows) or not rows[j - 1]:
        return []
    out: list[Augmented] = []
    row_j = rows[j - 1]
    for pos, entry in enumerate(row_j):
        new_rows = list(rows)
        new_rows[j - 1] = row_j[:pos] + row_j[pos + 1 :]
        if i == 0:
            new_mono = tuple(
                e + 1 if v == entry - 1 else e for v, e in enumerate(mono)
            )
            out.append((new_mono, tuple(new_rows)))
        else:
            new_rows[i - 1] = new_rows[i - 1] + (entry,)
            out.append((mono, tuple(new_rows)))
    return out


def apply_path(J, aug: Augmented) -> list[Augmented]:
    """Apply the moves of path J in composition order (tau(j1, j2) first)."""
    terms = [aug]
    for a, b in pairwise(J):
        terms = [t2 for t in terms for t2 in tau(a, b, t)]
    return terms


def _strip_empty(rows: Rows) -> Rows:
    while rows and not rows[-1]:
        rows = rows[:-1]
    return rows


def path_image(J, mu, k: int, source: Rows, n: int) -> dict[tuple[Monomial, Rows], Fraction]:
    """Straightened image of one source SSYT under a single path, including
    the sign and denominator of the path."""
    mu = partition(mu)
    coeff = Fraction(-1 if len(J) % 2 else 1, path_denominator(mu, k, J))
    zero_mono = (0,) * n
    acc: dict[tuple[Monomial, Rows], Fraction] = {}
    for mono, rows in apply_path(J, (zero_mono, source)):
        for tab, c in _straighten(row_sorted(_strip_empty(rows)), 0):
            key = (mono, tab)
            val = acc.get(key, Fraction(0)) + coeff * c
            if val:
                acc[key] = val
            elif key in acc:
                del acc[key]
    return acc


def olver_map(mu, k: int, n: int) -> PolyMatrix:
    """Matrix of the single-box inclusion out of ``mu`` at row ``k``.

    Columns are indexed by the source SSYT of ``mu``, rows by the SSYT of the
    shape with one box of row k removed; entries are linear forms.
    """
    return _olver_map(partition(mu), int(k), int(n))


@lru_cache(maxsize=None)
def _olver_map(mu: Partition, k: int, n: int) -> PolyMatrix:
    if not is_removable(mu, k):
        raise ValueError(f"cannot remove a box from row {k} of {mu}")
    lam = remove_box(mu, k)
    src = enumerate_ssyt(mu, n)
    tgt = enumerate_ssyt(lam, n)
    tgt_index = {t: i for i, t in enumerate(tgt)}
    columns = []
    for source in src:
        col: dict[tuple[int, Monomial], Fraction] = {}
        for J in paths(k):
            for (mono, tab), c in path_image(J, mu, k, source, n).items():
                key = (tgt_index[tab], mono)
                val = col.get(key, Fraction(0)) + c
                if val:
                    col[key] = val
                elif key in col:
                    del col[key]
        columns.append(col)
    return from_columns(n, QQ, columns, tgt, src, 0, 1)


def pieri_map(source_shape, removals, n: int) -> PolyMatrix:
    """Composition of single-box maps in the given row-removal order.

    ``removals`` lists the rows boxes are removed from, first removal first.
    The result maps the free module on the source shape (generator degree
    ``len(removals)``) to the one on the final shape (generator degree 0).
    """
    shape = partition(source_shape)
    removals = [int(r) for r in removals]
    if not removals:
        raise ValueError("at least one removal is required")
    total: PolyMatrix | None = None
    cur = shape
    for step, row in enumerate(removals, start=1):
        if not is_removable(cur, row):
            raise ValueError(
                f"step {step}: cannot remove a box from row {row} of {cur}"
            )
        single = olver_map(cur, row, n)
        total = single if total is None else single @ total
        cur = remove_box(cur, row)
    return total


def matrices_equal_up_to_scalar(a: PolyMatrix, b: PolyMatrix):
    """Return the scalar c with a == c*b (common bases), or None."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        return None
    scalar = None
    for i in range(a.nrows):
        for j in range(a.ncols):
            pa, pb = a.entries[i][j], b.entries[i][j]
            if pa.is_zero() != pb.is_zero():
                return None
            if pa.is_zero():
                continue
            if set(pa.terms) != set(pb.terms):
                return None
            for exps, ca in pa.terms.items():
                ratio = Fraction(ca) / Fraction(pb.terms[exps])
                if scalar is None:
                    scalar = ratio
                elif scalar != ratio:
                    return None
    return scalar


# ---------------------------------------------------------------------------
# integral forms


def _column_blocks(m: PolyMatrix):
    """Group column indices by torus weight, with the coordinate order used
    for the integral normal forms: (monomial revlex, row index)."""
    row_weights = [weight(t, m.n) for t in m.row_basis]
    blocks: dict[tuple, list[int]] = {}
    for j in range(m.ncols):
        w = weight(m.col_basis[j], m.n)
        blocks.setdefault(w, []).append(j)
    delta = m.col_degree - m.row_degree
    monos = monomials_of_degree(m.n, delta)
    out = []
    for w in sorted(blocks):
        cols = blocks[w]
        coords = [
            (mono, i)
            for mono in monos
            for i in range(m.nrows)
            if tuple(a + b for a, b in zip(mono, row_weights[i])) == w
        ]
        coords.sort(key=lambda t: (mono_key(t[0]), t[1]))
        out.append((w, coords, cols))
    return out


def saturate_integral_columns(m: PolyMatrix) -> PolyMatrix:
    """Replace the columns of an integer matrix by a canonical basis of the
    saturation of their coefficient lattice, one torus-weight block at a time.

    The saturation adds exactly the vectors with an integer multiple in the
    original column span, so the rational column span is unchanged while the
    cokernel loses its integer torsion.  Requires full column rank.
    """
    if m.domain != ZZ:
        raise ValueError("saturation requires an integer matrix")
    new_cols = [None] * m.ncols
    for w, coords, cols in _column_blocks(m):
        coord_index = {c: i for i, c in enumerate(coords)}
        vectors = []
        for j in cols:
            vec = [0] * len(coords)
            for i in range(m.nrows):
                for exps, coeff in m.entries[i][j].terms.items():
                    vec[coord_index[(exps, i)]] = coeff
            vectors.append(vec)
        basis = saturate_columns(vectors, len(coords))
        if len(basis) != len(cols):
            raise ValueError(
                "saturation changed the column count; the matrix does not "
                "have full column rank"
            )
        for j, vec in zip(cols, basis):
            col = {}
            for idx, val in enumerate(vec):
                if val:
                    mono, i = coords[idx]
                    col[(i, mono)] = val
            new_cols[j] = col
    return from_columns(
        m.n, ZZ, new_cols, m.row_basis, m.col_basis, m.row_degree, m.col_degree
    )


def zform(m: PolyMatrix, p: int | None = None, *, saturate: bool = True) -> PolyMatrix:
    """Integral form of a rational matrix, optionally reduced mod p.

    Columns are scaled to primitive integer columns.  With ``saturate`` (the
    default) the column lattice is then saturated per weight block, removing
    the integer torsion of the cokernel; ``saturate=False`` keeps the plain
    column-primitive form.  With ``p`` the coefficients are reduced modulo
    the prime afterwards.
    """
    out = m.clear_denominators_columns() if m.domain == QQ else m
    if out.domain != ZZ:
        raise ValueError("zform requires a rational or integer matrix")
    if saturate:
        out = saturate_integral_columns(out)
    if p is not None:
        out = out.reduce_mod(p)
    return out
