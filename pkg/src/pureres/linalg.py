"""Exact linear algebra: fraction-free elimination, RREF, integer lattices.

Rank over the rationals and the integers goes through fraction-free
(Bareiss) elimination on integer matrices to control coefficient growth;
over a prime field plain elimination is used.  Kernel and cokernel bases
come from reduced row echelon forms over the field.

Integer lattice routines (Hermite forms, kernels, saturation) back the
integral forms of the Pieri matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import Domain, GF, QQ, ZZ


def clear_row_denominators(rows) -> list[list[int]]:
    """Scale each row of a rational matrix to integers (rank preserved)."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        mult = 1
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        out.append([int(x * mult) for x in row])
    return out


def rank_int_bareiss(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            if factor or p != prev:
                row_r, row_p = m[r], m[rank]
                for c in range(col + 1, ncols):
                    row_r[c] = (row_r[c] * p - factor * row_p[c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows, p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row_p = m[rank]
        for r in range(rank + 1, nrows):
            factor = (m[r][col] * inv) % p
            if factor:
                row_r = m[r]
                for c in range(col, ncols):
                    row_r[c] = (row_r[c] - factor * row_p[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_rank(rows, domain: Domain) -> int:
    """Exact rank over QQ, ZZ, or GF(p)."""
    if not rows or not rows[0]:
        return 0
    if domain.char:
        return rank_mod_p(rows, domain.char)
    if domain is QQ:
        rows = clear_row_denominators(rows)
    return rank_int_bareiss(rows)


def rref(rows, domain: Domain) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    if not domain.is_field:
        raise ValueError("echelon reduction requires a field")
    m = [[domain.coerce(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if not domain.is_zero(m[r][col])), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = domain.inv(m[rank][col])
        m[rank] = [domain.mul(inv, x) for x in m[rank]]
        row_p = m[rank]
        for r in range(nrows):
            if r != rank and not domain.is_zero(m[r][col]):
                factor = m[r][col]
                m[r] = [domain.sub(x, domain.mul(factor, y)) for x, y in zip(m[r], row_p)]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def kernel_basis(rows, ncols: int, domain: Domain) -> list[list]:
    """Echelon basis of the right kernel of a matrix over a field."""
    red, pivots = rref(rows, domain)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [domain.zero() for _ in range(ncols)]
        vec[f] = domain.one()
        for r, p in enumerate(pivots):
            vec[p] = domain.neg(red[r][f])
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# integer lattices


def _eliminate_row(cols, companions, r: int, active: list[int]) -> int | None:
    """Column-reduce so at most one active column is nonzero in row ``r``.

    Returns the index (into ``cols``) of the surviving column, or None.
    Both ``cols`` and ``companions`` receive the same column operations.
    """
    live = [j for j in active if cols[j][r]]
    while len(live) > 1:
        j1 = min(live, key=lambda j: abs(cols[j][r]))
        for j2 in live:
            if j2 == j1:
                continue
            q = cols[j2][r] // cols[j1][r]
            if q:
                cols[j2] = [a - q * b for a, b in zip(cols[j2], cols[j1])]
                if companions is not None:
                    companions[j2] = [a - q * b for a, b in zip(companions[j2], companions[j1])]
        live = [j for j in live if cols[j][r]]
    return live[0] if live else None


def integer_kernel(rows, ncols: int) -> list[list[int]]:
    """Basis of the integer kernel {v : A v = 0}; the basis is saturated."""
    nrows = len(rows)
    cols = [[rows[r][j] for r in range(nrows)] for j in range(ncols)]
    ident = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    piv = 0
    for r in range(nrows):
        active = list(range(piv, ncols))
        j = _eliminate_row(cols, ident, r, active)
        if j is not None:
            cols[piv], cols[j] = cols[j], cols[piv]
            ident[piv], ident[j] = ident[j], ident[piv]
            piv += 1
    return [ident[j] for j in range(piv, ncols)]


def hermite_column_basis(cols) -> list[list[int]]:
    """Canonical column basis (Hermite form) of the lattice spanned by ``cols``.

    Pivot entries are positive; at every pivot coordinate all other basis
    columns are reduced into [0, pivot).  Zero columns are dropped.
    """
    cols = [list(c) for c in cols if any(c)]
    if not cols:
        return []
    m = len(cols[0])
    piv = 0
    pivot_rows: list[int] = []
    for r in range(m):
        j = _eliminate_row(cols, None, r, list(range(piv, len(cols))))
        if j is None:
            continue
        cols[piv], cols[j] = cols[j], cols[piv]
        if cols[piv][r] < 0:
            cols[piv] = [-a for a in cols[piv]]
        for l in range(piv):
            q = cols[l][r] // cols[piv][r]
            if q:
                cols[l] = [a - q * b for a, b in zip(cols[l], cols[piv])]
        pivot_rows.append(r)
        piv += 1
    return cols[:piv]


def saturate_columns(cols, m: int) -> list[list[int]]:
    """Canonical basis of the saturation of the column lattice inside Z^m.

    The saturation is the intersection of the rational span with Z^m.  It is
    computed as a double integer kernel, which is automatically saturated.
    """
    cols = [list(c) for c in cols if any(c)]
    if not cols:
        return []
    rows_t = [[col[r] for col in cols] for r in range(m)]
    left = integer_kernel([[rows_t[r][j] for r in range(m)] for j in range(len(cols))], m)
    if not left:
        sat = [[1 if i == r else 0 for i in range(m)] for r in range(m)]
    else:
        sat = integer_kernel(left, m)
    return hermite_column_basis(sat)


class ScalarMatrix:
    """A rectangular matrix of exact scalars over QQ, ZZ, or GF(p)."""

    __slots__ = ("entries", "domain")

    def __init__(self, entries, domain: Domain):
        entries = tuple(tuple(domain.coerce(x) for x in row) for row in entries)
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError("matrix rows must have equal lengths")
        self.entries = entries
        self.domain = domain

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ScalarMatrix)
            and self.domain == other.domain
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.nrows}x{self.ncols} over {self.domain})"

    def rank(self) -> int:
        return exact_rank([list(r) for r in self.entries], self.domain)

    def kernel_basis(self) -> list[list]:
        """Echelon basis of the kernel, as vectors of length ncols."""
        if self.ncols == 0:
            return []
        return kernel_basis([list(r) for r in self.entries], self.ncols, self.domain)

    def cokernel_basis(self) -> list[list]:
        """Coset representatives for the cokernel: standard vectors at the
        non-pivot coordinates of the column space."""
        if self.nrows == 0:
            return []
        transpose = [[self.entries[r][c] for r in range(self.nrows)] for c in range(self.ncols)]
        _, pivots = rref(transpose, self.domain)
        pivot_set = set(pivots)
        basis = []
        for r in range(self.nrows):
            if r not in pivot_set:
                vec = [self.domain.zero()] * self.nrows
                vec[r] = self.domain.one()
                basis.append(vec)
        return basis
