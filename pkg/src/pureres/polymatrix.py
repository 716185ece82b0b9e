"""Matrices over a polynomial ring with typed tableau bases and degree shifts.

A ``PolyMatrix`` presents a degree-0 map of graded free modules

    A(-col_degree) (x) <col_basis>  ->  A(-row_degree) (x) <row_basis>

where the bases are ordered lists of semistandard tableaux; every nonzero
entry must be homogeneous of degree ``col_degree - row_degree``.

Graded pieces are scalar matrices in the ordered bases
{monomial x tableau}, monomials in graded reverse-lex order, monomial-major
(index = mono_index * len(basis) + tableau_index).
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import tableaux
from .algebra import (
    GF,
    QQ,
    ZZ,
    Domain,
    Polynomial,
    content_and_denominator,
    default_varnames,
    mono_key,
    mono_mul,
    monomials_of_degree,
)
from .linalg import ScalarMatrix, exact_rank


class PolyMatrix:
    """Matrix of homogeneous polynomials with tableau row/column bases."""

    __slots__ = ("n", "domain", "entries", "row_basis", "col_basis", "row_degree", "col_degree")

    def __init__(self, n, domain, entries, row_basis, col_basis, row_degree, col_degree):
        self.n = int(n)
        self.domain = domain
        self.row_basis = tuple(tuple(tuple(r) for r in t) for t in row_basis)
        self.col_basis = tuple(tuple(tuple(r) for r in t) for t in col_basis)
        self.row_degree = int(row_degree)
        self.col_degree = int(col_degree)
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != len(self.row_basis):
            raise ValueError("entry row count does not match row basis")
        want = self.col_degree - self.row_degree
        for row in entries:
            if len(row) != len(self.col_basis):
                raise ValueError("entry column count does not match column basis")
            for p in row:
                if not isinstance(p, Polynomial) or p.n != self.n or p.domain != domain:
                    raise ValueError("entries must be polynomials over the matrix ring")
                if p and p.homogeneous_degree() != want:
                    raise ValueError(
                        f"entry {p.to_str()} is not homogeneous of degree {want}"
                    )
        self.entries = entries

    # -- basics ---------------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.row_basis)

    @property
    def ncols(self) -> int:
        return len(self.col_basis)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.n == other.n
            and self.domain == other.domain
            and self.row_basis == other.row_basis
            and self.col_basis == other.col_basis
            and self.row_degree == other.row_degree
            and self.col_degree == other.col_degree
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return (
            f"PolyMatrix({self.nrows}x{self.ncols}, degrees "
            f"{self.row_degree}->{self.col_degree}, over {self.domain})"
        )

    def scaled(self, c) -> "PolyMatrix":
        return PolyMatrix(
            self.n,
            self.domain,
            [[p.scale(c) for p in row] for row in self.entries],
            self.row_basis,
            self.col_basis,
            self.row_degree,
            self.col_degree,
        )

    def shifted(self, row_degree: int) -> "PolyMatrix":
        """Same entries with generator degrees translated to start at ``row_degree``."""
        delta = row_degree - self.row_degree
        return PolyMatrix(
            self.n,
            self.domain,
            self.entries,
            self.row_basis,
            self.col_basis,
            self.row_degree + delta,
            self.col_degree + delta,
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        """Composition: ``self`` applied after ``other`` (matrix product)."""
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.n != other.n or self.domain != other.domain:
            raise ValueError("cannot compose matrices over different rings")
        if self.col_basis != other.row_basis:
            raise ValueError("composition bases do not match")
        zero = Polynomial.zero(self.n, self.domain)
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        col_degree = self.col_degree + other.col_degree - other.row_degree
        return PolyMatrix(
            self.n, self.domain, rows, self.row_basis, other.col_basis,
            self.row_degree, col_degree,
        )

    # -- graded pieces ----------------------------------------------------
    def graded_basis(self, e: int, side: str) -> list[tuple]:
        """Ordered (monomial, tableau) basis of the degree-e piece of a side."""
        basis = self.row_basis if side == "row" else self.col_basis
        deg = self.row_degree if side == "row" else self.col_degree
        if e - deg < 0:
            return []
        return [(m, t) for m in monomials_of_degree(self.n, e - deg) for t in basis]

    def graded_piece(self, e: int) -> ScalarMatrix:
        """Scalar matrix of the degree-e piece of the map.

        Requires a field domain.  A degree below both generator degrees gives
        an empty matrix.
        """
        if not self.domain.is_field:
            raise ValueError("graded pieces require a field domain")
        row_pairs = self.graded_basis(e, "row")
        col_pairs = self.graded_basis(e, "col")
        index = {pair: i for i, pair in enumerate(row_pairs)}
        zero = self.domain.zero()
        cols = [[zero] * len(col_pairs) for _ in range(len(row_pairs))]
        col_of_tab = {t: k for k, t in enumerate(self.col_basis)}
        for j, (mono, tab) in enumerate(col_pairs):
            k = col_of_tab[tab]
            for i, rt in enumerate(self.row_basis):
                p = self.entries[i][k]
                for exps, coeff in p.terms.items():
                    target = (mono_mul(mono, exps), rt)
                    cols[index[target]][j] = self.domain.add(cols[index[target]][j], coeff)
        return ScalarMatrix(cols, self.domain)

    def column_weight(self, j: int) -> tuple[int, ...]:
        return tableaux.weight(self.col_basis[j], self.n)

    def graded_rank(self, e: int) -> int:
        """Rank of the degree-e piece, computed per torus-weight block.

        Every entry links source and target coordinates of equal weight (the
        equivariance invariant), so the graded piece is block diagonal over
        weights and the rank is the sum of the small block ranks.
        """
        dom = self.domain if self.domain.is_field else QQ
        col_pairs = self.graded_basis(e, "col")
        if not col_pairs:
            return 0
        col_of_tab = {t: k for k, t in enumerate(self.col_basis)}
        row_weights = [tableaux.weight(t, self.n) for t in self.row_basis]
        blocks: dict[tuple, tuple[dict, list]] = {}
        for (mono, tab) in col_pairs:
            w = tuple(a + b for a, b in zip(mono, tableaux.weight(tab, self.n)))
            coords, cols = blocks.setdefault(w, ({}, []))
            vec: dict[int, object] = {}
            k = col_of_tab[tab]
            for i in range(self.nrows):
                p = self.entries[i][k]
                for exps, coeff in p.terms.items():
                    target = (mono_mul(mono, exps), i)
                    tw = tuple(a + b for a, b in zip(target[0], row_weights[i]))
                    if tw != w:
                        raise ValueError("matrix entry violates torus equivariance")
                    idx = coords.setdefault(target, len(coords))
                    vec[idx] = dom.add(vec.get(idx, dom.zero()), dom.coerce(coeff))
            cols.append(vec)
        total = 0
        for coords, cols in blocks.values():
            if not coords:
                continue
            rows = [[dom.zero()] * len(cols) for _ in range(len(coords))]
            for j, vec in enumerate(cols):
                for idx, val in vec.items():
                    rows[idx][j] = val
            total += exact_rank(rows, dom)
        return total

    def check_torus_equivariance(self) -> None:
        """Raise unless every entry term satisfies the weight bookkeeping
        identity weight(col) = weight(row) + exponent vector."""
        for i, rt in enumerate(self.row_basis):
            rw = tableaux.weight(rt, self.n)
            for j, ct in enumerate(self.col_basis):
                cw = tableaux.weight(ct, self.n)
                for exps in self.entries[i][j].terms:
                    if tuple(a + b for a, b in zip(rw, exps)) != cw:
                        raise ValueError(
                            f"entry ({i},{j}) term {exps} breaks equivariance: "
                            f"row weight {rw}, column weight {cw}"
                        )

    # -- coefficient transforms -------------------------------------------
    def clear_denominators_columns(self) -> "PolyMatrix":
        """Scale each column to a primitive integer column.

        Each column is multiplied by the lcm of its coefficient denominators
        and divided by the gcd of its numerators; zero columns are kept.
        Column spans over QQ are unchanged.
        """
        if self.domain != QQ:
            raise ValueError("clearing denominators requires a rational matrix")
        cols = []
        for j in range(self.ncols):
            coeffs = [c for i in range(self.nrows) for c in self.entries[i][j].terms.values()]
            num, den = content_and_denominator(coeffs)
            scale = Fraction(den, num) if num else Fraction(1)
            cols.append(
                [
                    self.entries[i][j].scale(scale).map_coefficients(ZZ)
                    for i in range(self.nrows)
                ]
            )
        rows = [[cols[j][i] for j in range(self.ncols)] for i in range(self.nrows)]
        return PolyMatrix(
            self.n, ZZ, rows, self.row_basis, self.col_basis,
            self.row_degree, self.col_degree,
        )

    def reduce_mod(self, p: int) -> "PolyMatrix":
        """Coefficient-wise reduction of an integer matrix modulo a prime."""
        if self.domain != ZZ:
            raise ValueError("reduction mod p requires an integer matrix")
        field = GF(p)
        rows = [[poly.map_coefficients(field) for poly in row] for row in self.entries]
        return PolyMatrix(
            self.n, field, rows, self.row_basis, self.col_basis,
            self.row_degree, self.col_degree,
        )

    def map_domain(self, domain: Domain) -> "PolyMatrix":
        rows = [[poly.map_coefficients(domain) for poly in row] for row in self.entries]
        return PolyMatrix(
            self.n, domain, rows, self.row_basis, self.col_basis,
            self.row_degree, self.col_degree,
        )

    # -- serialization ------------------------------------------------------
    def to_json_dict(self, varnames=None) -> dict:
        varnames = list(varnames or default_varnames(self.n))
        return {
            "ring": {
                "n": self.n,
                "char": self.domain.char,
                "vars": varnames,
                "coeffs": self.domain.name,
            },
            "row_basis": [[list(r) for r in t] for t in self.row_basis],
            "col_basis": [[list(r) for r in t] for t in self.col_basis],
            "row_degree": self.row_degree,
            "col_degree": self.col_degree,
            "entries": [[p.to_str(varnames) for p in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PolyMatrix":
        ring = data["ring"]
        n = int(ring["n"])
        coeffs = ring.get("coeffs", "QQ" if ring["char"] == 0 else f"GF({ring['char']})")
        if coeffs == "ZZ":
            domain: Domain = ZZ
        elif coeffs == "QQ":
            domain = QQ
        else:
            domain = GF(int(ring["char"]))
        entries = [
            [Polynomial.parse(s, n, domain) for s in row] for row in data["entries"]
        ]
        return cls(
            n,
            domain,
            entries,
            [tuple(tuple(r) for r in t) for t in data["row_basis"]],
            [tuple(tuple(r) for r in t) for t in data["col_basis"]],
            data["row_degree"],
            data["col_degree"],
        )

    def to_json(self, varnames=None, indent=2) -> str:
        return json.dumps(self.to_json_dict(varnames), indent=indent)

    def render(self, varnames=None, style: str = "text") -> str:
        """Aligned matrix display; ``style='m2'`` uses the compact bracketed
        layout with single-letter variables."""
        if style == "m2":
            cells = [[p.to_m2_str(varnames) for p in row] for row in self.entries]
        else:
            cells = [[p.to_str(varnames) for p in row] for row in self.entries]
        if not cells:
            return "| |"
        widths = [
            max(len(cells[i][j]) for i in range(self.nrows)) if self.nrows else 0
            for j in range(self.ncols)
        ]
        lines = []
        for row in cells:
            body = " ".join(cell.ljust(w) for cell, w in zip(row, widths))
            lines.append(f"| {body} |")
        return "\n".join(lines)


def from_columns(n, domain, columns, row_basis, col_basis, row_degree, col_degree):
    """Build a PolyMatrix from per-column dicts {(row_index, exps): coeff}."""
    nrows = len(row_basis)
    polys = [[dict() for _ in columns] for _ in range(nrows)]
    for j, col in enumerate(columns):
        for (i, exps), coeff in col.items():
            polys[i][j][exps] = coeff
    rows = [
        [Polynomial(n, domain, polys[i][j]) for j in range(len(columns))]
        for i in range(nrows)
    ]
    return PolyMatrix(n, domain, rows, row_basis, col_basis, row_degree, col_degree)
