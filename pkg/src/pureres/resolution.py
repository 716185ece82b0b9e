"""Equivariant pure complexes, graded cokernels, Betti tables, verification.

For a strictly increasing degree sequence d = (d_0, ..., d_n) the complex
has i-th free module A(-d_i) tensored with the representation of shape
alpha(d, i); the differentials are compositions of single-box inclusion
matrices removing d_i - d_{i-1} boxes from row i.

Betti numbers are computed as graded Koszul homology of the finite-length
(or degree-truncated) cokernel: beta_{i,j} is the dimension of the homology
of Lambda^i(k^n) (x) M in internal degree j, which only involves the module
in degrees <= j, so tables on a degree window are exact even for truncated
modules.  All pieces split into torus-weight blocks, which keeps every
elimination small.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import pieri as pieri_mod
from .algebra import Domain, QQ, mono_key, mono_mul, monomials_of_degree
from .linalg import ScalarMatrix, exact_rank, rref
from .polymatrix import PolyMatrix
from .tableaux import (
    Partition,
    contains,
    dimension,
    enumerate_ssyt,
    partition,
    pieri_expand,
    weight,
)

JOBS_ENV = "PURERES_JOBS"


def degree_sequence(d, n: int) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if len(d) != n + 1:
        raise ValueError(f"degree sequence must have length {n + 1}, got {d}")
    if any(d[i] >= d[i + 1] for i in range(n)):
        raise ValueError(f"degree sequence must be strictly increasing: {d}")
    return d


def alpha(d, j: int, n: int | None = None) -> Partition:
    """Shape of the j-th free module for the degree sequence d."""
    n = len(d) - 1 if n is None else n
    d = degree_sequence(d, n)
    if not 0 <= j <= n:
        raise ValueError(f"index {j} out of range 0..{n}")
    lam = [d[n] - d[i] - n + i for i in range(1, n + 1)]
    parts = [lam[i - 1] + d[i] - d[i - 1] if i <= j else lam[i - 1] for i in range(1, n + 1)]
    return partition(parts)


def pure_free(d, n: int, char: int = 0, *, saturate: bool = True) -> PolyMatrix:
    """The presentation matrix of the pure-resolution module for d.

    Removes d_1 - d_0 boxes from row 1 of alpha(d, 1).  For prime ``char``
    the rational matrix is converted to its integral form (saturated by
    default) and reduced modulo the prime.
    """
    d = degree_sequence(d, n)
    m = pieri_mod.pieri_map(alpha(d, 1, n), [1] * (d[1] - d[0]), n).shifted(d[0])
    if char:
        m = pieri_mod.zform(m, char, saturate=saturate)
    return m


@dataclass(frozen=True)
class EquivariantComplex:
    """The complex F_n -> ... -> F_1 -> F_0 with its shapes and degrees."""

    n: int
    degrees: tuple[int, ...]
    shapes: tuple[Partition, ...]
    maps: tuple[PolyMatrix, ...]

    def ranks(self) -> tuple[int, ...]:
        return tuple(dimension(s, self.n) for s in self.shapes)

    def free_dim(self, i: int, e: int) -> int:
        deg = e - self.degrees[i]
        if deg < 0:
            return 0
        return len(monomials_of_degree(self.n, deg)) * dimension(self.shapes[i], self.n)

    def differential(self, i: int) -> PolyMatrix:
        """The map F_i -> F_{i-1}, i in 1..n."""
        return self.maps[i - 1]

    def compositions_are_zero(self) -> bool:
        return all(
            (self.maps[i] @ self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1)
        )


def build_complex(d, n: int) -> EquivariantComplex:
    """Construct all differentials over the rationals for the sequence d."""
    d = degree_sequence(d, n)
    shapes = tuple(alpha(d, j, n) for j in range(n + 1))
    maps = []
    for i in range(1, n + 1):
        m = pieri_mod.pieri_map(shapes[i], [i] * (d[i] - d[i - 1]), n).shifted(d[i - 1])
        maps.append(m)
    return EquivariantComplex(n, d, shapes, tuple(maps))


# ---------------------------------------------------------------------------
# graded cokernel modules


@dataclass
class CosetBlock:
    """One torus-weight block of one graded piece of a cokernel.

    ``coords`` are the ambient (monomial, row-index) pairs of this weight;
    ``rows`` the reduced echelon rows of the image inside the block;
    ``pivots``/``nonpivots`` index into ``coords``.  The classes of the
    non-pivot coordinates form the chosen basis of the quotient.
    """

    coords: tuple
    rows: tuple
    pivots: tuple[int, ...]
    nonpivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.nonpivots)

    def reduce_elementary(self, idx: int, domain: Domain) -> dict[int, object]:
        """Class of the ambient elementary vector at ``idx`` over the
        non-pivot basis, as {basis position: coefficient}."""
        pos = {c: k for k, c in enumerate(self.nonpivots)}
        if idx in pos:
            return {pos[idx]: domain.one()}
        r = self.pivots.index(idx)
        row = self.rows[r]
        return {
            pos[c]: domain.neg(row[c])
            for c in self.nonpivots
            if not domain.is_zero(row[c])
        }


@dataclass
class GradedModule:
    """A graded module given degree by degree on torus-weight blocks."""

    domain: Domain
    n: int
    gen_degree: int
    blocks: dict
    vanish_degree: int | None
    truncated_at: int | None
    _mult_cache: dict = field(default_factory=dict, repr=False)

    def computed_degrees(self) -> list[int]:
        return sorted(self.blocks)

    def dim(self, e: int) -> int:
        if e in self.blocks:
            return sum(b.dim for b in self.blocks[e].values())
        if e < self.gen_degree:
            return 0
        if self.vanish_degree is not None and e >= self.vanish_degree:
            return 0
        raise ValueError(f"degree {e} beyond the truncation bound {self.truncated_at}")

    def dims(self) -> dict[int, int]:
        return {e: self.dim(e) for e in self.computed_degrees()}

    def total_dimension(self) -> int:
        if self.vanish_degree is None:
            raise ValueError("total dimension requires a finite-length module")
        return sum(self.dims().values())

    def is_finite_length(self) -> bool:
        return self.vanish_degree is not None

    def block(self, e: int, w) -> CosetBlock | None:
        return self.blocks.get(e, {}).get(tuple(w))

    def block_mult(self, e: int, w, l: int):
        """Columns of multiplication by x_{l+1} from block (e, w) to degree e+1."""
        w = tuple(w)
        key = (e, w, l)
        cached = self._mult_cache.get(key)
        if cached is not None:
            return cached
        src = self.block(e, w)
        if src is None:
            raise KeyError(f"no block at degree {e}, weight {w}")
        tw = tuple(a + (1 if i == l else 0) for i, a in enumerate(w))
        tgt = self.block(e + 1, tw)
        cols = []
        if tgt is None:
            if e + 1 in self.blocks or (
                self.vanish_degree is not None and e + 1 >= self.vanish_degree
            ):
                result = ([{} for _ in src.nonpivots], 0)
            else:
                raise ValueError(f"degree {e + 1} beyond the truncation bound")
        else:
            index = {c: k for k, c in enumerate(tgt.coords)}
            for ci in src.nonpivots:
                mono, row_idx = src.coords[ci]
                target_coord = (
                    tuple(a + (1 if i == l else 0) for i, a in enumerate(mono)),
                    row_idx,
                )
                cols.append(tgt.reduce_elementary(index[target_coord], self.domain))
            result = (cols, tgt.dim)
        self._mult_cache[key] = result
        return result

    def coset_basis(self, e: int) -> list[tuple[tuple, tuple]]:
        """Ordered global coset basis of degree e: (weight, coordinate) pairs."""
        if e not in self.blocks:
            return []
        out = []
        for w in sorted(self.blocks[e]):
            blk = self.blocks[e][w]
            out.extend((w, blk.coords[c]) for c in blk.nonpivots)
        return out

    def multiplication_matrix(self, l: int, e: int) -> ScalarMatrix:
        """Full matrix of x_l (1-based) from degree e to degree e+1."""
        if not 1 <= l <= self.n:
            raise ValueError(f"variable index {l} out of range 1..{self.n}")
        src = self.coset_basis(e)
        tgt = self.coset_basis(e + 1)
        tgt_pos: dict = {}
        offset = 0
        offsets = {}
        if e + 1 in self.blocks:
            for w in sorted(self.blocks[e + 1]):
                offsets[w] = offset
                offset += self.blocks[e + 1][w].dim
        entries = [[self.domain.zero()] * len(src) for _ in range(len(tgt))]
        col = 0
        if e in self.blocks:
            for w in sorted(self.blocks[e]):
                blk = self.blocks[e][w]
                cols, tgt_dim = self.block_mult(e, w, l - 1)
                tw = tuple(a + (1 if i == l - 1 else 0) for i, a in enumerate(w))
                base = offsets.get(tw, 0)
                for local_col, vec in enumerate(cols):
                    for local_row, val in vec.items():
                        entries[base + local_row][col + local_col] = val
                col += blk.dim
        return ScalarMatrix(entries, self.domain)


def coker_module(
    m: PolyMatrix,
    degree_bound: int | None = None,
    *,
    allow_truncation: bool = False,
) -> GradedModule:
    """Degreewise cokernel of a matrix over a field.

    Pieces are computed from the generator degree upward until one vanishes;
    since the target is generated in a single degree, all later pieces then
    vanish too.  If the bound is exceeded first, an error is raised unless
    ``allow_truncation`` asks for the degree-truncated module instead.
    """
    if not m.domain.is_field:
        raise ValueError("cokernels are computed over a field")
    domain = m.domain
    n = m.n
    bound = degree_bound if degree_bound is not None else m.row_degree + 100
    row_weights = [weight(t, n) for t in m.row_basis]
    col_weights = [weight(t, n) for t in m.col_basis]
    blocks: dict[int, dict] = {}
    vanish = None
    truncated = None
    e = m.row_degree
    while True:
        amb: dict[tuple, list] = {}
        for mono in monomials_of_degree(n, e - m.row_degree):
            for i in range(m.nrows):
                w = tuple(a + b for a, b in zip(mono, row_weights[i]))
                amb.setdefault(w, []).append((mono, i))
        for w in amb:
            amb[w].sort(key=lambda t: (mono_key(t[0]), t[1]))
        images: dict[tuple, list] = {w: [] for w in amb}
        cdeg = e - m.col_degree
        if cdeg >= 0:
            for mono in monomials_of_degree(n, cdeg):
                for j in range(m.ncols):
                    w = tuple(a + b for a, b in zip(mono, col_weights[j]))
                    coords = amb.get(w)
                    if coords is None:
                        continue
                    index = {c: k for k, c in enumerate(coords)}
                    vec = [domain.zero()] * len(coords)
                    for i in range(m.nrows):
                        for exps, coeff in m.entries[i][j].terms.items():
                            k = index[(mono_mul(mono, exps), i)]
                            vec[k] = domain.add(vec[k], coeff)
                    images[w].append(vec)
        degree_blocks = {}
        total = 0
        for w, coords in amb.items():
            red, pivots = rref(images[w], domain) if images[w] else ([], [])
            pivot_set = set(pivots)
            nonpivots = tuple(k for k in range(len(coords)) if k not in pivot_set)
            blk = CosetBlock(
                coords=tuple(coords),
                rows=tuple(tuple(r) for r in red),
                pivots=tuple(pivots),
                nonpivots=nonpivots,
            )
            degree_blocks[w] = blk
            total += blk.dim
        blocks[e] = degree_blocks
        if total == 0:
            vanish = e
            break
        if e >= bound:
            if allow_truncation:
                truncated = e
                break
            raise ValueError(
                f"cokernel did not vanish by degree {bound}: not finite length "
                "within the bound"
            )
        e += 1
    return GradedModule(
        domain=domain,
        n=n,
        gen_degree=m.row_degree,
        blocks=blocks,
        vanish_degree=vanish,
        truncated_at=truncated,
    )


# ---------------------------------------------------------------------------
# Betti tables via Koszul homology


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported table (homological index, internal degree) -> count."""

    entries: tuple

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls(tuple(sorted((i, j, v) for (i, j), v in data.items() if v)))

    def as_dict(self) -> dict:
        return {(i, j): v for i, j, v in self.entries}

    def value(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def max_index(self) -> int:
        return max((i for i, _, _ in self.entries), default=0)

    def is_pure(self) -> bool:
        seen: dict[int, int] = {}
        for i, j, _ in self.entries:
            if i in seen and seen[i] != j:
                return False
            seen[i] = j
        return True

    def degree_sequence(self) -> tuple[int, ...]:
        if not self.is_pure():
            raise ValueError("table is not pure")
        degs = {i: j for i, j, _ in self.entries}
        top = max(degs, default=0)
        if sorted(degs) != list(range(top + 1)):
            raise ValueError("pure table has gaps in homological indices")
        return tuple(degs[i] for i in range(top + 1))

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, _, v in self.entries:
            out[i] = out.get(i, 0) + v
        return out

    def to_json_list(self) -> list:
        return [[i, j, v] for i, j, v in self.entries]

    def render_text(self) -> str:
        """Grid layout: columns are homological indices, row r holds the
        counts in internal degree i + r, dots for zeros."""
        if not self.entries:
            return "(zero table)"
        imax = max(i for i, _, _ in self.entries)
        rmin = min(j - i for i, j, _ in self.entries)
        rmax = max(j - i for i, j, _ in self.entries)
        data = self.as_dict()
        totals = self.totals()
        header = [""] + [str(i) for i in range(imax + 1)]
        rows = [header, ["total:"] + [str(totals.get(i, 0)) for i in range(imax + 1)]]
        for r in range(rmin, rmax + 1):
            cells = [f"{r}:"]
            for i in range(imax + 1):
                v = data.get((i, i + r), 0)
                cells.append(str(v) if v else ".")
            rows.append(cells)
        widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
        )


def _subsets(n: int, i: int):
    return tuple(combinations(range(n), i))


def betti_table(module: GradedModule, max_degree: int | None = None) -> BettiTable:
    """Graded Betti numbers of a module via Koszul homology.

    For a finite-length module the full table is returned.  For a truncated
    module the table is exact on internal degrees up to the truncation bound
    (each column of the Koszul complex in degree j only involves the module
    in degrees <= j); degrees beyond the bound cannot be certified and raise.
    """
    n = module.n
    domain = module.domain
    if module.vanish_degree is not None:
        top = module.vanish_degree - 1 + n
        jmax = top if max_degree is None else min(max_degree, top)
    else:
        if max_degree is None:
            jmax = module.truncated_at
        elif max_degree > module.truncated_at:
            raise ValueError(
                f"requested degree {max_degree} beyond truncation bound "
                f"{module.truncated_at}"
            )
        else:
            jmax = max_degree
    table: dict[tuple[int, int], int] = {}
    wt = lambda S: tuple(1 if i in S else 0 for i in range(n))
    for j in range(module.gen_degree, jmax + 1):
        weights: set = set()
        level_sets = {i: _subsets(n, i) for i in range(n + 2)}
        for i in range(n + 1):
            e = j - i
            if e not in module.blocks:
                continue
            for S in level_sets[i]:
                ws = wt(S)
                for w0 in module.blocks[e]:
                    if module.blocks[e][w0].dim:
                        weights.add(tuple(a + b for a, b in zip(w0, ws)))
        for w in weights:
            dims: dict[int, int] = {}
            bases: dict[int, list] = {}
            for i in range(n + 2):
                basis = []
                e = j - i
                if 0 <= i <= n + 1 and e in module.blocks:
                    for S in level_sets.get(i, ()):
                        w0 = tuple(a - b for a, b in zip(w, wt(S)))
                        blk = module.blocks[e].get(w0)
                        if blk is not None and blk.dim:
                            basis.append((S, w0, blk.dim))
                bases[i] = basis
                dims[i] = sum(b[2] for b in basis)
            ranks: dict[int, int] = {}
            for i in range(1, n + 2):
                if dims.get(i, 0) == 0 or dims.get(i - 1, 0) == 0:
                    ranks[i] = 0
                    continue
                tgt_offset = {}
                off = 0
                for S, w0, dim in bases[i - 1]:
                    tgt_offset[S] = off
                    off += dim
                rows = [[domain.zero()] * dims[i] for _ in range(dims[i - 1])]
                col = 0
                for S, w0, dim in bases[i]:
                    slist = sorted(S)
                    for t, l in enumerate(slist):
                        rest = tuple(x for x in slist if x != l)
                        if rest not in tgt_offset:
                            continue
                        sign = -1 if t % 2 else 1
                        cols, _ = module.block_mult(j - i, w0, l)
                        base = tgt_offset[rest]
                        for local_col, vec in enumerate(cols):
                            for local_row, val in vec.items():
                                cur = rows[base + local_row][col + local_col]
                                term = domain.mul(domain.coerce(sign), val)
                                rows[base + local_row][col + local_col] = domain.add(
                                    cur, term
                                )
                    col += dim
                ranks[i] = exact_rank(rows, domain)
            for i in range(n + 1):
                h = dims.get(i, 0) - ranks.get(i, 0) - ranks.get(i + 1, 0)
                if h:
                    table[(i, j)] = table.get((i, j), 0) + h
    return BettiTable.from_dict(table)


# ---------------------------------------------------------------------------
# verification


def coker_character_dims(d, n: int) -> list[int]:
    """Degreewise dimensions of the pure-resolution module, by enumeration.

    Sums the dimensions of the shapes obtained from alpha(d, 0) by horizontal
    strips that do not contain alpha(d, 1).  Independent of the matrix route:
    uses only strip enumeration and the dimension formula.  The returned list
    ends with its first zero entry.
    """
    d = degree_sequence(d, n)
    lam = alpha(d, 0, n)
    block = alpha(d, 1, n)
    dims: list[int] = []
    e = 0
    while True:
        tot = sum(
            dimension(nu, n) for nu in pieri_expand(e, lam, n) if not contains(nu, block)
        )
        dims.append(tot)
        if tot == 0:
            return dims
        e += 1


def default_verify_bound(d, n: int) -> int:
    """Vanishing degree of the cokernel plus n (covers every degree where a
    free-module piece meets a nonzero module piece)."""
    d = degree_sequence(d, n)
    return d[0] + len(coker_character_dims(d, n)) - 1 + n


@dataclass(frozen=True)
class ExactnessReport:
    checks: tuple
    minimal: bool

    @property
    def all_ok(self) -> bool:
        return self.minimal and all(c["ok"] for c in self.checks)

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]

    def to_json_list(self) -> list:
        return [dict(c) for c in self.checks]


def _ranks_at_degree(maps, e: int) -> list[int]:
    return [m.graded_rank(e) for m in maps]


def verify_exactness(c: EquivariantComplex, bound: int | None = None) -> ExactnessReport:
    """Rank checks for exactness of the complex in every degree up to a bound.

    At homological position i >= 1 and degree e, exactness is equivalent to
    rank(d_i)_e + rank(d_{i+1})_e = dim(F_i)_e.  The default bound is the
    vanishing degree of the cokernel plus n.  Also checks minimality: every
    differential is homogeneous of positive degree.
    """
    if bound is None:
        bound = default_verify_bound(c.degrees, c.n)
    degrees = list(range(c.degrees[0], bound + 1))
    jobs = int(os.environ.get(JOBS_ENV, "1") or "1")
    if jobs > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            all_ranks = list(pool.map(_ranks_at_degree, [c.maps] * len(degrees), degrees))
    else:
        all_ranks = [_ranks_at_degree(c.maps, e) for e in degrees]
    checks = []
    for e, ranks in zip(degrees, all_ranks):
        for i in range(1, c.n + 1):
            r_i = ranks[i - 1]
            r_next = ranks[i] if i < c.n else 0
            expected = c.free_dim(i, e)
            checks.append(
                {
                    "i": i,
                    "e": e,
                    "expected_rank_sum": expected,
                    "actual": r_i + r_next,
                    "ok": r_i + r_next == expected,
                }
            )
    minimal = all(
        m.col_degree - m.row_degree >= 1 and not m.is_zero() for m in c.maps
    )
    return ExactnessReport(checks=tuple(checks), minimal=minimal)


def herzog_kuhl_constant(table: BettiTable, d) -> int:
    """The common value of beta_{i, d_i} * prod_{j != i} |d_j - d_i|."""
    if not table.is_pure():
        raise ValueError("Herzog-Kuhl check requires a pure table")
    d = tuple(int(x) for x in d)
    values = []
    for i in range(len(d)):
        prod = 1
        for j in range(len(d)):
            if j != i:
                prod *= abs(d[j] - d[i])
        values.append(table.value(i, d[i]) * prod)
    if len(set(values)) != 1:
        raise ValueError(f"table is not proportional to the pure diagram: {values}")
    return values[0]


def herzog_kuhl_check(table: BettiTable, d) -> bool:
    """True iff beta_{i, d_i} * prod_{j != i} |d_j - d_i| is constant in i."""
    if not table.is_pure():
        raise ValueError("Herzog-Kuhl check requires a pure table")
    try:
        herzog_kuhl_constant(table, d)
    except ValueError:
        return False
    return True


def maximal_ideal_matrix(n: int, char: int = 0) -> PolyMatrix:
    """Presentation of the residue field: the 1 x n matrix (x_1 ... x_n)."""
    m = pieri_mod.pieri_map((1,), [1], n)
    if char:
        m = pieri_mod.zform(m, char)
    return m
