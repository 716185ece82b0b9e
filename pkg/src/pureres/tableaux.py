"""Partitions, fillings, semistandard Young tableaux, and the Pieri rule.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing positive integers.  Trailing
  zeros are stripped on construction, so ``(2, 1)`` and ``(2, 1, 0)`` denote
  the same shape.
* A filling is a tuple of row tuples with entries in ``1..n``.  A
  semistandard tableau (SSYT) additionally has weakly increasing rows and
  strictly increasing columns.
* SSYT of a fixed shape are ordered lexicographically by their row reading
  word (rows concatenated top to bottom).  Every basis produced by this
  package uses that order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain

Partition = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


def partition(parts) -> Partition:
    """Normalize ``parts`` to a partition tuple, stripping trailing zeros."""
    out = tuple(int(p) for p in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    if any(p < 0 for p in out):
        raise ValueError(f"partition parts must be nonnegative: {tuple(parts)}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {tuple(parts)}")
    return out


def size(shape) -> int:
    return sum(partition(shape))


def contains(outer, inner) -> bool:
    """True if the diagram of ``inner`` fits inside the diagram of ``outer``."""
    outer, inner = partition(outer), partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def remove_box(shape, k: int) -> Partition:
    """Remove one box from row ``k`` (1-based); the result must be a partition."""
    shape = partition(shape)
    if not 1 <= k <= len(shape):
        raise ValueError(f"no box to remove in row {k} of {shape}")
    nxt = shape[k] if k < len(shape) else 0
    if shape[k - 1] - 1 < nxt:
        raise ValueError(f"removing a box from row {k} of {shape} leaves no partition")
    return partition(shape[: k - 1] + (shape[k - 1] - 1,) + shape[k:])


def filling(rows, n: int, shape=None) -> Rows:
    """Validate ``rows`` as a filling with entries in 1..n and return it."""
    out = tuple(tuple(int(e) for e in row) for row in rows)
    while out and not out[-1]:
        out = out[:-1]
    got = partition(len(row) for row in out)
    if len(got) != len(out):
        raise ValueError(f"rows must have weakly decreasing positive lengths: {rows}")
    if shape is not None and got != partition(shape):
        raise ValueError(f"filling {rows} does not have shape {partition(shape)}")
    for row in out:
        for e in row:
            if not 1 <= e <= n:
                raise ValueError(f"entry {e} out of range 1..{n}")
    return out


def shape_of(rows: Rows) -> Partition:
    return partition(len(row) for row in rows)


def row_word(rows: Rows) -> tuple[int, ...]:
    return tuple(chain.from_iterable(rows))


def is_ssyt(rows: Rows) -> bool:
    for row in rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    for i in range(len(rows) - 1):
        upper, lower = rows[i], rows[i + 1]
        if len(lower) > len(upper):
            return False
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def weight(rows: Rows, n: int) -> tuple[int, ...]:
    """Entry-multiplicity vector: component i counts boxes labelled i+1."""
    counts = [0] * n
    for e in row_word(rows):
        if not 1 <= e <= n:
            raise ValueError(f"entry {e} out of range 1..{n}")
        counts[e - 1] += 1
    return tuple(counts)


def enumerate_ssyt(shape, n: int) -> tuple[Rows, ...]:
    """All SSYT of ``shape`` with entries in 1..n, in row-word lex order.

    A shape with more than n nonzero parts has no SSYT; the result is empty.
    """
    return _enumerate_ssyt(partition(shape), int(n))


@lru_cache(maxsize=None)
def _enumerate_ssyt(shape: Partition, n: int) -> tuple[Rows, ...]:
    if len(shape) > n:
        return ()
    if not shape:
        return ((),)
    boxes = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    rows = [[0] * r for r in shape]
    out: list[Rows] = []

    def rec(b: int) -> None:
        if b == len(boxes):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = boxes[b]
        lo = 1
        if j:
            lo = max(lo, rows[i][j - 1])
        if i:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, n + 1):
            rows[i][j] = v
            rec(b + 1)
        rows[i][j] = 0

    rec(0)
    return tuple(out)


def dimension(shape, n: int) -> int:
    """Dimension of the degree-``shape`` representation of GL_n.

    Computed by the Weyl product formula; equals ``len(enumerate_ssyt(shape, n))``.
    """
    shape = partition(shape)
    n = int(n)
    if len(shape) > n:
        return 0
    lam = shape + (0,) * (n - len(shape))
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    if num % den:
        raise AssertionError("Weyl product formula did not yield an integer")
    return num // den


def pieri_expand(d: int, shape, n: int) -> list[Partition]:
    """All partitions obtained from ``shape`` by adding a horizontal strip of d boxes.

    A horizontal strip adds no two boxes in the same column; results have at
    most n parts, each with multiplicity one.  Returned sorted.
    """
    shape = partition(shape)
    d = int(d)
    if d < 0:
        raise ValueError("strip size must be nonnegative")
    if len(shape) > n:
        return []
    lam = shape + (0,) * (n - len(shape))
    out: list[Partition] = []
    mu = [0] * n

    def rec(i: int, remaining: int) -> None:
        if i == n:
            if remaining == 0:
                out.append(partition(mu))
            return
        hi = lam[i] + remaining if i == 0 else min(lam[i - 1], lam[i] + remaining)
        for v in range(lam[i], hi + 1):
            mu[i] = v
            rec(i + 1, remaining - (v - lam[i]))
        mu[i] = 0

    rec(0, d)
    return sorted(out)
