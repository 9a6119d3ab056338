"""Dominance counting over the nonzeros of a (sub)permutation matrix.

A ``DominanceCounter`` answers distribution-matrix queries in O(log^2 n)
via a static range tree over row intervals, and supports O(1) incremental
steps between adjacent grid cells plus O(length) batch line queries.
"""

from __future__ import annotations

from bisect import bisect_left

from .matrices import ABSENT, PermutationMatrix


class DominanceCounter:
    """Range tree over nonzeros; immutable after construction."""

    __slots__ = ("source", "n", "_nodes", "_size")

    def __init__(self, source: PermutationMatrix):
        self.source = source
        self.n = source.n
        # Bottom-up segment tree; node k covers a row interval, holding the
        # sorted column indices of that interval's nonzeros.
        size = 1
        while size < max(self.n, 1):
            size *= 2
        self._size = size
        nodes: list[list[int]] = [[] for _ in range(2 * size)]
        for r in range(self.n):
            c = source.row_to_col[r]
            if c != ABSENT:
                nodes[size + r] = [c]
        for k in range(size - 1, 0, -1):
            left, right = nodes[2 * k], nodes[2 * k + 1]
            if not right:
                nodes[k] = left
            elif not left:
                nodes[k] = right
            else:
                nodes[k] = _merge(left, right)
        self._nodes = nodes

    def query(self, i: int, j: int) -> int:
        """Count nonzeros with stored row >= i and stored column < j."""
        n = self.n
        if not (0 <= i <= n and 0 <= j <= n):
            raise ValueError(f"query ({i}, {j}) outside [0, {n}]")
        # Decompose rows [i, n) into O(log n) canonical nodes.
        count = 0
        lo, hi = self._size + i, self._size + self._size
        nodes = self._nodes
        while lo < hi:
            if lo & 1:
                count += bisect_left(nodes[lo], j)
                lo += 1
            if hi & 1:
                hi -= 1
                count += bisect_left(nodes[hi], j)
            lo //= 2
            hi //= 2
        return count

    def step(self, i: int, j: int, known: int, direction: str) -> int:
        """Value at the cell adjacent to (i, j), given ``known`` there.

        ``direction`` is one of "row+1", "row-1", "col+1", "col-1"; steps
        over ABSENT rows/columns leave the value unchanged.
        """
        return step(self.source, i, j, known, direction)

    def batch(self, line: str, index: int, span: tuple[int, int]) -> list[int]:
        """Values along a row, column, or diagonal, one anchor query + steps.

        For ``line="row"`` returns ``[query(index, j) for j in span]``;
        for ``"column"`` the roles are exchanged; for ``"diagonal"``,
        ``index`` is the offset d and values are ``query(i, i + d)`` for
        i in span.
        """
        lo, hi = span
        if lo > hi:
            raise ValueError("empty span")
        n = self.n
        out = []
        if line == "row":
            if not (0 <= index <= n and 0 <= lo and hi <= n):
                raise ValueError("span outside range")
            value = self.query(index, lo)
            out.append(value)
            for j in range(lo, hi):
                value = self.step(index, j, value, "col+1")
                out.append(value)
        elif line == "column":
            if not (0 <= index <= n and 0 <= lo and hi <= n):
                raise ValueError("span outside range")
            value = self.query(lo, index)
            out.append(value)
            for i in range(lo, hi):
                value = self.step(i, index, value, "row+1")
                out.append(value)
        elif line == "diagonal":
            if not (0 <= lo and hi + index <= n and lo + index >= 0 and hi <= n):
                raise ValueError("span outside range")
            value = self.query(lo, lo + index)
            out.append(value)
            for i in range(lo, hi):
                value = self.step(i, i + index, value, "row+1")
                value = self.step(i + 1, i + index, value, "col+1")
                out.append(value)
        else:
            raise ValueError(f"unknown line kind {line!r}")
        return out


def step(p: PermutationMatrix, i: int, j: int, known: int, direction: str) -> int:
    """Incremental distribution query on ``p`` from a known adjacent value."""
    n = p.n
    if direction == "row+1":
        if i >= n:
            raise ValueError("cannot step below the grid")
        c = p.row_to_col[i]
        return known - (1 if c != ABSENT and c < j else 0)
    if direction == "row-1":
        if i <= 0:
            raise ValueError("cannot step above the grid")
        c = p.row_to_col[i - 1]
        return known + (1 if c != ABSENT and c < j else 0)
    if direction == "col+1":
        if j >= n:
            raise ValueError("cannot step right of the grid")
        r = p.col_to_row[j]
        return known + (1 if r != ABSENT and r >= i else 0)
    if direction == "col-1":
        if j <= 0:
            raise ValueError("cannot step left of the grid")
        r = p.col_to_row[j - 1]
        return known - (1 if r != ABSENT and r >= i else 0)
    raise ValueError(f"unknown direction {direction!r}")


def _merge(a: list[int], b: list[int]) -> list[int]:
    out = []
    ia = ib = 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        if a[ia] <= b[ib]:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return out
