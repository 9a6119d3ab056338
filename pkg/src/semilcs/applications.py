"""Applications of the seaweed method: incremental LCS, block updates,
common-substring patterns, cyclic LCS and longest repeating subsequence."""

from __future__ import annotations

from typing import Sequence

from .alphabet import as_symbols, chars_match
from .dominance import step
from .matrices import PermutationMatrix
from .minplus import implicit_matvec
from .seaweed import (
    ScoreOracle,
    SeaweedMatrix,
    compose_horizontal,
    reverse_both,
    seaweed_build,
    swap,
)


class IncrementalLcs:
    """Seaweed matrix maintained under character appends and prepends.

    Single-writer: updates mutate the state; reads during updates need
    external synchronization.
    """

    def __init__(self, a=(), b=()):
        self.a = as_symbols(a)
        self.b = as_symbols(b)
        self.sw = seaweed_build(self.a, self.b)

    def update(self, end: str, side: str, ch) -> None:
        """Extend one string by one character at one end; O(m+n)."""
        if side not in ("a", "b"):
            raise ValueError("side must be 'a' or 'b'")
        if end not in ("front", "back"):
            raise ValueError("end must be 'front' or 'back'")
        if side == "b":
            self.a, self.b = self.b, self.a
            self.sw = swap(self.sw)
            try:
                self.update(end, "a", ch)
            finally:
                self.a, self.b = self.b, self.a
                self.sw = swap(self.sw)
            return
        if end == "front":
            self.a.reverse()
            self.b.reverse()
            self.sw = reverse_both(self.sw)
            try:
                self.update("back", "a", ch)
            finally:
                self.a.reverse()
                self.b.reverse()
                self.sw = reverse_both(self.sw)
            return
        # Append to the back of a: embed the old braid one row lower, then
        # sweep the new bottom row of cells.
        m, n = self.sw.m, self.sw.n
        size = m + 1 + n
        row_to_col = [0] * size
        for r, c in enumerate(self.sw.perm.row_to_col):
            row_to_col[r + 1] = c + 1
        col_to_row = [0] * size
        for r, c in enumerate(row_to_col):
            col_to_row[c] = r
        for ib in range(n):
            if not chars_match(ch, self.b[ib]):
                c1 = ib  # cell columns (i*-1, i*) with i* = ib + 1
                r1 = col_to_row[c1]
                r2 = col_to_row[c1 + 1]
                if r1 < r2:
                    col_to_row[c1] = r2
                    col_to_row[c1 + 1] = r1
                    row_to_col[r1] = c1 + 1
                    row_to_col[r2] = c1
        self.a.append(ch)
        self.sw = SeaweedMatrix(m + 1, n, PermutationMatrix(row_to_col, validate=False))

    def block_update(self, end: str, block, block_sw: SeaweedMatrix) -> None:
        """Append or prepend a precomputed block to a; composition-based."""
        block = as_symbols(block)
        if block_sw.n != self.sw.n or block_sw.m != len(block):
            raise ValueError("block seaweed matrix does not match")
        if end == "back":
            self.sw = compose_horizontal(self.sw, block_sw)
            self.a.extend(block)
        elif end == "front":
            self.sw = compose_horizontal(block_sw, self.sw)
            self.a[:0] = block
        else:
            raise ValueError("end must be 'front' or 'back'")

    def lcs(self) -> int:
        return ScoreOracle(self.a, self.b, self.sw).lcs()

    def oracle(self) -> ScoreOracle:
        return ScoreOracle(self.a, self.b, self.sw)


def common_substring_lcs(
    text, common, patterns: Sequence[tuple[Sequence, Sequence[int]]]
) -> list[int]:
    """LCS of ``text`` against each pattern sharing the substring ``common``.

    Each pattern is given as (string, occurrence positions); at every
    occurrence the prefix-score vector is advanced by one implicit
    matrix-vector product over the precomputed seaweed matrix of
    ``common`` vs ``text``, and by plain DP elsewhere.
    """
    text = as_symbols(text)
    common = as_symbols(common)
    n = len(text)
    lc = len(common)
    sw = seaweed_build(common, text)
    # String-substring window of the seaweed matrix, as an n x n subpermutation.
    df_pairs = [
        (r - lc, c) for r, c in sw.perm.nonzeros() if r >= lc and c < n
    ]
    df = PermutationMatrix.from_pairs(n, df_pairs)
    out = []
    for pattern, occurrences in patterns:
        pattern = as_symbols(pattern)
        occs = sorted(occurrences)
        for pos in occs:
            if pattern[pos : pos + lc] != common:
                raise ValueError(f"no occurrence of the common substring at {pos}")
        h = [0] * (n + 1)  # h[j] = LCS(consumed prefix of pattern, text[:j])
        k = 0
        for pos in occs:
            for idx in range(k, pos):
                h = _advance_char(h, pattern[idx], text)
            # h'(j) = max_k (h(k) + LCS(common, text[k:j])) via min-plus.
            b = [k2 - h[k2] for k2 in range(n + 1)]
            prod = implicit_matvec(df, b)
            h = [j - prod[j] for j in range(n + 1)]
            k = pos + lc
        for idx in range(k, len(pattern)):
            h = _advance_char(h, pattern[idx], text)
        out.append(h[n])
    return out


def _advance_char(h: list[int], ch, text: list) -> list[int]:
    n = len(text)
    out = [0] * (n + 1)
    for j in range(1, n + 1):
        best = h[j]
        if out[j - 1] > best:
            best = out[j - 1]
        if chars_match(ch, text[j - 1]):
            cand = h[j - 1] + 1
            if cand > best:
                best = cand
        out[j] = best
    return out


def cyclic_lcs(a, b) -> int:
    """Highest LCS score of ``a`` against all cyclic shifts of ``b``."""
    a = as_symbols(a)
    b = as_symbols(b)
    if len(a) > len(b):
        a, b = b, a
    m, n = len(a), len(b)
    if n == 0:
        return 0
    sw = seaweed_build(a, b + b)
    perm = sw.perm
    # Scan windows (i, i+n) of bb left to right; two steps per shift.
    value = 0
    for j in range(n):  # distribution value at (m, n) via column walk from (m, 0)
        value = step(perm, m, j, value, "col+1")
    best = n - value  # H(0, n)
    dist = value
    for i in range(n):
        dist = step(perm, i + m, i + n, dist, "row+1")
        dist = step(perm, i + 1 + m, i + n, dist, "col+1")
        score = n - dist  # H(i+1, i+1+n)
        if score > best:
            best = score
    return best


def longest_repeating_subsequence(a) -> int:
    """Half-length of the longest square subsequence of ``a``: the best
    LCS score over all prefix-suffix splits of ``a`` against itself."""
    a = as_symbols(a)
    n = len(a)
    if n < 2:
        return 0
    sw = seaweed_build(a, a)
    perm = sw.perm
    # prefix_suffix(k, k) = n - k - dist(k, 2n - k); walk the anti-diagonal.
    dist = 0
    for j in range(2 * n - 1):  # anchor at matrix point (1, 2n-1)
        dist = step(perm, 1 + n, j, dist, "col+1")
    best = 0
    for k in range(1, n):
        score = n - k - dist
        if score > best:
            best = score
        if k + 1 < n:
            dist = step(perm, k + n, 2 * n - k, dist, "row+1")
            dist = step(perm, k + 1 + n, 2 * n - k, dist, "col-1")
    return best
