"""Semi-local string comparison via seaweed permutation matrices.

``seaweed_build`` sweeps the m x n comparison grid once and produces a
permutation matrix of size m+n that implicitly encodes the LCS score of
``a`` against every substring of ``b`` plus all prefix-suffix, suffix-prefix
and substring-string scores.  ``ScoreOracle`` answers those queries;
composition glues seaweed matrices of concatenated strings together with
one implicit min-plus product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alphabet import WILDCARD, as_symbols, chars_match
from .dominance import DominanceCounter
from .matrices import ABSENT, PermutationMatrix
from .minplus import _matmul_full, boxdot_subperm


class SeaweedMatrix:
    """Permutation matrix of size m+n encoding all semi-local scores.

    Stored row r corresponds to seaweed start position r - m + 1/2 and
    stored column c to terminal position c + 1/2.
    """

    __slots__ = ("m", "n", "perm")

    def __init__(self, m: int, n: int, perm: PermutationMatrix):
        if perm.n != m + n:
            raise ValueError("permutation size must be m + n")
        self.m = m
        self.n = n
        self.perm = perm

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeaweedMatrix)
            and self.m == other.m
            and self.n == other.n
            and self.perm == other.perm
        )

    def __repr__(self) -> str:
        return f"SeaweedMatrix(m={self.m}, n={self.n}, perm={self.perm.row_to_col!r})"

    def to_tsv(self) -> str:
        """Export: header "m n", then one stored (row, col) pair per line."""
        lines = [f"{self.m} {self.n}"]
        lines.extend(f"{r}\t{c}" for r, c in self.perm.nonzeros())
        return "\n".join(lines)

    @classmethod
    def from_tsv(cls, text: str) -> "SeaweedMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        m, n = map(int, lines[0].split())
        pairs = [tuple(map(int, ln.split("\t"))) for ln in lines[1:]]
        return cls(m, n, PermutationMatrix.from_pairs(m + n, pairs))


def seaweed_build(a, b) -> SeaweedMatrix:
    """Sweep the comparison dag of ``a`` and ``b`` row by row.

    Starting from the identity braid, each mismatch cell crosses the two
    seaweeds currently passing through it unless they have crossed before.
    O(mn) time, O(m+n) memory.
    """
    a = as_symbols(a)
    b = as_symbols(b)
    m, n = len(a), len(b)
    size = m + n
    col_to_row = list(range(size))
    row_to_col = list(range(size))
    for la in range(m):
        ach = a[la]
        base = m - la - 1  # cell at b-position ib touches columns base+ib, base+ib+1
        for ib in range(n):
            if not chars_match(ach, b[ib]):
                c1 = base + ib
                r1 = col_to_row[c1]
                r2 = col_to_row[c1 + 1]
                if r1 < r2:
                    col_to_row[c1] = r2
                    col_to_row[c1 + 1] = r1
                    row_to_col[r1] = c1 + 1
                    row_to_col[r2] = c1
    return SeaweedMatrix(m, n, PermutationMatrix(row_to_col, validate=False))


SCORE_KINDS = ("string-substring", "prefix-suffix", "suffix-prefix", "substring-string")


class ScoreOracle:
    """Query object for the four semi-local score families of (a, b)."""

    def __init__(self, a, b, sw: SeaweedMatrix | None = None):
        self.a = as_symbols(a)
        self.b = as_symbols(b)
        self.sw = sw if sw is not None else seaweed_build(self.a, self.b)
        if (self.sw.m, self.sw.n) != (len(self.a), len(self.b)):
            raise ValueError("seaweed matrix does not match string lengths")
        self._counter: DominanceCounter | None = None

    @property
    def counter(self) -> DominanceCounter:
        if self._counter is None:
            self._counter = DominanceCounter(self.sw.perm)
        return self._counter

    def _dist(self, i: int, j: int) -> int:
        # Distribution value at matrix coordinates i in [-m, n], j in [0, m+n].
        return self.counter.query(i + self.sw.m, j)

    def string_substring(self, i: int, j: int) -> int:
        """LCS score of a against b[i:j]."""
        n = self.sw.n
        if not 0 <= i <= j <= n:
            raise ValueError(f"window ({i}, {j}) outside 0..{n}")
        return j - i - self._dist(i, j)

    def suffix_prefix(self, k: int, j: int) -> int:
        """LCS score of a[k:] against b[:j]."""
        m, n = self.sw.m, self.sw.n
        if not (0 <= k <= m and 0 <= j <= n):
            raise ValueError("indices out of range")
        return j - self._dist(-k, j)

    def prefix_suffix(self, l: int, j: int) -> int:
        """LCS score of a[:l] against b[j:]."""
        m, n = self.sw.m, self.sw.n
        if not (0 <= l <= m and 0 <= j <= n):
            raise ValueError("indices out of range")
        return n - j - self._dist(j, m + n - l)

    def substring_string(self, i: int, l: int) -> int:
        """LCS score of a[i:l] against the whole b."""
        m, n = self.sw.m, self.sw.n
        if not 0 <= i <= l <= m:
            raise ValueError(f"window ({i}, {l}) outside 0..{m}")
        return n - self._dist(-i, m + n - l)

    def score(self, kind: str, i: int, j: int) -> int:
        if kind == "string-substring":
            return self.string_substring(i, j)
        if kind == "prefix-suffix":
            return self.prefix_suffix(i, j)
        if kind == "suffix-prefix":
            return self.suffix_prefix(i, j)
        if kind == "substring-string":
            return self.substring_string(i, j)
        raise ValueError(f"unknown score kind {kind!r}")

    def lcs(self) -> int:
        """Global LCS score of a and b."""
        return self.string_substring(0, self.sw.n)

    def dominated_count(self, i: int, j: int) -> int:
        """Nonzeros strictly below-left of matrix point (i, j)."""
        return self._dist(i, j)

    def dominating_count(self, i: int, j: int) -> int:
        """Nonzeros strictly above-right of matrix point (i, j)."""
        return self.sw.m - (j - i - self._dist(i, j))

    def is_subsequence_of_window(self, i: int, j: int) -> bool:
        """True iff a is a subsequence of b[i:j]."""
        return self.dominating_count(i, j) == 0

    def traceback(self, i: int, j: int) -> list:
        """One LCS witness of a against b[i:j], by plain DP on the window."""
        return lcs_witness(self.a, self.b[i:j])


def lcs_witness(a: Sequence, b: Sequence) -> list:
    """A longest common subsequence of two symbol sequences."""
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        return []
    prev = [0] * (n + 1)
    table = [prev]
    for r in range(1, m + 1):
        cur = [0] * (n + 1)
        ar = a[r - 1]
        for c in range(1, n + 1):
            if chars_match(ar, b[c - 1]):
                cur[c] = prev[c - 1] + 1
            else:
                cur[c] = cur[c - 1] if cur[c - 1] >= prev[c] else prev[c]
        table.append(cur)
        prev = cur
    out = []
    r, c = m, n
    while r > 0 and c > 0:
        if chars_match(a[r - 1], b[c - 1]) and table[r][c] == table[r - 1][c - 1] + 1:
            out.append(b[c - 1] if a[r - 1] is WILDCARD else a[r - 1])
            r -= 1
            c -= 1
        elif table[r][c] == table[r][c - 1]:
            c -= 1
        else:
            r -= 1
    out.reverse()
    return out


def swap(sw: SeaweedMatrix) -> SeaweedMatrix:
    """Seaweed matrix of (b, a) from the one of (a, b)."""
    size = sw.m + sw.n
    row_to_col = [ABSENT] * size
    for r, c in enumerate(sw.perm.row_to_col):
        row_to_col[size - 1 - r] = size - 1 - c
    return SeaweedMatrix(sw.n, sw.m, PermutationMatrix(row_to_col, validate=False))


def reverse_both(sw: SeaweedMatrix) -> SeaweedMatrix:
    """Seaweed matrix of (reversed a, reversed b)."""
    size = sw.m + sw.n
    row_to_col = [ABSENT] * size
    for r, c in enumerate(sw.perm.row_to_col):
        row_to_col[size - 1 - c] = size - 1 - r
    return SeaweedMatrix(sw.m, sw.n, PermutationMatrix(row_to_col, validate=False))


def compose_horizontal(left: SeaweedMatrix, right: SeaweedMatrix) -> SeaweedMatrix:
    """Seaweed matrix of (a'a'', b) from those of (a', b) and (a'', b).

    One padded implicit min-plus product; when b is at least twice as long
    as a'', the right factor is decomposed into staggered square blocks so
    the product costs O(m + n log m'') instead of O((m+n) log (m+n)).
    """
    if left.n != right.n:
        raise ValueError("operands must share the same b")
    m1, m2, n = left.m, right.m, left.n
    size = m1 + m2 + n
    l_rows = list(range(m2)) + [c + m2 for c in left.perm.row_to_col]

    if m2 > 0 and n // m2 >= 2 and _is_rightward(right.perm, m2):
        product = _compose_staggered(l_rows, right.perm, m1, m2, n)
    else:
        r_rows = list(right.perm.row_to_col) + list(range(m2 + n, size))
        product = _matmul_full(l_rows, r_rows)
    return SeaweedMatrix(m1 + m2, n, PermutationMatrix(product, validate=False))


def _is_rightward(perm: PermutationMatrix, m: int) -> bool:
    # Seaweed matrices built from comparison dags satisfy c >= r - m.
    return all(c >= r - m for r, c in enumerate(perm.row_to_col))


def _compose_staggered(l_rows: list[int], p2: PermutationMatrix, m1: int, m2: int, n: int) -> list[int]:
    size = m1 + m2 + n
    row_to_col = list(l_rows)
    col_to_row = [0] * size
    for r, c in enumerate(row_to_col):
        col_to_row[c] = r

    boundaries = list(range(0, n, m2)) + [n]
    interface: list[int] = list(range(m2))  # strand ids entering on the left
    for k in range(len(boundaries) - 1):
        lo, hi = boundaries[k], boundaries[k + 1]
        last = hi >= n
        members = interface + list(range(m2 + lo, m2 + hi))
        w0, w1 = lo, m2 + hi
        width = w1 - w0
        # Local braid: send each member to its exit slot in this slab.
        q = [0] * width
        nxt = []
        pos_of = {s: pos for pos, s in enumerate(members)}
        for pos, s in enumerate(members):
            c = p2.row_to_col[s]
            if last or c < hi:
                q[pos] = c - w0
            else:
                nxt.append(s)
        nxt.sort(key=lambda s: p2.row_to_col[s])
        for rank, s in enumerate(nxt):
            q[pos_of[s]] = hi + rank - w0
        interface = nxt
        # Post-compose the window of the accumulated braid with q.
        window_rows = sorted(col_to_row[c] for c in range(w0, w1))
        sigma = [row_to_col[r] - w0 for r in window_rows]
        tau = _matmul_full(sigma, q)
        for t, r in enumerate(window_rows):
            c = w0 + tau[t]
            row_to_col[r] = c
            col_to_row[c] = r
    return row_to_col


@dataclass
class SemiLocalTriple:
    """String-substring, prefix-suffix and suffix-prefix seaweed matrices
    of a pair (a, b), in stored coordinates.

    ``df``: (row j, col c) over the n x n string-substring window;
    ``fd``: (row j, col offset q) for columns n..m+n of the full matrix;
    ``uf``: (row offset u, col c) for rows -m..0.
    """

    m: int
    n: int
    df: list[tuple[int, int]] = field(default_factory=list)
    fd: list[tuple[int, int]] = field(default_factory=list)
    uf: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_seaweed(cls, sw: SeaweedMatrix) -> "SemiLocalTriple":
        m, n = sw.m, sw.n
        triple = cls(m, n)
        for r, c in sw.perm.nonzeros():
            if r < m:
                if c < n:
                    triple.uf.append((r, c))
                # rows -m..0 with columns beyond n belong to the dropped
                # substring-string part
            else:
                if c < n:
                    triple.df.append((r - m, c))
                else:
                    triple.fd.append((r - m, c - n))
        triple.validate()
        return triple

    def validate(self) -> None:
        total = len(self.df) + len(self.fd) + len(self.uf)
        if not self.n <= total <= min(self.m + self.n, 2 * self.n):
            raise ValueError(f"triple nonzero count {total} out of bounds")

    def lcs(self) -> int:
        """Global LCS score of a and b."""
        return self.n - len(self.df)


@dataclass
class CrossMatrix:
    """Subpermutation matrix of seaweeds restricted to cross-substrings of
    a concatenation, plus the split geometry."""

    m_left: int
    m_right: int
    n: int
    pairs: list[tuple[int, int]]  # over (m_left + n) x (m_right + n)


def compose_three_way(
    t1: SemiLocalTriple, t2: SemiLocalTriple
) -> tuple[SemiLocalTriple, CrossMatrix]:
    """Three-way composition over a concatenation a = a'a'' with shared b.

    Returns the triple for (a, b) plus the seaweed cross-matrix of the
    split; one subpermutation min-plus product of middle dimension n.
    """
    if t1.n != t2.n:
        raise ValueError("operands must share the same b")
    m1, m2, n = t1.m, t2.m, t1.n
    left_pairs = [(u, c) for u, c in t1.uf] + [(m1 + j, c) for j, c in t1.df]
    right_pairs = [(j, c) for j, c in t2.df] + [(j, n + q) for j, q in t2.fd]
    cross_pairs = boxdot_subperm(m1 + n, n, n + m2, left_pairs, right_pairs)
    out = SemiLocalTriple(m1 + m2, n)
    for r, c in cross_pairs:
        if r >= m1:
            if c < n:
                out.df.append((r - m1, c))
            else:
                out.fd.append((r - m1, c - n))
        elif c < n:
            out.uf.append((r + m2, c))
    out.fd.extend((j, q + m2) for j, q in t1.fd)
    out.uf.extend(t2.uf)
    out.validate()
    return out, CrossMatrix(m1, m2, n, cross_pairs)
