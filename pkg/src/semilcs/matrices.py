"""Permutation / subpermutation matrices and dense extended-integer matrices.

Index convention used throughout the package: a matrix of size n has rows
and columns at odd half-integer positions.  A half-integer position
``lo + k + 1/2`` is stored as the plain integer ``k`` (0-based from the low
end of the range), so all public APIs deal in integers.  Distribution
values are indexed by the n+1 integer grid points 0..n.
"""

from __future__ import annotations

from typing import Iterable, Sequence

ABSENT = -1

INF = float("inf")
NEG_INF = float("-inf")


def add_ext(x, y):
    """Saturating addition over integers extended with +/-inf."""
    if x == INF or y == INF:
        return INF
    if x == NEG_INF or y == NEG_INF:
        return NEG_INF
    return x + y


class PermutationMatrix:
    """A (sub)permutation matrix stored as mutually inverse index maps.

    ``row_to_col[r]`` is the column of the nonzero in row ``r`` (or ABSENT),
    and ``col_to_row`` is its inverse.  Instances are immutable after
    construction and safe to share between threads.
    """

    __slots__ = ("n", "row_to_col", "col_to_row")

    def __init__(self, row_to_col: Sequence[int], validate: bool = True):
        n = len(row_to_col)
        self.n = n
        self.row_to_col = list(row_to_col)
        col_to_row = [ABSENT] * n
        for r, c in enumerate(self.row_to_col):
            if c == ABSENT:
                continue
            if validate:
                if not 0 <= c < n:
                    raise ValueError(f"column index {c} out of range for size {n}")
                if col_to_row[c] != ABSENT:
                    raise ValueError(f"duplicate column {c}")
            col_to_row[c] = r
        self.col_to_row = col_to_row

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PermutationMatrix":
        row_to_col = [ABSENT] * n
        for r, c in pairs:
            if not 0 <= r < n:
                raise ValueError(f"row index {r} out of range for size {n}")
            if row_to_col[r] != ABSENT:
                raise ValueError(f"duplicate row {r}")
            row_to_col[r] = c
        return cls(row_to_col)

    @classmethod
    def identity(cls, n: int) -> "PermutationMatrix":
        return cls(list(range(n)), validate=False)

    @classmethod
    def reverse_identity(cls, n: int) -> "PermutationMatrix":
        return cls(list(range(n - 1, -1, -1)), validate=False)

    def nonzeros(self) -> list[tuple[int, int]]:
        return [(r, c) for r, c in enumerate(self.row_to_col) if c != ABSENT]

    @property
    def num_nonzeros(self) -> int:
        return sum(1 for c in self.row_to_col if c != ABSENT)

    def is_full(self) -> bool:
        return all(c != ABSENT for c in self.row_to_col)

    def require_full(self) -> None:
        if not self.is_full():
            raise ValueError("operation requires a full permutation matrix")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermutationMatrix)
            and self.n == other.n
            and self.row_to_col == other.row_to_col
        )

    def __hash__(self):
        return hash((self.n, tuple(self.row_to_col)))

    def __repr__(self) -> str:
        return f"PermutationMatrix({self.row_to_col!r})"

    def debug_str(self) -> str:
        """Textual serialization: one "row<TAB>col" line per nonzero, by row."""
        return "\n".join(f"{r}\t{c}" for r, c in self.nonzeros())


class ExplicitMatrix:
    """Dense matrix over integer index ranges, entries int or +/-inf.

    Used by testing oracles and by dense reference paths; rows/cols are
    addressed by offsets into the declared ranges.
    """

    __slots__ = ("num_rows", "num_cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [list(row) for row in data]
        self.num_rows = len(self.data)
        self.num_cols = len(self.data[0]) if self.data else 0
        if any(len(row) != self.num_cols for row in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def filled(cls, num_rows: int, num_cols: int, value) -> "ExplicitMatrix":
        return cls([[value] * num_cols for _ in range(num_rows)])

    @classmethod
    def minplus_identity(cls, n: int) -> "ExplicitMatrix":
        m = cls.filled(n, n, INF)
        for i in range(n):
            m.data[i][i] = 0
        return m

    @classmethod
    def minplus_annihilator(cls, n: int) -> "ExplicitMatrix":
        return cls.filled(n, n, INF)

    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self.data[r][c]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExplicitMatrix) and self.data == other.data

    def __repr__(self) -> str:
        return f"ExplicitMatrix({self.data!r})"


def distribution_value(p: PermutationMatrix, i: int, j: int) -> int:
    """Count nonzeros of ``p`` with stored row >= i and stored column < j.

    This is the entry (i, j) of the distribution matrix of ``p``; queries
    live on the (n+1) x (n+1) integer grid.
    """
    n = p.n
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"query ({i}, {j}) outside [0, {n}]")
    count = 0
    for r in range(i, n):
        c = p.row_to_col[r]
        if c != ABSENT and c < j:
            count += 1
    return count


def distribution_matrix(p: PermutationMatrix) -> ExplicitMatrix:
    """Dense distribution matrix of ``p`` on the full integer grid."""
    n = p.n
    rows = []
    for i in range(n + 1):
        row = [0] * (n + 1)
        for j in range(1, n + 1):
            r = p.col_to_row[j - 1]
            row[j] = row[j - 1] + (1 if r != ABSENT and r >= i else 0)
        rows.append(row)
    return ExplicitMatrix(rows)


def density_value(a: ExplicitMatrix, i: int, j: int) -> int:
    """Second-order difference of ``a`` at interior cell (i, j)."""
    if not (0 <= i < a.num_rows - 1 and 0 <= j < a.num_cols - 1):
        raise ValueError(f"cell ({i}, {j}) not interior")
    d = a.data
    return d[i + 1][j] - d[i][j] - d[i + 1][j + 1] + d[i][j + 1]


def density_matrix(a: ExplicitMatrix) -> ExplicitMatrix:
    rows = []
    for i in range(a.num_rows - 1):
        rows.append([density_value(a, i, j) for j in range(a.num_cols - 1)])
    return ExplicitMatrix(rows)


def is_monge(a: ExplicitMatrix) -> bool:
    """True iff every density value of ``a`` is nonnegative."""
    for i in range(a.num_rows - 1):
        for j in range(a.num_cols - 1):
            if density_value(a, i, j) < 0:
                return False
    return True


def is_simple_unit_monge(a: ExplicitMatrix) -> bool:
    """True iff ``a`` is the distribution matrix of some permutation matrix.

    Characterization: Monge, zero leftmost column and bottom row, and the
    density matrix is a permutation matrix.
    """
    if a.num_rows != a.num_cols or a.num_rows == 0:
        return False
    n = a.num_rows - 1
    if any(a.data[i][0] != 0 for i in range(n + 1)):
        return False
    if any(a.data[n][j] != 0 for j in range(n + 1)):
        return False
    if not is_monge(a):
        return False
    try:
        p = dense_to_permutation(density_matrix(a))
    except ValueError:
        return False
    return p.is_full()


def dense_to_permutation(dens: ExplicitMatrix) -> PermutationMatrix:
    """Interpret a 0/1 dense matrix as a (sub)permutation matrix."""
    if dens.num_rows != dens.num_cols:
        raise ValueError("not square")
    pairs = []
    for r, row in enumerate(dens.data):
        for c, v in enumerate(row):
            if v == 1:
                pairs.append((r, c))
            elif v != 0:
                raise ValueError(f"entry {v} is not 0/1")
    return PermutationMatrix.from_pairs(dens.num_rows, pairs)


def permutation_from_distribution(a: ExplicitMatrix) -> PermutationMatrix:
    """Recover the permutation matrix whose distribution matrix is ``a``."""
    return dense_to_permutation(density_matrix(a))


def rotate(p: PermutationMatrix) -> PermutationMatrix:
    """Counterclockwise 90-degree rotation: (r, c) -> (c, n-1-r)."""
    n = p.n
    row_to_col = [ABSENT] * n
    for r, c in enumerate(p.row_to_col):
        if c != ABSENT:
            row_to_col[c] = n - 1 - r
    return PermutationMatrix(row_to_col, validate=False)


def transpose(p: PermutationMatrix) -> PermutationMatrix:
    n = p.n
    row_to_col = [ABSENT] * n
    for r, c in enumerate(p.row_to_col):
        if c != ABSENT:
            row_to_col[c] = r
    return PermutationMatrix(row_to_col, validate=False)


def induced(p: PermutationMatrix, subset: Iterable[int], axis: str = "row") -> PermutationMatrix:
    """Submatrix induced by keeping ``subset`` rows (or columns).

    Complementary lines are deleted, then lines left with no nonzero are
    also deleted; surviving indices are renumbered by rank.
    """
    if axis not in ("row", "col"):
        raise ValueError("axis must be 'row' or 'col'")
    keep = sorted(set(subset))
    if keep and not (0 <= keep[0] and keep[-1] < p.n):
        raise ValueError("subset outside index range")
    if axis == "row":
        pairs = [(r, p.row_to_col[r]) for r in keep if p.row_to_col[r] != ABSENT]
        cols = sorted(c for _, c in pairs)
        col_rank = {c: k for k, c in enumerate(cols)}
        row_rank = {r: k for k, r in enumerate(r for r, _ in pairs)}
        size = len(pairs)
        return PermutationMatrix.from_pairs(
            size, [(row_rank[r], col_rank[c]) for r, c in pairs]
        )
    pairs = [(p.col_to_row[c], c) for c in keep if p.col_to_row[c] != ABSENT]
    rows = sorted(r for r, _ in pairs)
    row_rank = {r: k for k, r in enumerate(rows)}
    col_rank = {c: k for k, c in enumerate(sorted(c for _, c in pairs))}
    size = len(pairs)
    return PermutationMatrix.from_pairs(
        size, [(row_rank[r], col_rank[c]) for r, c in pairs]
    )


def elementary(n: int, t: int) -> PermutationMatrix:
    """Identity of size ``n`` with stored positions t-1 and t swapped."""
    if not 1 <= t <= n - 1:
        raise ValueError(f"t={t} outside [1, {n - 1}]")
    row_to_col = list(range(n))
    row_to_col[t - 1], row_to_col[t] = row_to_col[t], row_to_col[t - 1]
    return PermutationMatrix(row_to_col, validate=False)
