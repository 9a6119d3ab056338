"""Min-plus (distance) matrix algebra.

Row minima of implicit totally monotone matrices (SMAWK), Monge and
implicit unit-Monge matrix-vector products, the subquadratic implicit
product of (sub)permutation-represented unit-Monge matrices, and Bruhat
comparability built on top of it.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .matrices import (
    ABSENT,
    ExplicitMatrix,
    PermutationMatrix,
    add_ext,
    distribution_matrix,
    rotate,
)


class MatrixOracle:
    """Implicit matrix: a query function over dense integer index ranges."""

    __slots__ = ("num_rows", "num_cols", "query")

    def __init__(self, num_rows: int, num_cols: int, query: Callable[[int, int], object]):
        self.num_rows = num_rows
        self.num_cols = num_cols
        self.query = query


def smawk_row_minima(oracle: MatrixOracle) -> list[tuple[int, object]]:
    """Leftmost minimum of every row of a totally monotone implicit matrix.

    Total monotonicity is the caller's obligation.  Returns, per row, the
    pair (column, value) with leftmost tie-breaking; O(num_rows + num_cols)
    queries overall.
    """
    if oracle.num_rows == 0 or oracle.num_cols == 0:
        raise ValueError("empty matrix")
    query = oracle.query
    result: list[tuple[int, object]] = [None] * oracle.num_rows  # type: ignore

    def scan(r: int, cols: Sequence[int], lo: int, hi: int) -> None:
        best_c = cols[lo]
        best_v = query(r, best_c)
        for pos in range(lo + 1, hi + 1):
            v = query(r, cols[pos])
            if v < best_v:
                best_v = v
                best_c = cols[pos]
        result[r] = (best_c, best_v)

    def solve(rows: Sequence[int], cols: Sequence[int]) -> None:
        if len(rows) == 1:
            scan(rows[0], cols, 0, len(cols) - 1)
            return
        retained = rows[1::2]
        surviving = _eliminate(retained, cols, query)
        solve(retained, surviving)
        # Fill in the skipped rows, bracketing each scan by the argmin
        # columns of the neighbouring retained rows.
        pos = {c: k for k, c in enumerate(cols)}
        for k in range(0, len(rows), 2):
            lo = pos[result[rows[k - 1]][0]] if k > 0 else 0
            hi = pos[result[rows[k + 1]][0]] if k + 1 < len(rows) else len(cols) - 1
            scan(rows[k], cols, lo, hi)

    solve(list(range(oracle.num_rows)), list(range(oracle.num_cols)))
    return result


def _eliminate(rows: Sequence[int], cols: Sequence[int], query) -> list[int]:
    """Column elimination: keep a staircase of candidate columns.

    Discards columns that provably contain no leftmost row minimum of the
    (rows x cols) submatrix; at most len(rows) columns survive.
    """
    if len(cols) <= len(rows):
        return list(cols)
    stack: list[int] = []
    for c in cols:
        while stack:
            tip_row = rows[len(stack) - 1]
            if query(tip_row, stack[-1]) > query(tip_row, c):
                stack.pop()
            else:
                break
        if len(stack) < len(rows):
            stack.append(c)
    return stack


def monge_matvec(oracle: MatrixOracle, b: Sequence) -> list:
    """Min-plus product of an implicit Monge matrix with a vector."""
    if len(b) != oracle.num_cols:
        raise ValueError("dimension mismatch")
    query = oracle.query
    shifted = MatrixOracle(
        oracle.num_rows, oracle.num_cols, lambda i, j: add_ext(query(i, j), b[j])
    )
    return [v for _, v in smawk_row_minima(shifted)]


class _DistributionWalker:
    """Incremental evaluator of distribution values of one matrix.

    Answers value(i, j) by stepping from the nearest previously evaluated
    cell (per-column memo, falling back to the last query), so successive
    nearby queries cost O(1) amortized.
    """

    __slots__ = ("p", "memo", "last")

    def __init__(self, p: PermutationMatrix):
        self.p = p
        self.memo: dict[int, tuple[int, int]] = {}
        self.last = (0, 0, 0)  # (i, j, value); distribution(_, 0) = 0

    def value(self, i: int, j: int) -> int:
        ent = self.memo.get(j)
        if ent is None:
            li, lj, lv = self.last
            lv = self._walk_vertical(lv, li, i, lj)
            lv = self._walk_horizontal(lv, lj, j, i)
        else:
            li, lv = ent
            lv = self._walk_vertical(lv, li, i, j)
        self.memo[j] = (i, lv)
        self.last = (i, j, lv)
        return lv

    def _walk_vertical(self, value: int, i_from: int, i_to: int, j: int) -> int:
        row_to_col = self.p.row_to_col
        if i_from < i_to:
            for r in range(i_from, i_to):
                c = row_to_col[r]
                if c != ABSENT and c < j:
                    value -= 1
        else:
            for r in range(i_to, i_from):
                c = row_to_col[r]
                if c != ABSENT and c < j:
                    value += 1
        return value

    def _walk_horizontal(self, value: int, j_from: int, j_to: int, i: int) -> int:
        col_to_row = self.p.col_to_row
        if j_from < j_to:
            for c in range(j_from, j_to):
                r = col_to_row[c]
                if r != ABSENT and r >= i:
                    value += 1
        else:
            for c in range(j_to, j_from):
                r = col_to_row[c]
                if r != ABSENT and r >= i:
                    value -= 1
        return value


def implicit_matvec(p: PermutationMatrix, b: Sequence) -> list:
    """Min-plus product of the distribution matrix of ``p`` with ``b``.

    Row minima are found by the same elimination scheme as
    ``smawk_row_minima`` but with incremental distribution queries, so the
    whole product takes near-linear time.
    """
    n = p.n
    if len(b) != n + 1:
        raise ValueError("dimension mismatch")
    walker = _DistributionWalker(p)
    oracle = MatrixOracle(n + 1, n + 1, lambda i, j: walker.value(i, j) + b[j])
    return [v for _, v in smawk_row_minima(oracle)]


def naive_distance_product(a: ExplicitMatrix, b: ExplicitMatrix) -> ExplicitMatrix:
    """Dense min-plus product; the testing oracle for all implicit paths."""
    if a.num_cols != b.num_rows:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(a.num_rows):
        arow = a.data[i]
        row = []
        for k in range(b.num_cols):
            best = add_ext(arow[0], b.data[0][k]) if a.num_cols else None
            for j in range(1, a.num_cols):
                v = add_ext(arow[j], b.data[j][k])
                if v < best:
                    best = v
            row.append(best)
        out.append(row)
    return ExplicitMatrix(out)


def implicit_matmul(pa: PermutationMatrix, pb: PermutationMatrix) -> PermutationMatrix:
    """Permutation matrix whose distribution is the min-plus product of the
    inputs' distribution matrices; O(n log n).

    Subpermutation inputs are handled by zero-line deletion, extension to a
    full permutation, and window extraction.
    """
    if pa.n != pb.n:
        raise ValueError("size mismatch")
    n = pa.n
    if pa.is_full() and pb.is_full():
        return PermutationMatrix(_matmul_full(pa.row_to_col, pb.row_to_col))
    pairs = boxdot_subperm(n, n, n, pa.nonzeros(), pb.nonzeros())
    return PermutationMatrix.from_pairs(n, pairs)


def boxdot_subperm(
    ni: int,
    nj: int,
    nk: int,
    a_pairs: Sequence[tuple[int, int]],
    b_pairs: Sequence[tuple[int, int]],
) -> list[tuple[int, int]]:
    """Rectangular subpermutation product over (ni x nj) . (nj x nk).

    Zero rows of the left factor and zero columns of the right factor are
    deleted, both factors are extended to full permutations of the middle
    dimension, and the product window is extracted.
    """
    acol = {}
    for r, c in a_pairs:
        if not (0 <= r < ni and 0 <= c < nj):
            raise ValueError("left factor nonzero out of range")
        acol[r] = c
    brow = {}
    for r, c in b_pairs:
        if not (0 <= r < nj and 0 <= c < nk):
            raise ValueError("right factor nonzero out of range")
        brow[r] = c
    rows_a = sorted(acol)
    cols_b = sorted(brow.values())
    n_left, n_right = len(rows_a), len(cols_b)
    if n_left == 0 or n_right == 0 or nj == 0:
        return []
    used_cols_a = set(acol.values())
    if len(used_cols_a) != len(acol):
        raise ValueError("left factor is not a subpermutation")
    zero_cols_a = [c for c in range(nj) if c not in used_cols_a]
    ra = zero_cols_a + [acol[r] for r in rows_a]
    col_rank = {c: k for k, c in enumerate(cols_b)}
    if len(col_rank) != len(brow):
        raise ValueError("right factor is not a subpermutation")
    zero_rows_b = [r for r in range(nj) if r not in brow]
    zr_rank = {r: k for k, r in enumerate(zero_rows_b)}
    rb = [
        col_rank[brow[r]] if r in brow else n_right + zr_rank[r] for r in range(nj)
    ]
    rc = _matmul_full(ra, rb)
    off = nj - n_left
    out = []
    for k in range(off, nj):
        c = rc[k]
        if c < n_right:
            out.append((rows_a[k - off], cols_b[c]))
    return out


def _matmul_full(ra: Sequence[int], rb: Sequence[int]) -> list[int]:
    """Product of two full permutations given as row->col lists."""
    n = len(ra)
    if n == 0:
        return []
    if n == 1:
        return [0]
    if n == 2:
        # Size-2 monoid: the crossing absorbs everything but identity pairs.
        if ra[0] == 0 and rb[0] == 0:
            return [0, 1]
        return [1, 0]
    h = (n + 1) // 2
    rows_a_lo = []
    rows_a_hi = []
    for r in range(n):
        if ra[r] < h:
            rows_a_lo.append(r)
        else:
            rows_a_hi.append(r)
    a_lo = [ra[r] for r in rows_a_lo]
    a_hi = [ra[r] - h for r in rows_a_hi]
    cols_b_lo = sorted(rb[r] for r in range(h))
    cols_b_hi = sorted(rb[r] for r in range(h, n))
    rank_lo = {c: k for k, c in enumerate(cols_b_lo)}
    rank_hi = {c: k for k, c in enumerate(cols_b_hi)}
    b_lo = [rank_lo[rb[r]] for r in range(h)]
    b_hi = [rank_hi[rb[r]] for r in range(h, n)]
    c_lo = _matmul_full(a_lo, b_lo)
    c_hi = _matmul_full(a_hi, b_hi)
    lo_row = [-1] * n
    lo_col = [-1] * n
    for k, r in enumerate(rows_a_lo):
        c = cols_b_lo[c_lo[k]]
        lo_row[r] = c
        lo_col[c] = r
    hi_row = [-1] * n
    hi_col = [-1] * n
    for k, r in enumerate(rows_a_hi):
        c = cols_b_hi[c_hi[k]]
        hi_row[r] = c
        hi_col[c] = r
    return _combine(lo_row, lo_col, hi_row, hi_col, n)


def _combine(lo_row, lo_col, hi_row, hi_col, n: int) -> list[int]:
    """Merge the two half-products along the zero-level path of their
    dominance-difference function."""

    def kstep(i: int, k: int) -> int:
        # delta(i, k+1) - delta(i, k); zero beyond the grid boundary
        if k < 0 or k >= n:
            return 0
        r = hi_col[k]
        if r != -1:
            return 1 if r < i else 0
        return 1 if lo_col[k] >= i else 0

    def istep(i: int, k: int) -> int:
        # delta(i+1, k) - delta(i, k); zero beyond the grid boundary
        if i < 0 or i >= n:
            return 0
        c = hi_row[i]
        if c != -1:
            return 1 if c < k else 0
        return 1 if lo_row[i] >= k else 0

    size = 2 * n - 1
    r_arr = [0] * size
    wm_arr = [0] * size
    wp_arr = [0] * size
    r_cur = n
    wm = -1 if lo_row[n - 1] != -1 else 0  # delta(n-1, 0)
    wp = 1 if hi_col[0] != -1 else 0  # delta(n, 1)
    for d in range(-n + 1, n):
        idx = d + n - 1
        r_arr[idx] = r_cur
        wm_arr[idx] = wm
        wp_arr[idx] = wp
        if d == n - 1:
            break
        i_m = (r_cur - d - 1) // 2
        k_m = (r_cur + d - 1) // 2
        wstar = wm + kstep(i_m, k_m)
        if wstar <= 0:
            wp = wp + kstep((r_cur - d + 1) // 2, (r_cur + d + 1) // 2)
            wm = wstar
            r_cur += 1
        else:
            wm = wm - istep(i_m - 1, k_m)
            wp = wstar
            r_cur -= 1

    out = [-1] * n
    for rr in range(n):
        c = lo_row[rr]
        if c != -1:
            idx = c - rr + n - 1
            s = rr + c + 1
            if s < r_arr[idx] or (s == r_arr[idx] and wp_arr[idx] == 0):
                out[rr] = c
        else:
            c = hi_row[rr]
            idx = c - rr + n - 1
            s = rr + c + 1
            if s > r_arr[idx] or (s == r_arr[idx] and wm_arr[idx] == 0):
                out[rr] = c
    for idx in range(size):
        if wm_arr[idx] == -1 and wp_arr[idx] == 1:
            d = idx - n + 1
            rr = (r_arr[idx] - d - 1) // 2
            out[rr] = (r_arr[idx] + d - 1) // 2
    return out


def bruhat_leq(pa: PermutationMatrix, pb: PermutationMatrix) -> bool:
    """Bruhat comparability via one implicit min-plus product."""
    _check_bruhat_args(pa, pb)
    product = implicit_matmul(rotate(pa), pb)
    return product == PermutationMatrix.reverse_identity(pa.n)


def bruhat_leq_naive(pa: PermutationMatrix, pb: PermutationMatrix) -> bool:
    """Bruhat comparability by elementwise distribution-matrix comparison."""
    _check_bruhat_args(pa, pb)
    da = distribution_matrix(pa)
    db = distribution_matrix(pb)
    return all(
        da.data[i][j] <= db.data[i][j]
        for i in range(pa.n + 1)
        for j in range(pa.n + 1)
    )


def _check_bruhat_args(pa: PermutationMatrix, pb: PermutationMatrix) -> None:
    if pa.n != pb.n:
        raise ValueError("size mismatch")
    pa.require_full()
    pb.require_full()
