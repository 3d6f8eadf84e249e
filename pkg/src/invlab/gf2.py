"""Linear algebra over the two-element field.

Matrices are bit-packed: row r is a Python int whose bit c is the entry
(r, c), so row operations are single XORs.  Everything here is a pure
function over immutable values.
"""

from __future__ import annotations

from typing import Iterable, Union


class MatGF2:
    """Rectangular bit matrix over GF(2)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[int]):
        rows = tuple(rows)
        if nrows < 0 or ncols < 0 or len(rows) != nrows:
            raise ValueError("dimension mismatch")
        mask = (1 << ncols) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row wider than ncols")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> "MatGF2":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = [sum((int(x) & 1) << c for c, x in enumerate(r)) for r in rows]
        return cls(len(rows), ncols, packed)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "MatGF2":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def identity(cls, n: int) -> "MatGF2":
        return cls(n, n, [1 << i for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "MatGF2":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return MatGF2(self.ncols, self.nrows, cols)

    def mul(self, other: "MatGF2") -> "MatGF2":
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                j = (rr & -rr).bit_length() - 1
                acc ^= other.rows[j]
                rr &= rr - 1
            out.append(acc)
        return MatGF2(self.nrows, other.ncols, out)

    def __eq__(self, other):
        return (
            isinstance(other, MatGF2)
            and (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"MatGF2({self.to_lists()!r})"


class SymMatGF2:
    """Symmetric bit matrix; the diagonal is unconstrained."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise ValueError("dimension mismatch")
        mask = (1 << n) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row wider than n")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SymMatGF2":
        rows = [list(r) for r in rows]
        packed = [sum((int(x) & 1) << c for c, x in enumerate(r)) for r in rows]
        return cls(len(rows), packed)

    @classmethod
    def zeros(cls, n: int) -> "SymMatGF2":
        return cls(n, [0] * n)

    @classmethod
    def identity(cls, n: int) -> "SymMatGF2":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def block_diag(cls, A: "SymMatGF2", B: "SymMatGF2") -> "SymMatGF2":
        n = A.n + B.n
        rows = list(A.rows) + [r << A.n for r in B.rows]
        return cls(n, rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def diagonal(self) -> tuple[int, ...]:
        return tuple((self.rows[i] >> i) & 1 for i in range(self.n))

    def principal(self, indices: Iterable[int]) -> "SymMatGF2":
        """Principal submatrix on the given (sorted ascending) indices."""
        idx = sorted(indices)
        rows = [
            sum(((self.rows[i] >> j) & 1) << c for c, j in enumerate(idx)) for i in idx
        ]
        return SymMatGF2(len(idx), rows)

    def to_mat(self) -> MatGF2:
        return MatGF2(self.n, self.n, self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, SymMatGF2) and (self.n, self.rows) == (other.n, other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"SymMatGF2({self.to_lists()!r})"


Matrix = Union[MatGF2, SymMatGF2]


def _rank_rows(rows: Iterable[int], ncols: int) -> int:
    work = list(rows)
    r = 0
    for c in range(ncols):
        bit = 1 << c
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def rank(M: Matrix) -> int:
    """Rank over GF(2) by Gaussian elimination."""
    if isinstance(M, SymMatGF2):
        return _rank_rows(M.rows, M.n)
    return _rank_rows(M.rows, M.ncols)


def gram(X: MatGF2) -> SymMatGF2:
    """X X^T: pairwise dot products of the rows of X, mod 2."""
    rows = []
    for i in range(X.nrows):
        ri = X.rows[i]
        acc = 0
        for j in range(X.nrows):
            acc |= ((ri & X.rows[j]).bit_count() & 1) << j
        rows.append(acc)
    return SymMatGF2(X.nrows, rows)


def kernel_basis(M: Matrix) -> list[int]:
    """Basis of {x : Mx = 0}, each vector packed as an int over the columns."""
    if isinstance(M, SymMatGF2):
        rows, ncols = list(M.rows), M.n
    else:
        rows, ncols = list(M.rows), M.ncols
    # reduced row echelon form, tracking pivot columns
    pivots = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = 1 << f
        for rr, c in zip(rows, pivots):
            if (rr >> f) & 1:
                vec |= 1 << c
        basis.append(vec)
    return basis


def factor_symmetric(A: SymMatGF2) -> MatGF2:
    """Factor a symmetric A as X X^T with X of rank k = rank(A) and minimal width.

    Symmetric elimination peels a rank-1 piece v v^T at each diagonal-1 pivot
    and a hyperbolic piece u w^T + w u^T at each zero-diagonal pivot, then a
    local rewrite merges each hyperbolic piece with a single column via
    (u, w, c) -> (u+c, u+w+c, w+c), which preserves the sum of outer products.
    Width is k, except k+1 when A is nonzero with an all-zero diagonal (then
    every factor row has even weight, so width k is impossible and k is even).
    """
    n = A.n
    work = list(A.rows)

    def column(j: int) -> int:
        return sum(((work[i] >> j) & 1) << i for i in range(n))

    singles: list[int] = []
    hblocks: list[tuple[int, int]] = []
    while any(work):
        i = next((i for i in range(n) if (work[i] >> i) & 1), None)
        if i is not None:
            v = column(i)
            for r in range(n):
                if (v >> r) & 1:
                    work[r] ^= v
            singles.append(v)
            continue
        i, j = next(
            (i, j) for i in range(n) for j in range(i + 1, n) if (work[i] >> j) & 1
        )
        u, w = column(i), column(j)
        for r in range(n):
            delta = 0
            if (u >> r) & 1:
                delta ^= w
            if (w >> r) & 1:
                delta ^= u
            work[r] ^= delta
        hblocks.append((u, w))

    if hblocks and not singles:
        # all-zero diagonal: spend one extra column to open the first block
        u, w = hblocks.pop(0)
        singles = [u ^ w, u, w]
    while hblocks:
        c = singles.pop()
        u, w = hblocks.pop(0)
        singles.extend([u ^ c, u ^ w ^ c, w ^ c])

    width = len(singles)
    xrows = [
        sum(((singles[c] >> v) & 1) << c for c in range(width)) for v in range(n)
    ]
    return MatGF2(n, width, xrows)


def full_rank_principal(A: SymMatGF2, target: int | str = "max") -> tuple[int, ...]:
    """Indices of a principal submatrix of rank `target` (or rank(A) for "max").

    For the full-rank case the construction extends a kernel basis of A by
    standard basis vectors, lexicographically smallest first; the chosen
    standard vectors name the indices.  Smaller targets fall back to a
    lexicographic depth-first search, since parity can make them infeasible
    (every principal submatrix of an all-zero-diagonal matrix has even rank).
    """
    k = rank(A)
    if target == "max":
        target = k
    if not isinstance(target, int) or target < 0:
        raise ValueError(f"target must be 'max' or a nonnegative integer, got {target!r}")
    if target > k:
        raise ValueError(f"infeasible: target rank {target} exceeds rank(A) = {k}")
    if target == k:
        return _principal_by_kernel_extension(A, k)
    return _principal_by_search(A, target)


def _principal_by_kernel_extension(A: SymMatGF2, k: int) -> tuple[int, ...]:
    echelon: list[int] = []
    for v in kernel_basis(A):
        _echelon_insert(echelon, v)
    chosen = []
    for i in range(A.n):
        if len(chosen) == k:
            break
        if _echelon_insert(echelon, 1 << i):
            chosen.append(i)
    return tuple(chosen)


def _echelon_insert(echelon: list[int], vec: int) -> bool:
    """Insert vec into an echelon basis in place; False if already dependent."""
    v = vec
    for e in echelon:
        if v & (1 << (e.bit_length() - 1)):
            v ^= e
    if v == 0:
        return False
    echelon.append(v)
    echelon.sort(key=int.bit_length, reverse=True)
    return True


def _principal_by_search(A: SymMatGF2, target: int) -> tuple[int, ...]:
    n = A.n

    def extend(prefix: list[int], start: int) -> tuple[int, ...] | None:
        size = len(prefix)
        if size == target:
            if rank(A.principal(prefix)) == target:
                return tuple(prefix)
            return None
        cur = rank(A.principal(prefix)) if prefix else 0
        if cur + 2 * (target - size) < target:
            return None  # each added index raises the rank by at most 2
        for i in range(start, n - (target - size) + 1):
            found = extend(prefix + [i], i + 1)
            if found is not None:
                return found
        return None

    found = extend([], 0)
    if found is None:
        raise ValueError(f"infeasible: no principal submatrix of rank {target}")
    return found


def inverse_full_rank(A: SymMatGF2) -> SymMatGF2:
    """Inverse of a full-rank symmetric matrix (Gauss-Jordan; symmetric again)."""
    n = A.n
    work = [A.rows[i] | (1 << (n + i)) for i in range(n)]
    for c in range(n):
        bit = 1 << c
        piv = next((i for i in range(c, n) if work[i] & bit), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        for i in range(n):
            if i != c and work[i] & bit:
                work[i] ^= work[c]
    return SymMatGF2(n, [r >> n for r in work])


def schur_update(A_prime: SymMatGF2, C: MatGF2, B: SymMatGF2) -> SymMatGF2:
    """Block elimination update B' = B + C^T A'^{-1} C.

    A' must be full rank r x r and C must be r x m with B m x m; then the
    full block matrix [[A', C], [C^T, B]] and the block diagonal
    [[A', 0], [0, B']] are congruent, so rank(B') = rank(full) - r.
    """
    if C.nrows != A_prime.n:
        raise ValueError(f"C has {C.nrows} rows but A' is {A_prime.n}x{A_prime.n}")
    if C.ncols != B.n:
        raise ValueError(f"C has {C.ncols} columns but B is {B.n}x{B.n}")
    inv = inverse_full_rank(A_prime)
    update = C.transpose().mul(inv.to_mat()).mul(C)
    rows = [b ^ u for b, u in zip(B.rows, update.rows)]
    return SymMatGF2(B.n, rows)


def block_matrix(A: SymMatGF2, C: MatGF2, B: SymMatGF2) -> SymMatGF2:
    """Assemble [[A, C], [C^T, B]]."""
    if C.nrows != A.n or C.ncols != B.n:
        raise ValueError("block shapes do not fit")
    r = A.n
    rows = [A.rows[i] | (C.rows[i] << r) for i in range(r)]
    Ct = C.transpose()
    rows += [Ct.rows[i] | (B.rows[i] << r) for i in range(B.n)]
    return SymMatGF2(r + B.n, rows)
