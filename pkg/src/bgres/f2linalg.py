"""Dense exact linear algebra over the field with two elements.

Rows are bit-packed into Python integers (bit ``j`` holds column ``j``), so
row operations are single XORs of arbitrary width and every computation is
exact.  Matrices are immutable after construction and all operations are
pure functions, so values can be shared freely between threads and cached.

Pivoting is deterministic (first nonzero entry, scanning columns left to
right), which makes ranks, kernels and solutions reproducible bit for bit.
"""

from __future__ import annotations

from typing import Iterable, Optional


class F2Matrix:
    """An immutable matrix over GF(2) with bit-packed rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable[int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        mask = (1 << cols) - 1
        packed = tuple(r & mask for r in data)
        if len(packed) != rows:
            raise ValueError("row count does not match data length")
        self.data = packed

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, entries: Iterable[Iterable[int]], cols: Optional[int] = None) -> "F2Matrix":
        """Build a matrix from an iterable of 0/1 row iterables."""
        rows = []
        width = cols
        for row in entries:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            word = 0
            for j, v in enumerate(row):
                if v & 1:
                    word |= 1 << j
            rows.append(word)
        if width is None:
            width = 0
        return cls(len(rows), width, rows)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    # -- accessors ----------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, F2Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"F2Matrix({self.rows}x{self.cols})"
        body = "; ".join(
            "".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.data
        )
        return f"F2Matrix({self.rows}x{self.cols}: {body})"

    # -- algebra ------------------------------------------------------

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return F2Matrix(self.rows, self.cols, [a ^ b for a, b in zip(self.data, other.data)])

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = []
        for r in self.data:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.data[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return F2Matrix(self.rows, other.cols, out)

    def transpose(self) -> "F2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return F2Matrix(self.cols, self.rows, out)

    def stack(self, other: "F2Matrix") -> "F2Matrix":
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return F2Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    # -- elimination --------------------------------------------------

    def rref(self) -> tuple["F2Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and the tuple of pivot columns.

        Pivots are chosen deterministically: the first row with a nonzero
        entry in the leftmost unfinished column.
        """
        work = list(self.data)
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            bit = 1 << c
            sel = -1
            for i in range(r, self.rows):
                if work[i] & bit:
                    sel = i
                    break
            if sel < 0:
                continue
            work[r], work[sel] = work[sel], work[r]
            for i in range(self.rows):
                if i != r and (work[i] & bit):
                    work[i] ^= work[r]
            pivots.append(c)
            r += 1
        return F2Matrix(self.rows, self.cols, work), tuple(pivots)

    def rank(self) -> int:
        """GF(2) rank by Gaussian elimination."""
        pivots: dict[int, int] = {}  # lowest-set-bit position -> reduced row
        for row in self.data:
            while row:
                b = (row & -row).bit_length() - 1
                if b in pivots:
                    row ^= pivots[b]
                else:
                    pivots[b] = row
                    break
        return len(pivots)

    def kernel_basis(self) -> "F2Matrix":
        """Rows form a basis of the right kernel ``{v : M v = 0}``.

        The basis is returned in reduced echelon form with strictly
        increasing leading columns, so it is canonical for the matrix.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        rows = []
        for f in free:
            v = 1 << f
            fbit = 1 << f
            for r, c in enumerate(pivots):
                if red.data[r] & fbit:
                    v |= 1 << c
            rows.append(v)
        basis = F2Matrix(len(rows), self.cols, rows)
        reduced, _ = basis.rref()
        return reduced

    def solve(self, rhs: "F2Matrix") -> Optional["F2Matrix"]:
        """Solve ``self @ X = rhs``; absent if the system is inconsistent.

        Among all solutions, each column of ``X`` is the lexicographically
        smallest solution vector (coordinates read from index 0 upward), so
        results are stable across runs regardless of how the solution space
        is parameterized.
        """
        if rhs.rows != self.rows:
            raise ValueError("right-hand side has wrong number of rows")
        n, k = self.cols, rhs.cols
        # eliminate on [A | B] with pivots restricted to A's columns
        work = [self.data[i] | (rhs.data[i] << n) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(n):
            if r == len(work):
                break
            bit = 1 << c
            sel = -1
            for i in range(r, len(work)):
                if work[i] & bit:
                    sel = i
                    break
            if sel < 0:
                continue
            work[r], work[sel] = work[sel], work[r]
            for i in range(len(work)):
                if i != r and (work[i] & bit):
                    work[i] ^= work[r]
            pivots.append(c)
            r += 1
        amask = (1 << n) - 1
        for i in range(r, len(work)):
            if work[i] >> n:
                return None  # zero row of A with nonzero right-hand side
        kernel = self.kernel_basis()
        cols = []
        for j in range(k):
            x = 0
            for row_idx, c in enumerate(pivots):
                if (work[row_idx] >> (n + j)) & 1:
                    x |= 1 << c
            # reduce against the kernel so the solution is lex-minimal
            for krow in kernel.data:
                lead = krow & -krow
                if x & lead:
                    x ^= krow
            cols.append(x)
        data = [0] * n
        for j, x in enumerate(cols):
            for i in range(n):
                if (x >> i) & 1:
                    data[i] |= 1 << j
        return F2Matrix(n, k, data)
