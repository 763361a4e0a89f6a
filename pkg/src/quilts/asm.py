"""Alternating sign matrices, their corner sum matrices, and monotone triangles.

An ASM is stored in printed order (row 1 on top).  Its corner sum matrix
accumulates entries weakly to the left and weakly below, so CSM row index i
counts rows from the bottom: csm.values[i][j] sums ASM rows k-i+1..k over
columns 1..j.  A CSM is the chain-by-chain special case of a quilt; a
monotone triangle records each CSM row's jump positions, and adjacent rows
interlace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PosetError, QuiltValidationError, Violation


def _first_nonzero(seq) -> int | None:
    for x in seq:
        if x:
            return x
    return None


def _alternates(seq) -> bool:
    prev = 0
    for x in seq:
        if x:
            if x == prev:
                return False
            prev = x
    return True


@dataclass(frozen=True)
class AsmMatrix:
    """A k-by-n matrix over {-1,0,1} whose nonzero entries alternate.

    Along every row and every column nonzero entries alternate in sign and
    the leftmost (per row) and bottommost (per column) nonzero entry is 1;
    when k <= n every row also ends in 1 (so rows are nonempty and sum to 1),
    and when k >= n every column starts with 1 from the top.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.rows)
        if k == 0 or len({len(r) for r in self.rows}) != 1:
            raise PosetError("matrix must be nonempty and rectangular")
        n = len(self.rows[0])
        for r in self.rows:
            for x in r:
                if x not in (-1, 0, 1):
                    raise PosetError("entries must be -1, 0 or 1")
        for r in self.rows:
            if not _alternates(r):
                raise PosetError("row signs must alternate")
            if _first_nonzero(r) == -1:
                raise PosetError("leftmost nonzero in a row must be 1")
            if k <= n:
                if _first_nonzero(reversed(r)) != 1:
                    raise PosetError("every row must end with 1 when k <= n")
        for j in range(n):
            col = [self.rows[i][j] for i in range(k)]
            if not _alternates(col):
                raise PosetError("column signs must alternate")
            if _first_nonzero(reversed(col)) == -1:
                raise PosetError("bottommost nonzero in a column must be 1")
            if k >= n and _first_nonzero(col) != 1:
                raise PosetError("every column must start with 1 when k >= n")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])


@dataclass(frozen=True)
class CsmMatrix:
    """Corner sums of an ASM: a (k+1)-by-(n+1) table with zero borders,
    min(k,n) in the far corner, and steps of 0 or 1 rightwards and upwards."""

    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.values) - 1
        if k < 0 or len({len(r) for r in self.values}) != 1:
            raise PosetError("corner sum table must be nonempty and rectangular")
        n = len(self.values[0]) - 1
        v = self.values
        for j in range(n + 1):
            if v[0][j] != 0:
                raise QuiltValidationError(Violation("zero_border", (0, j)))
        for i in range(k + 1):
            if v[i][0] != 0:
                raise QuiltValidationError(Violation("zero_border", (i, 0)))
        if v[k][n] != min(k, n):
            raise QuiltValidationError(Violation("corner", (k, n)))
        for i in range(k + 1):
            for j in range(n + 1):
                if i and v[i][j] - v[i - 1][j] not in (0, 1):
                    raise QuiltValidationError(
                        Violation("growth", (i, j), ((i - 1, j), (i, j)))
                    )
                if j and v[i][j] - v[i][j - 1] not in (0, 1):
                    raise QuiltValidationError(
                        Violation("growth", (i, j), ((i, j - 1), (i, j)))
                    )

    @property
    def shape(self) -> tuple[int, int]:
        """(k, n): the shape of the underlying ASM."""
        return len(self.values) - 1, len(self.values[0]) - 1

    def printed(self) -> list[list[int]]:
        """Rows flipped top-first, matching how corner sum tables are displayed."""
        return [list(r) for r in reversed(self.values)]


@dataclass(frozen=True)
class MonotoneTriangle:
    """Jump rows of a CSM: jump_rows[i-1] is the set of columns where row i jumps.

    Consecutive rows interlace: with S the shorter-or-equal earlier row and T
    the next one, sorted as s_1<s_2<... and t_1<t_2<..., either |T|=|S|+1 and
    t_1<=s_1<=t_2<=...<=t_{|T|}, or |T|=|S| and t_1<=s_1<=...<=t_q<=s_q.
    """

    jump_rows: tuple[tuple[int, ...], ...]
    columns: int

    def __post_init__(self):
        prev: tuple[int, ...] = ()
        for row in self.jump_rows:
            if list(row) != sorted(set(row)) or (row and (row[0] < 1 or row[-1] > self.columns)):
                raise PosetError("jump rows must be increasing subsets of 1..n")
            if not _interlace(tuple(row), prev):
                raise PosetError(f"rows {prev} and {row} do not interlace")
            prev = tuple(row)

    def rendered(self) -> str:
        """Top row first, like the triangle displays."""
        out = []
        for row in reversed(self.jump_rows):
            out.append(format_jump_set(row, self.columns))
        return "\n".join(out)


def _interlace(next_row: tuple[int, ...], prev_row: tuple[int, ...]) -> bool:
    """True when prev_row = s_1<...<s_p and next_row = t_1<...<t_q interlace."""
    s, t = prev_row, next_row
    if len(t) == len(s) + 1:
        for i in range(len(s)):
            if not (t[i] <= s[i] <= t[i + 1]):
                return False
        return True
    if len(t) == len(s):
        for i in range(len(s)):
            if not t[i] <= s[i]:
                return False
            if i + 1 < len(t) and not s[i] <= t[i + 1]:
                return False
        return True
    return False


def format_jump_set(row, columns: int) -> str:
    """Brace-free digit string when all entries are below 10, braces otherwise."""
    row = sorted(row)
    if not row:
        return "{}"
    if columns <= 9:
        return "".join(str(x) for x in row)
    return "{" + ",".join(str(x) for x in row) + "}"


def asm_to_csm(a: AsmMatrix) -> CsmMatrix:
    k, n = a.shape
    vals = [[0] * (n + 1) for _ in range(k + 1)]
    for i in range(1, k + 1):
        row = a.rows[k - i]  # csm row i covers printed rows k-i+1..k
        acc = 0
        for j in range(1, n + 1):
            acc += row[j - 1]
            vals[i][j] = vals[i - 1][j] + acc
    return CsmMatrix(tuple(tuple(r) for r in vals))


def csm_to_asm(b: CsmMatrix) -> AsmMatrix:
    k, n = b.shape
    v = b.values
    rows = []
    for i in range(k, 0, -1):  # printed row 1 is csm row k
        rows.append(
            tuple(
                v[i][j] - v[i - 1][j] - v[i][j - 1] + v[i - 1][j - 1]
                for j in range(1, n + 1)
            )
        )
    return AsmMatrix(tuple(rows))


def csm_to_mt(b: CsmMatrix) -> MonotoneTriangle:
    k, n = b.shape
    v = b.values
    rows = tuple(
        tuple(j for j in range(1, n + 1) if v[i][j] == v[i][j - 1] + 1)
        for i in range(1, k + 1)
    )
    return MonotoneTriangle(rows, n)


def mt_to_csm(t: MonotoneTriangle, k: int, n: int) -> CsmMatrix:
    if len(t.jump_rows) != k or t.columns != n:
        raise PosetError("triangle shape does not match the requested size")
    vals = [[0] * (n + 1)]
    for row in t.jump_rows:
        jumps = set(row)
        acc = 0
        line = [0]
        for j in range(1, n + 1):
            if j in jumps:
                acc += 1
            line.append(acc)
        vals.append(line)
    return CsmMatrix(tuple(tuple(r) for r in vals))
