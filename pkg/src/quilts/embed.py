"""Embeddings into quilt lattices: corner sum tables, matrix rank tables,
Boolean-growth maps, matroids and flag matroids, plus the gluing and
pullback homomorphisms.

All matrix ranks are exact: entries are taken as rationals, rows are scaled
to integers, and rank is computed by fraction-free elimination.  No floating
point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .asm import CsmMatrix
from .dedekind import DedekindMap
from .errors import PosetError, TractabilityError
from .poset import (
    RankedPoset,
    boolean_element_masks,
    disjoint_union_embeddings,
    make_boolean,
    make_chain,
)
from .quilt import Quilt, validate_quilt

FLAG_AXIOM_GROUND_CAP = 12


# -- exact rank ---------------------------------------------------------------


def exact_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, nrows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            for c in range(col, ncols):
                m[r][c] = (m[r][c] * pivot - factor * m[row][c]) // prev
        prev = pivot
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def _integer_rows(matrix) -> list[list[int]]:
    rows = []
    for raw in matrix:
        fracs = [Fraction(x) for x in raw]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        rows.append([int(f * scale) for f in fracs])
    return rows


def matrix_rank(matrix) -> int:
    """Exact rank of a matrix with integer or rational entries."""
    return exact_rank(_integer_rows(matrix))


# -- corner-sum and matrix embeddings -----------------------------------------


def iota_embed(b: CsmMatrix, p: RankedPoset, q: RankedPoset) -> Quilt:
    """Lift a corner sum table along ranks: (x, y) -> b[rank x][rank y].

    A lattice embedding whenever rank P and rank Q match the table's shape.
    """
    k, n = b.shape
    if p.rank != k or q.rank != n:
        raise PosetError(f"table of shape ({k},{n}) needs rank P = {k}, rank Q = {n}")
    v = b.values
    return validate_quilt(
        p, q, [[v[rx][ry] for ry in q.ranks] for rx in p.ranks]
    )


def quilt_from_matrix(matrix) -> Quilt:
    """Submatrix rank table of a full-rank k-by-n matrix, as a quilt on two
    boolean lattices: f(I, J) = rank of the rows-I, columns-J submatrix."""
    rows = _integer_rows(matrix)
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if k < 1 or n < 1:
        raise PosetError("matrix must be nonempty")
    if exact_rank(rows) != min(k, n):
        raise PosetError(f"matrix must have full rank {min(k, n)}")
    row_masks = boolean_element_masks(k)
    col_masks = boolean_element_masks(n)
    table = []
    for rm in row_masks:
        picked_rows = [rows[i] for i in range(k) if rm >> i & 1]
        line = []
        for cm in col_masks:
            sub = [[r[j] for j in range(n) if cm >> j & 1] for r in picked_rows]
            line.append(exact_rank(sub) if picked_rows and cm else 0)
        table.append(line)
    return validate_quilt(make_boolean(k), make_boolean(n), table)


def chain_quilt_from_matrix(matrix) -> Quilt:
    """Rank table over top-row prefixes: f(h, J) = rank of rows 1..h, columns J.

    Unchanged under column rescaling by any invertible diagonal matrix.
    """
    rows = _integer_rows(matrix)
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if k < 1 or n < 1:
        raise PosetError("matrix must be nonempty")
    if exact_rank(rows) != min(k, n):
        raise PosetError(f"matrix must have full rank {min(k, n)}")
    col_masks = boolean_element_masks(n)
    table = [[0] * (1 << n)]
    for h in range(1, k + 1):
        prefix = rows[:h]
        line = []
        for cm in col_masks:
            sub = [[r[j] for j in range(n) if cm >> j & 1] for r in prefix]
            line.append(exact_rank(sub) if cm else 0)
        table.append(line)
    return validate_quilt(make_chain(k), make_boolean(n), table)


# -- Boolean-growth map and matroid embeddings --------------------------------


def dedekind_to_quilt(p: RankedPoset, q: RankedPoset, g: DedekindMap) -> Quilt:
    """Embed a map of target rank l >= rank P as the quilt min(rank x, g(y)).

    Injective: g is recoverable as the top row f(top of P, .).
    """
    if len(g.values) != q.size:
        raise PosetError("map length must match |Q|")
    if g.target_rank < p.rank:
        raise PosetError("map rank must be at least rank P")
    return validate_quilt(
        p, q, [[min(rx, gv) for gv in g.values] for rx in p.ranks]
    )


def check_matroid_rank(n: int, ranks) -> None:
    """Verify the three rank axioms on every subset (pair): bounded by size,
    monotone, submodular.  ranks is indexed by subset bitmask."""
    if n > FLAG_AXIOM_GROUND_CAP:
        raise TractabilityError(f"axiom checking capped at ground sets of {FLAG_AXIOM_GROUND_CAP}")
    size = 1 << n
    if len(ranks) != size:
        raise PosetError("rank function must assign every subset a value")
    for x in range(size):
        if not 0 <= ranks[x] <= x.bit_count():
            raise PosetError(f"rank of {x:b} not bounded by its size")
        for b in range(n):
            if not x >> b & 1 and ranks[x] > ranks[x | 1 << b]:
                raise PosetError("rank function is not monotone")
    for x in range(size):
        for y in range(size):
            if ranks[x | y] + ranks[x & y] > ranks[x] + ranks[y]:
                raise PosetError(f"submodularity fails at {x:b},{y:b}")


def matroid_to_quilt(n: int, ranks) -> Quilt:
    """Embed a matroid on ground set [n] as the quilt f(i, T) = min(i, rank T)
    of type (chain of the matroid's rank, boolean lattice of rank n)."""
    check_matroid_rank(n, ranks)
    k = ranks[(1 << n) - 1]
    if k < 1:
        raise PosetError("matroid must have positive rank")
    masks = boolean_element_masks(n)
    table = [[min(i, ranks[m]) for m in masks] for i in range(k + 1)]
    return validate_quilt(make_chain(k), make_boolean(n), table)


def check_matroid_quotient(n: int, upper, lower) -> None:
    """Verify the quotient inequality r_M(Y)-r_M(X) >= r_N(Y)-r_N(X) for all
    X subset of Y, where M = upper, N = lower."""
    if n > FLAG_AXIOM_GROUND_CAP:
        raise TractabilityError(f"axiom checking capped at ground sets of {FLAG_AXIOM_GROUND_CAP}")
    size = 1 << n
    for y in range(size):
        x = y
        while True:
            if upper[y] - upper[x] < lower[y] - lower[x]:
                raise PosetError(f"quotient inequality fails at {x:b} <= {y:b}")
            if x == 0:
                break
            x = (x - 1) & y


def flag_matroid_to_quilt(n: int, rank_fns) -> Quilt:
    """Embed a flag of matroids (each a quotient of the next) as a quilt of
    type (chain of the largest rank, boolean lattice of rank n)."""
    fns = [list(r) for r in rank_fns]
    if not fns:
        raise PosetError("need at least one matroid")
    ks = []
    for r in fns:
        check_matroid_rank(n, r)
        ks.append(r[(1 << n) - 1])
    if any(a >= b for a, b in zip(ks, ks[1:])) or ks[0] < 1:
        raise PosetError("flag ranks must be strictly increasing and positive")
    for lower, upper in zip(fns, fns[1:]):
        check_matroid_quotient(n, upper, lower)
    k_top = ks[-1]
    masks = boolean_element_masks(n)

    def value(i: int, m: int) -> int:
        if i <= ks[0]:
            return min(i, fns[0][m])
        for j in range(len(ks) - 1):
            if ks[j] < i <= ks[j + 1]:
                return min(fns[j][m] + i - ks[j], fns[j + 1][m])
        raise AssertionError("chain index out of range")

    table = [[value(i, m) for m in masks] for i in range(k_top + 1)]
    return validate_quilt(make_chain(k_top), make_boolean(n), table)


# -- gluing along a shared bottom and top --------------------------------------


def theta_split(f: Quilt, p1: RankedPoset, p2: RankedPoset) -> tuple[Quilt, Quilt]:
    """Restrict a quilt on (P1 + P2, Q) to its two summands."""
    union, into1, into2 = disjoint_union_embeddings(p1, p2)
    if f.p != union:
        raise PosetError("quilt is not of type (P1 + P2, Q)")
    f1 = validate_quilt(p1, f.q, [f.values[into1[i]] for i in range(p1.size)])
    f2 = validate_quilt(p2, f.q, [f.values[into2[i]] for i in range(p2.size)])
    return f1, f2


def theta_merge(f1: Quilt, f2: Quilt) -> Quilt:
    """Glue quilts on (P1, Q) and (P2, Q) into one on (P1 + P2, Q).

    Needs rank P1 = rank P2 >= rank Q, which forces both quilts to agree on
    the shared bottom and top rows.
    """
    if f1.q != f2.q:
        raise PosetError("summands must share the chain/Q side")
    p1, p2 = f1.p, f2.p
    if p1.rank != p2.rank or p1.rank < f1.q.rank:
        raise PosetError("gluing requires rank P1 = rank P2 >= rank Q")
    union, into1, into2 = disjoint_union_embeddings(p1, p2)
    rows: list[tuple[int, ...] | None] = [None] * union.size
    for i in range(p1.size):
        rows[into1[i]] = f1.values[i]
    for i in range(p2.size):
        rows[into2[i]] = f2.values[i]
    return validate_quilt(union, f1.q, rows)


# -- pullback along a cover-compressing surjection ------------------------------


def psi_embed(f: Quilt, q_prime: RankedPoset, psi) -> Quilt:
    """Pull a quilt on (P, Q) back to (P, Q') along psi: Q' -> Q.

    psi must be surjective and cover-compressing (a cover maps to an equality
    or a cover), and rank P must not exceed rank Q.
    """
    m = tuple(psi)
    q = f.q
    if len(m) != q_prime.size:
        raise PosetError("psi must map every element of Q'")
    if set(m) != set(range(q.size)):
        raise PosetError("psi must be surjective onto Q")
    for i, ups in enumerate(q_prime.covers):
        for j in ups:
            if m[i] != m[j] and m[j] not in q.covers[m[i]]:
                raise PosetError(f"psi breaks the cover {i} -> {j}")
    if f.p.rank > q.rank:
        raise PosetError("pullback requires rank P <= rank Q")
    return validate_quilt(
        f.p, q_prime, [[row[m[y]] for y in range(q_prime.size)] for row in f.values]
    )


def chain_collapse(n: int, m: int) -> tuple[RankedPoset, tuple[int, ...]]:
    """The map from the rank-n chain onto the rank-m chain, i -> min(i, m)."""
    if m > n:
        raise PosetError("target chain cannot be longer")
    return make_chain(n), tuple(min(i, m) for i in range(n + 1))


def boolean_restrict(n: int, m: int) -> tuple[RankedPoset, tuple[int, ...]]:
    """The map from the rank-n onto the rank-m boolean lattice, T -> T intersect [m]."""
    if m > n or m < 1:
        raise PosetError("target boolean lattice must be smaller and nonempty")
    big = boolean_element_masks(n)
    small_index = {mk: i for i, mk in enumerate(boolean_element_masks(m))}
    keep = (1 << m) - 1
    return make_boolean(n), tuple(small_index[mk & keep] for mk in big)
