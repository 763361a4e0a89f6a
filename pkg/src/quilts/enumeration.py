"""Counting engines for quilt lattices.

Three independent routes are implemented and cross-checked by the tests:

* a brute-force search over product cells (the oracle every other engine is
  measured against),
* the antichain formula: summing, over all convex cut sets of P, the number
  of antichains in the cut set raised to the antichain width, and
* walk counting on the graph of Boolean-growth maps of P (the
  transfer-matrix method), which also yields the binomial-basis counting
  polynomial, fundamental-quilt numbers, and top-set counts.

All arithmetic is exact; counts are plain Python integers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import comb, factorial

from .dedekind import _graph_data, _iter_value_vectors
from .errors import PosetError, TractabilityError
from .poset import (
    RankedPoset,
    _antichain_count,
    convex_cut_sets,
    count_antichains,
    make_antichain,
    make_boolean,
    make_chain,
)
from .quilt import Quilt, jump_sets, validate_quilt

BRUTE_FORCE_NODE_CAP = 10**9
FUNDAMENTAL_ENUMERATION_CAP = 10**7
TOPSET_BITS_CAP = 32

_brute_cache: dict[tuple[RankedPoset, RankedPoset], int] = {}


# -- brute force ----------------------------------------------------------------


def _product_cells(p: RankedPoset, q: RankedPoset):
    """Cells of P x Q in a linear extension (total rank, then index pair),
    with lower-cover cell lists and the corner-reachability value band."""
    cells = [(x, y) for x in range(p.size) for y in range(q.size)]
    cells.sort(key=lambda c: (p.ranks[c[0]] + q.ranks[c[1]], c))
    index = {c: i for i, c in enumerate(cells)}
    top = max(p.rank, q.rank)
    lowers = []
    lo = []
    hi = []
    for x, y in cells:
        lowers.append(
            tuple(index[(x2, y)] for x2 in p.lower_covers[x])
            + tuple(index[(x, y2)] for y2 in q.lower_covers[y])
        )
        rx, ry = p.ranks[x], q.ranks[y]
        lo.append(max(0, rx + ry - top))
        hi.append(min(rx, ry))
    return cells, tuple(lowers), tuple(lo), tuple(hi)


def _count_subtree(lowers, lo0, hi0, prefix, node_cap) -> int:
    """Count completions of a partial assignment; prefix fixes the first cells."""
    m = len(lowers)
    vals = list(prefix) + [0] * (m - len(prefix))
    last = m - 1
    nodes = 0

    def rec(i: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise TractabilityError(f"brute force exceeded {node_cap} nodes")
        lo = lo0[i]
        hi = hi0[i]
        for c in lowers[i]:
            v = vals[c]
            if v > lo:
                lo = v
            if v + 1 < hi:
                hi = v + 1
        if i == last:
            return hi - lo + 1 if hi >= lo else 0
        total = 0
        for v in range(lo, hi + 1):
            vals[i] = v
            total += rec(i + 1)
        return total

    start = len(prefix)
    if start == m:
        return 1
    return rec(start)


def _subtree_worker(args) -> int:
    lowers, lo0, hi0, prefix, node_cap = args
    return _count_subtree(lowers, lo0, hi0, prefix, node_cap)


def _admissible_range(lowers, lo0, hi0, vals, i):
    lo = lo0[i]
    hi = hi0[i]
    for c in lowers[i]:
        v = vals[c]
        if v > lo:
            lo = v
        if v + 1 < hi:
            hi = v + 1
    return lo, hi


def count_quilts_bruteforce(
    p: RankedPoset,
    q: RankedPoset,
    threads: int = 1,
    node_cap: int = BRUTE_FORCE_NODE_CAP,
) -> int:
    """Exact |Quilts(P, Q)| by depth-first search over product cells.

    The search assigns cells in a linear extension; each cell ranges over the
    interval forced by its already-assigned lower covers, intersected with
    the band reachable from the zero border and the corner value.  With
    threads > 1 the search splits deterministically into prefix subtrees
    whose counts are summed; the result never depends on thread count.
    """
    key = (p, q)
    cached = _brute_cache.get(key)
    if cached is not None:
        return cached
    cells, lowers, lo0, hi0 = _product_cells(p, q)
    if threads <= 1:
        total = _count_subtree(lowers, lo0, hi0, (), node_cap)
    else:
        prefixes: list[tuple[int, ...]] = [()]
        depth = 0
        while depth < len(cells) and len(prefixes) < threads * 4:
            nxt = []
            for pre in prefixes:
                vals = list(pre) + [0] * (len(cells) - depth)
                lo, hi = _admissible_range(lowers, lo0, hi0, vals, depth)
                nxt.extend(pre + (v,) for v in range(lo, hi + 1))
            prefixes = nxt
            depth += 1
        args = [(lowers, lo0, hi0, pre, node_cap) for pre in prefixes]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(_subtree_worker, args, chunksize=8))
    _brute_cache[key] = total
    return total


def enumerate_quilts(p: RankedPoset, q: RankedPoset, node_cap: int = BRUTE_FORCE_NODE_CAP):
    """Yield every quilt of type (P, Q) in canonical (cell-lexicographic) order."""
    cells, lowers, lo0, hi0 = _product_cells(p, q)
    m = len(cells)
    vals = [0] * m
    nodes = 0

    def rec(i: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise TractabilityError(f"enumeration exceeded {node_cap} nodes")
        if i == m:
            rows = [[0] * q.size for _ in range(p.size)]
            for (x, y), v in zip(cells, vals):
                rows[x][y] = v
            yield Quilt(p, q, tuple(tuple(r) for r in rows))
            return
        lo, hi = _admissible_range(lowers, lo0, hi0, vals, i)
        for v in range(lo, hi + 1):
            vals[i] = v
            yield from rec(i + 1)

    yield from rec(0)


# -- the antichain engine --------------------------------------------------------


@dataclass(frozen=True)
class AntichainProfile:
    """Multiset of antichain counts over the convex cut sets of a poset.

    Evaluating sum(mult * alpha**j) gives the number of quilts against the
    width-j antichain poset.
    """

    terms: tuple[tuple[int, int], ...]  # (alpha, multiplicity), ascending alpha

    def evaluate(self, j: int) -> int:
        if j < 1:
            raise PosetError("antichain width must be >= 1")
        return sum(m * a**j for a, m in self.terms)

    def cut_set_count(self) -> int:
        return sum(m for _, m in self.terms)

    def formula(self, var: str = "j") -> str:
        parts = []
        for a, m in self.terms:
            coeff = "" if m == 1 else f"{m}*"
            parts.append(f"{coeff}{a}^{var}")
        return " + ".join(parts)

    def to_json_list(self) -> list[list[str]]:
        return [[str(a), str(m)] for a, m in self.terms]


@lru_cache(maxsize=64)
def antichain_quilt_profile(p: RankedPoset) -> AntichainProfile:
    """Profile of alpha values over all convex cut sets; needs rank P >= 2."""
    if p.rank < 2:
        raise PosetError("the antichain formula needs rank P >= 2")
    counter: Counter[int] = Counter()
    for cut in convex_cut_sets(p):
        counter[count_antichains(p, cut)] += 1
    return AntichainProfile(tuple(sorted(counter.items())))


def antichain_quilt_count(p: RankedPoset, j: int) -> int:
    """|Quilts(P, antichain of width j)| via the convex-cut-set formula."""
    return antichain_quilt_profile(p).evaluate(j)


def chain_antichain_closed_form(k: int, j: int) -> int:
    """|Quilts(chain of rank k, antichain of width j)| = sum (k+1-i) i^j, i=2..k."""
    if k < 2 or j < 1:
        raise PosetError("closed form needs k >= 2 and j >= 1")
    return sum((k + 1 - i) * i**j for i in range(2, k + 1))


def bernoulli_numbers(count: int) -> list[Fraction]:
    """First `count` Bernoulli numbers in the b_1 = +1/2 convention,
    via sum over i < m of binom(m+1, i) b_i = m + 1 - (m+1) b_m."""
    out: list[Fraction] = []
    for m in range(count):
        acc = sum(comb(m + 1, i) * out[i] for i in range(m))
        out.append((m + 1 - acc) / Fraction(m + 1))
    return out


def faulhaber_polynomial(j: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending powers of k) of the degree j+2 polynomial equal
    to the chain-against-antichain count for all k >= 2."""
    if j < 1:
        raise PosetError("antichain width must be >= 1")
    b = bernoulli_numbers(j + 2)
    coeffs = [Fraction(0)] * (j + 3)
    lead = Fraction(1, (j + 1) * (j + 2))
    coeffs[j + 2] += lead
    for l in range(1, j + 1):
        coeffs[j + 2 - l] += lead * comb(j + 2, l) * (l * b[l - 1] - (l - 1) * b[l])
    coeffs[1] += b[j] - b[j + 1] - 1
    return tuple(coeffs)


def faulhaber_evaluate(j: int, k: int) -> int:
    """Evaluate the polynomial form at k; a non-integer value is an internal error."""
    coeffs = faulhaber_polynomial(j)
    value = sum(c * k**power for power, c in enumerate(coeffs))
    if value.denominator != 1:
        raise AssertionError(f"polynomial value {value} is not an integer")
    return int(value)


# -- the transfer-matrix engine ---------------------------------------------------


def chain_quilt_values(p: RankedPoset, n_max: int) -> list[int]:
    """|Quilts(P, chain of rank n)| for n = 0..n_max, by walk counting.

    For n >= rank P these are source-to-sink walks of length n in the graph
    of Boolean-growth maps; for n < rank P every step must raise the top
    value, so they are restricted-graph walks from the source ending anywhere
    except the sink.
    """
    if n_max < 0:
        raise PosetError("n_max must be >= 0")
    g = _graph_data(p)
    d = g.size
    k = p.rank
    out: list[int] = []
    limit = min(k - 1, n_max)
    if limit >= 0:
        rpred = g.preds(True)
        w = [0] * d
        w[0] = 1
        out.append(sum(w) - w[-1])
        for _ in range(1, limit + 1):
            w = [sum(w[i] for i in rpred[j]) for j in range(d)]
            out.append(sum(w) - w[-1])
    if n_max >= k:
        spred = g.preds(False)
        w = [0] * d
        w[0] = 1
        if k == 0:
            out.append(w[-1])
        for n in range(1, n_max + 1):
            w = [w[j] + sum(w[i] for i in spred[j]) for j in range(d)]
            if n >= k:
                out.append(w[-1])
    return out


@lru_cache(maxsize=64)
def fundamental_counts(p: RankedPoset) -> dict[int, int]:
    """Numbers of m-fundamental chain quilts, for rank P <= m <= rank sum.

    An m-fundamental quilt is a source-to-sink walk of length m with no lazy
    step: a lazy step is one where no element jumps, so forbidding loops makes
    the jump positions cover 1..m exactly.
    """
    g = _graph_data(p)
    d = g.size
    spred = g.preds(False)
    counts: dict[int, int] = {}
    w = [0] * d
    w[0] = 1
    if w[-1]:
        counts[0] = 1
    for m in range(1, p.rank_sum + 1):
        w = [sum(w[i] for i in spred[j]) for j in range(d)]
        if w[-1]:
            counts[m] = w[-1]
    return counts


def standard_count(p: RankedPoset) -> int:
    """Quilts whose jump positions are all of 1..rank sum, each hit exactly once."""
    return fundamental_counts(p).get(p.rank_sum, 0)


@dataclass(frozen=True)
class BinomialPolynomial:
    """An integer-valued polynomial written in the basis of binomials n-choose-m.

    Exact for all n >= valid_from; for chain-quilt counting valid_from is the
    rank of P and the coefficients are the fundamental-quilt numbers.
    """

    coeffs: tuple[tuple[int, int], ...]  # (m, coefficient), ascending m
    valid_from: int

    def evaluate(self, n: int) -> int:
        return sum(c * comb(n, m) for m, c in self.coeffs)

    def coefficient(self, m: int) -> int:
        for mm, c in self.coeffs:
            if mm == m:
                return c
        return 0

    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def monomial_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients over the ordinary power basis, ascending powers of n."""
        degree = self.degree()
        out = [Fraction(0)] * (degree + 1)
        for m, c in self.coeffs:
            # expand binom(n, m) = n(n-1)...(n-m+1) / m!
            poly = [Fraction(1)]
            for i in range(m):
                poly = [Fraction(0)] + poly
                for pwr in range(len(poly) - 1):
                    poly[pwr] -= i * poly[pwr + 1]
            scale = Fraction(c, factorial(m))
            for pwr, coeff in enumerate(poly):
                out[pwr] += scale * coeff
        return tuple(out)

    def monomial_form(self, var: str = "n") -> str:
        coeffs = self.monomial_coefficients()
        pieces = []
        for pwr in range(self.degree(), -1, -1):
            c = coeffs[pwr]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            term = f"{c}" if pwr == 0 else (f"{c}*{var}" if pwr == 1 else f"{c}*{var}^{pwr}")
            pieces.append((sign, term))
        if not pieces:
            return "0"
        first_sign, first_term = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out

    def to_json_dict(self) -> dict:
        return {
            "basis": "binomial",
            "valid_from": self.valid_from,
            "coeffs": {str(m): str(c) for m, c in self.coeffs},
        }


def chain_quilt_polynomial(p: RankedPoset) -> BinomialPolynomial:
    """The polynomial giving |Quilts(P, chain of rank n)| for all n >= rank P."""
    counts = fundamental_counts(p)
    return BinomialPolynomial(tuple(sorted(counts.items())), p.rank)


# -- fundamental quilts, explicitly, and top-set counting --------------------------


def enumerate_fundamental(p: RankedPoset, m: int, cap: int = FUNDAMENTAL_ENUMERATION_CAP):
    """All m-fundamental quilts as chain quilts of type (P, chain of rank m)."""
    if m < 0:
        raise PosetError("m must be >= 0")
    g = _graph_data(p)
    d = g.size
    succ = g.strict_succ
    sink = d - 1
    min_len = [None] * d
    max_len = [None] * d
    min_len[sink] = max_len[sink] = 0
    for v in range(d - 2, -1, -1):
        reach = [(min_len[u], max_len[u]) for u in succ[v] if min_len[u] is not None]
        if reach:
            min_len[v] = 1 + min(r[0] for r in reach)
            max_len[v] = 1 + max(r[1] for r in reach)
    chain = make_chain(m)
    walk = [0]
    emitted = 0

    def rec(v: int, depth: int):
        nonlocal emitted
        if depth == m:
            if v == sink:
                rows = tuple(
                    tuple(g.vertices[u].values[x] for u in walk) for x in range(p.size)
                )
                emitted += 1
                if emitted > cap:
                    raise TractabilityError(f"enumeration cap {cap} exceeded")
                yield Quilt(p, chain, rows)
            return
        remaining = m - depth
        for u in succ[v]:
            if min_len[u] is None or not min_len[u] <= remaining - 1 <= max_len[u]:
                continue
            walk.append(u)
            yield from rec(u, depth + 1)
            walk.pop()

    if min_len[0] is not None or m == 0:
        yield from rec(0, 0)


def standardize(f: Quilt) -> Quilt:
    """Spread a chain quilt's jump labels so each of 1..rank sum occurs once.

    For each original label in increasing order its occurrences are renamed
    to the next fresh labels, walking the elements in reverse of the fixed
    total order.  When a cover pair shares a label, interlacing pins who goes
    first: a share at the same sorted position sends the upper element ahead,
    a share offset by one sends the lower element ahead; the reverse-order
    walk only breaks the remaining ties.  Needs the chain side at least as
    long as rank P, so every element carries exactly rank-many jumps.
    """
    from .quilt import from_jump_sets

    p = f.p
    n = f.q.size - 1
    if n < p.rank:
        raise PosetError("standardization needs chain rank >= rank P")
    js = [sorted(s) for s in jump_sets(f)]
    fresh: list[set[int]] = [set() for _ in range(p.size)]
    counter = 0
    for label in range(1, n + 1):
        holders = [x for x in range(p.size) if label in js[x]]
        if not holders:
            continue
        holder_set = set(holders)
        first: dict[int, set[int]] = {x: set() for x in holders}  # x before its targets
        indeg = {x: 0 for x in holders}
        for x in holders:
            a = js[x].index(label)
            for y in p.covers[x]:
                if y not in holder_set:
                    continue
                b = js[y].index(label)
                if b == a:
                    first[y].add(x)
                    indeg[x] += 1
                elif b == a + 1:
                    first[x].add(y)
                    indeg[y] += 1
        ready = sorted((x for x in holders if indeg[x] == 0), reverse=True)
        placed = 0
        while ready:
            x = ready.pop(0)
            counter += 1
            placed += 1
            fresh[x].add(counter)
            for y in first[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
            ready.sort(reverse=True)
        if placed != len(holders):
            raise AssertionError("label precedence produced a cycle")
    return from_jump_sets(p, counter, fresh)


@lru_cache(maxsize=32)
def _topset_counts(p: RankedPoset) -> dict[int, int]:
    """Counts of fundamental quilts grouped by the top element's jump set,
    encoded as a bitmask over step positions."""
    b = p.rank_sum
    if b > TOPSET_BITS_CAP:
        raise TractabilityError(f"top-set counting capped at rank sum {TOPSET_BITS_CAP}")
    g = _graph_data(p)
    succ = g.strict_succ
    tops = [v.target_rank for v in g.vertices]
    sink = g.size - 1
    result: dict[int, int] = {}
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    if sink == 0:
        result[0] = 1
    for step in range(1, b + 1):
        bit = 1 << (step - 1)
        nxt: dict[tuple[int, int], int] = {}
        for (v, mask), c in states.items():
            tv = tops[v]
            for u in succ[v]:
                key = (u, mask | bit) if tops[u] == tv + 1 else (u, mask)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
        for (v, mask), c in states.items():
            if v == sink:
                result[mask] = result.get(mask, 0) + c
    return result


def fundamental_topset_table(p: RankedPoset) -> dict[tuple[int, ...], int]:
    """Number of fundamental quilts with each given top set."""
    table = {}
    for mask, c in _topset_counts(p).items():
        key = tuple(i + 1 for i in range(TOPSET_BITS_CAP) if mask >> i & 1)
        table[key] = c
    return table


def mt_top_set_count(p: RankedPoset, topset) -> int:
    """Chain quilts of type (P, C_n) whose top element jumps exactly at the
    given positions a_1 < ... < a_k (k = rank P; any n >= a_k gives the same
    count).  Computed by resolving fundamental quilts by their top sets and
    distributing the remaining labels into the gaps."""
    a = tuple(topset)
    k = p.rank
    if len(a) != k:
        raise PosetError(f"top set must have exactly {k} entries")
    if any(x < 1 for x in a) or any(x >= y for x, y in zip(a, a[1:])):
        raise PosetError("top set must be strictly increasing and positive")
    total = 0
    for t, c in fundamental_topset_table(p).items():
        prod = c
        for i in range(1, k):
            prod *= comb(a[i] - a[i - 1] - 1, t[i] - t[i - 1] - 1)
            if not prod:
                break
        total += prod
    return total


# -- alternating sign matrix counts ------------------------------------------------


def asm_count_square(n: int) -> int:
    """Number of n-by-n alternating sign matrices, by the product formula."""
    if n < 1:
        raise PosetError("n must be >= 1")
    value = Fraction(1)
    for j in range(n):
        value *= Fraction(factorial(3 * j + 1), factorial(n + j))
    if value.denominator != 1:
        raise AssertionError("product formula did not give an integer")
    return int(value)


def asm_count_rect(k: int, n: int) -> int:
    """Number of k-by-n alternating sign matrices, as a chain-quilt count."""
    if k < 1 or n < 1:
        raise PosetError("shape must be positive")
    small, large = min(k, n), max(k, n)
    return chain_quilt_values(make_chain(small), large)[large]


def rect_asm_leading_coefficient(k: int) -> Fraction:
    """Leading coefficient of the degree binom(k+1,2) polynomial counting
    k-by-n alternating sign matrices in n."""
    if k < 1:
        raise PosetError("k must be >= 1")
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(factorial(2 * i), factorial(k + i))
    return value


# -- bounds against boolean lattices -------------------------------------------------


def d1_count(p: RankedPoset) -> int:
    """Antichains of P minus bottom and top: the first Boolean-growth count."""
    if p.size <= 2:
        return 1 if p.size == 2 else 0
    middle = ((1 << p.size) - 1) ^ 1 ^ (1 << (p.size - 1))
    return count_antichains(p, middle)


@dataclass(frozen=True)
class BooleanBoundReport:
    """Numeric verdicts for the lower/upper quilt-count bounds against B_n."""

    p_rank: int
    n: int
    count: int
    lower_bound: int
    lower_ok: bool
    improved_bound: int | None
    improved_ok: bool | None
    upper_bound: int | None
    upper_ok: bool | None

    @property
    def ok(self) -> bool:
        return (
            self.lower_ok
            and self.improved_ok is not False
            and self.upper_ok is not False
        )


def boolean_bound_check(p: RankedPoset, n: int, node_cap: int = BRUTE_FORCE_NODE_CAP) -> BooleanBoundReport:
    """Verify 2^binom(n, n//2) <= |Quilts(P, B_n)| (and the improved lower
    bound d_1(P)^binom(n, n//2) when n >= 2 rank P, and the upper bound
    d_1(B_n)^rank-sum when rank P <= n), counting via the brute-force oracle.
    """
    if p.rank < 1 or n < p.rank:
        raise PosetError("bound check needs 1 <= rank P <= n")
    count = count_quilts_bruteforce(p, make_boolean(n), node_cap=node_cap)
    binom_mid = comb(n, n // 2)
    lower = 2**binom_mid
    improved = d1_count(p) ** binom_mid if n >= 2 * p.rank else None
    upper = d1_count(make_boolean(n)) ** p.rank_sum
    return BooleanBoundReport(
        p_rank=p.rank,
        n=n,
        count=count,
        lower_bound=lower,
        lower_ok=lower <= count,
        improved_bound=improved,
        improved_ok=None if improved is None else improved <= count,
        upper_bound=upper,
        upper_ok=count <= upper,
    )


def _epsilon_family_staircase(p: RankedPoset, n: int):
    """The cap-staircase family: middle layer caps get a free +0/+1 bit each."""
    k = p.rank
    half_k = k // 2
    half_n = n // 2
    bn = make_boolean(n)
    col_sizes = bn.ranks
    middle_cols = [y for y, s in enumerate(col_sizes) if s == half_n]

    def cap(size: int, eps: int) -> int:
        if size < half_k:
            return size
        if size < half_n:
            return half_k
        if size == half_n:
            return half_k + eps
        if size <= n - (k - half_k):
            return half_k + 1
        return size - n + k

    for bits in iter_product((0, 1), repeat=len(middle_cols)):
        eps = dict(zip(middle_cols, bits))
        rows = []
        for rx in p.ranks:
            rows.append(
                tuple(
                    min(rx, cap(col_sizes[y], eps.get(y, 0)))
                    for y in range(bn.size)
                )
            )
        yield validate_quilt(p, bn, rows)


def _epsilon_family_decrement(p: RankedPoset, n: int):
    """Fallback when the middle boolean layer is no wider than the middle of P:
    decrement the top quilt at one equal-rank cell per middle subset."""
    from .quilt import top_quilt

    half_n = n // 2
    bn = make_boolean(n)
    x_cell = next(x for x in range(p.size) if p.ranks[x] == half_n)
    middle_cols = [y for y in range(bn.size) if bn.ranks[y] == half_n]
    base = [list(r) for r in top_quilt(p, bn).values]
    for bits in iter_product((0, 1), repeat=len(middle_cols)):
        rows = [list(r) for r in base]
        for y, b in zip(middle_cols, bits):
            rows[x_cell][y] -= b
        yield validate_quilt(p, bn, rows)


def _g_family(p: RankedPoset, n: int):
    """One free Boolean-growth map of rank one per middle subset; zero below
    the middle layer, a clipped staircase above it.  Needs n >= 2 rank P."""
    from .dedekind import enumerate_dedekind_maps

    k = p.rank
    half_n = n // 2
    bn = make_boolean(n)
    middle_cols = [y for y in range(bn.size) if bn.ranks[y] == half_n]
    ones = enumerate_dedekind_maps(p, 1)
    above = {
        y: tuple(min(rx, bn.ranks[y] - half_n, k) for rx in p.ranks)
        for y in range(bn.size)
        if bn.ranks[y] > half_n
    }
    zeros = (0,) * p.size
    for choice in iter_product(ones, repeat=len(middle_cols)):
        chosen = dict(zip(middle_cols, choice))
        cols = []
        for y in range(bn.size):
            if bn.ranks[y] < half_n:
                cols.append(zeros)
            elif bn.ranks[y] == half_n:
                cols.append(chosen[y].values)
            else:
                cols.append(above[y])
        rows = [tuple(cols[y][x] for y in range(bn.size)) for x in range(p.size)]
        yield validate_quilt(p, bn, rows)


def lower_bound_family(p: RankedPoset, n: int, kind: str):
    """Yield the explicit quilt families that witness the lower bounds.

    kind 'epsilon' gives 2^binom(n, n//2) quilts for n >= rank P >= 1;
    kind 'g' gives d_1(P)^binom(n, n//2) quilts and needs n >= 2 rank P.
    Every member is validated on the way out, and distinct bit/map choices
    give distinct quilts.
    """
    if p.rank < 1 or n < p.rank:
        raise PosetError("families need 1 <= rank P <= n")
    if kind == "epsilon":
        # the cap staircase has a step of size two when the middle layers align;
        # use the equal-rank decrement family there instead
        if n // 2 > p.rank // 2:
            return _epsilon_family_staircase(p, n)
        return _epsilon_family_decrement(p, n)
    if kind == "g":
        if n < 2 * p.rank:
            raise PosetError("the map family needs n >= 2 rank P")
        return _g_family(p, n)
    raise PosetError("kind must be 'epsilon' or 'g'")


# -- table dispatchers shared by the sequence emitters --------------------------------


def quilts_boolean_chain(n: int, k: int) -> int:
    """|Quilts(B_n, C_k)| for the tabulated desk-scale range."""
    if n < 1 or k < 0:
        raise PosetError("need n >= 1 and k >= 0")
    if n <= 4:
        return chain_quilt_values(make_boolean(n), k)[k]
    if k == 1:
        return d1_count(make_boolean(n))
    if (n, k) == (5, 2):
        return _quilts_b5_c2()
    raise TractabilityError(f"boolean-chain value ({n},{k}) is beyond desk scale")


@lru_cache(maxsize=1)
def _quilts_b5_c2() -> int:
    """|Quilts(B_5, C_2)|: pairs of adjacent rank-1 and rank-2 maps.

    Every rank-2 map pairs with one rank-1 map per antichain of its
    value-one set, so the count is a sum of antichain counts over all
    rank-2 maps; the antichain recursion shares one memo table.
    """
    b5 = make_boolean(5)
    masks: Counter[int] = Counter()
    for vec in _iter_value_vectors(b5, 2):
        m = 0
        for i, v in enumerate(vec):
            if v == 1:
                m |= 1 << i
        masks[m] += 1
    comp = b5.comparable_masks
    memo: dict[int, int] = {}
    return sum(c * _antichain_count(m, comp, memo) for m, c in masks.items())


def quilts_antichain_boolean(j: int, n: int) -> int:
    """|Quilts(A_2(j), B_n)| for the tabulated desk-scale range."""
    if j < 1 or n < 1:
        raise PosetError("need j >= 1 and n >= 1")
    if n == 1:
        return chain_quilt_values(make_antichain(j), 1)[1]
    if n <= 4:
        return antichain_quilt_count(make_boolean(n), j)
    if (j, n) == (1, 5):
        return _quilts_b5_c2()
    raise TractabilityError(f"antichain-boolean value ({j},{n}) is beyond desk scale")


def quilts_antichain_chain(j: int, k: int) -> int:
    """|Quilts(A_2(j), C_k)|."""
    if j < 1 or k < 0:
        raise PosetError("need j >= 1 and k >= 0")
    if k >= 2:
        return chain_antichain_closed_form(k, j)
    return chain_quilt_values(make_antichain(j), k)[k]


def quilts_boolean_boolean(n: int, k: int) -> int:
    """|Quilts(B_n, B_k)| for the tabulated desk-scale range."""
    if n < 1 or k < 1:
        raise PosetError("need n >= 1 and k >= 1")
    if n > k:
        n, k = k, n
    if n == 1:
        return d1_count(make_boolean(k))
    if n == 2:
        return antichain_quilt_count(make_boolean(k), 2)
    if (n, k) == (3, 3):
        return count_quilts_bruteforce(make_boolean(3), make_boolean(3))
    raise TractabilityError(f"boolean-boolean value ({n},{k}) is beyond desk scale")


# -- sequence readings ------------------------------------------------------------------

SEQUENCE_NAMES = (
    "boolean-chain",
    "antichain-boolean",
    "antichain-chain",
    "chain-chain",
    "boolean-boolean",
)


def _antidiagonal_positions(depth: int):
    for d in range(2, depth + 2):
        for first in range(1, d):
            yield first, d - first


def _sequence_positions(name: str):
    if name == "boolean-chain":
        # antidiagonals, first index ascending; tabulated through diagonal 7
        return [(n, k) for n, k in _antidiagonal_positions(6)]
    if name == "antichain-boolean":
        pos = [(n, j) for n, j in _antidiagonal_positions(6)]
        # the last antidiagonal stops where the table is unknown
        return [t for t in pos if t not in ((5, 2), (6, 1))]
    if name == "antichain-chain":
        return [(k, j) for k, j in _antidiagonal_positions(14) if k <= 8 and j <= 8]
    if name == "chain-chain":
        return [(k, n) for k in range(1, 11) for n in range(1, k + 1)]
    if name == "boolean-boolean":
        out = []
        known = {(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4), (1, 5)}
        for col in range(1, 6):
            for row in range(1, 4):
                if (row, col) in known:
                    out.append((row, col))
        return out
    raise PosetError(f"unknown sequence {name!r}; choose from {SEQUENCE_NAMES}")


def sequence_terms(name: str, limit: int) -> list[int]:
    """The published reading of one cross-type counting table, to `limit` terms.

    boolean-chain, antichain-boolean and antichain-chain read antidiagonals
    (first index ascending); chain-chain and boolean-boolean read down columns.
    Entries beyond desk scale are not tabulated, and asking past the reading's
    end raises rather than approximates.
    """
    positions = _sequence_positions(name)
    if limit < 0:
        raise PosetError("limit must be >= 0")
    if limit > len(positions):
        raise TractabilityError(
            f"{name} reading has only {len(positions)} tabulated terms"
        )
    fn = {
        "boolean-chain": lambda t: quilts_boolean_chain(t[0], t[1]),
        "antichain-boolean": lambda t: quilts_antichain_boolean(t[1], t[0]),
        "antichain-chain": lambda t: quilts_antichain_chain(t[1], t[0]),
        "chain-chain": lambda t: asm_count_rect(t[0], t[1]),
        "boolean-boolean": lambda t: quilts_boolean_boolean(t[0], t[1]),
    }[name]
    return [fn(t) for t in positions[:limit]]
