"""Finite ranked posets with least and greatest elements.

Elements are integers 0..size-1 in a fixed total order that respects rank:
index 0 is the least element, indices ascend by rank (ties broken by
construction order), and the last index is the greatest element.  All values
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import PosetError, TractabilityError

BOOLEAN_RANK_CAP = 20
CONVEX_CUT_MIDDLE_CAP = 24
COMPLETION_INPUT_CAP = 64
COMPLETION_SIZE_CAP = 1 << 20


@dataclass(frozen=True, eq=False)
class RankedPoset:
    """A finite ranked poset with unique least and greatest elements.

    covers[i] lists the upper covers of element i (ascending indices).
    ranks[i] is the rank of element i; ranks are weakly increasing in i,
    and every cover step raises rank by exactly one, so every maximal
    chain from least to greatest has the same length.
    """

    size: int
    ranks: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise PosetError("poset must be nonempty")
        if len(self.ranks) != n or len(self.covers) != n:
            raise PosetError("ranks/covers length must match size")
        if self.labels is not None and len(self.labels) != n:
            raise PosetError("labels length must match size")
        if self.ranks[0] != 0 or (n > 1 and self.ranks[1] == 0):
            raise PosetError("exactly one element of rank 0, at index 0")
        if any(self.ranks[i] > self.ranks[i + 1] for i in range(n - 1)):
            raise PosetError("element order must respect rank")
        has_lower = [False] * n
        for i, ups in enumerate(self.covers):
            for j in ups:
                if not 0 <= j < n:
                    raise PosetError(f"cover target {j} out of range")
                if self.ranks[j] != self.ranks[i] + 1:
                    raise PosetError(f"cover {i} -> {j} must raise rank by one")
                has_lower[j] = True
        no_upper = [i for i in range(n) if not self.covers[i]]
        if no_upper != [n - 1]:
            raise PosetError("exactly one maximal element, at the last index")
        bad = [i for i in range(1, n) if not has_lower[i]]
        if bad:
            raise PosetError(f"elements {bad} have no lower cover")

    # -- basic derived data ------------------------------------------------

    @property
    def rank(self) -> int:
        """Rank of the poset: the rank of the greatest element."""
        return self.ranks[-1]

    @property
    def rank_sum(self) -> int:
        """Sum of all element ranks."""
        return sum(self.ranks)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        downs: list[list[int]] = [[] for _ in range(self.size)]
        for i, ups in enumerate(self.covers):
            for j in ups:
                downs[j].append(i)
        return tuple(tuple(d) for d in downs)

    @cached_property
    def above_masks(self) -> tuple[int, ...]:
        """above_masks[i] has bit j set iff i <= j."""
        masks = [0] * self.size
        for i in range(self.size - 1, -1, -1):
            m = 1 << i
            for j in self.covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def below_masks(self) -> tuple[int, ...]:
        """below_masks[i] has bit j set iff j <= i."""
        masks = [0] * self.size
        for i in range(self.size):
            m = 1 << i
            for j in self.lower_covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def comparable_masks(self) -> tuple[int, ...]:
        return tuple(a | b for a, b in zip(self.above_masks, self.below_masks))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.above_masks[i] >> j & 1)

    def __eq__(self, other) -> bool:
        """Structural equality; labels are cosmetic and ignored."""
        if not isinstance(other, RankedPoset):
            return NotImplemented
        return self.ranks == other.ranks and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.ranks, self.covers))

    def __repr__(self) -> str:
        return f"RankedPoset(size={self.size}, rank={self.rank})"

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        pairs = sorted((i, j) for i, ups in enumerate(self.covers) for j in ups)
        d = {
            "size": self.size,
            "rank": list(self.ranks),
            "covers": [list(p) for p in pairs],
            "labels": list(self.labels) if self.labels is not None else None,
        }
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def poset_from_json(text: str | dict) -> RankedPoset:
    d = json.loads(text) if isinstance(text, str) else text
    n = d["size"]
    ups: list[list[int]] = [[] for _ in range(n)]
    for i, j in d["covers"]:
        ups[i].append(j)
    labels = d.get("labels")
    return RankedPoset(
        size=n,
        ranks=tuple(d["rank"]),
        covers=tuple(tuple(sorted(u)) for u in ups),
        labels=tuple(labels) if labels is not None else None,
    )


# -- constructors ------------------------------------------------------------


def make_chain(n: int) -> RankedPoset:
    """The chain with n+1 elements 0 < 1 < ... < n; n = 0 is the one-point poset."""
    if n < 0:
        raise PosetError("chain rank must be >= 0")
    covers = tuple((i + 1,) if i < n else () for i in range(n + 1))
    return RankedPoset(n + 1, tuple(range(n + 1)), covers)


def make_antichain(j: int) -> RankedPoset:
    """j pairwise-incomparable middle elements with a bottom and a top added; rank 2."""
    if j < 1:
        raise PosetError("antichain needs at least one middle element (use make_chain)")
    size = j + 2
    covers = [tuple(range(1, j + 1))] + [(size - 1,)] * j + [()]
    ranks = (0,) + (1,) * j + (2,)
    return RankedPoset(size, ranks, tuple(covers))


def boolean_element_masks(n: int) -> tuple[int, ...]:
    """Subset bitmasks of [n] in the fixed order: by size, colex within a size level."""
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), m)))


def _subset_label(mask: int, n: int) -> str:
    elems = [i + 1 for i in range(n) if mask >> i & 1]
    if not elems:
        return "{}"
    if n <= 9:
        return "".join(str(e) for e in elems)
    return "{" + ",".join(str(e) for e in elems) + "}"


def make_boolean(n: int) -> RankedPoset:
    """The lattice of subsets of {1..n} ordered by inclusion."""
    if n < 1:
        raise PosetError("boolean lattice rank must be >= 1")
    if n > BOOLEAN_RANK_CAP:
        raise TractabilityError(f"boolean lattice capped at rank {BOOLEAN_RANK_CAP}")
    masks = boolean_element_masks(n)
    index = {m: i for i, m in enumerate(masks)}
    covers = tuple(
        tuple(sorted(index[m | (1 << b)] for b in range(n) if not m >> b & 1))
        for m in masks
    )
    ranks = tuple(m.bit_count() for m in masks)
    labels = tuple(_subset_label(m, n) for m in masks)
    return RankedPoset(1 << n, ranks, covers, labels)


def product(p: RankedPoset, q: RankedPoset) -> RankedPoset:
    """Cartesian product: (x,y) covered by (x',y) for x covered by x', and symmetrically."""
    pairs = [(i, j) for i in range(p.size) for j in range(q.size)]
    pairs.sort(key=lambda t: p.ranks[t[0]] + q.ranks[t[1]])  # stable: construction order ties
    index = {t: k for k, t in enumerate(pairs)}
    covers = []
    for i, j in pairs:
        ups = [index[(i2, j)] for i2 in p.covers[i]]
        ups += [index[(i, j2)] for j2 in q.covers[j]]
        covers.append(tuple(sorted(ups)))
    ranks = tuple(p.ranks[i] + q.ranks[j] for i, j in pairs)
    labels = None
    if p.labels is not None and q.labels is not None:
        labels = tuple(f"({p.labels[i]},{q.labels[j]})" for i, j in pairs)
    return RankedPoset(len(pairs), ranks, tuple(covers), labels)


def disjoint_union_embeddings(
    p: RankedPoset, q: RankedPoset
) -> tuple[RankedPoset, tuple[int, ...], tuple[int, ...]]:
    """Disjoint union sharing bottom and top, plus the two index embeddings.

    Both summands must have equal rank so the merged poset stays ranked.
    Middle elements keep no cross relations; within a rank level the first
    summand's elements precede the second's.
    """
    if p.rank != q.rank:
        raise PosetError("disjoint union requires equal ranks")
    if p.rank == 0:
        u = make_chain(0)
        return u, (0,), (0,)
    r = p.rank
    order: list[tuple[int, int]] = [(0, 0)]  # (side, original index); side 2 = shared
    for level in range(1, r):
        order += [(0, i) for i in range(p.size) if p.ranks[i] == level]
        order += [(1, i) for i in range(q.size) if q.ranks[i] == level]
    order.append((2, 0))
    top = len(order) - 1
    into_p = [0] * p.size
    into_q = [0] * q.size
    for k, (side, i) in enumerate(order):
        if side == 0:
            into_p[i] = k
        elif side == 1:
            into_q[i] = k
    into_p[0] = into_q[0] = 0
    into_p[p.size - 1] = into_q[q.size - 1] = top
    covers: list[set[int]] = [set() for _ in order]
    for side, poset, emb in ((0, p, into_p), (1, q, into_q)):
        for i, ups in enumerate(poset.covers):
            for j in ups:
                covers[emb[i]].add(emb[j])
    ranks = []
    for side, i in order:
        if side == 0:
            ranks.append(p.ranks[i])
        elif side == 1:
            ranks.append(q.ranks[i])
        else:
            ranks.append(r)
    u = RankedPoset(len(order), tuple(ranks), tuple(tuple(sorted(c)) for c in covers))
    return u, tuple(into_p), tuple(into_q)


def disjoint_union(p: RankedPoset, q: RankedPoset) -> RankedPoset:
    return disjoint_union_embeddings(p, q)[0]


# -- element sets, antichains, cut sets --------------------------------------


def element_mask(p: RankedPoset, elements) -> int:
    """Bitmask of an element subset given as an iterable of indices or a mask."""
    if isinstance(elements, int):
        if elements < 0 or elements >> p.size:
            raise PosetError("element mask out of range")
        return elements
    mask = 0
    for i in elements:
        if not 0 <= i < p.size:
            raise PosetError(f"element index {i} out of range")
        mask |= 1 << i
    return mask


def _antichain_count(mask: int, comp: tuple[int, ...], memo: dict[int, int]) -> int:
    """Number of antichains inside mask, empty antichain included.

    Deletion recursion on a maximal element x: antichains avoiding x plus
    antichains containing x.  Comparability components multiply, which keeps
    the memoized state space small.
    """
    if mask == 0:
        return 1
    cached = memo.get(mask)
    if cached is not None:
        return cached
    # split off the comparability component of the lowest element
    low = mask & -mask
    comp_mask = low
    frontier = low
    while frontier:
        new = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            new |= comp[b.bit_length() - 1] & mask
        frontier = new & ~comp_mask
        comp_mask |= frontier
    if comp_mask != mask:
        result = _antichain_count(comp_mask, comp, memo) * _antichain_count(
            mask ^ comp_mask, comp, memo
        )
    else:
        x = mask.bit_length() - 1  # highest index is maximal within mask
        bit = 1 << x
        result = _antichain_count(mask ^ bit, comp, memo) + _antichain_count(
            mask & ~comp[x], comp, memo
        )
    memo[mask] = result
    return result


def count_antichains(p: RankedPoset, elements) -> int:
    """Exact number of antichains of the induced subposet, empty one included."""
    mask = element_mask(p, elements)
    return _antichain_count(mask, p.comparable_masks, {})


def convex_cut_sets(p: RankedPoset) -> list[tuple[int, ...]]:
    """All convex subsets of the middle that meet every maximal chain.

    Enumerates all subsets of P minus bottom and top; convexity is checked via
    down/up closures, the cut property via reachability of the top from the
    bottom avoiding the subset.  Canonical order: by size, then by mask.
    """
    if p.rank < 2:
        raise PosetError("convex cut sets need rank >= 2")
    n = p.size
    middle = list(range(1, n - 1))
    m = len(middle)
    if m > CONVEX_CUT_MIDDLE_CAP:
        raise TractabilityError(
            f"convex cut enumeration capped at {CONVEX_CUT_MIDDLE_CAP} middle elements"
        )
    above = p.above_masks
    below = p.below_masks
    covers = p.covers
    results: list[int] = []
    for sub in range(1, 1 << m):
        mask = sub << 1
        # convex iff mask equals the intersection of its down- and up-closures
        dc = 0
        uc = 0
        rest = mask
        while rest:
            b = rest & -rest
            rest ^= b
            i = b.bit_length() - 1
            dc |= below[i]
            uc |= above[i]
        if dc & uc != mask:
            continue
        # cut iff the top is unreachable from the bottom when mask is removed
        reach = 1
        for i in range(n - 1):
            if reach >> i & 1:
                for j in covers[i]:
                    if not mask >> j & 1:
                        reach |= 1 << j
        if reach >> (n - 1) & 1:
            continue
        results.append(mask)
    results.sort(key=lambda mk: (mk.bit_count(), mk))
    return [tuple(i for i in middle if mk >> i & 1) for mk in results]


def count_maximal_chains(p: RankedPoset) -> int:
    paths = [0] * p.size
    paths[0] = 1
    for i in range(p.size):
        for j in p.covers[i]:
            paths[j] += paths[i]
    return paths[-1]


# -- isomorphism -------------------------------------------------------------


def _refine_candidates(p: RankedPoset, q: RankedPoset) -> list[list[int]] | None:
    """Per-element candidate lists from cheap invariants, or None if impossible."""
    if p.size != q.size or p.ranks != q.ranks:
        return None

    def sig(poset: RankedPoset, i: int) -> tuple:
        return (
            poset.ranks[i],
            len(poset.covers[i]),
            len(poset.lower_covers[i]),
            poset.above_masks[i].bit_count(),
            poset.below_masks[i].bit_count(),
        )

    psigs = [sig(p, i) for i in range(p.size)]
    qsigs = [sig(q, i) for i in range(q.size)]
    if sorted(psigs) != sorted(qsigs):
        return None
    return [[j for j in range(q.size) if qsigs[j] == psigs[i]] for i in range(p.size)]


def is_isomorphic(p: RankedPoset, q: RankedPoset) -> bool:
    """Order isomorphism via full backtracking search; meant for small posets."""
    cands = _refine_candidates(p, q)
    if cands is None:
        return False
    n = p.size
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        want = {image[c] for c in p.lower_covers[i]}
        for j in cands[i]:
            if used[j] or set(q.lower_covers[j]) != want:
                continue
            image[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    return extend(0)


# -- plain orders and the Dedekind-MacNeille completion -----------------------


@dataclass(frozen=True)
class PlainOrder:
    """A finite partial order without ranking promises.

    leq_masks[i] has bit j set iff i <= j.  is_lattice records whether every
    pair has a meet and a join.
    """

    size: int
    leq_masks: tuple[int, ...]
    is_lattice: bool

    def leq(self, i: int, j: int) -> bool:
        return bool(self.leq_masks[i] >> j & 1)

    @cached_property
    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        pairs = []
        for i in range(self.size):
            for j in range(self.size):
                if i == j or not self.leq(i, j):
                    continue
                between = (
                    self.leq_masks[i]
                    & ~(1 << i)
                    & ~(1 << j)
                    & self._geq_masks[j]
                )
                if not between:
                    pairs.append((i, j))
        return tuple(sorted(pairs))

    @cached_property
    def _geq_masks(self) -> tuple[int, ...]:
        geq = [0] * self.size
        for i in range(self.size):
            m = self.leq_masks[i]
            for j in range(self.size):
                if m >> j & 1:
                    geq[j] |= 1 << i
        return tuple(geq)

    def minimal_elements(self) -> list[int]:
        geq = self._geq_masks
        return [i for i in range(self.size) if geq[i] == 1 << i]


def _close_relation(size: int, pairs) -> tuple[int, ...]:
    leq = [1 << i for i in range(size)]
    for i, j in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise PosetError("relation pair out of range")
        leq[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(size):
            m = leq[i]
            acc = m
            rest = m
            while rest:
                b = rest & -rest
                rest ^= b
                acc |= leq[b.bit_length() - 1]
            if acc != m:
                leq[i] = acc
                changed = True
    for i in range(size):
        for j in range(size):
            if i != j and leq[i] >> j & 1 and leq[j] >> i & 1:
                raise PosetError(f"relation is not antisymmetric at {i},{j}")
    return tuple(leq)


@dataclass(frozen=True)
class Completion:
    """Result of a Dedekind-MacNeille completion.

    order is the completed lattice; embedding[i] is the index of the original
    element i inside it.
    """

    order: PlainOrder
    embedding: tuple[int, ...]


def plain_order(size: int, pairs) -> PlainOrder:
    """Build a PlainOrder from i <= j pairs; closure is taken, antisymmetry checked."""
    leq = _close_relation(size, pairs)
    is_lat = _order_is_lattice(size, leq)
    return PlainOrder(size, leq, is_lat)


def _order_is_lattice(size: int, leq: tuple[int, ...]) -> bool:
    geq = [0] * size
    for i in range(size):
        for j in range(size):
            if leq[i] >> j & 1:
                geq[j] |= 1 << i
    for i, j in combinations(range(size), 2):
        for upper, masks in ((True, leq), (False, geq)):
            common = masks[i] & masks[j]
            if not common:
                return False
            # a least/greatest element of common must lie below/above all others
            best = None
            rest = common
            while rest:
                b = rest & -rest
                rest ^= b
                z = b.bit_length() - 1
                if masks[z] & common == common:
                    best = z
                    break
            if best is None:
                return False
    return True


def dedekind_macneille_completion(size: int, pairs) -> Completion:
    """Smallest lattice containing the given order, via closed sets of the
    lower/upper Galois connection.

    The input is an explicit relation (list of i <= j pairs) on at most 64
    elements; the output order need not be ranked.
    """
    if size < 1 or size > COMPLETION_INPUT_CAP:
        raise PosetError(f"completion input must have 1..{COMPLETION_INPUT_CAP} elements")
    leq = _close_relation(size, pairs)
    down = [0] * size
    for i in range(size):
        for j in range(size):
            if leq[j] >> i & 1:
                down[i] |= 1 << j
    full = (1 << size) - 1
    # closed sets are the intersections of principal down-sets (plus the full set)
    family = {full}
    queue = [full]
    while queue:
        cur = queue.pop()
        for d in down:
            nxt = cur & d
            if nxt not in family:
                if len(family) >= COMPLETION_SIZE_CAP:
                    raise TractabilityError("completion exceeds the closed-set cap")
                family.add(nxt)
                queue.append(nxt)
    closed = sorted(family, key=lambda mk: (mk.bit_count(), mk))
    index = {mk: i for i, mk in enumerate(closed)}
    leq_masks = []
    for a in closed:
        m = 0
        for b in closed:
            if a & b == a:
                m |= 1 << index[b]
        leq_masks.append(m)
    order = PlainOrder(len(closed), tuple(leq_masks), True)
    embedding = tuple(index[down[i]] for i in range(size))
    return Completion(order, embedding)


def orders_isomorphic(a: PlainOrder, b: PlainOrder) -> bool:
    """Backtracking isomorphism test between two plain orders."""
    if a.size != b.size:
        return False
    n = a.size

    def sig(o: PlainOrder, i: int) -> tuple[int, int]:
        up = o.leq_masks[i].bit_count()
        down = sum(1 for j in range(n) if o.leq(j, i))
        return up, down

    asigs = [sig(a, i) for i in range(n)]
    bsigs = [sig(b, i) for i in range(n)]
    if sorted(asigs) != sorted(bsigs):
        return False
    image = [-1] * n
    used = [False] * n

    def ok(i: int, j: int) -> bool:
        for k in range(i):
            if a.leq(k, i) != b.leq(image[k], j) or a.leq(i, k) != b.leq(j, image[k]):
                return False
        return True

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or bsigs[j] != asigs[i] or not ok(i, j):
                continue
            image[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    return extend(0)
