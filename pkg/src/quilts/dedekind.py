"""Value assignments with Boolean growth, and the graphs they form.

A map of target rank k assigns every poset element a value in 0..k so that
the bottom gets 0, the top gets k, and every cover step raises the value by
0 or 1; such a map is automatically surjective onto 0..k.  The vertices of
the graph on all these maps are ordered by target rank, then lexicographically
by value vector, which makes the adjacency matrix upper triangular with unit
diagonal (strictly upper triangular for the restricted variant).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PosetError, TractabilityError
from .poset import RankedPoset

MAP_ENUMERATION_CAP = 1 << 20
GRAPH_VERTEX_CAP = 5000


@dataclass(frozen=True)
class DedekindMap:
    """Per-element values in the poset's element order; surjective onto 0..target_rank."""

    values: tuple[int, ...]
    target_rank: int

    def __str__(self) -> str:
        return "".join(str(v) for v in self.values)


def _value_bands(p: RankedPoset, k: int) -> tuple[list[int], list[int]]:
    """Per-element value bounds forced by reachability of 0 at bottom and k at top."""
    r = p.rank
    lo = [max(0, k - (r - rk)) for rk in p.ranks]
    hi = [min(rk, k) for rk in p.ranks]
    return lo, hi


def _iter_value_vectors(p: RankedPoset, k: int):
    """Yield value vectors of all rank-k maps, in lexicographic order.

    Elements are assigned in index order, so all lower covers are already
    fixed; each element's admissible range is the intersection of the
    cover constraints with the reachability band.
    """
    n = p.size
    lo0, hi0 = _value_bands(p, k)
    if hi0[0] < lo0[0]:
        return
    lower = p.lower_covers
    vals = [0] * n

    def rec(i: int):
        if i == n:
            yield tuple(vals)
            return
        lo = lo0[i]
        hi = hi0[i]
        for c in lower[i]:
            v = vals[c]
            if v > lo:
                lo = v
            if v + 1 < hi:
                hi = v + 1
        for v in range(lo, hi + 1):
            vals[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def count_dedekind_maps(p: RankedPoset, k: int, cap: int | None = MAP_ENUMERATION_CAP) -> int:
    """Exact |D_k(P)| by a pruned search that never materializes the maps."""
    if not 0 <= k <= p.rank:
        return 0
    n = p.size
    lo0, hi0 = _value_bands(p, k)
    if hi0[0] < lo0[0]:
        return 0
    lower = p.lower_covers
    vals = [0] * n
    last = n - 1
    total = 0

    def rec(i: int) -> int:
        lo = lo0[i]
        hi = hi0[i]
        for c in lower[i]:
            v = vals[c]
            if v > lo:
                lo = v
            if v + 1 < hi:
                hi = v + 1
        if i == last:
            return hi - lo + 1 if hi >= lo else 0
        sub = 0
        for v in range(lo, hi + 1):
            vals[i] = v
            sub += rec(i + 1)
        return sub

    total = rec(0)
    if cap is not None and total > cap:
        raise TractabilityError(f"map count {total} exceeds cap {cap}")
    return total


def enumerate_dedekind_maps(p: RankedPoset, k: int) -> list[DedekindMap]:
    """All rank-k maps in canonical (lexicographic) order; capped enumeration."""
    if not 0 <= k <= p.rank:
        raise PosetError("target rank must lie in 0..rank P")
    out: list[DedekindMap] = []
    for vec in _iter_value_vectors(p, k):
        out.append(DedekindMap(vec, k))
        if len(out) > MAP_ENUMERATION_CAP:
            raise TractabilityError(f"enumeration cap {MAP_ENUMERATION_CAP} exceeded")
    return out


def dedekind_numbers(p: RankedPoset) -> tuple[int, ...]:
    """(|D_0(P)|, ..., |D_rank(P)|); the first entry is always 1."""
    return tuple(count_dedekind_maps(p, k) for k in range(p.rank + 1))


# -- the graph on all maps ----------------------------------------------------


def _pack_width(rank: int) -> int:
    # wide enough that any borrow in the packed subtraction lands on a digit >= 2
    return (rank + 2).bit_length()


class _GraphData:
    """Vertex list plus strict/restricted adjacency, shared by the counting engines."""

    def __init__(self, p: RankedPoset):
        verts: list[DedekindMap] = []
        by_rank: list[tuple[int, int]] = []  # (start, stop) per target rank
        for k in range(p.rank + 1):
            start = len(verts)
            for vec in _iter_value_vectors(p, k):
                verts.append(DedekindMap(vec, k))
                if len(verts) > GRAPH_VERTEX_CAP:
                    raise TractabilityError(
                        f"graph capped at {GRAPH_VERTEX_CAP} vertices"
                    )
            by_rank.append((start, len(verts)))
        d = len(verts)
        w = _pack_width(p.rank)
        bad = ~sum(1 << (w * i) for i in range(p.size))
        packed = []
        for vm in verts:
            acc = 0
            for i, v in enumerate(vm.values):
                acc |= v << (w * i)
            packed.append(acc)
        strict_succ: list[list[int]] = [[] for _ in range(d)]
        restricted_succ: list[list[int]] = [[] for _ in range(d)]
        for k, (a, b) in enumerate(by_rank):
            for i in range(a, b):
                fi = packed[i]
                for j in range(i + 1, b):
                    diff = packed[j] - fi
                    if diff >= 0 and diff & bad == 0:
                        strict_succ[i].append(j)
            if k + 1 <= p.rank:
                c, e = by_rank[k + 1]
                for i in range(a, b):
                    fi = packed[i]
                    for j in range(c, e):
                        diff = packed[j] - fi
                        if diff >= 0 and diff & bad == 0:
                            strict_succ[i].append(j)
                            restricted_succ[i].append(j)
        self.poset = p
        self.vertices = tuple(verts)
        self.by_rank = tuple(by_rank)
        self.strict_succ = tuple(tuple(s) for s in strict_succ)
        self.restricted_succ = tuple(tuple(s) for s in restricted_succ)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def preds(self, restricted: bool) -> tuple[tuple[int, ...], ...]:
        key = "_rpred" if restricted else "_spred"
        cached = getattr(self, key, None)
        if cached is None:
            succ = self.restricted_succ if restricted else self.strict_succ
            pred: list[list[int]] = [[] for _ in range(self.size)]
            for i, out in enumerate(succ):
                for j in out:
                    pred[j].append(i)
            cached = tuple(tuple(q) for q in pred)
            setattr(self, key, cached)
        return cached


@lru_cache(maxsize=32)
def _graph_data(p: RankedPoset) -> _GraphData:
    return _GraphData(p)


@dataclass(frozen=True, eq=False)
class DedekindGraph:
    """Directed acyclic graph on all maps of a poset, in canonical vertex order.

    Unrestricted edges f -> g exist when g is pointwise f or f+1 (so every
    vertex has a loop); the restricted variant additionally requires the top
    value to increase, which removes all loops.
    """

    poset: RankedPoset
    restricted: bool
    vertices: tuple[DedekindMap, ...]
    _data: _GraphData

    @property
    def size(self) -> int:
        return len(self.vertices)

    def successors(self, i: int) -> tuple[int, ...]:
        if self.restricted:
            return self._data.restricted_succ[i]
        merged = sorted(self._data.strict_succ[i] + (i,))
        return tuple(merged)

    @property
    def edge_count(self) -> int:
        strict = sum(len(s) for s in self._data.strict_succ)
        if self.restricted:
            return sum(len(s) for s in self._data.restricted_succ)
        return strict + self.size

    def adjacency_rows(self) -> list[list[int]]:
        rows = [[0] * self.size for _ in range(self.size)]
        for i in range(self.size):
            for j in self.successors(i):
                rows[i][j] = 1
        return rows

    def matrix_lines(self) -> list[str]:
        """Dense 0/1 dump, row-major, one row per line."""
        return [" ".join(str(x) for x in row) for row in self.adjacency_rows()]

    def to_dot(self) -> str:
        name = "restricted_dedekind_graph" if self.restricted else "dedekind_graph"
        lines = [f"digraph {name} {{"]
        for i, vm in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{vm}"];')
        for i in range(self.size):
            for j in self.successors(i):
                lines.append(f"  v{i} -> v{j};")
        lines.append("}")
        return "\n".join(lines)


def build_dedekind_graph(p: RankedPoset, restricted: bool = False) -> DedekindGraph:
    data = _graph_data(p)
    return DedekindGraph(p, restricted, data.vertices, data)
