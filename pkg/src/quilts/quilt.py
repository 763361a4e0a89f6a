"""Quilts: rank-table-like value assignments on a product of two posets.

A quilt of type (P, Q) assigns a natural number to every cell (x, y) so that
cells on the bottom borders are 0, the top corner equals min(rank P, rank Q),
and every cover step in the product raises the value by 0 or 1.  Under the
entrywise order these form a distributive lattice; meet and join are the
entrywise min and max.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .asm import CsmMatrix, MonotoneTriangle, csm_to_mt, format_jump_set
from .errors import PosetError, QuiltValidationError, Violation
from .poset import RankedPoset, boolean_element_masks, make_chain, poset_from_json


@dataclass(frozen=True)
class Quilt:
    """An immutable quilt; values[x][y] indexes P-element x and Q-element y.

    Construction does not re-validate; use validate_quilt for untrusted data.
    """

    p: RankedPoset
    q: RankedPoset
    values: tuple[tuple[int, ...], ...]

    def value(self, x: int, y: int) -> int:
        return self.values[x][y]

    def leq(self, other: "Quilt") -> bool:
        _check_same_type(self, other)
        return all(
            a <= b for ra, rb in zip(self.values, other.values) for a, b in zip(ra, rb)
        )

    def __le__(self, other: "Quilt") -> bool:
        return self.leq(other)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p.to_json_dict(),
            "q": self.q.to_json_dict(),
            "values": [list(r) for r in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @cached_property
    def total(self) -> int:
        return sum(sum(r) for r in self.values)


def quilt_from_json(text: str | dict) -> Quilt:
    d = json.loads(text) if isinstance(text, str) else text
    return validate_quilt(
        poset_from_json(d["p"]),
        poset_from_json(d["q"]),
        [tuple(r) for r in d["values"]],
    )


def _check_same_type(f: Quilt, g: Quilt) -> None:
    if f.p != g.p or f.q != g.q:
        raise PosetError("quilts live in different lattices")


def find_violation(p: RankedPoset, q: RankedPoset, values) -> Violation | None:
    """First failing axiom in canonical scan order (P-index major), or None.

    Each cell is checked for the zero border, then the corner value when it
    is the top corner, then growth along its lower covers in the product.
    """
    rows = values
    if len(rows) != p.size or any(len(r) != q.size for r in rows):
        raise PosetError("value table shape must be |P| x |Q|")
    corner = min(p.rank, q.rank)
    for x in range(p.size):
        row = rows[x]
        for y in range(q.size):
            v = row[y]
            if (x == 0 or y == 0) and v != 0:
                return Violation("zero_border", (x, y))
            if x == p.size - 1 and y == q.size - 1 and v != corner:
                return Violation("corner", (x, y))
            for x2 in p.lower_covers[x]:
                if v - rows[x2][y] not in (0, 1):
                    return Violation("growth", (x, y), ((x2, y), (x, y)))
            for y2 in q.lower_covers[y]:
                if v - row[y2] not in (0, 1):
                    return Violation("growth", (x, y), ((x, y2), (x, y)))
    return None


def validate_quilt(p: RankedPoset, q: RankedPoset, values) -> Quilt:
    """Check the three axioms and return the quilt; raises with the first violation."""
    table = tuple(tuple(r) for r in values)
    bad = find_violation(p, q, table)
    if bad is not None:
        raise QuiltValidationError(bad)
    return Quilt(p, q, table)


def bottom_quilt(p: RankedPoset, q: RankedPoset) -> Quilt:
    m = max(p.rank, q.rank)
    return Quilt(
        p,
        q,
        tuple(
            tuple(max(0, rx + ry - m) for ry in q.ranks) for rx in p.ranks
        ),
    )


def top_quilt(p: RankedPoset, q: RankedPoset) -> Quilt:
    return Quilt(
        p,
        q,
        tuple(tuple(min(rx, ry) for ry in q.ranks) for rx in p.ranks),
    )


def meet(f: Quilt, g: Quilt) -> Quilt:
    _check_same_type(f, g)
    return Quilt(
        f.p,
        f.q,
        tuple(
            tuple(min(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(f.values, g.values)
        ),
    )


def join(f: Quilt, g: Quilt) -> Quilt:
    _check_same_type(f, g)
    return Quilt(
        f.p,
        f.q,
        tuple(
            tuple(max(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(f.values, g.values)
        ),
    )


def quilt_rank(f: Quilt) -> int:
    """Height of f in its lattice: total value excess over the bottom quilt."""
    return f.total - bottom_quilt(f.p, f.q).total


# -- covers via the difference graph ------------------------------------------


def difference_graph(
    f: Quilt, g: Quilt
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Vertices where f < g, and directed edges encoding blocked increments.

    An edge from cell a to cell b means the value of f at b prevents
    incrementing f at a: either b covers a with equal values, or a covers b
    with f dropping by one.  Returns (vertices, edge index pairs); vertex
    order is canonical (P-index major).
    """
    _check_same_type(f, g)
    if not f.leq(g):
        raise PosetError("difference graph needs f <= g entrywise")
    p, q = f.p, f.q
    verts = [
        (x, y)
        for x in range(p.size)
        for y in range(q.size)
        if f.values[x][y] < g.values[x][y]
    ]
    index = {c: i for i, c in enumerate(verts)}
    edges: list[tuple[int, int]] = []
    for i, (x, y) in enumerate(verts):
        v = f.values[x][y]
        ups = [(x2, y) for x2 in p.covers[x]] + [(x, y2) for y2 in q.covers[y]]
        downs = [(x2, y) for x2 in p.lower_covers[x]] + [
            (x, y2) for y2 in q.lower_covers[y]
        ]
        for c in ups:
            if f.values[c[0]][c[1]] == v and c in index:
                edges.append((i, index[c]))
        for c in downs:
            if f.values[c[0]][c[1]] == v - 1 and c in index:
                edges.append((i, index[c]))
    return verts, edges


def covers_up(f: Quilt, g: Quilt | None = None) -> list[Quilt]:
    """All quilts covering f inside the interval [f, g]; g defaults to the top.

    The sinks of the difference graph are exactly the cells where f can be
    incremented by one.
    """
    if g is None:
        g = top_quilt(f.p, f.q)
    verts, edges = difference_graph(f, g)
    has_out = [False] * len(verts)
    for a, _ in edges:
        has_out[a] = True
    out = []
    for i, (x, y) in enumerate(verts):
        if has_out[i]:
            continue
        rows = [list(r) for r in f.values]
        rows[x][y] += 1
        out.append(Quilt(f.p, f.q, tuple(tuple(r) for r in rows)))
    return out


# -- chain quilts: jump sets and the triangle form ----------------------------


def jump_sets(f: Quilt) -> tuple[tuple[int, ...], ...]:
    """Per-P-element jump positions of a chain quilt (Q must be a chain)."""
    q = f.q
    if q.ranks != tuple(range(q.size)):
        raise PosetError("jump sets are defined for chain quilts only")
    n = q.size - 1
    return tuple(
        tuple(i for i in range(1, n + 1) if row[i] == row[i - 1] + 1)
        for row in f.values
    )


def from_jump_sets(p: RankedPoset, n: int, jumps) -> Quilt:
    """Rebuild a chain quilt of type (P, chain of rank n) from its jump sets."""
    rows = []
    for sets in jumps:
        s = set(sets)
        if s and (min(s) < 1 or max(s) > n):
            raise PosetError("jump positions must lie in 1..n")
        acc = 0
        row = [0]
        for i in range(1, n + 1):
            if i in s:
                acc += 1
            row.append(acc)
        rows.append(tuple(row))
    return validate_quilt(p, make_chain(n), rows)


def mt_form(f: Quilt) -> str:
    """Text rendering of a chain quilt's jump sets, one rank level per line,
    top level first; sets print brace-free when every entry is a digit."""
    p = f.p
    n = f.q.size - 1
    js = jump_sets(f)
    lines = []
    for level in range(p.rank, -1, -1):
        sets = [
            format_jump_set(js[x], n) for x in range(p.size) if p.ranks[x] == level
        ]
        lines.append("  ".join(sets))
    return "\n".join(lines)


def restrict_to_chains(f: Quilt, p_chain, q_chain) -> CsmMatrix:
    """The corner sum table carried by a pair of maximal chains."""
    p, q = f.p, f.q
    for chain, poset in ((p_chain, p), (q_chain, q)):
        if len(chain) != poset.rank + 1 or chain[0] != 0 or chain[-1] != poset.size - 1:
            raise PosetError("need full maximal chains from bottom to top")
        for a, b in zip(chain, chain[1:]):
            if b not in poset.covers[a]:
                raise PosetError(f"{a} -> {b} is not a cover")
    return CsmMatrix(
        tuple(tuple(f.values[x][y] for y in q_chain) for x in p_chain)
    )


def quilt_to_csm(f: Quilt) -> CsmMatrix:
    """Identify a chain-by-chain quilt with its corner sum matrix."""
    p, q = f.p, f.q
    if p.ranks != tuple(range(p.size)) or q.ranks != tuple(range(q.size)):
        raise PosetError("only chain-by-chain quilts are corner sum matrices")
    return CsmMatrix(f.values)


def csm_to_quilt(b: CsmMatrix) -> Quilt:
    k, n = b.shape
    return Quilt(make_chain(k), make_chain(n), b.values)


def mt_of_chain_quilt(f: Quilt) -> MonotoneTriangle:
    return csm_to_mt(quilt_to_csm(f))


# -- symmetries ----------------------------------------------------------------


def switch(f: Quilt) -> Quilt:
    """The involutive isomorphism onto the opposite type: switch(f)(x,y) = f(y,x)."""
    return Quilt(
        f.q,
        f.p,
        tuple(tuple(f.values[x][y] for x in range(f.p.size)) for y in range(f.q.size)),
    )


def is_automorphism(p: RankedPoset, gamma) -> bool:
    g = tuple(gamma)
    if sorted(g) != list(range(p.size)):
        return False
    cover_set = {(i, j) for i, ups in enumerate(p.covers) for j in ups}
    return all((g[i], g[j]) in cover_set for i, j in cover_set)


def is_antiautomorphism(p: RankedPoset, phi) -> bool:
    g = tuple(phi)
    if sorted(g) != list(range(p.size)):
        return False
    cover_set = {(i, j) for i, ups in enumerate(p.covers) for j in ups}
    return all((g[j], g[i]) in cover_set for i, j in cover_set)


def gamma_map(f: Quilt, gamma) -> Quilt:
    """Relabel the P side along an automorphism: (x,y) -> f(gamma(x), y)."""
    g = tuple(gamma)
    if not is_automorphism(f.p, g):
        raise PosetError("gamma is not an automorphism of P")
    return Quilt(f.p, f.q, tuple(f.values[g[x]] for x in range(f.p.size)))


def phi_map(f: Quilt, phi) -> Quilt:
    """The antiautomorphism (x,y) -> rank y - f(phi(x), y); needs rank P >= rank Q."""
    g = tuple(phi)
    if f.p.rank < f.q.rank:
        raise PosetError("phi map requires rank P >= rank Q")
    if not is_antiautomorphism(f.p, g):
        raise PosetError("phi is not an antiautomorphism of P")
    qranks = f.q.ranks
    return Quilt(
        f.p,
        f.q,
        tuple(
            tuple(qranks[y] - f.values[g[x]][y] for y in range(f.q.size))
            for x in range(f.p.size)
        ),
    )


def d4_orbit(f: Quilt, phi) -> list[Quilt]:
    """Orbit of f under the dihedral group generated by switch and the phi map.

    Defined for square types (P, P) with an involutive antiautomorphism phi;
    the orbit has at most 8 elements, listed in discovery order.
    """
    if f.p != f.q:
        raise PosetError("dihedral orbits need a square type (P, P)")
    g = tuple(phi)
    if not is_antiautomorphism(f.p, g) or any(g[g[i]] != i for i in range(f.p.size)):
        raise PosetError("phi must be an involutive antiautomorphism")
    orbit: list[Quilt] = [f]
    seen = {f.values}
    frontier = [f]
    while frontier:
        nxt = []
        for h in frontier:
            for image in (switch(h), phi_map(h, g)):
                if image.values not in seen:
                    seen.add(image.values)
                    orbit.append(image)
                    nxt.append(image)
        frontier = nxt
    return orbit


def boolean_complement(n: int) -> tuple[int, ...]:
    """The subset-complement antiautomorphism of the rank-n boolean lattice,
    as a permutation of element indices."""
    masks = boolean_element_masks(n)
    index = {m: i for i, m in enumerate(masks)}
    full = (1 << n) - 1
    return tuple(index[full ^ m] for m in masks)


def chain_reversal(n: int) -> tuple[int, ...]:
    """The i -> n - i antiautomorphism of the rank-n chain."""
    return tuple(n - i for i in range(n + 1))
