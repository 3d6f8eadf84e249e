"""Oriented graphs and tournaments with bit-packed pair state.

Vertices are 0..n-1.  Every unordered pair {i, j} with i < j lives at a
fixed lexicographic index, and a graph is two bitmasks over those indices:
`present` (does the pair carry an arc) and `orient` (1 means i -> j,
0 means j -> i; forced to 0 on absent pairs).  A tournament is the special
case where every pair is present.

Values are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 64  # a vertex subset always fits one machine word


class ParseError(ValueError):
    """Malformed graph text; the message names the offending token."""


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int, n: int) -> int:
    """Lexicographic index of pair {i, j} among (0,1),(0,2),...,(n-2,n-1)."""
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _pairs(n: int):
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


class OrientedGraph:
    """Loop-free digraph with at most one arc per vertex pair."""

    __slots__ = ("n", "present", "orient")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        _check_vertex_count(n)
        present = 0
        orient = 0
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"arc {u}>{v}: vertex out of range for n={n}")
            if u == v:
                raise ParseError(f"arc {u}>{v}: self-loop")
            p = pair_index(u, v, n)
            bit = 1 << p
            want = bit if u < v else 0
            if present & bit:
                have = orient & bit
                if have == want:
                    raise ParseError(f"arc {u}>{v}: duplicate arc")
                raise ParseError(f"arc {u}>{v}: conflicts with opposite arc")
            present |= bit
            orient |= want
        self.n = n
        self.present = present
        self.orient = orient

    @property
    def is_tournament(self) -> bool:
        return self.present == (1 << pair_count(self.n)) - 1

    def arc(self, u: int, v: int) -> bool:
        """True iff the arc u -> v is present."""
        if u == v:
            return False
        p = pair_index(u, v, self.n)
        if not (self.present >> p) & 1:
            return False
        return bool((self.orient >> p) & 1) == (u < v)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as (tail, head), in pair-index order."""
        out = []
        for i, j in _pairs(self.n):
            p = pair_index(i, j, self.n)
            if (self.present >> p) & 1:
                out.append((i, j) if (self.orient >> p) & 1 else (j, i))
        return out

    def out_masks(self) -> list[int]:
        """Per-vertex bitmask of out-neighbours."""
        masks = [0] * self.n
        for i, j in _pairs(self.n):
            p = pair_index(i, j, self.n)
            if (self.present >> p) & 1:
                if (self.orient >> p) & 1:
                    masks[i] |= 1 << j
                else:
                    masks[j] |= 1 << i
        return masks

    def __eq__(self, other):
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self.present == other.present
            and self.orient == other.orient
        )

    def __hash__(self):
        return hash((self.n, self.present, self.orient))

    def __repr__(self):
        return f"{type(self).__name__}({encode(self)!r})"


class Tournament(OrientedGraph):
    """Oriented graph with exactly one arc per pair; one orientation bit per pair."""

    __slots__ = ()

    def __init__(self, n: int, bits: int = 0):
        _check_vertex_count(n)
        m = pair_count(n)
        if not 0 <= bits < (1 << m):
            raise ValueError(f"orientation bits out of range for n={n}")
        self.n = n
        self.present = (1 << m) - 1
        self.orient = bits


def _check_vertex_count(n: int) -> None:
    if not (0 <= n <= MAX_VERTICES):
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")


def _make(n: int, present: int, orient: int) -> OrientedGraph:
    """Internal constructor from validated masks; picks Tournament when complete."""
    full = (1 << pair_count(n)) - 1
    cls = Tournament if present == full else OrientedGraph
    g = object.__new__(cls)
    g.n = n
    g.present = present
    g.orient = orient & present
    return g


@dataclass(frozen=True)
class VertexFamily:
    """Ordered list of vertex subsets X_1..X_m; empty sets are permitted.

    The characteristic vector of vertex v is the m-bit word whose bit i is
    set iff v is in sets[i].
    """

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        _check_vertex_count(self.n)
        for idx, s in enumerate(self.sets):
            if not all(0 <= v < self.n for v in s):
                raise ValueError(f"set {idx} has a vertex outside 0..{self.n - 1}")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "VertexFamily":
        return cls(n, tuple(frozenset(s) for s in sets))

    @property
    def m(self) -> int:
        return len(self.sets)

    def char_vectors(self) -> list[int]:
        vecs = [0] * self.n
        for i, s in enumerate(self.sets):
            bit = 1 << i
            for v in s:
                vecs[v] |= bit
        return vecs

    def to_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


# ---------------------------------------------------------------------------
# text codec


def decode(text: str) -> OrientedGraph:
    """Parse "n:bits" (tournament) or "n;u>v,u>v,..." (oriented graph).

    Tournament bits are listed in lexicographic pair order, one character
    per pair, '1' meaning i -> j for the pair (i, j) with i < j.
    """
    text = text.strip()
    if ":" in text:
        head, _, bits = text.partition(":")
        n = _parse_count(head)
        m = pair_count(n)
        if len(bits) != m:
            raise ParseError(
                f"token {bits!r}: expected {m} orientation bits for n={n}, got {len(bits)}"
            )
        mask = 0
        for k, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << k
            elif ch != "0":
                raise ParseError(f"token {ch!r}: orientation bits must be 0 or 1")
        return _make(n, (1 << m) - 1, mask)
    if ";" in text:
        head, _, body = text.partition(";")
        n = _parse_count(head)
        arcs = []
        if body:
            for token in body.split(","):
                tail, sep, headv = token.partition(">")
                if not sep:
                    raise ParseError(f"token {token!r}: expected u>v")
                try:
                    u, v = int(tail), int(headv)
                except ValueError:
                    raise ParseError(f"token {token!r}: endpoints must be integers") from None
                arcs.append((u, v))
        g = OrientedGraph(n, arcs)
        return _make(n, g.present, g.orient)
    raise ParseError(f"token {text!r}: expected 'n:bits' or 'n;arcs'")


def encode(D: OrientedGraph) -> str:
    """Inverse of decode; tournaments use the bit form."""
    n = D.n
    if D.is_tournament:
        bits = "".join("1" if (D.orient >> k) & 1 else "0" for k in range(pair_count(n)))
        return f"{n}:{bits}"
    return f"{n};" + ",".join(f"{u}>{v}" for u, v in D.arcs())


def _parse_count(token: str) -> int:
    try:
        n = int(token)
    except ValueError:
        raise ParseError(f"token {token!r}: vertex count must be an integer") from None
    if not (0 <= n <= MAX_VERTICES):
        raise ParseError(f"token {token!r}: vertex count outside 0..{MAX_VERTICES}")
    return n


def graph_json(D: OrientedGraph) -> dict:
    """JSON rendering used in certificates and reports."""
    return {"n": D.n, "arcs": [[u, v] for u, v in D.arcs()]}


# ---------------------------------------------------------------------------
# structural operations


def is_acyclic(D: OrientedGraph) -> bool:
    """True iff D has no directed cycle.

    Tournaments use the out-degree test (acyclic iff the out-degree multiset
    is {0, 1, ..., n-1}); other graphs run source elimination.
    """
    n = D.n
    if D.is_tournament:
        degs = sorted(m.bit_count() for m in D.out_masks())
        return degs == list(range(n))
    return _topological_order_or_none(D) is not None


def topological_order(D: OrientedGraph) -> tuple[int, ...]:
    """Lexicographically least topological order (unique for tournaments)."""
    order = _topological_order_or_none(D)
    if order is None:
        raise ValueError("graph is cyclic; no topological order")
    return order


def _topological_order_or_none(D: OrientedGraph):
    n = D.n
    out = D.out_masks()
    indeg = [0] * n
    for v in range(n):
        m = out[v]
        while m:
            w = (m & -m).bit_length() - 1
            indeg[w] += 1
            m &= m - 1
    remaining = set(range(n))
    order = []
    for _ in range(n):
        src = next((v for v in sorted(remaining) if indeg[v] == 0), None)
        if src is None:
            return None
        order.append(src)
        remaining.remove(src)
        m = out[src]
        while m:
            w = (m & -m).bit_length() - 1
            indeg[w] -= 1
            m &= m - 1
    return tuple(order)


def invert(D: OrientedGraph, family: VertexFamily) -> OrientedGraph:
    """Invert each set of the family in D.

    An arc flips iff its endpoints lie together in an odd number of sets,
    i.e. iff their characteristic vectors have odd dot product; absent pairs
    stay absent.  The set order never matters.
    """
    if family.n != D.n:
        raise ValueError(f"family on {family.n} vertices applied to graph on {D.n}")
    chi = family.char_vectors()
    flips = 0
    n = D.n
    for i, j in _pairs(n):
        if (chi[i] & chi[j]).bit_count() & 1:
            flips |= 1 << pair_index(i, j, n)
    return _make(n, D.present, D.orient ^ (flips & D.present))


def reverse(D: OrientedGraph) -> OrientedGraph:
    """Reverse every arc; an involution."""
    return _make(D.n, D.present, D.orient ^ D.present)


def dijoin(D1: OrientedGraph, D2: OrientedGraph) -> OrientedGraph:
    """Disjoint union with every cross arc oriented from D1 to D2.

    D1 keeps vertices 0..n1-1; D2's vertices are shifted up by n1.
    """
    n1, n2 = D1.n, D2.n
    n = n1 + n2
    _check_vertex_count(n)
    present = 0
    orient = 0
    for i, j in _pairs(n1):
        p = pair_index(i, j, n1)
        q = pair_index(i, j, n)
        present |= ((D1.present >> p) & 1) << q
        orient |= ((D1.orient >> p) & 1) << q
    for i, j in _pairs(n2):
        p = pair_index(i, j, n2)
        q = pair_index(i + n1, j + n1, n)
        present |= ((D2.present >> p) & 1) << q
        orient |= ((D2.orient >> p) & 1) << q
    for i in range(n1):
        for j in range(n1, n):
            q = pair_index(i, j, n)
            present |= 1 << q
            orient |= 1 << q  # i < j, so bit 1 means i -> j
    return _make(n, present, orient)


def njoin(graphs: Sequence[OrientedGraph]) -> OrientedGraph:
    """Left fold of dijoin; njoin([D]) is D itself."""
    if not graphs:
        raise ValueError("njoin needs at least one operand")
    acc = graphs[0]
    for g in graphs[1:]:
        acc = dijoin(acc, g)
    return acc


def induced(D: OrientedGraph, vertices: Iterable[int]) -> OrientedGraph:
    """Induced subgraph on the given vertices, reindexed by increasing index."""
    sub = sorted(set(vertices))
    if sub and not (0 <= sub[0] and sub[-1] < D.n):
        raise ValueError(f"vertex subset {sub} not within 0..{D.n - 1}")
    k = len(sub)
    present = 0
    orient = 0
    for a in range(k):
        for b in range(a + 1, k):
            p = pair_index(sub[a], sub[b], D.n)
            q = pair_index(a, b, k)
            present |= ((D.present >> p) & 1) << q
            orient |= ((D.orient >> p) & 1) << q
    return _make(k, present, orient)


def transitive_tournament(order: Sequence[int]) -> Tournament:
    """Tournament whose arcs all point from earlier to later in `order`."""
    n = len(order)
    pos = {v: k for k, v in enumerate(order)}
    if len(pos) != n or sorted(pos) != list(range(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    bits = 0
    for i, j in _pairs(n):
        if pos[i] < pos[j]:
            bits |= 1 << pair_index(i, j, n)
    return _make(n, (1 << pair_count(n)) - 1, bits)
