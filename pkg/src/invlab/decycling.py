"""Decycling predicates and the family <-> matrix conversions.

A family decycles a graph when inverting it leaves no directed cycle.  For
tournaments the same information can be carried by a symmetric GF(2) matrix
whose off-diagonal 1-entries mark the arcs to flip; the gram matrix of a
family's characteristic vectors is always such a matrix, and the symmetric
factorization takes a matrix back to a family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .digraph import (
    OrientedGraph,
    Tournament,
    VertexFamily,
    _make,
    invert,
    is_acyclic,
    pair_index,
    topological_order,
)
from .gf2 import MatGF2, SymMatGF2, factor_symmetric, gram, rank

CERTIFICATE_SCHEMA = "invlab.certificate/1"


@dataclass(frozen=True)
class Certificate:
    """Witness that a claimed inv or tmr value is attained.

    kind "family" carries a VertexFamily with value = number of sets;
    kind "matrix" carries a SymMatGF2 with value = its rank.  `order` is the
    acyclic vertex order after applying the payload: the unique topological
    order for tournaments, the lexicographically least one otherwise.
    """

    kind: str
    payload: Union[VertexFamily, SymMatGF2]
    value: int
    order: tuple[int, ...]

    def to_json_dict(self) -> dict:
        out = {"schema": CERTIFICATE_SCHEMA, "kind": self.kind, "value": self.value}
        if self.kind == "family":
            out["family"] = self.payload.to_lists()
            out["n"] = self.payload.n
        else:
            out["matrix"] = self.payload.to_lists()
        out["order"] = list(self.order)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        kind = data.get("kind")
        if kind == "family":
            n = data.get("n")
            if n is None:
                n = max((v for s in data["family"] for v in s), default=-1) + 1
            payload: Union[VertexFamily, SymMatGF2] = VertexFamily.from_sets(
                n, data["family"]
            )
        elif kind == "matrix":
            payload = SymMatGF2.from_rows(data["matrix"])
        else:
            raise ValueError(f"unknown certificate kind {kind!r}")
        return cls(kind, payload, int(data["value"]), tuple(data["order"]))


def is_decycling_family(D: OrientedGraph, family: VertexFamily) -> bool:
    """True iff inverting the family leaves D acyclic."""
    if family.n != D.n:
        raise ValueError(f"family on {family.n} vertices, graph on {D.n}")
    return is_acyclic(invert(D, family))


def apply_matrix(T: Tournament, M: SymMatGF2) -> Tournament:
    """Flip exactly the arcs v_i v_j with m_ij = 1; diagonal entries are inert."""
    if not isinstance(T, OrientedGraph) or not T.is_tournament:
        raise TypeError("decycling matrices are defined for tournaments only")
    if M.n != T.n:
        raise ValueError(f"matrix of size {M.n}, tournament on {T.n}")
    n = T.n
    flips = 0
    for i in range(n):
        row = M.rows[i] >> (i + 1)
        j = i + 1
        while row:
            step = (row & -row).bit_length() - 1
            j += step
            flips |= 1 << pair_index(i, j, n)
            row >>= step + 1
            j += 1
    return _make(n, T.present, T.orient ^ flips)


def is_decycling_matrix(T: Tournament, M: SymMatGF2) -> bool:
    """True iff flipping the off-diagonal 1-entries makes T acyclic.

    The diagonal never touches the flipped graph (no loops) but does count
    toward the matrix rank.
    """
    return is_acyclic(apply_matrix(T, M))


def family_to_matrix(family: VertexFamily) -> SymMatGF2:
    """Gram matrix of the family's characteristic vectors."""
    chi = family.char_vectors()
    X = MatGF2(family.n, family.m, chi)
    return gram(X)


def matrix_to_family(M: SymMatGF2) -> VertexFamily:
    """A family whose gram matrix is M, via the symmetric factorization.

    Set X_i collects the vertices whose factor row has bit i set, so the
    family has rank(M) sets, or rank(M) + 1 when M is nonzero with an
    all-zero diagonal (and then rank(M) is even).
    """
    X = factor_symmetric(M)
    sets = [
        frozenset(v for v in range(M.n) if (X.rows[v] >> i) & 1) for i in range(X.ncols)
    ]
    return VertexFamily(M.n, tuple(sets))


def family_certificate(D: OrientedGraph, family: VertexFamily) -> Certificate:
    """Certificate that |family| inversions decycle D; raises if they do not."""
    after = invert(D, family)
    if not is_acyclic(after):
        raise ValueError("family does not decycle the graph")
    return Certificate("family", family, family.m, topological_order(after))


def matrix_certificate(T: Tournament, M: SymMatGF2) -> Certificate:
    """Certificate that M is a decycling matrix of its rank; raises otherwise."""
    after = apply_matrix(T, M)
    if not is_acyclic(after):
        raise ValueError("matrix does not decycle the tournament")
    return Certificate("matrix", M, rank(M), topological_order(after))


def certificate_error(D: OrientedGraph, cert: Certificate) -> str | None:
    """None when every claimed fact replays; otherwise the first mismatch."""
    if cert.kind == "family":
        family = cert.payload
        if not isinstance(family, VertexFamily):
            return "family certificate does not carry a vertex family"
        if family.n != D.n:
            return f"family on {family.n} vertices, graph on {D.n}"
        if family.m != cert.value:
            return f"claimed value {cert.value} but family has {family.m} sets"
        after = invert(D, family)
    elif cert.kind == "matrix":
        M = cert.payload
        if not isinstance(M, SymMatGF2):
            return "matrix certificate does not carry a symmetric matrix"
        if not D.is_tournament:
            return "matrix certificate against a non-tournament"
        if M.n != D.n:
            return f"matrix of size {M.n}, tournament on {D.n}"
        if rank(M) != cert.value:
            return f"claimed value {cert.value} but matrix rank is {rank(M)}"
        after = apply_matrix(D, M)
    else:
        return f"unknown certificate kind {cert.kind!r}"
    if not is_acyclic(after):
        return "payload does not decycle the graph"
    achieved = topological_order(after)
    if achieved != cert.order:
        return f"replayed order {achieved} differs from recorded {cert.order}"
    return None
