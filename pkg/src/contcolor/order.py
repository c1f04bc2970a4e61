"""Injective continuous homomorphisms between the canonical systems.

Comparisons among canonical elements are decided by fixed arguments (orbit
sizes, finiteness, colorings, forced tail behaviour).  A backtracking search
for injective homomorphisms on finite windows serves as a falsifier.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .analysis import truncate
from .basis import BasisElement, make, ptuple_equivalent, _skeleton
from .graphs import FiniteGraph, cycle_graph, is_homomorphism
from .presentation import PTuple, SystemPresentation, require_valid
from .skeleton import find_isomorphism

DEFAULT_BUDGET = 2_000_000

FOUND, NONE, UNKNOWN = "found", "none", "unknown"


@dataclass(frozen=True)
class HomResult:
    status: str
    mapping: dict | None = None
    nodes: int = 0

    def __bool__(self):
        return self.status == FOUND


def search_order(G: FiniteGraph) -> list:
    """Highest degree first, then grow along placed neighbours.

    Ties are broken by position in ``G.vertices``.
    """
    pos = G.index
    placed, order = set(), []
    weight = {v: 0 for v in G.vertices}
    remaining = set(G.vertices)
    while remaining:
        v = min(remaining, key=lambda u: (-weight[u], -G.degree(u), pos[u]))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
        for w in G.adjacency[v]:
            if w in remaining:
                weight[w] += 1
    return order


def homomorphism_search(
    G: FiniteGraph,
    H: FiniteGraph,
    injective: bool = True,
    allowed: dict | None = None,
    budget: int = DEFAULT_BUDGET,
) -> HomResult:
    """Backtracking search for a (possibly injective) homomorphism G -> H.

    ``allowed`` optionally maps a G-vertex to the H-vertices it may use.
    """
    if injective and len(G) > len(H):
        return HomResult(NONE)
    order = search_order(G)
    gi, hi = G.index, H.index
    rank = {v: p for p, v in enumerate(order)}
    ptr, idx = [0], []
    for v in order:
        idx += sorted(gi[w] for w in G.adjacency[v] if rank[w] < rank[v])
        ptr.append(len(idx))
    ok = np.ones((len(G), len(H)), dtype=np.bool_)
    if allowed:
        for v, targets in allowed.items():
            row = np.zeros(len(H), dtype=np.bool_)
            row[[hi[t] for t in targets]] = True
            ok[gi[v]] = row
    status, mapping, nodes = kernels.backtrack_hom(
        np.array([gi[v] for v in order], dtype=np.int64),
        np.array(ptr, dtype=np.int64),
        np.array(idx, dtype=np.int64),
        H.adjacency_matrix(),
        ok,
        injective,
        budget,
    )
    if status == kernels.FOUND:
        return HomResult(FOUND, {v: H.vertices[mapping[gi[v]]] for v in G.vertices}, nodes)
    return HomResult(NONE if status == kernels.EXHAUSTED else UNKNOWN, None, nodes)


def injective_hom_exists(G: FiniteGraph, H: FiniteGraph, budget: int = DEFAULT_BUDGET) -> HomResult:
    return homomorphism_search(G, H, True, None, budget)


# ------------------------------------------------------ truncation falsifier


@dataclass(frozen=True)
class TruncationEvidence:
    status: str  # "refuted" | "embedding" | "unknown"
    mapping: dict | None = None
    nodes: int = 0

    @property
    def refuted(self) -> bool:
        return self.status == "refuted"

    def to_dict(self, name=str):
        d = {"status": self.status, "nodes": self.nodes}
        if self.mapping is not None:
            d["mapping"] = {name(k): name(v) for k, v in sorted(self.mapping.items(), key=lambda kv: name(kv[0]))}
        return d


def _size2_nowhere_dense(S: SystemPresentation) -> bool:
    # points with f^2 = id form a nowhere dense set iff none of them is isolated
    return not any(o.length <= 2 and not o.is_limit for o in S.orbits) and not any(f.size <= 2 for f in S.families)


def _finite_orbit_points(S: SystemPresentation, G: FiniteGraph) -> dict[int, list]:
    sizes = {o.id: o.length for o in S.orbits}
    fams = {f.id: f.size for f in S.families}
    out: dict[int, list] = {}
    for v in G.vertices:
        if v[0] == "o":
            out.setdefault(sizes[v[1]], []).append(v)
        elif v[0] == "f":
            out.setdefault(fams[v[1]], []).append(v)
    return out


def truncation_refutes(
    a: SystemPresentation,
    b: SystemPresentation,
    N: int,
    budget: int = DEFAULT_BUDGET,
    slack: int | None = None,
) -> TruncationEvidence:
    """Look for an injective homomorphism of a's window into b's window.

    Finite orbits of size >= 3 (and of size 2 when such points are nowhere
    dense in a) may only land on orbits of the same size, and connector
    windows only on connector windows, since an injective homomorphism maps
    each such orbit onto an orbit.  No embedding refutes a <= b.
    """
    require_valid(a)
    require_valid(b)
    slack = N if slack is None else slack
    Ga = truncate(a, N)
    Gb = truncate(b, N + slack, family_members=max(N + slack, len(Ga)))
    b_sizes = _finite_orbit_points(b, Gb)
    b_conn = [v for v in Gb.vertices if v[0] == "c"]
    strict2 = _size2_nowhere_dense(a)
    a_sizes = {o.id: o.length for o in a.orbits}
    a_fams = {f.id: f.size for f in a.families}
    allowed = {}
    for v in Ga.vertices:
        if v[0] == "c":
            allowed[v] = b_conn
            continue
        size = a_sizes[v[1]] if v[0] == "o" else a_fams[v[1]]
        if size >= 3 or (size == 2 and strict2):
            allowed[v] = b_sizes.get(size, [])
    res = homomorphism_search(Ga, Gb, True, allowed, budget)
    if res.status == FOUND:
        return TruncationEvidence("embedding", res.mapping, res.nodes)
    return TruncationEvidence("refuted" if res.status == NONE else "unknown", None, res.nodes)


# ------------------------------------------------------ canonical comparison


@dataclass(frozen=True)
class Direction:
    holds: bool
    reason: str  # "Identity" | "Isomorphism" | "FixedPointSequence" | a refutation reason
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        d = {"holds": self.holds, "reason": self.reason}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass(frozen=True)
class ComparisonVerdict:
    relation: str  # Below | Above | Equivalent | Incomparable
    forward: Direction  # a <= b
    backward: Direction  # b <= a

    def to_dict(self):
        return {"relation": self.relation, "certificate": {"forward": self.forward.to_dict(), "backward": self.backward.to_dict()}}


_DUAL = {"Below": "Above", "Above": "Below", "Equivalent": "Equivalent", "Incomparable": "Incomparable"}


def sigma_p_equivalent(p: PTuple, q: PTuple) -> bool:
    return ptuple_equivalent(p, q)


def _periodic_sizes(e: BasisElement) -> Counter:
    """Sizes >= 2 of periodic orbits that an embedding must match one-to-one."""
    S = make(e)
    return Counter(o.length for o in S.orbits if o.length >= 2)


def _size_excess(a: BasisElement, b: BasisElement) -> bool:
    ca, cb = _periodic_sizes(a), _periodic_sizes(b)
    return any(ca[k] > cb[k] for k in ca)


def _direction(a: BasisElement, b: BasisElement) -> Direction:
    ta, tb = a.tag, b.tag
    if ta == "OddCycle":
        if tb != "OddCycle":
            return Direction(False, "ColoringSeparation", {"note": "odd cycle into a bipartite graph"})
        if a.q == b.q:
            return Direction(True, "Identity")
        res = injective_hom_exists(cycle_graph(2 * a.q + 3), cycle_graph(2 * b.q + 3))
        return Direction(False, "ExhaustiveSearch", {"nodes": res.nodes})
    if tb == "OddCycle":
        return Direction(False, "SizeMismatch", {"note": "infinite into finite"})
    if ta == "X1":
        if tb == "X1":
            return Direction(True, "Identity")
        if tb == "NSigma":
            # pairs {f^{-2n-2}(z), f^{-2n-1}(z)} converge to the fixed point
            return Direction(True, "FixedPointSequence", {"fixed": "y0", "connector": "z", "pairs": "f^(-2n-2)(z), f^(-2n-1)(z)"})
        return Direction(False, "ColoringSeparation", {"note": "no continuous aleph0-coloring on the left, one on the right"})
    if tb == "X1":
        return Direction(False, "SizeMismatch", {"note": "infinite orbit into orbits of size <= 2"})
    if ta == "NSigma" and tb == "NSigma":
        if a.n == b.n:
            return Direction(True, "Identity")
        if _size_excess(a, b):
            return Direction(False, "SizeMismatch")
        return Direction(False, "ForcedContradiction", {"note": "the connector tails cannot converge as required"})
    if ta != tb:
        return Direction(False, "ColoringSeparation")
    if sigma_p_equivalent(a.p, b.p):
        cert = find_isomorphism(_skeleton(a.p), _skeleton(b.p))
        return Direction(True, "Isomorphism", cert or {})
    if _size_excess(a, b):
        return Direction(False, "SizeMismatch")
    if a.p.l != b.p.l:
        return Direction(False, "OrbitCountMismatch")
    return Direction(False, "ForcedContradiction", {"note": "minimality forces an isomorphism and none exists"})


def compare_canonical(a: BasisElement, b: BasisElement) -> ComparisonVerdict:
    fwd, bwd = _direction(a, b), _direction(b, a)
    if fwd.holds and bwd.holds:
        rel = "Equivalent"
    elif fwd.holds:
        rel = "Below"
    elif bwd.holds:
        rel = "Above"
    else:
        rel = "Incomparable"
    return ComparisonVerdict(rel, fwd, bwd)


TRUNCATION_REASONS = ("ExhaustiveSearch", "SizeMismatch")


def embedding_on_windows(a: BasisElement, b: BasisElement, d: Direction, N: int) -> dict | None:
    """Explicit window map realising a positive direction, or None."""
    Sa, Sb = make(a), make(b)
    if d.reason == "Identity" or d.reason == "Isomorphism":
        Ga = truncate(Sa, N)
        if d.reason == "Identity":
            return {v: v for v in Ga.vertices}
        m = {}
        for v in Ga.vertices:
            if v[0] == "o":
                o = d.detail["orbits"][v[1]]
                lam = Sb.orbit(o["to"]).length
                m[v] = ("o", o["to"], (o["direction"] * v[2] + o["rotation"]) % lam)
            else:
                c = d.detail["connectors"][v[1]]
                m[v] = ("c", c["to"], c["direction"] * v[2])
        return m
    if d.reason == "FixedPointSequence":
        Ga = truncate(Sa, N)
        m = {}
        for v in Ga.vertices:
            if v[0] == "o":
                m[v] = ("o", "y0", 0)
            else:
                m[v] = ("c", "z", -2 * v[2] - 2 + v[3])
        return m
    return None


def verify_direction(a: BasisElement, b: BasisElement, d: Direction, N: int = 6, budget: int = DEFAULT_BUDGET) -> bool:
    if d != _direction(a, b):
        return False
    if d.holds:
        m = embedding_on_windows(a, b, d, N)
        Ga = truncate(make(a), N)
        Gb = truncate(make(b), 3 * N + 2)
        return m is not None and is_homomorphism(Ga, Gb, m)
    if d.reason in TRUNCATION_REASONS:
        return truncation_refutes(make(a), make(b), N, budget).refuted
    return True


def verify_verdict(a: BasisElement, b: BasisElement, v: ComparisonVerdict, N: int = 6) -> bool:
    return (
        v == compare_canonical(a, b)
        and verify_direction(a, b, v.forward, N)
        and verify_direction(b, a, v.backward, N)
    )
