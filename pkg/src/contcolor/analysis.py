"""Cantor-Bendixson structure, fixed points and finite windows of presentations."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import FiniteGraph
from .presentation import Kind, PeriodicOrbit, SystemPresentation, require_valid


def cb_derivative(S: SystemPresentation) -> SystemPresentation:
    """The set of limit points: the limit orbits, now isolated."""
    require_valid(S)
    return SystemPresentation(
        S.mode,
        tuple(PeriodicOrbit(o.id, o.length, Kind.ISOLATED, o.word) for o in S.orbits if o.is_limit),
    )


def cb_rank(S: SystemPresentation) -> int:
    require_valid(S)
    if S.is_empty:
        return 0
    return 2 if any(o.is_limit for o in S.orbits) else 1


@dataclass(frozen=True)
class FixedPointReport:
    fixed_limit_orbits: frozenset[str]
    isolated_fixed_orbits: frozenset[str]

    @property
    def is_open(self) -> bool:
        return not self.fixed_limit_orbits


def fixed_point_set(S: SystemPresentation) -> FixedPointReport:
    # Validation guarantees every limit orbit is approached by connector
    # points or by family members of size >= 2, none of which are fixed.
    require_valid(S)
    fixed = [o for o in S.orbits if o.length == 1]
    return FixedPointReport(
        frozenset(o.id for o in fixed if o.is_limit),
        frozenset(o.id for o in fixed if not o.is_limit),
    )


def remove_removables(S: SystemPresentation) -> SystemPresentation:
    """Drop the parts that never affect continuous 2-colorability.

    Isolated fixed points, isolated orbits of even length, and families of
    even member size whose limit orbit is not a fixed point.
    """
    require_valid(S)
    fixed_limits = {o.id for o in S.orbits if o.is_limit and o.length == 1}
    families = tuple(f for f in S.families if f.size % 2 or f.limit in fixed_limits)
    # a limit orbit that only dropped families converged to is now isolated
    reached = {f.limit for f in families} | {x for c in S.connectors for x in (c.left, c.right)}
    orbits = tuple(
        o if o.id in reached or not o.is_limit else PeriodicOrbit(o.id, o.length, Kind.ISOLATED, o.word)
        for o in S.orbits
    )
    orbits = tuple(o for o in orbits if o.is_limit or (o.length != 1 and o.length % 2))
    if orbits == S.orbits and len(families) == len(S.families):
        return S
    return SystemPresentation(S.mode, orbits, S.connectors, families)


def n0_bound(S: SystemPresentation) -> int:
    """Window radius used for the truncation oracle."""
    return 2 * S.max_length() * (len(S.connectors) + len(S.families) + 1)


def truncate(S: SystemPresentation, N: int, family_members: int | None = None) -> FiniteGraph:
    """Finite window onto the graph of f.

    Vertices are ("o", orbit, j), ("c", connector, k) for |k| <= N and
    ("f", family, n, i) for the first ``family_members`` (default N) members.
    """
    require_valid(S)
    if N < 1:
        raise ValueError("N must be positive")
    members = N if family_members is None else family_members
    verts, edges = [], []
    for o in S.orbits:
        pts = [("o", o.id, j) for j in range(o.length)]
        verts += pts
        if o.length > 1:
            edges += [(pts[j], pts[(j + 1) % o.length]) for j in range(o.length if o.length > 2 else 1)]
    for c in S.connectors:
        pts = [("c", c.id, k) for k in range(-N, N + 1)]
        verts += pts
        edges += list(zip(pts, pts[1:]))
    for f in S.families:
        for n in range(members):
            pts = [("f", f.id, n, i) for i in range(f.size)]
            verts += pts
            edges += [(pts[i], pts[(i + 1) % f.size]) for i in range(f.size if f.size > 2 else 1)]
    return FiniteGraph(verts, edges)


def vertex_name(v) -> str:
    return ":".join(map(str, v)) if isinstance(v, tuple) else str(v)
