"""Continuous colorings of rank <= 2 systems.

For two colors the problem compiles to one orientation bit per even limit
orbit and one XOR equation per connector: a connector z with anchors (a, b)
on orbits (L, R) forces x_L + x_R = par(a) + par(b) over GF(2), and the
coloring c(f^k z) = x_L + par(a + k) is continuous exactly when all such
equations hold.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from . import kernels
from .analysis import fixed_point_set, remove_removables, truncate
from .graphs import FiniteGraph
from .presentation import SystemPresentation, require_valid

ALEPH0 = "inf"


def parse_kappa(k) -> Union[int, str]:
    """Accepts 0, 1, 2, 3, any larger integer (treated like 3) or inf/aleph0."""
    if isinstance(k, str):
        s = k.strip().lower()
        if s in ("inf", "aleph0", "aleph_0", "ℵ0", "ℵ₀"):
            return ALEPH0
        if s.isdigit():
            return int(s)
        raise ValueError(f"bad number of colors: {k!r}")
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError(f"bad number of colors: {k!r}")
    return k


# ----------------------------------------------------------------- results


@dataclass(frozen=True)
class NonemptySpace:
    kind = "NonemptySpace"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class EdgeExists:
    element: str
    kind = "EdgeExists"

    def to_dict(self):
        return {"kind": self.kind, "element": self.element}


@dataclass(frozen=True)
class FixedPointNotOpen:
    orbit: str
    kind = "FixedPointNotOpen"

    def to_dict(self):
        return {"kind": self.kind, "orbit": self.orbit}


@dataclass(frozen=True)
class OddFiniteOrbit:
    element: str
    length: int
    kind = "OddFiniteOrbit"

    def to_dict(self):
        return {"kind": self.kind, "element": self.element, "length": self.length}


@dataclass(frozen=True)
class CycleStep:
    connector: str
    source: str
    target: str
    forward: bool  # traversed from the connector's left orbit to its right orbit


@dataclass(frozen=True)
class OddConstraintCycle:
    steps: tuple[CycleStep, ...]
    kind = "OddConstraintCycle"

    @property
    def connectors(self) -> list[str]:
        return [s.connector for s in self.steps]

    def to_dict(self):
        return {
            "kind": self.kind,
            "connectors": self.connectors,
            "orbits": [s.source for s in self.steps],
            "forward": [s.forward for s in self.steps],
        }


Obstruction = Union[NonemptySpace, EdgeExists, FixedPointNotOpen, OddFiniteOrbit, OddConstraintCycle]


@dataclass(frozen=True)
class EmptyWitness:
    kind = "Empty"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class ConstantWitness:
    kind = "Constant"

    def to_dict(self):
        return {"kind": self.kind, "color": 0}


@dataclass(frozen=True)
class OpenFixedPointWitness:
    """The fixed point set is open, which is enough for a continuous 3-coloring."""

    isolated_fixed: tuple[str, ...]
    kind = "OpenFixedPoints"

    def to_dict(self):
        return {"kind": self.kind, "isolated_fixed": list(self.isolated_fixed)}


@dataclass(frozen=True)
class TwoColoringWitness:
    """Colors: point j of orbit o gets orientation[o] + par(j); f^k(z) gets
    phase[z] + par(k); point i of any member of family F gets phase[F] + par(i)."""

    orientation: tuple[tuple[str, int], ...]
    connector_phase: tuple[tuple[str, int], ...]
    family_phase: tuple[tuple[str, int], ...] = ()
    kind = "TwoColoring"

    def color(self, v) -> int:
        tag, name = v[0], v[1]
        if tag == "o":
            return (dict(self.orientation)[name] + v[2]) % 2
        if tag == "c":
            return (dict(self.connector_phase)[name] + v[2]) % 2
        return (dict(self.family_phase)[name] + v[3]) % 2

    def flip(self, orbit: str) -> "TwoColoringWitness":
        o = tuple((k, b ^ (k == orbit)) for k, b in self.orientation)
        return TwoColoringWitness(o, self.connector_phase, self.family_phase)

    def to_dict(self):
        return {
            "kind": self.kind,
            "orientation": dict(self.orientation),
            "connector_phase": dict(self.connector_phase),
            "family_phase": dict(self.family_phase),
            "rule": "c(orbit o, point j) = orientation[o] xor par(j); c(f^k z) = connector_phase[z] xor par(k)",
        }


Witness = Union[EmptyWitness, ConstantWitness, OpenFixedPointWitness, TwoColoringWitness]


@dataclass(frozen=True)
class ColoringDecision:
    kappa: Union[int, str]
    witness: Witness | None = None
    obstruction: Obstruction | None = None

    @property
    def colorable(self) -> bool:
        return self.witness is not None

    @property
    def answer(self) -> str:
        return "Colorable" if self.colorable else "NotColorable"

    def to_dict(self):
        d = {"answer": self.answer, "kappa": self.kappa}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.obstruction is not None:
            d["obstruction"] = self.obstruction.to_dict()
        return d


# --------------------------------------------------------- parity equations


class PreconditionViolated(ValueError):
    def __init__(self, element: str, reason: str):
        super().__init__(f"{element}: {reason}")
        self.element = element


@dataclass(frozen=True)
class Equation:
    left: str
    right: str
    rhs: int
    connector: str


@dataclass(frozen=True)
class ParityConstraintSystem:
    variables: tuple[str, ...]
    equations: tuple[Equation, ...] = field(default=())

    def solve(self) -> dict[str, int] | None:
        """Union-find with parities; None when inconsistent."""
        parent = {v: v for v in self.variables}
        par = {v: 0 for v in self.variables}

        def find(v):
            path = []
            while parent[v] != v:
                path.append(v)
                v = parent[v]
            acc = 0
            for u in reversed(path):
                acc ^= par[u]
                par[u] = acc
                parent[u] = v
            return v

        for e in self.equations:
            ra, rb = find(e.left), find(e.right)
            pa, pb = par[e.left] if e.left != ra else 0, par[e.right] if e.right != rb else 0
            if ra == rb:
                if pa ^ pb != e.rhs:
                    return None
            else:
                parent[rb] = ra
                par[rb] = pa ^ pb ^ e.rhs
        out = {}
        for v in self.variables:
            r = find(v)
            out[v] = par[v] if v != r else 0
        return out

    def is_consistent(self) -> bool:
        return self.solve() is not None

    def shortest_odd_cycle(self) -> tuple[CycleStep, ...] | None:
        """Shortest cycle of equations whose right-hand sides sum to 1.

        Every equation e = (L, R) is tried in id order: breadth-first search
        over (variable, parity) states for a path R -> L avoiding e that closes
        an odd cycle.  A globally shortest odd closed walk is a simple cycle.
        """
        eqs = sorted(self.equations, key=lambda e: e.connector)
        best = None
        for e in eqs:
            path = self._odd_path(eqs, e)
            if path is not None and (best is None or len(path) < len(best)):
                best = path
        return tuple(best) if best is not None else None

    @staticmethod
    def _odd_path(eqs, skip):
        want = 1 ^ skip.rhs
        start, goal = (skip.right, 0), (skip.left, want)
        first = CycleStep(skip.connector, skip.left, skip.right, True)
        prev = {start: None}
        todo = deque([start])
        while todo:
            state = todo.popleft()
            if state == goal:
                steps = []
                while prev[state] is not None:
                    state, step = prev[state]
                    steps.append(step)
                return [first] + steps[::-1]
            v, p = state
            for e in eqs:
                if e is skip:
                    continue
                for a, b, fwd in ((e.left, e.right, True), (e.right, e.left, False)):
                    if a == v:
                        nxt = (b, p ^ e.rhs)
                        if nxt not in prev:
                            prev[nxt] = (state, CycleStep(e.connector, a, b, fwd))
                            todo.append(nxt)
        return None


def constraint_system(S: SystemPresentation) -> ParityConstraintSystem:
    require_valid(S)
    for o in S.orbits:
        if o.length == 1 and o.is_limit:
            raise PreconditionViolated(o.id, "fixed limit orbit")
        if o.length % 2:
            raise PreconditionViolated(o.id, f"odd orbit of length {o.length}")
    for f in S.families:
        if f.size % 2:
            raise PreconditionViolated(f.id, f"odd family members of size {f.size}")
    variables = tuple(o.id for o in S.orbits if o.is_limit)
    eqs = tuple(
        Equation(c.left, c.right, (c.left_anchor + c.right_anchor) % 2, c.id) for c in S.connectors
    )
    return ParityConstraintSystem(variables, eqs)


# ------------------------------------------------------------------ decide


def _smallest_odd_orbit(S: SystemPresentation) -> OddFiniteOrbit | None:
    cands = [(o.length, 0, o.id) for o in S.orbits if o.length >= 3 and o.length % 2]
    cands += [(f.size, 1, f.id) for f in S.families if f.size >= 3 and f.size % 2]
    if not cands:
        return None
    length, _, element = min(cands)
    return OddFiniteOrbit(element, length)


def decide_continuous_coloring(S: SystemPresentation, kappa) -> ColoringDecision:
    kappa = parse_kappa(kappa)
    require_valid(S)
    if kappa == 0:
        return ColoringDecision(kappa, EmptyWitness()) if S.is_empty else ColoringDecision(kappa, None, NonemptySpace())
    if kappa == 1:
        for o in S.orbits:
            if o.length > 1:
                return ColoringDecision(kappa, None, EdgeExists(o.id))
        for x in S.connectors + S.families:
            return ColoringDecision(kappa, None, EdgeExists(x.id))
        return ColoringDecision(kappa, ConstantWitness())
    report = fixed_point_set(S)
    if not report.is_open:
        return ColoringDecision(kappa, None, FixedPointNotOpen(min(report.fixed_limit_orbits)))
    if kappa == ALEPH0 or kappa >= 3:
        return ColoringDecision(kappa, OpenFixedPointWitness(tuple(sorted(report.isolated_fixed_orbits))))
    return _decide_two(S, kappa)


def _decide_two(S: SystemPresentation, kappa) -> ColoringDecision:
    core = remove_removables(S)
    odd = _smallest_odd_orbit(core)
    if odd is not None:
        return ColoringDecision(kappa, None, odd)
    system = constraint_system(core)
    x = system.solve()
    if x is None:
        return ColoringDecision(kappa, None, OddConstraintCycle(system.shortest_odd_cycle()))
    orientation = {o.id: x.get(o.id, 0) for o in S.orbits}
    phase = {c.id: (x[c.left] + c.left_anchor) % 2 for c in S.connectors}
    fam = {f.id: x.get(f.limit, 0) for f in S.families}
    return ColoringDecision(
        kappa,
        TwoColoringWitness(tuple(sorted(orientation.items())), tuple(sorted(phase.items())), tuple(sorted(fam.items()))),
    )


def decide(S: SystemPresentation, kappa) -> ColoringDecision:
    return decide_continuous_coloring(S, kappa)


# ----------------------------------------------------------- verification


def verify_obstruction(S: SystemPresentation, ob: Obstruction) -> bool:
    """Re-check an obstruction against the presentation it was read from."""
    require_valid(S)
    orbits = {o.id: o for o in S.orbits}
    if isinstance(ob, NonemptySpace):
        return not S.is_empty
    if isinstance(ob, EdgeExists):
        o = orbits.get(ob.element)
        return (o is not None and o.length > 1) or ob.element in {x.id for x in S.connectors + S.families}
    if isinstance(ob, FixedPointNotOpen):
        o = orbits.get(ob.orbit)
        return o is not None and o.is_limit and o.length == 1
    if isinstance(ob, OddFiniteOrbit):
        sizes = {o.id: o.length for o in S.orbits} | {f.id: f.size for f in S.families}
        return sizes.get(ob.element) == ob.length and ob.length >= 3 and ob.length % 2 == 1
    if isinstance(ob, OddConstraintCycle):
        conns = {c.id: c for c in S.connectors}
        steps, total = ob.steps, 0
        if not steps or steps[-1].target != steps[0].source:
            return False
        for a, b in zip(steps, steps[1:]):
            if a.target != b.source:
                return False
        for s in steps:
            c = conns.get(s.connector)
            if c is None or (c.left, c.right) != ((s.source, s.target) if s.forward else (s.target, s.source)):
                return False
            if orbits[c.left].length % 2 or orbits[c.right].length % 2:
                return False
            total += c.left_anchor + c.right_anchor
        return total % 2 == 1 and len({s.connector for s in steps}) == len(steps)
    return False


def verify_witness(S: SystemPresentation, witness: Witness, N: int) -> bool:
    require_valid(S)
    if isinstance(witness, EmptyWitness):
        return S.is_empty
    if isinstance(witness, ConstantWitness):
        return not truncate(S, N).edges
    if isinstance(witness, OpenFixedPointWitness):
        rep = fixed_point_set(S)
        return rep.is_open and set(witness.isolated_fixed) == set(rep.isolated_fixed_orbits)
    if not isinstance(witness, TwoColoringWitness):
        return False
    orient, phase, fam = dict(witness.orientation), dict(witness.connector_phase), dict(witness.family_phase)
    if set(orient) != {o.id for o in S.orbits} or set(phase) != {c.id for c in S.connectors}:
        return False
    if set(fam) != {f.id for f in S.families}:
        return False
    G = truncate(S, N)
    if any(witness.color(u) == witness.color(v) for u, v in G.edge_list()):
        return False
    lengths = {o.id: o.length for o in S.orbits}

    def orbit_color(oid, j):
        return (orient[oid] + j % lengths[oid]) % 2

    # Tails beyond the window: the rule is 2-periodic in q, so q0 and q0+1 cover all q.
    for c in S.connectors:
        lam_l, lam_r = lengths[c.left], lengths[c.right]
        for lam, oid, anchor, sign in ((lam_l, c.left, c.left_anchor, -1), (lam_r, c.right, c.right_anchor, 1)):
            q0 = N // lam + 1
            for r in range(lam):
                for q in (q0, q0 + 1):
                    if (phase[c.id] + sign * q * lam + r) % 2 != orbit_color(oid, anchor + r):
                        return False
    for f in S.families:
        for i in range(f.size):
            if (fam[f.id] + i) % 2 != orbit_color(f.limit, i):
                return False
    return True


# ------------------------------------------------------- finite two-coloring


@dataclass(frozen=True)
class BipartiteResult:
    coloring: dict | None = None
    odd_cycle: tuple | None = None

    def __bool__(self):
        return self.coloring is not None


def finite_two_colorable(G: FiniteGraph) -> BipartiteResult:
    """Breadth-first 2-coloring; on failure an odd cycle (as a vertex list)."""
    color, parent, depth = {}, {}, {}
    for s in G.vertices:
        if s in color:
            continue
        color[s], parent[s], depth[s] = 0, None, 0
        todo = deque([s])
        while todo:
            u = todo.popleft()
            for w in G.adjacency[u]:
                if w not in color:
                    color[w], parent[w], depth[w] = 1 - color[u], u, depth[u] + 1
                    todo.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(None, _tree_cycle(u, w, parent, depth))
    return BipartiteResult(color)


def _tree_cycle(u, w, parent, depth):
    a, b = [u], [w]
    while depth[a[-1]] > depth[b[-1]]:
        a.append(parent[a[-1]])
    while depth[b[-1]] > depth[a[-1]]:
        b.append(parent[b[-1]])
    while a[-1] != b[-1]:
        a.append(parent[a[-1]])
        b.append(parent[b[-1]])
    return tuple(a + b[-2::-1])


def is_odd_cycle(G: FiniteGraph, cycle) -> bool:
    n = len(cycle)
    return (
        n % 2 == 1
        and len(set(cycle)) == n
        and all(G.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))
    )


def exhaustive_two_colorable(G: FiniteGraph) -> bool:
    return kernels.exhaustive_two_colorable(len(G), G.edge_array())


def constrained_truncation_colorable(S: SystemPresentation, N: int) -> bool:
    """Independent check of 2-colorability on a finite window.

    The window of each connector must be properly colored and its two end
    points must carry the color of the limit point they shadow, which is
    what eventual agreement with the limit orbits requires.
    """
    require_valid(S)
    if not fixed_point_set(S).is_open:
        return False
    G = truncate(S, N)
    lengths = {o.id: o.length for o in S.orbits}
    verts, edges = list(G.vertices), G.edge_list()
    for c in S.connectors:
        ends = (
            (("c", c.id, -N), ("o", c.left, (c.left_anchor - N) % lengths[c.left]), "L"),
            (("c", c.id, N), ("o", c.right, (c.right_anchor + N) % lengths[c.right]), "R"),
        )
        for window_end, limit_point, side in ends:
            mid = ("eq", c.id, side)
            verts.append(mid)
            edges += [(window_end, mid), (mid, limit_point)]
    return bool(finite_two_colorable(FiniteGraph(verts, edges)))
