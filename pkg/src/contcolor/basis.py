"""Canonical minimal systems below a system with no continuous 2-coloring."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .coloring import FixedPointNotOpen, OddConstraintCycle, OddFiniteOrbit, decide_continuous_coloring
from .analysis import remove_removables
from .presentation import (
    Mode,
    PTuple,
    SystemPresentation,
    make_n_sigma,
    make_odd_cycle,
    make_sigma_p,
    make_x1,
    require_valid,
)
from .skeleton import Skeleton, equivalent


@dataclass(frozen=True)
class BasisElement:
    tag: str
    q: int | None = None
    n: int | None = None
    p: PTuple | None = None

    @property
    def params(self) -> dict:
        if self.tag == "OddCycle":
            return {"q": self.q}
        if self.tag == "NSigma":
            return {"n": self.n}
        if self.tag == "SigmaP":
            return {"p": self.p.to_dict()}
        return {}

    def to_dict(self) -> dict:
        return {"tag": self.tag, "params": self.params}

    @classmethod
    def from_dict(cls, d: dict) -> "BasisElement":
        tag, params = d.get("tag"), d.get("params", {})
        if tag == "OddCycle":
            return odd_cycle(params["q"])
        if tag == "X1":
            return x1()
        if tag == "NSigma":
            return n_sigma(params["n"])
        if tag == "SigmaP":
            return sigma_p(PTuple.from_dict(params["p"]))
        raise ValueError(f"unknown basis element tag: {tag!r}")

    def __str__(self) -> str:
        if self.tag == "OddCycle":
            return f"OddCycle({self.q})"
        if self.tag == "NSigma":
            return f"NSigma({self.n})"
        if self.tag == "SigmaP":
            return f"SigmaP({self.p})"
        return "X1"

    @property
    def is_finite(self) -> bool:
        return self.tag == "OddCycle"


def odd_cycle(q: int) -> BasisElement:
    if q < 0:
        raise ValueError("q must be a natural number")
    return BasisElement("OddCycle", q=q)


def x1() -> BasisElement:
    return BasisElement("X1")


def n_sigma(n: int) -> BasisElement:
    if n < 0:
        raise ValueError("n must be a natural number")
    if n >= 3 and n % 2:
        return odd_cycle((n - 3) // 2)
    return BasisElement("NSigma", n=n)


def sigma_p(p: PTuple) -> BasisElement:
    if not p.is_valid():
        raise ValueError("invalid p: " + ", ".join(p.problems()))
    return BasisElement("SigmaP", p=p)


def make(e: BasisElement) -> SystemPresentation:
    if e.tag == "OddCycle":
        return make_odd_cycle(e.q)
    if e.tag == "X1":
        return make_x1()
    if e.tag == "NSigma":
        return make_n_sigma(e.n)
    return make_sigma_p(e.p)


# -------------------------------------------------------------- dispatch


class ColorableInput(ValueError):
    pass


class NoFixedWitness(ValueError):
    pass


def _mode(mode) -> Mode:
    if isinstance(mode, Mode):
        return mode
    return {"homeo": Mode.HOMEOMORPHISM, "homeomorphism": Mode.HOMEOMORPHISM, "subshift": Mode.SUBSHIFT}[mode]


def basis_below(S: SystemPresentation, mode=Mode.HOMEOMORPHISM, jobs: int = 1) -> BasisElement:
    mode = _mode(mode)
    decision = decide_continuous_coloring(S, 2)
    if decision.colorable:
        raise ColorableInput("the system has a continuous 2-coloring")
    ob = decision.obstruction
    if isinstance(ob, FixedPointNotOpen):
        if mode is Mode.HOMEOMORPHISM:
            return x1()
        return n_sigma(subshift_fixed_case(S))
    if isinstance(ob, OddFiniteOrbit):
        return odd_cycle((ob.length - 3) // 2)
    return sigma_p(canon_p(extract_p(S), jobs))


def subshift_fixed_case(S: SystemPresentation) -> int:
    """n such that the n-th one-fixed-point subshift sits below S."""
    require_valid(S)
    if S.mode is not Mode.SUBSHIFT:
        raise NoFixedWitness("not a subshift presentation")
    for a in sorted(o.id for o in S.orbits if o.is_limit and o.length == 1):
        for c in sorted((c for c in S.connectors if a in (c.left, c.right)), key=lambda c: c.id):
            other = c.right if c.left == a else c.left
            if other == a:
                return 0
            # the other tail's orbit has length l+1: 1 for another fixed point,
            # odd >= 3 for an odd cycle, even otherwise
            return S.orbit(other).length
    raise NoFixedWitness("no connector tail at a fixed point")


def extract_p(S: SystemPresentation) -> PTuple:
    """Read a p off a shortest inconsistent cycle of parity equations.

    The cycle's first connector closes it and is walked from its left orbit
    (which becomes orbit l) to its right orbit (orbit 0).  Base points are
    rotated along the chain so every other connector has both anchors at 0,
    and the leftover displacement of the closing connector gives m.
    """
    decision = decide_continuous_coloring(S, 2)
    ob = decision.obstruction
    if not isinstance(ob, OddConstraintCycle):
        raise ValueError("extract_p needs an inconsistent parity cycle")
    core = remove_removables(S)
    conns = {c.id: c for c in core.connectors}
    lengths = {o.id: o.length for o in core.orbits}
    closing, chain = ob.steps[0], ob.steps[1:]
    u = [closing.target] + [s.target for s in chain]
    assert u[-1] == closing.source
    lambdas = tuple(lengths[x] for x in u)
    epsilons = tuple(0 if s.forward else 1 for s in chain)
    base = {u[0]: 0}
    for s in chain:
        c = conns[s.connector]
        if s.forward:
            base[c.right] = (c.right_anchor + base[c.left] - c.left_anchor) % lengths[c.right]
        else:
            base[c.left] = (c.left_anchor + base[c.right] - c.right_anchor) % lengths[c.left]
    c = conns[closing.connector]
    rho = (c.right_anchor + base[c.left] - c.left_anchor - base[c.right]) % lambdas[0]
    return PTuple(len(chain), lambdas, -rho % lambdas[0], epsilons)


# --------------------------------------------------------- canonical p


def _skeleton(p: PTuple) -> Skeleton:
    return Skeleton.of(make_sigma_p(p))


def ptuple_equivalent(p: PTuple, q: PTuple) -> bool:
    if p.l != q.l:
        return False
    return equivalent(_skeleton(p), _skeleton(q))


def box(l: int, cap: int) -> list[PTuple]:
    """{l} x {even lambda <= cap}^{l+1} x {odd m < lambda_0} x 2^l, in lexicographic order."""
    evens = range(2, cap + 1, 2)
    out = []
    for lams in product(evens, repeat=l + 1):
        for m in range(1, lams[0], 2):
            for eps in product((0, 1), repeat=l):
                out.append(PTuple(l, lams, m, eps))
    return out


def _filter(args):
    p, cands = args
    return [q for q in cands if ptuple_equivalent(p, q)]


def enumerate_Fp(p: PTuple, jobs: int = 1) -> list[PTuple]:
    """Members of the finite box around p that are equivalent to p, sorted."""
    if not p.is_valid():
        raise ValueError("invalid p: " + ", ".join(p.problems()))
    cands = box(p.l, max(p.lambdas))
    if jobs > 1 and len(cands) > 64:
        chunks = [cands[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            found = [q for part in ex.map(_filter, [(p, ch) for ch in chunks]) for q in part]
    else:
        found = _filter((p, cands))
    return sorted(set(found), key=PTuple.key)


def canon_p(p: PTuple, jobs: int = 1) -> PTuple:
    return enumerate_Fp(p, jobs)[0]
