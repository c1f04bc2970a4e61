"""Finite samples of antichain families.

* closed graphs X_nu of Cantor-Bendixson rank two indexed by sequences nu,
* tail equivalence of eventually periodic sequences and the forcing replay
  that refutes embeddings between non tail-equivalent X_nu,
* prime-coded sequences with pairwise finite intersections,
* Kneser graphs and the sequence (3*2^p + 1, 2^p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

import sympy

from .graphs import FiniteGraph
from .order import DEFAULT_BUDGET, FOUND, NONE, HomResult, homomorphism_search, search_order

# ------------------------------------------------------------ sequences


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(x) for x in self.preperiod))
        object.__setattr__(self, "period", tuple(int(x) for x in self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(x < 1 for x in self.preperiod + self.period):
            raise ValueError("entries must be positive")

    def __call__(self, n: int) -> int:
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> list[int]:
        return [self(i) for i in range(n)]

    def partial_sum(self, k: int) -> int:
        """sum of nu(i) for i < k"""
        return sum(self(i) for i in range(k))

    def shift(self, d: int = 1) -> "EventuallyPeriodicSeq":
        """The sequence n -> nu(n + d)."""
        pre, per = self.preperiod, self.period
        if d <= len(pre):
            return EventuallyPeriodicSeq(pre[d:], per)
        r = (d - len(pre)) % len(per)
        return EventuallyPeriodicSeq((), per[r:] + per[:r])

    def __str__(self):
        return ",".join(map(str, self.preperiod)) + ";" + ",".join(map(str, self.period))

    def to_dict(self):
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicSeq":
        """'PRE;PERIOD' with comma separated entries, PRE possibly empty."""
        if ";" not in text:
            return cls((), parse_list(text))
        pre, per = text.split(";", 1)
        return cls(parse_list(pre), parse_list(per))


def parse_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def et_equivalent(nu: EventuallyPeriodicSeq, mu: EventuallyPeriodicSeq) -> bool:
    """Do nu and mu agree after dropping finitely many terms from each?"""
    p, q = len(nu.period), len(mu.period)
    window = lcm(p, q)
    for l in range(len(nu.preperiod), len(nu.preperiod) + p):
        for m in range(len(mu.preperiod), len(mu.preperiod) + q):
            if all(nu(l + n) == mu(m + n) for n in range(window)):
                return True
    return False


# -------------------------------------------------------------- X_nu


def successor(kappa: int, e: int) -> int:
    """Tail letter of the points e^n (e+)^inf: e+1, wrapping 2kappa-2 to 0."""
    return (e + 1) % (2 * kappa - 1)


def _limit(e: int):
    return ("lim", e)


def _beta(e: int, exponent: int):
    # the point e^exponent (e+)^inf; ("beta", 0, 1) is 01^inf
    return ("beta", e, exponent)


@dataclass(frozen=True)
class XnuSample:
    kappa: int
    nu: EventuallyPeriodicSeq
    depth: int
    graph: FiniteGraph

    def label(self, v) -> str:
        if v[0] == "lim":
            return f"{v[1]}^inf"
        e, x = v[1], v[2]
        return f"{e}^{x} {successor(self.kappa, e)}^inf"

    def to_dot(self) -> str:
        return self.graph.to_dot("X_nu", self.label)

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "nu": self.nu.to_dict(),
            "depth": self.depth,
            "graph": self.graph.to_document(self.label),
        }


def block_members(kappa: int, k: int) -> list[int]:
    """Letters present in block k besides 0."""
    return list(range(1, kappa)) if k % 2 else list(range(kappa, 2 * kappa - 1))


def make_x_nu(kappa: int, nu: EventuallyPeriodicSeq, K: int) -> XnuSample:
    """Induced subgraph of G_nu on the limit points, 01^inf and blocks k < K."""
    if kappa < 2 or K < 1:
        raise ValueError("need kappa >= 2 and K >= 1")
    low = list(range(kappa))
    high = [0] + list(range(kappa, 2 * kappa - 1))
    verts = [_limit(e) for e in range(2 * kappa - 1)] + [_beta(0, 1)]
    edges = [(_limit(a), _limit(b)) for a, b in combinations(low, 2)]
    edges += [(_limit(a), _limit(b)) for a, b in combinations(high, 2)]
    edges.append((_limit(0), _beta(0, 1)))
    s = 0
    for k in range(K):
        letters = block_members(kappa, k)
        for j in range(nu(k)):
            x = 2 + j + s
            block = [_beta(0, x)] + [_beta(e, x) for e in letters]
            verts += block
            edges += list(combinations(block, 2))
            # the previous 0-point ties into this level; at k = 0 only j = 0 has a partner
            if k > 0 or j == 0:
                edges += [(_beta(0, x - 1), _beta(e, x)) for e in letters]
        s += nu(k)
    return XnuSample(kappa, nu, K, FiniteGraph(verts, edges))


def x_nu_counts(kappa: int, nu: EventuallyPeriodicSeq, K: int) -> tuple[int, int]:
    """Closed-form vertex and edge counts of make_x_nu."""
    total = nu.partial_sum(K)
    c2 = comb(kappa, 2)
    vertices = 2 * kappa + kappa * total
    edges = 2 * c2 + 1 + (kappa - 1) + c2 * total + (kappa - 1) * (total - nu(0))
    return vertices, edges


@dataclass(frozen=True)
class ForcedTailMatch:
    branch: str
    k0: int
    K0: int
    J0: int
    bound: int
    branches: dict

    kind = "ForcedTailMatch"

    def to_dict(self):
        return {
            "kind": self.kind,
            "branch": self.branch,
            "alignment": {"k0": self.k0, "K0": self.K0, "J0": self.J0},
            "bound": self.bound,
            "branches": self.branches,
        }


@dataclass(frozen=True)
class Contradiction:
    index: int
    bound: int
    branches: dict

    kind = "Contradiction"

    def to_dict(self):
        return {"kind": self.kind, "index": self.index, "bound": self.bound, "branches": self.branches}


def _replay(nu, mu, k0, K0, branch, bound):
    """First failing index of the forced equalities, or None if all hold."""
    if branch == "canonical":
        # odd blocks of nu land on even blocks of mu
        J0, offset = mu(2 * K0) - nu(2 * k0 + 1), 2 * K0 + 1
    else:
        J0, offset = mu(2 * K0 + 1) - nu(2 * k0 + 1), 2 * K0 + 2
    if J0 < 0:
        return J0, 0
    for n in range(bound):
        if nu(2 * k0 + 2 + n) != mu(offset + n):
            return J0, n + 1
    return J0, None


def x_nu_forced_compare(kappa: int, nu: EventuallyPeriodicSeq, mu: EventuallyPeriodicSeq, bound: int):
    """Replay the forcing argument for an embedding of X_nu into X_mu.

    From some block 2k0+1 on, the 0-points of nu must be carried onto
    consecutive 0-points of mu, block boundaries onto block boundaries.
    Odd blocks go to even blocks ("canonical" branch, eta_1 >= kappa) or to
    odd blocks ("symmetric" branch).  Every start k0 over one period and
    every target block K0 is tried; a Contradiction means all of them fail.
    """
    if kappa < 2:
        raise ValueError("kappa must be at least 2")
    start = len(nu.preperiod) // 2  # least k0 with 2k0+1 past the preperiod
    k0s = range(start, start + len(nu.period))
    K0s = range(0, (len(mu.preperiod) + 1) // 2 + len(mu.period) + 2)
    summary, first_match, worst = {}, None, 0
    for branch in ("canonical", "symmetric"):
        failures, match = [], None
        for k0 in k0s:
            for K0 in K0s:
                J0, fail = _replay(nu, mu, k0, K0, branch, bound)
                if fail is None:
                    match = match or (k0, K0, J0)
                else:
                    failures.append(fail)
        if match:
            summary[branch] = {"outcome": "match", "alignment": {"k0": match[0], "K0": match[1], "J0": match[2]}}
            first_match = first_match or (branch, match)
        else:
            summary[branch] = {"outcome": "contradiction", "index": max(failures)}
            worst = max(worst, max(failures))
    summary["branches_differ"] = summary["canonical"]["outcome"] != summary["symmetric"]["outcome"]
    if first_match:
        branch, (k0, K0, J0) = first_match
        return ForcedTailMatch(branch, k0, K0, J0, bound, summary)
    return Contradiction(worst, bound, summary)


# ------------------------------------------------------ prime codes


def prime_coded(alpha, shifted: bool = False) -> list[int]:
    """Prefix products p_0^(a0+1) ... p_n^(an+1) for n < len(alpha).

    With ``shifted`` the exponents are a_i + 2 and 1 is subtracted from
    each product.  ``alpha`` is a bit string or a sequence of naturals.
    """
    digits = [int(c) for c in alpha]
    if any(d < 0 for d in digits):
        raise ValueError("exponents must be natural numbers")
    bump = 2 if shifted else 1
    out, acc = [], 1
    for i, d in enumerate(digits):
        acc *= sympy.prime(i + 1) ** (d + bump)
        out.append(acc - 1 if shifted else acc)
    return out


def nu_alpha(alpha, count: int) -> list[int]:
    """First ``count`` terms of the increasing enumeration of S_alpha."""
    if count > len(alpha):
        raise ValueError("alpha is too short for the requested prefix")
    return prime_coded(alpha)[:count]


# ------------------------------------------------------------ Kneser


def kneser_graph(n: int, k: int) -> FiniteGraph:
    if not (n >= k >= 1):
        raise ValueError("need n >= k >= 1")
    verts = list(combinations(range(1, n + 1), k))
    edges = [(a, b) for a, b in combinations(verts, 2) if not set(a) & set(b)]
    return FiniteGraph(verts, edges)


def complete_graph(c: int) -> FiniteGraph:
    return FiniteGraph(list(range(c)), list(combinations(range(c), 2)))


@dataclass(frozen=True)
class ChromaticResult:
    status: str  # "found" | "notfound" | "unknown"
    value: int | None
    coloring: dict | None = None

    def to_dict(self):
        return {"status": self.status, "chi": self.value}


def colorable(G: FiniteGraph, c: int, budget: int = DEFAULT_BUDGET) -> HomResult:
    """Proper c-coloring search; the first vertex in search order gets color 0."""
    if len(G) == 0:
        return HomResult(FOUND, {})
    if c < 1:
        return HomResult(NONE)
    first = search_order(G)[0]
    return homomorphism_search(G, complete_graph(c), False, {first: [0]}, budget)


def chromatic_number(G: FiniteGraph, max_colors: int, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """Least c <= max_colors with a proper c-coloring."""
    if len(G) == 0:
        return ChromaticResult("found", 0, {})
    for c in range(1, max_colors + 1):
        res = colorable(G, c, budget)
        if res.status == FOUND:
            return ChromaticResult("found", c, res.mapping)
        if res.status != NONE:
            return ChromaticResult("unknown", None)
    return ChromaticResult("notfound", None)


@dataclass(frozen=True)
class KneserRow:
    p: int
    n: int
    k: int
    ratio: Fraction
    vertices: int
    chi: int

    def to_dict(self):
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "vertices": str(self.vertices),
            "chi": self.chi,
        }


@dataclass(frozen=True)
class KneserReport:
    rows: tuple[KneserRow, ...]
    ratios_decreasing: bool
    vertex_counts_increasing: bool
    chromatic_distinct: bool

    @property
    def ok(self) -> bool:
        return self.ratios_decreasing and self.vertex_counts_increasing and self.chromatic_distinct

    def to_dict(self):
        return {
            "rows": [r.to_dict() for r in self.rows],
            "conditions": {
                "ratios_decreasing": self.ratios_decreasing,
                "vertex_counts_increasing": self.vertex_counts_increasing,
                "chromatic_distinct": self.chromatic_distinct,
            },
            "ok": self.ok,
        }


def kneser_sequence_check(p_max: int) -> KneserReport:
    """Check (n_p, k_p) = (3*2^p + 1, 2^p) for p <= p_max with exact arithmetic."""
    rows = []
    for p in range(p_max + 1):
        n, k = 3 * 2**p + 1, 2**p
        rows.append(KneserRow(p, n, k, Fraction(n, k), comb(n, k), n - 2 * k + 2))
    r = [row.ratio for row in rows]
    v = [row.vertices for row in rows]
    chis = [row.chi for row in rows]
    return KneserReport(
        tuple(rows),
        all(x >= 3 for x in r) and all(b < a for a, b in zip(r, r[1:])),
        all(b > a for a, b in zip(v, v[1:])),
        len(set(chis)) == len(chis),
    )
