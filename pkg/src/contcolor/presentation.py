"""Finite presentations of compact systems with Cantor-Bendixson rank at most two.

A presentation lists the periodic orbits (limit or isolated), the connector
orbits whose two tails converge to limit orbits, and families of isolated
finite orbits converging to a limit orbit.  Points of an orbit of length
``lam`` are indexed ``0..lam-1`` with ``f(point j) = point j+1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Any, Iterable


class Mode(str, Enum):
    HOMEOMORPHISM = "homeomorphism"
    SUBSHIFT = "subshift"


class Kind(str, Enum):
    LIMIT = "limit"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class PeriodicOrbit:
    id: str
    length: int
    kind: Kind
    word: tuple[str, ...] | None = None

    @property
    def is_limit(self) -> bool:
        return self.kind is Kind.LIMIT


@dataclass(frozen=True)
class Connector:
    """Orbit of a point z with f^{-q*lam_L}(z) -> left point and f^{q*lam_R}(z) -> right point."""

    id: str
    left: str
    left_anchor: int
    right: str
    right_anchor: int
    middle: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Family:
    """Infinitely many isolated orbits of size ``size`` converging to ``limit``."""

    id: str
    size: int
    limit: str


@dataclass(frozen=True)
class SystemPresentation:
    mode: Mode
    orbits: tuple[PeriodicOrbit, ...] = ()
    connectors: tuple[Connector, ...] = ()
    families: tuple[Family, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "families", tuple(self.families))
        lengths = {o.id: o.length for o in self.orbits}
        object.__setattr__(
            self, "connectors", tuple(_normal_form(c, lengths) for c in self.connectors)
        )

    def orbit(self, oid: str) -> PeriodicOrbit:
        for o in self.orbits:
            if o.id == oid:
                return o
        raise KeyError(oid)

    @property
    def is_empty(self) -> bool:
        return not (self.orbits or self.connectors or self.families)

    def max_length(self) -> int:
        return max((o.length for o in self.orbits), default=1)


def _normal_form(c: Connector, lengths: dict[str, int]) -> Connector:
    # Shift the base point so the left anchor is 0.  The right anchor is then
    # determined modulo gcd(lam_L, lam_R), since shifting by lam_L keeps the
    # left anchor fixed.
    lam_l, lam_r = lengths.get(c.left), lengths.get(c.right)
    if not lam_l or not lam_r or lam_l < 1 or lam_r < 1:
        return c
    g = gcd(lam_l, lam_r)
    right = (c.right_anchor - c.left_anchor) % g
    if c.left_anchor == 0 and c.right_anchor == right:
        return c
    return Connector(c.id, c.left, 0, c.right, right, c.middle)


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


class InvalidPresentation(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(report.violations))
        self.report = report


def is_primitive(word: tuple[str, ...]) -> bool:
    n = len(word)
    return all(word != word[d:] + word[:d] for d in range(1, n) if n % d == 0)


def _rotations(word: tuple[str, ...]) -> set[tuple[str, ...]]:
    return {word[i:] + word[:i] for i in range(len(word))}


@lru_cache(maxsize=4096)
def validate(S: SystemPresentation) -> ValidationReport:
    v: list[str] = []
    ids = [o.id for o in S.orbits] + [c.id for c in S.connectors] + [f.id for f in S.families]
    seen = set()
    for i in ids:
        if i in seen:
            v.append(f"duplicate id: {i}")
        seen.add(i)
    orbits = {o.id: o for o in S.orbits}

    for o in S.orbits:
        if not isinstance(o.length, int) or o.length < 1:
            v.append(f"orbit {o.id}: length must be a positive integer")
            continue
        if o.word is not None:
            if len(o.word) != o.length:
                v.append(f"orbit {o.id}: word length differs from lambda")
            elif not is_primitive(o.word):
                v.append(f"orbit {o.id}: non-primitive word")
        elif S.mode is Mode.SUBSHIFT:
            v.append(f"orbit {o.id}: subshift orbit without word")

    reached = set()
    for c in S.connectors:
        for side, oid, anchor in (("left", c.left, c.left_anchor), ("right", c.right, c.right_anchor)):
            o = orbits.get(oid)
            if o is None:
                v.append(f"connector {c.id}: unknown {side} orbit {oid}")
                continue
            reached.add(oid)
            if not o.is_limit:
                v.append(f"connector {c.id}: {side} orbit {oid} is not a limit orbit")
            if not 0 <= anchor < o.length:
                v.append(f"connector {c.id}: {side} anchor out of range")
    for f in S.families:
        o = orbits.get(f.limit)
        if o is None:
            v.append(f"family {f.id}: unknown limit orbit {f.limit}")
            continue
        reached.add(f.limit)
        if not o.is_limit:
            v.append(f"family {f.id}: limit orbit {f.limit} is not a limit orbit")
        if not isinstance(f.size, int) or f.size < 2:
            v.append(f"family {f.id}: member size must be at least 2")
        elif f.size % o.length:
            v.append(f"family {f.id}: member size not a multiple of the limit length")
    for o in S.orbits:
        if o.is_limit and o.id not in reached:
            v.append(f"orbit {o.id}: unreachable limit orbit")

    if S.mode is Mode.SUBSHIFT:
        if S.families:
            v.append("subshift presentations cannot carry families")
        words = [(o.id, o.word) for o in S.orbits if o.word is not None and len(o.word) == o.length]
        for i, (a, wa) in enumerate(words):
            for b, wb in words[i + 1:]:
                if len(wa) == len(wb) and wb in _rotations(wa):
                    v.append(f"orbits {a} and {b}: conjugate words")
        if not v:
            v.extend(_subshift_connector_checks(S))
    return ValidationReport(tuple(v))


def _subshift_connector_checks(S: SystemPresentation) -> list[str]:
    from .symbolic import connector_is_periodic, same_connector_orbit

    v = []
    for c in S.connectors:
        if c.middle is None:
            v.append(f"connector {c.id}: subshift connector without middle")
            continue
        lam_l, lam_r = S.orbit(c.left).length, S.orbit(c.right).length
        g = gcd(lam_l, lam_r)
        if (c.right_anchor - c.left_anchor + len(c.middle)) % g:
            v.append(f"connector {c.id}: anchors inconsistent with middle")
        elif connector_is_periodic(S, c):
            v.append(f"connector {c.id}: degenerate connector (periodic point)")
    if not v:
        for i, a in enumerate(S.connectors):
            for b in S.connectors[i + 1:]:
                if same_connector_orbit(S, a, b):
                    v.append(f"connectors {a.id} and {b.id}: same orbit")
    return v


def require_valid(S: SystemPresentation) -> SystemPresentation:
    report = validate(S)
    if not report.ok:
        raise InvalidPresentation(report)
    return S


# -------------------------------------------------------------- constructors


@dataclass(frozen=True)
class PTuple:
    """p = (l, lambdas, m, epsilons)."""

    l: int
    lambdas: tuple[int, ...]
    m: int
    epsilons: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        object.__setattr__(self, "epsilons", tuple(self.epsilons))

    def problems(self) -> list[str]:
        out = []
        if not isinstance(self.l, int) or self.l < 0:
            out.append("l must be a natural number")
            return out
        if len(self.lambdas) != self.l + 1:
            out.append("need l+1 lambdas")
        if len(self.epsilons) != self.l:
            out.append("need l epsilons")
        if any(not isinstance(x, int) or x <= 0 or x % 2 for x in self.lambdas):
            out.append("lambdas must be positive and even")
        if any(e not in (0, 1) for e in self.epsilons):
            out.append("epsilons must be bits")
        if not isinstance(self.m, int) or self.m < 1 or self.m % 2 == 0:
            out.append("m must be odd and positive")
        elif self.lambdas and self.m >= self.lambdas[0]:
            out.append("m must be smaller than lambda_0")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def key(self) -> tuple[int, ...]:
        return (self.l, *self.lambdas, self.m, *self.epsilons)

    def __lt__(self, other: "PTuple") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return format_ptuple(self)

    def to_dict(self) -> dict:
        return {"l": self.l, "lambdas": list(self.lambdas), "m": self.m, "epsilons": list(self.epsilons)}

    @classmethod
    def from_dict(cls, d: dict) -> "PTuple":
        return cls(d["l"], tuple(d["lambdas"]), d["m"], tuple(d["epsilons"]))


def parse_ptuple(text: str) -> PTuple:
    """Parse ``"l;lam0,lam1,...;m;eps0,eps1,..."``."""
    parts = [s.strip() for s in text.split(";")]
    if len(parts) == 3:
        parts.append("")
    if len(parts) != 4:
        raise ValueError(f"expected 'l;lambdas;m;epsilons', got {text!r}")

    def ints(s):
        return tuple(int(x) for x in s.split(",") if x.strip())

    p = PTuple(int(parts[0]), ints(parts[1]), int(parts[2]), ints(parts[3]))
    if not p.is_valid():
        raise ValueError(f"invalid p {text!r}: " + ", ".join(p.problems()))
    return p


def format_ptuple(p: PTuple) -> str:
    return "{};{};{};{}".format(
        p.l, ",".join(map(str, p.lambdas)), p.m, ",".join(map(str, p.epsilons))
    )


def make_odd_cycle(q: int, mode: Mode = Mode.SUBSHIFT) -> SystemPresentation:
    n = 2 * q + 3
    word = tuple(str(i) for i in range(n)) if Mode(mode) is Mode.SUBSHIFT else None
    return SystemPresentation(mode, (PeriodicOrbit("c", n, Kind.ISOLATED, word),))


def make_x1() -> SystemPresentation:
    return SystemPresentation(
        Mode.HOMEOMORPHISM,
        (PeriodicOrbit("fix", 1, Kind.LIMIT),),
        (),
        (Family("pairs", 2, "fix"),),
    )


def make_n_sigma(n: int) -> SystemPresentation:
    if n < 0:
        raise ValueError("n must be a natural number")
    if n >= 3 and n % 2:
        return make_odd_cycle((n - 3) // 2)
    zero = PeriodicOrbit("y0", 1, Kind.LIMIT, ("0",))
    if n == 0:
        return SystemPresentation(Mode.SUBSHIFT, (zero,), (Connector("z", "y0", 0, "y0", 0, ("1",)),))
    word = ("1",) if n == 1 else tuple(str(i) for i in range(1, n + 1))
    other = PeriodicOrbit("y1", len(word), Kind.LIMIT, word)
    return SystemPresentation(Mode.SUBSHIFT, (zero, other), (Connector("z", "y0", 0, "y1", 0, ()),))


def make_sigma_p(p: PTuple) -> SystemPresentation:
    if not p.is_valid():
        raise ValueError("invalid p: " + ", ".join(p.problems()))
    orbits = tuple(
        PeriodicOrbit(f"y{i}", lam, Kind.LIMIT, tuple(f"a^{i}_{j}" for j in range(lam)))
        for i, lam in enumerate(p.lambdas)
    )
    conns = [
        Connector(f"z{i}", f"y{i + e}", 0, f"y{i + 1 - e}", 0, ())
        for i, e in enumerate(p.epsilons)
    ]
    # w_l^{-inf} . b_0..b_{m-1} . w_0^{inf}: the forward tail lands on point -m of y0
    conns.append(
        Connector(f"z{p.l}", f"y{p.l}", 0, "y0", -p.m % p.lambdas[0], tuple(f"b_{i}" for i in range(p.m)))
    )
    return SystemPresentation(Mode.SUBSHIFT, orbits, tuple(conns))


def relabel(S: SystemPresentation, mapping: dict[str, str]) -> SystemPresentation:
    """Rename ids; ids missing from ``mapping`` are kept."""
    r = lambda x: mapping.get(x, x)
    return SystemPresentation(
        S.mode,
        tuple(PeriodicOrbit(r(o.id), o.length, o.kind, o.word) for o in S.orbits),
        tuple(Connector(r(c.id), r(c.left), c.left_anchor, r(c.right), c.right_anchor, c.middle) for c in S.connectors),
        tuple(Family(r(f.id), f.size, r(f.limit)) for f in S.families),
    )


def as_homeomorphism(S: SystemPresentation) -> SystemPresentation:
    """Forget words and middles."""
    return SystemPresentation(
        Mode.HOMEOMORPHISM,
        tuple(PeriodicOrbit(o.id, o.length, o.kind) for o in S.orbits),
        tuple(Connector(c.id, c.left, c.left_anchor, c.right, c.right_anchor) for c in S.connectors),
        S.families,
    )


def invert(S: SystemPresentation) -> SystemPresentation:
    """Presentation of f^{-1}: point j of each orbit becomes point -j and the tails swap."""
    S = as_homeomorphism(S)
    lengths = {o.id: o.length for o in S.orbits}
    conns = tuple(
        Connector(c.id, c.right, -c.right_anchor % lengths[c.right], c.left, -c.left_anchor % lengths[c.left])
        for c in S.connectors
    )
    return SystemPresentation(S.mode, S.orbits, conns, S.families)


# ------------------------------------------------------------- serialization


class ParseError(ValueError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{message} (at {location})")
        self.message = message
        self.location = location


_TOP = {"mode", "orbits", "connectors", "families"}
_ORBIT = {"id", "lambda", "kind", "word"}
_CONN = {"id", "left", "right", "middle"}
_END = {"orbit", "anchor"}
_FAM = {"id", "size", "limit"}


def to_document(S: SystemPresentation) -> dict:
    orbits = []
    for o in S.orbits:
        d: dict[str, Any] = {"id": o.id, "lambda": o.length, "kind": o.kind.value}
        if o.word is not None:
            d["word"] = list(o.word)
        orbits.append(d)
    conns = []
    for c in S.connectors:
        d = {"id": c.id, "left": {"orbit": c.left, "anchor": c.left_anchor}, "right": {"orbit": c.right, "anchor": c.right_anchor}}
        if c.middle is not None:
            d["middle"] = list(c.middle)
        conns.append(d)
    fams = [{"id": f.id, "size": f.size, "limit": f.limit} for f in S.families]
    return {"mode": S.mode.value, "orbits": orbits, "connectors": conns, "families": fams}


def serialize(S: SystemPresentation) -> str:
    require_valid(S)
    return dumps(to_document(S))


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _obj(x, loc, allowed, required):
    if not isinstance(x, dict):
        raise ParseError("expected an object", loc)
    for k in sorted(set(x) - allowed):
        raise ParseError(f"unknown field: {k}", loc)
    for k in sorted(required):
        if k not in x:
            raise ParseError(f"missing field: {k}", loc)
    return x


def _int(x, loc):
    if not isinstance(x, int) or isinstance(x, bool):
        raise ParseError("expected an integer", loc)
    return x


def _str(x, loc):
    if not isinstance(x, str):
        raise ParseError("expected a string", loc)
    return x


def _list(x, loc):
    if not isinstance(x, list):
        raise ParseError("expected a list", loc)
    return x


def _symbols(x, loc) -> tuple[str, ...]:
    return tuple(_str(s, f"{loc}[{i}]") for i, s in enumerate(_list(x, loc)))


def from_document(doc: Any) -> SystemPresentation:
    _obj(doc, "$", _TOP, {"mode"})
    try:
        mode = Mode(doc["mode"])
    except ValueError:
        raise ParseError(f"unknown mode: {doc['mode']!r}", "$.mode") from None
    orbits = []
    for i, o in enumerate(_list(doc.get("orbits", []), "$.orbits")):
        loc = f"$.orbits[{i}]"
        _obj(o, loc, _ORBIT, {"id", "lambda", "kind"})
        try:
            kind = Kind(o["kind"])
        except ValueError:
            raise ParseError(f"unknown kind: {o['kind']!r}", loc + ".kind") from None
        word = _symbols(o["word"], loc + ".word") if "word" in o else None
        orbits.append(PeriodicOrbit(_str(o["id"], loc + ".id"), _int(o["lambda"], loc + ".lambda"), kind, word))
    conns = []
    for i, c in enumerate(_list(doc.get("connectors", []), "$.connectors")):
        loc = f"$.connectors[{i}]"
        _obj(c, loc, _CONN, {"id", "left", "right"})
        ends = []
        for side in ("left", "right"):
            e = _obj(c[side], f"{loc}.{side}", _END, _END)
            ends.append((_str(e["orbit"], f"{loc}.{side}.orbit"), _int(e["anchor"], f"{loc}.{side}.anchor")))
        middle = _symbols(c["middle"], loc + ".middle") if "middle" in c else None
        conns.append(Connector(_str(c["id"], loc + ".id"), ends[0][0], ends[0][1], ends[1][0], ends[1][1], middle))
    fams = []
    for i, f in enumerate(_list(doc.get("families", []), "$.families")):
        loc = f"$.families[{i}]"
        _obj(f, loc, _FAM, _FAM)
        fams.append(Family(_str(f["id"], loc + ".id"), _int(f["size"], loc + ".size"), _str(f["limit"], loc + ".limit")))
    return SystemPresentation(mode, tuple(orbits), tuple(conns), tuple(fams))


def parse(text: str | bytes) -> SystemPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", f"line {e.lineno} column {e.colno}") from None
    return from_document(doc)


def empty(mode: Mode = Mode.HOMEOMORPHISM) -> SystemPresentation:
    return SystemPresentation(mode)


def orbit_ids(S: SystemPresentation, kind: Kind | None = None) -> list[str]:
    return [o.id for o in S.orbits if kind is None or o.kind is kind]


def incident_connectors(S: SystemPresentation, oid: str) -> Iterable[Connector]:
    return (c for c in S.connectors if oid in (c.left, c.right))
