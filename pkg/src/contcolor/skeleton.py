"""Isomorphism of fixed-point-free presentations built from limit orbits and connectors.

Two such presentations describe the same system up to an injective
continuous homomorphism in both directions exactly when there is

* a length-preserving bijection of orbits,
* for each orbit a rotation t and, when its length is >= 3, a direction d,
* for each connector a direction e, equal to d at every end of length >= 3,

carrying the connectors onto each other.  Orbits of length 2 have no
direction, so a connector between two of them may be reversed on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import gcd

from .presentation import SystemPresentation


@dataclass(frozen=True)
class Skeleton:
    lengths: tuple[int, ...]
    connectors: tuple[tuple[int, int, int, int], ...]  # (L, a_L, R, a_R) by orbit index
    names: tuple[str, ...] = ()
    connector_names: tuple[str, ...] = ()

    @classmethod
    def of(cls, S: SystemPresentation) -> "Skeleton":
        if S.families or any(not o.is_limit for o in S.orbits):
            raise ValueError("skeletons carry only limit orbits and connectors")
        idx = {o.id: i for i, o in enumerate(S.orbits)}
        return cls(
            tuple(o.length for o in S.orbits),
            tuple((idx[c.left], c.left_anchor, idx[c.right], c.right_anchor) for c in S.connectors),
            tuple(o.id for o in S.orbits),
            tuple(c.id for c in S.connectors),
        )


def _image(lengths, conn, pi, d, t, e):
    L, aL, R, aR = conn
    g = gcd(lengths[L], lengths[R])
    bL, bR = d[L] * aL + t[L], d[R] * aR + t[R]
    if e > 0:
        return (pi[L], pi[R], (bR - bL) % g)
    return (pi[R], pi[L], (bL - bR) % g)


def _directions(lengths, conn, d):
    """Allowed connector directions given the orbit directions."""
    L, _, R, _ = conn
    forced = {d[x] for x in (L, R) if lengths[x] >= 3}
    if len(forced) > 1:
        return ()
    return tuple(forced) if forced else (1, -1)


def _orbit_moves(lengths):
    ds = [(1, -1) if lam >= 3 else (1,) for lam in lengths]
    ts = [range(lam) for lam in lengths]
    for d in product(*ds):
        for t in product(*ts):
            yield d, t


@lru_cache(maxsize=None)
def signature(sk: Skeleton) -> tuple:
    """Canonical form: least image over all relabelings.  Equal iff isomorphic."""
    lengths = sk.lengths
    order = sorted(range(len(lengths)), key=lambda i: lengths[i])
    target_lengths = tuple(lengths[i] for i in order)
    # bijections onto positions sorted by length, i.e. permutations inside equal-length blocks
    blocks: dict[int, list[int]] = {}
    for pos, i in enumerate(order):
        blocks.setdefault(lengths[i], []).append(pos)
    best = None
    for assignment in product(*(permutations(ps) for _, ps in sorted(blocks.items()))):
        pi = [0] * len(lengths)
        for (lam, _), perm in zip(sorted(blocks.items()), assignment):
            members = [i for i in order if lengths[i] == lam]
            for i, pos in zip(members, perm):
                pi[i] = pos
        for d, t in _orbit_moves(lengths):
            images = []
            for conn in sk.connectors:
                opts = _directions(lengths, conn, d)
                if not opts:
                    break
                images.append(min(_image(lengths, conn, pi, d, t, e) for e in opts))
            else:
                cand = tuple(sorted(images))
                if best is None or cand < best:
                    best = cand
    return (target_lengths, best if best is not None else ())


def equivalent(a: Skeleton, b: Skeleton) -> bool:
    if sorted(a.lengths) != sorted(b.lengths) or len(a.connectors) != len(b.connectors):
        return False
    return signature(_bare(a)) == signature(_bare(b))


def _bare(sk: Skeleton) -> Skeleton:
    return Skeleton(sk.lengths, sk.connectors)


def find_isomorphism(a: Skeleton, b: Skeleton) -> dict | None:
    """An explicit isomorphism a -> b, or None.  Search order is deterministic."""
    if sorted(a.lengths) != sorted(b.lengths) or len(a.connectors) != len(b.connectors):
        return None
    na, nb = len(a.lengths), len(b.lengths)
    targets = [_normalize(b.lengths, c) for c in b.connectors]
    for perm in permutations(range(nb)):
        if any(a.lengths[i] != b.lengths[perm[i]] for i in range(na)):
            continue
        for d, t in _orbit_moves(a.lengths):
            options = []
            for conn in a.connectors:
                opts = _directions(a.lengths, conn, d)
                if not opts:
                    break
                options.append([(e, _image(a.lengths, conn, perm, d, t, e)) for e in opts])
            else:
                match = _match(options, targets)
                if match is not None:
                    return _certificate(a, b, perm, d, t, match)
    return None


def _normalize(lengths, conn):
    L, aL, R, aR = conn
    return (L, R, (aR - aL) % gcd(lengths[L], lengths[R]))


def _match(options, targets):
    used = [False] * len(targets)
    out = [None] * len(options)

    def go(i):
        if i == len(options):
            return True
        for e, img in options[i]:
            for j, tg in enumerate(targets):
                if not used[j] and tg == img:
                    used[j] = True
                    out[i] = (j, e)
                    if go(i + 1):
                        return True
                    used[j] = False
        return False

    return list(out) if go(0) else None


def _certificate(a, b, perm, d, t, match):
    an = a.names or tuple(map(str, range(len(a.lengths))))
    bn = b.names or tuple(map(str, range(len(b.lengths))))
    acn = a.connector_names or tuple(map(str, range(len(a.connectors))))
    bcn = b.connector_names or tuple(map(str, range(len(b.connectors))))
    return {
        "orbits": {an[i]: {"to": bn[perm[i]], "direction": d[i], "rotation": t[i]} for i in range(len(an))},
        "connectors": {acn[i]: {"to": bcn[j], "direction": e} for i, (j, e) in enumerate(match)},
    }
