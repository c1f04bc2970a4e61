"""Random valid presentations for property tests and oracle agreement runs."""

from __future__ import annotations

import random

from .presentation import Connector, Family, Kind, Mode, PeriodicOrbit, SystemPresentation, require_valid

_LENGTHS = (1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 8, 8, 3, 5, 7)


def random_presentation(
    rng: random.Random,
    max_orbits: int = 6,
    max_length: int = 8,
    max_connectors: int = 8,
    max_families: int = 2,
) -> SystemPresentation:
    """A homeomorphism-mode presentation within the given size limits.

    Short and even lengths are favoured so both 2-coloring outcomes are
    common.  Every limit orbit is reached by a connector tail or a family.
    """
    lengths = [x for x in _LENGTHS if x <= max_length]
    n_orbits = rng.randint(1, max_orbits)
    orbits = []
    for i in range(n_orbits):
        kind = Kind.LIMIT if rng.random() < 0.7 else Kind.ISOLATED
        orbits.append(PeriodicOrbit(f"o{i}", rng.choice(lengths), kind))
    limits = [o for o in orbits if o.is_limit]

    connectors, families = [], []
    if limits:
        budget_c = rng.randint(0, max_connectors)
        budget_f = rng.randint(0, max_families)
        # reach every limit orbit first
        for o in limits:
            if budget_f and (not budget_c or rng.random() < 0.2):
                families.append(_family(rng, len(families), o))
                budget_f -= 1
            elif budget_c:
                connectors.append(_connector(rng, len(connectors), o, rng.choice(limits)))
                budget_c -= 1
            else:
                families.append(_family(rng, len(families), o))
        for _ in range(budget_c):
            connectors.append(_connector(rng, len(connectors), rng.choice(limits), rng.choice(limits)))
        for _ in range(min(budget_f, max_families - len(families))):
            families.append(_family(rng, len(families), rng.choice(limits)))
        if len(families) > max_families or len(connectors) > max_connectors:
            return random_presentation(rng, max_orbits, max_length, max_connectors, max_families)
    S = SystemPresentation(Mode.HOMEOMORPHISM, tuple(orbits), tuple(connectors), tuple(families))
    return require_valid(S)


def _connector(rng: random.Random, i: int, a: PeriodicOrbit, b: PeriodicOrbit) -> Connector:
    if rng.random() < 0.5:
        a, b = b, a
    return Connector(f"z{i}", a.id, rng.randrange(a.length), b.id, rng.randrange(b.length))


def _family(rng: random.Random, i: int, o: PeriodicOrbit) -> Family:
    size = o.length * rng.choice((1, 1, 2, 3))
    if size < 2:
        size = rng.choice((2, 3))
    return Family(f"F{i}", size, o.id)
