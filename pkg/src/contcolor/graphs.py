"""Finite undirected graphs with hashable vertex labels."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

import numpy as np


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    vertices: tuple
    edges: frozenset

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[tuple]):
        verts = tuple(dict.fromkeys(vertices))
        vset = set(verts)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {u!r}-{v!r} has an unknown endpoint")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(es))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGraph)
            and set(self.vertices) == set(other.vertices)
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for u, v in self.edge_list():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def neighbors(self, v) -> list:
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def edge_list(self) -> list[tuple]:
        """Edges as (u, v) with index(u) < index(v), sorted by index."""
        idx = self.index
        out = []
        for e in self.edges:
            u, v = sorted(e, key=idx.__getitem__)
            out.append((u, v))
        out.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
        return out

    def edge_array(self) -> np.ndarray:
        idx = self.index
        arr = np.array([(idx[u], idx[v]) for u, v in self.edge_list()], dtype=np.int64)
        return arr.reshape(-1, 2)

    def adjacency_matrix(self) -> np.ndarray:
        n = len(self.vertices)
        m = np.zeros((n, n), dtype=np.bool_)
        e = self.edge_array()
        m[e[:, 0], e[:, 1]] = True
        m[e[:, 1], e[:, 0]] = True
        return m

    def induced(self, keep: Iterable) -> "FiniteGraph":
        ks = set(keep)
        verts = [v for v in self.vertices if v in ks]
        return FiniteGraph(verts, [tuple(e) for e in self.edges if e <= ks])

    def relabel(self, fn) -> "FiniteGraph":
        return FiniteGraph([fn(v) for v in self.vertices], [(fn(u), fn(v)) for u, v in self.edge_list()])

    def components(self) -> list[list]:
        seen, out = set(), []
        for s in self.vertices:
            if s in seen:
                continue
            comp, todo = [], deque([s])
            seen.add(s)
            while todo:
                u = todo.popleft()
                comp.append(u)
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            out.append(comp)
        return out

    def to_dot(self, name: str = "G", label=str) -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{_esc(label(v))}";')
        for u, v in self.edge_list():
            lines.append(f'  "{_esc(label(u))}" -- "{_esc(label(v))}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_document(self, label=str) -> dict:
        return {
            "vertices": [label(v) for v in self.vertices],
            "edges": [[label(u), label(v)] for u, v in self.edge_list()],
        }


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def cycle_graph(n: int) -> FiniteGraph:
    return FiniteGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> FiniteGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return FiniteGraph(range(10), outer + spokes + inner)


def is_homomorphism(G: FiniteGraph, H: FiniteGraph, mapping: dict, injective: bool = True) -> bool:
    if set(mapping) != set(G.vertices):
        return False
    if any(w not in H.index for w in mapping.values()):
        return False
    if injective and len(set(mapping.values())) != len(mapping):
        return False
    return all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edge_list())
