"""Distance sets, labelings, D-neighborhoods and the antimagic verifier."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import (
    UNREACHABLE,
    Connectivity,
    DistanceMatrix,
    OrientedGraph,
    all_pairs_distance,
    bfs_distances,
    classify,
)


class DomainError(ValueError):
    """An operation was applied outside the graphs it is defined for."""


class EmptyDistanceSetError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceSet:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if not vals:
            raise EmptyDistanceSetError("a distance set must be non-empty")
        if any(x < 0 for x in vals):
            raise ValueError(f"distances must be non-negative: {vals}")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"distances must be strictly increasing: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable[int]) -> "DistanceSet":
        """Sort and deduplicate, then validate."""
        return cls(tuple(sorted(set(values))))

    @classmethod
    def parse(cls, text: str) -> "DistanceSet":
        """Parse ``"0,3"``; duplicates and descending order are rejected."""
        try:
            vals = tuple(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad distance set {text!r}") from exc
        return cls(vals)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, x) -> bool:
        return x in self.values

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class Labeling:
    """``values[v]`` is the label of vertex ``v``; a permutation of 1..n."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"labels are not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]


@dataclass(frozen=True)
class WeightReport:
    weights: tuple[int, ...]
    antimagic: bool
    witness: tuple[int, int] | None
    d_set: DistanceSet


def d_neighborhood(g: OrientedGraph, dm: DistanceMatrix, v: int, d: DistanceSet) -> frozenset[int]:
    # Values of D beyond every finite distance simply match nothing.
    row = dm.dist[v]
    return frozenset(y for y in range(g.n) if row[y] is not UNREACHABLE and row[y] in d)


@lru_cache(maxsize=64)
def distance_layers(g: OrientedGraph) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``layers[v][k]`` lists the vertices at distance exactly ``k`` from ``v``."""
    out = []
    for v in range(g.n):
        layers: list[list[int]] = []
        for y, k in enumerate(bfs_distances(g, v)):
            if k is UNREACHABLE:
                continue
            while len(layers) <= k:
                layers.append([])
            layers[k].append(y)
        out.append(tuple(map(tuple, layers)))
    return tuple(out)


def neighborhoods(g: OrientedGraph, d: DistanceSet, dm: DistanceMatrix | None = None) -> list[tuple[int, ...]]:
    """Sorted D-neighborhood of every vertex."""
    if dm is not None:
        return [tuple(sorted(d_neighborhood(g, dm, v, d))) for v in range(g.n)]
    layers = distance_layers(g)
    return [tuple(sorted(y for k in d if k < len(lv) for y in lv[k])) for lv in layers]


def first_collision(weights: Sequence[int]) -> tuple[int, int] | None:
    """Lexicographically first pair ``(u, v)``, ``u < v``, with equal weights."""
    first: dict[int, int] = {}
    best = None
    for v, w in enumerate(weights):
        if w in first:
            pair = (first[w], v)
            if best is None or pair < best:
                best = pair
        else:
            first[w] = v
    return best


def weights_from_neighborhoods(nbhds: Sequence[Sequence[int]], labels: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(labels[x] for x in nb) for nb in nbhds)


def weigh(g: OrientedGraph, dm: DistanceMatrix | None, f: Labeling, d: DistanceSet) -> WeightReport:
    if f.n != g.n:
        raise ValueError(f"labeling has {f.n} labels for a graph on {g.n} vertices")
    weights = weights_from_neighborhoods(neighborhoods(g, d, dm), f.values)
    witness = first_collision(weights)
    return WeightReport(weights, witness is None, witness, d)


def is_antimagic(g: OrientedGraph, f: Labeling, d: DistanceSet, dm: DistanceMatrix | None = None) -> bool:
    return weigh(g, dm, f, d).antimagic


def complement_set(g: OrientedGraph, d: DistanceSet, dm: DistanceMatrix | None = None) -> DistanceSet:
    """``{0, ..., diam(g)} \\ d`` for a strongly connected ``g``."""
    info = classify(g, dm)
    if info.connectivity is not Connectivity.STRONG:
        raise DomainError("the complement set is only defined for strongly connected graphs")
    if d.max > info.diameter:
        raise DomainError(f"{d} exceeds the diameter {info.diameter}")
    rest = [x for x in range(info.diameter + 1) if x not in d]
    if not rest:
        raise EmptyDistanceSetError(f"complement of {d} is empty")
    return DistanceSet(tuple(rest))


def shift_set(d: DistanceSet, k: int, n: int) -> DistanceSet:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return DistanceSet.of((x + k) % n for x in d)
