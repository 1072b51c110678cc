"""Oriented graphs, cycle and 2-regular constructors, BFS distances.

Vertices are 0-based indices internally; vertex ``v_i`` of the usual
1-based notation is index ``i - 1``. File formats (JSON, DOT) use 1-based
ids.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

# Distance-matrix entry for "no directed path". Kept distinct from any integer.
UNREACHABLE = None


class InvalidOrderError(ValueError):
    """Raised when a cycle of order < 3 is requested."""


class Connectivity(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    components: tuple[int, ...] = ()
    out_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    in_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arcs = tuple(sorted({(int(a), int(b)) for a, b in self.arcs}))
        seen = set()
        for a, b in arcs:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"arc {(a, b)} out of range for n={self.n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if (b, a) in seen:
                raise ValueError(f"both orientations of edge {{{a}, {b}}} present")
            seen.add((a, b))
        out_adj = [[] for _ in range(self.n)]
        in_adj = [[] for _ in range(self.n)]
        for a, b in arcs:
            out_adj[a].append(b)
            in_adj[b].append(a)
        components = tuple(self.components) or tuple(_weak_components(self.n, arcs))
        if len(components) != self.n:
            raise ValueError("components must give one index per vertex")
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "out_adj", tuple(map(tuple, out_adj)))
        object.__setattr__(self, "in_adj", tuple(map(tuple, in_adj)))

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    @property
    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.out_adj[v])

    @property
    def sources(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.in_adj[v])

    def is_two_regular(self) -> bool:
        return all(self.out_degree(v) + self.in_degree(v) == 2 for v in range(self.n))

    def component_vertices(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(self.components):
            groups.setdefault(c, []).append(v)
        return [groups[c] for c in sorted(groups)]


def _weak_components(n: int, arcs: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots: dict[int, int] = {}
    return [roots.setdefault(find(v), len(roots)) for v in range(n)]


def mirror(g: OrientedGraph) -> OrientedGraph:
    """Reverse every arc."""
    return OrientedGraph(g.n, tuple((b, a) for a, b in g.arcs), g.components)


# --- cycles ---------------------------------------------------------------


@dataclass(frozen=True)
class CycleOrientation:
    """Bit ``i`` true means edge {v_i, v_{i+1 mod n}} is oriented forward."""

    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if len(self.bits) < 3:
            raise InvalidOrderError(f"a cycle needs at least 3 vertices, got {len(self.bits)}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def parse(cls, text: str) -> "CycleOrientation":
        """Parse ``"TTF..."`` or ``"110..."``."""
        table = {"T": True, "1": True, "F": False, "0": False}
        try:
            return cls(tuple(table[c] for c in text.strip().upper()))
        except KeyError as exc:
            raise ValueError(f"bad orientation string {text!r}") from exc

    def __str__(self) -> str:
        return "".join("T" if b else "F" for b in self.bits)


def _check_order(n: int) -> None:
    if n < 3:
        raise InvalidOrderError(f"a cycle needs at least 3 vertices, got {n}")


def cycle_arcs(bits: Sequence[bool], offset: int = 0) -> list[tuple[int, int]]:
    n = len(bits)
    arcs = []
    for i, forward in enumerate(bits):
        a, b = offset + i, offset + (i + 1) % n
        arcs.append((a, b) if forward else (b, a))
    return arcs


def build_oriented_cycle(c: CycleOrientation) -> OrientedGraph:
    return OrientedGraph(c.n, tuple(cycle_arcs(c.bits)))


def unidirectional_bits(n: int) -> tuple[bool, ...]:
    _check_order(n)
    return (True,) * n


def theta_bits(n: int) -> tuple[bool, ...]:
    # Last edge reversed: arc (v_1, v_n), source v_1, sink v_n.
    _check_order(n)
    return (True,) * (n - 1) + (False,)


# Graphs are immutable, so the named cycles are built once per order.
@lru_cache(maxsize=512)
def build_unidirectional_cycle(n: int) -> OrientedGraph:
    return build_oriented_cycle(CycleOrientation(unidirectional_bits(n)))


@lru_cache(maxsize=512)
def build_theta_cycle(n: int) -> OrientedGraph:
    return build_oriented_cycle(CycleOrientation(theta_bits(n)))


# --- 2-regular unions -----------------------------------------------------


class Kind(enum.Enum):
    UNIDIRECTIONAL = "uni"
    THETA = "theta"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ComponentFamily:
    """``m`` copies of an oriented ``C_n``."""

    n: int
    m: int = 1
    kind: Kind = Kind.UNIDIRECTIONAL
    orientation: CycleOrientation | None = None

    def __post_init__(self):
        _check_order(self.n)
        if self.m < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.m}")
        if (self.kind is Kind.CUSTOM) != (self.orientation is not None):
            raise ValueError("a custom component needs an orientation, and only it")
        if self.orientation is not None and self.orientation.n != self.n:
            raise ValueError("orientation length does not match n")

    def bits(self) -> tuple[bool, ...]:
        if self.kind is Kind.UNIDIRECTIONAL:
            return unidirectional_bits(self.n)
        if self.kind is Kind.THETA:
            return theta_bits(self.n)
        return self.orientation.bits


@dataclass(frozen=True)
class TwoRegularSpec:
    """Families of cycle components listed by non-decreasing length.

    Global vertex ids are laid out family by family, copy ``s`` of a
    family after copy ``s - 1``, and the local vertices of each copy
    consecutive; see :meth:`vertex_id`.
    """

    components: tuple[ComponentFamily, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a 2-regular spec needs at least one component")
        if any(a.n > b.n for a, b in zip(comps, comps[1:])):
            raise ValueError("component families must be sorted by cycle length")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *families: tuple) -> "TwoRegularSpec":
        """``TwoRegularSpec.of((3, 1, Kind.UNIDIRECTIONAL), (4, 2, Kind.THETA))``"""
        return cls(tuple(f if isinstance(f, ComponentFamily) else ComponentFamily(*f) for f in families))

    @property
    def order(self) -> int:
        return sum(f.n * f.m for f in self.components)

    @property
    def copies(self) -> int:
        return sum(f.m for f in self.components)

    def offsets(self) -> list[int]:
        """Global id of ``v_1`` in copy 1 of each family."""
        out, acc = [], 0
        for f in self.components:
            out.append(acc)
            acc += f.n * f.m
        return out

    def vertex_id(self, j: int, s: int, i: int) -> int:
        """0-based global id of local vertex ``i`` of copy ``s`` in family ``j`` (all 1-based)."""
        f = self.components[j - 1]
        if not (1 <= s <= f.m and 1 <= i <= f.n):
            raise IndexError((j, s, i))
        return self.offsets()[j - 1] + (s - 1) * f.n + (i - 1)


def build_union(spec: TwoRegularSpec) -> OrientedGraph:
    arcs: list[tuple[int, int]] = []
    components: list[int] = []
    offset = copy = 0
    for fam in spec.components:
        bits = fam.bits()
        for _ in range(fam.m):
            arcs.extend(cycle_arcs(bits, offset))
            components.extend([copy] * fam.n)
            offset += fam.n
            copy += 1
    return OrientedGraph(offset, tuple(arcs), tuple(components))


# --- distances ------------------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[int | None, ...], ...]

    def __call__(self, u: int, v: int) -> int | None:
        return self.dist[u][v]

    def finite(self):
        for row in self.dist:
            for x in row:
                if x is not UNREACHABLE:
                    yield x


def bfs_distances(g: OrientedGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.out_adj[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distance(g: OrientedGraph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, v)) for v in range(g.n)))


# --- classification -------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    sinks: frozenset[int]
    sources: frozenset[int]
    connectivity: Connectivity
    diameter: int | None
    is_unidirectional_cycle: bool
    is_theta_cycle: bool


def is_single_cycle(g: OrientedGraph) -> bool:
    """Underlying undirected graph is one cycle on all ``n`` vertices."""
    return g.n >= 3 and len(g.arcs) == g.n and g.is_two_regular() and len(set(g.components)) == 1


def _theta_shape(g: OrientedGraph) -> bool:
    sinks, sources = g.sinks, g.sources
    if len(sinks) != 1 or len(sources) != 1:
        return False
    (t,), (s,) = sinks, sources
    return t in g.out_adj[s]


def diameter(dm: DistanceMatrix) -> int | None:
    return max(dm.finite(), default=None) if dm.n else None


def classify(g: OrientedGraph, dm: DistanceMatrix | None = None) -> Classification:
    dm = dm or all_pairs_distance(g)
    if len(set(g.components)) > 1:
        connectivity = Connectivity.DISCONNECTED
    elif all(x is not UNREACHABLE for row in dm.dist for x in row):
        connectivity = Connectivity.STRONG
    else:
        connectivity = Connectivity.WEAK
    cycle = is_single_cycle(g)
    return Classification(
        sinks=g.sinks,
        sources=g.sources,
        connectivity=connectivity,
        diameter=diameter(dm),
        is_unidirectional_cycle=cycle and not g.sinks,
        is_theta_cycle=cycle and _theta_shape(g),
    )


def component_kind(g: OrientedGraph, vertices: Sequence[int]) -> Kind:
    """Structural kind of one cycle component: uni, Θ, or neither (CUSTOM)."""
    vs = set(vertices)
    outs = {v: [w for w in g.out_adj[v] if w in vs] for v in vs}
    ins = {v: [w for w in g.in_adj[v] if w in vs] for v in vs}
    sinks = [v for v in vs if not outs[v]]
    sources = [v for v in vs if not ins[v]]
    if not sinks:
        return Kind.UNIDIRECTIONAL
    if len(sinks) == 1 and len(sources) == 1 and sinks[0] in outs[sources[0]]:
        return Kind.THETA
    return Kind.CUSTOM


def theta_path(g: OrientedGraph, vertices: Sequence[int]) -> list[int]:
    """Vertices of a Θ component ordered source, ..., sink along the long directed path."""
    vs = set(vertices)
    (source,) = [v for v in vs if not any(w in vs for w in g.in_adj[v])]
    (sink,) = [v for v in vs if not any(w in vs for w in g.out_adj[v])]
    path = [source]
    nxt = [w for w in g.out_adj[source] if w != sink]
    while nxt:
        (v,) = nxt
        path.append(v)
        nxt = list(g.out_adj[v])
    if path[-1] != sink or len(path) != len(vs):
        raise ValueError("component is not Θ-oriented")
    return path
