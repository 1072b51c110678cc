"""Explicit antimagic labelings for unidirectional cycles, Θ cycles and
2-regular unions of them.

Every labeler returns a :class:`ConstructionOutcome`. A labeling is only
ever returned after the verifier has accepted it on the constructed graph;
a rejected labeling is a bug and raises :class:`ConstructionError`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import (
    ComponentFamily,
    Kind,
    OrientedGraph,
    TwoRegularSpec,
    build_theta_cycle,
    build_union,
    build_unidirectional_cycle,
    component_kind,
    theta_path,
)
from .labeling import DistanceSet, Labeling, neighborhoods, weigh
from .search import local_repair


class Unsupported(enum.Enum):
    OUT_OF_RANGE = "out-of-range"
    KNOWN_NONEXISTENT = "known-nonexistent"
    NOT_COVERED = "not-covered"


class ConstructionError(AssertionError):
    """A labeler produced a labeling the verifier rejects."""


@dataclass(frozen=True)
class ConstructionOutcome:
    graph: OrientedGraph | None
    d: DistanceSet | None
    labeling: Labeling | None = None
    unsupported: Unsupported | None = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.labeling is not None


def _done(g: OrientedGraph, d: DistanceSet, labels, reason: str = "") -> ConstructionOutcome:
    f = labels if isinstance(labels, Labeling) else Labeling(tuple(labels))
    report = weigh(g, None, f, d)
    if not report.antimagic:
        raise ConstructionError(f"labeling {f.values} is not {d}-antimagic; collision at {report.witness}")
    return ConstructionOutcome(g, d, f, reason=reason)


def _no(kind: Unsupported, reason: str, g=None, d=None) -> ConstructionOutcome:
    return ConstructionOutcome(g, d, unsupported=kind, reason=reason)


# --- unidirectional cycles ------------------------------------------------


def factor_set(n: int, x: int) -> DistanceSet:
    """``{c*x mod n : c >= 1}``."""
    return DistanceSet.of(c * x % n for c in range(1, n // x + 1))


def factor_witness(n: int, d: DistanceSet) -> int | None:
    """A proper divisor ``x`` of ``n`` whose multiples mod ``n`` are exactly ``d``."""
    for x in range(1, n):
        if n % x == 0 and factor_set(n, x) == d:
            return x
    return None


def uni_singleton(n: int, k: int) -> ConstructionOutcome:
    g = build_unidirectional_cycle(n)
    if not 1 <= k <= n - 1:
        return _no(Unsupported.OUT_OF_RANGE, f"k={k} outside 1..{n - 1}", g)
    return _done(g, DistanceSet((k,)), Labeling.identity(n))


@lru_cache(maxsize=None)
def load_fixture(name: str) -> dict:
    text = resources.files("dantimagic").joinpath("data", "fixtures", f"{name}.json").read_text()
    return json.loads(text)


def _uni_03_even(n: int) -> list[int] | None:
    if n == 4:
        return [1, 3, 4, 2]
    if n in (8, 10, 12):
        return load_fixture(f"uni_n{n}_d0-3")["labels"]
    if n >= 14:
        f = list(range(1, n + 1))
        # Positions n-4 .. n (1-based) are relabeled; n-7 .. n-5 keep their index.
        f[n - 5] = n
        f[n - 4] = n - 4
        f[n - 3] = n - 3
        f[n - 2] = n - 2
        f[n - 1] = n - 1
        return f
    return None


def uni_pair_0k(n: int, k: int) -> ConstructionOutcome:
    g = build_unidirectional_cycle(n)
    if not 1 <= k <= n - 1:
        return _no(Unsupported.OUT_OF_RANGE, f"k={k} outside 1..{n - 1}", g)
    d = DistanceSet((0, k))
    x = factor_witness(n, d)
    if x is not None:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"C{n} not {d}-antimagic: N_D(v_1) = N_D(v_{1 + x})", g, d)
    if n % 2 == 1:
        # Weights 2i+k and 2i-n+k fall in opposite parity classes.
        return _done(g, d, Labeling.identity(n))
    if k > 3 and n - k <= 3:
        # {0, n-k} shifted by k is {0, k}; the same labeling works.
        base = uni_pair_0k(n, n - k)
        return _done(g, d, base.labeling, reason=f"shift of {{0,{n - k}}}")
    if k == 1:
        return _done(g, d, [2, 1] + list(range(3, n + 1)))
    if k == 2:
        return _done(g, d, [n] + list(range(2, n)) + [1])
    if k == 3:
        labels = _uni_03_even(n)
        if labels is None:
            return _no(Unsupported.KNOWN_NONEXISTENT, f"C{n} not {d}-antimagic", g, d)
        return _done(g, d, labels)
    return _no(Unsupported.NOT_COVERED, f"{d} on even C{n} is open (|D|=2, even unidirectional cycles)", g, d)


def uni_pair(n: int, d: DistanceSet) -> ConstructionOutcome:
    """Any two-element ``d``, reduced to ``{0, k}`` by a cyclic shift."""
    g = build_unidirectional_cycle(n)
    if len(d) != 2 or d.max > n - 1:
        return _no(Unsupported.OUT_OF_RANGE, f"need two distances in 0..{n - 1}, got {d}", g, d)
    a, b = d.values
    base = uni_pair_0k(n, b - a)
    if not base.ok:
        reason = base.reason if d.min == 0 else f"{base.reason} (shift of {d})"
        return _no(base.unsupported, reason, g, d)
    return _done(g, d, base.labeling)


def uni_cycle(n: int, d: DistanceSet) -> ConstructionOutcome:
    """Dispatch over every distance set the constructions above reach."""
    g = build_unidirectional_cycle(n)
    if d.max > n - 1:
        return _no(Unsupported.OUT_OF_RANGE, f"{d} exceeds the diameter {n - 1} of C{n}", g, d)
    x = factor_witness(n, d)
    if x is not None:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"C{n} not {d}-antimagic: N_D(v_1) = N_D(v_{1 + x})", g, d)
    if len(d) == 1:
        if d.min == 0:
            return _done(g, d, Labeling.identity(n))
        return uni_singleton(n, d.min)
    if len(d) == 2:
        return uni_pair(n, d)
    rest = DistanceSet(tuple(x for x in range(n) if x not in d))
    if len(rest) <= 2:
        # N_D and N_{D*} partition V, so weights for D are n(n+1)/2 minus those for D*.
        base = uni_cycle(n, rest)
        if base.ok:
            return _done(g, d, base.labeling, reason=f"complement of {rest}")
        return _no(base.unsupported, f"{base.reason} (complement of {d})", g, d)
    return _no(Unsupported.NOT_COVERED, f"|D| >= 3 on unidirectional C{n} is open", g, d)


# --- Θ cycles -------------------------------------------------------------


def theta_general(n: int, d: DistanceSet) -> ConstructionOutcome:
    g = build_theta_cycle(n)
    if d.min >= 2:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"Θ C{n} not {d}-antimagic: min(D) >= 2 forces unidirectional", g, d)
    if d.max > n - 2:
        return _no(Unsupported.OUT_OF_RANGE, f"{d} exceeds the diameter {n - 2} of Θ C{n}", g, d)
    return _done(g, d, range(n, 0, -1))


# --- 2-regular unions -----------------------------------------------------


def _kinds(g: OrientedGraph) -> list[tuple[list[int], Kind]]:
    return [(vs, component_kind(g, vs)) for vs in g.component_vertices()]


def tworeg_singleton_1(spec: TwoRegularSpec) -> ConstructionOutcome:
    g = build_union(spec)
    d = DistanceSet((1,))
    if spec.copies < 2:
        return _no(Unsupported.OUT_OF_RANGE, "need at least two cycle components", g, d)
    comps = _kinds(g)
    if any(kind is Kind.CUSTOM for _, kind in comps):
        return _no(Unsupported.NOT_COVERED, "a component is neither unidirectional nor Θ", g, d)
    thetas = [vs for vs, kind in comps if kind is Kind.THETA]
    if len(thetas) >= 2:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"{len(thetas)} Θ components give {len(thetas)} sinks of {d}-weight 0", g, d)
    total = g.n
    labels = [0] * total
    if thetas:
        path = theta_path(g, thetas[0])
        for l, u in enumerate(path, start=1):
            labels[u] = total - l + 1
    rest = iter(range(1, total - len(thetas[0]) + 1 if thetas else total + 1))
    for v in range(total):
        if not labels[v]:
            labels[v] = next(rest)
    return _done(g, d, labels)


def tworeg_singleton_k(spec: TwoRegularSpec, k: int) -> ConstructionOutcome:
    g = build_union(spec)
    n1 = spec.components[0].n
    if not 2 <= k <= n1 - 1:
        return _no(Unsupported.OUT_OF_RANGE, f"k={k} outside 2..{n1 - 1}", g)
    d = DistanceSet((k,))
    if g.sinks:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"a sink and its in-neighbor both have {d}-weight 0", g, d)
    return _done(g, d, Labeling.identity(g.n))


def h_star_label(lengths: list[int], mults: list[int], i: int, j: int, s: int) -> int:
    """Label of mirrored vertex ``i`` of copy ``s`` in family ``j`` (all 1-based).

    ``lengths`` must be strictly increasing. Labels run through the
    vertex positions ``i`` first, then families, then copies.
    """
    t = len(lengths)
    ns = [0] + list(lengths)
    ms = [0] + list(mults)
    ji = next(q for q in range(1, t + 1) if ns[q - 1] + 1 <= i <= ns[q])
    below = sum(sum(ms[p] for p in range(q, t + 1)) * (ns[q] - ns[q - 1]) for q in range(1, ji))
    alive = sum(ms[q] for q in range(ji, t + 1))
    return below + (i - ns[ji - 1] - 1) * alive + sum(ms[q] for q in range(ji, j)) + s


def h_star(lengths: list[int], mults: list[int]) -> dict[tuple[int, int, int], int]:
    """``(i, j, s) -> label`` over every vertex of the mirrored union."""
    return {
        (i, j, s): h_star_label(lengths, mults, i, j, s)
        for j, (n, m) in enumerate(zip(lengths, mults), start=1)
        for s in range(1, m + 1)
        for i in range(1, n + 1)
    }


def tworeg_theta(spec: TwoRegularSpec, d: DistanceSet) -> ConstructionOutcome:
    g = build_union(spec)
    comps = _kinds(g)
    if any(kind is not Kind.THETA for _, kind in comps):
        return _no(Unsupported.NOT_COVERED, "not every component is Θ-oriented", g, d)
    if d.min > 0:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"the {len(comps)} sinks all have {d}-weight 0", g, d)
    if spec.copies < 2:
        return _no(Unsupported.OUT_OF_RANGE, "need at least two cycle components", g, d)
    longest = spec.components[-1].n
    if d.max > longest - 2:
        return _no(Unsupported.OUT_OF_RANGE, f"{d} exceeds the diameter {longest - 2}", g, d)

    labels = h_star_labels(g)
    if weigh(g, None, Labeling(tuple(labels)), d).antimagic:
        return _done(g, d, labels, reason="h*")
    # With 1 in D a source also collects its sink's label, which can tie it
    # with a vertex of another component; h* is then repaired by label swaps.
    repaired = local_repair(neighborhoods(g, d), labels)
    if repaired is None:
        raise ConstructionError(f"h* is not {d}-antimagic and local repair failed")
    return _done(g, d, repaired, reason="h* repaired by label swaps")


def h_star_labels(g: OrientedGraph) -> list[int]:
    """The closed-form h* labeling of a union of Θ cycles, indexed by vertex id."""
    comps = _kinds(g)
    # Families of equal length are merged; copies keep global-id order.
    by_length: dict[int, list[list[int]]] = {}
    for vs, _ in comps:
        by_length.setdefault(len(vs), []).append(vs)
    lengths = sorted(by_length)
    mults = [len(by_length[n]) for n in lengths]
    labels = [0] * g.n
    for j, n in enumerate(lengths, start=1):
        for s, vs in enumerate(by_length[n], start=1):
            # Reversing arcs maps canonical u_l to mirrored position n + 1 - l.
            for l, u in enumerate(theta_path(g, vs), start=1):
                labels[u] = h_star_label(lengths, mults, n + 1 - l, j, s)
    return labels


def construct_tworeg(spec: TwoRegularSpec, d: DistanceSet) -> ConstructionOutcome:
    if d.values == (0,):
        g = build_union(spec)
        return _done(g, d, Labeling.identity(g.n))
    if d.values == (1,):
        return tworeg_singleton_1(spec)
    if len(d) == 1:
        return tworeg_singleton_k(spec, d.min)
    if d.min == 0:
        return tworeg_theta(spec, d)
    g = build_union(spec)
    if len(g.sinks) >= 2:
        return _no(Unsupported.KNOWN_NONEXISTENT, f"{len(g.sinks)} sinks share {d}-weight 0", g, d)
    return _no(Unsupported.NOT_COVERED, f"{d} on unidirectional 2-regular graphs is open", g, d)


def single_family(n: int, kind: Kind, m: int = 1) -> TwoRegularSpec:
    return TwoRegularSpec((ComponentFamily(n, m, kind),))
