"""Exhaustive and backtracking searches for D-antimagic labelings, cycle
orientation enumeration, and characterization sweeps.

These searchers are the independent oracle for the constructions: they
know nothing about the theorems and only use the verifier's notion of a
D-neighborhood.
"""

from __future__ import annotations

import enum
import itertools
import os
import random
import time
from collections import Counter
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .graph import (
    CycleOrientation,
    OrientedGraph,
    build_oriented_cycle,
    classify,
)
from .labeling import DistanceSet, Labeling, neighborhoods, weigh

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_MILLIS = 60_000


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = DEFAULT_MAX_NODES
    max_millis: int | None = DEFAULT_MAX_MILLIS

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        return cls(None, None)


class Status(enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    ABORTED = "aborted"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    labeling: Labeling | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.start = time.monotonic()

    def out_of_time(self) -> bool:
        ms = self.budget.max_millis
        return ms is not None and (time.monotonic() - self.start) * 1000 > ms

    def out_of_nodes(self, nodes: int) -> bool:
        return self.budget.max_nodes is not None and nodes >= self.budget.max_nodes


def _found(g: OrientedGraph, d: DistanceSet, labels, nodes: int) -> SearchOutcome:
    f = Labeling(tuple(int(x) for x in labels))
    if not weigh(g, None, f, d).antimagic:
        raise AssertionError(f"search returned a labeling the verifier rejects: {f.values}")
    return SearchOutcome(Status.FOUND, f, nodes)


# --- exhaustive -----------------------------------------------------------

_CHUNK = 1 << 15


@lru_cache(maxsize=4)
def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64).reshape(-1, n)


def _permutation_chunks(n: int) -> Iterator[np.ndarray]:
    if n <= 9:
        perms = _all_permutations(n)
        for start in range(0, len(perms), _CHUNK):
            yield perms[start : start + _CHUNK]
        return
    it = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(it, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def incidence_matrix(nbhds: Sequence[Sequence[int]], n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int64)
    for u, nb in enumerate(nbhds):
        m[u, list(nb)] = 1
    return m


def exhaustive(g: OrientedGraph, d: DistanceSet, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Scan all ``n!`` labelings in lexicographic order; return the first antimagic one."""
    n = g.n
    m = incidence_matrix(neighborhoods(g, d), n)
    clock = _Clock(budget)
    nodes = 0
    for chunk in _permutation_chunks(n):
        if budget.max_nodes is not None:
            chunk = chunk[: max(0, budget.max_nodes - nodes)]
            if not len(chunk):
                return SearchOutcome(Status.ABORTED, nodes=nodes)
        w = np.sort(chunk @ m.T, axis=1)
        ok = np.all(w[:, 1:] != w[:, :-1], axis=1) if n > 1 else np.ones(len(chunk), bool)
        hit = np.flatnonzero(ok)
        if len(hit):
            return _found(g, d, chunk[hit[0]], nodes + int(hit[0]) + 1)
        nodes += len(chunk)
        if clock.out_of_time() or (clock.out_of_nodes(nodes) and nodes < _factorial(n)):
            return SearchOutcome(Status.ABORTED, nodes=nodes)
    return SearchOutcome(Status.EXHAUSTED, nodes=nodes)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# --- backtracking ---------------------------------------------------------


def assignment_order(nbhds: Sequence[Sequence[int]], n: int) -> list[int]:
    """Vertices by how many neighborhoods contain them, most first, ties by id."""
    hits = Counter(x for nb in nbhds for x in nb)
    return sorted(range(n), key=lambda v: (-hits[v], v))


class _Backtracker:
    def __init__(self, g: OrientedGraph, d: DistanceSet, budget: SearchBudget):
        self.n = g.n
        self.nbhds = neighborhoods(g, d)
        self.order = assignment_order(self.nbhds, self.n)
        self.users: list[list[int]] = [[] for _ in range(self.n)]
        for u, nb in enumerate(self.nbhds):
            for x in nb:
                self.users[x].append(u)
        self.clock = _Clock(budget)
        self.nodes = 0
        self.aborted = False

    def run(self, prefix: Sequence[int] = ()) -> list[int] | None:
        n = self.n
        self.labels = [0] * n
        self.used = [False] * (n + 1)
        self.partial = [0] * n
        self.remaining = [len(nb) for nb in self.nbhds]
        self.final: set[int] = set()
        for u in range(n):
            if not self.remaining[u]:
                if 0 in self.final:
                    return None
                self.final.add(0)
        for depth, label in enumerate(prefix):
            if not self._assign(self.order[depth], label):
                return None
        return self.labels if self._extend(len(prefix)) else None

    def _assign(self, v: int, label: int) -> bool:
        self.labels[v] = label
        self.used[label] = True
        done = []
        for u in self.users[v]:
            self.partial[u] += label
            self.remaining[u] -= 1
            if not self.remaining[u]:
                if self.partial[u] in self.final:
                    self._undo(v, label, done, upto=u)
                    return False
                self.final.add(self.partial[u])
                done.append(u)
        return True

    def _undo(self, v: int, label: int, done: list[int], upto: int | None = None) -> None:
        for u in done:
            self.final.discard(self.partial[u])
        for u in self.users[v]:
            self.partial[u] -= label
            self.remaining[u] += 1
            if u == upto:
                break
        self.labels[v] = 0
        self.used[label] = False

    def _extend(self, depth: int) -> bool:
        if depth == self.n:
            return True
        v = self.order[depth]
        for label in range(1, self.n + 1):
            if self.used[label]:
                continue
            self.nodes += 1
            if self.clock.out_of_nodes(self.nodes) or (not self.nodes & 1023 and self.clock.out_of_time()):
                self.aborted = True
                return False
            # Record which neighborhoods this assignment completes so they can be undone.
            before = [u for u in self.users[v] if self.remaining[u] == 1]
            if not self._assign(v, label):
                continue
            if self._extend(depth + 1):
                return True
            if self.aborted:
                return False
            self._undo(v, label, before)
        return False


def backtrack(
    g: OrientedGraph,
    d: DistanceSet,
    budget: SearchBudget = SearchBudget(),
    prefix: Sequence[int] = (),
) -> SearchOutcome:
    """Depth-first labeling with pruning on finalized weight collisions.

    ``prefix`` fixes the labels of the first vertices in assignment order;
    used to split the search across workers.
    """
    bt = _Backtracker(g, d, budget)
    labels = bt.run(prefix)
    if labels is not None:
        return _found(g, d, labels, bt.nodes)
    if bt.aborted:
        return SearchOutcome(Status.ABORTED, nodes=bt.nodes)
    return SearchOutcome(Status.EXHAUSTED, nodes=bt.nodes)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("ANTIMAGIC_THREADS", "1")))
    except ValueError:
        return 1


def parallel_backtrack(
    g: OrientedGraph,
    d: DistanceSet,
    budget: SearchBudget = SearchBudget(),
    workers: int | None = None,
    canonical: bool = False,
) -> SearchOutcome:
    """Backtracking split over the label of the first vertex in assignment order.

    The verdict never depends on ``workers``. With ``canonical`` the
    witness is the one the serial search returns; otherwise the first
    worker to finish wins. Each worker gets the full budget.
    """
    workers = workers or thread_count()
    if workers <= 1 or g.n < 2:
        return backtrack(g, d, budget)
    prefixes = [(label,) for label in range(1, g.n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(backtrack, g, d, budget, p): i for i, p in enumerate(prefixes)}
        results: dict[int, SearchOutcome] = {}
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                results[futures[fut]] = fut.result()
            if canonical:
                # Stop once every prefix before the first success is settled.
                for i in range(len(prefixes)):
                    if i not in results:
                        break
                    if results[i].found:
                        for f in pending:
                            f.cancel()
                        # The serial search also counts one node per first label tried.
                        nodes = sum(results[j].nodes + 1 for j in range(i + 1))
                        return SearchOutcome(Status.FOUND, results[i].labeling, nodes)
            else:
                hits = [r for r in results.values() if r.found]
                if hits:
                    for f in pending:
                        f.cancel()
                    return hits[0]
    nodes = sum(r.nodes + 1 for r in results.values())
    if any(r.status is Status.ABORTED for r in results.values()):
        return SearchOutcome(Status.ABORTED, nodes=nodes)
    return SearchOutcome(Status.EXHAUSTED, nodes=nodes)


def search(g: OrientedGraph, d: DistanceSet, method: str = "backtrack", budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    if method == "exhaustive":
        return exhaustive(g, d, budget)
    if method == "backtrack":
        return backtrack(g, d, budget)
    raise ValueError(f"unknown search method {method!r}")


# --- local repair ---------------------------------------------------------


def local_repair(
    nbhds: Sequence[Sequence[int]],
    labels: Sequence[int],
    seed: int = 0,
    max_steps: int = 200_000,
) -> list[int] | None:
    """Swap labels until all weights differ, starting from ``labels``.

    A swap is kept when it does not increase the number of colliding
    vertices. Deterministic for a given seed; ``None`` if ``max_steps``
    runs out.
    """
    n = len(labels)
    rng = random.Random(seed)
    labels = list(labels)
    users: list[list[int]] = [[] for _ in range(n)]
    for u, nb in enumerate(nbhds):
        for x in nb:
            users[x].append(u)
    w = [sum(labels[x] for x in nb) for nb in nbhds]
    count = Counter(w)

    def cost() -> int:
        return sum(c - 1 for c in count.values() if c > 1)

    current = cost()
    for _ in range(max_steps):
        if not current:
            return labels
        clashing = [u for u in range(n) if count[w[u]] > 1 and nbhds[u]]
        u = rng.choice(clashing)
        x, y = rng.choice(nbhds[u]), rng.randrange(n)
        if x == y:
            continue
        touched = set(users[x]) | set(users[y])
        saved = {a: w[a] for a in touched}
        delta = labels[y] - labels[x]
        for a in touched:
            count[w[a]] -= 1
        for a in users[x]:
            w[a] += delta
        for a in users[y]:
            w[a] -= delta
        for a in touched:
            count[w[a]] += 1
        new = cost()
        if new <= current:
            labels[x], labels[y] = labels[y], labels[x]
            current = new
        else:
            for a in touched:
                count[w[a]] -= 1
                w[a] = saved[a]
                count[w[a]] += 1
    return labels if not current else None


# --- orientations ---------------------------------------------------------


def dihedral_images(bits: Sequence[bool]) -> Iterator[tuple[bool, ...]]:
    """Images of an orientation under rotations and reflections of vertex ids.

    Reflecting ``v_i -> v_{-i}`` sends edge ``i`` to edge ``-i-1`` and flips
    its direction bit.
    """
    n = len(bits)
    b = tuple(bits)
    reflected = tuple(not b[(-j - 1) % n] for j in range(n))
    for base in (b, reflected):
        for r in range(n):
            yield base[r:] + base[:r]


def canonical_bits(bits: Sequence[bool]) -> tuple[bool, ...]:
    return min(dihedral_images(bits))


def enumerate_orientations(n: int, reduce_symmetry: bool = False) -> Iterator[CycleOrientation]:
    """All ``2**n`` orientations of ``C_n`` in lexicographic order (False < True).

    With ``reduce_symmetry`` only the lexicographically least member of each
    rotation/reflection class is emitted. Relabeling cycle vertices maps
    D-antimagic labelings to D-antimagic labelings, so existence verdicts
    are class invariants.
    """
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    for bits in itertools.product((False, True), repeat=n):
        if not reduce_symmetry or canonical_bits(bits) == bits:
            yield CycleOrientation(bits)


# --- sweeps ---------------------------------------------------------------


class Verdict(enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    UNKNOWN = "Unknown"


def verdict_of(outcome: SearchOutcome) -> Verdict:
    return {
        Status.FOUND: Verdict.EXISTS,
        Status.EXHAUSTED: Verdict.NOT_EXISTS,
        Status.ABORTED: Verdict.UNKNOWN,
    }[outcome.status]


@dataclass(frozen=True)
class SweepRow:
    n: int
    orientation: str
    d: DistanceSet
    outcome: Verdict
    witness: Labeling | None = None
    expected: Verdict | None = None

    @property
    def mismatch(self) -> bool:
        return self.expected is not None and self.outcome is not Verdict.UNKNOWN and self.outcome is not self.expected

    def csv_row(self) -> dict:
        return {
            "n": self.n,
            "orientation_bits": self.orientation,
            "D": " ".join(map(str, self.d)),
            "outcome": self.outcome.value,
            "witness_labels": " ".join(map(str, self.witness.values)) if self.witness else "",
        }


SWEEP_COLUMNS = ["n", "orientation_bits", "D", "outcome", "witness_labels"]


class CharacterizationMismatch(AssertionError):
    def __init__(self, rows: list[SweepRow]):
        self.rows = rows
        super().__init__(f"{len(rows)} sweep rows contradict the expected characterization")


def singleton_expectation(g: OrientedGraph, k: int) -> Verdict:
    """Who admits a {k}-antimagic labeling among oriented cycles."""
    info = classify(g)
    if k == 0:
        return Verdict.EXISTS
    if k == 1:
        ok = info.is_unidirectional_cycle or info.is_theta_cycle
    else:
        ok = info.is_unidirectional_cycle
    return Verdict.EXISTS if ok else Verdict.NOT_EXISTS


def _row(n, c, g, d, outcome, expected=None) -> SweepRow:
    return SweepRow(n, str(c), d, verdict_of(outcome), outcome.labeling, expected)


def sweep_singleton(
    n_max: int,
    n_min: int = 3,
    method: str = "exhaustive",
    budget: SearchBudget = SearchBudget(),
    check: bool = True,
) -> list[SweepRow]:
    """Every orientation of ``C_n``, every ``{k}``; compared against the characterization."""
    rows = []
    for n in range(n_min, n_max + 1):
        for c in enumerate_orientations(n):
            g = build_oriented_cycle(c)
            for k in range(n):
                d = DistanceSet((k,))
                rows.append(_row(n, c, g, d, search(g, d, method, budget), singleton_expectation(g, k)))
    bad = [r for r in rows if r.mismatch]
    if check and bad:
        raise CharacterizationMismatch(bad)
    return rows


def sweep_pairs(
    n_max: int,
    orientations: str = "all",
    n_min: int = 3,
    method: str = "backtrack",
    budget: SearchBudget = SearchBudget(),
    reduce_symmetry: bool = False,
) -> list[SweepRow]:
    """Existence table for every two-element ``D`` within ``0..n-1``."""
    if orientations not in ("all", "uni"):
        raise ValueError("orientations must be 'all' or 'uni'")
    rows = []
    for n in range(n_min, n_max + 1):
        if orientations == "uni":
            universe = [CycleOrientation((True,) * n)]
        else:
            universe = list(enumerate_orientations(n, reduce_symmetry))
        for c in universe:
            g = build_oriented_cycle(c)
            for pair in itertools.combinations(range(n), 2):
                d = DistanceSet(pair)
                rows.append(_row(n, c, g, d, search(g, d, method, budget)))
    return rows


def find_orientation_witness(
    n: int,
    d: DistanceSet,
    exclude_unidirectional: bool = True,
    budget: SearchBudget = SearchBudget(),
) -> tuple[CycleOrientation, SearchOutcome] | None:
    """First orientation (lexicographic) with a D-antimagic labeling."""
    for c in enumerate_orientations(n):
        if exclude_unidirectional and len(set(c.bits)) == 1:
            continue
        g = build_oriented_cycle(c)
        outcome = backtrack(g, d, budget)
        if outcome.found:
            return c, outcome
    return None
