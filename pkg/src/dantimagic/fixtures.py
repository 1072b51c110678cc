"""Search-generated labelings shipped with the package.

Existence for these instances is known but no closed-form labeling is
available, so the labelings are found by backtracking and stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import CycleOrientation, build_oriented_cycle, unidirectional_bits
from .io import dump_json, labeling_to_dict
from .labeling import DistanceSet
from .search import SearchBudget, Status, backtrack, find_orientation_witness, parallel_backtrack


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    n: int
    d: DistanceSet
    unidirectional: bool


FIXTURES = [
    *(FixtureSpec(f"uni_n{n}_d0-3", n, DistanceSet((0, 3)), True) for n in (8, 10, 12)),
    *(
        FixtureSpec(f"c6_d{'-'.join(map(str, d))}", 6, DistanceSet(d), False)
        for d in [(0, 1), (0, 2), (0, 3), (0, 1, 2), (0, 2, 3)]
    ),
]


class FixtureError(RuntimeError):
    pass


def build_fixture(spec: FixtureSpec, canonical: bool = True, budget: SearchBudget = SearchBudget()) -> dict:
    if spec.unidirectional:
        c = CycleOrientation(unidirectional_bits(spec.n))
        g = build_oriented_cycle(c)
        outcome = backtrack(g, spec.d, budget) if canonical else parallel_backtrack(g, spec.d, budget)
    else:
        hit = find_orientation_witness(spec.n, spec.d, exclude_unidirectional=True, budget=budget)
        if hit is None:
            raise FixtureError(f"no non-unidirectional C{spec.n} is {spec.d}-antimagic")
        c, outcome = hit
    if outcome.status is not Status.FOUND:
        raise FixtureError(f"{spec.name}: search {outcome.status.value} after {outcome.nodes} nodes")
    return labeling_to_dict(
        outcome.labeling,
        d=list(spec.d),
        orientation=str(c),
        note="found by backtracking search",
    )


def write_fixtures(out_dir: str | Path, canonical: bool = True) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for spec in FIXTURES:
        path = out / f"{spec.name}.json"
        path.write_text(dump_json(build_fixture(spec, canonical)))
        paths.append(path)
    return paths
