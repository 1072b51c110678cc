"""JSON, CSV and DOT formats. Files use 1-based vertex ids."""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .graph import ComponentFamily, CycleOrientation, Kind, OrientedGraph, TwoRegularSpec
from .labeling import DistanceSet, Labeling, WeightReport


class FormatError(ValueError):
    """A file does not match its schema or is internally inconsistent."""


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    text = resources.files("dantimagic").joinpath(f"data/schemas/{name}.schema.json").read_text()
    return json.loads(text)


def validate(doc, name: str) -> None:
    try:
        jsonschema.validate(doc, schema(name))
    except jsonschema.ValidationError as exc:
        raise FormatError(f"{name}: {exc.message}") from exc


def dump_json(doc: dict) -> str:
    return json.dumps(doc) + "\n"


def _load(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc


# --- graphs ---------------------------------------------------------------


def graph_to_dict(g: OrientedGraph) -> dict:
    return {
        "n": g.n,
        "arcs": [[a + 1, b + 1] for a, b in g.arcs],
        "components": list(g.components),
    }


def graph_from_dict(doc) -> OrientedGraph:
    validate(doc, "graph")
    try:
        return OrientedGraph(
            doc["n"],
            tuple((a - 1, b - 1) for a, b in doc["arcs"]),
            tuple(doc.get("components", ())),
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_graph(path: str | Path) -> OrientedGraph:
    return graph_from_dict(_load(path))


def write_graph(g: OrientedGraph, path: str | Path) -> None:
    Path(path).write_text(dump_json(graph_to_dict(g)))


# --- labelings ------------------------------------------------------------


def labeling_to_dict(f: Labeling, **extra) -> dict:
    return {"n": f.n, "labels": list(f.values), **extra}


def labeling_from_dict(doc) -> Labeling:
    validate(doc, "labeling")
    if len(doc["labels"]) != doc["n"]:
        raise FormatError(f"labeling declares n={doc['n']} but has {len(doc['labels'])} labels")
    try:
        return Labeling(tuple(doc["labels"]))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_labeling(path: str | Path) -> Labeling:
    return labeling_from_dict(_load(path))


def write_labeling(f: Labeling, path: str | Path, **extra) -> None:
    Path(path).write_text(dump_json(labeling_to_dict(f, **extra)))


# --- 2-regular specs ------------------------------------------------------


def spec_from_dict(doc) -> TwoRegularSpec:
    """``{"components": [{"n": 3, "m": 2, "kind": "theta"}, ...]}``"""
    validate(doc, "spec")
    fams = []
    try:
        for c in doc["components"]:
            kind = Kind(c.get("kind", "custom" if "orientation" in c else "uni"))
            orient = CycleOrientation.parse(c["orientation"]) if "orientation" in c else None
            fams.append(ComponentFamily(c["n"], c.get("m", 1), kind, orient))
        return TwoRegularSpec(tuple(fams))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def spec_to_dict(spec: TwoRegularSpec) -> dict:
    out = []
    for f in spec.components:
        c = {"n": f.n, "m": f.m, "kind": f.kind.value}
        if f.orientation is not None:
            c["orientation"] = str(f.orientation)
        out.append(c)
    return {"components": out}


def read_spec(path: str | Path) -> TwoRegularSpec:
    return spec_from_dict(_load(path))


# --- weight reports -------------------------------------------------------


def weights_csv(f: Labeling, report: WeightReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex", "label", "weight"])
    for v, (label, weight) in enumerate(zip(f.values, report.weights), start=1):
        w.writerow([v, label, weight])
    return buf.getvalue()


def verdict_to_dict(report: WeightReport) -> dict:
    return {
        "d": list(report.d_set),
        "antimagic": report.antimagic,
        "weights": list(report.weights),
        "witness": [report.witness[0] + 1, report.witness[1] + 1] if report.witness else None,
    }


def verdict_from_dict(doc) -> WeightReport:
    validate(doc, "verdict")
    wit = doc["witness"]
    return WeightReport(
        tuple(doc["weights"]),
        doc["antimagic"],
        (wit[0] - 1, wit[1] - 1) if wit else None,
        DistanceSet(tuple(doc["d"])),
    )


# --- DOT ------------------------------------------------------------------


def to_dot(g: OrientedGraph, f: Labeling | None = None, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        text = f"v_{v + 1}" if f is None else f"v_{v + 1}\\n{f[v]}"
        lines.append(f'  {v + 1} [label="{text}"];')
    for a, b in g.arcs:
        lines.append(f"  {a + 1} -> {b + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
