"""Machine-readable suite reports and graph exports (JSON and DOT)."""

import json
from typing import Dict, List, Optional

from . import __version__
from .crystal import CrystalGraph

STATUSES = ("pass", "fail", "skipped")

# fixed palette; colors beyond the table cycle through it
_PALETTE = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#17becf",
)
ZERO_COLOR = "#666666"


def edge_color(i: int) -> str:
    if i == 0:
        return ZERO_COLOR
    return _PALETTE[(i - 1) % len(_PALETTE)]


class Case:
    __slots__ = ("id", "ref", "status", "witness", "time")

    def __init__(self, case_id: str, ref: str, status: str, witness=None, time: float = 0.0):
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        self.id = case_id
        self.ref = ref
        self.status = status
        self.witness = witness
        self.time = time

    def to_dict(self, include_times: bool = True) -> Dict:
        out = {"id": self.id, "ref": self.ref, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if include_times:
            out["time"] = round(self.time, 3)
        return out


class SuiteReport:
    """Ordered list of verification cases plus the run configuration."""

    def __init__(self, config: Optional[Dict] = None):
        self.config = dict(config or {})
        self.cases: List[Case] = []

    def add(self, case_id: str, ref: str, ok, witness=None, time: float = 0.0) -> Case:
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        case = Case(case_id, ref, status, witness, time)
        self.cases.append(case)
        return case

    @property
    def summary(self) -> Dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["fail"] == 0 else 1

    def to_dict(self, include_times: bool = True) -> Dict:
        return {
            "version": __version__,
            "config": self.config,
            "cases": [c.to_dict(include_times) for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self, include_times: bool = True) -> str:
        return json.dumps(self.to_dict(include_times), sort_keys=True, indent=2) + "\n"


def _sorted_edges(graph: CrystalGraph):
    return sorted(graph.edges.items(), key=lambda kv: (kv[0][0], kv[0][1]))


def graph_json(graph: CrystalGraph) -> Dict:
    """{vertices: [{id, tableau, weight}], edges: [{src, dst, color}]}."""
    vertices = []
    for idx in range(graph.size):
        entry = {"id": idx, "weight": [str(x) for x in graph.weights[idx]]}
        if graph.labels is not None:
            entry["tableau"] = list(graph.labels[idx])
        vertices.append(entry)
    edges = [
        {"src": src, "dst": tgt, "color": c}
        for (src, c), tgt in _sorted_edges(graph)
    ]
    return {"vertices": vertices, "edges": edges}


def emit_dot(graph: CrystalGraph) -> str:
    """Deterministic DOT text: boxes labeled by tableau letters, one colored
    directed edge per operator arrow, color-0 arrows dashed."""
    lines = ["digraph crystal {", "  rankdir=TB;", "  node [shape=box, fontsize=10];"]
    for idx in range(graph.size):
        if graph.labels is not None:
            label = " ".join(str(x) for x in graph.labels[idx])
        else:
            label = str(idx)
        lines.append(f'  v{idx} [label="{label}"];')
    for (src, c), tgt in _sorted_edges(graph):
        style = ', style="dashed"' if c == 0 else ""
        lines.append(
            f'  v{src} -> v{tgt} [label="{c}", color="{edge_color(c)}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
