"""DOT and JSON output for quivers, relation spaces and Hilbert matrices."""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from models import HilbertMatrix, QuiverGraph, RelationSpace

logger = logging.getLogger(__name__)


def vertex_name(vertex) -> str:
    if hasattr(vertex, "coords"):
        return ",".join(str(c) for c in vertex.coords)
    if isinstance(vertex, tuple):
        return ",".join(vertex_name(v) for v in vertex)
    return str(vertex)


def to_dot(quiver: QuiverGraph, name: str = "Delta") -> str:
    """Graphviz source with edges drawn source -> target and labelled by root."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for v in quiver.vertices:
        lines.append(f'  "{vertex_name(v)}";')
    for arrow in quiver.arrows:
        label = f' [label="{arrow.label}"]' if arrow.label is not None else ""
        lines.append(f'  "{vertex_name(arrow.source)}" -> "{vertex_name(arrow.target)}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_dots(quiver: QuiverGraph, name: str = "Delta") -> List[str]:
    """One DOT document per connected component, in vertex order."""
    return [to_dot(quiver.subquiver(part), f"{name}_{k}") for k, part in enumerate(quiver.components())]


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return _jsonable(value.to_dict())
    if hasattr(value, "to_list"):
        return value.to_list()
    return value


def to_json(obj: Union[QuiverGraph, RelationSpace, HilbertMatrix, Dict, List]) -> str:
    """Deterministic JSON text for any exported object."""
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def write_text(path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info("Wrote %s (%d bytes)", path, len(text))
    return path


def write_component_dots(quiver: QuiverGraph, path: Union[str, Path], name: str = "Delta") -> List[Path]:
    """Write a single DOT file, or one file per component as <stem>_<k>.dot."""
    path = Path(path)
    docs = component_dots(quiver, name)
    if len(docs) <= 1:
        return [write_text(path, to_dot(quiver, name))]
    return [write_text(path.with_name(f"{path.stem}_{k}{path.suffix or '.dot'}"), doc) for k, doc in enumerate(docs)]


__all__ = ["vertex_name", "to_dot", "component_dots", "to_json", "write_text", "write_component_dots"]
