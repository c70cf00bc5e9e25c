"""Problem descriptions: a complex, a coefficient field, and one pair
descriptor per vertex, loaded from JSON (or TOML as sugar).

Document shape:

    {
      "complex": {"m": 3, "generators": [[1, 2], [1, 3]]},
      "field": "Q",
      "pairs": {
        "default": {"type": "model", "b": {"4": 1}, "c": {"6": 1}, "e": {"2": 1}},
        "2": {"type": "cells", "catalog": "disk_circle"}
      }
    }

"pairs" maps vertex labels (as strings) to descriptors; the "default"
slot covers unlisted vertices.  Descriptor types: "model" (b/c/e series),
"homology" (a_dims/x_dims/inc_rank), "cells" (explicit cell model, or
"catalog" to reference a shipped one).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

try:
    import tomllib  # Python 3.11+
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib  # type: ignore[no-redef]

from .chains import CellPair, cell_pair_from_json, pair_homology_from_cells
from .linalg import Field
from .pairs import PairHomology, WedgeModel, wedge_model
from .simplicial import (
    DEFAULT_MAX_VERTICES,
    SimplicialComplex,
    check_vertex_guard,
    new_complex,
)


class ProblemError(ValueError):
    """A problem file failed to parse or resolve; message carries context."""


@dataclass(frozen=True)
class Problem:
    complex: SimplicialComplex
    field: Field | None  # None when the file does not pin a field
    descriptors: Mapping[int, tuple[str, object]]  # vertex -> (kind, payload)


def load_problem(path: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Problem:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ProblemError(f"{path}: {exc.strerror or exc}") from None
    if path.endswith(".toml"):
        try:
            obj = tomllib.loads(raw.decode("utf-8"))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
            raise ProblemError(f"{path}: {exc}") from None
    else:
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ProblemError(
                f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
    return parse_problem(obj, source=path, max_vertices=max_vertices)


def parse_problem(
    obj: object, source: str = "<problem>", max_vertices: int = DEFAULT_MAX_VERTICES
) -> Problem:
    def fail(where: str, msg: str) -> ProblemError:
        return ProblemError(f"{source}: {where}: {msg}")

    if not isinstance(obj, Mapping):
        raise fail("top level", "expected an object")
    if "complex" not in obj:
        raise fail("top level", 'missing "complex"')
    csection = obj["complex"]
    if not isinstance(csection, Mapping) or "m" not in csection:
        raise fail("complex", 'expected an object with "m" and "generators"')
    m = csection["m"]
    generators = csection.get("generators", [])
    if not isinstance(generators, (list, tuple)):
        raise fail("complex.generators", "expected an array of faces")
    try:
        # guard before closure: a single m-vertex generator means 2^m faces
        if isinstance(m, int) and not isinstance(m, bool):
            check_vertex_guard(m, max_vertices)
        K = new_complex(m, generators)
    except ValueError as exc:
        raise fail("complex", str(exc)) from None

    field: Field | None = None
    if "field" in obj:
        if not isinstance(obj["field"], str):
            raise fail("field", "expected a string like 'Q' or 'Fp:2'")
        try:
            field = Field.parse(obj["field"])
        except ValueError as exc:
            raise fail("field", str(exc)) from None

    raw_pairs = obj.get("pairs", {})
    if not isinstance(raw_pairs, Mapping):
        raise fail("pairs", "expected an object keyed by vertex label or 'default'")
    default_desc: tuple[str, object] | None = None
    per_vertex: dict[int, tuple[str, object]] = {}
    for key, desc in raw_pairs.items():
        where = f"pairs.{key}"
        if key == "default":
            default_desc = _parse_descriptor(desc, where, fail)
            continue
        try:
            label = int(key)
        except (TypeError, ValueError):
            raise fail(where, "keys must be vertex labels or 'default'") from None
        if not 1 <= label <= m:
            raise fail(where, f"vertex label {label} out of range 1..{m}")
        per_vertex[label] = _parse_descriptor(desc, where, fail)

    descriptors: dict[int, tuple[str, object]] = {}
    for v in range(1, m + 1):
        if v in per_vertex:
            descriptors[v] = per_vertex[v]
        elif default_desc is not None:
            descriptors[v] = default_desc
    return Problem(complex=K, field=field, descriptors=descriptors)


def _parse_descriptor(desc: object, where: str, fail) -> tuple[str, object]:
    if not isinstance(desc, Mapping):
        raise fail(where, "expected a pair descriptor object")
    kind = desc.get("type")
    if kind not in ("model", "homology", "cells"):
        raise fail(where, f'descriptor "type" must be model|homology|cells, got {kind!r}')
    try:
        if kind == "model":
            return (kind, WedgeModel.from_json(desc))
        if kind == "homology":
            return (kind, PairHomology.from_json(desc))
        return (kind, cell_pair_from_json(desc))
    except ValueError as exc:
        raise fail(where, str(exc)) from None


def require_descriptors(problem: Problem) -> None:
    missing = [v for v in problem.complex.vertex_labels if v not in problem.descriptors]
    if missing:
        raise ProblemError(
            f"no pair descriptor for vertex label(s) {missing} "
            f"(add entries under \"pairs\" or a \"default\" slot)"
        )


def resolve_field(problem: Problem, flag: Field | None) -> Field:
    """Combine the file's field with the --field flag; conflicts are errors."""
    if flag is not None and problem.field is not None and flag != problem.field:
        raise ProblemError(
            f"mixed fields: the file pins {problem.field} but --field says {flag}"
        )
    return flag or problem.field or Field(0)


def resolve_models(problem: Problem, field: Field) -> dict[int, WedgeModel]:
    """A WedgeModel per vertex; cell descriptors go through the oracle's
    homology (which depends on the field)."""
    require_descriptors(problem)
    out: dict[int, WedgeModel] = {}
    for v, (kind, payload) in problem.descriptors.items():
        if kind == "model":
            out[v] = payload  # type: ignore[assignment]
        elif kind == "homology":
            out[v] = wedge_model(payload)  # type: ignore[arg-type]
        else:
            out[v] = wedge_model(pair_homology_from_cells(payload, field))  # type: ignore[arg-type]
    return out


def resolve_cell_pairs(problem: Problem) -> dict[int, CellPair]:
    """A CellPair per vertex; only "cells" descriptors qualify."""
    require_descriptors(problem)
    out: dict[int, CellPair] = {}
    for v, (kind, payload) in problem.descriptors.items():
        if kind != "cells":
            raise ProblemError(
                f"oracle commands need cell models, but vertex {v} has a "
                f"{kind!r} descriptor"
            )
        out[v] = payload  # type: ignore[assignment]
    return out
