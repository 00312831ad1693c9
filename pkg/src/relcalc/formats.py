"""JSON input parsing and report rendering.

Inputs are checked in two passes: a JSON Schema pass for structure (unknown
or missing fields, wrong enumerations) raising ``SchemaError``, then the
domain constructors, whose failures are re-raised as ``ValidationError`` with
the offending field path.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

import jsonschema

from .algebra import (
    MassVector,
    RelationStance,
    ScaleBounds,
    SeptupleConfig,
    SeptupleInterval,
    SignConfig,
    WeightConfig,
)
from .catalog import (
    Assessment,
    Contribution,
    Dossier,
    PropertyCatalog,
    PropertyDef,
    Status,
    contributions,
    evaluate_dossier,
)
from .errors import InputError, IoError, OutOfRange, RelcalcError, SchemaError, ValidationError
from .evidence import BeliefSummary, Frame, MassFunction, make_mass
from .opinion import opinion_from_mass

SCHEMA_VERSION = 1
DECIMALS = 9

_num = {"type": "number"}
_version = {"const": SCHEMA_VERSION}
_property = {
    "type": "object",
    "required": ["id", "value"],
    "additionalProperties": False,
    "properties": {"id": {"type": "string", "minLength": 1}, "value": _num, "description": {"type": "string"}},
}
_septuple = {
    "type": "object",
    "required": ["intervals"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "intervals": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["upper", "label"],
                "additionalProperties": False,
                "properties": {"upper": _num, "label": {"type": "string"}, "closed": {"type": "boolean"}},
            },
        },
    },
}

CATALOG_SCHEMA = {
    "type": "object",
    "required": ["version", "stances"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "stances": {
            "type": "object",
            "additionalProperties": False,
            "properties": {s: {"type": "array", "items": _property} for s in ("hostile", "neutral", "friendly")},
        },
    },
}

DOSSIER_SCHEMA = {
    "type": "object",
    "required": ["version", "observer", "subject", "object", "assessments"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "observer": {"type": "string"},
        "subject": {"type": "string"},
        "object": {"type": "string"},
        "period": {
            "type": ["object", "null"],
            "required": ["from", "to"],
            "additionalProperties": False,
            "properties": {"from": {"type": "integer"}, "to": {"type": "integer"}},
        },
        "assessments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["stance", "property", "status"],
                "additionalProperties": False,
                "properties": {
                    "stance": {"enum": ["hostile", "neutral", "friendly"]},
                    "property": {"type": "string", "minLength": 1},
                    "status": {"enum": [s.value for s in Status]},
                    "override_value": _num,
                },
            },
        },
        "evidence_notes": {"type": "array", "items": {"type": "string"}},
    },
}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["version"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "weights": {"type": "array", "items": _num, "minItems": 3, "maxItems": 3},
        "signs": {"type": "array", "items": {"enum": [-1, 1]}, "minItems": 3, "maxItems": 3},
        "epsilon": _num,
        "septuple": {"oneOf": [{"type": "null"}, _septuple]},
        "format": {"enum": ["text", "json", "csv"]},
    },
}

MASS_SCHEMA = {
    "type": "object",
    "required": ["frame", "masses"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "frame": {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True},
        "masses": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["subset", "value"],
                "additionalProperties": False,
                "properties": {"subset": {"type": "array", "items": {"type": "string"}}, "value": _num},
            },
        },
    },
}

PARTITION_SCHEMA = {
    "type": "object",
    "required": ["priors", "evidence"],
    "additionalProperties": False,
    "properties": {
        "version": _version,
        "hypotheses": {"type": "array", "items": {"type": "string"}},
        "priors": {"type": "array", "items": _num, "minItems": 1},
        "evidence": {"type": "array", "items": {"type": "array", "items": _num}},
    },
}


# -- loading ---------------------------------------------------------------------

def _json_path(parts: Iterable[Any]) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def load_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: malformed JSON: {exc.msg}", line=exc.lineno) from exc


def check_schema(obj: Any, schema: dict, source: str = "<input>") -> None:
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(obj))
    if err is not None:
        raise SchemaError(f"{source}: {err.message}", path=_json_path(err.absolute_path))


def _domain(source: str, path: str, build: Callable[[], Any]) -> Any:
    try:
        return build()
    except InputError as exc:
        raise ValidationError(f"{source}: {exc}", path=path) from exc
    except ValueError as exc:
        raise ValidationError(f"{source}: {exc}", path=path) from exc


def catalog_from_dict(obj: Any, source: str = "<catalog>") -> PropertyCatalog:
    check_schema(obj, CATALOG_SCHEMA, source)
    props = []
    for name, rows in obj["stances"].items():
        stance = RelationStance.parse(name)
        for i, row in enumerate(rows):
            props.append(_domain(source, f"$.stances.{name}[{i}]", lambda: PropertyDef(
                row["id"], stance, row["value"], row.get("description", ""))))
    props.sort(key=lambda p: p.stance)
    return _domain(source, "$.stances", lambda: PropertyCatalog(tuple(props)))


def dossier_from_dict(obj: Any, source: str = "<dossier>") -> Dossier:
    check_schema(obj, DOSSIER_SCHEMA, source)
    assessments = []
    for i, row in enumerate(obj["assessments"]):
        assessments.append(_domain(source, f"$.assessments[{i}]", lambda: Assessment(
            RelationStance.parse(row["stance"]), row["property"], Status(row["status"]), row.get("override_value"))))
    period = obj.get("period")
    return _domain(source, "$", lambda: Dossier(
        observer=obj["observer"],
        subject=obj["subject"],
        object=obj["object"],
        assessments=tuple(assessments),
        period=(period["from"], period["to"]) if period else None,
        evidence_notes=tuple(obj.get("evidence_notes", ())),
    ))


def septuple_from_dict(obj: Any, source: str = "<septuple>") -> SeptupleConfig:
    check_schema(obj, _septuple, source)
    return _domain(source, "$.intervals", lambda: SeptupleConfig(tuple(
        SeptupleInterval(float(iv["upper"]), iv["label"], iv.get("closed", False)) for iv in obj["intervals"])))


@dataclass(frozen=True)
class RunConfig:
    weights: WeightConfig = field(default_factory=lambda: WeightConfig(0.40, 0.20, 0.40))
    signs: SignConfig = field(default_factory=SignConfig)
    septuple: SeptupleConfig | None = None
    epsilon: float = 0.1
    output_format: str = "text"

    def __post_init__(self) -> None:
        if not (math.isfinite(self.epsilon) and 0.0 < self.epsilon < 0.5):
            raise OutOfRange(f"epsilon must lie in (0, 0.5), got {self.epsilon!r}")
        if self.output_format not in ("text", "json", "csv"):
            raise ValidationError(f"unknown output format {self.output_format!r}")


def config_from_dict(obj: Any, source: str = "<config>") -> RunConfig:
    check_schema(obj, CONFIG_SCHEMA, source)
    kwargs: dict[str, Any] = {}
    if "weights" in obj:
        kwargs["weights"] = _domain(source, "$.weights", lambda: WeightConfig(*obj["weights"]))
    if "signs" in obj:
        kwargs["signs"] = _domain(source, "$.signs", lambda: SignConfig(*obj["signs"]))
    if obj.get("septuple") is not None:
        kwargs["septuple"] = septuple_from_dict(obj["septuple"], source)
    if "epsilon" in obj:
        kwargs["epsilon"] = float(obj["epsilon"])
    if "format" in obj:
        kwargs["output_format"] = obj["format"]
    return _domain(source, "$", lambda: RunConfig(**kwargs))


def mass_from_dict(obj: Any, source: str = "<mass>") -> MassFunction:
    check_schema(obj, MASS_SCHEMA, source)
    frame = _domain(source, "$.frame", lambda: Frame(tuple(obj["frame"])))
    return _domain(source, "$.masses", lambda: make_mass(
        frame, [(tuple(e["subset"]), e["value"]) for e in obj["masses"]]))


def parse_catalog(path: str | Path) -> PropertyCatalog:
    return catalog_from_dict(load_json(path), str(path))


def parse_dossier(path: str | Path) -> Dossier:
    return dossier_from_dict(load_json(path), str(path))


def parse_config(path: str | Path) -> RunConfig:
    return config_from_dict(load_json(path), str(path))


def parse_septuple(path: str | Path) -> SeptupleConfig:
    return septuple_from_dict(load_json(path), str(path))


def parse_mass(path: str | Path) -> MassFunction:
    return mass_from_dict(load_json(path), str(path))


def parse_partition(path: str | Path) -> dict:
    obj = load_json(path)
    check_schema(obj, PARTITION_SCHEMA, str(path))
    return obj


# -- serialisation ----------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise RelcalcError(f"cannot render non-finite number {x!r}")
    x = round(x, DECIMALS) + 0.0  # folds -0.0 into 0.0
    return f"{x:.{DECIMALS}f}"


def dumps(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON: insertion key order, floats at fixed 9 decimals."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, str, bool)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent + 1) for v in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def catalog_to_dict(c: PropertyCatalog) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "stances": {
            s.label.lower(): [{"id": p.id, "value": p.value, "description": p.description} for p in c.by_stance(s)]
            for s in (RelationStance.HOSTILE, RelationStance.NEUTRAL, RelationStance.FRIENDLY)
        },
    }


def mass_to_dict(m: MassFunction) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "frame": list(m.frame.hypotheses),
        "masses": [{"subset": list(labels), "value": v} for labels, v in m.focal()],
    }


def ds_to_dict(summary: BeliefSummary, m: MassFunction, base_rate: float | None = None) -> dict:
    out: dict[str, Any] = {
        "version": SCHEMA_VERSION,
        "frame": list(summary.frame.hypotheses),
        "rows": [
            {"subset": list(r.subset), "mass": r.mass, "belief": r.belief,
             "plausibility": r.plausibility, "uncertainty": r.uncertainty}
            for r in summary.rows
        ],
    }
    if len(m.frame) > 1:
        out["opinions"] = [
            {"hypothesis": h, **opinion_from_mass(m, h, base_rate).to_json()} for h in m.frame.hypotheses
        ]
    return out


# -- reports ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    observer: str
    subject: str
    object: str
    period: tuple[int, int] | None
    weights: tuple[float, float, float]
    signs: tuple[int, int, int]
    epsilon: float
    masses: MassVector
    bounds: ScaleBounds
    t_mass: float
    strength: float
    stance: str
    septuple_label: str
    fragile: bool
    notes: tuple[str, ...]
    contributions: tuple[Contribution, ...]


def build_report(d: Dossier, c: PropertyCatalog, cfg: RunConfig) -> Report:
    p = evaluate_dossier(d, c, cfg.weights, cfg.signs, cfg.septuple, cfg.epsilon)
    return Report(
        observer=d.observer,
        subject=d.subject,
        object=d.object,
        period=d.period,
        weights=cfg.weights.as_tuple(),
        signs=cfg.signs.as_tuple(),
        epsilon=cfg.epsilon,
        masses=p.masses,
        bounds=p.bounds,
        t_mass=p.t_mass,
        strength=p.strength,
        stance=p.stance_label,
        septuple_label=p.septuple_label,
        fragile=p.fragile,
        notes=p.notes,
        contributions=tuple(contributions(d, c, cfg.weights, cfg.signs)),
    )


def report_to_dict(r: Report) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "input": {
            "observer": r.observer,
            "subject": r.subject,
            "object": r.object,
            "period": {"from": r.period[0], "to": r.period[1]} if r.period else None,
            "weights": list(r.weights),
            "signs": list(r.signs),
            "epsilon": r.epsilon,
        },
        "masses": {"hostile": r.masses.hostile, "neutral": r.masses.neutral, "friendly": r.masses.friendly},
        "bounds": {
            "lower": r.bounds.lower, "upper": r.bounds.upper,
            "middle_lo": r.bounds.middle_lo, "middle_hi": r.bounds.middle_hi,
        },
        "t_mass": r.t_mass,
        "strength": r.strength,
        "stance": r.stance,
        "septuple_label": r.septuple_label,
        "fragile": r.fragile,
        "notes": list(r.notes),
        "contributions": [
            {"stance": x.stance.label.lower(), "property": x.property_id,
             "effective_value": x.effective_value, "contribution": x.contribution}
            for x in r.contributions
        ],
    }


def report_from_dict(obj: dict) -> Report:
    inp = obj["input"]
    period = inp["period"]
    return Report(
        observer=inp["observer"],
        subject=inp["subject"],
        object=inp["object"],
        period=(period["from"], period["to"]) if period else None,
        weights=tuple(float(w) for w in inp["weights"]),
        signs=tuple(int(s) for s in inp["signs"]),
        epsilon=float(inp["epsilon"]),
        masses=MassVector(**obj["masses"]),
        bounds=ScaleBounds(**obj["bounds"]),
        t_mass=float(obj["t_mass"]),
        strength=float(obj["strength"]),
        stance=obj["stance"],
        septuple_label=obj["septuple_label"],
        fragile=bool(obj["fragile"]),
        notes=tuple(obj["notes"]),
        contributions=tuple(
            Contribution(RelationStance.parse(x["stance"]), x["property"],
                         float(x["effective_value"]), float(x["contribution"]))
            for x in obj["contributions"]
        ),
    )


def render_json(reports: Sequence[Report]) -> str:
    body = [report_to_dict(r) for r in reports]
    return dumps(body[0] if len(body) == 1 else body) + "\n"


CSV_FIELDS = [
    "observer", "subject", "object", "period_from", "period_to", "h_mass", "n_mass", "f_mass",
    "lower", "upper", "middle_lo", "middle_hi", "t_mass", "strength", "stance", "septuple_label",
    "fragile", "notes",
]


def render_csv(reports: Sequence[Report]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow([
            r.observer, r.subject, r.object,
            r.period[0] if r.period else "", r.period[1] if r.period else "",
            *(_fmt_float(v) for v in r.masses.as_tuple()),
            *(_fmt_float(v) for v in (r.bounds.lower, r.bounds.upper, r.bounds.middle_lo, r.bounds.middle_hi)),
            _fmt_float(r.t_mass), _fmt_float(r.strength), r.stance, r.septuple_label,
            "true" if r.fragile else "false", ";".join(r.notes),
        ])
    return buf.getvalue()


def _f6(x: float) -> str:
    return f"{round(x, 6) + 0.0:.6f}"


def render_text(reports: Sequence[Report]) -> str:
    blocks = []
    for r in reports:
        period = f" ({r.period[0]}-{r.period[1]})" if r.period else ""
        signs = " ".join(f"{s:+d}" for s in r.signs)
        lines = [
            f"Trust perception {r.subject} -> {r.object}{period}, observer: {r.observer}",
            f"  weights (h, n, f) : {' '.join(_f6(w) for w in r.weights)}   signs: {signs}",
            f"  masses  (h, n, f) : {' '.join(_f6(m) for m in r.masses.as_tuple())}",
            f"  scale             : [{_f6(r.bounds.lower)}, {_f6(r.bounds.upper)}]"
            f"  neutral band [{_f6(r.bounds.middle_lo)}, {_f6(r.bounds.middle_hi)}]",
            f"  t_mass            : {_f6(r.t_mass)}",
            f"  strength          : {_f6(r.strength)}",
            f"  stance            : {r.stance} (septuple: {r.septuple_label})",
            f"  fragile           : {'yes' if r.fragile else 'no'}",
            f"  notes             : {', '.join(r.notes) if r.notes else '-'}",
            "  contributions:",
        ]
        lines += [
            f"    {x.stance.label.lower():<8} {x.property_id:<4} {_f6(x.effective_value):>10} {_f6(x.contribution):>10}"
            for x in r.contributions
        ] or ["    (none)"]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_reports(reports: Sequence[Report], fmt: str) -> str:
    return {"json": render_json, "csv": render_csv, "text": render_text}[fmt](reports)


def render_ds_text(summary: BeliefSummary, m: MassFunction, base_rate: float | None = None) -> str:
    lines = [f"{'hypothesis':<24} {'mass':>10} {'belief':>10} {'plaus.':>10} {'uncert.':>10}"]
    for r in summary.rows:
        name = "EITHER" if len(r.subset) == len(summary.frame) and len(r.subset) > 1 else " or ".join(r.subset)
        lines.append(
            f"{name:<24} {_f6(r.mass):>10} {_f6(r.belief):>10} {_f6(r.plausibility):>10} {_f6(r.uncertainty):>10}"
        )
    if len(m.frame) > 1:
        lines.append("")
        lines.append(f"{'opinion':<24} {'b':>10} {'d':>10} {'u':>10} {'a':>10}")
        for h in m.frame.hypotheses:
            o = opinion_from_mass(m, h, base_rate)
            lines.append(f"{h:<24} {_f6(o.b):>10} {_f6(o.d):>10} {_f6(o.u):>10} {_f6(o.a):>10}")
    return "\n".join(lines) + "\n"


def render_mass_text(m: MassFunction, k: float | None = None) -> str:
    lines = []
    if k is not None:
        lines.append(f"conflict K = {_f6(k)}")
    for labels, v in m.focal():
        lines.append(f"{'{' + ', '.join(labels) + '}':<32} {_f6(v):>10}")
    return "\n".join(lines) + "\n"


def render_catalog_text(c: PropertyCatalog) -> str:
    lines = []
    for s in (RelationStance.FRIENDLY, RelationStance.NEUTRAL, RelationStance.HOSTILE):
        props = c.by_stance(s)
        lines.append(f"{s.label}")
        for p in props:
            lines.append(f"  {p.id:<4} {p.value:<6g} {p.description}")
        lines.append(f"  total {math.fsum(p.value for p in props):g}")
        lines.append("")
    return "\n".join(lines)
