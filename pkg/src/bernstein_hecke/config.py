"""
JSON configurations for Hecke algebra contexts, and the shipped fixture library.

A configuration fixes the root system (as functionals on ``Z^n``), the
translation group ``Z^n (+) Z/d_1 (+) ...``, the coroot of every simple root as
an element of that group, and the weight ``L(s)`` of every simple affine
reflection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .affine import ExtendedWeylGroup, ParamSys, TranslationGroup
from .errors import ParseError, SchemaVersionMismatch, ValidationFailed
from .roots import RootSystemError, build_root_system, _named_coordinates

__all__ = ["SCHEMA_VERSION", "AlgebraConfig", "load_config", "fixture_names", "fixture_path",
           "config_from_dict"]

SCHEMA_VERSION = 1

FIXTURE_ALIASES = {"a1": "a1_root_lattice"}


@dataclass
class AlgebraConfig:
    name: str
    root_system: dict
    free_rank: int
    torsion_orders: tuple[int, ...]
    simple_coroots: list[tuple[int, ...]]
    parameters: dict[str, int]
    description: str = ""
    root_labels: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def build_group(self) -> ExtendedWeylGroup:
        lattice = TranslationGroup(self.free_rank, self.torsion_orders)
        data = dict(self.root_system)
        if "simple_roots" in data:
            data["simple_coroots"] = [c[: self.free_rank] for c in self.simple_coroots]
        rs = build_root_system(data)
        return ExtendedWeylGroup(rs, lattice, self.simple_coroots)

    def params(self) -> ParamSys:
        return ParamSys(dict(self.parameters))

    def validate(self) -> ExtendedWeylGroup:
        """Build the group and check every structural requirement; raise with all violations."""
        problems = []
        try:
            group = self.build_group()
        except RootSystemError as exc:
            raise ValidationFailed([f"{type(exc).__name__}: {exc}"]) from exc
        except ValidationFailed:
            raise
        for label in self.parameters:
            if label not in group.label_index:
                problems.append(f"parameter for unknown generator {label!r}")
        report = group.validate_params(self.params())
        for kind, a, b in report.violations:
            if kind == "missing":
                problems.append(f"missing parameter for {a}")
            elif kind == "non-positive":
                problems.append(f"parameter for {a} must be a positive integer")
            elif kind == "odd-edge":
                problems.append(f"L({a}) != L({b}) although {a}, {b} are joined by an odd edge")
            else:
                problems.append(f"L({a}) != L({b}) although a length-zero element swaps them")
        n = self.free_rank
        for label, root in self.root_labels.items():
            if tuple(root) not in group.rs.index:
                problems.append(f"root label {label!r} names {list(root)}, which is not a root")
            if len(root) != n:
                problems.append(f"root label {label!r} has the wrong dimension")
        if problems:
            raise ValidationFailed(problems)
        return group

    def quotient(self) -> "AlgebraConfig":
        """The same data with the torsion part of the translation group dropped."""
        n = self.free_rank
        rs = dict(self.root_system)
        return AlgebraConfig(
            name=self.name + "/torsion",
            root_system=rs,
            free_rank=n,
            torsion_orders=(),
            simple_coroots=[tuple(c[:n]) for c in self.simple_coroots],
            parameters=dict(self.parameters),
            description="torsion-free quotient of " + self.name,
            root_labels=dict(self.root_labels),
        )

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "description": self.description,
            "root_system": self.root_system,
            "free_rank": self.free_rank,
            "torsion_orders": list(self.torsion_orders),
            "simple_coroots": [list(c) for c in self.simple_coroots],
            "parameters": dict(self.parameters),
        }
        if self.root_labels:
            out["root_labels"] = {k: list(v) for k, v in self.root_labels.items()}
        return out


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what} must be a list of integers")
    return list(value)


def config_from_dict(data: dict, source: str = "<dict>") -> AlgebraConfig:
    if not isinstance(data, dict):
        raise ParseError(f"{source}: top level must be an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(f"{source}: schema_version {version!r}, expected {SCHEMA_VERSION}")
    missing = [k for k in ("name", "root_system", "free_rank", "parameters") if k not in data]
    if missing:
        raise ParseError(f"{source}: missing fields {missing}")
    rsys = data["root_system"]
    if not isinstance(rsys, dict):
        raise ParseError(f"{source}: root_system must be an object")
    free_rank = data["free_rank"]
    if not isinstance(free_rank, int) or free_rank < 0:
        raise ParseError(f"{source}: free_rank must be a non-negative integer")
    torsion = tuple(_int_list(data.get("torsion_orders", []), "torsion_orders"))
    if "simple_coroots" in data:
        coroots = [tuple(_int_list(c, "simple_coroots entry")) for c in data["simple_coroots"]]
    elif "type" in rsys and "simple_roots" not in rsys and "roots" not in rsys:
        try:
            _, co = _named_coordinates(rsys["type"], rsys.get("lattice", "coweight"))
        except RootSystemError as exc:
            raise ParseError(f"{source}: {exc}") from exc
        coroots = [tuple(c) + (0,) * len(torsion) for c in co]
    else:
        raise ParseError(f"{source}: simple_coroots is required unless a named type preset is used")
    dim = free_rank + len(torsion)
    for c in coroots:
        if len(c) != dim:
            raise ParseError(f"{source}: coroot {list(c)} should have {dim} coordinates")
    params = data["parameters"]
    if not isinstance(params, dict) or not all(isinstance(v, int) for v in params.values()):
        raise ParseError(f"{source}: parameters must map generator labels to integers")
    labels = {}
    for k, v in data.get("root_labels", {}).items():
        labels[k] = tuple(_int_list(v, f"root label {k}"))
    return AlgebraConfig(
        name=str(data["name"]),
        root_system=rsys,
        free_rank=free_rank,
        torsion_orders=torsion,
        simple_coroots=coroots,
        parameters=dict(params),
        description=str(data.get("description", "")),
        root_labels=labels,
    )


def fixture_names() -> list[str]:
    root = resources.files(__package__) / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    name = FIXTURE_ALIASES.get(name, name)
    return resources.files(__package__) / "fixtures" / f"{name}.json"


def load_config(path_or_name, validate: bool = True) -> AlgebraConfig:
    """Load a configuration from a file path or a shipped fixture name."""
    p = Path(str(path_or_name))
    if p.exists():
        text = p.read_text()
        source = str(p)
    else:
        fp = fixture_path(str(path_or_name))
        if not fp.is_file():
            raise ParseError(f"no such configuration file or fixture: {path_or_name}")
        text = fp.read_text()
        source = fp.name
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: {exc}") from exc
    cfg = config_from_dict(data, source)
    if validate:
        cfg.validate()
    return cfg
