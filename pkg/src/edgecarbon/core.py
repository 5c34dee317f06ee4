"""Shared domain types, canonical units, and structural validation.

Canonical units throughout the package: energy in joules (benchmark files
carry mJ, converted at ingest), mass in grams, area in cm^2 (device files
may carry mm^2, converted at ingest), memory capacity in GB, distance in
km, carbon in kgCO2-eq, carbon intensity in kgCO2-eq/kWh.
"""

from __future__ import annotations

import enum
import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

SCHEMA_VERSION = 1

VALID_BITWIDTHS = (4, 8, 16, 32)
NPU_BITWIDTHS = (4, 8, 16)
MAX_CONCAT_INPUTS = 4


class EdgecarbonError(Exception):
    """Base class for errors raised by this package."""


class SchemaError(EdgecarbonError):
    """A structured-text input does not conform to its documented schema."""


class FactorLookupError(EdgecarbonError):
    """A factor lookup failed; carries the known keys for the message."""

    def __init__(self, kind: str, key: str, known: Iterable[str]):
        self.kind = kind
        self.key = key
        self.known = sorted(known)
        super().__init__(
            f"unknown {kind} entry {key!r}; known entries: {', '.join(self.known) or '(none)'}"
        )


class ModelLookupError(EdgecarbonError):
    """A network kernel could not be resolved to a trained energy model."""


class KernelType(str, enum.Enum):
    CONV = "conv+bn+relu"
    DWCONV = "dwconv+bn+relu"
    BN_RELU = "bn+relu"
    RELU = "relu"
    POOL = "avg/max pool"
    FC = "fc"
    CONCAT = "concat"
    OTHERS = "others"

    @classmethod
    def parse(cls, tag: str) -> "KernelType":
        try:
            return cls(tag)
        except ValueError:
            known = ", ".join(k.value for k in cls)
            raise SchemaError(f"unknown kernel type {tag!r}; known types: {known}") from None


class UnitKind(str, enum.Enum):
    CPU = "cpu"
    GPU = "gpu"
    NPU = "npu"

    @classmethod
    def parse(cls, tag: str) -> "UnitKind":
        try:
            return cls(tag.lower())
        except ValueError:
            raise SchemaError(f"unknown execution unit kind {tag!r}; expected cpu/gpu/npu") from None


# Configuration fields carried by each kernel type. Order doubles as the
# feature layout used by the energy models.
CONFIG_FIELDS: dict[KernelType, tuple[str, ...]] = {
    KernelType.CONV: ("hw", "c_i", "c_o", "ks", "s", "bw"),
    KernelType.DWCONV: ("hw", "c_i", "ks", "s", "bw"),
    KernelType.BN_RELU: ("hw", "c_i", "bw"),
    KernelType.RELU: ("hw", "c_i", "bw"),
    KernelType.POOL: ("hw", "c_i", "ks", "s", "bw"),
    KernelType.FC: ("c_i", "c_o", "bw"),
    KernelType.CONCAT: ("hw", "c_i1", "c_i2", "c_i3", "c_i4", "bw"),
    KernelType.OTHERS: ("hw", "c_i", "bw"),
}


@dataclass(frozen=True)
class KernelConfig:
    """One kernel's configuration tuple.

    Only the fields demanded by the kernel type are present; `hw` is the
    *input* spatial size (square inputs only). For concat kernels the input
    channel counts live in `extra_channels` (up to four, trailing zeros for
    unused inputs).
    """

    hw: Optional[int] = None
    c_i: Optional[int] = None
    c_o: Optional[int] = None
    ks: Optional[int] = None
    s: Optional[int] = None
    bw: Optional[int] = None
    extra_channels: Optional[tuple[int, ...]] = None

    def present_fields(self) -> tuple[str, ...]:
        out = [f for f in ("hw", "c_i", "c_o", "ks", "s", "bw") if getattr(self, f) is not None]
        if self.extra_channels is not None:
            out.extend(f"c_i{i + 1}" for i in range(len(self.extra_channels)))
        return tuple(out)

    def feature_value(self, name: str) -> float:
        if name.startswith("c_i") and len(name) > 3:
            idx = int(name[3:]) - 1
            ch = self.extra_channels or ()
            return float(ch[idx]) if idx < len(ch) else 0.0
        val = getattr(self, name)
        if val is None:
            raise ValueError(f"config field {name!r} is absent")
        return float(val)

    def feature_vector(self, kernel_type: KernelType) -> tuple[float, ...]:
        return tuple(self.feature_value(f) for f in CONFIG_FIELDS[kernel_type])


@dataclass(frozen=True)
class SocSpec:
    """Registry entry describing one system-on-chip."""

    name: str
    cpu_cores: tuple[str, ...]
    gpu: str
    npu: str


@dataclass(frozen=True)
class ExecutionUnit:
    kind: UnitKind
    soc: str

    def key(self) -> str:
        return f"{self.kind.value}@{self.soc}"


@dataclass(frozen=True)
class NetworkKernel:
    kernel_type: KernelType
    config: KernelConfig


@dataclass(frozen=True)
class NetworkDescription:
    name: str
    kernels: tuple[NetworkKernel, ...]
    declared_flops: Optional[float] = None
    top1_accuracy: Mapping[str, float] = field(default_factory=dict)
    notes: str = ""

    def bitwidth(self) -> Optional[int]:
        widths = {k.config.bw for k in self.kernels if k.config.bw is not None}
        return widths.pop() if len(widths) == 1 else None


class ComputingKind(str, enum.Enum):
    SOC = "SoC"
    CHIPSET = "Chipset"
    DRAM = "DRAM"
    FLASH = "Flash"


LOGIC_KINDS = (ComputingKind.SOC, ComputingKind.CHIPSET)
MEMORY_KINDS = (ComputingKind.DRAM, ComputingKind.FLASH)


class NonComputingKind(str, enum.Enum):
    ACTUATOR = "Actuator"
    CASING = "Casing"
    CONNECTIVITY = "Connectivity"
    PCB = "PCB"
    POWER_SUPPLY = "PowerSupply"
    SENSING = "Sensing"
    UI = "UI"
    OTHERS = "Others"


@dataclass(frozen=True)
class ComputingComponent:
    kind: ComputingKind
    area_cm2: Optional[float] = None  # logic kinds
    node: Optional[str] = None  # logic kinds
    capacity_gb: Optional[float] = None  # memory kinds
    time_share: float = 1.0

    def label(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class NonComputingComponent:
    kind: NonComputingKind
    subkind: str
    mass_g: Optional[float] = None
    area_cm2: Optional[float] = None
    count: Optional[float] = None
    time_share: float = 1.0

    def label(self) -> str:
        return f"{self.kind.value}/{self.subkind}"

    def quantity_fields(self) -> tuple[str, ...]:
        return tuple(
            f for f in ("mass_g", "area_cm2", "count") if getattr(self, f) is not None
        )


@dataclass(frozen=True)
class TransportLeg:
    mode: str
    mass_g: float
    distance_km: float


@dataclass(frozen=True)
class DeviceDescription:
    name: str
    computing: tuple[ComputingComponent, ...]
    non_computing: tuple[NonComputingComponent, ...]
    lifetime_years: float = 3.0
    transport_legs: tuple[TransportLeg, ...] = ()
    notes: str = ""


@dataclass(frozen=True)
class FactorEntry:
    value: float
    provenance: str = "user"  # one of: paper-text, table-calibrated, user
    note: str = ""


PROVENANCE_TAGS = ("paper-text", "table-calibrated", "user")


@dataclass(frozen=True)
class FactorPack:
    """All carbon factors used by the estimators, with per-entry provenance.

    ci          region -> kgCO2-eq per kWh
    cpa_logic   process node -> kgCO2-eq per cm^2 (chip fabrication)
    cpc         DRAM/Flash -> kgCO2-eq per GB
    cpm         material subkind -> kgCO2-eq per gram
    cpd         transport mode -> kgCO2-eq per gram-km
    fixed       item subkind -> kgCO2-eq per item
    cpa_other   area-based subkind (PCB, analog sensors) -> kgCO2-eq per cm^2
    cpc_node_scale  target node -> {DRAM/Flash -> multiplier} for node scenarios
    """

    ci: Mapping[str, FactorEntry]
    cpa_logic: Mapping[str, FactorEntry]
    cpc: Mapping[str, FactorEntry]
    cpm: Mapping[str, FactorEntry]
    cpd: Mapping[str, FactorEntry]
    fixed: Mapping[str, FactorEntry]
    cpa_other: Mapping[str, FactorEntry]
    cpc_node_scale: Mapping[str, Mapping[str, float]] = field(default_factory=dict)

    def resolve_subkind(self, subkind: str) -> tuple[str, FactorEntry]:
        """Resolve a non-computing subkind to its unique factor table.

        Returns (table_name, entry) where table_name is one of
        "cpm"/"cpa_other"/"fixed". Raises FactorLookupError when the subkind
        is missing or ambiguous.
        """
        hits = [
            (name, table[subkind])
            for name, table in (("cpm", self.cpm), ("cpa_other", self.cpa_other), ("fixed", self.fixed))
            if subkind in table
        ]
        if len(hits) == 1:
            return hits[0]
        known = set(self.cpm) | set(self.cpa_other) | set(self.fixed)
        if not hits:
            raise FactorLookupError("subkind", subkind, known)
        tables = " and ".join(name for name, _ in hits)
        raise EdgecarbonError(f"subkind {subkind!r} is ambiguous: present in {tables}")


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


# ---------------------------------------------------------------------------
# Validation


def validate_config(kernel_type: KernelType, config: KernelConfig) -> list[str]:
    """Check one kernel config against its type's field set and value rules."""
    problems: list[str] = []
    expected = CONFIG_FIELDS[kernel_type]
    simple_expected = tuple(f for f in expected if not f.startswith("c_i") or f == "c_i")
    wants_extra = kernel_type is KernelType.CONCAT

    present = config.present_fields()
    for f in ("hw", "c_i", "c_o", "ks", "s", "bw"):
        val = getattr(config, f)
        if val is None:
            if f in simple_expected:
                problems.append(f"missing field {f!r}")
        elif f not in simple_expected:
            problems.append(f"unexpected field {f!r} for kernel type {kernel_type.value!r}")
        elif not isinstance(val, int) or isinstance(val, bool) or val <= 0:
            problems.append(f"field {f!r} must be a positive integer, got {val!r}")

    if wants_extra:
        ch = config.extra_channels
        if ch is None:
            problems.append("missing field 'extra_channels'")
        else:
            if len(ch) > MAX_CONCAT_INPUTS:
                problems.append(f"concat supports at most {MAX_CONCAT_INPUTS} inputs, got {len(ch)}")
            if any((not isinstance(c, int)) or isinstance(c, bool) or c < 0 for c in ch):
                problems.append("extra_channels entries must be non-negative integers")
            elif not any(c > 0 for c in ch):
                problems.append("concat needs at least one non-zero input channel count")
    elif config.extra_channels is not None:
        problems.append(f"unexpected field 'extra_channels' for kernel type {kernel_type.value!r}")

    if config.s is not None and config.ks is not None and config.s > config.ks:
        problems.append(f"stride {config.s} exceeds kernel size {config.ks}")
    if config.bw is not None and config.bw not in VALID_BITWIDTHS:
        problems.append(f"bitwidth must be one of {VALID_BITWIDTHS}, got {config.bw}")
    del present
    return problems


def validate_network(net: NetworkDescription) -> ValidationReport:
    """Flag kernels whose fields mismatch their type's configuration column
    and networks mixing bitwidths."""
    violations: list[Violation] = []
    widths = set()
    for i, k in enumerate(net.kernels):
        path = f"kernels[{i}]({k.kernel_type.value})"
        for msg in validate_config(k.kernel_type, k.config):
            violations.append(Violation(path, msg))
        if k.config.bw is not None:
            widths.add(k.config.bw)
    if len(widths) > 1:
        violations.append(
            Violation("kernels", f"network mixes bitwidths {sorted(widths)}; all kernels must share one")
        )
    return ValidationReport(tuple(violations))


def validate_device(device: DeviceDescription, pack: FactorPack) -> ValidationReport:
    """List everything that would prevent estimating this device under `pack`.

    Violations are data, not failures: an empty report means the device is
    estimable.
    """
    violations: list[Violation] = []
    if device.lifetime_years <= 0:
        violations.append(Violation("lifetime", "lifetime must be positive"))

    for i, comp in enumerate(device.computing):
        path = f"computing[{i}]({comp.kind.value})"
        if not 0.0 <= comp.time_share <= 1.0:
            violations.append(Violation(path, f"time_share {comp.time_share} outside [0, 1]"))
        if comp.kind in LOGIC_KINDS:
            if comp.area_cm2 is None or comp.node is None:
                violations.append(Violation(path, "logic components need area_cm2 and node"))
            elif comp.area_cm2 < 0:
                violations.append(Violation(path, f"area_cm2 must be >= 0, got {comp.area_cm2}"))
            if comp.capacity_gb is not None:
                violations.append(Violation(path, "logic components must not carry capacity_gb"))
            if comp.node is not None and comp.node not in pack.cpa_logic:
                try:
                    interpolate_node_cpa(pack, comp.node)
                except (FactorLookupError, EdgecarbonError) as exc:
                    violations.append(Violation(path, str(exc)))
        else:
            if comp.capacity_gb is None:
                violations.append(Violation(path, "memory components need capacity_gb"))
            elif comp.capacity_gb < 0:
                violations.append(Violation(path, f"capacity_gb must be >= 0, got {comp.capacity_gb}"))
            if comp.area_cm2 is not None or comp.node is not None:
                violations.append(Violation(path, "memory components must not carry area_cm2/node"))
            if comp.kind.value not in pack.cpc:
                violations.append(Violation(path, f"no per-GB factor for {comp.kind.value!r}"))

    for i, comp in enumerate(device.non_computing):
        path = f"non_computing[{i}]({comp.label()})"
        if not 0.0 <= comp.time_share <= 1.0:
            violations.append(Violation(path, f"time_share {comp.time_share} outside [0, 1]"))
        qfields = comp.quantity_fields()
        if len(qfields) != 1:
            violations.append(
                Violation(path, f"exactly one of mass_g/area_cm2/count must be set, got {qfields or '()'}")
            )
            continue
        qty = getattr(comp, qfields[0])
        if qty < 0:
            violations.append(Violation(path, f"{qfields[0]} must be >= 0, got {qty}"))
        try:
            table, _ = pack.resolve_subkind(comp.subkind)
        except EdgecarbonError as exc:
            violations.append(Violation(path, str(exc)))
            continue
        wanted = {"cpm": "mass_g", "cpa_other": "area_cm2", "fixed": "count"}[table]
        if qfields[0] != wanted:
            violations.append(
                Violation(path, f"subkind {comp.subkind!r} is {table}-based and needs {wanted!r}, got {qfields[0]!r}")
            )

    for i, leg in enumerate(device.transport_legs):
        path = f"transport_legs[{i}]"
        if leg.mode not in pack.cpd:
            violations.append(Violation(path, f"unknown transport mode {leg.mode!r}"))
        if leg.mass_g < 0 or leg.distance_km < 0:
            violations.append(Violation(path, "mass and distance must be >= 0"))

    return ValidationReport(tuple(violations))


# ---------------------------------------------------------------------------
# Process-node table


def _node_nm(node: str) -> Optional[float]:
    if node.endswith("nm"):
        try:
            return float(node[:-2])
        except ValueError:
            return None
    return None


def interpolate_node_cpa(pack: FactorPack, node: str) -> float:
    """CPA for a process node, log-log interpolating between listed nodes.

    Exact entries win. Unlisted numeric nodes inside the listed range are
    interpolated (carbon per area vs. feature size, both log axes) with a
    warning; anything outside the range or non-numeric is an error.
    """
    if node in pack.cpa_logic:
        return pack.cpa_logic[node].value
    import math

    nm = _node_nm(node)
    anchors = sorted(
        (n, e.value) for n, e in ((_node_nm(k), v) for k, v in pack.cpa_logic.items()) if n is not None
    )
    if nm is None or len(anchors) < 2:
        raise FactorLookupError("process node", node, pack.cpa_logic)
    lo, hi = anchors[0][0], anchors[-1][0]
    if not lo <= nm <= hi:
        raise EdgecarbonError(
            f"process node {node!r} outside the interpolation range [{lo:g}nm, {hi:g}nm]"
        )
    for (n0, v0), (n1, v1) in zip(anchors, anchors[1:]):
        if n0 <= nm <= n1:
            t = (math.log(nm) - math.log(n0)) / (math.log(n1) - math.log(n0))
            value = math.exp(math.log(v0) * (1 - t) + math.log(v1) * t)
            warnings.warn(
                f"process node {node!r} not listed; log-log interpolated CPA {value:.4g} kgCO2-eq/cm^2",
                stacklevel=2,
            )
            return value
    raise FactorLookupError("process node", node, pack.cpa_logic)  # pragma: no cover


# ---------------------------------------------------------------------------
# Structured-text (JSON) schemas


def _check_schema(obj: Mapping, kind: str, allowed: set[str], strict: bool) -> None:
    if not isinstance(obj, Mapping):
        raise SchemaError(f"{kind} file must be a JSON object")
    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"{kind} file needs schema_version = {SCHEMA_VERSION}, got {version!r}")
    unknown = set(obj) - allowed - {"schema_version"}
    if unknown:
        msg = f"{kind} file has unknown fields: {sorted(unknown)}"
        if strict:
            raise SchemaError(msg)
        warnings.warn(msg, stacklevel=3)


def _require(obj: Mapping, key: str, kind: str):
    if key not in obj:
        raise SchemaError(f"{kind} file is missing required field {key!r}")
    return obj[key]


def config_from_dict(kernel_type: KernelType, obj: Mapping) -> KernelConfig:
    extra = obj.get("extra_channels")
    return KernelConfig(
        hw=obj.get("hw"),
        c_i=obj.get("c_i"),
        c_o=obj.get("c_o"),
        ks=obj.get("ks"),
        s=obj.get("s"),
        bw=obj.get("bw"),
        extra_channels=tuple(extra) if extra is not None else None,
    )


def config_to_dict(config: KernelConfig) -> dict:
    out: dict = {}
    for f in ("hw", "c_i", "c_o", "ks", "s", "bw"):
        val = getattr(config, f)
        if val is not None:
            out[f] = val
    if config.extra_channels is not None:
        out["extra_channels"] = list(config.extra_channels)
    return out


def network_from_dict(obj: Mapping, strict: bool = False) -> NetworkDescription:
    _check_schema(obj, "network", {"name", "kernels", "declared_flops", "top1_accuracy", "notes"}, strict)
    kernels = []
    for i, entry in enumerate(_require(obj, "kernels", "network")):
        if "type" not in entry:
            raise SchemaError(f"network kernel [{i}] is missing 'type'")
        ktype = KernelType.parse(entry["type"])
        cfg = config_from_dict(ktype, {k: v for k, v in entry.items() if k != "type"})
        kernels.append(NetworkKernel(ktype, cfg))
    return NetworkDescription(
        name=_require(obj, "name", "network"),
        kernels=tuple(kernels),
        declared_flops=obj.get("declared_flops"),
        top1_accuracy=dict(obj.get("top1_accuracy", {})),
        notes=obj.get("notes", ""),
    )


def network_to_dict(net: NetworkDescription) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": net.name,
        "kernels": [{"type": k.kernel_type.value, **config_to_dict(k.config)} for k in net.kernels],
    }
    if net.declared_flops is not None:
        out["declared_flops"] = net.declared_flops
    if net.top1_accuracy:
        out["top1_accuracy"] = dict(net.top1_accuracy)
    if net.notes:
        out["notes"] = net.notes
    return out


def _area_cm2_from(obj: Mapping) -> Optional[float]:
    if "area_cm2" in obj and "area_mm2" in obj:
        raise SchemaError("component carries both area_cm2 and area_mm2")
    if "area_mm2" in obj:
        return obj["area_mm2"] / 100.0
    return obj.get("area_cm2")


def device_from_dict(obj: Mapping, strict: bool = False) -> DeviceDescription:
    allowed = {"name", "lifetime_years", "computing", "non_computing", "transport_legs", "notes"}
    _check_schema(obj, "device", allowed, strict)
    computing = []
    for entry in obj.get("computing", []):
        try:
            kind = ComputingKind(_require(entry, "kind", "device"))
        except ValueError:
            raise SchemaError(f"unknown computing kind {entry.get('kind')!r}") from None
        computing.append(
            ComputingComponent(
                kind=kind,
                area_cm2=_area_cm2_from(entry),
                node=entry.get("node"),
                capacity_gb=entry.get("capacity_gb"),
                time_share=entry.get("time_share", 1.0),
            )
        )
    non_computing = []
    for entry in obj.get("non_computing", []):
        try:
            kind = NonComputingKind(_require(entry, "kind", "device"))
        except ValueError:
            raise SchemaError(f"unknown non-computing kind {entry.get('kind')!r}") from None
        non_computing.append(
            NonComputingComponent(
                kind=kind,
                subkind=_require(entry, "subkind", "device"),
                mass_g=entry.get("mass_g"),
                area_cm2=_area_cm2_from(entry),
                count=entry.get("count"),
                time_share=entry.get("time_share", 1.0),
            )
        )
    legs = tuple(
        TransportLeg(leg["mode"], leg["mass_g"], leg["distance_km"])
        for leg in obj.get("transport_legs", [])
    )
    return DeviceDescription(
        name=_require(obj, "name", "device"),
        computing=tuple(computing),
        non_computing=tuple(non_computing),
        lifetime_years=obj.get("lifetime_years", 3.0),
        transport_legs=legs,
        notes=obj.get("notes", ""),
    )


def device_to_dict(device: DeviceDescription) -> dict:
    computing = []
    for c in device.computing:
        entry: dict = {"kind": c.kind.value}
        if c.area_cm2 is not None:
            entry["area_cm2"] = c.area_cm2
        if c.node is not None:
            entry["node"] = c.node
        if c.capacity_gb is not None:
            entry["capacity_gb"] = c.capacity_gb
        if c.time_share != 1.0:
            entry["time_share"] = c.time_share
        computing.append(entry)
    non_computing = []
    for c in device.non_computing:
        entry = {"kind": c.kind.value, "subkind": c.subkind}
        for f in ("mass_g", "area_cm2", "count"):
            if getattr(c, f) is not None:
                entry[f] = getattr(c, f)
        if c.time_share != 1.0:
            entry["time_share"] = c.time_share
        non_computing.append(entry)
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": device.name,
        "lifetime_years": device.lifetime_years,
        "computing": computing,
        "non_computing": non_computing,
    }
    if device.transport_legs:
        out["transport_legs"] = [
            {"mode": leg.mode, "mass_g": leg.mass_g, "distance_km": leg.distance_km}
            for leg in device.transport_legs
        ]
    if device.notes:
        out["notes"] = device.notes
    return out


_FACTOR_TABLES = ("ci", "cpa_logic", "cpc", "cpm", "cpd", "fixed", "cpa_other")


def _entries_from(table: Mapping, name: str) -> dict[str, FactorEntry]:
    out = {}
    for key, raw in table.items():
        if isinstance(raw, Mapping):
            value = _require(raw, "value", f"factor table {name}")
            provenance = raw.get("provenance", "user")
            note = raw.get("note", "")
        else:
            value, provenance, note = raw, "user", ""
        if provenance not in PROVENANCE_TAGS:
            raise SchemaError(f"factor {name}[{key!r}] has unknown provenance {provenance!r}")
        if not isinstance(value, (int, float)) or value < 0:
            raise SchemaError(f"factor {name}[{key!r}] must be a non-negative number, got {value!r}")
        out[key] = FactorEntry(float(value), provenance, note)
    return out


def factors_from_dict(obj: Mapping, strict: bool = False) -> FactorPack:
    allowed = set(_FACTOR_TABLES) | {"cpc_node_scale", "notes"}
    _check_schema(obj, "factor pack", allowed, strict)
    tables = {name: _entries_from(obj.get(name, {}), name) for name in _FACTOR_TABLES}
    scale = {
        node: {kind: float(v) for kind, v in entry.items()}
        for node, entry in obj.get("cpc_node_scale", {}).items()
    }
    return FactorPack(cpc_node_scale=scale, **tables)


def factors_to_dict(pack: FactorPack) -> dict:
    out: dict = {"schema_version": SCHEMA_VERSION}
    for name in _FACTOR_TABLES:
        table: Mapping[str, FactorEntry] = getattr(pack, name)
        out[name] = {
            key: {"value": e.value, "provenance": e.provenance, **({"note": e.note} if e.note else {})}
            for key, e in table.items()
        }
    if pack.cpc_node_scale:
        out["cpc_node_scale"] = {n: dict(v) for n, v in pack.cpc_node_scale.items()}
    return out


def load_json(path: str | Path) -> dict:
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON ({exc})") from None


def save_json(obj: Mapping, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load_network(path: str | Path, strict: bool = False) -> NetworkDescription:
    return network_from_dict(load_json(path), strict=strict)


def load_device(path: str | Path, strict: bool = False) -> DeviceDescription:
    return device_from_dict(load_json(path), strict=strict)


def load_factors(path: str | Path, strict: bool = False) -> FactorPack:
    return factors_from_dict(load_json(path), strict=strict)


def socs_from_dict(obj: Mapping) -> dict[str, SocSpec]:
    registry = {}
    for name, entry in obj.items():
        if name == "schema_version":
            continue
        registry[name] = SocSpec(
            name=name,
            cpu_cores=tuple(entry.get("cpu_cores", ())),
            gpu=entry.get("gpu", ""),
            npu=entry.get("npu", ""),
        )
    return registry
