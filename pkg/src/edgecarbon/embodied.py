"""Embodied carbon for a full device bill of materials.

Five formula families, each exactly linear in its extensive quantity:

  logic chips     CPA(node)  * area_cm2
  memory chips    CPC(kind)  * capacity_gb
  bulk materials  CPM(subkind) * mass_g
  area parts      CPA(subkind) * area_cm2      (PCBs, analog sensors)
  fixed items     per-item kg * count
  transport       CPD(mode)  * mass_g * distance_km

Per-component results are amortized by time_share * usage_years / lifetime
and summed; with usage equal to lifetime and all shares 1 ("full
attribution") the total is the plain sum of raw footprints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    ComputingComponent,
    ComputingKind,
    DeviceDescription,
    EdgecarbonError,
    FactorLookupError,
    FactorPack,
    LOGIC_KINDS,
    NonComputingComponent,
    TransportLeg,
    interpolate_node_cpa,
    validate_device,
)

Component = Union[ComputingComponent, NonComputingComponent, TransportLeg]


@dataclass(frozen=True)
class ComponentFootprint:
    label: str
    subkind: str
    formula: str  # CPA | CPC | CPM | CPD | fixed
    raw_kg: float
    amortized_kg: float


@dataclass(frozen=True)
class EmbodiedReport:
    device: str
    usage_years: float
    lifetime_years: float
    rows: tuple[ComponentFootprint, ...]

    @property
    def total_kg(self) -> float:
        total = 0.0
        for row in self.rows:
            total += row.amortized_kg
        return total

    @property
    def raw_total_kg(self) -> float:
        total = 0.0
        for row in self.rows:
            total += row.raw_kg
        return total

    def to_csv(self) -> str:
        lines = ["component,subkind,formula,raw_kg,amortized_kg"]
        for r in self.rows:
            lines.append(f"{r.label},{r.subkind},{r.formula},{r.raw_kg!r},{r.amortized_kg!r}")
        return "\n".join(lines) + "\n"


def logic_carbon(area_cm2: float, node: str, pack: FactorPack) -> float:
    """Fabrication carbon of a logic die: per-area factor for its node."""
    if area_cm2 < 0:
        raise EdgecarbonError(f"area must be >= 0, got {area_cm2}")
    return interpolate_node_cpa(pack, node) * area_cm2


def memory_carbon(kind: str, capacity_gb: float, pack: FactorPack) -> float:
    if capacity_gb < 0:
        raise EdgecarbonError(f"capacity must be >= 0, got {capacity_gb}")
    if kind not in pack.cpc:
        raise FactorLookupError("memory kind", kind, pack.cpc)
    return pack.cpc[kind].value * capacity_gb


def mass_carbon(subkind: str, mass_g: float, pack: FactorPack) -> float:
    if mass_g < 0:
        raise EdgecarbonError(f"mass must be >= 0, got {mass_g}")
    if subkind not in pack.cpm:
        raise FactorLookupError("material (per-gram factor)", subkind, pack.cpm)
    return pack.cpm[subkind].value * mass_g


def area_carbon(subkind: str, area_cm2: float, pack: FactorPack) -> float:
    if area_cm2 < 0:
        raise EdgecarbonError(f"area must be >= 0, got {area_cm2}")
    if subkind not in pack.cpa_other:
        raise FactorLookupError("area-based subkind", subkind, pack.cpa_other)
    return pack.cpa_other[subkind].value * area_cm2


def fixed_item_carbon(item: str, count: float, pack: FactorPack) -> float:
    if count < 0:
        raise EdgecarbonError(f"count must be >= 0, got {count}")
    if item not in pack.fixed:
        raise FactorLookupError("fixed-emission item", item, pack.fixed)
    return pack.fixed[item].value * count


def transport_carbon(mode: str, mass_g: float, distance_km: float, pack: FactorPack) -> float:
    if mass_g < 0 or distance_km < 0:
        raise EdgecarbonError("mass and distance must be >= 0")
    if mode not in pack.cpd:
        raise FactorLookupError("transport mode", mode, pack.cpd)
    return pack.cpd[mode].value * mass_g * distance_km


def component_carbon(
    component: Component,
    pack: FactorPack,
    usage_years: Optional[float] = None,
    lifetime_years: float = 3.0,
) -> ComponentFootprint:
    """Raw and amortized footprint of one component, dispatching on its kind."""
    if usage_years is None:
        usage_years = lifetime_years
    if isinstance(component, ComputingComponent):
        if component.kind in LOGIC_KINDS:
            raw = logic_carbon(component.area_cm2, component.node, pack)
            formula, subkind = "CPA", component.node
        else:
            raw = memory_carbon(component.kind.value, component.capacity_gb, pack)
            formula, subkind = "CPC", component.kind.value
        label, share = component.label(), component.time_share
    elif isinstance(component, NonComputingComponent):
        table, _ = pack.resolve_subkind(component.subkind)
        if table == "cpm":
            raw = mass_carbon(component.subkind, component.mass_g, pack)
            formula = "CPM"
        elif table == "cpa_other":
            raw = area_carbon(component.subkind, component.area_cm2, pack)
            formula = "CPA"
        else:
            raw = fixed_item_carbon(component.subkind, component.count, pack)
            formula = "fixed"
        label, subkind, share = component.kind.value, component.subkind, component.time_share
    elif isinstance(component, TransportLeg):
        raw = transport_carbon(component.mode, component.mass_g, component.distance_km, pack)
        label, subkind, formula, share = "Transport", component.mode, "CPD", 1.0
    else:
        raise TypeError(f"cannot estimate component of type {type(component).__name__}")
    amortized = raw * (share * usage_years / lifetime_years)
    return ComponentFootprint(label, subkind, formula, raw, amortized)


def embodied_total(
    device: DeviceDescription,
    pack: FactorPack,
    usage_years: Optional[float] = None,
) -> EmbodiedReport:
    """Amortized embodied carbon of every component plus transport legs.

    Aborts with the validation report when the device is not estimable.
    """
    report = validate_device(device, pack)
    if not report.ok:
        raise EdgecarbonError(f"device {device.name!r} failed validation:\n{report.render()}")
    if usage_years is None:
        usage_years = device.lifetime_years
    if usage_years < 0:
        raise EdgecarbonError(f"usage_years must be >= 0, got {usage_years}")

    rows = []
    for comp in (*device.computing, *device.non_computing, *device.transport_legs):
        rows.append(component_carbon(comp, pack, usage_years, device.lifetime_years))
    return EmbodiedReport(
        device=device.name,
        usage_years=usage_years,
        lifetime_years=device.lifetime_years,
        rows=tuple(rows),
    )


def reconcile(report: EmbodiedReport) -> bool:
    """Check that the report total matches its rows to one ulp per row."""
    total = report.total_kg
    tolerance = sum(math.ulp(abs(r.amortized_kg)) for r in report.rows) + math.ulp(abs(total))
    resummed = 0.0
    for r in report.rows:
        resummed += r.amortized_kg
    return abs(total - resummed) <= tolerance
