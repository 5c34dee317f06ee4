"""Operational carbon: predicted inference energy x grid carbon intensity.

The conversion is `(energy_J / 3.6e6) * ci * num`: joules to kWh, times
carbon intensity in kgCO2-eq/kWh, times the number of inferences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    SCHEMA_VERSION,
    EdgecarbonError,
    FactorEntry,
    FactorLookupError,
    FactorPack,
    SchemaError,
    load_json,
)

JOULES_PER_KWH = 3.6e6
DAYS_PER_YEAR = 365  # calendar effects below 0.3% are ignored


@dataclass(frozen=True)
class UsageProfile:
    inferences_per_day: float
    active_years: float
    region: str

    def total_inferences(self) -> float:
        return self.inferences_per_day * DAYS_PER_YEAR * self.active_years


def lookup_ci(registry: Mapping[str, FactorEntry] | FactorPack, region: str) -> float:
    """Carbon intensity for a region; exact match only, no fuzzy lookup."""
    table = registry.ci if isinstance(registry, FactorPack) else registry
    if region not in table:
        raise FactorLookupError("carbon-intensity region", region, table)
    return table[region].value


def operational_carbon(energy_per_inference_j: float, ci: float, num: float) -> float:
    """kgCO2-eq emitted by `num` inferences at `energy_per_inference_j` each."""
    if energy_per_inference_j < 0 or ci < 0 or num < 0:
        raise EdgecarbonError(
            f"operational carbon needs non-negative inputs, got energy={energy_per_inference_j}, "
            f"ci={ci}, num={num}"
        )
    return (energy_per_inference_j / JOULES_PER_KWH) * ci * num


def lifetime_operational(
    energy_per_inference_j: float,
    profile: UsageProfile,
    registry: Mapping[str, FactorEntry] | FactorPack,
) -> float:
    """Operational carbon over a usage profile's whole active period."""
    if profile.inferences_per_day < 0 or profile.active_years < 0:
        raise EdgecarbonError("usage profile values must be non-negative")
    ci = lookup_ci(registry, profile.region)
    return operational_carbon(energy_per_inference_j, ci, profile.total_inferences())


def usage_from_dict(obj: Mapping, strict: bool = False) -> UsageProfile:
    from .core import _check_schema  # shared schema plumbing

    _check_schema(obj, "usage profile", {"inferences_per_day", "active_years", "region", "notes"}, strict)
    for key in ("inferences_per_day", "active_years", "region"):
        if key not in obj:
            raise SchemaError(f"usage profile file is missing required field {key!r}")
    return UsageProfile(
        inferences_per_day=float(obj["inferences_per_day"]),
        active_years=float(obj["active_years"]),
        region=obj["region"],
    )


def usage_to_dict(profile: UsageProfile) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "inferences_per_day": profile.inferences_per_day,
        "active_years": profile.active_years,
        "region": profile.region,
    }


def load_usage(path, strict: bool = False) -> UsageProfile:
    return usage_from_dict(load_json(path), strict=strict)
