"""
Black-box probes: linear regions, empirical frequency response, equivalence audit
"""

from src.probe.audit import AuditResult, audit_pairs, equivalence_audit, weight_distance
from src.probe.regions import (
    ActivationPattern,
    Box,
    LinearRegion,
    RegionFidelity,
    activation_states,
    effective_taps,
    enumerate_regions,
    region_fidelity,
    write_regions_json,
)
from src.probe.response import (
    EmpiricalResponse,
    ProbeSignal,
    empirical_frequency_response,
    probe_windows,
    write_empirical_csv,
)

__all__ = [
    "ActivationPattern",
    "AuditResult",
    "Box",
    "EmpiricalResponse",
    "LinearRegion",
    "ProbeSignal",
    "RegionFidelity",
    "activation_states",
    "audit_pairs",
    "effective_taps",
    "empirical_frequency_response",
    "enumerate_regions",
    "equivalence_audit",
    "probe_windows",
    "region_fidelity",
    "weight_distance",
    "write_empirical_csv",
    "write_regions_json",
]
