"""Unambiguous discrimination of bipartite Fermionic states."""

from ._core import (
    AncillaSpec,
    DiscriminationInstance,
    FermionicVector,
    OptimalityVerdict,
    Parity,
    SectorData,
    SectorSlot,
    attach,
    brute_force_sep,
    brute_force_unconstrained,
    check_locc_optimal,
    inner_product,
    optimal_success_sep,
    optimal_success_unconstrained,
    parse_instance_text,
    phase_obstruction,
    sector_data,
    xi,
)

__all__ = [
    "AncillaSpec",
    "DiscriminationInstance",
    "FermionicVector",
    "OptimalityVerdict",
    "Parity",
    "SectorData",
    "SectorSlot",
    "attach",
    "brute_force_sep",
    "brute_force_unconstrained",
    "check_locc_optimal",
    "inner_product",
    "optimal_success_sep",
    "optimal_success_unconstrained",
    "parse_instance_text",
    "phase_obstruction",
    "sector_data",
    "xi",
]
