"""Two-body breakup wave-packet widths and entanglement.

Thin Python layer over the C++ core: system parameters and derived
quantities, packet widths and densities, single-particle vs coincidence
widths, the entanglement parameter R, time evolution, and the brute-force
oracles (joint-density grid moments and direct quadrature of the packet
energy integral). All quantities are in Hartree atomic units.
"""

from ._core import (  # noqa: F401
    AmplitudeState,
    CmPacket,
    DerivedParams,
    EvolutionTrace,
    GridModel,
    GridWidths,
    Mode,
    PacketWidths,
    Regime,
    SystemParams,
    WidthReport,
    __version__,
    amplitude_state,
    classify_regime,
    cm_density,
    cm_width,
    coincidence_widths,
    continuum_amplitude,
    continuum_norm,
    default_time_grid,
    derive,
    dissociation_preset,
    entanglement_r,
    eta_asymptote,
    eta_ratio,
    evolve,
    faddeeva,
    golden_rule_rate,
    grid_widths_oracle,
    ground_amplitude,
    packet_widths,
    profile_series,
    profile_zeta,
    quad_rel_packet,
    radial_high_energy,
    recommended_resolution,
    rel_density,
    rel_density_sharp,
    rel_profile,
    rel_width,
    single_widths,
    width_report,
)
