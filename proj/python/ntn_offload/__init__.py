"""UAV edge-computing offloading simulator for HAP/LEO edge servers."""

from ._core import (
    ConfigError,
    Scenario,
    __version__,
    average_delay,
    bisect_delta,
    delta_approximation,
    edge_delay,
    evaluate,
    figure_csv,
    figure_ids,
    hover_power,
    load_config,
    load_factor,
    local_delay,
    path_loss_db,
    processing_energy_per_frame,
    shannon_capacity,
    simulate_dm1,
    slant_range_leo,
    snr,
    sojourn_time,
    solve_delta,
    sweep_csv,
    uav_autonomy,
)

__all__ = [
    "ConfigError",
    "Scenario",
    "__version__",
    "average_delay",
    "bisect_delta",
    "delta_approximation",
    "edge_delay",
    "evaluate",
    "figure_csv",
    "figure_ids",
    "hover_power",
    "load_config",
    "load_factor",
    "local_delay",
    "path_loss_db",
    "processing_energy_per_frame",
    "shannon_capacity",
    "simulate_dm1",
    "slant_range_leo",
    "snr",
    "sojourn_time",
    "solve_delta",
    "sweep_csv",
    "uav_autonomy",
]
