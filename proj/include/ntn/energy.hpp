#pragma once

#include "ntn/scenario.hpp"

namespace ntn {

struct EnergyBreakdown {
    double movement = 0.0;     // J
    double processing = 0.0;   // J
    double offloading = 0.0;   // J
    double total = 0.0;        // J, movement + processing + offloading

    static EnergyBreakdown of(double movement, double processing, double offloading)
    {
        return {movement, processing, offloading, movement + processing + offloading};
    }
};

struct EnergyCapacity {
    double battery = 0.0;    // J
    double harvested = 0.0;  // J
    double capacity = 0.0;   // J
};

/// Per-frame offloading energy on each end of the link.
struct OffloadEnergy {
    double uav = 0.0;   // J
    double edge = 0.0;  // J
};

/// Rotary-wing hovering power sqrt((m g)^3 / (2 pi r^2 rho)).
double hover_power(double mass, double propeller_radius, double air_density);

/// Hovering energy for a UAV; zero for HAP and LEO platforms.
double movement_energy(const NodeProfile& node, double hover_power_w, double flight_time);

double dbm_to_watts(double dbm);

/// P_t / zeta plus circuitry, in watts.
double tx_power(const AntennaPowerModel& a, double tx_power_dbm);
double rx_power(const AntennaPowerModel& a);

/// In uplink the UAV transmits and the edge receives; downlink reverses
/// the roles.
OffloadEnergy offload_energy_per_frame(double t_ul, double t_dl, const AntennaPowerModel& uav_antenna,
                                       const AntennaPowerModel& edge_antenna, double tx_power_dbm);

double processing_energy_per_frame(double compute_load, double gpu_efficiency);

EnergyBreakdown uav_total_energy(const ScenarioConfig& cfg, double per_frame_offload,
                                 double per_frame_processing);

EnergyBreakdown edge_total_energy(const ScenarioConfig& cfg, double per_frame_offload_edge,
                                  double per_frame_processing_edge);

/// Battery plus usable solar harvest over `flight_time`.
///
/// Harvest rate is pv_efficiency * irradiance * panel area. Starting from a
/// full battery and a constant consumption rate, harvest beyond what is
/// consumed cannot be stored: the usable part is min(harvest, consumption)
/// times the flight time. UAVs do not harvest.
EnergyCapacity energy_capacity(const NodeProfile& node, double consumption_rate, double flight_time,
                               double irradiance, double pv_efficiency);

}  // namespace ntn
