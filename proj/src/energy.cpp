#include "ntn/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ntn {

double hover_power(double mass, double propeller_radius, double air_density)
{
    const double weight = mass * PhysicalConstants::gravity;
    return std::sqrt(weight * weight * weight /
                     (2.0 * std::numbers::pi * propeller_radius * propeller_radius * air_density));
}

double movement_energy(const NodeProfile& node, double hover_power_w, double flight_time)
{
    if (node.node_class != NodeClass::Uav) return 0.0;
    return hover_power_w * flight_time;
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double tx_power(const AntennaPowerModel& a, double tx_power_dbm)
{
    return dbm_to_watts(tx_power_dbm) / a.amplifier_efficiency + a.tx_slope * a.elements + a.tx_intercept;
}

double rx_power(const AntennaPowerModel& a)
{
    return a.rx_slope * a.elements + a.rx_intercept;
}

OffloadEnergy offload_energy_per_frame(double t_ul, double t_dl, const AntennaPowerModel& uav_antenna,
                                       const AntennaPowerModel& edge_antenna, double tx_power_dbm)
{
    return {t_ul * tx_power(uav_antenna, tx_power_dbm) + t_dl * rx_power(uav_antenna),
            t_dl * tx_power(edge_antenna, tx_power_dbm) + t_ul * rx_power(edge_antenna)};
}

double processing_energy_per_frame(double compute_load, double gpu_efficiency)
{
    return compute_load / gpu_efficiency;
}

EnergyBreakdown uav_total_energy(const ScenarioConfig& cfg, double per_frame_offload,
                                 double per_frame_processing)
{
    const double eta = cfg.offload_factor;
    const double frames = cfg.frame_rate * cfg.flight_time;
    const double hover = hover_power(cfg.uav_mass, cfg.propeller_radius, cfg.air_density);
    return EnergyBreakdown::of(movement_energy(cfg.uav, hover, cfg.flight_time),
                               (1.0 - eta) * per_frame_processing * frames,
                               eta * per_frame_offload * frames);
}

EnergyBreakdown edge_total_energy(const ScenarioConfig& cfg, double per_frame_offload_edge,
                                  double per_frame_processing_edge)
{
    const double frames = cfg.offload_factor * cfg.frame_rate * cfg.num_uavs * cfg.flight_time;
    return EnergyBreakdown::of(0.0, per_frame_processing_edge * frames, per_frame_offload_edge * frames);
}

EnergyCapacity energy_capacity(const NodeProfile& node, double consumption_rate, double flight_time,
                               double irradiance, double pv_efficiency)
{
    EnergyCapacity c;
    c.battery = node.battery_capacity;
    if (node.node_class != NodeClass::Uav && node.solar_panel_area) {
        const double harvest_rate = pv_efficiency * irradiance * *node.solar_panel_area;
        c.harvested = std::min(harvest_rate, std::max(consumption_rate, 0.0)) * flight_time;
    }
    c.capacity = c.battery + c.harvested;
    return c;
}

}  // namespace ntn
