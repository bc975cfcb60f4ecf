#pragma once

#include <optional>
#include <vector>

#include "ntn/energy.hpp"
#include "ntn/queueing.hpp"
#include "ntn/scenario.hpp"

namespace ntn {

/// One evaluated scenario. Delays are nullopt when a queue the average
/// depends on is unstable.
struct MetricRow {
    // inputs
    NodeClass edge_class = NodeClass::Hap;
    double offload_factor = 0.0;
    int num_uavs = 0;
    double frame_rate = 0.0;
    int uav_antenna_elements = 0;
    double elevation_angle = 0.0;
    double uav_gpu_efficiency = 0.0;
    double flight_time = 0.0;

    // outputs
    double load_local = 0.0;
    double load_edge = 0.0;
    double ul_rate = 0.0;   // bit/s
    double dl_rate = 0.0;   // bit/s
    std::optional<double> local_delay;
    std::optional<double> edge_delay;
    std::optional<double> avg_delay;
    double autonomy = 0.0;
    EnergyBreakdown uav_energy;
    EnergyBreakdown edge_energy;
    EnergyCapacity edge_capacity;
};

QueueParams local_queue(const ScenarioConfig& cfg);
QueueParams edge_queue(const ScenarioConfig& cfg);

std::optional<double> local_delay(const ScenarioConfig& cfg);

/// Round-trip propagation, UL and DL transmission, and edge sojourn time.
std::optional<double> edge_delay(const ScenarioConfig& cfg);

/// (1 - eta) local + eta edge; an endpoint of eta ignores the other term.
std::optional<double> average_delay(const ScenarioConfig& cfg);

/// Hovering energy over total UAV energy.
double uav_autonomy(const ScenarioConfig& cfg);

enum class QueueSide { Local, Edge };

/// Load factor per (n, r) cell; rows follow `n_values`, columns `r_values`.
std::vector<std::vector<double>> stability_map(const ScenarioConfig& cfg, const std::vector<int>& n_values,
                                               const std::vector<double>& r_values, QueueSide side);

MetricRow evaluate(const ScenarioConfig& cfg);

}  // namespace ntn
