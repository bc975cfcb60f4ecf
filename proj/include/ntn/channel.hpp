#pragma once

#include <stdexcept>

#include "ntn/scenario.hpp"

namespace ntn {

enum class LinkDirection { Uplink, Downlink };

/// Raised when a link has no usable rate.
class UnreachableLink : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LinkBudget {
    LinkDirection direction = LinkDirection::Uplink;
    double carrier = 0.0;       // Hz
    double distance = 0.0;      // m
    double bandwidth = 0.0;     // Hz
    double eirp = 0.0;          // dBW
    double gain_to_temp = 0.0;  // dB/K
    double path_loss = 0.0;     // dB
    double snr = 0.0;           // linear
    double capacity = 0.0;      // bit/s
};

/// UAV-to-satellite range for elevation angle `elevation_deg` in [0, 90].
/// Throws std::domain_error outside that range.
double slant_range_leo(double elevation_deg, double sat_altitude);

/// Nadir geometry for a HAP, slant range (UAV at ground level) for a LEO.
double link_distance(const ScenarioConfig& cfg);

/// Free-space path loss plus a fixed additional margin.
double path_loss_db(double distance, double carrier, double extra_loss_db = 0.0);

double snr(double eirp_dbw, double gain_to_temp_db, double path_loss, double bandwidth);

/// Shannon rate B log2(1 + snr).
double shannon_capacity(double bandwidth, double snr);

/// Throws UnreachableLink when `rate` is not positive.
double transmission_delay(double payload_bits, double rate);

double propagation_delay(double distance);

/// Uplink: UAV EIRP into edge G/T at the UL carrier. Downlink: edge EIRP
/// into UAV G/T at the DL carrier. Both use the per-UAV bandwidth.
LinkBudget link_budget(const ScenarioConfig& cfg, LinkDirection direction);

}  // namespace ntn
