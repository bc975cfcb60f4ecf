#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ntn {

struct PhysicalConstants {
    static constexpr double boltzmann = 1.38e-23;     // J/K
    static constexpr double light_speed = 2.998e8;    // m/s
    static constexpr double earth_radius = 6.371e6;   // m
    static constexpr double gravity = 9.81;           // m/s^2
};

inline constexpr double kJoulesPerWattHour = 3600.0;

enum class NodeClass { Uav, Hap, Leo };
enum class AntennaKind { Upa, Car };

std::string_view to_string(NodeClass c);
std::string_view to_string(AntennaKind k);
NodeClass parse_node_class(std::string_view text);
AntennaKind parse_antenna_kind(std::string_view text);

/// Transceiver power consumption of one antenna front end.
///
/// Circuitry power is kept as aggregate (slope, intercept) pairs: the
/// per-element part scales with `elements`, the intercept covers the
/// converters, mixers and combiner. All powers are in watts.
struct AntennaPowerModel {
    AntennaKind kind = AntennaKind::Upa;
    int elements = 1;
    double tx_slope = 0.0;
    double tx_intercept = 0.0;
    double rx_slope = 0.0;
    double rx_intercept = 0.0;
    double amplifier_efficiency = 1.0;

    static AntennaPowerModel upa(int elements);
    static AntennaPowerModel car();

    bool operator==(const AntennaPowerModel&) const = default;
};

struct NodeProfile {
    NodeClass node_class = NodeClass::Uav;
    double altitude = 0.0;            // m
    double compute_capacity = 0.0;    // GFLOP/s
    double gpu_efficiency = 0.0;      // GFLOP/J
    double battery_capacity = 0.0;    // J
    std::optional<double> solar_panel_area;  // m^2
    double eirp = 0.0;                // dBW
    double gain_to_temp = 0.0;        // dB/K
    AntennaPowerModel antenna;

    bool operator==(const NodeProfile&) const = default;
};

// UAV EIRP and G/T track the array size.
double uav_eirp_dbw(int elements);
double uav_gain_to_temp_db(int elements);

NodeProfile default_uav(int elements = 8);
NodeProfile default_hap();
NodeProfile default_leo();
NodeProfile default_edge(NodeClass edge_class);

/// Complete parameter set for one scenario, in SI units except where a
/// field is declared in dB.
struct ScenarioConfig {
    NodeProfile uav = default_uav();
    NodeProfile edge = default_hap();
    int num_uavs = 20;
    double frame_rate = 10.0;           // frames/s
    double offload_factor = 0.5;
    double ul_payload = 3e6;            // bits
    double dl_payload = 1e5;            // bits
    double compute_load = 90.0;         // GFLOP per frame
    double total_bandwidth = 400e6;     // Hz
    double ul_carrier = 30e9;           // Hz
    double dl_carrier = 20e9;           // Hz
    double tx_power_dbm = 30.0;         // dBm
    double elevation_angle = 70.0;      // degrees, LEO only
    double flight_time = 3600.0;        // s
    double uav_mass = 3.0;              // kg
    double propeller_radius = 0.3;      // m
    double air_density = 1.0;           // kg/m^3
    double extra_loss_ul = 0.0;         // dB
    double extra_loss_dl = 0.0;         // dB
    double solar_irradiance = 600.0;    // W/m^2
    double photovoltaic_efficiency = 0.15;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parse failure of a config source or override value.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A field violates its range. `field()` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& constraint);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Throws ConfigError on the first violated constraint.
void validate(const ScenarioConfig& cfg);

/// Builds a validated config from flat JSON text plus `key=value` overrides.
///
/// Unspecified fields take the default for the selected `edge_class`;
/// the UAV EIRP and G/T are derived from `uav_antenna_elements`. An empty
/// (or whitespace-only) source is treated as `{}`.
ScenarioConfig load_config(std::string_view source, const Overrides& overrides = {});

/// Flat JSON with every configurable key; `load_config` of the result
/// reproduces `cfg` exactly.
std::string to_json_text(const ScenarioConfig& cfg);

/// Names of every key accepted by `load_config`, in serialization order.
std::vector<std::string> config_keys();

/// Splits `key=value`; throws ParseError when there is no '='.
std::pair<std::string, std::string> split_assignment(std::string_view text);

double per_uav_bandwidth(const ScenarioConfig& cfg);

}  // namespace ntn
