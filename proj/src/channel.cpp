#include "ntn/channel.hpp"

#include <cmath>
#include <numbers>

namespace ntn {

double slant_range_leo(double elevation_deg, double sat_altitude)
{
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw std::domain_error("elevation angle must be in [0, 90] degrees");
    if (!(sat_altitude > 0.0)) throw std::domain_error("satellite altitude must be > 0");

    const double re = PhysicalConstants::earth_radius;
    const double h = sat_altitude;
    const double s = std::sin(elevation_deg * std::numbers::pi / 180.0);
    return std::sqrt(re * re * s * s + h * h + 2.0 * h * re) - re * s;
}

double link_distance(const ScenarioConfig& cfg)
{
    if (cfg.edge.node_class == NodeClass::Leo)
        return slant_range_leo(cfg.elevation_angle, cfg.edge.altitude);
    return cfg.edge.altitude - cfg.uav.altitude;
}

double path_loss_db(double distance, double carrier, double extra_loss_db)
{
    const double fspl = 20.0 * std::log10(4.0 * std::numbers::pi * distance * carrier /
                                          PhysicalConstants::light_speed);
    return fspl + extra_loss_db;
}

double snr(double eirp_dbw, double gain_to_temp_db, double path_loss, double bandwidth)
{
    const double noise_db = 10.0 * std::log10(PhysicalConstants::boltzmann * bandwidth);
    return std::pow(10.0, (eirp_dbw + gain_to_temp_db - path_loss - noise_db) / 10.0);
}

double shannon_capacity(double bandwidth, double snr)
{
    return bandwidth * std::log2(1.0 + snr);
}

double transmission_delay(double payload_bits, double rate)
{
    if (!(rate > 0.0)) throw UnreachableLink("link rate is zero; payload cannot be delivered");
    return payload_bits / rate;
}

double propagation_delay(double distance)
{
    return distance / PhysicalConstants::light_speed;
}

LinkBudget link_budget(const ScenarioConfig& cfg, LinkDirection direction)
{
    LinkBudget lb;
    lb.direction = direction;
    lb.distance = link_distance(cfg);
    lb.bandwidth = per_uav_bandwidth(cfg);
    if (direction == LinkDirection::Uplink) {
        lb.carrier = cfg.ul_carrier;
        lb.eirp = cfg.uav.eirp;
        lb.gain_to_temp = cfg.edge.gain_to_temp;
        lb.path_loss = path_loss_db(lb.distance, lb.carrier, cfg.extra_loss_ul);
    } else {
        lb.carrier = cfg.dl_carrier;
        lb.eirp = cfg.edge.eirp;
        lb.gain_to_temp = cfg.uav.gain_to_temp;
        lb.path_loss = path_loss_db(lb.distance, lb.carrier, cfg.extra_loss_dl);
    }
    lb.snr = snr(lb.eirp, lb.gain_to_temp, lb.path_loss, lb.bandwidth);
    lb.capacity = shannon_capacity(lb.bandwidth, lb.snr);
    return lb;
}

}  // namespace ntn
