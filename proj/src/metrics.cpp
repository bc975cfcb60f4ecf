#include "ntn/metrics.hpp"

#include "ntn/channel.hpp"

namespace ntn {

namespace {

struct LinkTimes {
    double propagation = 0.0;
    double uplink = 0.0;
    double downlink = 0.0;
    double ul_rate = 0.0;
    double dl_rate = 0.0;
};

LinkTimes link_times(const ScenarioConfig& cfg)
{
    const LinkBudget ul = link_budget(cfg, LinkDirection::Uplink);
    const LinkBudget dl = link_budget(cfg, LinkDirection::Downlink);
    LinkTimes t;
    t.propagation = propagation_delay(ul.distance);
    t.uplink = transmission_delay(cfg.ul_payload, ul.capacity);
    t.downlink = transmission_delay(cfg.dl_payload, dl.capacity);
    t.ul_rate = ul.capacity;
    t.dl_rate = dl.capacity;
    return t;
}

std::optional<double> edge_delay(const ScenarioConfig& cfg, const LinkTimes& t)
{
    const QueueResult q = sojourn_time(edge_queue(cfg));
    if (q.unstable()) return std::nullopt;
    return 2.0 * t.propagation + t.uplink + t.downlink + q.sojourn_time;
}

std::optional<double> combine(double eta, const std::optional<double>& local, const std::optional<double>& edge)
{
    if (eta == 0.0) return local;
    if (eta == 1.0) return edge;
    if (!local || !edge) return std::nullopt;
    return (1.0 - eta) * *local + eta * *edge;
}

}  // namespace

QueueParams local_queue(const ScenarioConfig& cfg)
{
    return {(1.0 - cfg.offload_factor) * cfg.frame_rate, cfg.uav.compute_capacity / cfg.compute_load};
}

QueueParams edge_queue(const ScenarioConfig& cfg)
{
    return {cfg.offload_factor * cfg.frame_rate * cfg.num_uavs, cfg.edge.compute_capacity / cfg.compute_load};
}

std::optional<double> local_delay(const ScenarioConfig& cfg)
{
    return sojourn_time(local_queue(cfg)).delay();
}

std::optional<double> edge_delay(const ScenarioConfig& cfg)
{
    return edge_delay(cfg, link_times(cfg));
}

std::optional<double> average_delay(const ScenarioConfig& cfg)
{
    return combine(cfg.offload_factor, local_delay(cfg), edge_delay(cfg));
}

double uav_autonomy(const ScenarioConfig& cfg)
{
    return evaluate(cfg).autonomy;
}

std::vector<std::vector<double>> stability_map(const ScenarioConfig& cfg, const std::vector<int>& n_values,
                                               const std::vector<double>& r_values, QueueSide side)
{
    std::vector<std::vector<double>> grid;
    grid.reserve(n_values.size());
    for (int n : n_values) {
        std::vector<double> row;
        row.reserve(r_values.size());
        for (double r : r_values) {
            ScenarioConfig cell = cfg;
            cell.num_uavs = n;
            cell.frame_rate = r;
            row.push_back(load_factor(side == QueueSide::Local ? local_queue(cell) : edge_queue(cell)));
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

MetricRow evaluate(const ScenarioConfig& cfg)
{
    MetricRow row;
    row.edge_class = cfg.edge.node_class;
    row.offload_factor = cfg.offload_factor;
    row.num_uavs = cfg.num_uavs;
    row.frame_rate = cfg.frame_rate;
    row.uav_antenna_elements = cfg.uav.antenna.elements;
    row.elevation_angle = cfg.elevation_angle;
    row.uav_gpu_efficiency = cfg.uav.gpu_efficiency;
    row.flight_time = cfg.flight_time;

    const LinkTimes t = link_times(cfg);
    row.ul_rate = t.ul_rate;
    row.dl_rate = t.dl_rate;
    row.load_local = load_factor(local_queue(cfg));
    row.load_edge = load_factor(edge_queue(cfg));
    row.local_delay = local_delay(cfg);
    row.edge_delay = edge_delay(cfg, t);
    row.avg_delay = combine(cfg.offload_factor, row.local_delay, row.edge_delay);

    const OffloadEnergy offload =
        offload_energy_per_frame(t.uplink, t.downlink, cfg.uav.antenna, cfg.edge.antenna, cfg.tx_power_dbm);
    row.uav_energy = uav_total_energy(cfg, offload.uav,
                                      processing_energy_per_frame(cfg.compute_load, cfg.uav.gpu_efficiency));
    row.edge_energy = edge_total_energy(cfg, offload.edge,
                                        processing_energy_per_frame(cfg.compute_load, cfg.edge.gpu_efficiency));
    row.autonomy = row.uav_energy.total > 0.0 ? row.uav_energy.movement / row.uav_energy.total : 1.0;

    const double consumption_rate = cfg.flight_time > 0.0 ? row.edge_energy.total / cfg.flight_time : 0.0;
    row.edge_capacity = energy_capacity(cfg.edge, consumption_rate, cfg.flight_time, cfg.solar_irradiance,
                                        cfg.photovoltaic_efficiency);
    return row;
}

}  // namespace ntn
