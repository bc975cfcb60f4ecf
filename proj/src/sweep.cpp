#include "ntn/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace ntn {

SweepAxis parse_axis(std::string_view text)
{
    auto [field, list] = split_assignment(text);
    SweepAxis axis{std::move(field), {}};
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string::npos ? list.size() : comma;
        if (end == start) throw ParseError("empty value in axis '" + std::string(text) + "'");
        axis.values.push_back(list.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return axis;
}

std::size_t grid_size(const SweepSpec& spec)
{
    if (spec.axes.empty()) throw SweepError("a sweep needs at least one axis");
    const auto keys = config_keys();
    std::size_t total = 1;
    for (const auto& axis : spec.axes) {
        if (std::find(keys.begin(), keys.end(), axis.field) == keys.end())
            throw ConfigError(axis.field, "is not a known key");
        if (axis.values.empty()) throw SweepError("axis '" + axis.field + "' has no values");
        if (axis.values.size() > spec.row_cap / total)
            throw SweepError("sweep grid exceeds the row cap of " + std::to_string(spec.row_cap));
        total *= axis.values.size();
    }
    return total;
}

namespace {

Overrides point_overrides(const SweepSpec& spec, std::size_t index)
{
    Overrides o = spec.base_overrides;
    std::vector<std::size_t> digits(spec.axes.size());
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
        const std::size_t len = spec.axes[k].values.size();
        digits[k] = index % len;
        index /= len;
    }
    for (std::size_t k = 0; k < spec.axes.size(); ++k)
        o.emplace_back(spec.axes[k].field, spec.axes[k].values[digits[k]]);
    return o;
}

}  // namespace

std::vector<MetricRow> run_sweep(const SweepSpec& spec, unsigned threads)
{
    const std::size_t total = grid_size(spec);
    (void)load_config(spec.base_source, spec.base_overrides);

    std::vector<MetricRow> rows(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failure_index = total;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            try {
                rows[i] = evaluate(load_config(spec.base_source, point_overrides(spec, i)));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                // report the lowest failing index so errors are deterministic
                if (i < failure_index) {
                    failure_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<std::string> metric_columns()
{
    return {"edge_class",
            "offload_factor",
            "num_uavs",
            "frame_rate",
            "uav_antenna_elements",
            "elevation_angle",
            "uav_gpu_efficiency",
            "flight_time",
            "load_local",
            "load_edge",
            "ul_rate",
            "dl_rate",
            "local_delay",
            "edge_delay",
            "avg_delay",
            "autonomy",
            "uav_movement_energy",
            "uav_processing_energy",
            "uav_offloading_energy",
            "uav_total_energy",
            "edge_processing_energy",
            "edge_offloading_energy",
            "edge_total_energy",
            "edge_harvested_energy",
            "edge_energy_capacity"};
}

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string config_hash(const SweepSpec& spec)
{
    std::string canonical = to_json_text(load_config(spec.base_source, spec.base_overrides));
    for (const auto& axis : spec.axes) {
        canonical += axis.field;
        for (const auto& v : axis.values) canonical += "|" + v;
        canonical += "\n";
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return out;
}

namespace {

std::string delay_cell(const std::optional<double>& d)
{
    return d ? format_number(*d) : std::string("unstable");
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<MetricRow>& rows)
{
    out << "# " << kToolName << ' ' << kToolVersion << '\n';
    out << "# config-hash " << config_hash(spec) << '\n';
    out << "# axes";
    for (const auto& axis : spec.axes) out << ' ' << axis.field;
    out << '\n';
    out << "# units: s, bit/s, J; delays of unstable queues are 'unstable'\n";
    for (const auto& note : spec.notes) out << "# " << note << '\n';

    const auto cols = metric_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';

    for (const auto& r : rows) {
        out << to_string(r.edge_class) << ',' << format_number(r.offload_factor) << ',' << r.num_uavs << ','
            << format_number(r.frame_rate) << ',' << r.uav_antenna_elements << ','
            << format_number(r.elevation_angle) << ',' << format_number(r.uav_gpu_efficiency) << ','
            << format_number(r.flight_time) << ',' << format_number(r.load_local) << ','
            << format_number(r.load_edge) << ',' << format_number(r.ul_rate) << ','
            << format_number(r.dl_rate) << ',' << delay_cell(r.local_delay) << ','
            << delay_cell(r.edge_delay) << ',' << delay_cell(r.avg_delay) << ',' << format_number(r.autonomy)
            << ',' << format_number(r.uav_energy.movement) << ',' << format_number(r.uav_energy.processing)
            << ',' << format_number(r.uav_energy.offloading) << ',' << format_number(r.uav_energy.total)
            << ',' << format_number(r.edge_energy.processing) << ','
            << format_number(r.edge_energy.offloading) << ',' << format_number(r.edge_energy.total) << ','
            << format_number(r.edge_capacity.harvested) << ',' << format_number(r.edge_capacity.capacity)
            << '\n';
    }
}

std::string sweep_csv(const SweepSpec& spec, unsigned threads)
{
    const auto rows = run_sweep(spec, threads);
    std::ostringstream out;
    write_sweep_csv(out, spec, rows);
    return out.str();
}

}  // namespace ntn
