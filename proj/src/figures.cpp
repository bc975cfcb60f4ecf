#include "ntn/figures.hpp"

#include <array>
#include <sstream>

namespace ntn {

namespace {

struct FigureName {
    FigureId id;
    std::string_view name;
};

constexpr std::array kFigureNames{
    FigureName{FigureId::Stability, "stability"},
    FigureName{FigureId::HapAutonomy, "hap-autonomy"},
    FigureName{FigureId::HapDelay, "hap-delay"},
    FigureName{FigureId::HapEfficiency, "hap-efficiency"},
    FigureName{FigureId::HapNuavs, "hap-nuavs"},
    FigureName{FigureId::LeoAutonomy, "leo-autonomy"},
    FigureName{FigureId::LeoDelay, "leo-delay"},
    FigureName{FigureId::LeoElevation, "leo-elevation"},
    FigureName{FigureId::EdgeEnergy, "edge-energy"},
};

const SweepAxis kEtaAxis{"offload_factor", {"0", "0.5", "1"}};
const SweepAxis kElementsAxis{"uav_antenna_elements", {"4", "8", "16", "32", "64", "128"}};

SweepAxis range_axis(std::string field, int first, int last, int step)
{
    SweepAxis axis{std::move(field), {}};
    for (int v = first; v <= last; v += step) axis.values.push_back(std::to_string(v));
    return axis;
}

}  // namespace

std::vector<FigureId> all_figures()
{
    std::vector<FigureId> ids;
    for (const auto& f : kFigureNames) ids.push_back(f.id);
    return ids;
}

std::string_view to_string(FigureId id)
{
    for (const auto& f : kFigureNames)
        if (f.id == id) return f.name;
    return "?";
}

FigureId parse_figure_id(std::string_view text)
{
    for (const auto& f : kFigureNames)
        if (f.name == text) return f.id;
    throw ParseError("unknown figure id '" + std::string(text) + "'");
}

SweepSpec figure_spec(FigureId id)
{
    SweepSpec s;
    const std::string name(to_string(id));
    switch (id) {
    case FigureId::Stability:
        throw SweepError("the stability figure is not a metric sweep");
    case FigureId::HapAutonomy:
        s.base_overrides = {{"edge_class", "HAP"}, {"uav_gpu_efficiency", "50"},
                            {"num_uavs", "20"}, {"frame_rate", "10"}};
        s.axes = {kEtaAxis, kElementsAxis};
        break;
    case FigureId::HapDelay:
        s.base_overrides = {{"edge_class", "HAP"}, {"uav_antenna_elements", "8"},
                            {"uav_gpu_efficiency", "50"}, {"num_uavs", "15"}};
        s.axes = {kEtaAxis, range_axis("frame_rate", 1, 19, 1)};
        break;
    case FigureId::HapEfficiency:
        s.base_overrides = {{"edge_class", "HAP"}, {"uav_antenna_elements", "8"},
                            {"num_uavs", "20"}, {"frame_rate", "10"}};
        s.axes = {{"uav_gpu_efficiency", {"30", "50", "70", "90"}}, kEtaAxis};
        break;
    case FigureId::HapNuavs:
        s.base_overrides = {{"edge_class", "HAP"}, {"uav_antenna_elements", "8"},
                            {"uav_gpu_efficiency", "50"}, {"frame_rate", "10"}};
        s.axes = {kEtaAxis, range_axis("num_uavs", 5, 50, 5)};
        break;
    case FigureId::LeoAutonomy:
    case FigureId::LeoDelay:
        s.base_overrides = {{"edge_class", "LEO"}, {"elevation_angle", "70"}, {"num_uavs", "20"},
                            {"uav_gpu_efficiency", "50"}, {"frame_rate", "10"}};
        s.axes = {kEtaAxis, kElementsAxis};
        s.notes.push_back("assumed: uav_gpu_efficiency=50, frame_rate=10");
        break;
    case FigureId::LeoElevation:
        s.base_overrides = {{"edge_class", "LEO"}, {"uav_antenna_elements", "64"}, {"num_uavs", "20"},
                            {"uav_gpu_efficiency", "50"}, {"frame_rate", "10"}};
        s.axes = {kEtaAxis, {"elevation_angle", {"10", "30", "50", "70", "90"}}};
        s.notes.push_back("assumed: uav_gpu_efficiency=50, frame_rate=10");
        break;
    case FigureId::EdgeEnergy:
        s.base_overrides = {{"offload_factor", "1"}, {"frame_rate", "10"}, {"uav_antenna_elements", "8"},
                            {"uav_gpu_efficiency", "50"}, {"elevation_angle", "70"}};
        s.axes = {range_axis("flight_time", 600, 3600, 600), {"num_uavs", {"5", "10", "15", "20"}},
                  {"edge_class", {"HAP", "LEO"}}};
        s.notes.push_back("assumed: offload_factor=1, frame_rate=10, uav_antenna_elements=8");
        break;
    }
    s.notes.insert(s.notes.begin(), "figure " + name);
    return s;
}

std::string stability_csv()
{
    const ScenarioConfig base = load_config("", {{"edge_class", "HAP"}});
    const std::vector<double> local_rates{5, 10, 15, 20, 25, 30};
    const std::vector<double> edge_rates{5, 10, 15, 20};
    const std::vector<int> edge_uavs{5, 10, 15, 20, 25, 30};

    std::ostringstream out;
    out << "# " << kToolName << ' ' << kToolVersion << '\n';
    out << "# figure stability\n";
    out << "# local load factor does not depend on num_uavs (left empty)\n";
    out << "queue,offload_factor,num_uavs,frame_rate,load_factor,stable\n";
    auto emit = [&](std::string_view queue, double eta, const std::string& n, double r, double rho) {
        out << queue << ',' << format_number(eta) << ',' << n << ',' << format_number(r) << ','
            << format_number(rho) << ',' << (rho < 1.0 ? "yes" : "no") << '\n';
    };
    for (double eta : {0.0, 0.5}) {
        ScenarioConfig cfg = base;
        cfg.offload_factor = eta;
        const auto grid = stability_map(cfg, {1}, local_rates, QueueSide::Local);
        for (std::size_t j = 0; j < local_rates.size(); ++j) emit("local", eta, "", local_rates[j], grid[0][j]);
    }
    for (double eta : {0.5, 1.0}) {
        ScenarioConfig cfg = base;
        cfg.offload_factor = eta;
        const auto grid = stability_map(cfg, edge_uavs, edge_rates, QueueSide::Edge);
        for (std::size_t i = 0; i < edge_uavs.size(); ++i)
            for (std::size_t j = 0; j < edge_rates.size(); ++j)
                emit("edge", eta, std::to_string(edge_uavs[i]), edge_rates[j], grid[i][j]);
    }
    return out.str();
}

std::string figure_csv(FigureId id, unsigned threads)
{
    if (id == FigureId::Stability) return stability_csv();
    return sweep_csv(figure_spec(id), threads);
}

}  // namespace ntn
