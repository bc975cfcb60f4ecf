#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ntn/channel.hpp"
#include "ntn/energy.hpp"
#include "ntn/figures.hpp"
#include "ntn/metrics.hpp"
#include "ntn/queueing.hpp"
#include "ntn/scenario.hpp"
#include "ntn/sweep.hpp"
#include "ntn/validation.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

ntn::Overrides to_overrides(const py::dict& values)
{
    ntn::Overrides o;
    for (auto item : values) {
        const std::string key = py::str(item.first);
        o.emplace_back(key, py::str(item.second).cast<std::string>());
    }
    return o;
}

py::dict breakdown(const ntn::EnergyBreakdown& e)
{
    py::dict d;
    d["movement"] = e.movement;
    d["processing"] = e.processing;
    d["offloading"] = e.offloading;
    d["total"] = e.total;
    return d;
}

py::dict row_to_dict(const ntn::MetricRow& r)
{
    py::dict d;
    d["edge_class"] = std::string(ntn::to_string(r.edge_class));
    d["offload_factor"] = r.offload_factor;
    d["num_uavs"] = r.num_uavs;
    d["frame_rate"] = r.frame_rate;
    d["uav_antenna_elements"] = r.uav_antenna_elements;
    d["elevation_angle"] = r.elevation_angle;
    d["uav_gpu_efficiency"] = r.uav_gpu_efficiency;
    d["flight_time"] = r.flight_time;
    d["load_local"] = r.load_local;
    d["load_edge"] = r.load_edge;
    d["ul_rate"] = r.ul_rate;
    d["dl_rate"] = r.dl_rate;
    d["local_delay"] = r.local_delay;
    d["edge_delay"] = r.edge_delay;
    d["avg_delay"] = r.avg_delay;
    d["autonomy"] = r.autonomy;
    d["uav_energy"] = breakdown(r.uav_energy);
    d["edge_energy"] = breakdown(r.edge_energy);
    d["edge_energy_capacity"] = r.edge_capacity.capacity;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = R"pbdoc(
        Analytical UAV offloading simulator
        -----------------------------------

        D/M/1 delays, mmWave link budgets and energy ledgers for UAV swarms
        offloading frames to a HAP or LEO edge server.
    )pbdoc";

    py::register_exception<ntn::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ntn::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ntn::SweepError>(m, "SweepError", PyExc_ValueError);

    py::class_<ntn::ScenarioConfig>(m, "Scenario")
        .def_property_readonly("edge_class",
                               [](const ntn::ScenarioConfig& c) { return std::string(ntn::to_string(c.edge.node_class)); })
        .def_readonly("num_uavs", &ntn::ScenarioConfig::num_uavs)
        .def_readonly("frame_rate", &ntn::ScenarioConfig::frame_rate)
        .def_readonly("offload_factor", &ntn::ScenarioConfig::offload_factor)
        .def_readonly("flight_time", &ntn::ScenarioConfig::flight_time)
        .def_property_readonly("bandwidth", &ntn::per_uav_bandwidth)
        .def("to_json", &ntn::to_json_text)
        .def("__eq__", [](const ntn::ScenarioConfig& a, const ntn::ScenarioConfig& b) { return a == b; })
        .def("__repr__", [](const ntn::ScenarioConfig& c) {
            return "<Scenario edge=" + std::string(ntn::to_string(c.edge.node_class)) +
                   " n=" + std::to_string(c.num_uavs) + ">";
        });

    m.def(
        "load_config",
        [](const std::string& source, const py::dict& overrides) {
            return ntn::load_config(source, to_overrides(overrides));
        },
        py::arg("source") = "", py::arg("overrides") = py::dict(),
        "Validated scenario from flat JSON text plus key/value overrides.");

    m.def("evaluate", [](const ntn::ScenarioConfig& c) { return row_to_dict(ntn::evaluate(c)); },
          "All metrics for one scenario as a dict; unstable delays are None.");
    m.def("local_delay", &ntn::local_delay);
    m.def("edge_delay", py::overload_cast<const ntn::ScenarioConfig&>(&ntn::edge_delay));
    m.def("average_delay", &ntn::average_delay);
    m.def("uav_autonomy", &ntn::uav_autonomy);

    m.def("load_factor", [](double lambda, double mu) { return ntn::load_factor({lambda, mu}); },
          py::arg("arrival_rate"), py::arg("service_rate"));
    m.def(
        "solve_delta", [](double lambda, double mu, double tol) { return ntn::solve_delta({lambda, mu}, tol); },
        py::arg("arrival_rate"), py::arg("service_rate"), py::arg("tol") = ntn::kDefaultRootTolerance);
    m.def(
        "bisect_delta", [](double lambda, double mu, double tol) { return ntn::bisect_delta({lambda, mu}, tol); },
        py::arg("arrival_rate"), py::arg("service_rate"), py::arg("tol") = ntn::kDefaultRootTolerance);
    m.def("delta_approximation", [](double lambda, double mu) { return ntn::delta_approximation({lambda, mu}); },
          py::arg("arrival_rate"), py::arg("service_rate"));
    m.def(
        "sojourn_time", [](double lambda, double mu) { return ntn::sojourn_time({lambda, mu}).delay(); },
        py::arg("arrival_rate"), py::arg("service_rate"), "D/M/1 sojourn time, or None when unstable.");

    m.def("slant_range_leo", &ntn::slant_range_leo, py::arg("elevation_deg"), py::arg("sat_altitude"));
    m.def("path_loss_db", &ntn::path_loss_db, py::arg("distance"), py::arg("carrier"),
          py::arg("extra_loss_db") = 0.0);
    m.def("snr", &ntn::snr, py::arg("eirp_dbw"), py::arg("gain_to_temp_db"), py::arg("path_loss"),
          py::arg("bandwidth"));
    m.def("shannon_capacity", &ntn::shannon_capacity, py::arg("bandwidth"), py::arg("snr"));

    m.def("hover_power", &ntn::hover_power, py::arg("mass"), py::arg("propeller_radius"),
          py::arg("air_density"));
    m.def("processing_energy_per_frame", &ntn::processing_energy_per_frame, py::arg("compute_load"),
          py::arg("gpu_efficiency"));

    m.def("figure_ids", [] {
        std::vector<std::string> ids;
        for (auto id : ntn::all_figures()) ids.emplace_back(ntn::to_string(id));
        return ids;
    });
    m.def(
        "figure_csv", [](const std::string& id) { return ntn::figure_csv(ntn::parse_figure_id(id)); },
        py::arg("id"));
    m.def(
        "sweep_csv",
        [](const std::vector<std::pair<std::string, std::vector<std::string>>>& axes, const py::dict& overrides,
           const std::string& source) {
            ntn::SweepSpec spec;
            spec.base_source = source;
            spec.base_overrides = to_overrides(overrides);
            for (const auto& [field, values] : axes) spec.axes.push_back({field, values});
            py::gil_scoped_release release;
            return ntn::sweep_csv(spec);
        },
        py::arg("axes"), py::arg("overrides") = py::dict(), py::arg("source") = "");

    m.def(
        "simulate_dm1",
        [](double lambda, double mu, std::uint64_t arrivals, std::uint64_t seed) {
            ntn::DesResult r;
            {
                py::gil_scoped_release release;
                r = ntn::simulate_dm1({lambda, mu}, arrivals, seed);
            }
            py::dict d;
            d["mean_sojourn"] = r.mean_sojourn;
            d["sample_count"] = r.sample_count;
            d["confidence_halfwidth"] = r.confidence_halfwidth;
            return d;
        },
        py::arg("arrival_rate"), py::arg("service_rate"), py::arg("arrivals") = 1'000'000, py::arg("seed") = 1);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
