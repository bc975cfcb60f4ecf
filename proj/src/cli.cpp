#include "ntn/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ntn/figures.hpp"
#include "ntn/scenario.hpp"
#include "ntn/sweep.hpp"
#include "ntn/validation.hpp"

namespace ntn {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    file << text;
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

Overrides parse_sets(const std::vector<std::string>& sets)
{
    Overrides o;
    for (const auto& s : sets) o.push_back(split_assignment(s));
    return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Analytical simulator of UAV computation offloading to HAP/LEO edge servers",
                 std::string(kToolName)};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path;
    unsigned threads = 0;

    auto* sweep = app.add_subcommand("sweep", "Evaluate a Cartesian parameter grid and write CSV");
    std::vector<std::string> axes;
    std::size_t cap = 1'000'000;
    sweep->add_option("--config", config_path, "Flat JSON config file");
    sweep->add_option("--set", sets, "Override a config key (key=value)");
    sweep->add_option("--axis", axes, "Sweep axis (field=v1,v2,...)")->required();
    sweep->add_option("--out", out_path, "Output CSV path (default stdout)");
    sweep->add_option("--cap", cap, "Maximum number of grid rows");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* figure = app.add_subcommand("figure", "Write one of the built-in figure data sets");
    std::string figure_id;
    std::string ids;
    for (auto id : all_figures()) ids += std::string(ids.empty() ? "" : ", ") + std::string(to_string(id));
    figure->add_option("id", figure_id, "One of: " + ids)->required();
    figure->add_option("--out", out_path, "Output CSV path (default stdout)");
    figure->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* config = app.add_subcommand("config", "Print the resolved configuration as JSON");
    config->add_option("--config", config_path, "Flat JSON config file");
    config->add_option("--set", sets, "Override a config key (key=value)");

    auto* validate_cmd = app.add_subcommand("validate", "Compare analytic D/M/1 results with simulation");
    double arrival_rate = 10.0;
    double service_rate = 100.0 / 9.0;
    std::uint64_t arrivals = 1'000'000;
    std::uint64_t seed = 1;
    validate_cmd->add_option("--arrival-rate", arrival_rate, "Arrival rate (jobs/s)");
    validate_cmd->add_option("--service-rate", service_rate, "Service rate (jobs/s)");
    validate_cmd->add_option("--arrivals", arrivals, "Simulated arrivals");
    validate_cmd->add_option("--seed", seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*sweep) {
            SweepSpec spec;
            if (!config_path.empty()) spec.base_source = read_file(config_path);
            spec.base_overrides = parse_sets(sets);
            for (const auto& a : axes) spec.axes.push_back(parse_axis(a));
            spec.row_cap = cap;
            emit(sweep_csv(spec, threads), out_path, out);
        } else if (*figure) {
            emit(figure_csv(parse_figure_id(figure_id), threads), out_path, out);
        } else if (*config) {
            const std::string source = config_path.empty() ? std::string() : read_file(config_path);
            out << to_json_text(load_config(source, parse_sets(sets)));
        } else if (*validate_cmd) {
            const QueueParams q{arrival_rate, service_rate};
            const QueueResult analytic = sojourn_time(q);
            if (analytic.state != QueueState::Stable)
                throw ConfigError("arrival-rate", "must give 0 < rho < 1");
            const DesResult des = simulate_dm1(q, arrivals, seed);
            out << std::setprecision(10);
            out << "load_factor        " << analytic.load_factor << '\n';
            out << "delta_newton       " << analytic.delta << '\n';
            out << "delta_bisection    " << bisect_delta(q) << '\n';
            out << "delta_fixed_point  " << fixed_point_iterate(q, 100000) << '\n';
            out << "delta_approx       " << delta_approximation(q) << '\n';
            out << "sojourn_analytic   " << analytic.sojourn_time << '\n';
            out << "sojourn_simulated  " << des.mean_sojourn << " +/- " << des.confidence_halfwidth << " (95%, "
                << des.sample_count << " jobs)\n";
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SweepError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace ntn
