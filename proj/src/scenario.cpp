#include "ntn/scenario.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"

namespace ntn {

using nlohmann::json;

std::string_view to_string(NodeClass c)
{
    switch (c) {
    case NodeClass::Uav: return "UAV";
    case NodeClass::Hap: return "HAP";
    case NodeClass::Leo: return "LEO";
    }
    return "?";
}

std::string_view to_string(AntennaKind k)
{
    return k == AntennaKind::Upa ? "UPA" : "CAR";
}

NodeClass parse_node_class(std::string_view text)
{
    if (text == "UAV" || text == "uav") return NodeClass::Uav;
    if (text == "HAP" || text == "hap") return NodeClass::Hap;
    if (text == "LEO" || text == "leo") return NodeClass::Leo;
    throw ParseError("unknown node class '" + std::string(text) + "'");
}

AntennaKind parse_antenna_kind(std::string_view text)
{
    if (text == "UPA" || text == "upa") return AntennaKind::Upa;
    if (text == "CAR" || text == "car") return AntennaKind::Car;
    throw ParseError("unknown antenna kind '" + std::string(text) + "'");
}

// P_TX = P_t + 168 N + 178.5 mW, P_RX = 69 N + 266.8 mW
AntennaPowerModel AntennaPowerModel::upa(int elements)
{
    AntennaPowerModel m;
    m.kind = AntennaKind::Upa;
    m.elements = elements;
    m.tx_slope = 0.168;
    m.tx_intercept = 0.1785;
    m.rx_slope = 0.069;
    m.rx_intercept = 0.2668;
    return m;
}

AntennaPowerModel AntennaPowerModel::car()
{
    AntennaPowerModel m;
    m.kind = AntennaKind::Car;
    m.elements = 1;
    m.tx_intercept = 0.316;
    m.rx_intercept = 0.3058;
    return m;
}

double uav_eirp_dbw(int elements)
{
    return 10.0 * std::log10(static_cast<double>(elements)) - 6.0;
}

double uav_gain_to_temp_db(int elements)
{
    return 10.0 * std::log10(static_cast<double>(elements)) - 31.0;
}

NodeProfile default_uav(int elements)
{
    NodeProfile p;
    p.node_class = NodeClass::Uav;
    p.altitude = 100.0;
    p.compute_capacity = 1000.0;
    p.gpu_efficiency = 50.0;
    p.battery_capacity = 130.0 * kJoulesPerWattHour;
    p.eirp = uav_eirp_dbw(elements);
    p.gain_to_temp = uav_gain_to_temp_db(elements);
    p.antenna = AntennaPowerModel::upa(elements);
    return p;
}

NodeProfile default_hap()
{
    NodeProfile p;
    p.node_class = NodeClass::Hap;
    p.altitude = 20e3;
    p.compute_capacity = 20000.0;
    p.gpu_efficiency = 200.0;
    p.battery_capacity = 8000.0 * kJoulesPerWattHour;
    p.solar_panel_area = 100.0;
    p.eirp = 12.0;
    p.gain_to_temp = -13.0;
    p.antenna = AntennaPowerModel::upa(64);
    return p;
}

NodeProfile default_leo()
{
    NodeProfile p;
    p.node_class = NodeClass::Leo;
    p.altitude = 600e3;
    p.compute_capacity = 20000.0;
    p.gpu_efficiency = 200.0;
    p.battery_capacity = 6000.0 * kJoulesPerWattHour;
    p.solar_panel_area = 30.0;
    p.eirp = 32.5;
    p.gain_to_temp = 13.0;
    p.antenna = AntennaPowerModel::car();
    return p;
}

NodeProfile default_edge(NodeClass edge_class)
{
    switch (edge_class) {
    case NodeClass::Hap: return default_hap();
    case NodeClass::Leo: return default_leo();
    case NodeClass::Uav: break;
    }
    throw ConfigError("edge_class", "must be HAP or LEO");
}

ConfigError::ConfigError(std::string field, const std::string& constraint)
    : std::runtime_error(field + " " + constraint), field_(std::move(field))
{
}

double per_uav_bandwidth(const ScenarioConfig& cfg)
{
    return cfg.total_bandwidth / cfg.num_uavs;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void require(bool ok, const char* field, const char* constraint)
{
    if (!ok) throw ConfigError(field, constraint);
}

void validate_antenna(const AntennaPowerModel& a, const char* prefix)
{
    auto name = [prefix](const char* suffix) { return std::string(prefix) + suffix; };
    auto check = [&](bool ok, const char* suffix, const char* constraint) {
        if (!ok) throw ConfigError(name(suffix), constraint);
    };
    check(a.elements >= 1, "_antenna_elements", "must be ≥ 1");
    check(a.tx_slope >= 0.0 && std::isfinite(a.tx_slope), "_tx_slope", "must be ≥ 0");
    check(a.tx_intercept >= 0.0 && std::isfinite(a.tx_intercept), "_tx_intercept", "must be ≥ 0");
    check(a.rx_slope >= 0.0 && std::isfinite(a.rx_slope), "_rx_slope", "must be ≥ 0");
    check(a.rx_intercept >= 0.0 && std::isfinite(a.rx_intercept), "_rx_intercept", "must be ≥ 0");
    check(a.amplifier_efficiency > 0.0 && a.amplifier_efficiency <= 1.0,
          "_amplifier_efficiency", "must be in (0, 1]");
    if (a.kind == AntennaKind::Car) {
        check(a.elements == 1, "_antenna_elements", "must be 1 for a CAR antenna");
        check(a.tx_slope == 0.0, "_tx_slope", "must be 0 for a CAR antenna");
        check(a.rx_slope == 0.0, "_rx_slope", "must be 0 for a CAR antenna");
    }
}

}  // namespace

void validate(const ScenarioConfig& cfg)
{
    const double inf = std::numeric_limits<double>::infinity();
    auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };

    require(cfg.num_uavs >= 1, "num_uavs", "must be ≥ 1");
    require(cfg.frame_rate > 0.0 && cfg.frame_rate < inf, "frame_rate", "must be > 0");
    require(in(cfg.offload_factor, 0.0, 1.0), "offload_factor", "must be in [0, 1]");
    require(in(cfg.ul_payload, 0.0, inf) && cfg.ul_payload < inf, "ul_payload", "must be ≥ 0");
    require(in(cfg.dl_payload, 0.0, inf) && cfg.dl_payload < inf, "dl_payload", "must be ≥ 0");
    require(cfg.compute_load > 0.0 && cfg.compute_load < inf, "compute_load", "must be > 0");
    require(cfg.total_bandwidth > 0.0 && cfg.total_bandwidth < inf, "total_bandwidth", "must be > 0");
    require(cfg.ul_carrier > 0.0 && cfg.ul_carrier < inf, "ul_carrier", "must be > 0");
    require(cfg.dl_carrier > 0.0 && cfg.dl_carrier < inf, "dl_carrier", "must be > 0");
    require(std::isfinite(cfg.tx_power_dbm), "tx_power", "must be finite");
    require(in(cfg.elevation_angle, 0.0, 90.0), "elevation_angle", "must be in [0, 90]");
    require(cfg.flight_time >= 0.0 && cfg.flight_time < inf, "flight_time", "must be ≥ 0");
    require(cfg.uav_mass > 0.0 && cfg.uav_mass < inf, "uav_mass", "must be > 0");
    require(cfg.propeller_radius > 0.0 && cfg.propeller_radius < inf, "propeller_radius", "must be > 0");
    require(cfg.air_density > 0.0 && cfg.air_density < inf, "air_density", "must be > 0");
    require(cfg.extra_loss_ul >= 0.0 && cfg.extra_loss_ul < inf, "extra_loss_ul", "must be ≥ 0");
    require(cfg.extra_loss_dl >= 0.0 && cfg.extra_loss_dl < inf, "extra_loss_dl", "must be ≥ 0");
    require(cfg.solar_irradiance >= 0.0 && cfg.solar_irradiance < inf, "solar_irradiance", "must be ≥ 0");
    require(in(cfg.photovoltaic_efficiency, 0.0, 1.0), "photovoltaic_efficiency", "must be in [0, 1]");

    const NodeProfile& u = cfg.uav;
    require(u.node_class == NodeClass::Uav, "uav", "profile must be of class UAV");
    require(u.altitude >= 0.0 && u.altitude < inf, "uav_altitude", "must be ≥ 0");
    require(u.compute_capacity > 0.0 && u.compute_capacity < inf, "uav_compute_capacity", "must be > 0");
    require(u.gpu_efficiency > 0.0 && u.gpu_efficiency < inf, "uav_gpu_efficiency", "must be > 0");
    require(u.battery_capacity >= 0.0 && u.battery_capacity < inf, "uav_battery_capacity", "must be ≥ 0");
    require(!u.solar_panel_area.has_value(), "uav_solar_panel_area", "must be absent");
    require(u.antenna.kind == AntennaKind::Upa, "uav_antenna_kind", "must be UPA");
    validate_antenna(u.antenna, "uav");

    const NodeProfile& e = cfg.edge;
    require(e.node_class == NodeClass::Hap || e.node_class == NodeClass::Leo, "edge_class",
            "must be HAP or LEO");
    require(e.altitude > u.altitude && e.altitude < inf, "edge_altitude", "must exceed uav_altitude");
    require(e.compute_capacity > 0.0 && e.compute_capacity < inf, "edge_compute_capacity", "must be > 0");
    require(e.gpu_efficiency > 0.0 && e.gpu_efficiency < inf, "edge_gpu_efficiency", "must be > 0");
    require(e.battery_capacity >= 0.0 && e.battery_capacity < inf, "edge_battery_capacity", "must be ≥ 0");
    require(e.solar_panel_area.has_value() && *e.solar_panel_area > 0.0 && *e.solar_panel_area < inf,
            "edge_solar_panel_area", "must be > 0");
    require(std::isfinite(e.eirp), "edge_eirp", "must be finite");
    require(std::isfinite(e.gain_to_temp), "edge_gain_to_temp", "must be finite");
    validate_antenna(e.antenna, "edge");
}

// ---------------------------------------------------------------------------
// Flat key/value (de)serialization

namespace {

enum class FieldKind { Real, Count, Text, OptionalReal };

struct Field {
    const char* name;
    FieldKind kind;
    std::function<void(ScenarioConfig&, const json&)> set;
    std::function<json(const ScenarioConfig&)> get;
};

double as_real(const char* name, const json& v)
{
    if (!v.is_number()) throw ParseError(std::string(name) + ": expected a number");
    return v.get<double>();
}

int as_count(const char* name, const json& v)
{
    if (v.is_number_integer()) {
        const auto i = v.get<long long>();
        if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
            throw ParseError(std::string(name) + ": integer out of range");
        return static_cast<int>(i);
    }
    const double d = as_real(name, v);
    if (d != std::floor(d) || std::abs(d) > std::numeric_limits<int>::max())
        throw ParseError(std::string(name) + ": expected an integer");
    return static_cast<int>(d);
}

std::string as_text(const char* name, const json& v)
{
    if (!v.is_string()) throw ParseError(std::string(name) + ": expected a string");
    return v.get<std::string>();
}

template <class Ref>
Field real(const char* name, Ref ref)
{
    return {name, FieldKind::Real,
            [name, ref](ScenarioConfig& c, const json& v) { ref(c) = as_real(name, v); },
            [ref](const ScenarioConfig& c) { return json(ref(c)); }};
}

template <class Ref>
Field count(const char* name, Ref ref)
{
    return {name, FieldKind::Count,
            [name, ref](ScenarioConfig& c, const json& v) { ref(c) = as_count(name, v); },
            [ref](const ScenarioConfig& c) { return json(ref(c)); }};
}

// Antenna keys are applied after the kind, so switching kind resets the
// coefficients to that kind's defaults before explicit values land.
const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> t;
        t.push_back({"edge_class", FieldKind::Text,
                     [](ScenarioConfig&, const json& v) { (void)parse_node_class(as_text("edge_class", v)); },
                     [](const ScenarioConfig& c) { return json(std::string(to_string(c.edge.node_class))); }});
        t.push_back(count("num_uavs", [](auto& c) -> auto& { return c.num_uavs; }));
        t.push_back(real("frame_rate", [](auto& c) -> auto& { return c.frame_rate; }));
        t.push_back(real("offload_factor", [](auto& c) -> auto& { return c.offload_factor; }));
        t.push_back(real("ul_payload", [](auto& c) -> auto& { return c.ul_payload; }));
        t.push_back(real("dl_payload", [](auto& c) -> auto& { return c.dl_payload; }));
        t.push_back(real("compute_load", [](auto& c) -> auto& { return c.compute_load; }));
        t.push_back(real("total_bandwidth", [](auto& c) -> auto& { return c.total_bandwidth; }));
        t.push_back(real("ul_carrier", [](auto& c) -> auto& { return c.ul_carrier; }));
        t.push_back(real("dl_carrier", [](auto& c) -> auto& { return c.dl_carrier; }));
        t.push_back(real("tx_power", [](auto& c) -> auto& { return c.tx_power_dbm; }));
        t.push_back(real("elevation_angle", [](auto& c) -> auto& { return c.elevation_angle; }));
        t.push_back(real("flight_time", [](auto& c) -> auto& { return c.flight_time; }));
        t.push_back(real("uav_mass", [](auto& c) -> auto& { return c.uav_mass; }));
        t.push_back(real("propeller_radius", [](auto& c) -> auto& { return c.propeller_radius; }));
        t.push_back(real("air_density", [](auto& c) -> auto& { return c.air_density; }));
        t.push_back(real("extra_loss_ul", [](auto& c) -> auto& { return c.extra_loss_ul; }));
        t.push_back(real("extra_loss_dl", [](auto& c) -> auto& { return c.extra_loss_dl; }));
        t.push_back(real("solar_irradiance", [](auto& c) -> auto& { return c.solar_irradiance; }));
        t.push_back(real("photovoltaic_efficiency", [](auto& c) -> auto& { return c.photovoltaic_efficiency; }));

        t.push_back(real("uav_altitude", [](auto& c) -> auto& { return c.uav.altitude; }));
        t.push_back(real("uav_compute_capacity", [](auto& c) -> auto& { return c.uav.compute_capacity; }));
        t.push_back(real("uav_gpu_efficiency", [](auto& c) -> auto& { return c.uav.gpu_efficiency; }));
        t.push_back(real("uav_battery_capacity", [](auto& c) -> auto& { return c.uav.battery_capacity; }));
        t.push_back(count("uav_antenna_elements", [](auto& c) -> auto& { return c.uav.antenna.elements; }));
        t.push_back(real("uav_tx_slope", [](auto& c) -> auto& { return c.uav.antenna.tx_slope; }));
        t.push_back(real("uav_tx_intercept", [](auto& c) -> auto& { return c.uav.antenna.tx_intercept; }));
        t.push_back(real("uav_rx_slope", [](auto& c) -> auto& { return c.uav.antenna.rx_slope; }));
        t.push_back(real("uav_rx_intercept", [](auto& c) -> auto& { return c.uav.antenna.rx_intercept; }));
        t.push_back(real("uav_amplifier_efficiency",
                         [](auto& c) -> auto& { return c.uav.antenna.amplifier_efficiency; }));

        t.push_back(real("edge_altitude", [](auto& c) -> auto& { return c.edge.altitude; }));
        t.push_back(real("edge_compute_capacity", [](auto& c) -> auto& { return c.edge.compute_capacity; }));
        t.push_back(real("edge_gpu_efficiency", [](auto& c) -> auto& { return c.edge.gpu_efficiency; }));
        t.push_back(real("edge_battery_capacity", [](auto& c) -> auto& { return c.edge.battery_capacity; }));
        t.push_back({"edge_solar_panel_area", FieldKind::OptionalReal,
                     [](ScenarioConfig& c, const json& v) {
                         if (v.is_null()) c.edge.solar_panel_area.reset();
                         else c.edge.solar_panel_area = as_real("edge_solar_panel_area", v);
                     },
                     [](const ScenarioConfig& c) {
                         return c.edge.solar_panel_area ? json(*c.edge.solar_panel_area) : json(nullptr);
                     }});
        t.push_back(real("edge_eirp", [](auto& c) -> auto& { return c.edge.eirp; }));
        t.push_back(real("edge_gain_to_temp", [](auto& c) -> auto& { return c.edge.gain_to_temp; }));
        t.push_back({"edge_antenna_kind", FieldKind::Text,
                     [](ScenarioConfig& c, const json& v) {
                         const AntennaKind kind = parse_antenna_kind(as_text("edge_antenna_kind", v));
                         if (kind == c.edge.antenna.kind) return;
                         c.edge.antenna = kind == AntennaKind::Car ? AntennaPowerModel::car()
                                                                   : AntennaPowerModel::upa(64);
                     },
                     [](const ScenarioConfig& c) { return json(std::string(to_string(c.edge.antenna.kind))); }});
        t.push_back(count("edge_antenna_elements", [](auto& c) -> auto& { return c.edge.antenna.elements; }));
        t.push_back(real("edge_tx_slope", [](auto& c) -> auto& { return c.edge.antenna.tx_slope; }));
        t.push_back(real("edge_tx_intercept", [](auto& c) -> auto& { return c.edge.antenna.tx_intercept; }));
        t.push_back(real("edge_rx_slope", [](auto& c) -> auto& { return c.edge.antenna.rx_slope; }));
        t.push_back(real("edge_rx_intercept", [](auto& c) -> auto& { return c.edge.antenna.rx_intercept; }));
        t.push_back(real("edge_amplifier_efficiency",
                         [](auto& c) -> auto& { return c.edge.antenna.amplifier_efficiency; }));
        return t;
    }();
    return table;
}

const Field* find_field(std::string_view name)
{
    for (const auto& f : fields())
        if (name == f.name) return &f;
    return nullptr;
}

json override_value(const Field& f, const std::string& text)
{
    if (f.kind == FieldKind::Text) return json(text);
    if (f.kind == FieldKind::OptionalReal && (text == "null" || text.empty())) return json(nullptr);
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string(f.name) + ": cannot parse '" + text + "' as a number");
    if (f.kind == FieldKind::Count && value == std::floor(value) &&
        std::abs(value) <= std::numeric_limits<int>::max())
        return json(static_cast<long long>(value));
    return json(value);
}

bool is_blank(std::string_view s)
{
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

std::pair<std::string, std::string> split_assignment(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ParseError("expected key=value, got '" + std::string(text) + "'");
    return {std::string(text.substr(0, eq)), std::string(text.substr(eq + 1))};
}

std::vector<std::string> config_keys()
{
    std::vector<std::string> keys;
    for (const auto& f : fields()) keys.emplace_back(f.name);
    return keys;
}

ScenarioConfig load_config(std::string_view source, const Overrides& overrides)
{
    json settings = json::object();
    if (!is_blank(source)) {
        try {
            settings = json::parse(source);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("config parse error: ") + e.what());
        }
        if (!settings.is_object()) throw ParseError("config must be a JSON object");
    }
    for (auto it = settings.begin(); it != settings.end(); ++it)
        if (!find_field(it.key())) throw ConfigError(it.key(), "is not a known key");
    for (const auto& [key, text] : overrides) {
        const Field* f = find_field(key);
        if (!f) throw ConfigError(key, "is not a known key");
        settings[key] = override_value(*f, text);
    }

    NodeClass edge_class = NodeClass::Hap;
    if (auto it = settings.find("edge_class"); it != settings.end())
        edge_class = parse_node_class(as_text("edge_class", *it));
    if (edge_class == NodeClass::Uav) throw ConfigError("edge_class", "must be HAP or LEO");

    ScenarioConfig cfg;
    cfg.edge = default_edge(edge_class);
    for (const auto& f : fields()) {
        auto it = settings.find(f.name);
        if (it != settings.end()) f.set(cfg, *it);
    }
    if (cfg.uav.antenna.elements >= 1) {
        cfg.uav.eirp = uav_eirp_dbw(cfg.uav.antenna.elements);
        cfg.uav.gain_to_temp = uav_gain_to_temp_db(cfg.uav.antenna.elements);
    }
    validate(cfg);
    return cfg;
}

std::string to_json_text(const ScenarioConfig& cfg)
{
    json out = json::object();
    for (const auto& f : fields()) out[f.name] = f.get(cfg);
    // nlohmann sorts object keys; emit in table order for readability.
    std::string text = "{\n";
    const auto& table = fields();
    for (std::size_t i = 0; i < table.size(); ++i) {
        text += "  \"";
        text += table[i].name;
        text += "\": ";
        text += out[table[i].name].dump();
        text += i + 1 < table.size() ? ",\n" : "\n";
    }
    text += "}\n";
    return text;
}

}  // namespace ntn
