#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ntn/metrics.hpp"
#include "ntn/scenario.hpp"

namespace ntn {

inline constexpr std::string_view kToolName = "ntn-offload-sim";
inline constexpr std::string_view kToolVersion = "1.0.0";

class SweepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepAxis {
    std::string field;
    std::vector<std::string> values;
};

/// Base settings plus a Cartesian grid over config keys. Each grid point
/// is loaded through `load_config`, so class-dependent defaults follow an
/// `edge_class` axis.
struct SweepSpec {
    std::string base_source;
    Overrides base_overrides;
    std::vector<SweepAxis> axes;
    std::size_t row_cap = 1'000'000;
    std::vector<std::string> notes;  // extra '#' header lines
};

/// Parses `field=v1,v2,...`.
SweepAxis parse_axis(std::string_view text);

/// Validates `spec` and returns the number of grid points.
std::size_t grid_size(const SweepSpec& spec);

/// Rows in lexicographic axis order (first axis outermost). Points are
/// evaluated on a worker pool; `threads == 0` picks the hardware count.
std::vector<MetricRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::vector<std::string> metric_columns();

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// FNV-1a 64 over the resolved base config and axes, as 16 hex digits.
std::string config_hash(const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<MetricRow>& rows);

std::string sweep_csv(const SweepSpec& spec, unsigned threads = 0);

}  // namespace ntn
