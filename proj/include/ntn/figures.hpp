#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntn/sweep.hpp"

namespace ntn {

enum class FigureId {
    Stability,
    HapAutonomy,
    HapDelay,
    HapEfficiency,
    HapNuavs,
    LeoAutonomy,
    LeoDelay,
    LeoElevation,
    EdgeEnergy,
};

std::vector<FigureId> all_figures();
std::string_view to_string(FigureId id);

/// Throws ParseError for an unknown id.
FigureId parse_figure_id(std::string_view text);

/// Sweep behind a metric figure. Not defined for `Stability`, which has
/// its own table layout.
SweepSpec figure_spec(FigureId id);

/// Load factors of the local and edge queues over the built-in grids.
std::string stability_csv();

std::string figure_csv(FigureId id, unsigned threads = 0);

}  // namespace ntn
