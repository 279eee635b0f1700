#pragma once

#include <optional>
#include <vector>

#include "graphlaw/measure.hpp"

namespace graphlaw {

// Convergence diagnostics at one radius. Any finite radius gives only a
// partial certificate; reports carry the radius they examined.
struct ConvergenceRow {
    int radius = 0;
    std::vector<Rational> tv;               // distances, all in [0,1]
    std::optional<std::size_t> cauchy_from;  // first index with an all-zero tail
};

// Exact radius-r profiles of the graphs, in order.
std::vector<RadiusProfile> profile_sequence(const std::vector<FiniteGraph>& graphs, int r);

// tv[i] = TV(profiles[i], profiles[i+1]); cauchy_from = smallest i such
// that every consecutive distance from i on is exactly 0.
ConvergenceRow cauchy_report(const std::vector<RadiusProfile>& profiles);

// tv[i] = TV(profiles[i], limit); cauchy_from = smallest i from which every
// term equals the limit exactly.
ConvergenceRow compare_to_limit(const std::vector<RadiusProfile>& profiles,
                                const RadiusProfile& limit);

}  // namespace graphlaw
