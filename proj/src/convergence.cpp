#include "graphlaw/convergence.hpp"

#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

// Index of the first element whose tail of distances is all zero.
std::optional<std::size_t> zero_tail_start(const std::vector<Rational>& tv) {
    std::size_t from = tv.size();
    while (from > 0 && tv[from - 1] == 0) --from;
    if (from == tv.size()) return std::nullopt;  // last distance nonzero
    return from;
}

}  // namespace

std::vector<RadiusProfile> profile_sequence(const std::vector<FiniteGraph>& graphs, int r) {
    if (graphs.empty()) throw DomainError("profile sequence needs at least one graph");
    std::vector<RadiusProfile> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(profile_of_graph(g, r));
    return out;
}

ConvergenceRow cauchy_report(const std::vector<RadiusProfile>& profiles) {
    ConvergenceRow row;
    if (profiles.empty()) return row;
    row.radius = profiles.front().radius;
    for (std::size_t i = 0; i + 1 < profiles.size(); ++i) {
        row.tv.push_back(tv_distance(profiles[i], profiles[i + 1]));
    }
    if (profiles.size() == 1) {
        row.cauchy_from = 0;
        return row;
    }
    row.cauchy_from = zero_tail_start(row.tv);
    return row;
}

ConvergenceRow compare_to_limit(const std::vector<RadiusProfile>& profiles,
                                const RadiusProfile& limit) {
    ConvergenceRow row;
    row.radius = limit.radius;
    for (const auto& p : profiles) row.tv.push_back(tv_distance(p, limit));
    row.cauchy_from = zero_tail_start(row.tv);
    return row;
}

}  // namespace graphlaw
