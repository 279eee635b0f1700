#include "graphlaw/ball.hpp"

#include <string>

#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

// Vertices within distance r of o, in (distance, id) order so roots land at
// fixed indices after reindexing.
std::vector<int> ball_vertices(const FiniteGraph& g, int o, int r) {
    auto dist = bfs_distances(g, o);
    std::vector<int> picked;
    for (int d = 0; d <= r; ++d)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(v)] == d) picked.push_back(v);
    return picked;
}

}  // namespace

RootedBall extract_ball(const FiniteGraph& g, int o, int r) {
    if (o < 0 || o >= g.vertex_count())
        throw DomainError("unknown vertex id " + std::to_string(o));
    if (r < 0) throw DomainError("negative radius");
    auto sub = induced_subgraph(g, ball_vertices(g, o, r));
    return RootedBall{std::move(sub.graph), 0, r};
}

BirootedBall extract_birooted_ball(const FiniteGraph& g, int o1, int o2, int r) {
    if (o1 < 0 || o1 >= g.vertex_count())
        throw DomainError("unknown vertex id " + std::to_string(o1));
    if (!g.has_edge(o1, o2))
        throw DomainError("roots " + std::to_string(o1) + " and " + std::to_string(o2) +
                          " are not adjacent");
    if (r < 1) throw DomainError("birooted ball needs radius >= 1 to contain the second root");
    auto picked = ball_vertices(g, o1, r);
    // Reorder so o2 comes right after o1: o2 is at distance 1, so this stays
    // within its BFS layer.
    for (std::size_t i = 1; i < picked.size(); ++i) {
        if (picked[i] == o2) {
            picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(i));
            picked.insert(picked.begin() + 1, o2);
            break;
        }
    }
    auto sub = induced_subgraph(g, picked);
    return BirootedBall{std::move(sub.graph), 0, 1, r};
}

}  // namespace graphlaw
