#include "graphlaw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "graphlaw/errors.hpp"

namespace graphlaw {

FiniteGraph::FiniteGraph(int vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

void FiniteGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw DomainError("unknown vertex id " + std::to_string(v));
}

void FiniteGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool FiniteGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& FiniteGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int FiniteGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int FiniteGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const FiniteGraph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

std::vector<int> component_of(const FiniteGraph& g, int v) {
    auto dist = bfs_distances(g, v);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dist[static_cast<std::size_t>(u)] >= 0) out.push_back(u);
    return out;
}

std::vector<std::vector<int>> components(const FiniteGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        auto comp = component_of(g, v);
        for (int u : comp) seen[static_cast<std::size_t>(u)] = true;
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced_subgraph(const FiniteGraph& g, const std::vector<int>& vertices) {
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count() || new_id[static_cast<std::size_t>(v)] >= 0)
            throw DomainError("bad vertex selection for induced subgraph");
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    InducedSubgraph out;
    out.graph = FiniteGraph(static_cast<int>(vertices.size()));
    out.old_id = vertices;
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (v < w && new_id[static_cast<std::size_t>(w)] >= 0)
                out.graph.add_edge(new_id[static_cast<std::size_t>(v)],
                                   new_id[static_cast<std::size_t>(w)]);
    return out;
}

void require_degree_bound(const FiniteGraph& g, const Config& cfg) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > cfg.delta)
            throw DomainError("degree " + std::to_string(g.degree(v)) + " at vertex " +
                              std::to_string(v) + " exceeds bound " + std::to_string(cfg.delta));
}

}  // namespace graphlaw
