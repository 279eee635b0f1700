#pragma once

#include <vector>

namespace graphlaw {

// Global degree bound. Graphs accepted anywhere in the library are simple,
// undirected, and have max degree <= delta.
struct Config {
    int delta = 8;
};

// Simple undirected graph on vertices 0..n-1, adjacency stored as sorted
// neighbor lists. No loops, no multi-edges.
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(int vertex_count);

    // Throws DomainError on loops, duplicate edges, or out-of-range ids.
    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;

    // Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const FiniteGraph& other) const = default;

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const FiniteGraph& g, int source);

// Sorted vertex list of the connected component containing v.
std::vector<int> component_of(const FiniteGraph& g, int v);

// All components, each a sorted vertex list, ordered by smallest vertex.
std::vector<std::vector<int>> components(const FiniteGraph& g);

struct InducedSubgraph {
    FiniteGraph graph;
    std::vector<int> old_id;  // new index -> original vertex
};

// Subgraph induced by `vertices` (must be distinct, valid ids). New indices
// follow the order given.
InducedSubgraph induced_subgraph(const FiniteGraph& g, const std::vector<int>& vertices);

// Throws DomainError if max degree exceeds cfg.delta.
void require_degree_bound(const FiniteGraph& g, const Config& cfg);

}  // namespace graphlaw
