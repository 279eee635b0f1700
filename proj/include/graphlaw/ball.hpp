#pragma once

#include "graphlaw/graph.hpp"

namespace graphlaw {

// Connected graph with a distinguished root, every vertex within `radius`
// of it. Construct through extract_ball or decode so the invariants hold.
struct RootedBall {
    FiniteGraph graph;
    int root = 0;
    int radius = 0;
};

// Ordered pair of adjacent roots; every vertex within `radius` of root1.
// Minimum radius is 1 (root2 must lie in the ball).
struct BirootedBall {
    FiniteGraph graph;
    int root1 = 0;
    int root2 = 0;
    int radius = 1;
};

// Subgraph induced by vertices at distance <= r from o, rooted at o.
RootedBall extract_ball(const FiniteGraph& g, int o, int r);

// Ball of radius r around o1 with ordered roots (o1, o2). o2 must be
// adjacent to o1 and r >= 1.
BirootedBall extract_birooted_ball(const FiniteGraph& g, int o1, int o2, int r);

}  // namespace graphlaw
