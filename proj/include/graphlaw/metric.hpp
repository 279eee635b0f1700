#pragma once

#include "graphlaw/graph.hpp"
#include "graphlaw/rational.hpp"

namespace graphlaw {

// Largest radius s <= cap at which the rooted balls around u in g and v in h
// have equal canonical codes. Radius 0 always agrees.
int agreement_radius(const FiniteGraph& g, int u, const FiniteGraph& h, int v, int cap);

// Rooted-graph distance 2^-s, where s is the largest radius at which the
// balls around the two roots agree; 0 when the rooted components are
// isomorphic. Balls stabilize once the radius reaches the component size,
// so the scan is finite.
Rational ultrametric_distance(const FiniteGraph& g, int u, const FiniteGraph& h, int v);

}  // namespace graphlaw
