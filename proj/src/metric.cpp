#include "graphlaw/metric.hpp"

#include <algorithm>

#include "graphlaw/ball.hpp"
#include "graphlaw/code.hpp"
#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

Code ball_code(const FiniteGraph& g, int root, int r) {
    RootedBall b = extract_ball(g, root, r);
    return canonical_code(b, Config{b.graph.max_degree()});
}

}  // namespace

int agreement_radius(const FiniteGraph& g, int u, const FiniteGraph& h, int v, int cap) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count()) {
        throw DomainError("root out of range");
    }
    int s = 0;
    while (s < cap && ball_code(g, u, s + 1) == ball_code(h, v, s + 1)) ++s;
    return s;
}

Rational ultrametric_distance(const FiniteGraph& g, int u, const FiniteGraph& h, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count()) {
        throw DomainError("root out of range");
    }
    // Balls of radius >= component size equal the whole component, so
    // agreement at that radius means the rooted components are isomorphic.
    int cap = std::max(static_cast<int>(component_of(g, u).size()),
                       static_cast<int>(component_of(h, v).size()));
    int s = agreement_radius(g, u, h, v, cap);
    if (s == cap) return Rational(0);
    return pow2_inverse(static_cast<unsigned>(s));
}

}  // namespace graphlaw
