#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "graphlaw/ball.hpp"
#include "graphlaw/rational.hpp"
#include "graphlaw/unimodular.hpp"

namespace graphlaw {

// x maps to (c - x) mod 1. Always an involution of the circle; fixed points
// are c/2 and c/2 + 1/2.
struct Reflection {
    Rational c;
};

// [a, a+length) and [b, b+length) trade places by translation.
struct IntervalSwap {
    Rational a;
    Rational b;
    Rational length;
};

// Identity outside its intervals. Involutive when all intervals are
// pairwise disjoint, which validate_graphing enforces.
struct SwapList {
    std::vector<IntervalSwap> swaps;
};

using InvolutionSpec = std::variant<Reflection, SwapList>;

// k measure-preserving involutions of the rational circle [0,1) with the
// uniform measure. Leafgraph: x ~ y iff y = i_j(x) != x for some j.
struct GraphingSpec {
    std::vector<InvolutionSpec> involutions;
    std::string label;
};

struct ValidationResult {
    bool ok = true;
    std::string reason;
};

// Structural checks: at least one involution, at most cfg.delta of them,
// swap intervals inside [0,1) with positive length and pairwise disjoint
// within each involution. Reflections and translations preserve the uniform
// measure by construction. Reports the first violation.
ValidationResult validate_graphing(const GraphingSpec& s, const Config& cfg = {});

// Exact image of x under one involution; identity off a swap's intervals.
Rational apply_involution(const InvolutionSpec& inv, const Rational& x);

// Radius-r ball around x in the leafgraph, explored in exact arithmetic.
// Vertex 0 is the root; throws BudgetError past cfg.delta^r vertices.
RootedBall leaf_ball(const GraphingSpec& s, const Rational& x, int r,
                     const Config& cfg = {});

// Same ball plus the point value of every vertex, for orbit inspection.
struct LeafBall {
    RootedBall ball;
    std::vector<Rational> points;  // points[i] is the value of vertex i
};
LeafBall leaf_ball_points(const GraphingSpec& s, const Rational& x, int r,
                          const Config& cfg = {});

// Monte-Carlo profile of the graphing's law at radius r: n points sampled
// as (64-bit numerator)/2^64, ball classes tallied. Deterministic for fixed
// (s, r, n, seed) regardless of the worker count.
struct Estimate {
    int radius = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::map<Code, std::uint64_t> counts;

    Rational mass(const Code& c) const;      // exact count / sample_count
    double stderr_of(const Code& c) const;   // binomial sqrt(p(1-p)/n)
    RadiusProfile to_profile() const;
};
Estimate estimate_profile(const GraphingSpec& s, int r, std::uint64_t n,
                          std::uint64_t seed, int jobs = 1, const Config& cfg = {});

// Two-sided edge statistics at radius r-1, r >= 2: per sample x and each
// leafgraph neighbor y, forward tallies [B(x,r-1),x,y] and backward tallies
// [B(y,r-1),y,x], the latter by a fresh exploration from y so the two sides
// are independent computations. Weights are 1/n per incidence; totals equal
// the average sampled degree.
EdgeProfiles estimate_edge_profiles(const GraphingSpec& s, int r, std::uint64_t n,
                                    std::uint64_t seed, int jobs = 1,
                                    const Config& cfg = {});

// Finite graph as a graphing: |V| equal intervals, edges grouped into
// involutions by greedy proper edge coloring, each edge swapping its two
// vertex intervals. The leafgraph restricted to a vertex interval's points
// reproduces the graph around that vertex.
GraphingSpec graph_as_graphing(const FiniteGraph& g);

// Involutions in s; leafgraph degree is at most this.
int involution_count(const GraphingSpec& s);

}  // namespace graphlaw
