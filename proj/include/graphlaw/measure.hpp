#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graphlaw/code.hpp"
#include "graphlaw/rational.hpp"

namespace graphlaw {

// Finitely supported probability measure on rooted isomorphism classes.
// Atom keys are whole-component classes encoded at stabilization radius
// (the component's vertex count), so atom identity is exact.
struct AtomicMeasure {
    std::map<Code, Rational> atoms;
    Rational total() const;
};

// Distribution of radius-r rooted ball classes. Every key carries radius r.
struct RadiusProfile {
    int radius = 0;
    std::map<Code, Rational> masses;
    Rational total() const;
};

// Rooting at a uniform random vertex: the atom of class [C,o] has mass
// (number of vertices producing that class) / |V|.
AtomicMeasure law_of_graph(const FiniteGraph& g);

// Independent cross-check for law_of_graph at oracle scale (|V| <= 8):
// enumerates all vertex permutations, keeps the automorphisms, and assigns
// each orbit the mass |orbit| / |V|.
AtomicMeasure orbit_masses_bruteforce(const FiniteGraph& g);

// Fraction of vertices whose radius-r ball falls in each class.
RadiusProfile profile_of_graph(const FiniteGraph& g, int r);

// Pushforward of a law to resolution r: every atom contributes its weight
// to the class of its root's radius-r ball.
RadiusProfile truncate_measure(const AtomicMeasure& m, int r);

// Pushforward of a radius-r profile to a coarser radius s <= r.
RadiusProfile truncate_profile(const RadiusProfile& p, int s);

// Half the total absolute mass difference, over the union of keys.
// Requires equal radii.
Rational tv_distance(const RadiusProfile& a, const RadiusProfile& b);

// Profiles of g at radii 0..max_radius.
std::vector<RadiusProfile> profile_family(const FiniteGraph& g, int max_radius);

struct RefinementReport {
    bool consistent = true;
    int radius_from = 0;           // finer radius of the first violation
    int radius_to = 0;             // coarser radius it fails to reproduce
    std::optional<Code> witness;   // coarse class with the wrong mass
};

// Checks that truncating each profile reproduces every coarser one in the
// family exactly. Truncation composes, so consecutive pairs suffice.
RefinementReport check_refinement(const std::vector<RadiusProfile>& profiles);

}  // namespace graphlaw
