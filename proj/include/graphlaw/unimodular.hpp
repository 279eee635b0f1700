#pragma once

#include <map>
#include <optional>

#include "graphlaw/measure.hpp"

namespace graphlaw {

// Measure on birooted classes obtained by splitting each rooted atom's mass
// across the root's neighbors. Total mass is the expected root degree.
struct BirootedAtomicMeasure {
    std::map<Code, Rational> atoms;
    Rational total() const;
};

// Distribution of birooted radius-r ball classes. Masses from sampling are
// still exact rationals (count over sample size); `estimated` marks them so
// downstream reports print decimals.
struct BirootedProfile {
    int radius = 1;
    bool estimated = false;
    std::map<Code, Rational> masses;
    Rational total() const;
};

struct DiscrepancyReport {
    bool passed = false;
    bool exact = true;               // exact rational verdict vs sampled estimate
    Rational discrepancy = Rational(0);   // sup over codes of |forward - backward|
    std::optional<Code> witness;     // a code attaining the sup (smallest such)
};

// For each atom ([C,o], w) and each neighbor x of o, adds w to the birooted
// class [C,o,x] at stabilization radius.
BirootedAtomicMeasure edge_measure(const AtomicMeasure& m);

// Number of neighbors x of the root of `rooted` whose birooted ball at the
// class radius falls in `birooted_class`. The class radius must not exceed
// the rooted radius, or the count would depend on unseen structure.
int transport_count(const Code& rooted, const Code& birooted_class);

// Swaps the two roots of every atom and re-encodes at the same radius.
// Total mass is preserved.
BirootedAtomicMeasure iota_pushforward(const BirootedAtomicMeasure& v);

// Certifies involution invariance of the edge measure of m, exactly:
// passes iff edge_measure(m) equals its root-swap pushforward as measures.
// Discrepancy is the sup over atoms of the absolute mass gap; witness is the
// smallest code attaining it.
DiscrepancyReport check_unimodular_exact(const AtomicMeasure& m);

// Finite-radius edge statistics of a rooted radius-r profile, r >= 2: for
// each atom [B,o] and each neighbor x of the root, forward counts the class
// [B(o,r-1),o,x] and backward the class [B(x,r-1),x,o]. Both are exact
// pushforwards: every radius-(r-1) ball involved lies inside [B,o].
struct EdgeProfiles {
    BirootedProfile forward;
    BirootedProfile backward;
};
EdgeProfiles edge_profiles(const RadiusProfile& p);

// Compares forward and backward edge profiles at equal radii: discrepancy =
// sup over codes of the absolute mass gap, passed iff <= tolerance. A
// necessary, not sufficient, finite-radius shadow of the exact check.
DiscrepancyReport check_unimodular_profile(const BirootedProfile& forward,
                                           const BirootedProfile& backward,
                                           const Rational& tolerance);

}  // namespace graphlaw
