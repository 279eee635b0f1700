#include "graphlaw/unimodular.hpp"

#include "graphlaw/ball.hpp"
#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

Rational map_total(const std::map<Code, Rational>& m) {
    Rational t(0);
    for (const auto& [code, w] : m) t += w;
    return t;
}

Code birooted_code_at(const FiniteGraph& g, int r1, int r2, int radius) {
    BirootedBall b = extract_birooted_ball(g, r1, r2, radius);
    return canonical_code(b, Config{b.graph.max_degree()});
}

// Sup-gap comparison shared by the exact and profile checks.
DiscrepancyReport sup_report(const std::map<Code, Rational>& forward,
                             const std::map<Code, Rational>& backward,
                             const Rational& tolerance) {
    DiscrepancyReport report;
    auto consider = [&report](const Code& code, const Rational& gap) {
        if (gap > report.discrepancy) {
            report.discrepancy = gap;
            report.witness = code;
        }
    };
    auto ia = forward.begin();
    auto ib = backward.begin();
    while (ia != forward.end() || ib != backward.end()) {
        if (ib == backward.end() || (ia != forward.end() && ia->first < ib->first)) {
            consider(ia->first, rational_abs(ia->second));
            ++ia;
        } else if (ia == forward.end() || ib->first < ia->first) {
            consider(ib->first, rational_abs(ib->second));
            ++ib;
        } else {
            consider(ia->first, rational_abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    if (report.discrepancy == 0) report.witness.reset();
    report.passed = report.discrepancy <= tolerance;
    return report;
}

}  // namespace

Rational BirootedAtomicMeasure::total() const { return map_total(atoms); }
Rational BirootedProfile::total() const { return map_total(masses); }

BirootedAtomicMeasure edge_measure(const AtomicMeasure& m) {
    BirootedAtomicMeasure out;
    for (const auto& [code, w] : m.atoms) {
        RootedBall ball = decode_rooted(code);
        int n = ball.graph.vertex_count();
        for (int x : ball.graph.neighbors(ball.root)) {
            out.atoms[birooted_code_at(ball.graph, ball.root, x, n)] += w;
        }
    }
    return out;
}

int transport_count(const Code& rooted, const Code& birooted_class) {
    RootedBall ball = decode_rooted(rooted);
    BirootedBall cls = decode_birooted(birooted_class);
    if (cls.radius > ball.radius) {
        throw DomainError("class radius exceeds the rooted code's radius");
    }
    int count = 0;
    for (int x : ball.graph.neighbors(ball.root)) {
        if (birooted_code_at(ball.graph, ball.root, x, cls.radius) == birooted_class) {
            ++count;
        }
    }
    return count;
}

BirootedAtomicMeasure iota_pushforward(const BirootedAtomicMeasure& v) {
    BirootedAtomicMeasure out;
    for (const auto& [code, w] : v.atoms) {
        BirootedBall ball = decode_birooted(code);
        // Atoms carry whole components at stabilization radius, so the
        // swapped pair sees the same vertex set and no truncation happens.
        out.atoms[birooted_code_at(ball.graph, ball.root2, ball.root1, ball.radius)] += w;
    }
    return out;
}

DiscrepancyReport check_unimodular_exact(const AtomicMeasure& m) {
    BirootedAtomicMeasure mu = edge_measure(m);
    BirootedAtomicMeasure swapped = iota_pushforward(mu);
    DiscrepancyReport report = sup_report(mu.atoms, swapped.atoms, Rational(0));
    report.exact = true;
    return report;
}

EdgeProfiles edge_profiles(const RadiusProfile& p) {
    if (p.radius < 2) {
        throw DomainError("edge profiles need radius >= 2 so the flipped radius stays >= 1");
    }
    EdgeProfiles out;
    out.forward.radius = p.radius - 1;
    out.backward.radius = p.radius - 1;
    for (const auto& [code, w] : p.masses) {
        RootedBall ball = decode_rooted(code);
        for (int x : ball.graph.neighbors(ball.root)) {
            out.forward.masses[birooted_code_at(ball.graph, ball.root, x, p.radius - 1)] += w;
            out.backward.masses[birooted_code_at(ball.graph, x, ball.root, p.radius - 1)] += w;
        }
    }
    return out;
}

DiscrepancyReport check_unimodular_profile(const BirootedProfile& forward,
                                           const BirootedProfile& backward,
                                           const Rational& tolerance) {
    if (forward.radius != backward.radius) {
        throw DomainError("edge profile radii differ: " + std::to_string(forward.radius) +
                          " vs " + std::to_string(backward.radius));
    }
    DiscrepancyReport report = sup_report(forward.masses, backward.masses, tolerance);
    report.exact = !forward.estimated && !backward.estimated;
    return report;
}

}  // namespace graphlaw
