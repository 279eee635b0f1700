#include "graphlaw/measure.hpp"

#include <algorithm>

#include "graphlaw/ball.hpp"
#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

Rational map_total(const std::map<Code, Rational>& m) {
    Rational t(0);
    for (const auto& [code, w] : m) t += w;
    return t;
}

Code ball_code_at(const FiniteGraph& g, int root, int r) {
    RootedBall b = extract_ball(g, root, r);
    return canonical_code(b, Config{b.graph.max_degree()});
}

}  // namespace

Rational AtomicMeasure::total() const { return map_total(atoms); }
Rational RadiusProfile::total() const { return map_total(masses); }

AtomicMeasure law_of_graph(const FiniteGraph& g) {
    if (g.vertex_count() == 0) throw DomainError("law of an empty graph");
    AtomicMeasure law;
    Rational unit = Rational(1) / g.vertex_count();
    for (const auto& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        for (int v = 0; v < sub.graph.vertex_count(); ++v) {
            law.atoms[component_code(sub.graph, v)] += unit;
        }
    }
    return law;
}

AtomicMeasure orbit_masses_bruteforce(const FiniteGraph& g) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("law of an empty graph");
    if (n > 8) throw DomainError("brute-force orbit oracle is limited to 8 vertices");

    // Union vertices connected by some automorphism.
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    do {
        bool automorphism = true;
        for (int u = 0; u < n && automorphism; ++u) {
            for (int v = u + 1; v < n && automorphism; ++v) {
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) automorphism = false;
            }
        }
        if (!automorphism) continue;
        for (int v = 0; v < n; ++v) {
            int a = find(v);
            int b = find(perm[v]);
            if (a != b) parent[a] = b;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> orbit_size(n, 0);
    for (int v = 0; v < n; ++v) ++orbit_size[find(v)];
    AtomicMeasure out;
    for (int v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        std::vector<int> comp = component_of(g, v);
        InducedSubgraph sub = induced_subgraph(g, comp);
        int root = static_cast<int>(
            std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
        out.atoms[component_code(sub.graph, root)] += Rational(orbit_size[v]) / n;
    }
    return out;
}

RadiusProfile profile_of_graph(const FiniteGraph& g, int r) {
    if (g.vertex_count() == 0) throw DomainError("profile of an empty graph");
    if (r < 0) throw DomainError("profile radius must be nonnegative");
    RadiusProfile p;
    p.radius = r;
    Rational unit = Rational(1) / g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        p.masses[ball_code_at(g, v, r)] += unit;
    }
    return p;
}

RadiusProfile truncate_measure(const AtomicMeasure& m, int r) {
    if (r < 0) throw DomainError("truncation radius must be nonnegative");
    RadiusProfile p;
    p.radius = r;
    for (const auto& [code, w] : m.atoms) {
        RootedBall ball = decode_rooted(code);
        p.masses[ball_code_at(ball.graph, ball.root, r)] += w;
    }
    return p;
}

RadiusProfile truncate_profile(const RadiusProfile& p, int s) {
    if (s < 0) throw DomainError("truncation radius must be nonnegative");
    if (s > p.radius) {
        throw DomainError("cannot truncate a radius-" + std::to_string(p.radius) +
                          " profile to radius " + std::to_string(s));
    }
    RadiusProfile out;
    out.radius = s;
    for (const auto& [code, w] : p.masses) {
        RootedBall ball = decode_rooted(code);
        out.masses[ball_code_at(ball.graph, ball.root, s)] += w;
    }
    return out;
}

Rational tv_distance(const RadiusProfile& a, const RadiusProfile& b) {
    if (a.radius != b.radius) {
        throw DomainError("profile radii differ: " + std::to_string(a.radius) + " vs " +
                          std::to_string(b.radius));
    }
    Rational sum(0);
    auto ia = a.masses.begin();
    auto ib = b.masses.begin();
    while (ia != a.masses.end() || ib != b.masses.end()) {
        if (ib == b.masses.end() || (ia != a.masses.end() && ia->first < ib->first)) {
            sum += rational_abs(ia->second);
            ++ia;
        } else if (ia == a.masses.end() || ib->first < ia->first) {
            sum += rational_abs(ib->second);
            ++ib;
        } else {
            sum += rational_abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return sum / 2;
}

std::vector<RadiusProfile> profile_family(const FiniteGraph& g, int max_radius) {
    std::vector<RadiusProfile> fam;
    fam.reserve(static_cast<std::size_t>(max_radius) + 1);
    for (int r = 0; r <= max_radius; ++r) fam.push_back(profile_of_graph(g, r));
    return fam;
}

RefinementReport check_refinement(const std::vector<RadiusProfile>& profiles) {
    RefinementReport report;
    for (std::size_t i = 0; i + 1 < profiles.size(); ++i) {
        const RadiusProfile& coarse = profiles[i];
        const RadiusProfile& fine = profiles[i + 1];
        RadiusProfile pushed = truncate_profile(fine, coarse.radius);
        if (pushed.masses == coarse.masses) continue;
        report.consistent = false;
        report.radius_from = fine.radius;
        report.radius_to = coarse.radius;
        for (const auto& [code, w] : pushed.masses) {
            auto it = coarse.masses.find(code);
            if (it == coarse.masses.end() || it->second != w) {
                report.witness = code;
                break;
            }
        }
        if (!report.witness) {
            for (const auto& [code, w] : coarse.masses) {
                if (!pushed.masses.count(code)) {
                    report.witness = code;
                    break;
                }
            }
        }
        return report;
    }
    return report;
}

}  // namespace graphlaw
