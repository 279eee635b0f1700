// Command-line front end: wires the documented file formats to the library.
// Exit codes: 0 success/pass, 1 semantic fail, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphlaw/convergence.hpp"
#include "graphlaw/errors.hpp"
#include "graphlaw/graphing.hpp"
#include "graphlaw/io.hpp"
#include "graphlaw/measure.hpp"
#include "graphlaw/metric.hpp"
#include "graphlaw/unimodular.hpp"

namespace {

using namespace graphlaw;

FiniteGraph load_bounded_graph(const std::string& path, const Config& cfg) {
    ParsedGraph parsed = load_graph_file(path);
    require_degree_bound(parsed.graph, cfg);
    return parsed.graph;
}

int run_law(const std::string& path, const Config& cfg) {
    write_measure(std::cout, law_of_graph(load_bounded_graph(path, cfg)));
    return 0;
}

int run_profile(const std::string& path, int radius, const Config& cfg) {
    if (radius < 0) throw ParseError("--radius must be nonnegative");
    FiniteGraph g = load_bounded_graph(path, cfg);
    for (int r = 0; r <= radius; ++r) write_profile(std::cout, profile_of_graph(g, r));
    return 0;
}

int run_dist(const std::string& path_a, const std::string& path_b, long long root_a,
             long long root_b, bool have_root_a, bool have_root_b, const Config& cfg) {
    ParsedGraph a = load_graph_file(path_a);
    ParsedGraph b = load_graph_file(path_b);
    require_degree_bound(a.graph, cfg);
    require_degree_bound(b.graph, cfg);
    int u = 0;  // default root: the smallest declared id
    int v = 0;
    if (have_root_a) {
        u = a.index_of(root_a);
        if (u < 0) throw ParseError("graph " + path_a + " has no vertex " + std::to_string(root_a));
    }
    if (have_root_b) {
        v = b.index_of(root_b);
        if (v < 0) throw ParseError("graph " + path_b + " has no vertex " + std::to_string(root_b));
    }
    std::cout << "rho " << rational_str(ultrametric_distance(a.graph, u, b.graph, v))
              << "\n";
    return 0;
}

int run_check(const std::string& path) {
    AtomicMeasure m = load_measure_file(path);
    DiscrepancyReport report = check_unimodular_exact(m);
    write_report(std::cout, report);
    return report.passed ? 0 : 1;
}

int run_graphing_validate(const std::string& path, const Config& cfg) {
    GraphingSpec spec = load_graphing_file(path);
    ValidationResult result = validate_graphing(spec, cfg);
    std::cout << "verdict " << (result.ok ? "pass" : "fail") << "\n";
    if (!result.ok) std::cout << "reason " << result.reason << "\n";
    return result.ok ? 0 : 1;
}

GraphingSpec load_valid_graphing(const std::string& path, const Config& cfg) {
    GraphingSpec spec = load_graphing_file(path);
    ValidationResult result = validate_graphing(spec, cfg);
    if (!result.ok) throw ParseError("invalid graphing: " + result.reason);
    return spec;
}

int run_graphing_estimate(const std::string& path, int radius, std::uint64_t samples,
                          std::uint64_t seed, int jobs, const Config& cfg) {
    GraphingSpec spec = load_valid_graphing(path, cfg);
    write_estimate(std::cout, estimate_profile(spec, radius, samples, seed, jobs, cfg));
    return 0;
}

int run_graphing_check(const std::string& path, int radius, std::uint64_t samples,
                       std::uint64_t seed, int jobs, const std::string& tolerance,
                       const Config& cfg) {
    GraphingSpec spec = load_valid_graphing(path, cfg);
    if (radius < 2) {
        throw ParseError("graphing-check needs --radius >= 2 so the flipped radius stays >= 1");
    }
    Rational tol = parse_decimal_or_rational(tolerance);
    EdgeProfiles profiles = estimate_edge_profiles(spec, radius, samples, seed, jobs, cfg);
    DiscrepancyReport report =
        check_unimodular_profile(profiles.forward, profiles.backward, tol);
    write_report(std::cout, report);
    return report.passed ? 0 : 1;
}

int run_converge(const std::vector<std::string>& paths, int radius,
                 const std::string& limit_path, const Config& cfg) {
    if (radius < 0) throw ParseError("--radius must be nonnegative");
    std::vector<FiniteGraph> graphs;
    graphs.reserve(paths.size());
    for (const auto& p : paths) graphs.push_back(load_bounded_graph(p, cfg));
    std::map<int, RadiusProfile> limits;
    if (!limit_path.empty()) {
        limits = load_profiles_file(limit_path);
        for (int r = 0; r <= radius; ++r) {
            if (!limits.count(r)) {
                throw ParseError("limit file has no radius-" + std::to_string(r) +
                                 " profile");
            }
        }
    }
    for (int r = 0; r <= radius; ++r) {
        std::vector<RadiusProfile> profiles = profile_sequence(graphs, r);
        write_convergence_row(std::cout, cauchy_report(profiles), false);
        if (!limit_path.empty()) {
            write_convergence_row(std::cout, compare_to_limit(profiles, limits.at(r)), true);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laws, profiles, and unimodularity checks for bounded-degree graphs"};
    app.require_subcommand(1);

    int delta = 8;
    app.add_option("--delta", delta, "maximum vertex degree")->capture_default_str();

    std::string graph_path, graph_path_b, measure_path, graphing_path, limit_path;
    std::string tolerance = "0.01";
    std::vector<std::string> graph_paths;
    int radius = 0;
    long long root_a = 0, root_b = 0;
    std::uint64_t samples = 100000, seed = 0;
    int jobs = 1;

    CLI::App* law = app.add_subcommand("law", "law of a finite graph");
    law->add_option("graph", graph_path, "graph file")->required();

    CLI::App* profile = app.add_subcommand("profile", "ball-class profiles at radii 0..R");
    profile->add_option("graph", graph_path, "graph file")->required();
    profile->add_option("--radius", radius, "maximum radius R")->required();

    CLI::App* dist = app.add_subcommand("dist", "rooted-graph distance between two graphs");
    dist->add_option("graph-a", graph_path, "first graph file")->required();
    dist->add_option("graph-b", graph_path_b, "second graph file")->required();
    CLI::Option* opt_root_a =
        dist->add_option("--root-a", root_a, "root id in graph-a (default: smallest id)");
    CLI::Option* opt_root_b =
        dist->add_option("--root-b", root_b, "root id in graph-b (default: smallest id)");

    CLI::App* check = app.add_subcommand("check", "exact unimodularity check of a measure");
    check->add_option("measure", measure_path, "measure file")->required();

    CLI::App* gvalidate = app.add_subcommand("graphing-validate", "validate a graphing file");
    gvalidate->add_option("graphing", graphing_path, "graphing file")->required();

    CLI::App* gestimate =
        app.add_subcommand("graphing-estimate", "sampled ball-class profile of a graphing");
    gestimate->add_option("graphing", graphing_path, "graphing file")->required();
    gestimate->add_option("--radius", radius, "ball radius")->required();
    gestimate->add_option("--samples", samples, "sample count")->capture_default_str();
    gestimate->add_option("--seed", seed, "sampling seed")->capture_default_str();
    gestimate->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    CLI::App* gcheck =
        app.add_subcommand("graphing-check", "two-sided edge-profile unimodularity check");
    gcheck->add_option("graphing", graphing_path, "graphing file")->required();
    gcheck->add_option("--radius", radius, "ball radius (>= 2)")->required();
    gcheck->add_option("--samples", samples, "sample count")->capture_default_str();
    gcheck->add_option("--seed", seed, "sampling seed")->capture_default_str();
    gcheck->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    gcheck->add_option("--tolerance", tolerance, "pass threshold for the sup discrepancy")
        ->capture_default_str();

    CLI::App* converge =
        app.add_subcommand("converge", "TV-distance diagnostics along a graph sequence");
    converge->add_option("graphs", graph_paths, "graph files, in sequence order")
        ->required();
    converge->add_option("--radius", radius, "maximum radius R")->required();
    converge->add_option("--limit-file", limit_path,
                         "profile file with candidate limit profiles for radii 0..R");

    // let global flags trail the subcommand: "law g.txt --delta 9"
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Config cfg{delta};
    if (delta < 1) {
        std::cerr << "error: --delta must be at least 1\n";
        return 2;
    }

    try {
        if (law->parsed()) return run_law(graph_path, cfg);
        if (profile->parsed()) return run_profile(graph_path, radius, cfg);
        if (dist->parsed()) {
            return run_dist(graph_path, graph_path_b, root_a, root_b,
                            opt_root_a->count() > 0, opt_root_b->count() > 0, cfg);
        }
        if (check->parsed()) return run_check(measure_path);
        if (gvalidate->parsed()) return run_graphing_validate(graphing_path, cfg);
        if (gestimate->parsed()) {
            return run_graphing_estimate(graphing_path, radius, samples, seed, jobs, cfg);
        }
        if (gcheck->parsed()) {
            return run_graphing_check(graphing_path, radius, samples, seed, jobs, tolerance,
                                      cfg);
        }
        if (converge->parsed()) return run_converge(graph_paths, radius, limit_path, cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
