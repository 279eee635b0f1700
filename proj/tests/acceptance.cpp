// End-to-end acceptance gate: one line per criterion, nonzero exit when any
// fails. Criterion 10 drives the CLI binary named on the command line.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphlaw/convergence.hpp"
#include "graphlaw/graphing.hpp"
#include "graphlaw/io.hpp"
#include "graphlaw/metric.hpp"
#include "graphlaw/unimodular.hpp"
#include "testutil.hpp"

using namespace graphlaw;
namespace tu = testutil;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

void fail(Outcome& out, const std::string& why) {
    if (out.passed) {
        out.passed = false;
        out.detail = why;
    }
}

// ---- corpora -------------------------------------------------------------

std::vector<FiniteGraph> corpus_large() {  // criterion 1 and half of 5
    tu::Rng rng(1001);
    std::vector<FiniteGraph> out;
    out.reserve(1000);
    for (int i = 0; i < 1000; ++i) out.push_back(tu::random_graph(rng, 30, 5));
    return out;
}

std::vector<FiniteGraph> corpus_small() {  // criterion 2 and half of 5
    tu::Rng rng(1002);
    std::vector<FiniteGraph> out;
    out.reserve(200);
    for (int i = 0; i < 200; ++i) out.push_back(tu::random_graph(rng, 8, 5));
    return out;
}

GraphingSpec beta_fifth() {
    GraphingSpec s;
    s.involutions.push_back(Reflection{Rational(0)});
    s.involutions.push_back(Reflection{Rational(2, 5)});
    s.label = "beta-1/5";
    return s;
}

// ---- criteria ------------------------------------------------------------

Outcome criterion_laws_unimodular() {
    Outcome out;
    int index = 0;
    for (const auto& g : corpus_large()) {
        DiscrepancyReport rep = check_unimodular_exact(law_of_graph(g));
        if (!rep.passed || !rep.exact || rep.discrepancy != Rational(0)) {
            fail(out, "graph " + std::to_string(index) + ": discrepancy " +
                          rational_str(rep.discrepancy));
            break;
        }
        ++index;
    }
    return out;
}

Outcome criterion_orbit_oracle() {
    Outcome out;
    int index = 0;
    for (const auto& g : corpus_small()) {
        if (law_of_graph(g).atoms != orbit_masses_bruteforce(g).atoms) {
            fail(out, "graph " + std::to_string(index) + ": masses differ");
            break;
        }
        ++index;
    }
    return out;
}

Outcome criterion_ultrametric() {
    Outcome out;
    tu::Rng rng(1003);
    struct Entry {
        FiniteGraph g;
        int root;
        FiniteGraph comp;
        int comp_root;
    };
    std::vector<Entry> pool;
    for (int i = 0; i < 80; ++i) {
        FiniteGraph g = tu::random_graph(rng, 8, 4);
        int root = rng.below(g.vertex_count());
        auto [comp, croot] = tu::rooted_component(g, root);
        pool.push_back({std::move(g), root, std::move(comp), croot});
    }
    const std::size_t n = pool.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i][j] = ultrametric_distance(pool[i].g, pool[i].root, pool[j].g,
                                           pool[j].root);
        }
    }
    for (std::size_t i = 0; i < n && out.passed; ++i) {
        for (std::size_t j = 0; j < n && out.passed; ++j) {
            if (d[i][j] != d[j][i]) fail(out, "asymmetric pair");
            bool iso = tu::rooted_isomorphic(pool[i].comp, pool[i].comp_root,
                                             pool[j].comp, pool[j].comp_root);
            if ((d[i][j] == Rational(0)) != iso) {
                fail(out, "zero-distance/isomorphism mismatch");
            }
        }
    }
    for (int t = 0; t < 10000 && out.passed; ++t) {
        std::size_t i = static_cast<std::size_t>(rng.below(static_cast<int>(n)));
        std::size_t j = static_cast<std::size_t>(rng.below(static_cast<int>(n)));
        std::size_t k = static_cast<std::size_t>(rng.below(static_cast<int>(n)));
        if (d[i][k] > std::max(d[i][j], d[j][k])) {
            fail(out, "ultrametric inequality violated");
        }
    }
    return out;
}

Outcome criterion_flip() {
    Outcome out;
    tu::Rng rng(1004);
    int done = 0;
    while (done < 1000 && out.passed) {
        FiniteGraph g = tu::random_graph(rng, 14, 5);
        if (g.edge_count() == 0) continue;
        auto edges = g.edges();
        auto [u, v] = edges[static_cast<std::size_t>(
            rng.below(static_cast<int>(edges.size())))];
        int r = 2 + rng.below(3);
        Code from_code = flip_birooted(canonical_code(extract_birooted_ball(g, u, v, r)));
        Code direct = canonical_code(extract_birooted_ball(g, v, u, r - 1));
        if (from_code != direct) fail(out, "flip mismatch at sample " + std::to_string(done));
        ++done;
    }
    return out;
}

Outcome criterion_truncation() {
    Outcome out;
    auto run = [&out](const std::vector<FiniteGraph>& corpus, const char* name) {
        int index = 0;
        for (const auto& g : corpus) {
            AtomicMeasure m = law_of_graph(g);
            for (int r = 0; r <= 4 && out.passed; ++r) {
                RadiusProfile via_law = truncate_measure(m, r);
                RadiusProfile direct = profile_of_graph(g, r);
                if (via_law.masses != direct.masses) {
                    fail(out, std::string(name) + " graph " + std::to_string(index) +
                                  " radius " + std::to_string(r));
                }
            }
            if (!out.passed) break;
            ++index;
        }
    };
    run(corpus_large(), "large");
    run(corpus_small(), "small");
    return out;
}

Outcome criterion_cycle_convergence() {
    Outcome out;
    RadiusProfile limit3;
    limit3.radius = 3;
    limit3.masses[canonical_code(extract_ball(tu::path_graph(7), 3, 3))] = Rational(1);

    if (tv_distance(profile_of_graph(tu::cycle_graph(7), 3), limit3) != Rational(1)) {
        fail(out, "C7 should sit at distance 1");
    }
    for (int n = 8; n <= 40 && out.passed; ++n) {
        if (tv_distance(profile_of_graph(tu::cycle_graph(n), 3), limit3) != Rational(0)) {
            fail(out, "C" + std::to_string(n) + " should match the limit");
        }
    }
    // the limit family (balls of the two-sided infinite path, realized by a
    // long cycle) balances its edge profiles exactly at every radius
    for (int r = 2; r <= 3 && out.passed; ++r) {
        EdgeProfiles ep = edge_profiles(profile_of_graph(tu::cycle_graph(20), r));
        DiscrepancyReport rep =
            check_unimodular_profile(ep.forward, ep.backward, Rational(0));
        if (!rep.passed || rep.discrepancy != Rational(0)) {
            fail(out, "limit family unbalanced at radius " + std::to_string(r));
        }
    }
    if (out.passed && !check_refinement(profile_family(tu::cycle_graph(20), 3)).consistent) {
        fail(out, "limit family is not a consistent refinement");
    }
    return out;
}

Outcome criterion_graphing_law() {
    Outcome out;
    GraphingSpec spec = beta_fifth();
    Estimate est = estimate_profile(spec, 2, 100000, 42);
    Code p5_center = canonical_code(extract_ball(tu::path_graph(5), 2, 2));
    if (est.mass(p5_center) < Rational(999, 1000)) {
        fail(out, "P5-center mass " + rational_str(est.mass(p5_center)));
    }
    EdgeProfiles ep = estimate_edge_profiles(spec, 2, 100000, 42);
    DiscrepancyReport rep =
        check_unimodular_profile(ep.forward, ep.backward, Rational(1, 100));
    if (!rep.passed || rep.discrepancy > Rational(1, 100)) {
        fail(out, "edge-profile discrepancy " + rational_str(rep.discrepancy));
    }
    return out;
}

Outcome criterion_graph_as_graphing() {
    Outcome out;
    tu::Rng rng(1008);
    const std::uint64_t samples = 20000;
    for (int trial = 0; trial < 10 && out.passed; ++trial) {
        FiniteGraph g = tu::random_graph(rng, 12, 5);
        GraphingSpec spec = graph_as_graphing(g);
        Config cfg{std::max(8, involution_count(spec))};
        for (int r = 0; r <= 2 && out.passed; ++r) {
            Estimate est = estimate_profile(spec, r, samples, 4242, 2, cfg);
            RadiusProfile exact = profile_of_graph(g, r);
            // sampled points always land in some vertex interval, so every
            // observed code must be a code of the exact profile
            for (const auto& [code, count] : est.counts) {
                if (!exact.masses.count(code)) {
                    fail(out, "estimate found a class the graph lacks");
                }
            }
            for (const auto& [code, mass] : exact.masses) {
                double p = mass.get_d();
                double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
                double diff = std::abs(est.mass(code).get_d() - p);
                if (diff > 3.0 * sigma) {
                    fail(out, "graph " + std::to_string(trial) + " radius " +
                                  std::to_string(r) + ": off by " + std::to_string(diff) +
                                  " (3 sigma = " + std::to_string(3.0 * sigma) + ")");
                }
            }
        }
    }
    return out;
}

Outcome criterion_detects_bias() {
    Outcome out;
    FiniteGraph p3 = tu::path_graph(3);
    AtomicMeasure pinned;
    pinned.atoms[component_code(p3, 0)] = Rational(1);
    DiscrepancyReport rep = check_unimodular_exact(pinned);
    if (rep.passed) fail(out, "pinned-end measure accepted");
    if (rep.discrepancy != Rational(1)) {
        fail(out, "discrepancy " + rational_str(rep.discrepancy) + ", expected 1/1");
    }
    if (!rep.witness || *rep.witness != birooted_component_code(p3, 0, 1)) {
        fail(out, "wrong witness class");
    }
    return out;
}

// ---- criterion 10: CLI determinism ----------------------------------------

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

Outcome criterion_cli_determinism(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        fail(out, "no CLI path given on the command line");
        return out;
    }
    std::string cycle5, cycle6, cycle7, cycle8;
    for (int v = 0; v < 5; ++v) cycle5 += std::to_string(v) + " " + std::to_string((v + 1) % 5) + "\n";
    for (int v = 0; v < 6; ++v) cycle6 += std::to_string(v) + " " + std::to_string((v + 1) % 6) + "\n";
    for (int v = 0; v < 7; ++v) cycle7 += std::to_string(v) + " " + std::to_string((v + 1) % 7) + "\n";
    for (int v = 0; v < 8; ++v) cycle8 += std::to_string(v) + " " + std::to_string((v + 1) % 8) + "\n";
    TempFile p3("acc_p3.txt", "0 1\n1 2\n");
    TempFile c5("acc_c5.txt", cycle5);
    TempFile c6("acc_c6.txt", cycle6);
    TempFile c7("acc_c7.txt", cycle7);
    TempFile c8("acc_c8.txt", cycle8);
    TempFile measure("acc_m.txt", "atom 010000030003a0 2/3\natom 010000030003c0 1/3\n");
    TempFile beta("acc_beta.txt", "involution reflect 0/1\ninvolution reflect 2/5\n");
    TempFile limit("acc_limit.txt",
                   "r 0 010000000001 1/1\n"
                   "r 1 010000010003c0 1/1\n"
                   "r 2 010000020005c500 1/1\n");

    std::vector<std::string> fixed = {
        "law " + p3.path,
        "profile " + p3.path + " --radius 2",
        "dist " + c5.path + " " + c6.path,
        "check " + measure.path,
        "graphing-validate " + beta.path,
        "converge " + c5.path + " " + c6.path + " " + c7.path + " " + c8.path +
            " --radius 2 --limit-file " + limit.path,
    };
    std::vector<std::string> seeded = {
        "graphing-estimate " + beta.path + " --radius 2 --samples 30000 --seed 9",
        "graphing-check " + beta.path + " --radius 2 --samples 30000 --seed 9" +
            " --tolerance 0.01",
    };

    for (const auto& args : fixed) {
        auto first = run_cli(cli, args);
        auto second = run_cli(cli, args);
        if (first != second || first.second.empty()) {
            fail(out, "unstable output for: " + args);
            return out;
        }
    }
    for (const auto& args : seeded) {
        auto base = run_cli(cli, args);
        if (base.second.empty()) {
            fail(out, "no output for: " + args);
            return out;
        }
        for (const std::string jobs : {" --jobs 1", " --jobs 2", " --jobs 4"}) {
            auto again = run_cli(cli, args + jobs);
            if (again != base) {
                fail(out, "worker count changed the bytes for: " + args + jobs);
                return out;
            }
        }
        if (run_cli(cli, args) != base) fail(out, "rerun changed the bytes for: " + args);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        const char* name;
        double limit_seconds;  // 0 = no budget pinned
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {"finite-law-unimodularity", 60.0, criterion_laws_unimodular},
        {"orbit-mass-oracle", 30.0, criterion_orbit_oracle},
        {"ultrametric-axioms", 0.0, criterion_ultrametric},
        {"birooted-flip", 0.0, criterion_flip},
        {"law-truncation", 0.0, criterion_truncation},
        {"cycle-convergence", 0.0, criterion_cycle_convergence},
        {"graphing-law", 30.0, criterion_graphing_law},
        {"graph-as-graphing", 0.0, criterion_graph_as_graphing},
        {"bias-detection", 0.0, criterion_detects_bias},
        {"cli-determinism", 0.0, [&cli] { return criterion_cli_determinism(cli); }},
    };

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            fail(out, std::string("exception: ") + e.what());
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (out.passed && c.limit_seconds > 0 && seconds > c.limit_seconds) {
            fail(out, "over time budget of " + std::to_string(c.limit_seconds) + "s");
        }
        all_passed = all_passed && out.passed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (i + 1) << " " << c.name << ": "
             << (out.passed ? "pass" : "FAIL") << " (" << seconds << "s)";
        if (!out.passed) line << " - " << out.detail;
        std::cout << line.str() << "\n";
    }
    return all_passed ? 0 : 1;
}
