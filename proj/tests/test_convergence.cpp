#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphlaw/convergence.hpp"
#include "graphlaw/errors.hpp"
#include "testutil.hpp"

using namespace graphlaw;
namespace tu = testutil;

namespace {

std::vector<FiniteGraph> cycles(int from, int to) {
    std::vector<FiniteGraph> out;
    for (int n = from; n <= to; ++n) out.push_back(tu::cycle_graph(n));
    return out;
}

}  // namespace

TEST_CASE("profile sequence carries one profile per graph") {
    auto seq = profile_sequence(cycles(3, 6), 1);
    REQUIRE(seq.size() == 4);
    for (const auto& p : seq) {
        CHECK(p.radius == 1);
        CHECK(p.total() == Rational(1));
    }
    CHECK_THROWS_AS(profile_sequence({}, 1), DomainError);
}

TEST_CASE("growing cycles settle at radius 1 once the triangle is gone") {
    ConvergenceRow row = cauchy_report(profile_sequence(cycles(3, 7), 1));
    REQUIRE(row.tv.size() == 4);
    CHECK(row.tv[0] == Rational(1));  // C3 vs C4: triangle ball vs star ball
    CHECK(row.tv[1] == Rational(0));
    CHECK(row.tv[2] == Rational(0));
    CHECK(row.tv[3] == Rational(0));
    REQUIRE(row.cauchy_from.has_value());
    CHECK(*row.cauchy_from == 1);
}

TEST_CASE("growing cycles settle at radius 2 once the wrap is gone") {
    ConvergenceRow row = cauchy_report(profile_sequence(cycles(4, 10), 2));
    REQUIRE(row.tv.size() == 6);
    CHECK(row.tv[0] == Rational(1));  // C4 vs C5
    CHECK(row.tv[1] == Rational(1));  // C5 vs C6
    CHECK(row.tv[2] == Rational(0));  // C6 on: every ball is the 5-path center
    REQUIRE(row.cauchy_from.has_value());
    CHECK(*row.cauchy_from == 2);
}

TEST_CASE("paths approach the two-sided-infinite-path law like 2/n") {
    std::vector<FiniteGraph> paths;
    for (int n = 4; n <= 12; ++n) paths.push_back(tu::path_graph(n));
    auto seq = profile_sequence(paths, 1);

    RadiusProfile limit;  // point mass on the degree-2 ball class
    limit.radius = 1;
    limit.masses[Code::from_hex("010000010003c0")] = Rational(1);

    ConvergenceRow row = compare_to_limit(seq, limit);
    REQUIRE(row.tv.size() == 9);
    for (int i = 0; i < 9; ++i) {
        CHECK(row.tv[static_cast<std::size_t>(i)] == Rational(2) / (i + 4));
    }
    CHECK_FALSE(row.cauchy_from.has_value());  // finite paths never match exactly
}

TEST_CASE("comparison against an attained limit reports where it sticks") {
    auto seq = profile_sequence(cycles(5, 10), 2);
    RadiusProfile limit;
    limit.radius = 2;
    limit.masses[Code::from_hex("010000020005c500")] = Rational(1);
    ConvergenceRow row = compare_to_limit(seq, limit);
    REQUIRE(row.tv.size() == 6);
    CHECK(row.tv[0] == Rational(1));  // C5 still wraps at radius 2
    CHECK(row.tv[1] == Rational(0));
    REQUIRE(row.cauchy_from.has_value());
    CHECK(*row.cauchy_from == 1);
}

TEST_CASE("a constant sequence is settled from the start") {
    std::vector<FiniteGraph> same(4, tu::cycle_graph(6));
    ConvergenceRow row = cauchy_report(profile_sequence(same, 2));
    CHECK(row.tv == std::vector<Rational>(3, Rational(0)));
    REQUIRE(row.cauchy_from.has_value());
    CHECK(*row.cauchy_from == 0);
}

TEST_CASE("a single profile has nothing to compare") {
    ConvergenceRow row = cauchy_report(profile_sequence({tu::cycle_graph(5)}, 1));
    CHECK(row.tv.empty());
    REQUIRE(row.cauchy_from.has_value());
    CHECK(*row.cauchy_from == 0);
}

TEST_CASE("an oscillating tail never becomes Cauchy") {
    std::vector<FiniteGraph> alternating{tu::cycle_graph(4), tu::cycle_graph(5),
                                         tu::cycle_graph(4)};
    ConvergenceRow row = cauchy_report(profile_sequence(alternating, 2));
    CHECK(row.tv == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK_FALSE(row.cauchy_from.has_value());
}

TEST_CASE("radius zero never separates anything") {
    ConvergenceRow row = cauchy_report(profile_sequence(cycles(3, 8), 0));
    for (const auto& d : row.tv) CHECK(d == Rational(0));
    CHECK(*row.cauchy_from == 0);
}

TEST_CASE("limit radius must match the sequence radius") {
    auto seq = profile_sequence(cycles(4, 6), 1);
    RadiusProfile limit;
    limit.radius = 2;
    limit.masses[Code::from_hex("010000020005c500")] = Rational(1);
    CHECK_THROWS_AS(compare_to_limit(seq, limit), DomainError);
}

TEST_CASE("tv distances in a row are between 0 and 1") {
    tu::Rng rng(12);
    std::vector<FiniteGraph> graphs;
    for (int i = 0; i < 8; ++i) graphs.push_back(tu::random_graph(rng, 10, 4));
    for (int r = 0; r <= 3; ++r) {
        ConvergenceRow row = cauchy_report(profile_sequence(graphs, r));
        CHECK(row.radius == r);
        for (const auto& d : row.tv) {
            CHECK(d >= Rational(0));
            CHECK(d <= Rational(1));
        }
    }
}
