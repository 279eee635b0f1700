#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "graphlaw/convergence.hpp"
#include "graphlaw/graphing.hpp"
#include "graphlaw/measure.hpp"
#include "graphlaw/unimodular.hpp"

namespace graphlaw {

// Graph files: one edge `u v` per line, isolated vertices as `node v`,
// `#` starts a comment. Vertex ids are arbitrary nonnegative integers;
// they are mapped to 0..n-1 in sorted order.
struct ParsedGraph {
    FiniteGraph graph;
    std::vector<long long> ids;  // sorted original ids; position = internal id
    int index_of(long long id) const;
};
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);
void write_graph(std::ostream& out, const FiniteGraph& g);

// Measure files: `atom <hex-code> <num>/<den>` lines. Atom codes must be
// canonical rooted codes; weights positive and summing to exactly 1.
AtomicMeasure parse_measure_text(const std::string& text);
AtomicMeasure load_measure_file(const std::string& path);
void write_measure(std::ostream& out, const AtomicMeasure& m);

// Profile lines: `r <r> <hex-code> <num>/<den>`, lexicographic by code
// within each radius. A file may carry several radii.
void write_profile(std::ostream& out, const RadiusProfile& p);
std::map<int, RadiusProfile> parse_profiles_text(const std::string& text);
std::map<int, RadiusProfile> load_profiles_file(const std::string& path);

// Estimates add provenance and per-code standard errors:
// `radius`, `samples`, `seed` lines, then `r <r> <hex> <mass> stderr <err>`
// with decimals at 6 significant digits.
void write_estimate(std::ostream& out, const Estimate& est);

// Graphing files: `involution reflect <p>/<q>` or `involution swap`
// followed by indented `pair <a>/<b> <c>/<d> <len_num>/<len_den>` lines.
GraphingSpec parse_graphing_text(const std::string& text);
GraphingSpec load_graphing_file(const std::string& path);
void write_graphing(std::ostream& out, const GraphingSpec& s);

// Check reports: `verdict pass|fail`, `discrepancy <num>/<den>` (exact) or
// a decimal (estimates), `witness <hex-code>` when one exists.
void write_report(std::ostream& out, const DiscrepancyReport& report);

// Convergence rows: `r <r> n <i> tv <num>/<den>` per pair (i, i+1), then
// `r <r> cauchy_from <index>|none`. Rows against a candidate limit use the
// keys `limit_tv` and `limit_from`, indexing single profiles.
void write_convergence_row(std::ostream& out, const ConvergenceRow& row, bool to_limit);

// Accepts `p/q`, an integer, or a decimal like 0.01 (parsed exactly).
Rational parse_decimal_or_rational(const std::string& text);

}  // namespace graphlaw
