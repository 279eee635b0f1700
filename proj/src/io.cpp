#include "graphlaw/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Lines with comments stripped and tokens split on whitespace; blank lines
// dropped. Line numbers are 1-based for error messages.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
    }
    return out;
}

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

long long parse_vertex_id(int line, const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
        fail_line(line, "vertex id must be a nonnegative integer, got '" + tok + "'");
    }
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        fail_line(line, "vertex id out of range: " + tok);
    }
}

Rational parse_rational_at(int line, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        fail_line(line, e.what());
    }
}

Code parse_code_at(int line, const std::string& tok) {
    try {
        return Code::from_hex(tok);
    } catch (const ParseError& e) {
        fail_line(line, e.what());
    }
}

// Measure atoms and profile keys must round-trip: decodable, of the stated
// kind, and already in canonical form.
Code require_canonical_rooted(int line, const Code& c) {
    try {
        RootedBall ball = decode_rooted(c);
        Code again = canonical_code(ball, Config{std::max(1, ball.graph.max_degree())});
        if (again != c) fail_line(line, "code is not canonical: " + c.hex());
        return c;
    } catch (const ParseError& e) {
        fail_line(line, e.what());
    } catch (const DomainError& e) {
        fail_line(line, e.what());
    }
}

}  // namespace

int ParsedGraph::index_of(long long id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
}

ParsedGraph parse_graph_text(const std::string& text) {
    auto lines = tokenize(text);
    std::vector<long long> ids;
    std::vector<std::pair<long long, long long>> edges;
    std::vector<int> edge_lines;
    for (const auto& [number, tokens] : lines) {
        if (tokens[0] == "node") {
            if (tokens.size() != 2) fail_line(number, "expected: node <v>");
            ids.push_back(parse_vertex_id(number, tokens[1]));
        } else if (tokens.size() == 2) {
            long long u = parse_vertex_id(number, tokens[0]);
            long long v = parse_vertex_id(number, tokens[1]);
            if (u == v) fail_line(number, "self-loops are not allowed");
            ids.push_back(u);
            ids.push_back(v);
            edges.emplace_back(u, v);
            edge_lines.push_back(number);
        } else {
            fail_line(number, "expected an edge `u v` or `node <v>`");
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw ParseError("graph file declares no vertices");

    ParsedGraph out;
    out.ids = std::move(ids);
    out.graph = FiniteGraph(static_cast<int>(out.ids.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        try {
            out.graph.add_edge(out.index_of(edges[i].first), out.index_of(edges[i].second));
        } catch (const DomainError& e) {
            fail_line(edge_lines[i], e.what());
        }
    }
    return out;
}

ParsedGraph load_graph_file(const std::string& path) {
    return parse_graph_text(read_file(path));
}

void write_graph(std::ostream& out, const FiniteGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) out << "node " << v << "\n";
    }
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

AtomicMeasure parse_measure_text(const std::string& text) {
    AtomicMeasure m;
    for (const auto& [number, tokens] : tokenize(text)) {
        if (tokens[0] != "atom" || tokens.size() != 3) {
            fail_line(number, "expected: atom <hex-code> <num>/<den>");
        }
        Code code = require_canonical_rooted(number, parse_code_at(number, tokens[1]));
        Rational w = parse_rational_at(number, tokens[2]);
        if (w <= 0) fail_line(number, "atom weight must be positive");
        if (m.atoms.count(code)) fail_line(number, "duplicate atom " + code.hex());
        m.atoms[code] = w;
    }
    if (m.total() != 1) {
        throw ParseError("atom weights sum to " + rational_str(m.total()) +
                         ", expected exactly 1");
    }
    return m;
}

AtomicMeasure load_measure_file(const std::string& path) {
    return parse_measure_text(read_file(path));
}

void write_measure(std::ostream& out, const AtomicMeasure& m) {
    for (const auto& [code, w] : m.atoms) {
        out << "atom " << code.hex() << " " << rational_str(w) << "\n";
    }
}

void write_profile(std::ostream& out, const RadiusProfile& p) {
    for (const auto& [code, w] : p.masses) {
        out << "r " << p.radius << " " << code.hex() << " " << rational_str(w) << "\n";
    }
}

std::map<int, RadiusProfile> parse_profiles_text(const std::string& text) {
    std::map<int, RadiusProfile> out;
    for (const auto& [number, tokens] : tokenize(text)) {
        if (tokens[0] != "r" || tokens.size() != 4) {
            fail_line(number, "expected: r <radius> <hex-code> <num>/<den>");
        }
        int radius;
        try {
            radius = std::stoi(tokens[1]);
        } catch (const std::exception&) {
            fail_line(number, "bad radius: " + tokens[1]);
        }
        if (radius < 0) fail_line(number, "radius must be nonnegative");
        Code code = require_canonical_rooted(number, parse_code_at(number, tokens[2]));
        if (code.radius() != radius) {
            fail_line(number, "code radius " + std::to_string(code.radius()) +
                                  " does not match line radius " + std::to_string(radius));
        }
        Rational w = parse_rational_at(number, tokens[3]);
        if (w <= 0) fail_line(number, "profile mass must be positive");
        auto& profile = out[radius];
        profile.radius = radius;
        if (profile.masses.count(code)) fail_line(number, "duplicate code " + code.hex());
        profile.masses[code] = w;
    }
    for (const auto& [radius, profile] : out) {
        if (profile.total() != 1) {
            throw ParseError("radius " + std::to_string(radius) + " masses sum to " +
                             rational_str(profile.total()) + ", expected exactly 1");
        }
    }
    return out;
}

std::map<int, RadiusProfile> load_profiles_file(const std::string& path) {
    return parse_profiles_text(read_file(path));
}

void write_estimate(std::ostream& out, const Estimate& est) {
    out << "radius " << est.radius << "\n";
    out << "samples " << est.sample_count << "\n";
    out << "seed " << est.seed << "\n";
    for (const auto& [code, count] : est.counts) {
        double p = static_cast<double>(count) / static_cast<double>(est.sample_count);
        out << "r " << est.radius << " " << code.hex() << " " << decimal6(p) << " stderr "
            << decimal6(est.stderr_of(code)) << "\n";
    }
}

GraphingSpec parse_graphing_text(const std::string& text) {
    GraphingSpec spec;
    bool in_swap = false;
    for (const auto& [number, tokens] : tokenize(text)) {
        if (tokens[0] == "involution") {
            if (tokens.size() >= 2 && tokens[1] == "reflect") {
                if (tokens.size() != 3) fail_line(number, "expected: involution reflect <p>/<q>");
                spec.involutions.emplace_back(
                    Reflection{parse_rational_at(number, tokens[2])});
                in_swap = false;
            } else if (tokens.size() == 2 && tokens[1] == "swap") {
                spec.involutions.emplace_back(SwapList{});
                in_swap = true;
            } else {
                fail_line(number, "expected: involution reflect <p>/<q> | involution swap");
            }
        } else if (tokens[0] == "pair") {
            if (!in_swap) fail_line(number, "pair line outside an `involution swap` block");
            if (tokens.size() != 4) {
                fail_line(number, "expected: pair <a>/<b> <c>/<d> <len_num>/<len_den>");
            }
            IntervalSwap sw{parse_rational_at(number, tokens[1]),
                            parse_rational_at(number, tokens[2]),
                            parse_rational_at(number, tokens[3])};
            std::get<SwapList>(spec.involutions.back()).swaps.push_back(std::move(sw));
        } else {
            fail_line(number, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (spec.involutions.empty()) {
        throw ParseError("graphing file declares no involutions");
    }
    return spec;
}

GraphingSpec load_graphing_file(const std::string& path) {
    GraphingSpec spec = parse_graphing_text(read_file(path));
    spec.label = path;
    return spec;
}

void write_graphing(std::ostream& out, const GraphingSpec& s) {
    for (const auto& inv : s.involutions) {
        if (const auto* refl = std::get_if<Reflection>(&inv)) {
            out << "involution reflect " << rational_str(refl->c) << "\n";
        } else {
            out << "involution swap\n";
            for (const auto& sw : std::get<SwapList>(inv).swaps) {
                out << "  pair " << rational_str(sw.a) << " " << rational_str(sw.b) << " "
                    << rational_str(sw.length) << "\n";
            }
        }
    }
}

void write_report(std::ostream& out, const DiscrepancyReport& report) {
    out << "verdict " << (report.passed ? "pass" : "fail") << "\n";
    if (report.exact) {
        out << "discrepancy " << rational_str(report.discrepancy) << "\n";
    } else {
        out << "discrepancy " << decimal6(report.discrepancy.get_d()) << "\n";
    }
    if (report.witness) out << "witness " << report.witness->hex() << "\n";
}

void write_convergence_row(std::ostream& out, const ConvergenceRow& row, bool to_limit) {
    const char* tv_key = to_limit ? "limit_tv" : "tv";
    const char* from_key = to_limit ? "limit_from" : "cauchy_from";
    for (std::size_t i = 0; i < row.tv.size(); ++i) {
        out << "r " << row.radius << " n " << i << " " << tv_key << " "
            << rational_str(row.tv[i]) << "\n";
    }
    out << "r " << row.radius << " " << from_key << " ";
    if (row.cauchy_from) {
        out << *row.cauchy_from << "\n";
    } else {
        out << "none\n";
    }
}

Rational parse_decimal_or_rational(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    std::string digits = text;
    digits.erase(dot, 1);
    bool negative = !digits.empty() && digits[0] == '-';
    std::string body = negative ? digits.substr(1) : digits;
    if (body.empty() || !std::all_of(body.begin(), body.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("not a decimal or rational: " + text);
    }
    std::size_t places = text.size() - dot - 1;
    if (places == 0 || dot == (negative ? 1u : 0u)) {
        throw ParseError("not a decimal or rational: " + text);
    }
    Rational num{mpz_class(body, 10)};  // leading zeros must not flip to octal
    mpz_class den(1);
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    Rational q = num / Rational(den);
    return negative ? -q : q;
}

}  // namespace graphlaw
