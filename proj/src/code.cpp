#include "graphlaw/code.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

constexpr std::uint8_t kVersion = 0x01;
constexpr std::uint8_t kFlagBirooted = 0x01;
constexpr int kHeaderBytes = 6;

// Bit j of a packed row lives in word j/64 at position 63 - j%64, so
// word-wise integer comparison equals bit-wise lexicographic comparison.
using Row = std::vector<std::uint64_t>;

bool get_bit(const Row& row, int j) {
    return (row[static_cast<std::size_t>(j) >> 6] >> (63 - (j & 63))) & 1u;
}

void set_bit(Row& row, int j) {
    row[static_cast<std::size_t>(j) >> 6] |= std::uint64_t{1} << (63 - (j & 63));
}

void clear_bit(Row& row, int j) {
    row[static_cast<std::size_t>(j) >> 6] &= ~(std::uint64_t{1} << (63 - (j & 63)));
}

// Searches for the lexicographically minimal serialization over admissible
// vertex orders: position 0 is the root (position 1 the second root when
// birooted), and positions are partitioned into BFS layers by distance from
// the root, so a vertex may only occupy positions of its own layer.
class Canonizer {
public:
    Canonizer(const FiniteGraph& g, int root1, int root2, bool birooted)
        : g_(g),
          n_(g.vertex_count()),
          words_((n_ + 63) / 64),
          birooted_(birooted),
          root1_(root1),
          root2_(root2) {
        adj_.assign(static_cast<std::size_t>(n_), Row(words_, 0));
        for (int v = 0; v < n_; ++v) {
            for (int u : g.neighbors(v)) set_bit(adj_[v], u);
        }
        auto dist = bfs_distances(g, root1);
        int layers = 0;
        for (int v = 0; v < n_; ++v) layers = std::max(layers, dist[v] + 1);
        layer_members_.assign(layers, {});
        for (int v = 0; v < n_; ++v) layer_members_[dist[v]].push_back(v);
        pos_layer_.reserve(n_);
        for (int d = 0; d < layers; ++d) {
            for (std::size_t i = 0; i < layer_members_[d].size(); ++i) {
                pos_layer_.push_back(d);
            }
        }
        placement_.assign(n_, -1);
        placed_.assign(n_, false);
        rows_.assign(n_, Row(words_, 0));
        best_.assign(n_, Row(words_, 0));
    }

    // Rows 1..n-1 of the minimal serialization.
    std::vector<Row> run() {
        dfs(0, false);
        return best_;
    }

private:
    // Compares equal-length packed rows; rows at the same position always
    // have the same bit length, so word comparison is exact.
    static int compare_rows(const Row& a, const Row& b) {
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
        }
        return 0;
    }

    // True if u and v have identical adjacency outside {u, v}; placing one
    // or the other leads to the same set of completions.
    bool twins(int u, int v) const {
        Row a = adj_[u];
        Row b = adj_[v];
        clear_bit(a, u);
        clear_bit(a, v);
        clear_bit(b, u);
        clear_bit(b, v);
        return a == b;
    }

    Row row_for(int v, int pos) const {
        Row r(words_, 0);
        for (int j = 0; j < pos; ++j) {
            if (get_bit(adj_[v], placement_[j])) set_bit(r, j);
        }
        return r;
    }

    // prefix_equal: rows 0..pos-1 coincide with the current best prefix.
    // Returns true if the subtree replaced the best serialization, in which
    // case the new best runs through the caller's current prefix.
    bool dfs(int pos, bool prefix_equal) {
        if (pos == n_) {
            if (!have_best_ || !prefix_equal) {
                best_ = rows_;
                have_best_ = true;
                return true;
            }
            return false;
        }

        std::vector<int> candidates;
        if (pos == 0) {
            candidates.push_back(root1_);
        } else if (birooted_ && pos == 1) {
            candidates.push_back(root2_);
        } else {
            for (int v : layer_members_[pos_layer_[pos]]) {
                if (!placed_[v]) candidates.push_back(v);
            }
        }

        // Only minimal-row candidates can extend a minimal serialization:
        // rows at equal positions have equal length, so any larger row loses
        // regardless of what follows it.
        std::vector<Row> cand_rows;
        cand_rows.reserve(candidates.size());
        int min_idx = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            cand_rows.push_back(row_for(candidates[i], pos));
            if (i > 0 && compare_rows(cand_rows[i], cand_rows[min_idx]) < 0) {
                min_idx = static_cast<int>(i);
            }
        }
        std::vector<int> tied;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (compare_rows(cand_rows[i], cand_rows[min_idx]) != 0) continue;
            bool dup = false;
            for (int u : tied) {
                if (twins(u, candidates[i])) {
                    dup = true;
                    break;
                }
            }
            if (!dup) tied.push_back(candidates[i]);
        }

        bool eq_child = false;
        if (have_best_ && prefix_equal) {
            int c = compare_rows(cand_rows[min_idx], best_[pos]);
            if (c > 0) return false;
            eq_child = (c == 0);
        }

        bool replaced = false;
        for (int v : tied) {
            placement_[pos] = v;
            placed_[v] = true;
            rows_[pos] = cand_rows[min_idx];
            if (dfs(pos + 1, eq_child)) {
                replaced = true;
                // The new best shares this prefix and this row.
                eq_child = true;
            }
            placed_[v] = false;
            placement_[pos] = -1;
        }
        return replaced;
    }

    const FiniteGraph& g_;
    int n_;
    int words_;
    bool birooted_;
    int root1_;
    int root2_;
    std::vector<Row> adj_;
    std::vector<std::vector<int>> layer_members_;
    std::vector<int> pos_layer_;
    std::vector<int> placement_;
    std::vector<bool> placed_;
    std::vector<Row> rows_;
    std::vector<Row> best_;
    bool have_best_ = false;
};

std::vector<std::uint8_t> pack(const std::vector<Row>& rows, int n, int radius,
                               bool birooted) {
    std::vector<std::uint8_t> out;
    int body_bits = n * (n - 1) / 2;
    out.reserve(kHeaderBytes + (body_bits + 7) / 8);
    out.push_back(kVersion);
    out.push_back(birooted ? kFlagBirooted : 0);
    out.push_back(static_cast<std::uint8_t>(radius >> 8));
    out.push_back(static_cast<std::uint8_t>(radius & 0xff));
    out.push_back(static_cast<std::uint8_t>(n >> 8));
    out.push_back(static_cast<std::uint8_t>(n & 0xff));
    std::uint8_t acc = 0;
    int filled = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            acc = static_cast<std::uint8_t>(acc << 1);
            if (get_bit(rows[i], j)) acc |= 1;
            if (++filled == 8) {
                out.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return out;
}

void check_ball(const FiniteGraph& g, int root, int radius, const Config& cfg,
                const char* what) {
    if (g.vertex_count() == 0) throw DomainError(std::string(what) + " has no vertices");
    if (root < 0 || root >= g.vertex_count()) {
        throw DomainError(std::string(what) + " root out of range");
    }
    if (radius < 0) throw DomainError(std::string(what) + " has negative radius");
    if (g.vertex_count() > std::numeric_limits<std::uint16_t>::max()) {
        throw DomainError(std::string(what) + " too large to encode");
    }
    if (radius > std::numeric_limits<std::uint16_t>::max()) {
        throw DomainError(std::string(what) + " radius too large to encode");
    }
    if (g.max_degree() > cfg.delta) {
        throw DomainError("degree bound exceeded: " + std::to_string(g.max_degree()) +
                          " > " + std::to_string(cfg.delta));
    }
    auto dist = bfs_distances(g, root);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] < 0 || dist[v] > radius) {
            throw DomainError(std::string(what) +
                              " contains a vertex outside the root's radius");
        }
    }
}

Code encode(const FiniteGraph& g, int root1, int root2, int radius, bool birooted) {
    Canonizer canon(g, root1, root2, birooted);
    auto rows = canon.run();
    return Code(pack(rows, g.vertex_count(), radius, birooted));
}

int read_u16(const std::vector<std::uint8_t>& b, std::size_t at) {
    return (static_cast<int>(b[at]) << 8) | static_cast<int>(b[at + 1]);
}

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

bool Code::is_birooted() const {
    if (bytes_.size() < kHeaderBytes) throw ParseError("code too short for a header");
    return (bytes_[1] & kFlagBirooted) != 0;
}

int Code::radius() const {
    if (bytes_.size() < kHeaderBytes) throw ParseError("code too short for a header");
    return read_u16(bytes_, 2);
}

int Code::vertex_count() const {
    if (bytes_.size() < kHeaderBytes) throw ParseError("code too short for a header");
    return read_u16(bytes_, 4);
}

std::string Code::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Code Code::from_hex(const std::string& text) {
    if (text.empty() || text.size() % 2 != 0) {
        throw ParseError("hex code must have a positive even number of digits");
    }
    std::vector<std::uint8_t> bytes;
    bytes.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        int hi = hex_nibble(text[i]);
        int lo = hex_nibble(text[i + 1]);
        if (hi < 0 || lo < 0) {
            throw ParseError("invalid hex digit in code: " + text);
        }
        bytes.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return Code(std::move(bytes));
}

Code canonical_code(const RootedBall& b, const Config& cfg) {
    check_ball(b.graph, b.root, b.radius, cfg, "rooted ball");
    return encode(b.graph, b.root, -1, b.radius, false);
}

Code canonical_code(const BirootedBall& b, const Config& cfg) {
    check_ball(b.graph, b.root1, b.radius, cfg, "birooted ball");
    if (b.root2 < 0 || b.root2 >= b.graph.vertex_count()) {
        throw DomainError("birooted ball second root out of range");
    }
    if (b.radius < 1) throw DomainError("birooted ball needs radius >= 1");
    if (!b.graph.has_edge(b.root1, b.root2)) {
        throw DomainError("birooted ball roots must be adjacent");
    }
    return encode(b.graph, b.root1, b.root2, b.radius, true);
}

std::variant<RootedBall, BirootedBall> decode(const Code& c) {
    const auto& b = c.bytes();
    if (b.size() < kHeaderBytes) throw ParseError("code too short for a header");
    if (b[0] != kVersion) {
        throw ParseError("unsupported code version " + std::to_string(b[0]));
    }
    if ((b[1] & ~kFlagBirooted) != 0) {
        throw ParseError("unknown code flags");
    }
    bool birooted = (b[1] & kFlagBirooted) != 0;
    int radius = read_u16(b, 2);
    int n = read_u16(b, 4);
    if (n == 0) throw ParseError("code has no vertices");
    int body_bits = n * (n - 1) / 2;
    std::size_t body_bytes = static_cast<std::size_t>((body_bits + 7) / 8);
    if (b.size() != kHeaderBytes + body_bytes) {
        throw ParseError("code length does not match its vertex count");
    }
    FiniteGraph g(n);
    int bit = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j, ++bit) {
            std::uint8_t byte = b[kHeaderBytes + (bit >> 3)];
            if ((byte >> (7 - (bit & 7))) & 1) g.add_edge(i, j);
        }
    }
    if (body_bits % 8 != 0) {
        std::uint8_t tail = b.back();
        if ((tail & ((1u << (8 - body_bits % 8)) - 1)) != 0) {
            throw ParseError("code has nonzero padding bits");
        }
    }
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < n; ++v) {
        if (dist[v] < 0 || dist[v] > radius) {
            throw ParseError("code graph is not contained in the root's radius");
        }
    }
    if (birooted) {
        if (n < 2 || !g.has_edge(0, 1)) {
            throw ParseError("birooted code roots are not adjacent");
        }
        if (radius < 1) throw ParseError("birooted code needs radius >= 1");
        return BirootedBall{std::move(g), 0, 1, radius};
    }
    return RootedBall{std::move(g), 0, radius};
}

RootedBall decode_rooted(const Code& c) {
    auto v = decode(c);
    if (auto* r = std::get_if<RootedBall>(&v)) return std::move(*r);
    throw DomainError("expected a rooted code, got a birooted one");
}

BirootedBall decode_birooted(const Code& c) {
    auto v = decode(c);
    if (auto* r = std::get_if<BirootedBall>(&v)) return std::move(*r);
    throw DomainError("expected a birooted code, got a rooted one");
}

Code flip_birooted(const Code& c) {
    BirootedBall b = decode_birooted(c);
    if (b.radius < 2) {
        throw DomainError("flip needs radius >= 2 so the flipped radius stays >= 1");
    }
    BirootedBall flipped = extract_birooted_ball(b.graph, b.root2, b.root1, b.radius - 1);
    return canonical_code(flipped, Config{flipped.graph.max_degree()});
}

Code component_code(const FiniteGraph& component, int root) {
    RootedBall ball{component, root, component.vertex_count()};
    return canonical_code(ball, Config{component.max_degree()});
}

Code birooted_component_code(const FiniteGraph& component, int root1, int root2) {
    BirootedBall ball{component, root1, root2, component.vertex_count()};
    return canonical_code(ball, Config{component.max_degree()});
}

}  // namespace graphlaw
