#include "graphlaw/graphing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "graphlaw/code.hpp"
#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

mpz_class mpz_from_u64(u64 v) {
    return mpz_class(static_cast<unsigned long>(v));
}

Rational rational_u64_ratio(u64 num, u64 den) {
    Rational q(mpz_from_u64(num), mpz_from_u64(den));
    q.canonicalize();
    return q;
}

// Per-sample substream: a fixed hash of (seed, index), so the sample set is
// independent of how indices are split across workers.
u64 mix64(u64 seed, u64 index) {
    u64 z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

u64 saturating_pow(u64 base, int exp) {
    u64 out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<u64>::max() / base) {
            return std::numeric_limits<u64>::max();
        }
        out *= base;
    }
    return out;
}

// ---- exact-rational point dynamics ----

struct RatSegment {
    Rational start;
    Rational end;
    Rational target;
};

struct RatInvolution {
    bool is_reflection = false;
    Rational c;
    std::vector<RatSegment> segments;  // sorted by start
};

struct RatOps {
    using Point = Rational;
    std::vector<RatInvolution> involutions;

    explicit RatOps(const GraphingSpec& s) {
        for (const auto& inv : s.involutions) {
            RatInvolution out;
            if (const auto* refl = std::get_if<Reflection>(&inv)) {
                out.is_reflection = true;
                out.c = mod_one(refl->c);
            } else {
                for (const auto& sw : std::get<SwapList>(inv).swaps) {
                    out.segments.push_back({sw.a, sw.a + sw.length, sw.b});
                    out.segments.push_back({sw.b, sw.b + sw.length, sw.a});
                }
                std::sort(out.segments.begin(), out.segments.end(),
                          [](const RatSegment& x, const RatSegment& y) {
                              return x.start < y.start;
                          });
            }
            involutions.push_back(std::move(out));
        }
    }

    Point apply(std::size_t j, const Point& x) const {
        const RatInvolution& inv = involutions[j];
        if (inv.is_reflection) return mod_one(inv.c - x);
        auto it = std::upper_bound(inv.segments.begin(), inv.segments.end(), x,
                                   [](const Point& v, const RatSegment& seg) {
                                       return v < seg.start;
                                   });
        if (it == inv.segments.begin()) return x;
        --it;
        if (x < it->end) return x - it->start + it->target;
        return x;
    }
};

// ---- fixed-denominator fast path ----
//
// Every spec constant has some denominator L; sample points have
// denominator 2^64. All involution images then stay on the lattice with
// denominator D = L * 2^64, so when D fits in 127 bits the whole orbit
// exploration runs in unsigned 128-bit integers with exact equality.

mpz_class mpz_from_u128(u128 v) {
    mpz_class out = mpz_from_u64(static_cast<u64>(v >> 64));
    out <<= 64;
    out += mpz_from_u64(static_cast<u64>(v));
    return out;
}

u128 u128_from_mpz(const mpz_class& z) {
    mpz_class hi = z >> 64;
    mpz_class lo = z - (hi << 64);
    return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
           mpz_get_ui(lo.get_mpz_t());
}

struct FixSegment {
    u128 start;
    u128 end;
    u128 target;
};

struct FixInvolution {
    bool is_reflection = false;
    u128 c = 0;
    std::vector<FixSegment> segments;
};

struct FixOps {
    using Point = u128;
    u128 denom = 0;
    u128 numerator_scale = 0;  // D / 2^64, multiplies raw 64-bit numerators
    bool usable = false;
    std::vector<FixInvolution> involutions;

    explicit FixOps(const GraphingSpec& s) {
        mpz_class lattice(1);
        auto fold = [&lattice](const Rational& q) {
            mpz_class den = q.get_den();
            mpz_lcm(lattice.get_mpz_t(), lattice.get_mpz_t(), den.get_mpz_t());
        };
        for (const auto& inv : s.involutions) {
            if (const auto* refl = std::get_if<Reflection>(&inv)) {
                fold(mod_one(refl->c));
            } else {
                for (const auto& sw : std::get<SwapList>(inv).swaps) {
                    fold(sw.a);
                    fold(sw.b);
                    fold(sw.length);
                }
            }
        }
        mpz_class big_denom = lattice << 64;
        if (mpz_sizeinbase(big_denom.get_mpz_t(), 2) > 127) return;
        usable = true;
        denom = u128_from_mpz(big_denom);
        numerator_scale = u128_from_mpz(lattice);
        auto units = [&big_denom](const Rational& q) {
            mpz_class scaled = q.get_num() * big_denom / q.get_den();
            return u128_from_mpz(scaled);
        };
        for (const auto& inv : s.involutions) {
            FixInvolution out;
            if (const auto* refl = std::get_if<Reflection>(&inv)) {
                out.is_reflection = true;
                out.c = units(mod_one(refl->c));
            } else {
                for (const auto& sw : std::get<SwapList>(inv).swaps) {
                    u128 a = units(sw.a);
                    u128 b = units(sw.b);
                    u128 len = units(sw.length);
                    out.segments.push_back({a, a + len, b});
                    out.segments.push_back({b, b + len, a});
                }
                std::sort(out.segments.begin(), out.segments.end(),
                          [](const FixSegment& x, const FixSegment& y) {
                              return x.start < y.start;
                          });
            }
            involutions.push_back(std::move(out));
        }
    }

    Point apply(std::size_t j, const Point& x) const {
        const FixInvolution& inv = involutions[j];
        if (inv.is_reflection) {
            u128 t = inv.c + denom - x;
            if (t >= denom) t -= denom;
            return t;
        }
        auto it = std::upper_bound(inv.segments.begin(), inv.segments.end(), x,
                                   [](const Point& v, const FixSegment& seg) {
                                       return v < seg.start;
                                   });
        if (it == inv.segments.begin()) return x;
        --it;
        if (x < it->end) return x - it->start + it->target;
        return x;
    }
};

// ---- leafgraph ball exploration ----

constexpr std::uint16_t kEntryFixed = 0xffff;
constexpr std::uint16_t kEntryOutside = 0xfffe;

template <class Ops>
struct Exploration {
    // Per vertex in discovery order, one entry per involution: the image's
    // discovery index, kEntryFixed for a fixed point, or kEntryOutside for
    // an image beyond the radius. Equal keys mean equal labeled balls.
    std::string key;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<typename Ops::Point> points;
};

template <class Ops>
Exploration<Ops> explore(const Ops& ops, const typename Ops::Point& origin, int r,
                         u64 budget) {
    using Point = typename Ops::Point;
    Exploration<Ops> out;
    std::map<Point, int> index;
    std::vector<int> dist;
    std::set<std::pair<int, int>> edge_set;

    out.points.push_back(origin);
    index.emplace(origin, 0);
    dist.push_back(0);
    out.n = 1;
    if (static_cast<u64>(out.n) > budget) {
        throw BudgetError("leaf ball exceeds the vertex budget");
    }

    auto push_entry = [&out](std::uint16_t e) {
        out.key.push_back(static_cast<char>(e >> 8));
        out.key.push_back(static_cast<char>(e & 0xff));
    };

    for (int u = 0; u < out.n; ++u) {
        for (std::size_t j = 0; j < ops.involutions.size(); ++j) {
            Point y = ops.apply(j, out.points[u]);
            if (y == out.points[u]) {
                push_entry(kEntryFixed);
                continue;
            }
            auto it = index.find(y);
            int v;
            if (it != index.end()) {
                v = it->second;
            } else if (dist[u] < r) {
                v = out.n++;
                if (static_cast<u64>(out.n) > budget) {
                    throw BudgetError("leaf ball exceeds the vertex budget");
                }
                out.points.push_back(y);
                index.emplace(out.points.back(), v);
                dist.push_back(dist[u] + 1);
            } else {
                // Beyond the radius from here; if it is in the ball after
                // all, the involution applied at the other end adds the
                // edge, so the induced ball stays complete.
                push_entry(kEntryOutside);
                continue;
            }
            push_entry(static_cast<std::uint16_t>(v));
            edge_set.emplace(std::min(u, v), std::max(u, v));
        }
    }
    out.edges.assign(edge_set.begin(), edge_set.end());
    return out;
}

template <class Ops>
FiniteGraph exploration_graph(const Exploration<Ops>& ex) {
    FiniteGraph g(ex.n);
    for (const auto& [u, v] : ex.edges) g.add_edge(u, v);
    return g;
}

Code canonical_of_exploration(const FiniteGraph& g, int r) {
    RootedBall ball{g, 0, r};
    return canonical_code(ball, Config{std::max(1, g.max_degree())});
}

// ---- estimator workers ----

struct ProfileTally {
    std::map<Code, u64> counts;
};

// Rational-path sample point: num / 2^64.
Rational sample_point(u64 num) {
    mpz_class den(1);
    den <<= 64;
    Rational q(mpz_from_u64(num), den);
    q.canonicalize();
    return q;
}

template <class Ops>
typename Ops::Point make_point(const Ops& ops, u64 num) {
    if constexpr (std::is_same_v<Ops, FixOps>) {
        return static_cast<u128>(num) * ops.numerator_scale;
    } else {
        return sample_point(num);
    }
}

template <class Ops>
void profile_worker(const Ops& ops, int r, u64 budget, u64 seed, u64 lo, u64 hi,
                    ProfileTally& tally) {
    std::unordered_map<std::string, Code> cache;
    for (u64 i = lo; i < hi; ++i) {
        auto ex = explore(ops, make_point(ops, mix64(seed, i)), r, budget);
        auto it = cache.find(ex.key);
        if (it == cache.end()) {
            Code code = canonical_of_exploration(exploration_graph(ex), r);
            it = cache.emplace(std::move(ex.key), std::move(code)).first;
        }
        ++tally.counts[it->second];
    }
}

void merge_counts(std::map<Code, u64>& into, const std::map<Code, u64>& from) {
    for (const auto& [code, c] : from) into[code] += c;
}

std::vector<std::pair<u64, u64>> chunk_ranges(u64 n, int jobs) {
    int j = std::max(1, jobs);
    std::vector<std::pair<u64, u64>> out;
    u64 base = n / j;
    u64 extra = n % j;
    u64 at = 0;
    for (int w = 0; w < j; ++w) {
        u64 len = base + (static_cast<u64>(w) < extra ? 1 : 0);
        if (len == 0) continue;
        out.emplace_back(at, at + len);
        at += len;
    }
    return out;
}

// ---- edge-profile workers ----

struct EdgeTally {
    std::map<Code, u64> forward;
    std::map<Code, u64> backward;
};

template <class Ops>
void edge_worker(const Ops& ops, int r, u64 budget_r, u64 budget_r1, u64 seed, u64 lo,
                 u64 hi, EdgeTally& tally) {
    // forward cache: ball structure from x -> codes aligned with the root's
    // neighbor list; backward cache: ball structure from y plus the index
    // of x inside it -> one code.
    std::unordered_map<std::string, std::vector<Code>> fwd_cache;
    std::unordered_map<std::string, Code> bwd_cache;
    for (u64 i = lo; i < hi; ++i) {
        auto x = make_point(ops, mix64(seed, i));
        auto ex = explore(ops, x, r, budget_r);
        auto fit = fwd_cache.find(ex.key);
        if (fit == fwd_cache.end()) {
            FiniteGraph ball = exploration_graph(ex);
            std::vector<Code> codes;
            for (int y : ball.neighbors(0)) {
                BirootedBall fwd = extract_birooted_ball(ball, 0, y, r - 1);
                codes.push_back(
                    canonical_code(fwd, Config{std::max(1, fwd.graph.max_degree())}));
            }
            fit = fwd_cache.emplace(ex.key, std::move(codes)).first;
        }
        for (const Code& c : fit->second) ++tally.forward[c];

        // Fresh exploration from each neighbor for the backward side. The
        // neighbors of the root are exactly the non-fixed involution images
        // of x, readable off the root's key entries.
        std::set<int> root_neighbors;
        std::size_t k = ops.involutions.size();
        for (std::size_t j = 0; j < k; ++j) {
            std::uint16_t entry =
                (static_cast<std::uint16_t>(static_cast<unsigned char>(ex.key[2 * j])) << 8) |
                static_cast<unsigned char>(ex.key[2 * j + 1]);
            if (entry != kEntryFixed && entry != kEntryOutside) {
                root_neighbors.insert(static_cast<int>(entry));
            }
        }
        for (int yidx : root_neighbors) {
            const auto& y = ex.points[yidx];
            auto ey = explore(ops, y, r - 1, budget_r1);
            int x_in_y = -1;
            for (int t = 0; t < ey.n; ++t) {
                if (ey.points[t] == x) {
                    x_in_y = t;
                    break;
                }
            }
            if (x_in_y < 0) throw DomainError("internal: sample lost from its neighbor ball");
            std::string key = ey.key;
            key.push_back(static_cast<char>(x_in_y >> 8));
            key.push_back(static_cast<char>(x_in_y & 0xff));
            auto bit = bwd_cache.find(key);
            if (bit == bwd_cache.end()) {
                FiniteGraph yball = exploration_graph(ey);
                BirootedBall bwd = extract_birooted_ball(yball, 0, x_in_y, r - 1);
                Code code =
                    canonical_code(bwd, Config{std::max(1, bwd.graph.max_degree())});
                bit = bwd_cache.emplace(std::move(key), std::move(code)).first;
            }
            ++tally.backward[bit->second];
        }
    }
}

template <class Tally, class Fn>
void run_workers(u64 n, int jobs, std::vector<Tally>& tallies, Fn&& fn) {
    auto ranges = chunk_ranges(n, jobs);
    tallies.resize(ranges.size());
    if (ranges.size() <= 1) {
        if (!ranges.empty()) fn(ranges[0].first, ranges[0].second, tallies[0]);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t w = 0; w < ranges.size(); ++w) {
        threads.emplace_back([&, w] { fn(ranges[w].first, ranges[w].second, tallies[w]); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace

ValidationResult validate_graphing(const GraphingSpec& s, const Config& cfg) {
    if (s.involutions.empty()) {
        return {false, "graphing needs at least one involution"};
    }
    if (static_cast<int>(s.involutions.size()) > cfg.delta) {
        return {false, "degree bound exceeded: " + std::to_string(s.involutions.size()) +
                           " involutions > delta " + std::to_string(cfg.delta)};
    }
    for (std::size_t j = 0; j < s.involutions.size(); ++j) {
        const auto* swaps = std::get_if<SwapList>(&s.involutions[j]);
        if (!swaps) continue;
        std::vector<std::pair<Rational, Rational>> intervals;
        for (const auto& sw : swaps->swaps) {
            if (sw.length <= 0) {
                return {false, "involution " + std::to_string(j) +
                                   ": swap length must be positive"};
            }
            if (sw.a < 0 || sw.a + sw.length > 1 || sw.b < 0 || sw.b + sw.length > 1) {
                return {false, "involution " + std::to_string(j) +
                                   ": swap interval outside [0,1)"};
            }
            intervals.emplace_back(sw.a, sw.a + sw.length);
            intervals.emplace_back(sw.b, sw.b + sw.length);
        }
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
            if (intervals[i + 1].first < intervals[i].second) {
                return {false,
                        "involution " + std::to_string(j) + ": swap intervals overlap"};
            }
        }
    }
    return {true, ""};
}

Rational apply_involution(const InvolutionSpec& inv, const Rational& x) {
    if (const auto* refl = std::get_if<Reflection>(&inv)) {
        return mod_one(refl->c - x);
    }
    for (const auto& sw : std::get<SwapList>(inv).swaps) {
        if (sw.a <= x && x < sw.a + sw.length) return x - sw.a + sw.b;
        if (sw.b <= x && x < sw.b + sw.length) return x - sw.b + sw.a;
    }
    return x;
}

LeafBall leaf_ball_points(const GraphingSpec& s, const Rational& x, int r,
                          const Config& cfg) {
    if (r < 0) throw DomainError("leaf ball radius must be nonnegative");
    RatOps ops(s);
    u64 budget = saturating_pow(static_cast<u64>(std::max(1, cfg.delta)), r);
    auto ex = explore(ops, mod_one(x), r, budget);
    LeafBall out;
    out.ball = RootedBall{exploration_graph(ex), 0, r};
    out.points = std::move(ex.points);
    return out;
}

RootedBall leaf_ball(const GraphingSpec& s, const Rational& x, int r, const Config& cfg) {
    return leaf_ball_points(s, x, r, cfg).ball;
}

Rational Estimate::mass(const Code& c) const {
    auto it = counts.find(c);
    u64 count = it == counts.end() ? 0 : it->second;
    return rational_u64_ratio(count, sample_count);
}

double Estimate::stderr_of(const Code& c) const {
    auto it = counts.find(c);
    double p = (it == counts.end() ? 0.0 : static_cast<double>(it->second)) /
               static_cast<double>(sample_count);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(sample_count));
}

RadiusProfile Estimate::to_profile() const {
    RadiusProfile p;
    p.radius = radius;
    for (const auto& [code, count] : counts) {
        p.masses[code] = rational_u64_ratio(count, sample_count);
    }
    return p;
}

Estimate estimate_profile(const GraphingSpec& s, int r, u64 n, u64 seed, int jobs,
                          const Config& cfg) {
    if (r < 0) throw DomainError("estimate radius must be nonnegative");
    if (n == 0) throw DomainError("estimate needs at least one sample");
    Estimate est;
    est.radius = r;
    est.sample_count = n;
    est.seed = seed;
    u64 budget = saturating_pow(static_cast<u64>(std::max(1, cfg.delta)), r);

    FixOps fix(s);
    std::vector<ProfileTally> tallies;
    if (fix.usable) {
        run_workers(n, jobs, tallies, [&](u64 lo, u64 hi, ProfileTally& t) {
            profile_worker(fix, r, budget, seed, lo, hi, t);
        });
    } else {
        RatOps rat(s);
        run_workers(n, jobs, tallies, [&](u64 lo, u64 hi, ProfileTally& t) {
            profile_worker(rat, r, budget, seed, lo, hi, t);
        });
    }
    for (const auto& t : tallies) merge_counts(est.counts, t.counts);
    return est;
}

EdgeProfiles estimate_edge_profiles(const GraphingSpec& s, int r, u64 n, u64 seed,
                                    int jobs, const Config& cfg) {
    if (r < 2) {
        throw DomainError("edge profiles need radius >= 2 so the flipped radius stays >= 1");
    }
    if (n == 0) throw DomainError("estimate needs at least one sample");
    u64 budget_r = saturating_pow(static_cast<u64>(std::max(1, cfg.delta)), r);
    u64 budget_r1 = saturating_pow(static_cast<u64>(std::max(1, cfg.delta)), r - 1);

    FixOps fix(s);
    std::vector<EdgeTally> tallies;
    if (fix.usable) {
        run_workers(n, jobs, tallies, [&](u64 lo, u64 hi, EdgeTally& t) {
            edge_worker(fix, r, budget_r, budget_r1, seed, lo, hi, t);
        });
    } else {
        RatOps rat(s);
        run_workers(n, jobs, tallies, [&](u64 lo, u64 hi, EdgeTally& t) {
            edge_worker(rat, r, budget_r, budget_r1, seed, lo, hi, t);
        });
    }
    std::map<Code, u64> fwd;
    std::map<Code, u64> bwd;
    for (const auto& t : tallies) {
        merge_counts(fwd, t.forward);
        merge_counts(bwd, t.backward);
    }
    EdgeProfiles out;
    out.forward.radius = r - 1;
    out.forward.estimated = true;
    out.backward.radius = r - 1;
    out.backward.estimated = true;
    for (const auto& [code, c] : fwd) out.forward.masses[code] = rational_u64_ratio(c, n);
    for (const auto& [code, c] : bwd) out.backward.masses[code] = rational_u64_ratio(c, n);
    return out;
}

GraphingSpec graph_as_graphing(const FiniteGraph& g) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("cannot turn an empty graph into a graphing");
    Rational width = Rational(1) / n;
    // Greedy proper edge coloring: each color class becomes one involution.
    std::vector<std::vector<int>> used(static_cast<std::size_t>(n));
    std::vector<SwapList> classes;
    for (const auto& [u, v] : g.edges()) {
        int color = 0;
        auto taken = [&](int c) {
            const auto& cu = used[u];
            const auto& cv = used[v];
            return std::find(cu.begin(), cu.end(), c) != cu.end() ||
                   std::find(cv.begin(), cv.end(), c) != cv.end();
        };
        while (taken(color)) ++color;
        used[u].push_back(color);
        used[v].push_back(color);
        if (color >= static_cast<int>(classes.size())) classes.resize(color + 1);
        classes[color].swaps.push_back({Rational(u) * width, Rational(v) * width, width});
    }
    GraphingSpec spec;
    spec.label = "graph-derived";
    if (classes.empty()) {
        spec.involutions.emplace_back(SwapList{});  // edgeless graph: identity
    } else {
        for (auto& c : classes) spec.involutions.emplace_back(std::move(c));
    }
    return spec;
}

int involution_count(const GraphingSpec& s) {
    return static_cast<int>(s.involutions.size());
}

}  // namespace graphlaw
