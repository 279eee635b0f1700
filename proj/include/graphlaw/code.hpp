#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphlaw/ball.hpp"

namespace graphlaw {

// Canonical byte serialization of a rooted or birooted ball. Two balls have
// equal codes iff they are isomorphic as (bi)rooted graphs of the same
// radius. Layout (version 1):
//
//   byte 0      version
//   byte 1      flags (bit 0: birooted)
//   bytes 2-3   radius, big-endian
//   bytes 4-5   vertex count, big-endian
//   bytes 6..   lower-triangle adjacency bits, rows i = 1..n-1 over
//               columns j < i, packed MSB-first, zero padding at the end
//
// Vertex 0 is the root (vertex 1 the second root when birooted); vertices
// are ordered by the canonical labeling, which respects BFS layers.
class Code {
public:
    Code() = default;
    explicit Code(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    bool empty() const { return bytes_.empty(); }

    // Header peeks; throw ParseError on codes shorter than a header.
    bool is_birooted() const;
    int radius() const;
    int vertex_count() const;

    std::string hex() const;
    static Code from_hex(const std::string& text);

    auto operator<=>(const Code&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
};

// Deterministic, relabeling-invariant encoding: the minimal serialization
// over all vertex orders that put the root(s) first and list BFS layers in
// distance order (branch-and-bound search). Throws DomainError if the ball
// violates its invariants or its max degree exceeds cfg.delta.
Code canonical_code(const RootedBall& b, const Config& cfg = {});
Code canonical_code(const BirootedBall& b, const Config& cfg = {});

// Canonical representative of a code. canonical_code(decode(c)) == c for
// every canonically produced c. Throws ParseError on malformed bytes.
std::variant<RootedBall, BirootedBall> decode(const Code& c);
RootedBall decode_rooted(const Code& c);
BirootedBall decode_birooted(const Code& c);

// Re-centers a birooted class at its second root: decodes, extracts the
// radius r-1 ball around root2 with roots swapped, and re-encodes. The
// result depends only on the input class. Requires radius >= 2 so the
// output radius stays >= 1.
Code flip_birooted(const Code& c);

// Whole-component classes, encoded at stabilization radius (the component's
// vertex count). Used as measure atom keys. The graph must be connected.
Code component_code(const FiniteGraph& component, int root);
Code birooted_component_code(const FiniteGraph& component, int root1, int root2);

}  // namespace graphlaw
