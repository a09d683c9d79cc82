// Unit tiles of a mosaic: connection points, strand pairings, crossing data,
// and the action of the square's symmetries on tiles and edges.
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>

namespace kmosaic {

// Mosaic coordinates put row 0 at the top and column 0 at the left; north
// points toward row 0.
enum class Edge : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Edge, 4> all_edges{Edge::N, Edge::E, Edge::S, Edge::W};

constexpr int edge_index(Edge e) { return static_cast<int>(e); }
constexpr Edge opposite(Edge e) { return static_cast<Edge>((edge_index(e) + 2) % 4); }
constexpr std::uint8_t edge_bit(Edge e) { return static_cast<std::uint8_t>(1u << edge_index(e)); }
const char* edge_name(Edge e);

// Row/column displacement toward a neighbor across an edge.
constexpr int edge_dr(Edge e) { return e == Edge::N ? -1 : e == Edge::S ? 1 : 0; }
constexpr int edge_dc(Edge e) { return e == Edge::W ? -1 : e == Edge::E ? 1 : 0; }

// Tile indices 0..10: 0 blank; 1..4 quarter arcs (1 joins S-W, 2 S-E, 3 N-E,
// 4 N-W); 5 horizontal line; 6 vertical line; 7 double arc joining N-E and
// S-W; 8 double arc joining N-W and S-E; 9 crossing with the horizontal
// strand on top; 10 crossing with the vertical strand on top.
using Tile = std::uint8_t;
inline constexpr int tile_count = 11;

// Mask of edges carrying a connection point (bit = edge_bit).
std::uint8_t connection_mask(Tile t);
bool has_point(Tile t, Edge e);
// The partner edge of the strand entering t at e. Requires has_point(t, e).
Edge strand_exit(Tile t, Edge e);
bool is_crossing(Tile t);
// Mask of the strand drawn on top of a crossing; 0 for non-crossings.
std::uint8_t over_mask(Tile t);

// A symmetry of the square: an optional left-right mirror applied first,
// then rot quarter turns clockwise.
struct D4 {
    std::uint8_t rot = 0;  // 0..3
    bool mir = false;
    bool operator==(const D4&) const = default;
};

inline constexpr std::array<D4, 8> d4_elements{
    D4{0, false}, D4{1, false}, D4{2, false}, D4{3, false},
    D4{0, true},  D4{1, true},  D4{2, true},  D4{3, true}};

Edge d4_apply(D4 g, Edge e);
D4 d4_compose(D4 g, D4 h);  // acts as g after h
D4 d4_inverse(D4 g);
std::string d4_name(D4 g);  // r0, r90, r180, r270, plus an 'm' suffix when mirrored

// The unique tile whose connection profile is the g-image of t's profile.
Tile transform_tile(Tile t, D4 g);

}  // namespace kmosaic
