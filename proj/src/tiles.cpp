#include "kmosaic/tiles.hpp"

namespace kmosaic {

namespace {

struct TileDef {
    std::uint8_t mask;
    std::array<std::int8_t, 4> exit;  // indexed by edge, -1 where absent
    std::uint8_t over;
};

// Edge order N, E, S, W; masks N=1, E=2, S=4, W=8.
constexpr std::array<TileDef, tile_count> tile_defs{{
    {0b0000, {-1, -1, -1, -1}, 0},  // 0
    {0b1100, {-1, -1, 3, 2}, 0},    // 1: S-W
    {0b0110, {-1, 2, 1, -1}, 0},    // 2: S-E
    {0b0011, {1, 0, -1, -1}, 0},    // 3: N-E
    {0b1001, {3, -1, -1, 0}, 0},    // 4: N-W
    {0b1010, {-1, 3, -1, 1}, 0},    // 5: E-W
    {0b0101, {2, -1, 0, -1}, 0},    // 6: N-S
    {0b1111, {1, 0, 3, 2}, 0},      // 7: N-E and S-W
    {0b1111, {3, 2, 1, 0}, 0},      // 8: N-W and S-E
    {0b1111, {2, 3, 0, 1}, 0b1010}, // 9: crossing, E-W on top
    {0b1111, {2, 3, 0, 1}, 0b0101}, // 10: crossing, N-S on top
}};

constexpr Edge mirror_edge(Edge e) {
    return e == Edge::E ? Edge::W : e == Edge::W ? Edge::E : e;
}

constexpr Edge rotate_edge_cw(Edge e) {
    return static_cast<Edge>((edge_index(e) + 1) % 4);
}

std::uint8_t map_mask(std::uint8_t mask, D4 g) {
    std::uint8_t out = 0;
    for (Edge e : all_edges)
        if (mask & edge_bit(e)) out |= edge_bit(d4_apply(g, e));
    return out;
}

// transform_tile lookup, filled on first use: image of each tile under each
// symmetry, found by matching the transported connection profile.
struct TransformTable {
    std::array<std::array<Tile, 8>, tile_count> img{};
    TransformTable() {
        for (int gi = 0; gi < 8; ++gi) {
            D4 g = d4_elements[gi];
            for (Tile t = 0; t < tile_count; ++t) {
                const TileDef& d = tile_defs[t];
                std::uint8_t want_mask = map_mask(d.mask, g);
                std::uint8_t want_over = map_mask(d.over, g);
                std::array<std::int8_t, 4> want_exit{-1, -1, -1, -1};
                for (Edge e : all_edges)
                    if (d.exit[edge_index(e)] >= 0)
                        want_exit[edge_index(d4_apply(g, e))] = static_cast<std::int8_t>(
                            edge_index(d4_apply(g, static_cast<Edge>(d.exit[edge_index(e)]))));
                Tile found = tile_count;
                for (Tile u = 0; u < tile_count; ++u) {
                    const TileDef& du = tile_defs[u];
                    if (du.mask == want_mask && du.exit == want_exit && du.over == want_over) {
                        found = u;
                        break;
                    }
                }
                assert(found < tile_count);
                img[t][gi] = found;
            }
        }
    }
};

int d4_index(D4 g) { return g.rot + (g.mir ? 4 : 0); }

}  // namespace

const char* edge_name(Edge e) {
    switch (e) {
        case Edge::N: return "N";
        case Edge::E: return "E";
        case Edge::S: return "S";
        case Edge::W: return "W";
    }
    return "?";
}

std::uint8_t connection_mask(Tile t) {
    assert(t < tile_count);
    return tile_defs[t].mask;
}

bool has_point(Tile t, Edge e) {
    return (connection_mask(t) & edge_bit(e)) != 0;
}

Edge strand_exit(Tile t, Edge e) {
    assert(t < tile_count);
    std::int8_t x = tile_defs[t].exit[edge_index(e)];
    assert(x >= 0);
    return static_cast<Edge>(x);
}

bool is_crossing(Tile t) {
    assert(t < tile_count);
    return tile_defs[t].over != 0;
}

std::uint8_t over_mask(Tile t) {
    assert(t < tile_count);
    return tile_defs[t].over;
}

Edge d4_apply(D4 g, Edge e) {
    if (g.mir) e = mirror_edge(e);
    for (int i = 0; i < g.rot; ++i) e = rotate_edge_cw(e);
    return e;
}

D4 d4_compose(D4 g, D4 h) {
    // mirror conjugates a clockwise rotation into a counterclockwise one
    std::uint8_t rot = static_cast<std::uint8_t>((g.rot + (g.mir ? 4 - h.rot : h.rot)) % 4);
    return D4{rot, g.mir != h.mir};
}

D4 d4_inverse(D4 g) {
    if (g.mir) return g;  // reflections are involutions
    return D4{static_cast<std::uint8_t>((4 - g.rot) % 4), false};
}

std::string d4_name(D4 g) {
    static const char* base[4] = {"r0", "r90", "r180", "r270"};
    std::string s = base[g.rot];
    if (g.mir) s += 'm';
    return s;
}

Tile transform_tile(Tile t, D4 g) {
    static const TransformTable table;
    assert(t < tile_count);
    return table.img[t][d4_index(g)];
}

}  // namespace kmosaic
