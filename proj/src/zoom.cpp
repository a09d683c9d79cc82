#include "kmosaic/zoom.hpp"

#include "kmosaic/embedded_data.hpp"

#include <sstream>
#include <stdexcept>

namespace kmosaic {

std::array<Mosaic, tile_count> parse_zoom_blocks(std::string_view text) {
    // Eleven consecutive mosaic records; reuse the mosaic parser by splitting
    // on size lines.
    std::array<Mosaic, tile_count> blocks;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::string record;
    int seen = 0;
    auto flush = [&]() {
        if (record.empty()) return;
        if (seen >= tile_count) throw std::runtime_error("too many zoom blocks");
        blocks[seen] = parse_mosaic(record);
        if (blocks[seen].n != 5) throw std::runtime_error("zoom block is not 5x5");
        ++seen;
        record.clear();
    };
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        int first = 0;
        int count = 0;
        for (int v = 0; ls >> v; ++count)
            if (count == 0) first = v;
        if (count == 1 && first == 5) flush();  // a size line starts a new record
        if (count > 0) record += line + "\n";
    }
    flush();
    if (seen != tile_count) throw std::runtime_error("expected one zoom block per tile");
    for (Tile t = 0; t < tile_count; ++t) {
        // Block boundary profile must equal the tile profile, at mid-edges only.
        const Mosaic& b = blocks[t];
        auto edge_ok = [&](Edge e, int r, int c, int idx) {
            bool want = has_point(t, e) && idx == 2;
            if (has_point(b.at(r, c), e) != want)
                throw std::runtime_error("zoom block boundary mismatch for tile " +
                                         std::to_string(t));
        };
        for (int i = 0; i < 5; ++i) {
            edge_ok(Edge::N, 0, i, i);
            edge_ok(Edge::S, 4, i, i);
            edge_ok(Edge::W, i, 0, i);
            edge_ok(Edge::E, i, 4, i);
        }
        if (!is_interior_consistent(b))
            throw std::runtime_error("zoom block not internally consistent: tile " +
                                     std::to_string(t));
    }
    return blocks;
}

const std::array<Mosaic, tile_count>& zoom_blocks() {
    static const std::array<Mosaic, tile_count> blocks =
        parse_zoom_blocks(data::zoom_blocks_text());
    return blocks;
}

const Mosaic& zoom_block(Tile t) {
    assert(t < tile_count);
    return zoom_blocks()[t];
}

Mosaic zoom5(const Mosaic& m) {
    Mosaic out = Mosaic::blank(5 * m.n);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            write_submosaic(out, zoom_block(m.at(r, c)), 5 * r, 5 * c);
    return out;
}

KnotMosaic zoom5(const KnotMosaic& m) {
    // Block boundary profiles match tile profiles, so the blow-up of a
    // suitably connected mosaic stays suitably connected.
    return KnotMosaic(zoom5(m.mosaic()));
}

}  // namespace kmosaic
