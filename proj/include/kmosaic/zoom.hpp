// The 5x zoom map: each tile is replaced by a fixed 5x5 block whose boundary
// connection points reproduce the tile's profile at the block mid-edges.
#pragma once

#include "kmosaic/mosaic.hpp"

#include <array>
#include <string_view>

namespace kmosaic {

// Blocks parsed from a data text holding eleven 5x5 mosaics in tile order.
std::array<Mosaic, tile_count> parse_zoom_blocks(std::string_view text);

// The shipped block table.
const std::array<Mosaic, tile_count>& zoom_blocks();
const Mosaic& zoom_block(Tile t);

Mosaic zoom5(const Mosaic& m);
KnotMosaic zoom5(const KnotMosaic& m);

}  // namespace kmosaic
