// The 5x zoom map: block table integrity, boundary profile transport, the
// demo golden pair, and diagram preservation over every 3-mosaic.
#include "doctest.h"

#include "kmosaic/enumerate.hpp"
#include "kmosaic/invariants.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/zoom.hpp"

#include <string>

using namespace kmosaic;

namespace {
const std::string kPaperDir = KMOSAIC_PAPER_DIR;
}

// ---- block table ----

TEST_CASE("every tile has a 5x5 block with the tile's profile at mid-edges") {
    for (Tile t = 0; t < tile_count; ++t) {
        const Mosaic& b = zoom_block(t);
        REQUIRE(b.n == 5);
        CHECK(is_interior_consistent(b));
        // The block's outer connection points sit exactly at the mid-edge
        // cells, matching the source tile's profile.
        for (int i = 0; i < 5; ++i) {
            CHECK(has_point(b.at(0, i), Edge::N) == (i == 2 && has_point(t, Edge::N)));
            CHECK(has_point(b.at(4, i), Edge::S) == (i == 2 && has_point(t, Edge::S)));
            CHECK(has_point(b.at(i, 0), Edge::W) == (i == 2 && has_point(t, Edge::W)));
            CHECK(has_point(b.at(i, 4), Edge::E) == (i == 2 && has_point(t, Edge::E)));
        }
    }
}

TEST_CASE("blocks avoid double arcs and the horizontal-over crossing") {
    for (Tile t = 0; t < tile_count; ++t) {
        const Mosaic& b = zoom_block(t);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                Tile cell = b.at(r, c);
                CHECK(cell != 7);
                CHECK(cell != 8);
                CHECK(cell != 9);
            }
    }
}

TEST_CASE("block crossing counts match the source tiles") {
    for (Tile t = 0; t < tile_count; ++t) {
        int crossings = 0;
        const Mosaic& b = zoom_block(t);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                if (is_crossing(b.at(r, c))) ++crossings;
        CHECK(crossings == (is_crossing(t) ? 1 : 0));
    }
}

// ---- the map ----

TEST_CASE("zoom of a blank board is the blank board five times the side") {
    CHECK(zoom5(Mosaic::blank(2)) == Mosaic::blank(10));
}

TEST_CASE("zoom places each block at the scaled cell position") {
    Mosaic m = Mosaic::blank(2);
    m.set(0, 0, 2); m.set(0, 1, 1);
    m.set(1, 0, 3); m.set(1, 1, 4);
    Mosaic z = zoom5(m);
    REQUIRE(z.n == 10);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(submosaic(z, 5, 5 * r, 5 * c) == zoom_block(m.at(r, c)));
}

TEST_CASE("zoom keeps knot mosaics suitably connected") {
    Mosaic m = load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic");
    KnotMosaic km(m);
    KnotMosaic zk = zoom5(km);
    CHECK(zk.n() == 20);
}

// ---- the demo golden pair ----

TEST_CASE("zoom of the 4x4 demo mosaic reproduces the stored 20x20 output") {
    Mosaic in = load_mosaic_file(kPaperDir + "/zoom_demo_input.mosaic");
    Mosaic out = load_mosaic_file(kPaperDir + "/zoom_demo_output.mosaic");
    CHECK(zoom5(in) == out);
}

// ---- diagram preservation ----

TEST_CASE("zoom preserves the traced diagram over every 3-mosaic") {
    int checked = 0;
    enumerate_knot_mosaics(3, [&](const Mosaic& m) {
        KnotMosaic km(m);
        KnotMosaic zk = zoom5(km);
        // The zoomed board redraws the same curve: identical canonical PD
        // code and component count.
        LinkDiagram d0 = trace_diagram(km);
        LinkDiagram d1 = trace_diagram(zk);
        CHECK(d0.component_count == d1.component_count);
        CHECK(canonical_pd(d0) == canonical_pd(d1));
        ++checked;
    });
    CHECK(checked == 22);
}

TEST_CASE("zoom preserves the fingerprint of a crossing-bearing mosaic") {
    KnotMosaic tre(load_mosaic_file(kPaperDir + "/trefoil_4x4.mosaic"));
    CHECK(fingerprint(zoom5(tre)) == fingerprint(tre));
}
