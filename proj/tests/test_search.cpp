// Certificate search: bidirectional BFS with padding, replay validation,
// the certificate text format, and capacity guarding.
#include "doctest.h"

#include "kmosaic/mosaic.hpp"
#include "kmosaic/moves.hpp"
#include "kmosaic/orbits.hpp"
#include "kmosaic/search.hpp"

#include <string>

using namespace kmosaic;

namespace {
const std::string kPaperDir = KMOSAIC_PAPER_DIR;
}

// ---- basic contracts ----

TEST_CASE("identical endpoints yield the empty certificate") {
    Mosaic m = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    auto cert = find_certificate(m, m, generator_catalog());
    REQUIRE(cert.has_value());
    CHECK(cert->steps.empty());
    CHECK(cert->pad_source == 0);
    CHECK(cert->pad_target == 0);
    CHECK(replay(*cert, m, m, generator_catalog()));
}

TEST_CASE("one move apart means a one-step certificate") {
    const auto& catalog = generator_catalog();
    Mosaic a = parse_mosaic("3\n2 1 0\n3 4 0\n0 0 0\n");
    auto apps = applicable_moves(a, catalog);
    REQUIRE(!apps.empty());
    Mosaic b = apply_move(a, catalog, apps[0]);
    auto cert = find_certificate(a, b, catalog);
    REQUIRE(cert.has_value());
    CHECK(cert->steps.size() == 1);
    CHECK(replay(*cert, a, b, catalog));
}

// ---- the worked pair of diagonal ring packings ----

TEST_CASE("the ring packings connect only after one padding step") {
    const auto& catalog = generator_catalog();
    Mosaic k1 = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    Mosaic k2 = load_mosaic_file(kPaperDir + "/k2_3x3.mosaic");

    SearchLimits same_size;
    same_size.max_pad = 0;
    same_size.max_depth = 10;
    CHECK(!find_certificate(k1, k2, catalog, same_size).has_value());

    SearchLimits padded;
    padded.max_pad = 1;
    padded.max_depth = 8;
    auto cert = find_certificate(k1, k2, catalog, padded);
    REQUIRE(cert.has_value());
    CHECK(cert->pad_source == 1);
    CHECK(cert->pad_target == 1);
    CHECK(cert->steps.size() == 6);
    CHECK(replay(*cert, k1, k2, catalog));
}

// ---- replay rejects corruption ----

TEST_CASE("replay fails on a tampered step or wrong endpoints") {
    const auto& catalog = generator_catalog();
    Mosaic k1 = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    Mosaic k2 = load_mosaic_file(kPaperDir + "/k2_3x3.mosaic");
    auto cert = find_certificate(k1, k2, catalog);
    REQUIRE(cert.has_value());
    REQUIRE(!cert->steps.empty());

    Certificate bad = *cert;
    bad.steps[0].row = (bad.steps[0].row + 1) % 2;
    bool ok = true;
    try {
        ok = replay(bad, k1, k2, catalog);
    } catch (const std::exception&) {
        ok = false;
    }
    CHECK(!ok);

    bool swapped = true;
    try {
        swapped = replay(*cert, k2, k1, catalog);
    } catch (const std::exception&) {
        swapped = false;
    }
    CHECK(!swapped);
}

// ---- text format ----

TEST_CASE("certificates round-trip through the text format") {
    const auto& catalog = generator_catalog();
    Mosaic k1 = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    Mosaic k2 = load_mosaic_file(kPaperDir + "/k2_3x3.mosaic");
    auto cert = find_certificate(k1, k2, catalog);
    REQUIRE(cert.has_value());
    std::string text = serialize_certificate(*cert, catalog);
    CHECK(text.rfind("1 1", 0) == 0);
    Certificate again = parse_certificate(text, catalog);
    CHECK(again == *cert);
}

// ---- padding feasibility ----

TEST_CASE("padding is blocked while points touch the south or east boundary") {
    Mosaic ok = parse_mosaic("2\n2 1\n3 4\n");
    CHECK(can_inject(ok));
    Mosaic low = Mosaic::blank(2);
    low.set(1, 0, 2); low.set(1, 1, 1);
    // The strand exits the south boundary, so a blank row cannot be added.
    CHECK(is_interior_consistent(low));
    CHECK(!can_inject(low));
}

// ---- capacity ----

TEST_CASE("the state cap aborts runaway searches explicitly") {
    const auto& catalog = generator_catalog();
    Mosaic k1 = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    Mosaic k2 = load_mosaic_file(kPaperDir + "/k2_3x3.mosaic");
    SearchLimits tiny;
    tiny.max_pad = 1;
    tiny.max_depth = 8;
    tiny.max_states = 8;
    CHECK_THROWS_AS(find_certificate(k1, k2, catalog, tiny), capacity_error);
}

// ---- certificates stay inside the same equivalence class ----

TEST_CASE("a found certificate implies same padded class") {
    Mosaic k1 = load_mosaic_file(kPaperDir + "/k1_3x3.mosaic");
    Mosaic k2 = load_mosaic_file(kPaperDir + "/k2_3x3.mosaic");
    KnotMosaic pk1{inject(k1)};
    KnotMosaic pk2{inject(k2)};
    CHECK(same_type(pk1, pk2));
}
