// Enumeration of suitably connected boards: frozen counts, cross-checking
// three independent strategies, ordering, and sharded counting.
#include "doctest.h"

#include "kmosaic/enumerate.hpp"
#include "kmosaic/mosaic.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace kmosaic;

// ---- frozen counts ----

TEST_CASE("board counts match the frozen values") {
    CHECK(count_knot_mosaics(1) == 1);
    CHECK(count_knot_mosaics(2) == 2);
    CHECK(count_knot_mosaics(3) == 22);
    CHECK(count_knot_mosaics(4) == 2594);
}

TEST_CASE("the transfer-matrix count extends the frozen table") {
    for (int n = 1; n <= 4; ++n)
        CHECK(count_knot_mosaics_profile_dp(n) == count_knot_mosaics(n));
    CHECK(count_knot_mosaics_profile_dp(5) == 4183954);
}

// ---- cross checks ----

TEST_CASE("row-major enumeration visits each board exactly once, in order") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<Encoding> seen;
        enumerate_knot_mosaics(n, [&](const Mosaic& m) {
            CHECK(is_suitably_connected(m));
            seen.push_back(encode(m));
        });
        CHECK(seen.size() == count_knot_mosaics(n));
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("materialized boards agree with the visitor") {
    auto all = all_knot_mosaics(3);
    CHECK(all.size() == 22);
    std::size_t i = 0;
    enumerate_knot_mosaics(3, [&](const Mosaic& m) {
        REQUIRE(i < all.size());
        CHECK(all[i] == m);
        ++i;
    });
}

TEST_CASE("brute force over all fillings matches backtracking for tiny boards") {
    for (int n = 1; n <= 2; ++n) {
        auto brute = brute_force_knot_mosaics(n);
        auto fast = all_knot_mosaics(n);
        REQUIRE(brute.size() == fast.size());
        for (std::size_t k = 0; k < brute.size(); ++k) CHECK(brute[k] == fast[k]);
    }
}

TEST_CASE("column-major scanning produces the same set of boards") {
    for (int n = 2; n <= 4; ++n) {
        std::set<Encoding> rows, cols;
        enumerate_knot_mosaics(n, [&](const Mosaic& m) { rows.insert(encode(m)); });
        enumerate_knot_mosaics_by_columns(n, [&](const Mosaic& m) { cols.insert(encode(m)); });
        CHECK(rows == cols);
    }
}

// ---- sharded counting ----

TEST_CASE("parallel counts equal sequential counts") {
    for (int jobs : {2, 4, 8}) CHECK(count_knot_mosaics(4, jobs) == 2594);
}

// ---- small-board contents ----

TEST_CASE("the only 1-mosaic is blank and the 2-mosaics are blank plus unknot") {
    auto one = all_knot_mosaics(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Mosaic::blank(1));
    auto two = all_knot_mosaics(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Mosaic::blank(2));
    Mosaic unknot = Mosaic::blank(2);
    unknot.set(0, 0, 2); unknot.set(0, 1, 1);
    unknot.set(1, 0, 3); unknot.set(1, 1, 4);
    CHECK(two[1] == unknot);
}
