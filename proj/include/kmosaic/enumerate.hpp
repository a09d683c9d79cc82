// Enumeration and counting of suitably connected n-mosaics.
#pragma once

#include "kmosaic/mosaic.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kmosaic {

// Visits every suitably connected n-mosaic exactly once, in increasing order
// of the compact encoding (row-major backtracking over admissible tiles).
void enumerate_knot_mosaics(int n, const std::function<void(const Mosaic&)>& emit);
std::vector<Mosaic> all_knot_mosaics(int n);

// Counts without materializing. jobs > 1 shards the search on first-row
// assignments; results are identical to the sequential count.
std::uint64_t count_knot_mosaics(int n, int jobs = 1);

// Transfer-matrix count over row boundary profiles; fast for larger n.
std::uint64_t count_knot_mosaics_profile_dp(int n);

// Same set scanned column-major; emission order differs from the row-major
// enumerator. Cross-check oracle.
void enumerate_knot_mosaics_by_columns(int n, const std::function<void(const Mosaic&)>& emit);

// Filters all 11^(n*n) fillings; n <= 2 only (cross-check oracle).
std::vector<Mosaic> brute_force_knot_mosaics(int n);

}  // namespace kmosaic
