// Equivalence classes of suitably connected n-mosaics under the move
// catalog: union-find over the enumerated state set, census reports, and
// mosaic-number bounds from fingerprint lookups against censuses.
#pragma once

#include "kmosaic/invariants.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/moves.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kmosaic {

struct EquivalenceClass {
    Mosaic canonical;  // encoding-minimal member
    std::uint64_t size = 0;
};

struct Census {
    int n = 0;
    std::vector<EquivalenceClass> classes;  // ascending by (size, canonical encoding)
};

Census compute_census(int n, const std::vector<MovePattern>& catalog, int jobs = 1);
Census compute_census(int n);  // generator_catalog()

// Built once per n against the built-in catalog and reused.
const Census& cached_census(int n);

// Text format: header "n <n> classes <c>", then one line per class:
// "<id> <size> canonical:<mosaic text with rows joined by ';'>".
std::string serialize_census(const Census& census);
Census parse_census(std::string_view text);

// Index of the class containing m, or -1 when m is not in the census
// (wrong n or, for a foreign census file, an unlisted mosaic).
int census_class_of(const Census& census, const Mosaic& m,
                    const std::vector<MovePattern>& catalog);

// Same-size equivalence decided by orbit computation.
bool same_type(const KnotMosaic& a, const KnotMosaic& b);

struct MosaicNumberBounds {
    int lower = 0;
    int upper = 0;
};

// Bounds for the link presented by the witness, from censuses at sides
// 1..max_n: a census class with the witness's fingerprint at side n yields
// lower = upper = n (the smallest such n); no match anywhere yields
// lower = max_n + 1 and upper = the witness's own side.
MosaicNumberBounds mosaic_number_bounds(const KnotMosaic& witness, int max_n);

}  // namespace kmosaic
